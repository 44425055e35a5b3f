#include "tricert/isomorphism.hpp"

#include <sstream>

#include "tricert/tri_io.hpp"

namespace tricert {

namespace {

// Relabeling = a bijection of tet indices plus a vertex permutation per tet.
struct Relabel {
    std::vector<int> newIndex;  // old tet -> new tet (-1 undiscovered)
    std::vector<int> oldIndex;  // new tet -> old tet
    std::vector<Perm4> perm;    // old tet -> (old labels -> new labels)
};

// BFS relabeling from a rooted start; the first time a tet is discovered its
// labeling is chosen so the discovering gluing encodes as the identity.
std::vector<int> encode_from(const Triangulation& tri, int startTet, const Perm4& startPerm, Relabel* outRelab) {
    const int T = tri.tet_count();
    Relabel rl;
    rl.newIndex.assign(static_cast<std::size_t>(T), -1);
    rl.perm.assign(static_cast<std::size_t>(T), Perm4::identity());
    rl.oldIndex.clear();
    rl.newIndex[static_cast<std::size_t>(startTet)] = 0;
    rl.perm[static_cast<std::size_t>(startTet)] = startPerm;
    rl.oldIndex.push_back(startTet);

    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(T) * 4 * 6);
    int i = 0;
    while (i < static_cast<int>(rl.oldIndex.size())) {
        const int t = rl.oldIndex[static_cast<std::size_t>(i)];
        const Perm4 pt = rl.perm[static_cast<std::size_t>(t)];
        const Perm4 ptInv = pt.inverse();
        for (int f = 0; f < 4; ++f) {
            const int oldF = ptInv(f);
            const auto& g = tri.gluing(t, oldF);
            if (!g) {
                code.push_back(-1);
                continue;
            }
            if (rl.newIndex[static_cast<std::size_t>(g->tet)] < 0) {
                rl.newIndex[static_cast<std::size_t>(g->tet)] = static_cast<int>(rl.oldIndex.size());
                rl.perm[static_cast<std::size_t>(g->tet)] = pt * g->perm.inverse();
                rl.oldIndex.push_back(g->tet);
            }
            const Perm4 tau = rl.perm[static_cast<std::size_t>(g->tet)] * g->perm * ptInv;
            code.push_back(rl.newIndex[static_cast<std::size_t>(g->tet)]);
            code.push_back(tau(f));
            for (int v = 0; v < 4; ++v) code.push_back(tau(v));
        }
        ++i;
    }
    if (outRelab) *outRelab = rl;
    return code;
}

Triangulation apply_relabel(const Triangulation& tri, const Relabel& rl) {
    const int T = tri.tet_count();
    GluingTable table(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        const int nt = rl.newIndex[static_cast<std::size_t>(t)];
        const Perm4 pt = rl.perm[static_cast<std::size_t>(t)];
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            const Perm4 tau = rl.perm[static_cast<std::size_t>(g->tet)] * g->perm * pt.inverse();
            table[static_cast<std::size_t>(nt)][static_cast<std::size_t>(pt(f))] =
                Gluing{rl.newIndex[static_cast<std::size_t>(g->tet)], tau(pt(f)), tau};
        }
    }
    return Triangulation::build(std::move(table));
}

} // namespace

std::string canonical_encoding(const Triangulation& tri) {
    if (tri.tet_count() == 0) return "tri 1\nn 0\n";

    // Canonicalize every connected component on its own, then order the
    // components by (size, code) and concatenate their relabeled tables.
    struct CompResult {
        std::vector<int> code;
        Triangulation tri;
    };
    std::vector<CompResult> comps;
    for (const std::vector<int>& tets : tri.connected_components()) {
        const Triangulation sub = tri.subcomplex_generated(tets).tri;
        std::vector<int> best;
        Relabel bestRl;
        bool have = false;
        for (int t = 0; t < sub.tet_count(); ++t) {
            for (const Perm4& p : Perm4::all()) {
                Relabel rl;
                std::vector<int> code = encode_from(sub, t, p, &rl);
                if (!have || code < best) {
                    best = std::move(code);
                    bestRl = std::move(rl);
                    have = true;
                }
            }
        }
        comps.push_back({std::move(best), apply_relabel(sub, bestRl)});
    }
    std::sort(comps.begin(), comps.end(), [](const CompResult& a, const CompResult& b) {
        if (a.tri.tet_count() != b.tri.tet_count()) return a.tri.tet_count() < b.tri.tet_count();
        return a.code < b.code;
    });

    GluingTable table;
    for (const CompResult& c : comps) {
        const int offset = static_cast<int>(table.size());
        for (int t = 0; t < c.tri.tet_count(); ++t) {
            table.emplace_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = c.tri.gluing(t, f);
                if (g) table.back()[static_cast<std::size_t>(f)] = Gluing{g->tet + offset, g->face, g->perm};
            }
        }
    }
    return write_tri(Triangulation::build(std::move(table)));
}

Triangulation canonical_form(const Triangulation& tri) { return read_tri(canonical_encoding(tri)); }

bool isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.tet_count() != b.tet_count()) return false;
    return canonical_encoding(a) == canonical_encoding(b);
}

} // namespace tricert
