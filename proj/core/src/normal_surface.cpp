#include "tricert/normal_surface.hpp"

#include <algorithm>
#include <numeric>

namespace tricert {

namespace {

struct ParityUF {
    std::vector<int> parent;
    std::vector<std::uint8_t> rel;       // parity relative to parent
    std::vector<std::uint8_t> contra;    // root flag: a contradiction was seen

    explicit ParityUF(std::size_t n) : parent(n), rel(n, 0), contra(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<int, int> find(int x) {
        if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
        auto [r, p] = find(parent[static_cast<std::size_t>(x)]);
        parent[static_cast<std::size_t>(x)] = r;
        rel[static_cast<std::size_t>(x)] ^= static_cast<std::uint8_t>(p);
        return {r, rel[static_cast<std::size_t>(x)]};
    }
    void unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) contra[static_cast<std::size_t>(ra)] = 1;
            return;
        }
        parent[static_cast<std::size_t>(rb)] = ra;
        rel[static_cast<std::size_t>(rb)] = static_cast<std::uint8_t>(pa ^ pb ^ parity);
        contra[static_cast<std::size_t>(ra)] =
            static_cast<std::uint8_t>(contra[static_cast<std::size_t>(ra)] | contra[static_cast<std::size_t>(rb)]);
    }
};

struct PlainUF {
    std::vector<int> parent;
    explicit PlainUF(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

bool on_quad_edge_side(int k, int v) {
    return kEdgeVerts[static_cast<std::size_t>(k)][0] == v || kEdgeVerts[static_cast<std::size_t>(k)][1] == v;
}

// Bookkeeping of disk ids for one surface.
struct DiskIndex {
    std::vector<std::array<long long, 4>> triBase;
    std::vector<std::array<long long, 3>> quadBase;
    long long total = 0;

    DiskIndex(const NormalSurface& s) {
        triBase.resize(s.tri.size());
        quadBase.resize(s.quad.size());
        for (std::size_t t = 0; t < s.tri.size(); ++t) {
            for (int v = 0; v < 4; ++v) {
                triBase[t][static_cast<std::size_t>(v)] = total;
                total += s.tri[t][static_cast<std::size_t>(v)];
            }
            for (int k = 0; k < 3; ++k) {
                quadBase[t][static_cast<std::size_t>(k)] = total;
                total += s.quad[t][static_cast<std::size_t>(k)];
            }
        }
    }
};

// The disks crossing edge {a,b} of tet t, ordered by distance from a.
std::vector<long long> disks_along_corner(const NormalSurface& s, const DiskIndex& ix, int t, int a, int b) {
    std::vector<long long> out;
    const std::size_t ut = static_cast<std::size_t>(t);
    for (long long j = 0; j < s.tri[ut][static_cast<std::size_t>(a)]; ++j)
        out.push_back(ix.triBase[ut][static_cast<std::size_t>(a)] + j);
    const int qs = quad_separating(a, b);
    for (int k = 0; k < 3; ++k) {
        if (k == qs) continue;
        const long long q = s.quad[ut][static_cast<std::size_t>(k)];
        if (on_quad_edge_side(k, a))
            for (long long j = 0; j < q; ++j) out.push_back(ix.quadBase[ut][static_cast<std::size_t>(k)] + j);
        else
            for (long long j = q - 1; j >= 0; --j) out.push_back(ix.quadBase[ut][static_cast<std::size_t>(k)] + j);
    }
    for (long long j = s.tri[ut][static_cast<std::size_t>(b)] - 1; j >= 0; --j)
        out.push_back(ix.triBase[ut][static_cast<std::size_t>(b)] + j);
    return out;
}

// Disks whose arc in face f cuts corner v, ordered by distance from v.
// biasOut (parallel) is 0 when the disk's reference side faces v, 1 otherwise.
std::vector<long long> arcs_at_corner(const NormalSurface& s, const DiskIndex& ix, int t, int f, int v,
                                      std::vector<std::uint8_t>* biasOut = nullptr) {
    std::vector<long long> out;
    if (biasOut) biasOut->clear();
    const std::size_t ut = static_cast<std::size_t>(t);
    for (long long j = 0; j < s.tri[ut][static_cast<std::size_t>(v)]; ++j) {
        out.push_back(ix.triBase[ut][static_cast<std::size_t>(v)] + j);
        if (biasOut) biasOut->push_back(0);    // triangle reference side: toward its vertex
    }
    const int k = quad_separating(v, f);
    const bool vOnK = on_quad_edge_side(k, v);
    const long long q = s.quad[ut][static_cast<std::size_t>(k)];
    if (vOnK)
        for (long long j = 0; j < q; ++j) out.push_back(ix.quadBase[ut][static_cast<std::size_t>(k)] + j);
    else
        for (long long j = q - 1; j >= 0; --j) out.push_back(ix.quadBase[ut][static_cast<std::size_t>(k)] + j);
    if (biasOut)
        for (long long j = 0; j < q; ++j) biasOut->push_back(vOnK ? 0 : 1);   // quad reference side: toward edge k
    return out;
}

void require_shape(const Triangulation& tri, const NormalSurface& s) {
    if (static_cast<int>(s.tri.size()) != tri.tet_count() || static_cast<int>(s.quad.size()) != tri.tet_count())
        throw IndexOutOfRange("surface coordinate count does not match tetrahedron count");
}

} // namespace

long long NormalSurface::triangle_total() const {
    long long n = 0;
    for (const auto& a : tri)
        for (long long x : a) n += x;
    return n;
}

long long NormalSurface::quad_total() const {
    long long n = 0;
    for (const auto& a : quad)
        for (long long x : a) n += x;
    return n;
}

NormalSurface empty_surface(const Triangulation& tri) {
    NormalSurface s;
    s.tri.assign(static_cast<std::size_t>(tri.tet_count()), {0, 0, 0, 0});
    s.quad.assign(static_cast<std::size_t>(tri.tet_count()), {0, 0, 0});
    return s;
}

NormalSurface vertex_link(const Triangulation& tri) {
    NormalSurface s = empty_surface(tri);
    for (auto& a : s.tri) a = {1, 1, 1, 1};
    return s;
}

NormalSurface canonical_surface(const Triangulation& tri, const ColoringR1& c) {
    NormalSurface s = empty_surface(tri);
    for (int t = 0; t < tri.tet_count(); ++t) {
        switch (c.tetType[static_cast<std::size_t>(t)]) {
            case TetTypeR1::E:
                break;
            case TetTypeR1::T:
                s.tri[static_cast<std::size_t>(t)][static_cast<std::size_t>(c.triangleVertex[static_cast<std::size_t>(t)])] = 1;
                break;
            case TetTypeR1::Q:
                s.quad[static_cast<std::size_t>(t)][static_cast<std::size_t>(c.quadType[static_cast<std::size_t>(t)])] = 1;
                break;
        }
    }
    return s;
}

void check_matching(const Triangulation& tri, const NormalSurface& s) {
    require_shape(tri, s);
    if (!tri.closed()) throw NotClosed("normal surfaces live in closed triangulations here");
    for (int t = 0; t < tri.tet_count(); ++t) {
        int quadTypes = 0;
        for (int v = 0; v < 4; ++v)
            if (s.tri[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] < 0)
                throw MatchingViolation("negative triangle coordinate");
        for (int k = 0; k < 3; ++k) {
            const long long q = s.quad[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
            if (q < 0) throw MatchingViolation("negative quad coordinate");
            if (q > 0) ++quadTypes;
        }
        if (quadTypes > 1) throw MatchingViolation("two quad types in one tetrahedron");
    }
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = *tri.gluing(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                const long long here = s.tri[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] +
                                       s.quad[static_cast<std::size_t>(t)][static_cast<std::size_t>(quad_separating(v, f))];
                const long long there = s.tri[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(g.perm(v))] +
                                        s.quad[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(quad_separating(g.perm(v), g.face))];
                if (here != there) throw MatchingViolation("arc counts differ across a face");
            }
        }
    }
}

std::vector<long long> edge_weights(const Triangulation& tri, const NormalSurface& s) {
    require_shape(tri, s);
    std::vector<long long> w;
    for (int e = 0; e < tri.edge_count(); ++e) {
        long long val = -1;
        for (const EdgeCorner& c : tri.edge_corners(e)) {
            long long here = s.tri[static_cast<std::size_t>(c.tet)][static_cast<std::size_t>(c.a)] +
                             s.tri[static_cast<std::size_t>(c.tet)][static_cast<std::size_t>(c.b)];
            const int qs = quad_separating(c.a, c.b);
            for (int k = 0; k < 3; ++k)
                if (k != qs) here += s.quad[static_cast<std::size_t>(c.tet)][static_cast<std::size_t>(k)];
            if (val == -1) val = here;
            if (val != here) throw MatchingViolation("corners of one edge class disagree on weight");
        }
        w.push_back(val);
    }
    return w;
}

long long euler_char(const Triangulation& tri, const NormalSurface& s) {
    check_matching(tri, s);
    const std::vector<long long> w = edge_weights(tri, s);
    const long long nt = s.triangle_total(), nq = s.quad_total();
    if ((3 * nt + 4 * nq) % 2 != 0) throw MatchingViolation("odd arc total");
    long long chi = -(3 * nt + 4 * nq) / 2 + nt + nq;
    for (long long x : w) chi += x;
    return chi;
}

std::vector<SurfaceComponent> components(const Triangulation& tri, const NormalSurface& s) {
    check_matching(tri, s);
    const std::vector<long long> w = edge_weights(tri, s);
    const DiskIndex ix(s);

    // node layout: disks, then one point node per edge intersection
    std::vector<long long> pointBase(static_cast<std::size_t>(tri.edge_count()));
    long long nodes = ix.total;
    for (int e = 0; e < tri.edge_count(); ++e) {
        pointBase[static_cast<std::size_t>(e)] = nodes;
        nodes += w[static_cast<std::size_t>(e)];
    }
    PlainUF conn(static_cast<std::size_t>(nodes));
    ParityUF orient(static_cast<std::size_t>(ix.total));

    // glue arcs across every face pairing, once per pairing
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = *tri.gluing(t, f);
            if (std::pair{g.tet, g.face} < std::pair{t, f}) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                std::vector<std::uint8_t> bias1, bias2;
                const auto a1 = arcs_at_corner(s, ix, t, f, v, &bias1);
                const auto a2 = arcs_at_corner(s, ix, g.tet, g.face, g.perm(v), &bias2);
                if (a1.size() != a2.size()) throw MatchingViolation("arc counts differ across a face");
                for (std::size_t i = 0; i < a1.size(); ++i) {
                    conn.unite(static_cast<int>(a1[i]), static_cast<int>(a2[i]));
                    orient.unite(static_cast<int>(a1[i]), static_cast<int>(a2[i]), bias1[i] ^ bias2[i]);
                }
            }
        }
    }

    // attach edge intersection points to the disks through them
    for (int e = 0; e < tri.edge_count(); ++e) {
        for (const EdgeCorner& c : tri.edge_corners(e)) {
            const auto seq = disks_along_corner(s, ix, c.tet, c.a, c.b);
            const bool fwd = tri.edge_corner_orientation(c.tet, c.a, c.b);
            for (std::size_t p = 0; p < seq.size(); ++p) {
                const long long j = fwd ? static_cast<long long>(p) : static_cast<long long>(seq.size() - 1 - p);
                conn.unite(static_cast<int>(seq[p]), static_cast<int>(pointBase[static_cast<std::size_t>(e)] + j));
            }
        }
    }

    // per-component tallies, keyed by least disk id
    std::vector<long long> roots;
    auto componentOf = [&](long long disk) { return static_cast<long long>(conn.find(static_cast<int>(disk))); };
    std::map<long long, SurfaceComponent> acc;
    std::map<long long, std::uint8_t> bad;
    for (long long d = 0; d < ix.total; ++d) {
        const long long r = componentOf(d);
        auto& comp = acc[r];
        comp.disks += 1;
        if (comp.edgeWeights.empty()) comp.edgeWeights.assign(static_cast<std::size_t>(tri.edge_count()), 0);
        auto [pr, par] = orient.find(static_cast<int>(d));
        if (orient.contra[static_cast<std::size_t>(pr)]) bad[r] = 1;
    }
    for (int e = 0; e < tri.edge_count(); ++e) {
        for (long long j = 0; j < w[static_cast<std::size_t>(e)]; ++j) {
            const long long r = static_cast<long long>(conn.find(static_cast<int>(pointBase[static_cast<std::size_t>(e)] + j)));
            acc[r].points += 1;
            acc[r].edgeWeights[static_cast<std::size_t>(e)] += 1;
        }
    }
    // arcs: once per face class
    std::vector<std::uint8_t> faceSeen(static_cast<std::size_t>(tri.face_class_count()), 0);
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (faceSeen[static_cast<std::size_t>(cls)]) continue;
            faceSeen[static_cast<std::size_t>(cls)] = 1;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                for (long long d : arcs_at_corner(s, ix, t, f, v)) acc[componentOf(d)].arcs += 1;
            }
        }
    }

    std::vector<SurfaceComponent> out;
    for (auto& [r, comp] : acc) {
        comp.chi = comp.points - comp.arcs + comp.disks;
        comp.orientable = !bad.count(r);
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_nearly_canonical(const Triangulation& tri, const NormalSurface& s, const Z2Class& alpha) {
    if (static_cast<int>(alpha.edgeBits.size()) != tri.edge_count()) return false;
    std::vector<long long> w;
    try {
        check_matching(tri, s);
        w = edge_weights(tri, s);
    } catch (const TriError&) {
        return false;
    }
    for (int e = 0; e < tri.edge_count(); ++e) {
        const long long x = w[static_cast<std::size_t>(e)];
        if (alpha.edgeBits[static_cast<std::size_t>(e)]) {
            if (x != 1) return false;
        } else {
            if (x != 0 && x != 2) return false;
        }
    }
    return true;
}

} // namespace tricert
