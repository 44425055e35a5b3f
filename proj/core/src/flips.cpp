#include "tricert/flips.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace tricert {

namespace {

// The octahedron around a degree-4 edge, with abstract vertex ids
// 0 = u, 1 = v (the edge endpoints) and 2 + i = w_i (the equator, in ring
// order). Tet i of the ring has vertices {u, v, w_i, w_{i+1}}.
struct Octahedron {
    std::array<int, 4> tets{};
    // [ring position][abstract id] -> local vertex index, -1 when absent
    std::array<std::array<int, 6>, 4> loc{};
};

std::optional<Octahedron> build_octahedron(const Triangulation& tri, int edge) {
    if (tri.edge_is_boundary(edge) || tri.edge_degree(edge) != 4) return std::nullopt;
    const auto corners = tri.edge_corners(edge);
    if (corners.size() != 4) return std::nullopt;

    Octahedron oc;
    for (auto& row : oc.loc) row.fill(-1);
    oc.tets[0] = corners[0].tet;
    const int u = corners[0].a, v = corners[0].b;
    int c = -1, d = -1;
    for (int l = 0; l < 4; ++l)
        if (l != u && l != v) (c < 0 ? c : d) = l;
    oc.loc[0][0] = u;
    oc.loc[0][1] = v;
    oc.loc[0][2] = c;  // w_0
    oc.loc[0][3] = d;  // w_1

    for (int i = 0; i < 4; ++i) {
        // cross the face opposite w_i into the next ring tet
        const int f = oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(2 + i)];
        const auto& gl = tri.gluing(oc.tets[static_cast<std::size_t>(i)], f);
        if (!gl) return std::nullopt;
        const Perm4& p = gl->perm;
        const int wNext = 2 + (i + 1) % 4, wNext2 = 2 + (i + 2) % 4;
        if (i < 3) {
            const std::size_t j = static_cast<std::size_t>(i + 1);
            oc.tets[j] = gl->tet;
            oc.loc[j][0] = p(oc.loc[static_cast<std::size_t>(i)][0]);
            oc.loc[j][1] = p(oc.loc[static_cast<std::size_t>(i)][1]);
            oc.loc[j][static_cast<std::size_t>(wNext)] =
                p(oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(wNext)]);
            oc.loc[j][static_cast<std::size_t>(wNext2)] = p(f);
        } else {
            // the walk must close back onto tet 0 without swapping the poles
            if (gl->tet != oc.tets[0]) return std::nullopt;
            if (p(oc.loc[3][0]) != oc.loc[0][0] || p(oc.loc[3][1]) != oc.loc[0][1]) return std::nullopt;
            if (p(oc.loc[3][static_cast<std::size_t>(wNext)]) !=
                oc.loc[0][static_cast<std::size_t>(wNext)])
                return std::nullopt;
            if (p(f) != oc.loc[0][static_cast<std::size_t>(wNext2)]) return std::nullopt;
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (oc.tets[static_cast<std::size_t>(i)] == oc.tets[static_cast<std::size_t>(j)])
                return std::nullopt;
    return oc;
}

// abstract ids of the new diagonal and the ring of the rebuilt octahedron;
// consecutive ring entries always span an edge of some old ring tet
struct Diagonal {
    int d0, d1;
    std::array<int, 4> ring;
};

Diagonal diagonal_layout(int diagonal) {
    // diagonal 0 joins w_0 and w_2, diagonal 1 joins w_1 and w_3
    if (diagonal == 0) return {2, 4, {3, 0, 5, 1}};  // ring w_1, u, w_3, v
    return {3, 5, {0, 4, 1, 2}};                     // ring u, w_2, v, w_0
}

} // namespace

std::vector<int> flippable_edges(const Triangulation& tri) {
    std::vector<int> out;
    for (int e = 0; e < tri.edge_count(); ++e)
        if (build_octahedron(tri, e)) out.push_back(e);
    return out;
}

FlipMove edge_flip(const Triangulation& tri, int edge, int diagonal) {
    if (diagonal != 0 && diagonal != 1) throw IndexOutOfRange("diagonal must be 0 or 1");
    auto ocOpt = build_octahedron(tri, edge);
    if (!ocOpt)
        throw NotFlippable("edge " + std::to_string(edge) +
                           " is not surrounded by an octahedron of four distinct tetrahedra");
    const Octahedron& oc = *ocOpt;
    const Diagonal dg = diagonal_layout(diagonal);

    // new tet j (reusing slot oc.tets[j]) has local vertices
    // 0 = d0, 1 = d1, 2 = ring[j], 3 = ring[j+1]
    const auto newLocal = [&](int j, int abstractId) {
        if (abstractId == dg.d0) return 0;
        if (abstractId == dg.d1) return 1;
        if (abstractId == dg.ring[static_cast<std::size_t>(j)]) return 2;
        if (abstractId == dg.ring[static_cast<std::size_t>((j + 1) % 4)]) return 3;
        return -1;
    };

    GluingTable g = tri.table();
    for (int t : oc.tets) g[static_cast<std::size_t>(t)] = {};

    const auto set_pair = [&](int t1, int f1, int t2, int f2, const Perm4& p) {
        g[static_cast<std::size_t>(t1)][static_cast<std::size_t>(f1)] = Gluing{t2, f2, p};
        g[static_cast<std::size_t>(t2)][static_cast<std::size_t>(f2)] = Gluing{t1, f1, p.inverse()};
    };

    // interior of the rebuilt octahedron: tets j and j+1 share the face
    // {d0, d1, ring[j+1]}, face 2 of tet j and face 3 of tet j+1
    for (int j = 0; j < 4; ++j)
        set_pair(oc.tets[static_cast<std::size_t>(j)], 2, oc.tets[static_cast<std::size_t>((j + 1) % 4)], 3,
                 Perm4{{0, 1, 3, 2}});

    // boundary faces, keyed by their sorted abstract vertex triple; the old
    // and new decompositions induce the same eight triples
    using Key = std::array<int, 3>;
    std::map<Key, std::pair<int, int>> oldBd;  // -> (ring position, local face)
    for (int i = 0; i < 4; ++i)
        for (int pole : {0, 1}) {
            Key k{pole == 0 ? 1 : 0, 2 + i, 2 + (i + 1) % 4};
            std::sort(k.begin(), k.end());
            oldBd[k] = {i, oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(pole)]};
        }
    std::map<Key, std::pair<int, int>> newBd;  // -> (new tet position j, local face)
    for (int j = 0; j < 4; ++j)
        for (int f : {0, 1}) {
            Key k{f == 0 ? dg.d1 : dg.d0, dg.ring[static_cast<std::size_t>(j)],
                  dg.ring[static_cast<std::size_t>((j + 1) % 4)]};
            std::sort(k.begin(), k.end());
            newBd[k] = {j, f};
        }

    std::array<int, 4> ringPos{};  // old tet index -> ring position
    std::map<int, int> ringOf;
    for (int i = 0; i < 4; ++i) ringOf[oc.tets[static_cast<std::size_t>(i)]] = i;
    (void)ringPos;

    const auto abstract_of = [&](int i, int local) {
        for (int a = 0; a < 6; ++a)
            if (oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] == local) return a;
        return -1;
    };

    for (const auto& [key, nb] : newBd) {
        const auto [j, f] = nb;
        if (g[static_cast<std::size_t>(oc.tets[static_cast<std::size_t>(j)])][static_cast<std::size_t>(f)])
            continue;  // already glued from the partner side
        const auto [i, of] = oldBd.at(key);
        const auto& gl = tri.gluing(oc.tets[static_cast<std::size_t>(i)], of);
        if (!gl) continue;  // boundary face of the manifold stays free
        const auto it = ringOf.find(gl->tet);
        Perm4 q;
        if (it == ringOf.end()) {
            for (int x : key)
                q.img[static_cast<std::size_t>(newLocal(j, x))] = static_cast<std::uint8_t>(
                    gl->perm(oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]));
            q.img[static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(gl->face);
            set_pair(oc.tets[static_cast<std::size_t>(j)], f, gl->tet, gl->face, q);
        } else {
            // the octahedron boundary glues to itself: compose through the
            // abstract labels of the partner face
            const int k = it->second;
            Key key2{};
            int ki = 0;
            for (int l = 0; l < 4; ++l)
                if (l != gl->face) key2[static_cast<std::size_t>(ki++)] = abstract_of(k, l);
            std::sort(key2.begin(), key2.end());
            const auto [j2, f2] = newBd.at(key2);
            for (int x : key) {
                const int y = abstract_of(
                    k, gl->perm(oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]));
                q.img[static_cast<std::size_t>(newLocal(j, x))] =
                    static_cast<std::uint8_t>(newLocal(j2, y));
            }
            q.img[static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(f2);
            set_pair(oc.tets[static_cast<std::size_t>(j)], f,
                     oc.tets[static_cast<std::size_t>(j2)], f2, q);
        }
    }

    Triangulation newTri = Triangulation::build(std::move(g));

    std::vector<int> oldEdgeClass(static_cast<std::size_t>(newTri.edge_count()), -1);
    const auto assign = [&](int newClass, int oldClass) {
        int& slot = oldEdgeClass[static_cast<std::size_t>(newClass)];
        if (slot >= 0 && slot != oldClass)
            throw TriError("internal: a degree-4 flip merged two edge classes");
        slot = oldClass;
    };
    for (int t = 0; t < tri.tet_count(); ++t) {
        if (ringOf.count(t)) continue;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                assign(newTri.edge_class(t, a, b), tri.edge_class(t, a, b));
    }
    const auto old_class_of_pair = [&](int x, int y) {
        for (int i = 0; i < 4; ++i) {
            const int lx = oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
            const int ly = oc.loc[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)];
            if (lx >= 0 && ly >= 0) return tri.edge_class(oc.tets[static_cast<std::size_t>(i)], lx, ly);
        }
        throw TriError("internal: abstract octahedron pair missing from the old ring");
    };
    for (int j = 0; j < 4; ++j) {
        const std::array<int, 4> abs{dg.d0, dg.d1, dg.ring[static_cast<std::size_t>(j)],
                                     dg.ring[static_cast<std::size_t>((j + 1) % 4)]};
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                if (a == 0 && b == 1) continue;  // the created diagonal
                assign(newTri.edge_class(oc.tets[static_cast<std::size_t>(j)], a, b),
                       old_class_of_pair(abs[static_cast<std::size_t>(a)], abs[static_cast<std::size_t>(b)]));
            }
    }
    const int createdEdge = newTri.edge_class(oc.tets[0], 0, 1);
    if (oldEdgeClass[static_cast<std::size_t>(createdEdge)] >= 0)
        throw NotFlippable("the replacement diagonal would merge with a surviving edge");
    for (int cnew = 0; cnew < newTri.edge_count(); ++cnew)
        if (cnew != createdEdge && oldEdgeClass[static_cast<std::size_t>(cnew)] < 0)
            throw TriError("internal: an edge class of the flipped triangulation has no ancestor");
    const std::array<int, 2> parityEdges{old_class_of_pair(dg.d0, dg.ring[0]),
                                         old_class_of_pair(dg.d1, dg.ring[0])};
    return FlipMove{edge, diagonal, std::move(newTri), createdEdge, std::move(oldEdgeClass),
                    parityEdges};
}

Z2Class transport_class(const FlipMove& mv, const Z2Class& alpha) {
    Z2Class out;
    out.edgeBits.assign(static_cast<std::size_t>(mv.tri.edge_count()), 0);
    for (int c = 0; c < mv.tri.edge_count(); ++c) {
        if (c == mv.createdEdge)
            out.edgeBits[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(
                alpha.edgeBits[static_cast<std::size_t>(mv.parityEdges[0])] ^
                alpha.edgeBits[static_cast<std::size_t>(mv.parityEdges[1])]);
        else
            out.edgeBits[static_cast<std::size_t>(c)] =
                alpha.edgeBits[static_cast<std::size_t>(mv.oldEdgeClass[static_cast<std::size_t>(c)])];
    }
    return out;
}

namespace {

struct Potential {
    long long tori = 0;   // quad-type maximal tori at insolvent degree-4 adults
    long long eTets = 0;  // tetrahedra with no odd edge

    friend bool operator<(const Potential& a, const Potential& b) {
        return a.tori != b.tori ? a.tori < b.tori : a.eTets < b.eTets;
    }
    std::pair<long long, long long> pair() const { return {tori, eTets}; }
};

struct Survey {
    Potential pot;
    std::vector<int> insolventDeg4;  // ascending adult edge classes
};

Survey survey(const Triangulation& tri, const Z2Class& alpha) {
    const ColoringR1 col = color_rank1(tri, alpha);
    const auto inv = detect_max_lsts(tri);
    EdgeLedger led = classify_edges(tri, col, inv);
    counting_values(led);

    Survey sv;
    sv.pot.eTets = col.countE;
    std::set<int> marked;
    for (const EdgeEntry& en : led.entries) {
        if (en.role != EdgeRole::Adult || en.degree != 4 || en.solvent) continue;
        sv.insolventDeg4.push_back(en.edge);
        for (const EdgeCorner& cr : tri.edge_corners(en.edge)) {
            const int l = led.tetLst[static_cast<std::size_t>(cr.tet)];
            if (l >= 0 && led.lstQuadType[static_cast<std::size_t>(l)]) marked.insert(l);
        }
    }
    sv.pot.tori = static_cast<long long>(marked.size());
    std::sort(sv.insolventDeg4.begin(), sv.insolventDeg4.end());
    return sv;
}

} // namespace

NormalizeResult normalize_insolvent_deg4(const Triangulation& tri, const Z2Class& alpha) {
    NormalizeResult res{tri, alpha, 0, {}};
    Survey sv = survey(res.tri, res.alpha);
    res.potentialTrace.push_back(sv.pot.pair());

    while (!sv.insolventDeg4.empty()) {
        bool advanced = false;
        for (int e : sv.insolventDeg4) {
            for (int diagonal : {0, 1}) {
                std::optional<FlipMove> mvOpt;
                try {
                    mvOpt.emplace(edge_flip(res.tri, e, diagonal));
                } catch (const NotFlippable&) {
                    break;  // neither diagonal exists when the octahedron fails
                }
                FlipMove& mv = *mvOpt;
                Z2Class na = transport_class(mv, res.alpha);
                Survey next = survey(mv.tri, na);
                if (next.pot < sv.pot) {
                    res.tri = std::move(mv.tri);
                    res.alpha = std::move(na);
                    sv = std::move(next);
                    ++res.flips;
                    res.potentialTrace.push_back(sv.pot.pair());
                    advanced = true;
                    break;
                }
            }
            if (advanced) break;
        }
        if (!advanced)
            throw NoProgress("insolvent degree-4 edges remain but no flip lowers the potential");
    }
    return res;
}

} // namespace tricert
