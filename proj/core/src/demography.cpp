#include "tricert/demography.hpp"

#include <algorithm>
#include <set>

namespace tricert {

namespace {

// Shared skeleton of the rank-1/rank-2 classification. The caller supplies
// per-edge evenness, per-tet symbols and the type-count term of I.
EdgeLedger classify_core(const Triangulation& tri, int rank,
                         const std::vector<std::uint8_t>& edgeEven,
                         std::vector<char> tetSym, std::vector<int> tetColor,
                         long long I3, const std::vector<DetectedLst>& inv) {
    EdgeLedger led;
    led.rank = rank;
    led.tetCount = tri.tet_count();
    led.I3 = I3;
    led.tetSym = std::move(tetSym);
    led.tetColor = std::move(tetColor);

    led.entryOf.assign(static_cast<std::size_t>(tri.edge_count()), -1);
    for (int e = 0; e < tri.edge_count(); ++e) {
        if (!edgeEven[static_cast<std::size_t>(e)]) continue;
        led.entryOf[static_cast<std::size_t>(e)] = static_cast<int>(led.evenEdges.size());
        led.evenEdges.push_back(e);
        EdgeEntry entry;
        entry.edge = e;
        entry.degree = tri.edge_degree(e);
        led.entries.push_back(std::move(entry));
    }

    // degrees by incident tetrahedron type: one count per corner
    for (int t = 0; t < tri.tet_count(); ++t) {
        const char sym = led.tetSym[static_cast<std::size_t>(t)];
        for (int slot = 0; slot < 6; ++slot) {
            const int e = tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(slot)][0],
                                         kEdgeVerts[static_cast<std::size_t>(slot)][1]);
            const int idx = led.entryOf[static_cast<std::size_t>(e)];
            if (idx < 0) continue;
            EdgeEntry& entry = led.entries[static_cast<std::size_t>(idx)];
            if (sym == 't' && rank == 1) ++entry.dT;
            if (sym == 't' && rank == 2) ++entry.dTT;
            if (sym == 'x') ++entry.dQTT;
        }
    }

    // torus membership, children and babies
    led.tetLst.assign(static_cast<std::size_t>(tri.tet_count()), -1);
    led.lstSupporter.assign(inv.size(), -1);
    led.lstQuadType.assign(inv.size(), 0);
    led.lstBabies.assign(inv.size(), 0);
    for (std::size_t s = 0; s < inv.size(); ++s) {
        const DetectedLst& lst = inv[s];
        bool allQuad = true;
        for (int t : lst.tets) {
            if (led.tetLst[static_cast<std::size_t>(t)] < 0)
                led.tetLst[static_cast<std::size_t>(t)] = static_cast<int>(s);
            if (led.tetSym[static_cast<std::size_t>(t)] != 'q') allQuad = false;
        }
        led.lstQuadType[s] = allQuad ? 1 : 0;

        for (int e : lst.interiorEdges) {
            const int idx = led.entryOf[static_cast<std::size_t>(e)];
            if (idx < 0) continue;
            EdgeEntry& entry = led.entries[static_cast<std::size_t>(idx)];
            entry.role = tri.edge_degree(e) == 3 ? EdgeRole::Baby : EdgeRole::Child;
            if (tri.edge_degree(e) == 3) ++led.lstBabies[s];
        }
    }
    for (std::size_t s = 0; s < inv.size(); ++s) {
        const DetectedLst& lst = inv[s];
        std::vector<int> edges = lst.interiorEdges;
        edges.insert(edges.end(), lst.boundaryEdges.begin(), lst.boundaryEdges.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        int best = -1;
        for (int e : edges) {
            const int idx = led.entryOf[static_cast<std::size_t>(e)];
            if (idx < 0) continue;
            EdgeEntry& entry = led.entries[static_cast<std::size_t>(idx)];
            entry.lsts.push_back(static_cast<int>(s));
            if (entry.role != EdgeRole::Adult) continue;
            // supporter: the unique adult edge of a quad-type torus; the
            // adult edge of maximal degree otherwise (ties to lowest index)
            if (best < 0 || tri.edge_degree(e) > tri.edge_degree(best)) best = e;
        }
        led.lstSupporter[s] = best;
    }

    for (EdgeEntry& entry : led.entries) {
        entry.s = static_cast<long long>(entry.lsts.size());
        if (entry.role != EdgeRole::Adult) {
            if (!entry.lsts.empty()) {
                // a child is interior to exactly one maximal torus
                for (int s : entry.lsts) {
                    const auto& ie = inv[static_cast<std::size_t>(s)].interiorEdges;
                    if (std::find(ie.begin(), ie.end(), entry.edge) != ie.end()) {
                        entry.supporter = led.lstSupporter[static_cast<std::size_t>(s)];
                        break;
                    }
                }
            }
        }
    }
    for (std::size_t s = 0; s < inv.size(); ++s) {
        const int sup = led.lstSupporter[s];
        if (sup < 0) continue;
        const int idx = led.entryOf[static_cast<std::size_t>(sup)];
        if (idx >= 0) led.entries[static_cast<std::size_t>(idx)].b += led.lstBabies[s];
    }

    // neighbors: distinct adult edges on a common H-even face
    std::vector<std::uint8_t> faceSeen(static_cast<std::size_t>(tri.face_class_count()), 0);
    std::vector<std::set<int>> nbr(led.entries.size());
    constexpr std::array<std::array<int, 3>, 4> kFaceEdges = {{{3, 4, 5}, {1, 2, 5}, {0, 2, 4}, {0, 1, 3}}};
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (faceSeen[static_cast<std::size_t>(cls)]) continue;
            faceSeen[static_cast<std::size_t>(cls)] = 1;
            std::vector<int> adults;
            bool even = true;
            for (int slot : kFaceEdges[static_cast<std::size_t>(f)]) {
                const int e = tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(slot)][0],
                                             kEdgeVerts[static_cast<std::size_t>(slot)][1]);
                const int idx = led.entryOf[static_cast<std::size_t>(e)];
                if (idx < 0) {
                    even = false;
                    break;
                }
                if (led.entries[static_cast<std::size_t>(idx)].role == EdgeRole::Adult) adults.push_back(e);
            }
            if (!even) continue;
            std::sort(adults.begin(), adults.end());
            adults.erase(std::unique(adults.begin(), adults.end()), adults.end());
            for (std::size_t i = 0; i < adults.size(); ++i)
                for (std::size_t j = i + 1; j < adults.size(); ++j) {
                    nbr[static_cast<std::size_t>(led.entryOf[static_cast<std::size_t>(adults[i])])].insert(adults[j]);
                    nbr[static_cast<std::size_t>(led.entryOf[static_cast<std::size_t>(adults[j])])].insert(adults[i]);
                }
        }
    }
    for (std::size_t i = 0; i < led.entries.size(); ++i) {
        led.entries[i].neighbors.assign(nbr[i].begin(), nbr[i].end());
        led.entries[i].isolated = led.entries[i].neighbors.empty();
    }

    for (EdgeEntry& entry : led.entries)
        entry.i3 = 3 * (entry.degree - 4) + entry.dT + entry.dTT + 3 * entry.dQTT;
    return led;
}

} // namespace

EdgeLedger classify_edges(const Triangulation& tri, const ColoringR1& c,
                          const std::vector<DetectedLst>& inv) {
    std::vector<std::uint8_t> even;
    for (std::uint8_t b : c.edgeOdd) even.push_back(b ? 0 : 1);
    std::vector<char> sym;
    for (TetTypeR1 t : c.tetType)
        sym.push_back(t == TetTypeR1::E ? 'e' : (t == TetTypeR1::T ? 't' : 'q'));
    std::vector<int> color(sym.size(), 0);
    const long long I3 = 3 * (c.degree_weighted_even_sum() + c.countT);
    return classify_core(tri, 1, even, std::move(sym), std::move(color), I3, inv);
}

EdgeLedger classify_edges(const Triangulation& tri, const ColoringR2& c,
                          const std::vector<DetectedLst>& inv) {
    std::vector<std::uint8_t> even;
    for (std::uint8_t l : c.edgeLabel) even.push_back(l == 0 ? 1 : 0);
    std::vector<char> sym;
    std::vector<int> color;
    for (std::size_t t = 0; t < c.tetType.size(); ++t) {
        switch (c.tetType[t]) {
            case TetTypeR2::E: sym.push_back('e'); break;
            case TetTypeR2::TT: sym.push_back('t'); break;
            case TetTypeR2::QQ: sym.push_back('q'); break;
            case TetTypeR2::QTT: sym.push_back('x'); break;
            case TetTypeR2::QQQ: sym.push_back('z'); break;
        }
        color.push_back(c.tetType[t] == TetTypeR2::QQ ? c.tetLabel[t] : 0);
    }
    const long long I3 = 3 * (c.degree_weighted_even_sum() + c.countTT + c.countQTT);
    return classify_core(tri, 2, even, std::move(sym), std::move(color), I3, inv);
}

void counting_values(EdgeLedger& led) {
    for (EdgeEntry& entry : led.entries) {
        if (entry.role != EdgeRole::Adult) continue;
        entry.g3 = 3 * (entry.degree - 4 - entry.b) + entry.dT + entry.dTT + 3 * entry.dQTT;
        entry.solvent = entry.g3 >= 0;
    }
    for (EdgeEntry& entry : led.entries) {
        if (entry.role != EdgeRole::Adult) continue;
        long long solventNbrs = 0, insolventNbrs = 0;
        for (int n : entry.neighbors) {
            const EdgeEntry* other = led.entry(n);
            if (!other || other->role != EdgeRole::Adult) continue;
            (other->solvent ? solventNbrs : insolventNbrs) += 1;
        }
        entry.a3 = entry.solvent ? -insolventNbrs : solventNbrs;
        entry.f3 = entry.g3 + entry.a3;
        if (entry.solvent)
            entry.decency = Decency::NA;
        else
            entry.decency = solventNbrs > 0 ? Decency::Decent : Decency::Rogue;
    }
}

IdentityReport global_sums(const EdgeLedger& led) {
    IdentityReport r;
    r.I3 = led.I3;
    r.decentBiconditional = true;
    for (const EdgeEntry& entry : led.entries) {
        r.sumI3 += entry.i3;
        if (entry.role != EdgeRole::Adult) continue;
        r.sumG3 += entry.g3;
        r.sumA3 += entry.a3;
        r.sumF3 += entry.f3;
        const bool ok = entry.solvent || entry.decency == Decency::Decent;
        if ((entry.f3 >= 0) != ok) r.decentBiconditional = false;
    }
    r.iEqual = r.I3 == r.sumI3;
    r.gBound = r.I3 >= r.sumG3;
    r.fBound = r.I3 >= r.sumF3;
    r.aCancel = r.sumA3 == 0;
    return r;
}

namespace {

bool cyclic_match(const std::vector<TupleSymbol>& t, const std::vector<TupleSymbol>& pat) {
    const std::size_t n = t.size();
    if (pat.size() != n || n == 0) return false;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < n; ++r) {
            bool ok = true;
            for (std::size_t k = 0; k < n && ok; ++k) {
                const std::size_t idx = (r + (dir == 0 ? k : n - k)) % n;
                if (!(t[idx] == pat[k])) ok = false;
            }
            if (ok) return true;
        }
    }
    return false;
}

std::vector<TupleSymbol> pat(std::initializer_list<std::pair<char, int>> syms) {
    std::vector<TupleSymbol> v;
    for (auto [c, d] : syms) v.push_back(TupleSymbol{c, d});
    return v;
}

} // namespace

void insolvency_profile(EdgeLedger& led, const Triangulation& tri) {
    const auto q0 = std::pair<char, int>{'q', 0};
    const auto q1 = std::pair<char, int>{'q', 1};
    const auto q2 = std::pair<char, int>{'q', 2};
    const auto t0 = std::pair<char, int>{'t', 0};
    const auto e0 = std::pair<char, int>{'e', 0};
    const auto e1 = std::pair<char, int>{'e', 1};
    const std::vector<std::vector<std::vector<TupleSymbol>>> byCase = {
        {pat({q0, q2, q0, q2, q0, q2})},
        {pat({q0, q2, q0, q2, q0}), pat({t0, q2, q0, q2, t0})},
        {pat({q0, q2, q0, q2})},
        {pat({q0, q2, q0, q1}), pat({t0, q2, t0, e1})},
        {pat({q0, q2, q0, q0}), pat({t0, q2, q0, t0}), pat({t0, q2, t0, e0})},
    };

    for (EdgeEntry& entry : led.entries) {
        entry.profileCase = 0;
        entry.profileHasT = false;
        entry.tuple.clear();
        if (entry.role != EdgeRole::Adult || entry.solvent) continue;

        const long long d = entry.degree;
        const long long s = entry.s;
        const long long b = entry.b;
        int caseNo = 0;
        if (d == 6 && s == 3 && b == 3) caseNo = 1;
        else if (d == 5 && s == 2 && b == 2) caseNo = 2;
        else if (d == 4 && s == 2 && b == 2) caseNo = 3;
        else if (d == 4 && s == 2 && b == 1) caseNo = 4;
        else if (d == 4 && s == 1 && b == 1) caseNo = 5;
        if (caseNo == 0)
            throw ProfileMismatch("insolvent edge outside the admissible (d, s, b) patterns");

        const auto link = tri.edge_link(entry.edge);
        std::set<int> seenTets;
        for (const EdgeCorner& c : link) {
            if (!seenTets.insert(c.tet).second)
                throw ProfileMismatch("insolvent edge meets a tetrahedron twice");
            const int lst = led.tetLst[static_cast<std::size_t>(c.tet)];
            int dots = 0;
            if (lst >= 0)
                dots = (led.lstSupporter[static_cast<std::size_t>(lst)] == entry.edge &&
                        led.lstBabies[static_cast<std::size_t>(lst)] > 0)
                           ? 2
                           : 1;
            entry.tuple.push_back(TupleSymbol{led.tetSym[static_cast<std::size_t>(c.tet)], dots});
        }

        bool matched = false;
        for (const auto& p : byCase[static_cast<std::size_t>(caseNo - 1)])
            if (cyclic_match(entry.tuple, p)) matched = true;
        if (!matched) throw ProfileMismatch("insolvent edge matches no admissible type tuple");

        // each torus through the edge meets it in a single corner
        for (int s2 : entry.lsts) {
            int corners = 0;
            for (const EdgeCorner& c : link)
                if (led.tetLst[static_cast<std::size_t>(c.tet)] == s2) ++corners;
            if (corners != 1)
                throw ProfileMismatch("torus through an insolvent edge meets it in several corners");
        }

        entry.profileCase = caseNo;
        for (const TupleSymbol& sy : entry.tuple)
            if (sy.type == 't') entry.profileHasT = true;
    }
}

ClusterSet build_clusters(const EdgeLedger& led, const Triangulation& tri) {
    ClusterSet cs;

    auto tets_of = [&](const std::vector<int>& edges) {
        std::set<int> tets;
        for (int e : edges)
            for (const EdgeCorner& c : tri.edge_corners(e)) tets.insert(c.tet);
        return std::vector<int>(tets.begin(), tets.end());
    };
    auto colors_of = [&](const std::vector<int>& tets) {
        std::array<int, 2> colors{0, 0};
        if (led.rank != 2) return colors;
        for (int t : tets) {
            const int k = led.tetColor[static_cast<std::size_t>(t)];
            if (led.tetSym[static_cast<std::size_t>(t)] == 'q' && k > 0) {
                int n = 0;
                for (int i = 1; i <= 3; ++i)
                    if (i != k) colors[static_cast<std::size_t>(n++)] = i;
                break;
            }
        }
        return colors;
    };

    std::set<int> inPosse;
    // posses: H-even faces whose three edges are distinct non-isolated rogues
    std::vector<std::uint8_t> faceSeen(static_cast<std::size_t>(tri.face_class_count()), 0);
    std::set<std::array<int, 3>> posses;
    constexpr std::array<std::array<int, 3>, 4> kFaceEdges = {{{3, 4, 5}, {1, 2, 5}, {0, 2, 4}, {0, 1, 3}}};
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (faceSeen[static_cast<std::size_t>(cls)]) continue;
            faceSeen[static_cast<std::size_t>(cls)] = 1;
            std::array<int, 3> edges{};
            int n = 0;
            for (int slot : kFaceEdges[static_cast<std::size_t>(f)])
                edges[static_cast<std::size_t>(n++)] =
                    tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(slot)][0],
                                   kEdgeVerts[static_cast<std::size_t>(slot)][1]);
            std::sort(edges.begin(), edges.end());
            if (edges[0] == edges[1] || edges[1] == edges[2]) continue;
            bool allRogue = true;
            for (int e : edges) {
                const EdgeEntry* entry = led.entry(e);
                if (!entry || entry->role != EdgeRole::Adult || entry->decency != Decency::Rogue ||
                    entry->isolated)
                    allRogue = false;
            }
            if (allRogue) posses.insert(edges);
        }
    }
    for (const auto& p : posses) {
        Cluster c;
        c.rogueEdges.assign(p.begin(), p.end());
        c.tets = tets_of(c.rogueEdges);
        if (c.tets.size() == 11)
            c.kind = ClusterKind::Posse11;
        else if (c.tets.size() == 10)
            c.kind = ClusterKind::Posse10;
        else
            throw ProfileMismatch("posse cluster with unexpected tetrahedron count");
        c.colors = colors_of(c.tets);
        cs.clusters.push_back(std::move(c));
        for (int e : p) inPosse.insert(e);
    }

    for (const EdgeEntry& entry : led.entries) {
        if (entry.role != EdgeRole::Adult || entry.decency != Decency::Rogue) continue;
        if (inPosse.count(entry.edge)) continue;
        if (!entry.isolated)
            throw ProfileMismatch("non-isolated rogue edge outside every posse");
        Cluster c;
        c.kind = ClusterKind::Isolated;
        c.rogueEdges = {entry.edge};
        c.tets = tets_of(c.rogueEdges);
        if (c.tets.size() != 5 && c.tets.size() != 6)
            throw ProfileMismatch("isolated rogue cluster is not a 5- or 6-tet bipyramid");
        c.colors = colors_of(c.tets);
        cs.clusters.push_back(std::move(c));
    }

    std::sort(cs.clusters.begin(), cs.clusters.end(), [](const Cluster& a, const Cluster& b) {
        if (a.tets.front() != b.tets.front()) return a.tets.front() < b.tets.front();
        return a.rogueEdges < b.rogueEdges;
    });

    auto share_tet = [](const Cluster& a, const Cluster& b) {
        std::vector<int> out;
        std::set_intersection(a.tets.begin(), a.tets.end(), b.tets.begin(), b.tets.end(),
                              std::back_inserter(out));
        return !out.empty();
    };
    for (std::size_t i = 0; i < cs.clusters.size(); ++i)
        for (std::size_t j = i + 1; j < cs.clusters.size(); ++j)
            if (share_tet(cs.clusters[i], cs.clusters[j]))
                cs.overlaps.emplace_back(static_cast<int>(i), static_cast<int>(j));

    for (std::size_t i = 0; i < cs.clusters.size(); ++i) {
        bool free = true;
        for (int s : cs.selected)
            if (share_tet(cs.clusters[i], cs.clusters[static_cast<std::size_t>(s)])) free = false;
        if (free) cs.selected.push_back(static_cast<int>(i));
    }

    cs.kappa = static_cast<long long>(cs.clusters.size());
    cs.kappaPrime = static_cast<long long>(cs.selected.size());
    if (led.rank == 2) {
        for (const Cluster& c : cs.clusters) {
            const int i = std::min(c.colors[0], c.colors[1]);
            const int j = std::max(c.colors[0], c.colors[1]);
            if (i == 1 && j == 2) ++cs.kappaIJ[0];
            if (i == 1 && j == 3) ++cs.kappaIJ[1];
            if (i == 2 && j == 3) ++cs.kappaIJ[2];
        }
        cs.kappaI[0] = cs.kappaIJ[0] + cs.kappaIJ[1];
        cs.kappaI[1] = cs.kappaIJ[0] + cs.kappaIJ[2];
        cs.kappaI[2] = cs.kappaIJ[1] + cs.kappaIJ[2];
    }
    return cs;
}

} // namespace tricert
