#include "tricert/layered.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tricert/homology.hpp"
#include "tricert/isomorphism.hpp"

namespace tricert {

namespace {

// The two boundary face slots incident to a boundary edge, each with the
// edge's vertex pair oriented to match the class representative.
struct BoundarySlot {
    int tet, face;
    int ea, eb;   // edge endpoints, oriented with the class representative
    int third;    // remaining vertex of the face
};

std::vector<BoundarySlot> boundary_slots_of_edge(const Triangulation& tri, int edgeClass) {
    std::vector<BoundarySlot> out;
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!tri.face_is_boundary(t, f)) continue;
            int hits = 0;
            int pa = -1, pb = -1;
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    if (tri.edge_class(t, a, b) == edgeClass) {
                        ++hits;
                        pa = a;
                        pb = b;
                    }
                }
            }
            if (hits == 0) continue;
            if (hits > 1) throw FacesNotDistinct("edge appears twice in one boundary face");
            if (!tri.edge_corner_orientation(t, pa, pb)) std::swap(pa, pb);
            out.push_back({t, f, pa, pb, 6 - f - pa - pb});
        }
    }
    return out;
}

std::pair<BoundarySlot, BoundarySlot> layerable_slots(const Triangulation& tri, int edgeClass) {
    if (edgeClass < 0 || edgeClass >= tri.edge_count()) throw IndexOutOfRange("edge class out of range");
    if (!tri.edge_is_boundary(edgeClass)) throw NotBoundaryEdge("layer/fold requires a boundary edge");
    if (tri.edge_degree(edgeClass) < 2) throw DegreeOneEdge("never layer or fold along a degree-1 boundary edge");
    auto slots = boundary_slots_of_edge(tri, edgeClass);
    if (slots.size() != 2) throw FacesNotDistinct("boundary edge must meet exactly two boundary faces");
    return {slots[0], slots[1]};
}

} // namespace

Triangulation layer(const Triangulation& tri, int edgeClass) {
    auto [A, B] = layerable_slots(tri, edgeClass);
    GluingTable table = tri.table();
    const int nt = static_cast<int>(table.size());
    table.emplace_back();

    // New tet: edge {0,1} is the diagonal; face 3 = {0,1,2} onto A, face 2 =
    // {0,1,3} onto B, both sending the diagonal along the class orientation.
    Perm4 pa;  // labels of new tet -> labels of A.tet
    pa.img = {static_cast<std::uint8_t>(A.ea), static_cast<std::uint8_t>(A.eb),
              static_cast<std::uint8_t>(A.third), static_cast<std::uint8_t>(A.face)};
    Perm4 pb;
    pb.img = {static_cast<std::uint8_t>(B.ea), static_cast<std::uint8_t>(B.eb),
              static_cast<std::uint8_t>(B.face), static_cast<std::uint8_t>(B.third)};

    table[static_cast<std::size_t>(nt)][3] = Gluing{A.tet, A.face, pa};
    table[static_cast<std::size_t>(A.tet)][static_cast<std::size_t>(A.face)] = Gluing{nt, 3, pa.inverse()};
    table[static_cast<std::size_t>(nt)][2] = Gluing{B.tet, B.face, pb};
    table[static_cast<std::size_t>(B.tet)][static_cast<std::size_t>(B.face)] = Gluing{nt, 2, pb.inverse()};
    return Triangulation::build(std::move(table));
}

Triangulation fold(const Triangulation& tri, int edgeClass) {
    auto [A, B] = layerable_slots(tri, edgeClass);
    if (A.tet == B.tet && A.face == B.face) throw FacesNotDistinct("fold needs two distinct boundary faces");
    GluingTable table = tri.table();
    Perm4 sigma;  // reflection across the edge: A -> B
    sigma.img[static_cast<std::size_t>(A.ea)] = static_cast<std::uint8_t>(B.ea);
    sigma.img[static_cast<std::size_t>(A.eb)] = static_cast<std::uint8_t>(B.eb);
    sigma.img[static_cast<std::size_t>(A.third)] = static_cast<std::uint8_t>(B.third);
    sigma.img[static_cast<std::size_t>(A.face)] = static_cast<std::uint8_t>(B.face);
    table[static_cast<std::size_t>(A.tet)][static_cast<std::size_t>(A.face)] = Gluing{B.tet, B.face, sigma};
    table[static_cast<std::size_t>(B.tet)][static_cast<std::size_t>(B.face)] = Gluing{A.tet, A.face, sigma.inverse()};
    return Triangulation::build(std::move(table));
}

Triangulation lst_123() {
    static const Triangulation cached = [] {
        std::map<std::string, Triangulation> found;
        for (int f1 = 0; f1 < 4; ++f1) {
            for (int f2 = f1 + 1; f2 < 4; ++f2) {
                for (const Perm4& p : Perm4::all()) {
                    if (p(f1) != f2) continue;
                    GluingTable table(1);
                    table[0][static_cast<std::size_t>(f1)] = Gluing{0, f2, p};
                    table[0][static_cast<std::size_t>(f2)] = Gluing{0, f1, p.inverse()};
                    Triangulation tri = [&]() -> Triangulation {
                        try {
                            return Triangulation::build(std::move(table));
                        } catch (const TriError&) {
                            return Triangulation::build(GluingTable{});
                        }
                    }();
                    if (tri.tet_count() != 1) continue;
                    if (!tri.orientable() || tri.vertex_count() != 1 || tri.edge_count() != 3) continue;
                    bool allBoundary = true;
                    std::multiset<int> degs;
                    for (int e = 0; e < 3; ++e) {
                        if (!tri.edge_is_boundary(e)) allBoundary = false;
                        degs.insert(tri.edge_degree(e));
                    }
                    if (!allBoundary || degs != std::multiset<int>{1, 2, 3}) continue;
                    found.emplace(canonical_encoding(tri), tri);
                }
            }
        }
        if (found.size() != 1) throw TriError("internal: one-tet solid torus search found " + std::to_string(found.size()));
        return found.begin()->second;
    }();
    return cached;
}

std::vector<long long> meridional_weights(const Triangulation& tri) {
    const auto images = edge_images_in_free_h1(tri);
    std::vector<long long> out;
    for (const auto& v : images) {
        if (v.size() != 1) throw TriError("meridional weights need H_1 of rank 1");
        out.push_back(std::llabs(v[0]));
    }
    return out;
}

LayeredSolidTorus build_lst(long long p, long long q) {
    if (!(0 < p && p < q)) throw RangeViolation("build_lst needs 0 < p < q");
    if (std::gcd(p, q) != 1) throw NotCoprime("build_lst needs gcd(p,q) = 1");

    // Reverse subtractive walk down to {1,2,3}.
    std::vector<std::pair<long long, long long>> path;  // pairs (a,b), triple = {a,b,a+b}
    long long a = p, b = q;
    path.emplace_back(a, b);
    while (!(a == 1 && b == 2)) {
        const long long na = std::min(a, b - a), nb = std::max(a, b - a);
        if (na <= 0 || na == nb) throw ExcludedTriple("walk leaves the admissible triples");
        a = na;
        b = nb;
        path.emplace_back(a, b);
    }
    std::reverse(path.begin(), path.end());

    Triangulation cur = lst_123();
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
        const auto [x, y] = path[step];
        const auto [nx, ny] = path[step + 1];
        // layer along the weight present now but absent from the next triple
        std::multiset<long long> curT{x, y, x + y}, nextT{nx, ny, nx + ny};
        long long w = -1;
        for (long long c : curT)
            if (!nextT.count(c)) w = c;
        if (w < 0) throw TriError("internal: no layering weight between walk steps");
        const std::vector<long long> weights = meridional_weights(cur);
        int target = -1;
        for (int e = 0; e < cur.edge_count(); ++e)
            if (cur.edge_is_boundary(e) && weights[static_cast<std::size_t>(e)] == w) {
                if (target >= 0) throw TriError("internal: ambiguous layering edge");
                target = e;
            }
        if (target < 0) throw TriError("internal: layering edge not found");
        cur = layer(cur, target);
    }

    LayeredSolidTorus out{cur, {}, {}, {}};
    const std::vector<long long> weights = meridional_weights(cur);
    std::vector<std::pair<long long, int>> bdry;
    for (int e = 0; e < cur.edge_count(); ++e) {
        if (cur.edge_is_boundary(e))
            bdry.emplace_back(weights[static_cast<std::size_t>(e)], e);
        else
            out.interiorEdges.push_back(e);
    }
    std::sort(bdry.begin(), bdry.end());
    if (bdry.size() != 3 || bdry[0].first != p || bdry[1].first != q || bdry[2].first != p + q)
        throw TriError("internal: meridional weights failed certification");
    if (cur.tet_count() != static_cast<int>(path.size()))
        throw TriError("internal: tetrahedron count does not match walk length");
    for (int k = 0; k < 3; ++k) {
        out.weights[static_cast<std::size_t>(k)] = bdry[static_cast<std::size_t>(k)].first;
        out.boundaryEdges[static_cast<std::size_t>(k)] = bdry[static_cast<std::size_t>(k)].second;
    }
    return out;
}

Triangulation build_lens(long long p, long long q) {
    if (p < 1) throw RangeViolation("build_lens needs p >= 1");
    if (std::gcd(p, q) != 1) throw NotCoprime("build_lens needs gcd(p,q) = 1");
    if (p < 4)
        throw ExcludedTriple("L(p,q) with p < 4 needs an excluded layered triangulation");

    // Folding the solid torus with weights {a,b,a+b} along the weight-a or
    // weight-b edge closes it up; certify each candidate by H_1 = Z/p.
    std::vector<std::pair<long long, long long>> candidates;
    const long long q0 = ((q % p) + p) % p;
    auto push = [&](long long a, long long b) {
        if (0 < a && a < b && std::gcd(a, b) == 1) candidates.emplace_back(a, b);
    };
    // prefer the pair suggested by q, then everything else
    push(std::min(q0, p - q0), std::max(q0, p - q0));
    for (long long a2 = 1; 2 * a2 < p; ++a2) push(a2, p - 2 * a2);           // fold along b: 2a+b = p
    for (long long b2 = 1; 2 * b2 < p; ++b2) push(p - 2 * b2, b2);           // fold along a: a+2b = p
    for (long long a2 = 1; 2 * a2 < p; ++a2) push(a2, p - a2);

    const AbelianGroup want{0, p == 1 ? std::vector<long long>{} : std::vector<long long>{p}};
    for (const auto& [ca, cb] : candidates) {
        std::optional<LayeredSolidTorus> lst;
        try {
            lst = build_lst(ca, cb);
        } catch (const TriError&) {
            continue;
        }
        for (int k = 0; k < 3; ++k) {
            const int e = lst->boundaryEdges[static_cast<std::size_t>(k)];
            if (lst->tri.edge_degree(e) < 2) continue;
            try {
                Triangulation closed = fold(lst->tri, e);
                if (!closed.closed() || !closed.orientable()) continue;
                if (integral_h1(closed) == want) return closed;
            } catch (const TriError&) {
                continue;
            }
        }
    }
    throw ExcludedTriple("no layered lens space with H_1 = Z/" + std::to_string(p) + " found");
}

namespace {

bool is_seed(const Triangulation& tri, int t) {
    // two faces of t glued to each other
    int selfPairs = 0;
    for (int f = 0; f < 4; ++f) {
        const auto& g = tri.gluing(t, f);
        if (g && g->tet == t) ++selfPairs;
    }
    return selfPairs == 2;
}

} // namespace

std::vector<DetectedLst> detect_max_lsts(const Triangulation& tri) {
    const Triangulation base = lst_123();
    const std::string baseEnc = canonical_encoding(base);
    std::vector<DetectedLst> out;
    std::set<std::vector<int>> seenTetSets;

    for (int seed = 0; seed < tri.tet_count(); ++seed) {
        if (!is_seed(tri, seed)) continue;
        Subcomplex sub = tri.subcomplex_generated({seed});
        if (!sub.edgeInjective || !sub.vertexInjective) continue;
        if (canonical_encoding(sub.tri) != baseEnc) continue;

        std::vector<int> tets{seed};
        while (true) {
            // ambient targets of the two boundary faces
            std::vector<std::pair<int, int>> targets;  // (ambient tet, ambient face)
            for (int st = 0; st < sub.tri.tet_count(); ++st) {
                for (int f = 0; f < 4; ++f) {
                    if (!sub.tri.face_is_boundary(st, f)) continue;
                    const int at = sub.tetMap[static_cast<std::size_t>(st)];
                    const auto& g = tri.gluing(at, f);
                    if (g) targets.emplace_back(g->tet, g->face);
                }
            }
            if (targets.size() != 2) break;
            const int tau = targets[0].first;
            if (tau != targets[1].first) break;
            if (std::find(tets.begin(), tets.end(), tau) != tets.end()) break;
            if (targets[0].second == targets[1].second) break;

            std::vector<int> grown = tets;
            grown.push_back(tau);
            Subcomplex next = tri.subcomplex_generated(grown);
            if (!next.edgeInjective || !next.vertexInjective) break;
            if (next.tri.boundary_face_count() != 2) break;

            // the grown complex must be a legal layering of the current one
            bool matches = false;
            for (int e = 0; e < sub.tri.edge_count() && !matches; ++e) {
                if (!sub.tri.edge_is_boundary(e) || sub.tri.edge_degree(e) < 2) continue;
                try {
                    if (isomorphic(layer(sub.tri, e), next.tri)) matches = true;
                } catch (const TriError&) {
                }
            }
            if (!matches) break;
            tets = std::move(grown);
            sub = std::move(next);
        }

        std::vector<int> key = tets;
        std::sort(key.begin(), key.end());
        if (!seenTetSets.insert(key).second) continue;

        DetectedLst d{tets, {}, {}, {}, {}, sub.tri};
        for (int e = 0; e < sub.tri.edge_count(); ++e) {
            const int amb = sub.edgeToAmbient[static_cast<std::size_t>(e)];
            if (sub.tri.edge_is_boundary(e)) {
                d.boundaryEdges.push_back(amb);
                d.boundaryEdgeDegrees.push_back(sub.tri.edge_degree(e));
            } else {
                d.interiorEdges.push_back(amb);
                d.interiorEdgeDegrees.push_back(sub.tri.edge_degree(e));
            }
        }
        out.push_back(std::move(d));
    }

    // drop any result strictly contained in another (maximality across seeds)
    std::vector<DetectedLst> maximal;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::set<int> si(out[i].tets.begin(), out[i].tets.end());
        bool contained = false;
        for (std::size_t j = 0; j < out.size() && !contained; ++j) {
            if (i == j) continue;
            std::set<int> sj(out[j].tets.begin(), out[j].tets.end());
            if (si.size() < sj.size() && std::includes(sj.begin(), sj.end(), si.begin(), si.end())) contained = true;
        }
        if (!contained) maximal.push_back(out[i]);
    }
    std::sort(maximal.begin(), maximal.end(), [](const DetectedLst& a, const DetectedLst& b) {
        return *std::min_element(a.tets.begin(), a.tets.end()) < *std::min_element(b.tets.begin(), b.tets.end());
    });
    return maximal;
}

bool is_layered_lens_space(const Triangulation& tri) {
    if (!tri.closed() || !tri.connected() || tri.vertex_count() != 1) return false;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(tri.face_class_count()), 0);
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (seen[static_cast<std::size_t>(cls)]) continue;
            seen[static_cast<std::size_t>(cls)] = 1;

            GluingTable table = tri.table();
            const Gluing g = *tri.gluing(t, f);
            table[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)].reset();
            table[static_cast<std::size_t>(g.tet)][static_cast<std::size_t>(g.face)].reset();
            Triangulation cut = Triangulation::build(std::move(table));
            if (!cut.connected() || cut.boundary_face_count() != 2) continue;
            if (!cut.orientable() || cut.vertex_count() != 1) continue;
            std::vector<long long> bw;
            try {
                const auto w = meridional_weights(cut);
                for (int e = 0; e < cut.edge_count(); ++e)
                    if (cut.edge_is_boundary(e)) bw.push_back(w[static_cast<std::size_t>(e)]);
            } catch (const TriError&) {
                continue;
            }
            std::sort(bw.begin(), bw.end());
            if (bw.size() != 3 || bw[2] != bw[0] + bw[1]) continue;
            if (bw[0] < 1 || bw[0] >= bw[1] || std::gcd(bw[0], bw[1]) != 1) continue;
            try {
                if (isomorphic(cut, build_lst(bw[0], bw[1]).tri)) return true;
            } catch (const TriError&) {
            }
        }
    }
    return false;
}

std::vector<std::pair<int, int>> lst_pairwise_violations(const Triangulation& tri,
                                                         const std::vector<DetectedLst>& inv) {
    std::vector<std::pair<int, int>> bad;
    auto cells = [&](const DetectedLst& d) {
        std::set<int> tets(d.tets.begin(), d.tets.end());
        std::set<int> faces, edges;
        for (int t : d.tets) {
            for (int f = 0; f < 4; ++f) faces.insert(tri.face_class(t, f));
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) edges.insert(tri.edge_class(t, a, b));
        }
        return std::make_tuple(tets, faces, edges);
    };
    std::vector<std::tuple<std::set<int>, std::set<int>, std::set<int>>> cs;
    for (const auto& d : inv) cs.push_back(cells(d));
    for (std::size_t i = 0; i < inv.size(); ++i) {
        for (std::size_t j = i + 1; j < inv.size(); ++j) {
            const auto& [ti, fi, ei] = cs[i];
            const auto& [tj, fj, ej] = cs[j];
            std::vector<int> tShared, fShared, eShared;
            std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(), std::back_inserter(tShared));
            std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(), std::back_inserter(fShared));
            std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(), std::back_inserter(eShared));
            if (!tShared.empty() || !fShared.empty() || eShared.size() > 1)
                bad.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return bad;
}

} // namespace tricert
