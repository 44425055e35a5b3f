#include "tricert/busting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tricert/layered.hpp"

namespace tricert {

namespace {

struct TetCoords {
    std::array<long long, 4> tri{};
    std::array<long long, 3> quad{};

    bool operator==(const TetCoords&) const = default;
};

bool quad_crosses(int k, int e) { return e != k && e != 5 - k; }

// All normal-coordinate realizations of the given per-slot edge weights in
// one tetrahedron (non-negative, at most one quad type).
std::vector<TetCoords> tet_solutions(const std::array<long long, 6>& w) {
    std::vector<TetCoords> out;
    const auto try_quad = [&](int k, long long q) {
        std::array<long long, 6> rest = w;
        for (int e = 0; e < 6; ++e) {
            if (k >= 0 && quad_crosses(k, e)) rest[static_cast<std::size_t>(e)] -= q;
            if (rest[static_cast<std::size_t>(e)] < 0) return;
        }
        // triangle coordinates from the corner sums at vertices 0,1,2
        const long long twice0 = rest[0] + rest[1] - rest[3];
        if (twice0 < 0 || twice0 % 2) return;
        TetCoords c;
        c.tri[0] = twice0 / 2;
        c.tri[1] = rest[0] - c.tri[0];
        c.tri[2] = rest[1] - c.tri[0];
        c.tri[3] = rest[2] - c.tri[0];
        for (long long t : c.tri)
            if (t < 0) return;
        if (k >= 0) c.quad[static_cast<std::size_t>(k)] = q;
        for (int e = 0; e < 6; ++e) {
            const int a = kEdgeVerts[static_cast<std::size_t>(e)][0];
            const int b = kEdgeVerts[static_cast<std::size_t>(e)][1];
            if (c.tri[static_cast<std::size_t>(a)] + c.tri[static_cast<std::size_t>(b)] !=
                rest[static_cast<std::size_t>(e)])
                return;
        }
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    try_quad(-1, 0);
    const long long maxW = *std::max_element(w.begin(), w.end());
    for (int k = 0; k < 3; ++k)
        for (long long q = 1; q <= maxW; ++q) try_quad(k, q);
    return out;
}

// The canonical realization: fewest quads, then lowest quad type.
std::optional<TetCoords> solve_tet(const std::array<long long, 6>& w) {
    std::vector<TetCoords> sols = tet_solutions(w);
    if (sols.empty()) return std::nullopt;
    return *std::min_element(sols.begin(), sols.end(), [](const TetCoords& x, const TetCoords& y) {
        const long long qx = x.quad[0] + x.quad[1] + x.quad[2];
        const long long qy = y.quad[0] + y.quad[1] + y.quad[2];
        if (qx != qy) return qx < qy;
        return x.quad < y.quad;
    });
}

std::array<long long, 6> slot_weights(const Triangulation& tri, const std::vector<long long>& w,
                                      int tet) {
    std::array<long long, 6> out{};
    for (int e = 0; e < 6; ++e) {
        const int a = kEdgeVerts[static_cast<std::size_t>(e)][0];
        const int b = kEdgeVerts[static_cast<std::size_t>(e)][1];
        out[static_cast<std::size_t>(e)] = w[static_cast<std::size_t>(tri.edge_class(tet, a, b))];
    }
    return out;
}

NormalSurface compress_common(const Triangulation& tri, const NormalSurface& s, const Cluster& k,
                              const std::vector<int>& bustEdges) {
    const std::vector<long long> w = edge_weights(tri, s);
    for (int e : bustEdges)
        if (w[static_cast<std::size_t>(e)] != 0)
            throw ClusterMismatch("busted edge already has nonzero weight");
    for (int t : k.tets) {
        const std::array<long long, 6> tw = slot_weights(tri, w, t);
        for (long long x : tw)
            if (x > 1) throw ClusterMismatch("surface inside the cluster is not canonical");
        const std::optional<TetCoords> expect = solve_tet(tw);
        if (!expect) throw ClusterMismatch("no canonical pattern for the cluster weights");
        const std::size_t ut = static_cast<std::size_t>(t);
        if (s.tri[ut] != expect->tri || s.quad[ut] != expect->quad)
            throw ClusterMismatch("surface differs from the canonical pattern inside the cluster");
    }
    std::vector<long long> w2 = w;
    for (int e : bustEdges) w2[static_cast<std::size_t>(e)] = 2;
    NormalSurface out = s;
    for (int t : k.tets) {
        const std::optional<TetCoords> coords = solve_tet(slot_weights(tri, w2, t));
        if (!coords) throw ClusterMismatch("post-surgery weights admit no normal pattern");
        out.tri[static_cast<std::size_t>(t)] = coords->tri;
        out.quad[static_cast<std::size_t>(t)] = coords->quad;
    }
    check_matching(tri, out);
    return out;
}

// The tets of the cluster containing a given edge class.
std::set<int> tets_with_edge(const Triangulation& tri, const Cluster& k, int edge) {
    std::set<int> out;
    for (int t : k.tets)
        for (int e = 0; e < 6; ++e) {
            const int a = kEdgeVerts[static_cast<std::size_t>(e)][0];
            const int b = kEdgeVerts[static_cast<std::size_t>(e)][1];
            if (tri.edge_class(t, a, b) == edge) out.insert(t);
        }
    return out;
}

long long cluster_compressions(ClusterKind kind) {
    return kind == ClusterKind::Posse11 ? 2 : 1;
}

NormalSurface compress_cluster(const Triangulation& tri, const NormalSurface& s, const Cluster& k) {
    switch (k.kind) {
        case ClusterKind::Isolated: return compress_isolated(tri, s, k);
        case ClusterKind::Posse11: return compress_posse11(tri, s, k);
        case ClusterKind::Posse10: return compress_posse10(tri, s, k);
    }
    throw TriError("internal: unknown cluster kind");
}

} // namespace

NormalSurface compress_isolated(const Triangulation& tri, const NormalSurface& s, const Cluster& k) {
    if (k.kind != ClusterKind::Isolated || k.rogueEdges.size() != 1)
        throw ClusterMismatch("not a cluster around an isolated rogue edge");
    return compress_common(tri, s, k, k.rogueEdges);
}

NormalSurface compress_posse11(const Triangulation& tri, const NormalSurface& s, const Cluster& k) {
    if (k.kind != ClusterKind::Posse11 || k.rogueEdges.size() != 3)
        throw ClusterMismatch("not an 11-tet posse cluster");
    return compress_common(tri, s, k, k.rogueEdges);
}

NormalSurface compress_posse10(const Triangulation& tri, const NormalSurface& s, const Cluster& k) {
    if (k.kind != ClusterKind::Posse10 || k.rogueEdges.size() != 3)
        throw ClusterMismatch("not a 10-tet posse cluster");
    // the doubled middle tet carries two of the three rogue edges; the
    // compression disk joins the remaining ring with the lower-indexed of
    // those two
    int doubled = -1;
    for (int t : k.tets) {
        int count = 0;
        for (int e : k.rogueEdges)
            if (tets_with_edge(tri, k, e).count(t)) ++count;
        if (count == 2) {
            doubled = t;
            break;
        }
    }
    if (doubled < 0) throw ClusterMismatch("no tet carries exactly two rogue edges");
    int apart = -1;
    std::vector<int> shared;
    for (int e : k.rogueEdges) {
        if (tets_with_edge(tri, k, e).count(doubled))
            shared.push_back(e);
        else
            apart = e;
    }
    if (apart < 0 || shared.size() != 2)
        throw ClusterMismatch("rogue edges do not fit the 10-tet pattern");
    std::vector<int> bust{apart, std::min(shared[0], shared[1])};
    std::sort(bust.begin(), bust.end());
    return compress_common(tri, s, k, bust);
}

BustOutcome bust_all(const Triangulation& tri, const std::vector<NormalSurface>& surfaces,
                     const ClusterSet& clusters) {
    if (surfaces.size() != 1 && surfaces.size() != 3)
        throw TriError("bust_all expects one surface (rank 1) or three (rank 2)");
    BustOutcome out;
    out.surfaces = surfaces;
    out.compressionsPer.assign(surfaces.size(), 0);
    for (int ci : clusters.selected) {
        const Cluster& k = clusters.clusters[static_cast<std::size_t>(ci)];
        const long long n = cluster_compressions(k.kind);
        if (surfaces.size() == 1) {
            out.surfaces[0] = compress_cluster(tri, out.surfaces[0], k);
            out.compressionsPer[0] += n;
            out.compressions += n;
        } else {
            for (int color : k.colors) {
                if (color < 1 || color > 3) throw TriError("rank-2 cluster without colors");
                const std::size_t i = static_cast<std::size_t>(color - 1);
                out.surfaces[i] = compress_cluster(tri, out.surfaces[i], k);
                out.compressionsPer[i] += n;
                out.compressions += n;
            }
        }
        ++out.kappaPrime;
    }
    return out;
}

namespace {

void gate_entry(const Triangulation& tri) {
    if (!tri.closed()) throw NotClosed("certificate requires a closed triangulation");
    if (tri.vertex_count() != 1) throw NotOneVertex("certificate requires a one-vertex triangulation");
    if (!tri.orientable()) throw NotOrientable("certificate requires an orientable triangulation");
}

ChainItem make_item(std::string name, long long lhs3, long long rhs3, bool equality) {
    ChainItem it;
    it.name = std::move(name);
    it.lhs3 = lhs3;
    it.rhs3 = rhs3;
    it.equality = equality;
    it.holds = equality ? lhs3 == rhs3 : lhs3 >= rhs3;
    return it;
}

ChainItem gated_item(std::string name, std::string gate) {
    ChainItem it;
    it.name = std::move(name);
    it.applicable = false;
    it.holds = true;
    it.gate = std::move(gate);
    return it;
}

void finish(BoundCertificate& cert) {
    for (const ChainItem& it : cert.chain)
        if (it.applicable && !it.holds) cert.hypothesisFlags.push_back(it.name);
    cert.chainConsistent = cert.hypothesisFlags.empty();
}

long long rogue_f3(const EdgeLedger& led) {
    long long sum = 0;
    for (const EdgeEntry& e : led.entries)
        if (e.decency == Decency::Rogue) sum += e.f3;
    return sum;
}

// The cluster-dependent part shared by both ranks: profiles, clusters,
// busting, and the inequality items. Returns the cluster set when it was
// computable.
std::optional<ClusterSet> chain_clusters(const Triangulation& tri, EdgeLedger& led,
                                         const IdentityReport& rep,
                                         std::vector<NormalSurface>& surfaces,
                                         BoundCertificate& cert) {
    static const char* kClusterNames[] = {
        "even-edge sum dominates adult g-sum", "adult g-sum equals adult f-sum",
        "adult f-sum dominates rogue f-sum",   "rogue f-sum equals minus cluster count",
        "independent clusters cover a quarter", "busting raises chi by two per compression",
    };
    std::string gate;
    ClusterSet cs;
    try {
        insolvency_profile(led, tri);
        cs = build_clusters(led, tri);
    } catch (const ProfileMismatch& ex) {
        gate = std::string("cluster hypotheses not met: ") + ex.what();
    }
    if (!gate.empty()) {
        for (const char* n : kClusterNames) cert.chain.push_back(gated_item(n, gate));
        cert.hypothesisFlags.push_back(gate);
        return std::nullopt;
    }
    const long long rogues3 = rogue_f3(led);
    cert.chain.push_back(make_item(kClusterNames[0], rep.sumI3, rep.sumG3, false));
    cert.chain.push_back(make_item(kClusterNames[1], rep.sumG3, rep.sumF3, true));
    cert.chain.push_back(make_item(kClusterNames[2], rep.sumF3, rogues3, false));
    cert.chain.push_back(make_item(kClusterNames[3], rogues3, -3 * cs.kappa, true));
    cert.chain.push_back(make_item(kClusterNames[4], 3 * 4 * cs.kappaPrime, 3 * cs.kappa, false));
    try {
        const BustOutcome bo = bust_all(tri, surfaces, cs);
        for (std::size_t i = 0; i < surfaces.size(); ++i) {
            const long long after = euler_char(tri, bo.surfaces[i]);
            cert.chain.push_back(make_item(
                kClusterNames[5], 3 * after,
                3 * (cert.chiBefore[i] + 2 * bo.compressionsPer[i]), true));
            cert.chiAfter.push_back(after);
        }
        surfaces = bo.surfaces;
    } catch (const ClusterMismatch& ex) {
        const std::string g = std::string("busting precondition failed: ") + ex.what();
        cert.chain.push_back(gated_item(kClusterNames[5], g));
        cert.hypothesisFlags.push_back(g);
        cert.chiAfter = cert.chiBefore;
    }
    return cs;
}

} // namespace

BoundCertificate certify(const Triangulation& tri, const Z2Class& alpha) {
    gate_entry(tri);
    BoundCertificate cert;
    cert.rank = 1;
    cert.tetCount = tri.tet_count();
    const ColoringR1 c = color_rank1(tri, alpha);
    NormalSurface s = canonical_surface(tri, c);
    const long long chi = euler_char(tri, s);
    cert.chiBefore = {chi};
    const std::vector<DetectedLst> inv = detect_max_lsts(tri);
    EdgeLedger led = classify_edges(tri, c, inv);
    counting_values(led);
    const IdentityReport rep = global_sums(led);
    const long long T = cert.tetCount;
    cert.chain.push_back(
        make_item("surface identity 2T-4+4chi equals even-edge sum", 3 * (2 * T - 4 + 4 * chi),
                  rep.sumI3, true));
    cert.chain.push_back(make_item("adjustments cancel", rep.sumA3, 0, true));
    if (is_layered_lens_space(tri)) {
        static const char* kNames[] = {
            "even-edge sum dominates adult g-sum", "adult g-sum equals adult f-sum",
            "adult f-sum dominates rogue f-sum",   "rogue f-sum equals minus cluster count",
            "independent clusters cover a quarter", "busting raises chi by two per compression",
            "certified bound consistency",
        };
        for (const char* n : kNames)
            cert.chain.push_back(gated_item(n, "layered lens space triangulation"));
        cert.chiAfter = cert.chiBefore;
    } else {
        std::vector<NormalSurface> surfaces{std::move(s)};
        const std::optional<ClusterSet> cs = chain_clusters(tri, led, rep, surfaces, cert);
        if (cs) {
            cert.kappa = cs->kappa;
            cert.kappaPrime = cs->kappaPrime;
        }
        const long long u2 = -2 * chi - cert.kappa;
        cert.chain.push_back(make_item("certified bound consistency",
                                       3 * (2 * T - 4 - 2 * u2), 3 * cert.kappa, false));
        cert.chain.push_back(make_item("cluster count nonnegative", 3 * cert.kappa, 0, false));
    }
    cert.normUpperBound2 = {-2 * chi - cert.kappa};
    cert.claimedBound2 = 4 + cert.normUpperBound2[0];
    finish(cert);
    return cert;
}

BoundCertificate certify(const Triangulation& tri, const Z2Subgroup2& sub) {
    gate_entry(tri);
    BoundCertificate cert;
    cert.rank = 2;
    cert.tetCount = tri.tet_count();
    const ColoringR2 c = color_rank2(tri, sub);
    std::vector<NormalSurface> surfaces;
    long long chiSum = 0;
    for (int i = 1; i <= 3; ++i) {
        const ColoringR1 ri = restrict_rank1(tri, c, i);
        surfaces.push_back(canonical_surface(tri, ri));
        cert.chiBefore.push_back(euler_char(tri, surfaces.back()));
        chiSum += cert.chiBefore.back();
    }
    const std::vector<DetectedLst> inv = detect_max_lsts(tri);
    EdgeLedger led = classify_edges(tri, c, inv);
    counting_values(led);
    const IdentityReport rep = global_sums(led);
    const long long T = cert.tetCount;
    cert.chain.push_back(
        make_item("surface identity 2T-4+2 sum chi equals even-edge sum",
                  3 * (2 * T - 4 + 2 * chiSum), rep.sumI3, true));
    cert.chain.push_back(make_item("adjustments cancel", rep.sumA3, 0, true));
    const std::optional<ClusterSet> cs = chain_clusters(tri, led, rep, surfaces, cert);
    if (cs) {
        cert.kappa = cs->kappa;
        cert.kappaPrime = cs->kappaPrime;
        cert.kappaI = cs->kappaI;
        cert.chain.push_back(make_item("cluster count equals half the color sum", 3 * 2 * cs->kappa,
                                       3 * (cs->kappaI[0] + cs->kappaI[1] + cs->kappaI[2]), true));
        // per-color independent coverage
        std::array<long long, 3> kpi{};
        for (int ci : cs->selected)
            for (int color : cs->clusters[static_cast<std::size_t>(ci)].colors)
                if (color >= 1 && color <= 3) ++kpi[static_cast<std::size_t>(color - 1)];
        for (int i = 0; i < 3; ++i)
            cert.chain.push_back(make_item("independent clusters cover a quarter per color",
                                           3 * 4 * kpi[static_cast<std::size_t>(i)],
                                           3 * cs->kappaI[static_cast<std::size_t>(i)], false));
    }
    long long u2sum = 0;
    for (int i = 0; i < 3; ++i) {
        const long long u2 = -2 * cert.chiBefore[static_cast<std::size_t>(i)] -
                             cert.kappaI[static_cast<std::size_t>(i)];
        cert.normUpperBound2.push_back(u2);
        u2sum += u2;
    }
    cert.claimedBound2 = 4 + u2sum;
    cert.chain.push_back(make_item("certified bound consistency", 3 * (2 * T - 4) - 3 * u2sum,
                                   3 * cert.kappa, false));
    cert.chain.push_back(make_item("cluster count nonnegative", 3 * cert.kappa, 0, false));
    finish(cert);
    return cert;
}

} // namespace tricert
