#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "tricert/busting.hpp"
#include "tricert/fixtures.hpp"

using namespace tricert;

namespace {

struct FixtureRun {
    Z2Class alpha;
    ColoringR1 coloring;
    EdgeLedger led;
    ClusterSet clusters;
    NormalSurface surface;
};

FixtureRun cluster_run(const ClusterFixture& fx) {
    for (const Z2Class& a : enumerate_rank1(fx.tri)) {
        bool even = true;
        for (int e : fx.coreEdges)
            if (a.edgeBits[static_cast<std::size_t>(e)]) even = false;
        if (!even) continue;
        const ColoringR1 c = color_rank1(fx.tri, a);
        const auto inv = detect_max_lsts(fx.tri);
        EdgeLedger led = classify_edges(fx.tri, c, inv);
        counting_values(led);
        bool allRogue = true;
        for (int e : fx.coreEdges) {
            const EdgeEntry* en = led.entry(e);
            if (!en || en->solvent || en->decency != Decency::Rogue) allRogue = false;
        }
        if (!allRogue) continue;
        insolvency_profile(led, fx.tri);
        ClusterSet cs = build_clusters(led, fx.tri);
        NormalSurface s = canonical_surface(fx.tri, c);
        return {a, c, std::move(led), std::move(cs), std::move(s)};
    }
    FAIL("no class turns the fixture's core edges rogue");
    throw TriError("unreachable");
}

// Compression invariants shared by all three surgeries: matching equations,
// weights change 0 -> 2 on exactly the busted edges, nearly canonical
// preserved, and the exact chi step.
void check_compression(const Triangulation& tri, const Z2Class& alpha, const NormalSurface& before,
                       const NormalSurface& after, const std::vector<int>& bustedEdges,
                       long long dchi) {
    check_matching(tri, after);
    CHECK(euler_char(tri, after) - euler_char(tri, before) == dchi);
    CHECK(is_nearly_canonical(tri, after, alpha));
    const auto w0 = edge_weights(tri, before);
    const auto w1 = edge_weights(tri, after);
    for (std::size_t e = 0; e < w0.size(); ++e) {
        const bool busted =
            std::find(bustedEdges.begin(), bustedEdges.end(), static_cast<int>(e)) !=
            bustedEdges.end();
        if (busted) {
            CHECK(w0[e] == 0);
            CHECK(w1[e] == 2);
        } else {
            CHECK(w0[e] == w1[e]);
        }
    }
}

} // namespace

TEST_CASE("isolated cluster compression: annulus to two disks") {
    const ClusterFixture fx = bipyramid_fixture();
    const FixtureRun run = cluster_run(fx);
    REQUIRE(run.clusters.clusters.size() == 1);
    const Cluster& k = run.clusters.clusters[0];
    const NormalSurface after = compress_isolated(fx.tri, run.surface, k);
    check_compression(fx.tri, run.alpha, run.surface, after, k.rogueEdges, 2);
    CHECK_THROWS_AS(compress_isolated(fx.tri, after, k), ClusterMismatch);
}

TEST_CASE("11-tet posse compression: pair of pants to three disks") {
    const ClusterFixture fx = posse11_fixture();
    const FixtureRun run = cluster_run(fx);
    REQUIRE(run.clusters.clusters.size() == 1);
    const Cluster& k = run.clusters.clusters[0];
    REQUIRE(k.kind == ClusterKind::Posse11);
    const NormalSurface after = compress_posse11(fx.tri, run.surface, k);
    check_compression(fx.tri, run.alpha, run.surface, after, k.rogueEdges, 4);
    CHECK_THROWS_AS(compress_posse11(fx.tri, after, k), ClusterMismatch);
}

TEST_CASE("10-tet posse compression busts the lowest-index disk only") {
    const ClusterFixture fx = posse10_fixture();
    const FixtureRun run = cluster_run(fx);
    REQUIRE(run.clusters.clusters.size() == 1);
    const Cluster& k = run.clusters.clusters[0];
    REQUIRE(k.kind == ClusterKind::Posse10);
    const NormalSurface after = compress_posse10(fx.tri, run.surface, k);
    // exactly two of the three rogue edges change; they are determined by
    // the doubled middle tet and the lowest-index tie-break
    const auto w0 = edge_weights(fx.tri, run.surface);
    const auto w1 = edge_weights(fx.tri, after);
    std::vector<int> busted;
    for (int e : k.rogueEdges)
        if (w1[static_cast<std::size_t>(e)] != w0[static_cast<std::size_t>(e)]) busted.push_back(e);
    CHECK(busted.size() == 2);
    check_compression(fx.tri, run.alpha, run.surface, after, busted, 2);
    // compressing along the second disk afterwards is impossible
    CHECK_THROWS_AS(compress_posse10(fx.tri, after, k), ClusterMismatch);
}

TEST_CASE("rank-2 twin compression touches exactly the two cluster colors") {
    const ClusterFixture fx = rank2_twin_fixture();
    const auto subs = enumerate_rank2(fx.tri);
    REQUIRE(subs.size() == 1);
    const ColoringR2 c = color_rank2(fx.tri, subs[0]);
    const auto inv = detect_max_lsts(fx.tri);
    EdgeLedger led = classify_edges(fx.tri, c, inv);
    counting_values(led);
    insolvency_profile(led, fx.tri);
    const ClusterSet cs = build_clusters(led, fx.tri);
    REQUIRE(cs.clusters.size() == 1);
    const Cluster& k = cs.clusters[0];
    REQUIRE((k.colors[0] == 1 && k.colors[1] == 3));
    std::vector<NormalSurface> before;
    for (int i = 1; i <= 3; ++i)
        before.push_back(canonical_surface(fx.tri, restrict_rank1(fx.tri, c, i)));
    const BustOutcome bo = bust_all(fx.tri, before, cs);
    REQUIRE(bo.surfaces.size() == 3);
    // the two touched colors compress once each; the third is untouched
    CHECK(bo.compressionsPer == std::vector<long long>{1, 0, 1});
    CHECK(bo.surfaces[1] == before[1]);
    for (int i : {0, 2}) {
        const auto si = static_cast<std::size_t>(i);
        check_matching(fx.tri, bo.surfaces[si]);
        CHECK(euler_char(fx.tri, bo.surfaces[si]) == euler_char(fx.tri, before[si]) + 2);
        CHECK(is_nearly_canonical(fx.tri, bo.surfaces[si], subs[0].classes[si]));
        const auto w0 = edge_weights(fx.tri, before[si]);
        const auto w1 = edge_weights(fx.tri, bo.surfaces[si]);
        for (std::size_t e = 0; e < w0.size(); ++e) {
            if (static_cast<int>(e) == fx.coreEdges[0]) {
                CHECK(w0[e] == 0);
                CHECK(w1[e] == 2);
            } else {
                CHECK(w0[e] == w1[e]);
            }
        }
    }
    // the closure is non-orientable by construction, so the certificate path
    // correctly refuses it
    CHECK_THROWS_AS(certify(fx.tri, subs[0]), NotOrientable);
}

TEST_CASE("kind dispatch rejects the wrong surgery") {
    const ClusterFixture fx = bipyramid_fixture();
    const FixtureRun run = cluster_run(fx);
    CHECK_THROWS_AS(compress_posse11(fx.tri, run.surface, run.clusters.clusters[0]),
                    ClusterMismatch);
    CHECK_THROWS_AS(compress_posse10(fx.tri, run.surface, run.clusters.clusters[0]),
                    ClusterMismatch);
}

TEST_CASE("bust_all compresses the selected independent subcollection") {
    for (const ClusterFixture& fx : {bipyramid_fixture(), posse11_fixture(), posse10_fixture()}) {
        const FixtureRun run = cluster_run(fx);
        const long long chi0 = euler_char(fx.tri, run.surface);
        const BustOutcome bo = bust_all(fx.tri, {run.surface}, run.clusters);
        REQUIRE(bo.surfaces.size() == 1);
        CHECK(bo.kappaPrime == run.clusters.kappaPrime);
        const long long chi1 = euler_char(fx.tri, bo.surfaces[0]);
        CHECK(chi1 == chi0 + 2 * bo.compressions);
        CHECK(is_nearly_canonical(fx.tri, bo.surfaces[0], run.alpha));
    }
}

TEST_CASE("bust_all with no clusters returns the surfaces unchanged") {
    const Triangulation t3 = three_torus();
    for (const Z2Class& a : enumerate_rank1(t3)) {
        const ColoringR1 c = color_rank1(t3, a);
        const auto inv = detect_max_lsts(t3);
        EdgeLedger led = classify_edges(t3, c, inv);
        counting_values(led);
        insolvency_profile(led, t3);
        const ClusterSet cs = build_clusters(led, t3);
        CHECK(cs.kappa == 0);
        const NormalSurface s = canonical_surface(t3, c);
        const BustOutcome bo = bust_all(t3, {s}, cs);
        CHECK(bo.compressions == 0);
        CHECK(bo.surfaces[0] == s);
    }
}

TEST_CASE("lens certificates: exact identities, gated cluster chain, no flags") {
    for (long long p = 4; p <= 20; p += 2) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Triangulation lens = build_lens(p, q);
            for (const Z2Class& a : enumerate_rank1(lens)) {
                const BoundCertificate bc = certify(lens, a);
                CHECK(bc.chainConsistent);
                CHECK(bc.hypothesisFlags.empty());
                CHECK(bc.kappa == 0);
                REQUIRE(bc.chain.size() >= 2);
                // the surface identity and the adjustment cancellation are
                // exact even where the cluster analysis does not apply
                CHECK(bc.chain[0].holds);
                CHECK(bc.chain[0].equality);
                CHECK(bc.chain[1].holds);
                bool sawGate = false;
                for (const ChainItem& it : bc.chain)
                    if (!it.applicable) {
                        sawGate = true;
                        CHECK(it.gate == "layered lens space triangulation");
                    }
                CHECK(sawGate);
            }
        }
    }
}

TEST_CASE("3-torus certificates hold at both ranks") {
    const Triangulation t3 = three_torus();
    for (const Z2Class& a : enumerate_rank1(t3)) {
        const BoundCertificate bc = certify(t3, a);
        CHECK(bc.chainConsistent);
        CHECK(bc.hypothesisFlags.empty());
        for (const ChainItem& it : bc.chain) {
            CHECK(it.applicable);
            CHECK(it.holds);
        }
    }
    for (const Z2Subgroup2& sub : enumerate_rank2(t3)) {
        const BoundCertificate bc = certify(t3, sub);
        CHECK(bc.rank == 2);
        CHECK(bc.chainConsistent);
        CHECK(bc.hypothesisFlags.empty());
        CHECK(2 * bc.kappa == bc.kappaI[0] + bc.kappaI[1] + bc.kappaI[2]);
    }
}

TEST_CASE("certify rejects bad input") {
    CHECK_THROWS_AS(certify(testsupport::free_simplex(), Z2Class{{0, 0, 0}}), NotClosed);
    // a certificate needs an orientable manifold; the 10-tet posse closure
    // is non-orientable by construction
    const ClusterFixture fx = posse10_fixture();
    CHECK_THROWS_AS(certify(fx.tri, enumerate_rank1(fx.tri)[0]), NotOrientable);
}
