#include <doctest.h>

#include "support.hpp"
#include "tricert/fixtures.hpp"
#include "tricert/flips.hpp"
#include "tricert/isomorphism.hpp"

using namespace tricert;

namespace {

// The class making the fixture's central edge an insolvent degree-4 adult.
Z2Class seed_class(const ClusterFixture& fx) {
    for (const Z2Class& a : enumerate_rank1(fx.tri)) {
        if (a.edgeBits[static_cast<std::size_t>(fx.coreEdges[0])]) continue;
        ColoringR1 c;
        try {
            c = color_rank1(fx.tri, a);
        } catch (const TriError&) {
            continue;
        }
        const auto inv = detect_max_lsts(fx.tri);
        EdgeLedger led = classify_edges(fx.tri, c, inv);
        counting_values(led);
        const EdgeEntry* en = led.entry(fx.coreEdges[0]);
        if (en && !en->solvent && en->degree == 4) return a;
    }
    FAIL("no class makes the central edge an insolvent degree-4 adult");
    throw TriError("unreachable");
}

} // namespace

TEST_CASE("flippable edge inventory") {
    // every edge of a layered lens space lies in too few distinct tets
    CHECK(flippable_edges(build_lens(8, 3)).empty());
    CHECK(flippable_edges(build_lens(12, 5)).empty());
    // boundary edges never qualify
    CHECK(flippable_edges(testsupport::free_simplex()).empty());
    // the degree-4 ring fixture offers exactly its central edge
    const ClusterFixture fx = insolvent_deg4_fixture();
    const auto fl = flippable_edges(fx.tri);
    CHECK(fl == std::vector<int>{fx.coreEdges[0]});
}

TEST_CASE("a flip preserves size, vertices and integral homology") {
    const ClusterFixture fx = insolvent_deg4_fixture();
    for (int diagonal : {0, 1}) {
        const FlipMove mv = edge_flip(fx.tri, fx.coreEdges[0], diagonal);
        CHECK(mv.tri.tet_count() == fx.tri.tet_count());
        CHECK(mv.tri.vertex_count() == fx.tri.vertex_count());
        CHECK(mv.tri.edge_count() == fx.tri.edge_count());
        CHECK(mv.tri.closed());
        CHECK(integral_h1(mv.tri) == integral_h1(fx.tri));
        // the ancestor map covers everything except the created diagonal
        for (int e = 0; e < mv.tri.edge_count(); ++e) {
            if (e == mv.createdEdge)
                CHECK(mv.oldEdgeClass[static_cast<std::size_t>(e)] == -1);
            else
                CHECK(mv.oldEdgeClass[static_cast<std::size_t>(e)] >= 0);
        }
    }
    CHECK_THROWS_AS(edge_flip(fx.tri, fx.coreEdges[0] == 0 ? 1 : 0, 0), NotFlippable);
}

TEST_CASE("flipping the created edge back yields an isomorphic triangulation") {
    const ClusterFixture fx = insolvent_deg4_fixture();
    for (int diagonal : {0, 1}) {
        const FlipMove mv = edge_flip(fx.tri, fx.coreEdges[0], diagonal);
        bool recovered = false;
        for (int back : {0, 1})
            if (isomorphic(edge_flip(mv.tri, mv.createdEdge, back).tri, fx.tri)) recovered = true;
        CHECK(recovered);
    }
}

TEST_CASE("class transport stays a cocycle and keeps surviving parities") {
    const ClusterFixture fx = insolvent_deg4_fixture();
    const FlipMove mv = edge_flip(fx.tri, fx.coreEdges[0], 0);
    for (const Z2Class& a : enumerate_rank1(fx.tri)) {
        const Z2Class ta = transport_class(mv, a);
        CHECK(is_cocycle(mv.tri, ta));
        for (int e = 0; e < mv.tri.edge_count(); ++e)
            if (e != mv.createdEdge)
                CHECK(ta.edgeBits[static_cast<std::size_t>(e)] ==
                      a.edgeBits[static_cast<std::size_t>(
                          mv.oldEdgeClass[static_cast<std::size_t>(e)])]);
    }
}

TEST_CASE("normalization clears the insolvent degree-4 ring") {
    const ClusterFixture fx = insolvent_deg4_fixture();
    const Z2Class a = seed_class(fx);
    const NormalizeResult nr = normalize_insolvent_deg4(fx.tri, a);
    CHECK(nr.flips >= 1);
    CHECK(nr.tri.tet_count() == fx.tri.tet_count());
    CHECK(nr.tri.vertex_count() == 1);
    CHECK(integral_h1(nr.tri) == integral_h1(fx.tri));
    CHECK(is_cocycle(nr.tri, nr.alpha));
    // strictly decreasing lexicographic potential
    REQUIRE(nr.potentialTrace.size() == static_cast<std::size_t>(nr.flips) + 1);
    for (std::size_t i = 1; i < nr.potentialTrace.size(); ++i)
        CHECK(nr.potentialTrace[i] < nr.potentialTrace[i - 1]);
    // no insolvent degree-4 adult remains
    const ColoringR1 c = color_rank1(nr.tri, nr.alpha);
    EdgeLedger led = classify_edges(nr.tri, c, detect_max_lsts(nr.tri));
    counting_values(led);
    for (const EdgeEntry& en : led.entries)
        if (en.role == EdgeRole::Adult && en.degree == 4) CHECK(en.solvent);
}

TEST_CASE("normalization is the identity without insolvent degree-4 edges") {
    const Triangulation t3 = three_torus();
    for (const Z2Class& a : enumerate_rank1(t3)) {
        const NormalizeResult nr = normalize_insolvent_deg4(t3, a);
        CHECK(nr.flips == 0);
        CHECK(isomorphic(nr.tri, t3));
        CHECK(nr.alpha == a);
    }
}
