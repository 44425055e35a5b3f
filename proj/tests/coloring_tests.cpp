#include <doctest.h>

#include "support.hpp"
#include "tricert/coloring.hpp"
#include "tricert/layered.hpp"

using namespace tricert;

namespace {

// number of odd edges in face opposite vertex f
int face_odd_count(const std::array<std::uint8_t, 6>& odd, int f) {
    int n = 0;
    for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        for (int b = a + 1; b < 4; ++b) {
            if (b == f) continue;
            n += odd[static_cast<std::size_t>(edge_index(a, b))];
        }
    }
    return n;
}

} // namespace

TEST_CASE("single-tet parity patterns: exactly the 8 face-consistent ones type") {
    int nE = 0, nT = 0, nQ = 0, valid = 0;
    for (int mask = 0; mask < 64; ++mask) {
        std::array<std::uint8_t, 6> odd{};
        for (int e = 0; e < 6; ++e) odd[static_cast<std::size_t>(e)] = (mask >> e) & 1;
        bool facesOk = true;
        for (int f = 0; f < 4; ++f)
            if (face_odd_count(odd, f) % 2 != 0) facesOk = false;
        try {
            int tv = -1, qt = -1;
            const TetTypeR1 ty = classify_tet_parities(odd, &tv, &qt);
            CHECK(facesOk);
            ++valid;
            if (ty == TetTypeR1::E) ++nE;
            if (ty == TetTypeR1::T) {
                ++nT;
                // triangle sits at the common vertex of the odd edges
                for (int e = 0; e < 6; ++e)
                    if (odd[static_cast<std::size_t>(e)])
                        CHECK((kEdgeVerts[static_cast<std::size_t>(e)][0] == tv ||
                               kEdgeVerts[static_cast<std::size_t>(e)][1] == tv));
            }
            if (ty == TetTypeR1::Q) {
                ++nQ;
                CHECK(odd[static_cast<std::size_t>(qt)] == 0);
                CHECK(odd[static_cast<std::size_t>(5 - qt)] == 0);
            }
        } catch (const CocycleViolation&) {
            CHECK_FALSE(facesOk);
        }
    }
    CHECK(valid == 8);
    CHECK(nE == 1);
    CHECK(nT == 4);
    CHECK(nQ == 3);
}

TEST_CASE("single-tet label patterns and their rank-1 restrictions") {
    int valid = 0;
    int byType[5] = {0, 0, 0, 0, 0};
    for (int code = 0; code < 4096; ++code) {
        std::array<std::uint8_t, 6> label{};
        int c = code;
        for (int e = 0; e < 6; ++e, c /= 4) label[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(c % 4);
        TetTypeR2 ty;
        try {
            ty = classify_tet_labels(label);
        } catch (const CocycleViolation&) {
            continue;
        }
        ++valid;
        ++byType[static_cast<int>(ty)];

        // restriction triple: classify under each alpha_i and compare
        std::array<TetTypeR1, 3> restr{};
        for (int i = 1; i <= 3; ++i) {
            std::array<std::uint8_t, 6> odd{};
            for (int e = 0; e < 6; ++e)
                odd[static_cast<std::size_t>(e)] =
                    (label[static_cast<std::size_t>(e)] != 0 && label[static_cast<std::size_t>(e)] != i);
            restr[static_cast<std::size_t>(i - 1)] = classify_tet_parities(odd);
        }
        int re = 0, rt = 0, rq = 0;
        for (TetTypeR1 r : restr) {
            if (r == TetTypeR1::E) ++re;
            if (r == TetTypeR1::T) ++rt;
            if (r == TetTypeR1::Q) ++rq;
        }
        switch (ty) {
            case TetTypeR2::E: CHECK(re == 3); break;
            case TetTypeR2::TT: CHECK((re == 1 && rt == 2)); break;
            case TetTypeR2::QQ: CHECK((re == 1 && rq == 2)); break;
            case TetTypeR2::QTT: CHECK((rt == 2 && rq == 1)); break;
            case TetTypeR2::QQQ: CHECK(rq == 3); break;
        }
    }
    CHECK(valid == 64);
    CHECK(byType[static_cast<int>(TetTypeR2::E)] == 1);
    CHECK(byType[static_cast<int>(TetTypeR2::TT)] == 12);
    CHECK(byType[static_cast<int>(TetTypeR2::QQ)] == 9);
    CHECK(byType[static_cast<int>(TetTypeR2::QTT)] == 36);
    CHECK(byType[static_cast<int>(TetTypeR2::QQQ)] == 6);
}

TEST_CASE("zero class colors everything even") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        if (tri.vertex_count() != 1) continue;
        Z2Class zero{std::vector<std::uint8_t>(static_cast<std::size_t>(tri.edge_count()), 0)};
        const ColoringR1 c = color_rank1(tri, zero);
        CHECK(c.countE == tri.tet_count());
        CHECK(c.countT == 0);
        CHECK(c.countQ == 0);
        long long evenEdges = 0;
        for (const auto& [d, n] : c.evenEdgeDegreeCounts) evenEdges += n;
        CHECK(evenEdges == tri.edge_count());
    }
}

TEST_CASE("lens space colorings are total and have odd edges") {
    for (long long p : {4, 6, 8, 10}) {
        const Triangulation lens = build_lens(p, 1);
        const auto classes = enumerate_rank1(lens);
        REQUIRE(classes.size() == 1);
        const ColoringR1 c = color_rank1(lens, classes[0]);
        CHECK(c.countE + c.countT + c.countQ == lens.tet_count());
        long long nOdd = 0;
        for (auto b : c.edgeOdd) nOdd += b;
        CHECK(nOdd >= 1);
        for (int t = 0; t < lens.tet_count(); ++t) {
            CHECK((c.tetType[static_cast<std::size_t>(t)] == TetTypeR1::T) == (c.triangleVertex[static_cast<std::size_t>(t)] >= 0));
            CHECK((c.tetType[static_cast<std::size_t>(t)] == TetTypeR1::Q) == (c.quadType[static_cast<std::size_t>(t)] >= 0));
        }
        // t-corner count over even edges is three per t-tet
        long long tCorners = 0;
        for (int t = 0; t < lens.tet_count(); ++t) {
            if (c.tetType[static_cast<std::size_t>(t)] != TetTypeR1::T) continue;
            for (int e = 0; e < 6; ++e) {
                const int cls = lens.edge_class(t, kEdgeVerts[static_cast<std::size_t>(e)][0],
                                                kEdgeVerts[static_cast<std::size_t>(e)][1]);
                if (!c.edgeOdd[static_cast<std::size_t>(cls)]) ++tCorners;
            }
        }
        CHECK(tCorners == 3 * c.countT);
    }
}

TEST_CASE("rank-2 colorings on the census and their restrictions") {
    bool sawRank2 = false;
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        if (tri.vertex_count() != 1) continue;
        if (h1_z2_basis(tri).size() < 2) continue;
        sawRank2 = true;
        for (const Z2Subgroup2& sub : enumerate_rank2(tri)) {
            const ColoringR2 c = color_rank2(tri, sub);
            CHECK(c.countE + c.countTT + c.countQQ + c.countQTT + c.countQQQ == tri.tet_count());
            for (int i = 1; i <= 3; ++i) {
                const ColoringR1 r = restrict_rank1(tri, c, i);
                for (int e = 0; e < tri.edge_count(); ++e) {
                    const bool even = c.edgeLabel[static_cast<std::size_t>(e)] == 0 ||
                                      c.edgeLabel[static_cast<std::size_t>(e)] == i;
                    CHECK(r.edgeOdd[static_cast<std::size_t>(e)] == (even ? 0 : 1));
                }
            }
            // per-edge tallies over H-even edges: 3 tt-corners per TT tet,
            // one H-even edge per QTT tet
            long long ttCorners = 0, qttEdges = 0;
            for (int t = 0; t < tri.tet_count(); ++t) {
                for (int e = 0; e < 6; ++e) {
                    const int cls = tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(e)][0],
                                                   kEdgeVerts[static_cast<std::size_t>(e)][1]);
                    if (c.edgeLabel[static_cast<std::size_t>(cls)] != 0) continue;
                    if (c.tetType[static_cast<std::size_t>(t)] == TetTypeR2::TT) ++ttCorners;
                    if (c.tetType[static_cast<std::size_t>(t)] == TetTypeR2::QTT) ++qttEdges;
                }
            }
            CHECK(ttCorners == 3 * c.countTT);
            CHECK(qttEdges == c.countQTT);
        }
    }
    CHECK(sawRank2);
}

TEST_CASE("coloring rejects bad input") {
    CHECK_THROWS_AS(color_rank1(testsupport::free_simplex(), Z2Class{{0, 0, 0, 0, 0, 0}}), NotClosed);
    const Triangulation lens = build_lens(5, 1);
    // L(5,1): no nonzero Z/2 class, so any nonzero bit vector fails
    Z2Class notCocycle{std::vector<std::uint8_t>(static_cast<std::size_t>(lens.edge_count()), 0)};
    notCocycle.edgeBits[0] = 1;
    CHECK_THROWS_AS(color_rank1(lens, notCocycle), CocycleViolation);

    // malformed subgroup: third class is not the sum
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        if (tri.vertex_count() != 1 || h1_z2_basis(tri).size() < 2) continue;
        const auto classes = enumerate_rank1(tri);
        Z2Subgroup2 bad{{classes[0], classes[1], classes[0]}};
        CHECK_THROWS_AS(color_rank2(tri, bad), CocycleViolation);
        break;
    }
}
