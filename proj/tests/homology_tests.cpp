#include <doctest.h>

#include "support.hpp"
#include "tricert/homology.hpp"

using namespace tricert;

TEST_CASE("smith invariants on known matrices") {
    CHECK(smith_invariants({{2, 4}, {4, 4}}) == std::vector<long long>{2, 4});
    CHECK(smith_invariants({{1, 0}, {0, 1}}) == std::vector<long long>{1, 1});
    CHECK(smith_invariants({{0, 0}, {0, 0}}) == std::vector<long long>{});
    CHECK(smith_invariants({{6}}) == std::vector<long long>{6});
    CHECK(smith_invariants({{2, 0, 0}, {0, 3, 0}}) == std::vector<long long>{1, 6});
    // divisibility chain on a 3x3 example
    auto inv = smith_invariants({{2, 0, 0}, {0, 6, 0}, {0, 0, 10}});
    REQUIRE(inv.size() == 3);
    CHECK(inv[1] % inv[0] == 0);
    CHECK(inv[2] % inv[1] == 0);
}

TEST_CASE("open triangulations rejected") {
    CHECK_THROWS_AS(h1_z2_basis(testsupport::free_simplex()), NotClosed);
    CHECK_THROWS_AS(integral_h1(testsupport::free_simplex()), NotClosed);
}

TEST_CASE("cocycle basis and universal coefficients on the census") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        const auto basis = h1_z2_basis(tri);
        for (const Z2Class& c : basis) {
            CHECK(is_cocycle(tri, c));
            CHECK_FALSE(c.zero());
        }
        const AbelianGroup g = integral_h1(tri);
        CHECK(static_cast<int>(basis.size()) == z2_rank_of(g));
    }
}

TEST_CASE("enumerations have the right cardinalities") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        const std::size_t r = h1_z2_basis(tri).size();
        const auto classes = enumerate_rank1(tri);
        CHECK(classes.size() == (std::size_t{1} << r) - 1);
        for (const Z2Class& c : classes) {
            CHECK(is_cocycle(tri, c));
            CHECK_FALSE(c.zero());
        }
        const auto subs = enumerate_rank2(tri);
        const std::size_t n = classes.size();
        CHECK(subs.size() == n * (n - 1) / 6 * ((n >= 2) ? 1 : 0));
        for (const Z2Subgroup2& s : subs) {
            CHECK(s.classes[2] == s.classes[0] + s.classes[1]);
            CHECK_FALSE(s.classes[0].zero());
            CHECK_FALSE(s.classes[1].zero());
            CHECK_FALSE(s.classes[2].zero());
        }
    }
}

TEST_CASE("census contains an infinite cyclic H1 example") {
    bool found = false;
    for (const Triangulation& tri : testsupport::two_tet_closed_census(true)) {
        const AbelianGroup g = integral_h1(tri);
        if (g.rank == 1 && g.torsion.empty()) found = true;
    }
    CHECK(found);
}
