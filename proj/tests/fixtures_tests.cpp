#include <doctest.h>

#include "support.hpp"
#include "tricert/fixtures.hpp"
#include "tricert/layered.hpp"
#include "tricert/normal_surface.hpp"

using namespace tricert;

TEST_CASE("cube triangulation of the 3-torus") {
    const Triangulation t3 = three_torus();
    CHECK(t3.tet_count() == 6);
    CHECK(t3.closed());
    CHECK(t3.orientable());
    CHECK(t3.vertex_count() == 1);
    CHECK(t3.edge_count() == 7);
    CHECK(t3.euler_characteristic() == 0);
    CHECK(integral_h1(t3) == AbelianGroup{3, {}});
    CHECK(h1_z2_basis(t3).size() == 3);
    CHECK(enumerate_rank1(t3).size() == 7);
    CHECK(enumerate_rank2(t3).size() == 7);
    CHECK_FALSE(is_layered_lens_space(t3));
    CHECK(detect_max_lsts(t3).empty());
}

TEST_CASE("3-torus canonical surfaces are tori and satisfy the identities") {
    const Triangulation t3 = three_torus();
    for (const Z2Class& a : enumerate_rank1(t3)) {
        const ColoringR1 c = color_rank1(t3, a);
        const NormalSurface s = canonical_surface(t3, c);
        const long long chi = euler_char(t3, s);
        // one class (odd on all three cube directions) is carried by the
        // six-quad surface, which is one-sided; the other six are tori
        long long bySum = 0;
        for (const SurfaceComponent& comp : components(t3, s)) {
            bySum += comp.chi;
            CHECK(comp.chi <= 0);
            CHECK(comp.orientable == (comp.chi == 0));
        }
        CHECK(chi == bySum);
        CHECK(2 * t3.tet_count() - 4 + 4 * chi == c.degree_weighted_even_sum() + c.countT);
        CHECK(is_nearly_canonical(t3, s, a));
    }
    for (const Z2Subgroup2& sub : enumerate_rank2(t3)) {
        const ColoringR2 c = color_rank2(t3, sub);
        long long chiSum = 0;
        for (int i = 1; i <= 3; ++i)
            chiSum += euler_char(t3, canonical_surface(t3, restrict_rank1(t3, c, i)));
        CHECK(2 * t3.tet_count() - 4 + 2 * chiSum == c.degree_weighted_even_sum() + c.countTT + c.countQTT);
    }
}
