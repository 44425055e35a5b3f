#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tricert/isomorphism.hpp"
#include "tricert/tri_io.hpp"
#include "tricert/triangulation.hpp"

using namespace tricert;

TEST_CASE("free simplex skeleton") {
    Triangulation tri = testsupport::free_simplex();
    CHECK(tri.tet_count() == 1);
    CHECK_FALSE(tri.closed());
    CHECK(tri.vertex_count() == 4);
    CHECK(tri.edge_count() == 6);
    CHECK(tri.face_class_count() == 4);
    CHECK(tri.boundary_face_count() == 4);
    for (int e = 0; e < 6; ++e) {
        CHECK(tri.edge_degree(e) == 1);
        CHECK(tri.edge_is_boundary(e));
    }
}

TEST_CASE("self-glued face rejected") {
    GluingTable table(1);
    table[0][0] = Gluing{0, 0, Perm4::identity()};
    CHECK_THROWS_AS(Triangulation::build(std::move(table)), SelfGluedFace);
}

TEST_CASE("non-involutive table rejected") {
    GluingTable table(2);
    table[0][0] = Gluing{1, 0, Perm4::identity()};
    // missing back-gluing on tet 1
    CHECK_THROWS_AS(Triangulation::build(std::move(table)), NonInvolutiveGluing);

    GluingTable t2(2);
    t2[0][0] = Gluing{1, 0, Perm4::identity()};
    t2[1][0] = Gluing{0, 0, Perm4{{0, 2, 1, 3}}};
    CHECK_THROWS_AS(Triangulation::build(std::move(t2)), NonInvolutiveGluing);
}

TEST_CASE("out-of-range gluing rejected") {
    GluingTable table(1);
    table[0][0] = Gluing{3, 0, Perm4::identity()};
    CHECK_THROWS_AS(Triangulation::build(std::move(table)), IndexOutOfRange);
}

TEST_CASE("two-tet closed census basics") {
    const auto& census = testsupport::two_tet_closed_census(false);
    REQUIRE(!census.empty());
    const auto& orientable = testsupport::two_tet_closed_census(true);
    REQUIRE(!orientable.empty());
    for (const Triangulation& tri : census) {
        CHECK(tri.closed());
        CHECK(tri.euler_characteristic() == 0);
        CHECK(tri.face_class_count() == 2 * tri.tet_count());
        // degree sum = 6T
        int sum = 0;
        for (int e = 0; e < tri.edge_count(); ++e) {
            sum += tri.edge_degree(e);
            CHECK_FALSE(tri.edge_is_boundary(e));
            CHECK(static_cast<int>(tri.edge_link(e).size()) == tri.edge_degree(e));
        }
        CHECK(sum == 6 * tri.tet_count());
        if (tri.vertex_count() == 1) CHECK(tri.edge_count() == tri.tet_count() + 1);
    }
    // at least one closed orientable one-vertex example exists
    bool oneVertex = false;
    for (const Triangulation& tri : orientable)
        if (tri.vertex_count() == 1) oneVertex = true;
    CHECK(oneVertex);
}

TEST_CASE("edge link walk agrees with corner multiset") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        for (int e = 0; e < tri.edge_count(); ++e) {
            auto link = tri.edge_link(e);
            std::multiset<std::array<int, 2>> fromLink, fromCorners;
            for (const EdgeCorner& c : link) {
                int a = c.a, b = c.b;
                if (a > b) std::swap(a, b);
                fromLink.insert({c.tet, edge_index(a, b)});
            }
            for (const EdgeCorner& c : tri.edge_corners(e)) fromCorners.insert({c.tet, edge_index(c.a, c.b)});
            CHECK(fromLink == fromCorners);
        }
    }
}

TEST_CASE("tri format round-trips bit-exactly") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        std::string text = write_tri(tri);
        Triangulation back = read_tri(text);
        CHECK(write_tri(back) == text);
        CHECK(back.table() == tri.table());
    }
    std::string simplex = write_tri(testsupport::free_simplex());
    CHECK(simplex == "tri 1\nn 1\nb b b b\n");
    CHECK(write_tri(read_tri(simplex)) == simplex);
}

TEST_CASE("tri format rejects malformed input") {
    CHECK_THROWS_AS(read_tri("tri 2\nn 0\n"), TriFormatError);
    CHECK_THROWS_AS(read_tri("tri 1\nn 1\nb b b\n"), TriFormatError);
    CHECK_THROWS_AS(read_tri("tri 1\nn 1\nb b b b extra\n"), TriFormatError);
    CHECK_THROWS_AS(read_tri("tri 1\nn 1\ng:0:0:0123 b b b\n"), TriError);
}

TEST_CASE("canonical form is relabeling-invariant") {
    const auto& census = testsupport::two_tet_closed_census(false);
    for (const Triangulation& tri : census) {
        // swap the two tets and scramble labels via a relabeled rebuild
        const Perm4 scramble{{2, 0, 3, 1}};
        GluingTable table(static_cast<std::size_t>(tri.tet_count()));
        auto newTet = [&](int t) { return tri.tet_count() - 1 - t; };
        for (int t = 0; t < tri.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                const Perm4 tau = scramble * g->perm * scramble.inverse();
                table[static_cast<std::size_t>(newTet(t))][static_cast<std::size_t>(scramble(f))] =
                    Gluing{newTet(g->tet), scramble(g->face), tau};
            }
        Triangulation scrambled = Triangulation::build(std::move(table));
        CHECK(canonical_encoding(scrambled) == canonical_encoding(tri));
        CHECK(isomorphic(scrambled, tri));
    }
    // distinct census members are non-isomorphic by construction
    for (std::size_t i = 0; i < census.size(); ++i)
        for (std::size_t j = i + 1; j < census.size(); ++j)
            CHECK_FALSE(isomorphic(census[i], census[j]));
}

TEST_CASE("canonical form round-trip is stable") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(true)) {
        Triangulation c = canonical_form(tri);
        CHECK(write_tri(c) == canonical_encoding(tri));
        CHECK(canonical_encoding(c) == canonical_encoding(tri));
    }
}

TEST_CASE("subcomplex generated by all tets is the identity") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        std::vector<int> all;
        for (int t = 0; t < tri.tet_count(); ++t) all.push_back(t);
        auto sub = tri.subcomplex_generated(all);
        CHECK(sub.tri.table() == tri.table());
        CHECK(sub.edgeInjective);
        CHECK(sub.vertexInjective);
        // idempotent: regenerating from the full tet set matches
        auto again = sub.tri.subcomplex_generated(all);
        CHECK(isomorphic(again.tri, sub.tri));
    }
}

TEST_CASE("single tet subcomplex of a closed 2-tet triangulation") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(false)) {
        auto sub = tri.subcomplex_generated({0});
        CHECK(sub.tri.tet_count() == 1);
        CHECK(sub.tri.boundary_face_count() >= 2);
        CHECK(sub.edgeToAmbient.size() == static_cast<std::size_t>(sub.tri.edge_count()));
        // reported ambient classes must be real classes
        for (int cls : sub.edgeToAmbient) {
            CHECK(cls >= 0);
            CHECK(cls < tri.edge_count());
        }
    }
}

TEST_CASE("orientation signs flip across each gluing") {
    for (const Triangulation& tri : testsupport::two_tet_closed_census(true)) {
        REQUIRE(tri.orientable());
        const auto& signs = tri.tet_orientations();
        for (int t = 0; t < tri.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                const int expect = g->perm.sign() == -1 ? signs[static_cast<std::size_t>(t)]
                                                        : -signs[static_cast<std::size_t>(t)];
                CHECK(signs[static_cast<std::size_t>(g->tet)] == expect);
            }
    }
}
