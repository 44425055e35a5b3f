#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "tricert/fixtures.hpp"
#include "tricert/isomorphism.hpp"
#include "tricert/report.hpp"
#include "tricert/tri_io.hpp"

using namespace tricert;

TEST_CASE("triangulation text format round-trips bit-exactly") {
    for (const Triangulation& tri :
         {build_lens(7, 2), three_torus(), bipyramid_fixture().tri, testsupport::free_simplex()}) {
        const std::string text = write_tri(tri);
        const Triangulation back = read_tri(text);
        CHECK(write_tri(back) == text);
        CHECK(back.tet_count() == tri.tet_count());
        CHECK(back.edge_count() == tri.edge_count());
    }
    CHECK_THROWS_AS(read_tri("tri 1\nn 1\nb b b\n"), TriFormatError);
    CHECK_THROWS_AS(read_tri("tri 2\nn 0\n"), TriFormatError);
}

TEST_CASE("low-degree linter on generated inputs") {
    // large layered lens spaces have no low-degree edges except the two
    // degree-3 interior edges of their solid tori, which sit inside 2-tet
    // subcomplexes as required
    const AnalysisReport r = analyze(build_lens(14, 3));
    CHECK(r.lint.degreeOneEdges.empty());
    CHECK(r.lint.degreeTwoEdges.empty());
    CHECK(r.lint.degreeThreeOutside134.empty());
    // the 3-torus has only degree-6 edges
    const AnalysisReport t = analyze(three_torus());
    CHECK(t.lint.degreeOneEdges.empty());
    CHECK(t.lint.degreeTwoEdges.empty());
    CHECK(t.lint.degreeThreeEdges.empty());
}

TEST_CASE("pairwise torus check gates on layered lens spaces") {
    const MlstCheck lens = mlst_pairwise_check(build_lens(9, 2));
    CHECK_FALSE(lens.applicable);
    CHECK(lens.gate == "layered lens space triangulation");
    const MlstCheck t3 = mlst_pairwise_check(three_torus());
    CHECK(t3.applicable);
    CHECK(t3.violations.empty());
    // the synthetic cluster fixtures are deliberately non-minimal: their two
    // solid tori share several ring edges, and the ungated check says so
    const MlstCheck bp = mlst_pairwise_check(bipyramid_fixture().tri);
    CHECK(bp.applicable);
    CHECK(bp.violations == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("analysis report on the even lens corpus raises no flags") {
    for (long long p = 4; p <= 16; p += 2) {
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const AnalysisReport r = analyze(build_lens(p, q));
            CHECK_FALSE(r.flagged());
            CHECK(r.h1 == AbelianGroup{0, {p}});
            CHECK(r.rank2H1 == 1);
            CHECK(r.rank1Certificates.size() == 1);
            CHECK(r.rank2Certificates.empty());
        }
    }
}

TEST_CASE("rank selection controls which certificates are produced") {
    const Triangulation t3 = three_torus();
    const AnalysisReport both = analyze(t3);
    CHECK(both.rank1Certificates.size() == 7);
    CHECK(both.rank2Certificates.size() == 7);
    AnalyzeOptions r1;
    r1.rank = 1;
    CHECK(analyze(t3, r1).rank2Certificates.empty());
    AnalyzeOptions r2;
    r2.rank = 2;
    const AnalysisReport only2 = analyze(t3, r2);
    CHECK(only2.rank1Certificates.empty());
    CHECK(only2.rank2Certificates.size() == 7);
}

TEST_CASE("flip normalization option reports per-class flip counts") {
    const ClusterFixture fx = insolvent_deg4_fixture();
    AnalyzeOptions opt;
    opt.rank = 1;
    opt.flipNormalize = true;
    const AnalysisReport r = analyze(fx.tri, opt);
    REQUIRE(r.normalizeFlips.size() == r.rank1Certificates.size());
    bool any = false;
    for (long long f : r.normalizeFlips)
        if (f > 0) any = true;
    CHECK(any);
}

TEST_CASE("report serialization is deterministic and integer-only") {
    const AnalysisReport r = analyze(build_lens(8, 1));
    const std::string j1 = to_json(r);
    const std::string j2 = to_json(r);
    CHECK(j1 == j2);
    CHECK(j1.find('.') == std::string::npos);  // no floats anywhere
    CHECK(j1.find("\"den3\":true") != std::string::npos);
    CHECK(j1.find("\"canonicalHash\"") != std::string::npos);
    // a fresh analysis differs only in timing
    AnalysisReport r2 = analyze(build_lens(8, 1));
    r2.elapsedMicros = r.elapsedMicros;
    CHECK(to_json(r2) == j1);
}

TEST_CASE("canonical hash distinguishes manifolds and ignores labeling") {
    const std::string a = fnv1a_hex(canonical_encoding(build_lens(8, 1)));
    const std::string b = fnv1a_hex(canonical_encoding(build_lens(8, 3)));
    const std::string c = fnv1a_hex(canonical_encoding(three_torus()));
    CHECK(a != c);
    CHECK(b != c);
    // round-tripping through the text format preserves the hash
    CHECK(fnv1a_hex(canonical_encoding(read_tri(write_tri(three_torus())))) == c);
}
