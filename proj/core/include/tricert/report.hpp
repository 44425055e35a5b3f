#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tricert/busting.hpp"

namespace tricert {

// Low-degree edge facts for closed triangulations. Degree-1 and degree-2
// edges are only possible for a short list of small manifolds when the
// triangulation is minimal, so they are reported rather than rejected.
// Every degree-3 edge should be the interior edge of a 2-tet solid torus
// subcomplex; the ones that are not are listed separately.
struct LintReport {
    std::vector<int> degreeOneEdges;
    std::vector<int> degreeTwoEdges;
    std::vector<int> degreeThreeEdges;
    std::vector<int> degreeThreeOutside134;
};

LintReport lint_low_degree_edges(const Triangulation& tri);

// Pairwise-intersection bound for maximal layered solid tori. The bound
// assumes the triangulation is not a layered lens space; on one the check
// is recorded as not applicable instead of failing.
struct MlstCheck {
    bool applicable = true;
    std::string gate;
    std::vector<std::pair<int, int>> violations;  // inventory index pairs
};

MlstCheck mlst_pairwise_check(const Triangulation& tri);

struct AnalyzeOptions {
    int rank = 0;               // 0 = auto (all classes and all subgroups), 1, or 2
    bool flipNormalize = false; // run the degree-4 flip normalization per rank-1 class
};

struct AnalysisReport {
    std::string canonicalHash;    // 64-bit FNV-1a of the canonical encoding, hex
    long long tetCount = 0;
    long long vertexCount = 0;
    long long edgeCount = 0;
    AbelianGroup h1;
    int rank2H1 = 0;
    LintReport lint;
    MlstCheck mlst;
    std::vector<BoundCertificate> rank1Certificates;   // class enumeration order
    std::vector<BoundCertificate> rank2Certificates;   // subgroup enumeration order
    std::vector<long long> normalizeFlips;             // per rank-1 class when requested
    long long elapsedMicros = 0;

    bool flagged() const;
};

// Full analysis of a closed orientable one-vertex triangulation.
AnalysisReport analyze(const Triangulation& tri, const AnalyzeOptions& opt = {});

std::string fnv1a_hex(const std::string& data);

// Stable JSON with integer fields only; thirds-scaled values carry a
// sibling "den3": true marker.
std::string to_json(const ChainItem& it);
std::string to_json(const BoundCertificate& c);
std::string to_json(const AnalysisReport& r);

} // namespace tricert
