#include "tricert/report.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "tricert/flips.hpp"
#include "tricert/isomorphism.hpp"

namespace tricert {

LintReport lint_low_degree_edges(const Triangulation& tri) {
    LintReport out;
    for (int e = 0; e < tri.edge_count(); ++e) {
        const long long d = tri.edge_degree(e);
        if (d == 1) out.degreeOneEdges.push_back(e);
        if (d == 2) out.degreeTwoEdges.push_back(e);
        if (d != 3) continue;
        out.degreeThreeEdges.push_back(e);
        std::set<int> tets;
        for (const EdgeCorner& cr : tri.edge_corners(e)) tets.insert(cr.tet);
        bool inside = false;
        if (tets.size() == 2) {
            const Subcomplex sub =
                tri.subcomplex_generated(std::vector<int>(tets.begin(), tets.end()));
            if (isomorphic(sub.tri, build_lst(1, 3).tri)) {
                // the edge must be the interior edge of that subcomplex
                for (int se = 0; se < sub.tri.edge_count(); ++se)
                    if (!sub.tri.edge_is_boundary(se) &&
                        sub.edgeToAmbient[static_cast<std::size_t>(se)] == e)
                        inside = true;
            }
        }
        if (!inside) out.degreeThreeOutside134.push_back(e);
    }
    return out;
}

MlstCheck mlst_pairwise_check(const Triangulation& tri) {
    MlstCheck out;
    if (is_layered_lens_space(tri)) {
        out.applicable = false;
        out.gate = "layered lens space triangulation";
        return out;
    }
    out.violations = lst_pairwise_violations(tri, detect_max_lsts(tri));
    return out;
}

bool AnalysisReport::flagged() const {
    for (const BoundCertificate& c : rank1Certificates)
        if (!c.hypothesisFlags.empty()) return true;
    for (const BoundCertificate& c : rank2Certificates)
        if (!c.hypothesisFlags.empty()) return true;
    return false;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

AnalysisReport analyze(const Triangulation& tri, const AnalyzeOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.canonicalHash = fnv1a_hex(canonical_encoding(tri));
    r.tetCount = tri.tet_count();
    r.vertexCount = tri.vertex_count();
    r.edgeCount = tri.edge_count();
    r.h1 = integral_h1(tri);
    r.rank2H1 = z2_rank_of(r.h1);
    r.lint = lint_low_degree_edges(tri);
    r.mlst = mlst_pairwise_check(tri);
    if (opt.rank == 0 || opt.rank == 1) {
        for (const Z2Class& a : enumerate_rank1(tri)) {
            if (opt.flipNormalize) {
                const NormalizeResult nr = normalize_insolvent_deg4(tri, a);
                r.normalizeFlips.push_back(nr.flips);
                r.rank1Certificates.push_back(certify(nr.tri, nr.alpha));
            } else {
                r.rank1Certificates.push_back(certify(tri, a));
            }
        }
    }
    if (opt.rank == 0 || opt.rank == 2)
        for (const Z2Subgroup2& s : enumerate_rank2(tri))
            r.rank2Certificates.push_back(certify(tri, s));
    r.elapsedMicros = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return r;
}

namespace {

void json_string(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
    }
    os << '"';
}

template <class T>
void json_ints(std::ostringstream& os, const std::vector<T>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
}

} // namespace

std::string to_json(const ChainItem& it) {
    std::ostringstream os;
    os << "{\"name\":";
    json_string(os, it.name);
    os << ",\"lhs\":" << it.lhs3 << ",\"rhs\":" << it.rhs3 << ",\"den3\":true"
       << ",\"relation\":\"" << (it.equality ? "eq" : "ge") << '"'
       << ",\"holds\":" << (it.holds ? "true" : "false")
       << ",\"applicable\":" << (it.applicable ? "true" : "false");
    if (!it.gate.empty()) {
        os << ",\"gate\":";
        json_string(os, it.gate);
    }
    os << '}';
    return os.str();
}

std::string to_json(const BoundCertificate& c) {
    std::ostringstream os;
    os << "{\"rank\":" << c.rank << ",\"tets\":" << c.tetCount << ",\"chiBefore\":";
    json_ints(os, c.chiBefore);
    os << ",\"chiAfter\":";
    json_ints(os, c.chiAfter);
    os << ",\"kappa\":" << c.kappa << ",\"kappaPrime\":" << c.kappaPrime << ",\"kappaI\":["
       << c.kappaI[0] << ',' << c.kappaI[1] << ',' << c.kappaI[2] << ']'
       << ",\"normUpperBound\":";
    json_ints(os, c.normUpperBound2);
    os << ",\"den2\":true,\"claimedBound\":" << c.claimedBound2 << ",\"chain\":[";
    for (std::size_t i = 0; i < c.chain.size(); ++i)
        os << (i ? "," : "") << to_json(c.chain[i]);
    os << "],\"flags\":[";
    for (std::size_t i = 0; i < c.hypothesisFlags.size(); ++i) {
        if (i) os << ',';
        json_string(os, c.hypothesisFlags[i]);
    }
    os << "],\"consistent\":" << (c.chainConsistent ? "true" : "false") << '}';
    return os.str();
}

std::string to_json(const AnalysisReport& r) {
    std::ostringstream os;
    os << "{\"canonicalHash\":";
    json_string(os, r.canonicalHash);
    os << ",\"tets\":" << r.tetCount << ",\"vertices\":" << r.vertexCount
       << ",\"edges\":" << r.edgeCount << ",\"h1\":{\"rank\":" << r.h1.rank << ",\"torsion\":";
    json_ints(os, r.h1.torsion);
    os << "},\"rank2H1\":" << r.rank2H1 << ",\"lint\":{\"degree1\":";
    json_ints(os, r.lint.degreeOneEdges);
    os << ",\"degree2\":";
    json_ints(os, r.lint.degreeTwoEdges);
    os << ",\"degree3\":";
    json_ints(os, r.lint.degreeThreeEdges);
    os << ",\"degree3Outside134\":";
    json_ints(os, r.lint.degreeThreeOutside134);
    os << "},\"mlst\":{\"applicable\":" << (r.mlst.applicable ? "true" : "false");
    if (!r.mlst.gate.empty()) {
        os << ",\"gate\":";
        json_string(os, r.mlst.gate);
    }
    os << ",\"violations\":[";
    for (std::size_t i = 0; i < r.mlst.violations.size(); ++i)
        os << (i ? "," : "") << '[' << r.mlst.violations[i].first << ','
           << r.mlst.violations[i].second << ']';
    os << "]},\"rank1\":[";
    for (std::size_t i = 0; i < r.rank1Certificates.size(); ++i)
        os << (i ? "," : "") << to_json(r.rank1Certificates[i]);
    os << "],\"rank2\":[";
    for (std::size_t i = 0; i < r.rank2Certificates.size(); ++i)
        os << (i ? "," : "") << to_json(r.rank2Certificates[i]);
    os << "],\"normalizeFlips\":";
    json_ints(os, r.normalizeFlips);
    os << ",\"elapsedMicros\":" << r.elapsedMicros << '}';
    return os.str();
}

} // namespace tricert
