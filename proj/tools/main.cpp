#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tricert/fixtures.hpp"
#include "tricert/isomorphism.hpp"
#include "tricert/report.hpp"
#include "tricert/tri_io.hpp"

using namespace tricert;

namespace {

int usage() {
    std::cerr <<
        "usage: tricert <command> [args]\n"
        "  gen-lst <p> <q> [-o file]        layered solid torus S_{p,q,p+q}\n"
        "  gen-lens <p> <q> [-o file]       layered lens space L(p,q)\n"
        "  gen-fixture <name> [-o file]     bipyramid | posse11 | posse10 | twin | t3 | deg4\n"
        "  analyze <file> [--rank 1|2|auto] [--json] [--flip-normalize]\n"
        "  batch <dir> [--rank 1|2|auto] [--json]\n"
        "  canon <file>                     canonical encoding and hash\n"
        "exit status: 0 consistent, 1 hypothesis flags raised, 2 input error\n";
    return 2;
}

void emit(const Triangulation& tri, const std::optional<std::string>& out) {
    if (out)
        write_tri_file(tri, *out);
    else
        std::cout << write_tri(tri);
}

struct AnalyzeArgs {
    AnalyzeOptions opt;
    bool json = false;
};

bool parse_analyze_flags(const std::vector<std::string>& args, std::size_t from, AnalyzeArgs& a) {
    for (std::size_t i = from; i < args.size(); ++i) {
        if (args[i] == "--json") {
            a.json = true;
        } else if (args[i] == "--flip-normalize") {
            a.opt.flipNormalize = true;
        } else if (args[i] == "--rank" && i + 1 < args.size()) {
            const std::string& v = args[++i];
            if (v == "1")
                a.opt.rank = 1;
            else if (v == "2")
                a.opt.rank = 2;
            else if (v == "auto")
                a.opt.rank = 0;
            else
                return false;
        } else {
            return false;
        }
    }
    return true;
}

void print_text_report(const std::string& name, const AnalysisReport& r) {
    std::cout << name << ": T=" << r.tetCount << " V=" << r.vertexCount << " E=" << r.edgeCount
              << " H1=Z^" << r.h1.rank;
    for (long long t : r.h1.torsion) std::cout << "+Z/" << t;
    std::cout << " rank2H1=" << r.rank2H1 << " hash=" << r.canonicalHash << "\n";
    std::cout << "  lint: deg1=" << r.lint.degreeOneEdges.size()
              << " deg2=" << r.lint.degreeTwoEdges.size()
              << " deg3=" << r.lint.degreeThreeEdges.size()
              << " deg3-outside-torus=" << r.lint.degreeThreeOutside134.size() << "\n";
    std::cout << "  torus pairwise check: "
              << (r.mlst.applicable
                      ? (r.mlst.violations.empty() ? "ok" : "VIOLATIONS")
                      : "not applicable (" + r.mlst.gate + ")")
              << "\n";
    const auto show = [](const char* kind, const BoundCertificate& c, std::size_t i) {
        std::cout << "  " << kind << "[" << i << "]: kappa=" << c.kappa
                  << " kappa'=" << c.kappaPrime << " claimed 2*bound=" << c.claimedBound2
                  << (c.chainConsistent ? " consistent" : " FLAGGED") << "\n";
        for (const std::string& f : c.hypothesisFlags) std::cout << "    flag: " << f << "\n";
    };
    for (std::size_t i = 0; i < r.rank1Certificates.size(); ++i)
        show("class", r.rank1Certificates[i], i);
    for (std::size_t i = 0; i < r.rank2Certificates.size(); ++i)
        show("subgroup", r.rank2Certificates[i], i);
    std::cout << "  elapsed: " << r.elapsedMicros << " us\n";
}

int cmd_gen(const std::vector<std::string>& args) {
    std::optional<std::string> out;
    std::vector<std::string> pos;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "-o" && i + 1 < args.size())
            out = args[++i];
        else
            pos.push_back(args[i]);
    }
    if (args[0] == "gen-fixture") {
        if (pos.size() != 1) return usage();
        if (pos[0] == "bipyramid")
            emit(bipyramid_fixture().tri, out);
        else if (pos[0] == "posse11")
            emit(posse11_fixture().tri, out);
        else if (pos[0] == "posse10")
            emit(posse10_fixture().tri, out);
        else if (pos[0] == "twin")
            emit(rank2_twin_fixture().tri, out);
        else if (pos[0] == "t3")
            emit(three_torus(), out);
        else if (pos[0] == "deg4")
            emit(insolvent_deg4_fixture().tri, out);
        else
            return usage();
        return 0;
    }
    if (pos.size() != 2) return usage();
    const long long p = std::stoll(pos[0]), q = std::stoll(pos[1]);
    if (args[0] == "gen-lst")
        emit(build_lst(p, q).tri, out);
    else
        emit(build_lens(p, q), out);
    return 0;
}

int cmd_analyze(const std::vector<std::string>& args) {
    if (args.size() < 2) return usage();
    AnalyzeArgs a;
    if (!parse_analyze_flags(args, 2, a)) return usage();
    const Triangulation tri = read_tri_file(args[1]);
    const AnalysisReport r = analyze(tri, a.opt);
    if (a.json)
        std::cout << to_json(r) << "\n";
    else
        print_text_report(args[1], r);
    return r.flagged() ? 1 : 0;
}

int cmd_batch(const std::vector<std::string>& args) {
    if (args.size() < 2) return usage();
    AnalyzeArgs a;
    if (!parse_analyze_flags(args, 2, a)) return usage();
    std::vector<std::string> files;
    for (const auto& ent : std::filesystem::directory_iterator(args[1]))
        if (ent.is_regular_file() && ent.path().extension() == ".tri")
            files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());

    struct Result {
        std::optional<AnalysisReport> report;
        std::string error;
    };
    std::vector<std::future<Result>> futures;
    futures.reserve(files.size());
    for (const std::string& f : files)
        futures.push_back(std::async(std::launch::async, [f, &a]() -> Result {
            try {
                return {analyze(read_tri_file(f), a.opt), {}};
            } catch (const std::exception& ex) {
                return {std::nullopt, ex.what()};
            }
        }));

    long long flagged = 0, errors = 0;
    if (a.json) std::cout << "[";
    for (std::size_t i = 0; i < files.size(); ++i) {
        const Result res = futures[i].get();
        if (a.json) {
            std::cout << (i ? "," : "") << "{\"file\":\"" << files[i] << "\",";
            if (res.report)
                std::cout << "\"report\":" << to_json(*res.report);
            else
                std::cout << "\"error\":\"" << res.error << "\"";
            std::cout << "}";
        } else if (res.report) {
            print_text_report(files[i], *res.report);
        } else {
            std::cout << files[i] << ": error: " << res.error << "\n";
        }
        if (res.report && res.report->flagged()) ++flagged;
        if (!res.report) ++errors;
    }
    if (a.json)
        std::cout << "]\n";
    else
        std::cout << "batch: " << files.size() << " files, " << flagged << " flagged, " << errors
                  << " errors\n";
    return errors ? 2 : (flagged ? 1 : 0);
}

int cmd_canon(const std::vector<std::string>& args) {
    if (args.size() != 2) return usage();
    const Triangulation tri = read_tri_file(args[1]);
    const std::string enc = canonical_encoding(tri);
    std::cout << fnv1a_hex(enc) << "\n" << enc << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) return usage();
    try {
        if (args[0] == "gen-lst" || args[0] == "gen-lens" || args[0] == "gen-fixture")
            return cmd_gen(args);
        if (args[0] == "analyze") return cmd_analyze(args);
        if (args[0] == "batch") return cmd_batch(args);
        if (args[0] == "canon") return cmd_canon(args);
        return usage();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
