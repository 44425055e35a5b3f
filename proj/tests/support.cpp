#include "support.hpp"

#include <map>
#include <string>

#include "tricert/isomorphism.hpp"

namespace testsupport {

using namespace tricert;

Triangulation free_simplex() { return Triangulation::build(GluingTable(1)); }

namespace {

// All perfect matchings of {0..7}; 7!! = 105 of them.
void matchings(std::vector<int>& used, std::vector<std::pair<int, int>>& cur,
               std::vector<std::vector<std::pair<int, int>>>& out) {
    int first = -1;
    for (int i = 0; i < 8; ++i)
        if (!used[static_cast<std::size_t>(i)]) {
            first = i;
            break;
        }
    if (first < 0) {
        out.push_back(cur);
        return;
    }
    used[static_cast<std::size_t>(first)] = 1;
    for (int j = first + 1; j < 8; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = 1;
        cur.emplace_back(first, j);
        matchings(used, cur, out);
        cur.pop_back();
        used[static_cast<std::size_t>(j)] = 0;
    }
    used[static_cast<std::size_t>(first)] = 0;
}

std::vector<Triangulation> enumerate_census(bool orientableOnly) {
    std::vector<std::vector<std::pair<int, int>>> ms;
    {
        std::vector<int> used(8, 0);
        std::vector<std::pair<int, int>> cur;
        matchings(used, cur, ms);
    }
    std::map<std::string, Triangulation> seen;
    for (const auto& m : ms) {
        // For each pair, 6 permutation choices mapping source face to target face.
        std::vector<std::vector<Perm4>> choices;
        for (const auto& [x, y] : m) {
            const int fx = x % 4, fy = y % 4;
            std::vector<Perm4> ps;
            for (const Perm4& p : Perm4::all())
                if (p(fx) == fy) ps.push_back(p);
            choices.push_back(ps);
        }
        std::array<std::size_t, 4> pick{0, 0, 0, 0};
        while (true) {
            GluingTable table(2);
            for (std::size_t k = 0; k < 4; ++k) {
                const auto [x, y] = m[k];
                const Perm4& p = choices[k][pick[k]];
                table[static_cast<std::size_t>(x / 4)][static_cast<std::size_t>(x % 4)] = Gluing{y / 4, y % 4, p};
                table[static_cast<std::size_t>(y / 4)][static_cast<std::size_t>(y % 4)] = Gluing{x / 4, x % 4, p.inverse()};
            }
            try {
                Triangulation tri = Triangulation::build(std::move(table));
                if (tri.closed() && tri.connected() && tri.euler_characteristic() == 0 &&
                    (!orientableOnly || tri.orientable()))
                    seen.emplace(canonical_encoding(tri), tri);
            } catch (const TriError&) {
                // invalid gluing pattern; skip
            }
            std::size_t k = 0;
            for (; k < 4; ++k) {
                if (++pick[k] < choices[k].size()) break;
                pick[k] = 0;
            }
            if (k == 4) break;
        }
    }
    std::vector<Triangulation> out;
    for (auto& [enc, tri] : seen) out.push_back(tri);
    return out;
}

} // namespace

const std::vector<Triangulation>& two_tet_closed_census(bool orientableOnly) {
    static const std::vector<Triangulation> all = enumerate_census(false);
    static const std::vector<Triangulation> orient = [] {
        std::vector<Triangulation> out;
        for (const Triangulation& t : all)
            if (t.orientable()) out.push_back(t);
        return out;
    }();
    return orientableOnly ? orient : all;
}

} // namespace testsupport
