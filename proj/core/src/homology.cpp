#include "tricert/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tricert {

namespace {

using BitRow = std::vector<std::uint64_t>;

BitRow make_row(std::size_t bits) { return BitRow((bits + 63) / 64, 0); }
void flip_bit(BitRow& r, std::size_t i) { r[i / 64] ^= (std::uint64_t{1} << (i % 64)); }
bool get_bit(const BitRow& r, std::size_t i) { return (r[i / 64] >> (i % 64)) & 1; }
void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}
bool row_zero(const BitRow& r) {
    for (auto w : r)
        if (w) return false;
    return true;
}

// Rows of the coboundary matrix delta^1: one row per face class, columns are
// edges, entries counted with multiplicity mod 2.
std::vector<BitRow> face_edge_rows(const Triangulation& tri) {
    std::vector<BitRow> rows;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(tri.face_class_count()), 0);
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (seen[static_cast<std::size_t>(cls)]) continue;
            seen[static_cast<std::size_t>(cls)] = 1;
            BitRow row = make_row(static_cast<std::size_t>(tri.edge_count()));
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    flip_bit(row, static_cast<std::size_t>(tri.edge_class(t, a, b)));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Reduce `rows` to row echelon form with pivot columns chosen in ascending
// order; returns pivot column per reduced row.
std::vector<int> echelonize(std::vector<BitRow>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && !get_bit(rows[sel], static_cast<std::size_t>(c))) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && get_bit(rows[r], static_cast<std::size_t>(c))) xor_into(rows[r], rows[rank]);
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

} // namespace

bool is_cocycle(const Triangulation& tri, const Z2Class& c) {
    if (static_cast<int>(c.edgeBits.size()) != tri.edge_count()) return false;
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (tri.face_is_boundary(t, f)) continue;
            int sum = 0;
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    sum ^= c.edgeBits[static_cast<std::size_t>(tri.edge_class(t, a, b))];
                }
            }
            if (sum) return false;
        }
    }
    return true;
}

std::vector<Z2Class> h1_z2_basis(const Triangulation& tri) {
    if (!tri.closed()) throw NotClosed("h1_z2_basis requires a closed triangulation");
    const int E = tri.edge_count();

    // Kernel of delta^1.
    std::vector<BitRow> rows = face_edge_rows(tri);
    std::vector<int> pivots = echelonize(rows, E);
    std::vector<std::uint8_t> isPivot(static_cast<std::size_t>(E), 0);
    for (int c : pivots) isPivot[static_cast<std::size_t>(c)] = 1;

    std::vector<Z2Class> kernel;
    for (int c = 0; c < E; ++c) {
        if (isPivot[static_cast<std::size_t>(c)]) continue;
        Z2Class v;
        v.edgeBits.assign(static_cast<std::size_t>(E), 0);
        v.edgeBits[static_cast<std::size_t>(c)] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (get_bit(rows[r], static_cast<std::size_t>(c)))
                v.edgeBits[static_cast<std::size_t>(pivots[r])] ^= 1;
        kernel.push_back(std::move(v));
    }

    // Coboundaries delta^0: one generator per vertex class; the value on an
    // edge is the number of endpoints in that class, mod 2.
    std::vector<BitRow> cob;
    for (int vc = 0; vc < tri.vertex_count(); ++vc) {
        BitRow row = make_row(static_cast<std::size_t>(E));
        bool nonzero = false;
        for (int e = 0; e < E; ++e) {
            const EdgeRef er = tri.edge(e);
            int cnt = (tri.vertex_class(er.rep.tet, er.rep.a) == vc) + (tri.vertex_class(er.rep.tet, er.rep.b) == vc);
            if (cnt % 2) {
                flip_bit(row, static_cast<std::size_t>(e));
                nonzero = true;
            }
        }
        if (nonzero) cob.push_back(std::move(row));
    }
    echelonize(cob, E);

    // Reduce kernel vectors modulo the coboundary row space, keep an
    // independent set.
    std::vector<BitRow> span = cob;
    std::vector<Z2Class> basis;
    for (Z2Class& v : kernel) {
        BitRow row = make_row(static_cast<std::size_t>(E));
        for (int e = 0; e < E; ++e)
            if (v.edgeBits[static_cast<std::size_t>(e)]) flip_bit(row, static_cast<std::size_t>(e));
        // reduce against current span
        for (const BitRow& s : span) {
            int lead = -1;
            for (int e = 0; e < E; ++e)
                if (get_bit(s, static_cast<std::size_t>(e))) {
                    lead = e;
                    break;
                }
            if (lead >= 0 && get_bit(row, static_cast<std::size_t>(lead))) xor_into(row, s);
        }
        if (row_zero(row)) continue;
        Z2Class rep;
        rep.edgeBits.assign(static_cast<std::size_t>(E), 0);
        for (int e = 0; e < E; ++e)
            if (get_bit(row, static_cast<std::size_t>(e))) rep.edgeBits[static_cast<std::size_t>(e)] = 1;
        basis.push_back(rep);
        span.push_back(row);
        echelonize(span, E);
    }
    return basis;
}

std::vector<Z2Class> enumerate_rank1(const Triangulation& tri) {
    const std::vector<Z2Class> basis = h1_z2_basis(tri);
    const std::size_t r = basis.size();
    std::vector<Z2Class> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
        Z2Class c;
        c.edgeBits.assign(static_cast<std::size_t>(tri.edge_count()), 0);
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::uint64_t{1} << i)) c = c + basis[i];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Z2Subgroup2> enumerate_rank2(const Triangulation& tri) {
    const std::vector<Z2Class> classes = enumerate_rank1(tri);
    const std::size_t n = classes.size();
    // classes[mask-1] corresponds to the basis combination `mask`
    std::vector<Z2Subgroup2> out;
    for (std::uint64_t m1 = 1; m1 <= n; ++m1) {
        for (std::uint64_t m2 = m1 + 1; m2 <= n; ++m2) {
            const std::uint64_t m3 = m1 ^ m2;
            if (m3 < m2) continue; // keep each subgroup once, with sorted masks
            Z2Subgroup2 g{{classes[m1 - 1], classes[m2 - 1], classes[m3 - 1]}};
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m,
                                        std::vector<std::vector<long long>>* left) {
    const std::size_t R = m.size();
    const std::size_t C = R ? m[0].size() : 0;
    std::vector<std::vector<long long>> L;
    if (left) {
        L.assign(R, std::vector<long long>(R, 0));
        for (std::size_t i = 0; i < R; ++i) L[i][i] = 1;
    }
    auto row_sub = [&](std::size_t i, std::size_t k, long long q) {
        for (std::size_t j = 0; j < C; ++j) m[i][j] -= q * m[k][j];
        if (left)
            for (std::size_t j = 0; j < R; ++j) L[i][j] -= q * L[k][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        std::swap(m[i], m[k]);
        if (left) std::swap(L[i], L[k]);
    };
    auto row_add = [&](std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < C; ++j) m[i][j] += m[k][j];
        if (left)
            for (std::size_t j = 0; j < R; ++j) L[i][j] += L[k][j];
    };

    std::vector<long long> inv;
    std::size_t t = 0;
    while (t < R && t < C) {
        // find a nonzero entry of least magnitude in the remaining block
        std::size_t pr = t, pc = t;
        long long best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < std::llabs(best))) {
                    best = m[i][j];
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        row_swap(t, pr);
        for (std::size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pc]);

        bool clean = true;
        // eliminate column and row by the pivot
        for (std::size_t i = t + 1; i < R; ++i) {
            if (m[i][t] == 0) continue;
            row_sub(i, t, m[i][t] / m[t][t]);
            if (m[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (m[t][j] == 0) continue;
            const long long q = m[t][j] / m[t][t];
            for (std::size_t i = t; i < R; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot now exists; redo this step

        // pivot must divide the rest of the block; if not, fold a bad row in
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C && divides; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    row_add(t, i);
                    divides = false;
                }
        if (!divides) continue;

        inv.push_back(std::llabs(m[t][t]));
        ++t;
    }
    if (left) *left = std::move(L);
    return inv;
}

std::vector<std::vector<long long>> edge_images_in_free_h1(const Triangulation& tri) {
    if (tri.vertex_count() != 1) throw TriError("edge_images_in_free_h1 requires a one-vertex triangulation");
    const int E = tri.edge_count();

    // Columns of d2: one per face class (boundary faces are 2-cells too).
    std::vector<std::vector<long long>> cols;
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(tri.face_class_count()), 0);
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (seen[static_cast<std::size_t>(cls)]) continue;
            seen[static_cast<std::size_t>(cls)] = 1;
            std::vector<long long> col(static_cast<std::size_t>(E), 0);
            int vs[3], n = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f) vs[n++] = v;
            const int pairs[3][2] = {{vs[1], vs[2]}, {vs[0], vs[2]}, {vs[0], vs[1]}};
            const int signs[3] = {1, -1, 1};
            for (int k = 0; k < 3; ++k) {
                const int ec = tri.edge_class(t, pairs[k][0], pairs[k][1]);
                const int s = tri.edge_corner_orientation(t, pairs[k][0], pairs[k][1]) ? 1 : -1;
                col[static_cast<std::size_t>(ec)] += signs[k] * s;
            }
            cols.push_back(std::move(col));
        }
    }

    // d2 as an E x F matrix.
    std::vector<std::vector<long long>> d2(static_cast<std::size_t>(E), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int e = 0; e < E; ++e) d2[static_cast<std::size_t>(e)][j] = cols[j][static_cast<std::size_t>(e)];

    std::vector<std::vector<long long>> L;
    const std::vector<long long> inv = smith_invariants(d2, &L);
    const std::size_t rank = inv.size();

    // In the transformed basis y = L x, the image lattice is spanned by the
    // first `rank` coordinates; the free quotient reads off the rest.
    std::vector<std::vector<long long>> out(static_cast<std::size_t>(E));
    for (int e = 0; e < E; ++e) {
        std::vector<long long> coords;
        for (std::size_t i = rank; i < static_cast<std::size_t>(E); ++i) coords.push_back(L[i][static_cast<std::size_t>(e)]);
        out[static_cast<std::size_t>(e)] = std::move(coords);
    }
    return out;
}

AbelianGroup integral_h1(const Triangulation& tri) {
    if (!tri.closed()) throw NotClosed("integral_h1 requires a closed triangulation");
    const int E = tri.edge_count();
    const int V = tri.vertex_count();
    const int F = tri.face_class_count();

    // boundary of edges: d1 (V x E)
    std::vector<std::vector<long long>> d1(static_cast<std::size_t>(V), std::vector<long long>(static_cast<std::size_t>(E), 0));
    for (int e = 0; e < E; ++e) {
        const EdgeRef er = tri.edge(e);
        d1[static_cast<std::size_t>(tri.vertex_class(er.rep.tet, er.rep.b))][static_cast<std::size_t>(e)] += 1;
        d1[static_cast<std::size_t>(tri.vertex_class(er.rep.tet, er.rep.a))][static_cast<std::size_t>(e)] -= 1;
    }

    // boundary of faces: d2 (E x F), one column per face class representative
    std::vector<std::vector<long long>> d2(static_cast<std::size_t>(E), std::vector<long long>(static_cast<std::size_t>(F), 0));
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(F), 0);
    for (int t = 0; t < tri.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (seen[static_cast<std::size_t>(cls)]) continue;
            seen[static_cast<std::size_t>(cls)] = 1;
            int vs[3], n = 0;
            for (int v = 0; v < 4; ++v)
                if (v != f) vs[n++] = v;
            const int pairs[3][2] = {{vs[1], vs[2]}, {vs[0], vs[2]}, {vs[0], vs[1]}};
            const int signs[3] = {1, -1, 1};
            for (int k = 0; k < 3; ++k) {
                const int a = pairs[k][0], b = pairs[k][1];
                const int ec = tri.edge_class(t, a, b);
                const int s = tri.edge_corner_orientation(t, a, b) ? 1 : -1;
                d2[static_cast<std::size_t>(ec)][static_cast<std::size_t>(cls)] += signs[k] * s;
            }
        }
    }

    // chain complex sanity: d1 * d2 == 0
    for (int fcls = 0; fcls < F; ++fcls) {
        for (int v = 0; v < V; ++v) {
            long long sum = 0;
            for (int e = 0; e < E; ++e) sum += d1[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] *
                                                d2[static_cast<std::size_t>(e)][static_cast<std::size_t>(fcls)];
            if (sum != 0) throw TriError("internal: boundary maps do not compose to zero");
        }
    }

    const std::vector<long long> inv1 = smith_invariants(d1);
    const std::vector<long long> inv2 = smith_invariants(d2);
    const int rank_d1 = static_cast<int>(inv1.size());
    const int rank_d2 = static_cast<int>(inv2.size());

    AbelianGroup g;
    g.rank = E - rank_d1 - rank_d2;
    for (long long x : inv2)
        if (x > 1) g.torsion.push_back(x);
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

int z2_rank_of(const AbelianGroup& g) {
    int r = g.rank;
    for (long long x : g.torsion)
        if (x % 2 == 0) ++r;
    return r;
}

} // namespace tricert
