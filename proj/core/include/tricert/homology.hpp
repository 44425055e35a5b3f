#pragma once

#include <vector>

#include "tricert/triangulation.hpp"

namespace tricert {

struct NotClosed : TriError { using TriError::TriError; };

// A Z/2 cohomology class, given by its value on every edge class.
struct Z2Class {
    std::vector<std::uint8_t> edgeBits;

    bool operator==(const Z2Class&) const = default;
    bool zero() const {
        for (auto b : edgeBits)
            if (b) return false;
        return true;
    }
    friend Z2Class operator+(const Z2Class& a, const Z2Class& b) {
        Z2Class r = a;
        for (std::size_t i = 0; i < r.edgeBits.size(); ++i) r.edgeBits[i] ^= b.edgeBits[i];
        return r;
    }
};

// A rank-2 subgroup of H^1(M; Z/2): the three nonzero classes, with
// classes[2] == classes[0] + classes[1].
struct Z2Subgroup2 {
    std::array<Z2Class, 3> classes;
};

// True when every face's three edge values (counted with multiplicity) sum
// to 0 mod 2.
bool is_cocycle(const Triangulation& tri, const Z2Class& c);

// Basis of H^1(M; Z/2): cocycles modulo coboundaries, pivoting on ascending
// edge index for reproducibility. Requires a closed triangulation.
std::vector<Z2Class> h1_z2_basis(const Triangulation& tri);

// All 2^r - 1 nonzero classes, in deterministic order.
std::vector<Z2Class> enumerate_rank1(const Triangulation& tri);

// All (2^r-1)(2^r-2)/6 rank-2 subgroups, deduplicated, deterministic order.
std::vector<Z2Subgroup2> enumerate_rank2(const Triangulation& tri);

// Finitely generated abelian group: free rank plus torsion coefficients
// (each > 1, each dividing the next).
struct AbelianGroup {
    int rank = 0;
    std::vector<long long> torsion;

    bool operator==(const AbelianGroup&) const = default;
};

// Integral first homology via Smith normal form of the boundary maps.
AbelianGroup integral_h1(const Triangulation& tri);

// rank of H^1(M; Z/2) predicted by universal coefficients: free rank plus
// the number of even torsion coefficients.
int z2_rank_of(const AbelianGroup& g);

// Smith normal form invariant factors (non-negative, divisibility-ordered)
// of an integer matrix given as rows. When `left` is non-null it receives
// the unimodular row-transform L with L*m*C diagonal.
std::vector<long long> smith_invariants(std::vector<std::vector<long long>> m,
                                        std::vector<std::vector<long long>>* left = nullptr);

// For a one-vertex triangulation (so every edge is a loop): the image of
// each edge class in the free part of H_1, as a coordinate vector of length
// equal to the free rank. Boundary faces are allowed; the chain quotient is
// Z^E / im(d2) over all face classes.
std::vector<std::vector<long long>> edge_images_in_free_h1(const Triangulation& tri);

} // namespace tricert
