#pragma once

#include <optional>
#include <string>

#include "tricert/demography.hpp"
#include "tricert/normal_surface.hpp"

namespace tricert {

struct ClusterMismatch : TriError { using TriError::TriError; };
struct NotOrientable : TriError { using TriError::TriError; };

// Compression surgeries inside rogue clusters. Each one checks that the
// surface restricted to the cluster equals the canonical disk pattern and
// that the busted edges still have weight 0, then rewrites the coordinates
// of the cluster tetrahedra to the unique normal pattern realizing the
// post-surgery edge weights (0 -> 2 on the busted edges, all others
// unchanged). Matching equations are re-validated on the result.
//
// compress_isolated: annulus -> two open disks, one busted edge, chi + 2.
// compress_posse11:  pair of pants -> three open disks, three busted edges,
//                    chi + 4.
// compress_posse10:  disk with three cross-caps -> open Moebius band; the
//                    compression disk is chosen as the lowest-index pair
//                    {e, e'} where e is the rogue edge whose ring avoids the
//                    doubled middle tet; two busted edges, chi + 2.
NormalSurface compress_isolated(const Triangulation& tri, const NormalSurface& s,
                                const Cluster& k);
NormalSurface compress_posse11(const Triangulation& tri, const NormalSurface& s,
                               const Cluster& k);
NormalSurface compress_posse10(const Triangulation& tri, const NormalSurface& s,
                               const Cluster& k);

struct BustOutcome {
    std::vector<NormalSurface> surfaces;   // parallel to the input vector
    long long kappaPrime = 0;              // clusters compressed
    long long compressions = 0;            // total single compressions applied
    std::vector<long long> compressionsPer;  // per input surface
};

// Sequential compression over the selected independent subcollection. Pass
// one surface for a rank-1 class; pass the three restricted surfaces
// (colors 1..3 in order) for a rank-2 subgroup, in which case each cluster
// compresses the two color surfaces it touches.
BustOutcome bust_all(const Triangulation& tri, const std::vector<NormalSurface>& surfaces,
                     const ClusterSet& clusters);

// One verified step of the certificate chain; values are thirds-scaled.
struct ChainItem {
    std::string name;
    long long lhs3 = 0;
    long long rhs3 = 0;
    bool equality = false;     // lhs == rhs, otherwise lhs >= rhs
    bool holds = false;
    bool applicable = true;    // false when a stated hypothesis excludes it
    std::string gate;          // reason when not applicable
};

struct BoundCertificate {
    int rank = 1;
    long long tetCount = 0;
    std::vector<long long> chiBefore;       // per class (one entry for rank 1)
    std::vector<long long> chiAfter;        // after busting
    long long kappa = 0;
    long long kappaPrime = 0;
    std::array<long long, 3> kappaI{};      // rank 2, per color
    std::vector<long long> normUpperBound2; // per class, twice the bound U
    long long claimedBound2 = 0;            // twice the final bound 2 + sum U
    std::vector<ChainItem> chain;
    std::vector<std::string> hypothesisFlags;  // applicable items that fail
    bool chainConsistent = true;
};

// Full pipeline on a closed orientable one-vertex triangulation: coloring,
// canonical surface, torus inventory, ledger, clusters, busting, and the
// assembled inequality chain. On a layered lens space the cluster-dependent
// items are recorded as not applicable (the compression analysis excludes
// that family) and only the exact identities are checked.
BoundCertificate certify(const Triangulation& tri, const Z2Class& alpha);
BoundCertificate certify(const Triangulation& tri, const Z2Subgroup2& sub);

} // namespace tricert
