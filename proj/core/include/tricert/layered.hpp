#pragma once

#include <vector>

#include "tricert/triangulation.hpp"

namespace tricert {

struct DegreeOneEdge : TriError { using TriError::TriError; };
struct NotBoundaryEdge : TriError { using TriError::TriError; };
struct FacesNotDistinct : TriError { using TriError::TriError; };
struct NotCoprime : TriError { using TriError::TriError; };
struct RangeViolation : TriError { using TriError::TriError; };
struct ExcludedTriple : TriError { using TriError::TriError; };

// A solid torus built by iterated layering, as a standalone triangulation
// plus bookkeeping. Meridional weights are recovered from the classes of
// the boundary edges in H_1 of the solid torus, so they are certified
// rather than assumed.
struct LayeredSolidTorus {
    Triangulation tri;
    std::array<long long, 3> weights{};             // {p, q, p+q}, ascending
    std::array<int, 3> boundaryEdges{};             // edge class carrying weights[k]
    std::vector<int> interiorEdges;                 // ascending edge class order
};

// The unique 1-tetrahedron solid torus with boundary edge degrees {1,2,3}.
Triangulation lst_123();

// Layer a new tetrahedron across the boundary quadrilateral with diagonal
// `edgeClass`. The edge must be boundary, incident to two distinct boundary
// faces, and of degree >= 2.
Triangulation layer(const Triangulation& tri, int edgeClass);

// Fold the two boundary faces incident to `edgeClass` onto each other by
// the reflection across the edge. Same preconditions as layer.
Triangulation fold(const Triangulation& tri, int edgeClass);

// Meridional edge weights of a solid torus triangulation with one vertex:
// |class of each edge in H_1 = Z|. Throws if H_1 is not infinite cyclic.
std::vector<long long> meridional_weights(const Triangulation& tri);

// The layered solid torus with meridional boundary weights {p, q, p+q},
// gcd(p,q)=1, 0<p<q; built by the subtractive walk from {1,2,3} and
// certified by recomputing weights at the end.
LayeredSolidTorus build_lst(long long p, long long q);

// A layered lens space with H_1 = Z/p (certified); q is honored up to the
// homology-detectable ambiguity.
Triangulation build_lens(long long p, long long q);

// A maximal layered solid torus found as a subcomplex.
struct DetectedLst {
    std::vector<int> tets;                  // ambient tet indices, layering order from the seed
    std::vector<int> interiorEdges;         // ambient edge classes (interior to the subcomplex)
    std::vector<int> boundaryEdges;         // ambient edge classes of the 3 boundary edges
    std::vector<int> boundaryEdgeDegrees;   // degrees inside the subcomplex, matching boundaryEdges
    std::vector<int> interiorEdgeDegrees;   // degrees inside the subcomplex (= ambient degrees)
    Triangulation standalone;               // the abstract layered solid torus
};

// All maximal layered solid tori in a closed triangulation, deduplicated by
// tet set, ordered by least tet index.
std::vector<DetectedLst> detect_max_lsts(const Triangulation& tri);

// True when removing one face pairing turns the whole closed triangulation
// into a layered solid torus, i.e. the manifold is a layered lens space.
// The pairwise-intersection check below does not apply to these.
bool is_layered_lens_space(const Triangulation& tri);

// Prop-style check: pairwise intersections of distinct maximal layered
// solid tori are at most one edge class. Returns offending pairs. The
// underlying statement assumes a 0-efficient minimal triangulation that is
// not a layered lens space; callers gate on that hypothesis.
std::vector<std::pair<int, int>> lst_pairwise_violations(const Triangulation& tri,
                                                         const std::vector<DetectedLst>& inv);

} // namespace tricert
