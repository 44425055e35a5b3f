#pragma once

#include <vector>

#include "tricert/coloring.hpp"
#include "tricert/triangulation.hpp"

namespace tricert {

struct MatchingViolation : TriError { using TriError::TriError; };

// Embedded normal surface in tetrahedron coordinates: per tet, 4 triangle
// coordinates (one per cut-off vertex) and 3 quad coordinates (quad k is
// disjoint from edges k and 5-k). At most one quad type per tet.
struct NormalSurface {
    std::vector<std::array<long long, 4>> tri;
    std::vector<std::array<long long, 3>> quad;

    bool operator==(const NormalSurface&) const = default;
    long long triangle_total() const;
    long long quad_total() const;
};

NormalSurface empty_surface(const Triangulation& tri);
// All triangle coordinates 1: the vertex-linking surface of a one-vertex
// triangulation.
NormalSurface vertex_link(const Triangulation& tri);

// The normal surface with edge-weight alpha[e] on every edge: one triangle
// in each type-T tet at its apex vertex, one quad in each type-Q tet
// separating the even pair, nothing in type-E tets.
NormalSurface canonical_surface(const Triangulation& tri, const ColoringR1& c);

// Validate coordinates: non-negativity, one quad type per tet, and the arc
// matching equations across every face of a closed triangulation.
void check_matching(const Triangulation& tri, const NormalSurface& s);

// Intersection count with each edge class; throws MatchingViolation when
// corners of one class disagree.
std::vector<long long> edge_weights(const Triangulation& tri, const NormalSurface& s);

// Weight-count formula for the Euler characteristic:
// sum_e w(e) - (3 #tri + 4 #quad)/2 + (#tri + #quad).
long long euler_char(const Triangulation& tri, const NormalSurface& s);

struct SurfaceComponent {
    long long chi = 0;          // points - arcs + disks of the induced cellulation
    bool orientable = false;
    std::vector<long long> edgeWeights;
    long long points = 0, arcs = 0, disks = 0;
};

// Connected components of the surface, via union-find over normal disks
// glued along matched arcs. chi here is computed from the induced cell
// structure, independently of euler_char. Deterministic order (least disk).
std::vector<SurfaceComponent> components(const Triangulation& tri, const NormalSurface& s);

// Edge-weight test for being nearly canonical dual to alpha: weight 0 or 2
// on alpha-even edges, weight 1 on alpha-odd edges.
bool is_nearly_canonical(const Triangulation& tri, const NormalSurface& s, const Z2Class& alpha);

} // namespace tricert
