#pragma once

#include "tricert/triangulation.hpp"

namespace tricert {

// The 6-tetrahedron triangulation of the 3-torus: the unit cube split along
// coordinate orderings, opposite cube faces identified by translation.
// Closed, orientable, one vertex, 7 edges, H_1 = Z^3.
Triangulation three_torus();

// A closed triangulation together with the distinguished edge classes it was
// built around. The edges become rogue under some rank-1 class; tests recover
// that class by scanning the (small) class enumeration.
struct ClusterFixture {
    Triangulation tri;
    std::vector<int> coreEdges;
};

// Pentagonal bipyramid core: a 5-tetrahedron ring around a degree-5 edge,
// two ring tets fattened into 2-tet layered solid tori whose diagonals lie
// on that edge, closed up with one spare tetrahedron. Under one class the
// central edge is an isolated rogue with a 5-tet cluster.
ClusterFixture bipyramid_fixture();

// Two tetrahedra sharing a face whose three edges each complete to a
// degree-5 ring through a separate 3-tet arm; the three edges form a posse
// with an 11-tet cluster.
ClusterFixture posse11_fixture();

// Same construction with the middle tets of two arms coinciding, giving the
// 10-tet cluster variant. The closure is necessarily non-orientable (an
// exhaustive scan of the forced local structure found no orientable closure
// keeping all six solid tori embedded), so this fixture exercises the
// surgery arithmetic but not the orientability-gated certificate path.
ClusterFixture posse10_fixture();

// The bipyramid ring closed with three extra tetrahedra instead of one, so
// that a second independent cohomology class survives away from the ring: a
// closed one-vertex 10-tet manifold with H_1 = Z/2 + Z/2 and exactly one
// rank-2 subgroup. Under that subgroup the central edge is an isolated rogue
// whose 5-tet cluster touches two colors, so busting compresses two of the
// three canonical surfaces and leaves the third untouched. The closure is
// non-orientable (no orientable closure of this shape carries the second
// class; the apex pattern that keeps spare-tet edges away from the ring
// forces a reflection), so like posse10_fixture it exercises the surgery
// arithmetic but not the orientability-gated certificate path.
ClusterFixture rank2_twin_fixture();

// A 4-tetrahedron ring around a degree-4 edge with one ring tet fattened
// into a layered solid torus: the central edge is insolvent of degree 4 and
// is the seed input for flip normalization.
ClusterFixture insolvent_deg4_fixture();

} // namespace tricert
