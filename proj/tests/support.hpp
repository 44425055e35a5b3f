#pragma once

#include <vector>

#include "tricert/triangulation.hpp"

namespace testsupport {

// One tetrahedron, all faces boundary.
tricert::Triangulation free_simplex();

// Brute-force enumeration of all closed 2-tetrahedron triangulations
// (every face glued, Euler characteristic 0 so vertex links are spheres),
// deduplicated up to combinatorial isomorphism.
const std::vector<tricert::Triangulation>& two_tet_closed_census(bool orientableOnly);

} // namespace testsupport
