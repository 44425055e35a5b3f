#pragma once

#include <string>

#include "tricert/triangulation.hpp"

namespace tricert {

// Canonical relabeling: BFS from every (tet, vertex labeling) start, taking
// the lexicographically least encoding of the relabeled gluing table. Two
// triangulations are combinatorially isomorphic iff their canonical
// encodings agree.
std::string canonical_encoding(const Triangulation& tri);

// The canonical form itself (the relabeled triangulation realizing the
// least encoding).
Triangulation canonical_form(const Triangulation& tri);

bool isomorphic(const Triangulation& a, const Triangulation& b);

} // namespace tricert
