#pragma once

#include <iosfwd>
#include <string>

#include "tricert/triangulation.hpp"

namespace tricert {

struct TriFormatError : TriError { using TriError::TriError; };

// Text format, version line "tri 1", then "n <T>", then T lines with 4
// entries: "b" for a boundary face or "g:<tet>:<face>:<perm>" with <perm>
// the 4 digit images of vertices 0123. Round-trips bit-exactly.
std::string write_tri(const Triangulation& tri);
Triangulation read_tri(const std::string& text);

Triangulation read_tri_file(const std::string& path);
void write_tri_file(const Triangulation& tri, const std::string& path);

} // namespace tricert
