#pragma once

#include "tricert/demography.hpp"

namespace tricert {

struct NotFlippable : TriError { using TriError::TriError; };
struct NoProgress : TriError { using TriError::TriError; };

// A degree-4 edge flip: the four tetrahedra around the target edge form an
// octahedron whose central diagonal is replaced by one of the two others.
// Tetrahedron count is preserved; the four octahedron slots are reused.
struct FlipMove {
    int edge = -1;                   // flipped edge class (old indexing)
    int diagonal = 0;                // 0 or 1: which replacement diagonal
    Triangulation tri;               // resulting triangulation
    int createdEdge = -1;            // class of the new diagonal (new indexing)
    std::vector<int> oldEdgeClass;   // new edge class -> old class, -1 for createdEdge
    std::array<int, 2> parityEdges{};  // old classes whose parity sum gives the diagonal's
};

// Edge classes of degree 4 whose four tetrahedra are distinct and whose link
// closes without reversing the edge, ascending.
std::vector<int> flippable_edges(const Triangulation& tri);

// Flip the edge across the chosen diagonal. Throws NotFlippable when the
// octahedron condition fails.
FlipMove edge_flip(const Triangulation& tri, int edge, int diagonal);

// The cocycle carried through a flip: every surviving edge keeps its parity,
// the created diagonal's parity is forced by the cocycle condition.
Z2Class transport_class(const FlipMove& mv, const Z2Class& alpha);

struct NormalizeResult {
    Triangulation tri;
    Z2Class alpha;                   // the class transported to the result
    long long flips = 0;
    // lexicographic potential after each accepted flip, starting with the
    // input: (quad-type maximal tori at insolvent degree-4 edges, e-tets)
    std::vector<std::pair<long long, long long>> potentialTrace;
};

// Iterated potential-decreasing flips until no insolvent degree-4 edge
// remains. Among candidates, the lowest edge index and then the lower
// diagonal wins. Throws NoProgress when insolvent degree-4 edges remain but
// no flip decreases the potential.
NormalizeResult normalize_insolvent_deg4(const Triangulation& tri, const Z2Class& alpha);

} // namespace tricert
