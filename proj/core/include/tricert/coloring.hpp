#pragma once

#include <map>

#include "tricert/homology.hpp"
#include "tricert/triangulation.hpp"

namespace tricert {

struct NotOneVertex : TriError { using TriError::TriError; };
struct CocycleViolation : TriError { using TriError::TriError; };

enum class TetTypeR1 : std::uint8_t { E, T, Q };

// Classify one tetrahedron from the parities of its 6 edges (1 = odd).
// For type T, *triangleVertex receives the vertex carried by the triangle
// (the common vertex of the three odd edges); for type Q, *quadType the
// quad index disjoint from the even opposite pair. Throws CocycleViolation
// for the 56 patterns outside the e/t/q table.
TetTypeR1 classify_tet_parities(const std::array<std::uint8_t, 6>& odd,
                                int* triangleVertex = nullptr, int* quadType = nullptr);

struct ColoringR1 {
    Z2Class alpha;
    std::vector<std::uint8_t> edgeOdd;     // per edge class
    std::vector<std::uint8_t> faceOdd;     // per face class
    std::vector<TetTypeR1> tetType;        // per tet
    std::vector<int> triangleVertex;       // per tet; apex for type T, else -1
    std::vector<int> quadType;             // per tet; quad index for type Q, else -1
    long long countE = 0, countT = 0, countQ = 0;
    std::map<int, long long> evenEdgeDegreeCounts;   // degree d -> #even edges of degree d

    // sum over d of (d-4) * #even edges of degree d
    long long degree_weighted_even_sum() const;
};

// Rank-1 coloring of a closed one-vertex triangulation by a cocycle.
ColoringR1 color_rank1(const Triangulation& tri, const Z2Class& alpha);

enum class TetTypeR2 : std::uint8_t { E, TT, QQ, QTT, QQQ };
enum class FaceTypeR2 : std::uint8_t { HEven, IEven, HOdd };

// Classify one tetrahedron from the labels of its 6 edges: 0 for H-even,
// 1..3 for i-even. For TT/QQ, *label receives i; for QTT, *label receives
// the index of its lone i-even opposite pair partner k and *hEdge the
// H-even edge slot. Throws CocycleViolation for invalid patterns.
TetTypeR2 classify_tet_labels(const std::array<std::uint8_t, 6>& label,
                              int* labelOut = nullptr, int* hEdge = nullptr);

struct ColoringR2 {
    Z2Subgroup2 subgroup;
    std::vector<std::uint8_t> edgeLabel;   // per edge class: 0 = H-even, else i
    std::vector<FaceTypeR2> faceType;      // per face class
    std::vector<int> faceLabel;            // i for i-even faces, else 0
    std::vector<TetTypeR2> tetType;        // per tet
    std::vector<int> tetLabel;             // i for TT(i)/QQ(i), k for QTT, else 0
    std::vector<int> qttHEdge;             // per tet; H-even edge slot of a QTT tet, else -1
    long long countE = 0, countTT = 0, countQQ = 0, countQTT = 0, countQQQ = 0;
    std::map<int, long long> evenEdgeDegreeCounts;   // H-even edges by degree

    long long degree_weighted_even_sum() const;
};

// Rank-2 coloring by a rank-2 subgroup {0, a1, a2, a3}, a3 = a1 + a2.
ColoringR2 color_rank2(const Triangulation& tri, const Z2Subgroup2& sub);

// The rank-1 coloring by alpha_i recovered from a rank-2 coloring
// (an edge is alpha_i-even iff it is H-even or i-even).
ColoringR1 restrict_rank1(const Triangulation& tri, const ColoringR2& c, int i);

} // namespace tricert
