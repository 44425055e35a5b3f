#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tricert/perm4.hpp"

namespace tricert {

struct TriError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonInvolutiveGluing : TriError { using TriError::TriError; };
struct SelfGluedFace : TriError { using TriError::TriError; };
struct IndexOutOfRange : TriError { using TriError::TriError; };

// One side of a face pairing: face `face` of tetrahedron `tet`, with the
// vertex permutation mapping labels of the source tetrahedron to `tet`.
struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;

    bool operator==(const Gluing&) const = default;
};

using GluingTable = std::vector<std::array<std::optional<Gluing>, 4>>;

// An edge corner: the edge {a,b} (a<b) of tetrahedron `tet`.
struct EdgeCorner {
    int tet = -1;
    int a = -1;
    int b = -1;

    bool operator==(const EdgeCorner&) const = default;
};

struct EdgeRef {
    int index = -1;          // edge class index
    EdgeCorner rep;          // representative corner, oriented rep.a -> rep.b

    bool operator==(const EdgeRef&) const = default;
};

struct Subcomplex;

// Pseudo-simplicial triangulation: a gluing table over tetrahedra plus the
// derived skeleton (vertex, edge and face classes). Immutable after build;
// all queries are const and thread-safe.
class Triangulation {
public:
    static Triangulation build(GluingTable table);

    int tet_count() const { return static_cast<int>(gluings_.size()); }
    const std::optional<Gluing>& gluing(int tet, int face) const;
    const GluingTable& table() const { return gluings_; }

    bool closed() const { return closed_; }
    bool orientable() const { return orientable_; }
    // +1/-1 per tetrahedron when orientable, empty otherwise.
    const std::vector<int>& tet_orientations() const { return tetOrient_; }

    int vertex_count() const { return vertexCount_; }
    int edge_count() const { return static_cast<int>(edgeReps_.size()); }
    int face_class_count() const { return faceClassCount_; }

    int vertex_class(int tet, int v) const;
    int face_class(int tet, int f) const;

    // Edge class of corner {a,b} of tet; a != b.
    int edge_class(int tet, int a, int b) const;
    // True when the corner, read a -> b, agrees with the orientation of the
    // class representative.
    bool edge_corner_orientation(int tet, int a, int b) const;

    EdgeRef edge(int e) const;
    int edge_degree(int e) const { return static_cast<int>(edgeCorners_[static_cast<std::size_t>(e)].size()); }
    bool edge_is_boundary(int e) const { return edgeBoundary_[static_cast<std::size_t>(e)] != 0; }
    // All corners in a class, in ascending (tet, a, b) order.
    const std::vector<EdgeCorner>& edge_corners(int e) const { return edgeCorners_[static_cast<std::size_t>(e)]; }

    // Corners of an interior edge in cyclic order around the edge, starting
    // from the representative corner. Each corner is oriented coherently with
    // the walk. Requires the edge to be interior.
    std::vector<EdgeCorner> edge_link(int e) const;

    bool face_is_boundary(int tet, int f) const { return !gluing(tet, f).has_value(); }
    int boundary_face_count() const { return boundaryFaceCount_; }

    // V - E + F - T of the cell structure.
    int euler_characteristic() const;

    bool connected() const;
    // Tet index sets of the connected components, each ascending; components
    // ordered by least tet index.
    std::vector<std::vector<int>> connected_components() const;

    // Sub-triangulation generated by a set of tetrahedra: gluings between
    // chosen tets kept, everything else becomes boundary. Tets are renumbered
    // ascending.
    Subcomplex subcomplex_generated(const std::vector<int>& tets) const;

private:
    Triangulation() = default;
    void compute_skeleton();

    GluingTable gluings_;
    bool closed_ = false;
    bool orientable_ = false;
    std::vector<int> tetOrient_;
    int vertexCount_ = 0;
    int faceClassCount_ = 0;
    int boundaryFaceCount_ = 0;
    std::vector<int> vertexClass_;            // 4*tet + v -> class
    std::vector<int> faceClass_;              // 4*tet + f -> class
    std::vector<int> edgeClass_;              // 6*tet + edgeIndex -> class
    std::vector<std::uint8_t> edgeOrient_;    // 6*tet + edgeIndex -> 1 if (a<b) order matches rep
    std::vector<EdgeCorner> edgeReps_;
    std::vector<std::vector<EdgeCorner>> edgeCorners_;
    std::vector<std::uint8_t> edgeBoundary_;
};

struct Subcomplex {
    Triangulation tri;
    std::vector<int> tetMap;          // new tet index -> old tet index
    bool edgeInjective = false;       // distinct sub edge classes stay distinct in the ambient complex
    bool vertexInjective = false;
    std::vector<int> edgeToAmbient;   // sub edge class -> ambient edge class
    std::vector<int> vertexToAmbient;
};

// Convenience: build from a plain list of (tet, face) -> Gluing entries.
Triangulation build_triangulation(const GluingTable& table);

} // namespace tricert
