#pragma once

#include <string>

#include "tricert/coloring.hpp"
#include "tricert/layered.hpp"

namespace tricert {

struct ProfileMismatch : TriError { using TriError::TriError; };

enum class EdgeRole : std::uint8_t { Adult, Child, Baby };
enum class Decency : std::uint8_t { NA, Decent, Rogue };

// One symbol of the cyclic type tuple around an edge: the tetrahedron type
// ('e', 't' for t/tt, 'q' for q/qq, 'x' for qtt, 'z' for qqq) plus the dot
// count (1 = tet lies in a maximal layered solid torus, 2 = that torus also
// carries a baby edge supported by this edge).
struct TupleSymbol {
    char type = '?';
    int dots = 0;

    bool operator==(const TupleSymbol&) const = default;
};

// Record for one H-even edge. Fractional counting values are exact thirds:
// a field with suffix 3 stores three times the value.
struct EdgeEntry {
    int edge = -1;
    long long degree = 0;
    long long dT = 0;                  // corners lying in t-type tets (rank 1)
    long long dTT = 0;                 // corners lying in tt-type tets (rank 2)
    long long dQTT = 0;                // corners lying in qtt-type tets (rank 2)
    EdgeRole role = EdgeRole::Adult;
    int supporter = -1;                // for children: the supporting adult edge
    std::vector<int> lsts;             // inventory indices of tori containing the edge
    long long s = 0;                   // #{maximal layered solid tori containing e}
    long long b = 0;                   // #babies supported through e (adults)
    long long i3 = 0;                  // 3 * i(e)
    long long g3 = 0, a3 = 0, f3 = 0;  // 3 * g/a/f (adults only)
    bool solvent = true;
    bool isolated = true;
    Decency decency = Decency::NA;
    std::vector<int> neighbors;        // adult edges sharing an H-even face
    int profileCase = 0;               // 1..5 for insolvent adults, 0 otherwise
    bool profileHasT = false;          // distinguishes (2a) from (2b)
    std::vector<TupleSymbol> tuple;    // cyclic type tuple (insolvent adults)
};

struct EdgeLedger {
    int rank = 1;
    long long tetCount = 0;
    long long I3 = 0;                  // 3 * (sum_d (d-4) E_{even,d} + type-count term)
    std::vector<int> evenEdges;        // ascending edge classes
    std::vector<EdgeEntry> entries;    // parallel to evenEdges
    std::vector<int> entryOf;          // edge class -> entry index, -1 if not H-even
    std::vector<int> lstSupporter;     // per inventory index
    std::vector<std::uint8_t> lstQuadType;  // 1 if the torus' tets are all quad-type
    std::vector<long long> lstBabies;  // #degree-3 H-even interior edges per torus
    std::vector<int> tetLst;           // tet -> inventory index, -1 outside
    std::vector<char> tetSym;          // tet -> 'e', 't' (t/tt), 'q' (q/qq), 'x' (qtt), 'z' (qqq)
    std::vector<int> tetColor;         // tet -> label of a quad-type tet in rank 2, else 0

    const EdgeEntry* entry(int edgeClass) const {
        const int i = entryOf[static_cast<std::size_t>(edgeClass)];
        return i < 0 ? nullptr : &entries[static_cast<std::size_t>(i)];
    }
};

// Roles, supporters, s/b, degrees by type and the neighbor relation, for a
// rank-1 or rank-2 coloring and a precomputed torus inventory.
EdgeLedger classify_edges(const Triangulation& tri, const ColoringR1& c,
                          const std::vector<DetectedLst>& inv);
EdgeLedger classify_edges(const Triangulation& tri, const ColoringR2& c,
                          const std::vector<DetectedLst>& inv);

// Fills i/g/a/f (thirds-scaled), solvency and decency for every entry.
void counting_values(EdgeLedger& led);

struct IdentityReport {
    long long I3 = 0;
    long long sumI3 = 0, sumG3 = 0, sumA3 = 0, sumF3 = 0;
    bool iEqual = false;               // I == sum of i(e) over even edges
    bool gBound = false;               // I >= sum of g(e) over adults
    bool fBound = false;               // I >= sum of f(e) over adults
    bool aCancel = false;              // adjustments sum to zero
    bool decentBiconditional = false;  // f >= 0 iff solvent or decent, each adult
};

// Exact verification of the rewriting identities and bounds on the ledger.
IdentityReport global_sums(const EdgeLedger& led);

// Fills the cyclic type tuple of every insolvent adult and validates it
// against the admissible profiles; also checks that the incident tetrahedra
// are distinct and each torus meets the edge in one corner. Throws
// ProfileMismatch when an insolvent edge fits no admissible profile.
void insolvency_profile(EdgeLedger& led, const Triangulation& tri);

enum class ClusterKind : std::uint8_t { Isolated, Posse11, Posse10 };

struct Cluster {
    ClusterKind kind = ClusterKind::Isolated;
    std::vector<int> rogueEdges;       // 1 edge (isolated) or 3 (posse)
    std::vector<int> tets;             // ascending tet indices
    std::array<int, 2> colors{0, 0};   // rank 2: the two touched colors, else 0
};

struct ClusterSet {
    std::vector<Cluster> clusters;
    std::vector<std::pair<int, int>> overlaps;  // cluster index pairs sharing a tet
    std::vector<int> selected;                  // greedy independent subcollection
    long long kappa = 0;
    long long kappaPrime = 0;
    std::array<long long, 3> kappaI{};          // per color (rank 2)
    std::array<long long, 3> kappaIJ{};         // color pairs {1,2},{1,3},{2,3}
};

// Clusters around isolated rogue edges and posses, the overlap graph, and a
// greedy maximal independent subcollection. Requires profiles computed.
ClusterSet build_clusters(const EdgeLedger& led, const Triangulation& tri);

} // namespace tricert
