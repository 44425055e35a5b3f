#include "tricert/coloring.hpp"

#include <algorithm>

namespace tricert {

namespace {

// edge indices of the face opposite vertex f
constexpr std::array<std::array<int, 3>, 4> kFaceEdges = {{
    {3, 4, 5},   // face 0: vertices {1,2,3}
    {1, 2, 5},   // face 1: vertices {0,2,3}
    {0, 2, 4},   // face 2: vertices {0,1,3}
    {0, 1, 3},   // face 3: vertices {0,1,2}
}};

bool edge_contains_vertex(int e, int v) {
    return kEdgeVerts[static_cast<std::size_t>(e)][0] == v || kEdgeVerts[static_cast<std::size_t>(e)][1] == v;
}

void require_colorable(const Triangulation& tri) {
    if (!tri.closed()) throw NotClosed("coloring requires a closed triangulation");
    if (tri.vertex_count() != 1) throw NotOneVertex("coloring reads edges as loops; one vertex required");
}

} // namespace

TetTypeR1 classify_tet_parities(const std::array<std::uint8_t, 6>& odd,
                                int* triangleVertex, int* quadType) {
    int nOdd = 0;
    for (int e = 0; e < 6; ++e) {
        if (odd[static_cast<std::size_t>(e)] > 1) throw CocycleViolation("edge parity must be 0 or 1");
        nOdd += odd[static_cast<std::size_t>(e)];
    }
    if (triangleVertex) *triangleVertex = -1;
    if (quadType) *quadType = -1;
    if (nOdd == 0) return TetTypeR1::E;
    if (nOdd == 3) {
        // the odd edges must share one vertex, leaving an even face
        for (int v = 0; v < 4; ++v) {
            bool all = true;
            for (int e = 0; e < 6; ++e)
                if (odd[static_cast<std::size_t>(e)] && !edge_contains_vertex(e, v)) all = false;
            if (all) {
                if (triangleVertex) *triangleVertex = v;
                return TetTypeR1::T;
            }
        }
        throw CocycleViolation("three odd edges not incident to one vertex");
    }
    if (nOdd == 4) {
        for (int e = 0; e < 3; ++e) {
            if (!odd[static_cast<std::size_t>(e)] && !odd[static_cast<std::size_t>(5 - e)]) {
                if (quadType) *quadType = e;
                return TetTypeR1::Q;
            }
        }
        throw CocycleViolation("two even edges are not an opposite pair");
    }
    throw CocycleViolation("edge parity pattern admits no tetrahedron type");
}

TetTypeR2 classify_tet_labels(const std::array<std::uint8_t, 6>& label,
                              int* labelOut, int* hEdge) {
    int nH = 0;
    for (int e = 0; e < 6; ++e) {
        if (label[static_cast<std::size_t>(e)] > 3) throw CocycleViolation("edge label must be 0..3");
        if (label[static_cast<std::size_t>(e)] == 0) ++nH;
    }
    if (labelOut) *labelOut = 0;
    if (hEdge) *hEdge = -1;

    if (nH == 6) return TetTypeR2::E;

    if (nH == 3) {
        for (int v = 0; v < 4; ++v) {
            bool all = true;
            int common = -1;
            for (int e = 0; e < 6 && all; ++e) {
                if (label[static_cast<std::size_t>(e)] == 0) {
                    if (edge_contains_vertex(e, v)) all = false;
                } else {
                    if (!edge_contains_vertex(e, v)) all = false;
                    if (common == -1) common = label[static_cast<std::size_t>(e)];
                    if (common != label[static_cast<std::size_t>(e)]) all = false;
                }
            }
            if (all) {
                if (labelOut) *labelOut = common;
                return TetTypeR2::TT;
            }
        }
        throw CocycleViolation("three H-even edges do not bound a face with one label outside");
    }

    if (nH == 2) {
        for (int e = 0; e < 3; ++e) {
            if (label[static_cast<std::size_t>(e)] == 0 && label[static_cast<std::size_t>(5 - e)] == 0) {
                int common = -1;
                for (int e2 = 0; e2 < 6; ++e2) {
                    if (label[static_cast<std::size_t>(e2)] == 0) continue;
                    if (common == -1) common = label[static_cast<std::size_t>(e2)];
                    if (common != label[static_cast<std::size_t>(e2)])
                        throw CocycleViolation("mixed labels around an H-even opposite pair");
                }
                if (labelOut) *labelOut = common;
                return TetTypeR2::QQ;
            }
        }
        throw CocycleViolation("two H-even edges are not an opposite pair");
    }

    if (nH == 1) {
        int h = -1;
        for (int e = 0; e < 6; ++e)
            if (label[static_cast<std::size_t>(e)] == 0) h = e;
        const int k = label[static_cast<std::size_t>(5 - h)];
        const int a = kEdgeVerts[static_cast<std::size_t>(h)][0];
        const int b = kEdgeVerts[static_cast<std::size_t>(h)][1];
        int cd[2], n = 0;
        for (int v = 0; v < 4; ++v)
            if (v != a && v != b) cd[n++] = v;
        // the two faces containing the H-even edge contribute one label each
        const int i = label[static_cast<std::size_t>(edge_index(a, cd[0]))];
        const int i2 = label[static_cast<std::size_t>(edge_index(b, cd[0]))];
        const int j = label[static_cast<std::size_t>(edge_index(a, cd[1]))];
        const int j2 = label[static_cast<std::size_t>(edge_index(b, cd[1]))];
        if (i != i2 || j != j2 || i == j || ((1 ^ 2 ^ 3) != (i ^ j ^ k)) || i == k || j == k)
            throw CocycleViolation("labels around a single H-even edge are not {i,i,j,j,k}");
        if (labelOut) *labelOut = k;
        if (hEdge) *hEdge = h;
        return TetTypeR2::QTT;
    }

    if (nH == 0) {
        int seen = 0;
        for (int e = 0; e < 3; ++e) {
            if (label[static_cast<std::size_t>(e)] != label[static_cast<std::size_t>(5 - e)])
                throw CocycleViolation("opposite pairs must carry equal labels");
            seen |= 1 << label[static_cast<std::size_t>(e)];
        }
        if (seen != 0b1110) throw CocycleViolation("three opposite pairs must use all three labels");
        return TetTypeR2::QQQ;
    }

    throw CocycleViolation("edge label pattern admits no tetrahedron type");
}

long long ColoringR1::degree_weighted_even_sum() const {
    long long s = 0;
    for (const auto& [d, n] : evenEdgeDegreeCounts) s += static_cast<long long>(d - 4) * n;
    return s;
}

long long ColoringR2::degree_weighted_even_sum() const {
    long long s = 0;
    for (const auto& [d, n] : evenEdgeDegreeCounts) s += static_cast<long long>(d - 4) * n;
    return s;
}

ColoringR1 color_rank1(const Triangulation& tri, const Z2Class& alpha) {
    require_colorable(tri);
    if (static_cast<int>(alpha.edgeBits.size()) != tri.edge_count())
        throw IndexOutOfRange("class length does not match edge count");
    if (!is_cocycle(tri, alpha)) throw CocycleViolation("class is not a cocycle");

    ColoringR1 c;
    c.alpha = alpha;
    c.edgeOdd = alpha.edgeBits;
    c.faceOdd.assign(static_cast<std::size_t>(tri.face_class_count()), 0);
    std::vector<std::uint8_t> faceSeen(static_cast<std::size_t>(tri.face_class_count()), 0);

    for (int t = 0; t < tri.tet_count(); ++t) {
        std::array<std::uint8_t, 6> odd{};
        for (int e = 0; e < 6; ++e)
            odd[static_cast<std::size_t>(e)] =
                alpha.edgeBits[static_cast<std::size_t>(tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(e)][0],
                                                                      kEdgeVerts[static_cast<std::size_t>(e)][1]))];
        int tv = -1, qt = -1;
        const TetTypeR1 type = classify_tet_parities(odd, &tv, &qt);
        c.tetType.push_back(type);
        c.triangleVertex.push_back(tv);
        c.quadType.push_back(qt);
        if (type == TetTypeR1::E) ++c.countE;
        if (type == TetTypeR1::T) ++c.countT;
        if (type == TetTypeR1::Q) ++c.countQ;

        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (faceSeen[static_cast<std::size_t>(cls)]) continue;
            faceSeen[static_cast<std::size_t>(cls)] = 1;
            int nOdd = 0;
            for (int e : kFaceEdges[static_cast<std::size_t>(f)]) nOdd += odd[static_cast<std::size_t>(e)];
            if (nOdd != 0 && nOdd != 2) throw CocycleViolation("face with an odd number of odd edges");
            c.faceOdd[static_cast<std::size_t>(cls)] = (nOdd == 2);
        }
    }

    for (int e = 0; e < tri.edge_count(); ++e)
        if (!alpha.edgeBits[static_cast<std::size_t>(e)]) ++c.evenEdgeDegreeCounts[tri.edge_degree(e)];
    return c;
}

ColoringR2 color_rank2(const Triangulation& tri, const Z2Subgroup2& sub) {
    require_colorable(tri);
    for (const Z2Class& a : sub.classes) {
        if (static_cast<int>(a.edgeBits.size()) != tri.edge_count())
            throw IndexOutOfRange("class length does not match edge count");
        if (a.zero()) throw CocycleViolation("subgroup classes must be nonzero");
        if (!is_cocycle(tri, a)) throw CocycleViolation("class is not a cocycle");
    }
    if (!(sub.classes[2] == sub.classes[0] + sub.classes[1]))
        throw CocycleViolation("third class must be the sum of the first two");
    if (sub.classes[0] == sub.classes[1]) throw CocycleViolation("subgroup classes must be distinct");

    ColoringR2 c;
    c.subgroup = sub;
    for (int e = 0; e < tri.edge_count(); ++e) {
        int zeros = 0, which = 0;
        for (int i = 0; i < 3; ++i) {
            if (!sub.classes[static_cast<std::size_t>(i)].edgeBits[static_cast<std::size_t>(e)]) {
                ++zeros;
                which = i + 1;
            }
        }
        c.edgeLabel.push_back(zeros == 3 ? 0 : static_cast<std::uint8_t>(which));
        if (zeros != 3 && zeros != 1) throw CocycleViolation("edge must be H-even or i-even for a unique i");
    }

    c.faceType.assign(static_cast<std::size_t>(tri.face_class_count()), FaceTypeR2::HEven);
    c.faceLabel.assign(static_cast<std::size_t>(tri.face_class_count()), 0);
    std::vector<std::uint8_t> faceSeen(static_cast<std::size_t>(tri.face_class_count()), 0);

    for (int t = 0; t < tri.tet_count(); ++t) {
        std::array<std::uint8_t, 6> label{};
        for (int e = 0; e < 6; ++e)
            label[static_cast<std::size_t>(e)] =
                c.edgeLabel[static_cast<std::size_t>(tri.edge_class(t, kEdgeVerts[static_cast<std::size_t>(e)][0],
                                                                    kEdgeVerts[static_cast<std::size_t>(e)][1]))];
        int lab = 0, hEdge = -1;
        const TetTypeR2 type = classify_tet_labels(label, &lab, &hEdge);
        c.tetType.push_back(type);
        c.tetLabel.push_back(lab);
        c.qttHEdge.push_back(hEdge);
        switch (type) {
            case TetTypeR2::E: ++c.countE; break;
            case TetTypeR2::TT: ++c.countTT; break;
            case TetTypeR2::QQ: ++c.countQQ; break;
            case TetTypeR2::QTT: ++c.countQTT; break;
            case TetTypeR2::QQQ: ++c.countQQQ; break;
        }

        for (int f = 0; f < 4; ++f) {
            const int cls = tri.face_class(t, f);
            if (faceSeen[static_cast<std::size_t>(cls)]) continue;
            faceSeen[static_cast<std::size_t>(cls)] = 1;
            std::array<int, 3> ls{};
            int n = 0;
            for (int e : kFaceEdges[static_cast<std::size_t>(f)]) ls[static_cast<std::size_t>(n++)] = label[static_cast<std::size_t>(e)];
            std::sort(ls.begin(), ls.end());
            if (ls == std::array<int, 3>{0, 0, 0}) {
                c.faceType[static_cast<std::size_t>(cls)] = FaceTypeR2::HEven;
            } else if (ls[0] == 0 && ls[1] == ls[2] && ls[1] != 0) {
                c.faceType[static_cast<std::size_t>(cls)] = FaceTypeR2::IEven;
                c.faceLabel[static_cast<std::size_t>(cls)] = ls[1];
            } else if (ls == std::array<int, 3>{1, 2, 3}) {
                c.faceType[static_cast<std::size_t>(cls)] = FaceTypeR2::HOdd;
            } else {
                throw CocycleViolation("face labels admit no face type");
            }
        }
    }

    for (int e = 0; e < tri.edge_count(); ++e)
        if (c.edgeLabel[static_cast<std::size_t>(e)] == 0) ++c.evenEdgeDegreeCounts[tri.edge_degree(e)];
    return c;
}

ColoringR1 restrict_rank1(const Triangulation& tri, const ColoringR2& c, int i) {
    if (i < 1 || i > 3) throw IndexOutOfRange("restriction index must be 1..3");
    return color_rank1(tri, c.subgroup.classes[static_cast<std::size_t>(i - 1)]);
}

} // namespace tricert
