#include "tricert/triangulation.hpp"

#include <algorithm>
#include <numeric>

namespace tricert {

namespace {

// Union-find over corner slots with a parity bit relative to the parent
// (0 = same orientation). Path compression keeps find near-constant.
struct ParityUF {
    std::vector<int> parent;
    std::vector<std::uint8_t> rel;

    explicit ParityUF(std::size_t n) : parent(n), rel(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, std::uint8_t> find(int x) {
        if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
        auto [r, p] = find(parent[static_cast<std::size_t>(x)]);
        parent[static_cast<std::size_t>(x)] = r;
        rel[static_cast<std::size_t>(x)] ^= p;
        return {r, rel[static_cast<std::size_t>(x)]};
    }

    // Unite with constraint parity(x) ^ parity(y) == bit.
    void unite(int x, int y, std::uint8_t bit) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return;
        parent[static_cast<std::size_t>(ry)] = rx;
        rel[static_cast<std::size_t>(ry)] = static_cast<std::uint8_t>(px ^ py ^ bit);
    }
};

struct PlainUF {
    std::vector<int> parent;
    explicit PlainUF(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<std::size_t>(find(y))] = find(x); }
};

void validate_table(const GluingTable& table) {
    const int T = static_cast<int>(table.size());
    for (int t = 0; t < T; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = table[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (!g) continue;
            if (g->tet < 0 || g->tet >= T || g->face < 0 || g->face > 3)
                throw IndexOutOfRange("gluing target out of range at tet " + std::to_string(t) + " face " + std::to_string(f));
            if (!g->perm.is_valid())
                throw IndexOutOfRange("invalid permutation at tet " + std::to_string(t) + " face " + std::to_string(f));
            if (g->tet == t && g->face == f)
                throw SelfGluedFace("face glued to itself: tet " + std::to_string(t) + " face " + std::to_string(f));
            if (g->perm(f) != g->face)
                throw NonInvolutiveGluing("permutation does not map source face onto target face at tet " +
                                          std::to_string(t) + " face " + std::to_string(f));
            const auto& back = table[static_cast<std::size_t>(g->tet)][static_cast<std::size_t>(g->face)];
            if (!back || back->tet != t || back->face != f || !(back->perm == g->perm.inverse()))
                throw NonInvolutiveGluing("gluing not involutive at tet " + std::to_string(t) + " face " + std::to_string(f));
        }
    }
}

} // namespace

Triangulation Triangulation::build(GluingTable table) {
    validate_table(table);
    Triangulation tri;
    tri.gluings_ = std::move(table);
    tri.compute_skeleton();
    return tri;
}

Triangulation build_triangulation(const GluingTable& table) { return Triangulation::build(table); }

void Triangulation::compute_skeleton() {
    const int T = tet_count();

    // Vertex classes.
    PlainUF vuf(static_cast<std::size_t>(4 * T));
    // Edge classes with orientation parity.
    ParityUF euf(static_cast<std::size_t>(6 * T));
    // Face classes.
    PlainUF fuf(static_cast<std::size_t>(4 * T));

    boundaryFaceCount_ = 0;
    for (int t = 0; t < T; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
            if (!g) {
                ++boundaryFaceCount_;
                continue;
            }
            fuf.unite(4 * t + f, 4 * g->tet + g->face);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                vuf.unite(4 * t + v, 4 * g->tet + g->perm(v));
            }
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    const int pa = g->perm(a), pb = g->perm(b);
                    euf.unite(6 * t + edge_index(a, b), 6 * g->tet + edge_index(pa, pb),
                              static_cast<std::uint8_t>(pa > pb ? 1 : 0));
                }
            }
        }
    }
    closed_ = (boundaryFaceCount_ == 0);

    vertexClass_.assign(static_cast<std::size_t>(4 * T), -1);
    {
        std::vector<int> rootToClass(static_cast<std::size_t>(4 * T), -1);
        int next = 0;
        for (int i = 0; i < 4 * T; ++i) {
            int r = vuf.find(i);
            if (rootToClass[static_cast<std::size_t>(r)] < 0) rootToClass[static_cast<std::size_t>(r)] = next++;
            vertexClass_[static_cast<std::size_t>(i)] = rootToClass[static_cast<std::size_t>(r)];
        }
        vertexCount_ = next;
    }

    faceClass_.assign(static_cast<std::size_t>(4 * T), -1);
    {
        std::vector<int> rootToClass(static_cast<std::size_t>(4 * T), -1);
        int next = 0;
        for (int i = 0; i < 4 * T; ++i) {
            int r = fuf.find(i);
            if (rootToClass[static_cast<std::size_t>(r)] < 0) rootToClass[static_cast<std::size_t>(r)] = next++;
            faceClass_[static_cast<std::size_t>(i)] = rootToClass[static_cast<std::size_t>(r)];
        }
        faceClassCount_ = next;
    }

    edgeClass_.assign(static_cast<std::size_t>(6 * T), -1);
    edgeOrient_.assign(static_cast<std::size_t>(6 * T), 0);
    edgeReps_.clear();
    edgeCorners_.clear();
    {
        std::vector<int> rootToClass(static_cast<std::size_t>(6 * T), -1);
        std::vector<std::uint8_t> rootParityOfRep(static_cast<std::size_t>(6 * T), 0);
        for (int t = 0; t < T; ++t) {
            for (int ei = 0; ei < 6; ++ei) {
                const int slot = 6 * t + ei;
                auto [r, p] = euf.find(slot);
                int& cls = rootToClass[static_cast<std::size_t>(r)];
                if (cls < 0) {
                    cls = static_cast<int>(edgeReps_.size());
                    edgeReps_.push_back({t, kEdgeVerts[static_cast<std::size_t>(ei)][0], kEdgeVerts[static_cast<std::size_t>(ei)][1]});
                    edgeCorners_.emplace_back();
                    rootParityOfRep[static_cast<std::size_t>(r)] = p;
                }
                edgeClass_[static_cast<std::size_t>(slot)] = cls;
                edgeOrient_[static_cast<std::size_t>(slot)] =
                    static_cast<std::uint8_t>(p == rootParityOfRep[static_cast<std::size_t>(r)] ? 1 : 0);
                edgeCorners_[static_cast<std::size_t>(cls)].push_back(
                    {t, kEdgeVerts[static_cast<std::size_t>(ei)][0], kEdgeVerts[static_cast<std::size_t>(ei)][1]});
            }
        }
    }

    // An edge is boundary when one of its incident faces is boundary.
    edgeBoundary_.assign(edgeReps_.size(), 0);
    for (int t = 0; t < T; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!face_is_boundary(t, f)) continue;
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                for (int b = a + 1; b < 4; ++b) {
                    if (b == f) continue;
                    edgeBoundary_[static_cast<std::size_t>(edge_class(t, a, b))] = 1;
                }
            }
        }
    }

    // Orientability: propagate tetrahedron orientations; a face gluing is
    // orientation-compatible exactly when its permutation is odd.
    tetOrient_.assign(static_cast<std::size_t>(T), 0);
    orientable_ = true;
    for (int start = 0; start < T && orientable_; ++start) {
        if (tetOrient_[static_cast<std::size_t>(start)] != 0) continue;
        tetOrient_[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty() && orientable_) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                if (!g) continue;
                const int want = (g->perm.sign() == -1) ? tetOrient_[static_cast<std::size_t>(t)]
                                                        : -tetOrient_[static_cast<std::size_t>(t)];
                int& o = tetOrient_[static_cast<std::size_t>(g->tet)];
                if (o == 0) {
                    o = want;
                    stack.push_back(g->tet);
                } else if (o != want) {
                    orientable_ = false;
                    break;
                }
            }
        }
    }
    if (!orientable_) tetOrient_.clear();
}

const std::optional<Gluing>& Triangulation::gluing(int tet, int face) const {
    if (tet < 0 || tet >= tet_count() || face < 0 || face > 3) throw IndexOutOfRange("gluing query out of range");
    return gluings_[static_cast<std::size_t>(tet)][static_cast<std::size_t>(face)];
}

int Triangulation::vertex_class(int tet, int v) const {
    if (tet < 0 || tet >= tet_count() || v < 0 || v > 3) throw IndexOutOfRange("vertex query out of range");
    return vertexClass_[static_cast<std::size_t>(4 * tet + v)];
}

int Triangulation::face_class(int tet, int f) const {
    if (tet < 0 || tet >= tet_count() || f < 0 || f > 3) throw IndexOutOfRange("face query out of range");
    return faceClass_[static_cast<std::size_t>(4 * tet + f)];
}

int Triangulation::edge_class(int tet, int a, int b) const {
    if (tet < 0 || tet >= tet_count() || a < 0 || a > 3 || b < 0 || b > 3 || a == b)
        throw IndexOutOfRange("edge query out of range");
    return edgeClass_[static_cast<std::size_t>(6 * tet + edge_index(a, b))];
}

bool Triangulation::edge_corner_orientation(int tet, int a, int b) const {
    if (tet < 0 || tet >= tet_count() || a < 0 || a > 3 || b < 0 || b > 3 || a == b)
        throw IndexOutOfRange("edge query out of range");
    bool repOrder = edgeOrient_[static_cast<std::size_t>(6 * tet + edge_index(a, b))] != 0;
    return (a < b) ? repOrder : !repOrder;
}

EdgeRef Triangulation::edge(int e) const {
    if (e < 0 || e >= edge_count()) throw IndexOutOfRange("edge class out of range");
    return {e, edgeReps_[static_cast<std::size_t>(e)]};
}

std::vector<EdgeCorner> Triangulation::edge_link(int e) const {
    if (e < 0 || e >= edge_count()) throw IndexOutOfRange("edge class out of range");
    if (edge_is_boundary(e)) throw TriError("edge_link requires an interior edge");
    const EdgeCorner rep = edgeReps_[static_cast<std::size_t>(e)];
    std::vector<EdgeCorner> out;
    int t = rep.tet, ea = rep.a, eb = rep.b;
    // Exit through the face opposite the larger remaining vertex first; the
    // start state keys the cycle.
    int others[2], n = 0;
    for (int v = 0; v < 4; ++v)
        if (v != ea && v != eb) others[n++] = v;
    int exitV = others[1];
    const int d = edge_degree(e);
    for (int step = 0; step < d; ++step) {
        out.push_back({t, ea, eb});
        const auto& g = gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(exitV)];
        const int cross = 6 - ea - eb - exitV; // vertex on the exit face, not on the edge
        t = g->tet;
        const int na = g->perm(ea), nb = g->perm(eb), nExit = g->perm(cross);
        ea = na;
        eb = nb;
        exitV = nExit;
    }
    return out;
}

int Triangulation::euler_characteristic() const {
    return vertex_count() - edge_count() + face_class_count() - tet_count();
}

std::vector<std::vector<int>> Triangulation::connected_components() const {
    const int T = tet_count();
    std::vector<int> comp(static_cast<std::size_t>(T), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < T; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(t);
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluings_[static_cast<std::size_t>(t)][static_cast<std::size_t>(f)];
                if (g && comp[static_cast<std::size_t>(g->tet)] < 0) {
                    comp[static_cast<std::size_t>(g->tet)] = id;
                    stack.push_back(g->tet);
                }
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

bool Triangulation::connected() const { return tet_count() <= 1 || connected_components().size() == 1; }

Subcomplex Triangulation::subcomplex_generated(const std::vector<int>& tets) const {
    std::vector<int> chosen = tets;
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    if (chosen.empty()) throw IndexOutOfRange("subcomplex requires a nonempty tet set");
    std::vector<int> oldToNew(static_cast<std::size_t>(tet_count()), -1);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] < 0 || chosen[i] >= tet_count()) throw IndexOutOfRange("subcomplex tet out of range");
        oldToNew[static_cast<std::size_t>(chosen[i])] = static_cast<int>(i);
    }

    GluingTable sub(chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = gluings_[static_cast<std::size_t>(chosen[i])][static_cast<std::size_t>(f)];
            if (g && oldToNew[static_cast<std::size_t>(g->tet)] >= 0)
                sub[i][static_cast<std::size_t>(f)] = Gluing{oldToNew[static_cast<std::size_t>(g->tet)], g->face, g->perm};
        }
    }

    Subcomplex result{Triangulation::build(std::move(sub)), chosen, true, true, {}, {}};
    const Triangulation& s = result.tri;
    result.edgeToAmbient.assign(static_cast<std::size_t>(s.edge_count()), -1);
    for (int e = 0; e < s.edge_count(); ++e) {
        const EdgeCorner r = s.edgeReps_[static_cast<std::size_t>(e)];
        result.edgeToAmbient[static_cast<std::size_t>(e)] = edge_class(chosen[static_cast<std::size_t>(r.tet)], r.a, r.b);
    }
    result.vertexToAmbient.assign(static_cast<std::size_t>(s.vertex_count()), -1);
    for (int t = 0; t < s.tet_count(); ++t)
        for (int v = 0; v < 4; ++v)
            result.vertexToAmbient[static_cast<std::size_t>(s.vertex_class(t, v))] =
                vertex_class(chosen[static_cast<std::size_t>(t)], v);

    auto injective = [](std::vector<int> xs) {
        std::sort(xs.begin(), xs.end());
        return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    };
    result.edgeInjective = injective(result.edgeToAmbient);
    result.vertexInjective = injective(result.vertexToAmbient);
    return result;
}

Perm4 Perm4::from_digits(const std::string& s) {
    if (s.size() != 4) throw IndexOutOfRange("permutation needs 4 digits");
    Perm4 p;
    for (int v = 0; v < 4; ++v) {
        char c = s[static_cast<std::size_t>(v)];
        if (c < '0' || c > '3') throw IndexOutOfRange("permutation digit out of range");
        p.img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(c - '0');
    }
    if (!p.is_valid()) throw IndexOutOfRange("not a permutation of 0123");
    return p;
}

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> perms = [] {
        std::array<Perm4, 24> out{};
        std::array<std::uint8_t, 4> v{0, 1, 2, 3};
        for (int i = 0; i < 24; ++i) {
            out[static_cast<std::size_t>(i)].img = v;
            std::next_permutation(v.begin(), v.end());
        }
        return out;
    }();
    return perms;
}

} // namespace tricert
