#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace tricert {

// Permutation of {0,1,2,3}, stored as the images of 0,1,2,3.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    constexpr int operator()(int v) const { return img[static_cast<std::size_t>(v)]; }
    constexpr bool operator==(const Perm4&) const = default;
    constexpr auto operator<=>(const Perm4&) const = default;

    static constexpr Perm4 identity() { return Perm4{}; }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img[img[static_cast<std::size_t>(v)]] = static_cast<std::uint8_t>(v);
        return r;
    }

    // (a * b)(v) = a(b(v))
    friend constexpr Perm4 operator*(const Perm4& a, const Perm4& b) {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(a(b(v)));
        return r;
    }

    // +1 for even permutations, -1 for odd.
    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[static_cast<std::size_t>(i)] > img[static_cast<std::size_t>(j)]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    constexpr bool is_valid() const {
        int seen = 0;
        for (int v = 0; v < 4; ++v) {
            if (img[static_cast<std::size_t>(v)] > 3) return false;
            seen |= 1 << img[static_cast<std::size_t>(v)];
        }
        return seen == 0xF;
    }

    std::string digits() const {
        std::string s(4, '0');
        for (int v = 0; v < 4; ++v) s[static_cast<std::size_t>(v)] = static_cast<char>('0' + img[static_cast<std::size_t>(v)]);
        return s;
    }

    static Perm4 from_digits(const std::string& s);

    // All 24 permutations in lexicographic order of their digit strings.
    static const std::array<Perm4, 24>& all();
};

// Edges of a tetrahedron indexed 0..5 by vertex pair:
// 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVerts = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

// Opposite edge: 0<->5, 1<->4, 2<->3.
constexpr int opposite_edge(int e) { return 5 - e; }

// Quadrilateral types indexed 0..2; quad q separates edge q from edge 5-q,
// i.e. its vertex partition is {kEdgeVerts[q]} | {kEdgeVerts[5-q]}.
constexpr int quad_separating(int a, int b) {
    int e = edge_index(a, b);
    return e <= 2 ? e : 5 - e;
}

} // namespace tricert
