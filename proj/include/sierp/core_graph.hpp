#pragma once
// Generalized Sierpinski graph S(n,m) in the Klavzar-Milutinovic word
// representation: vertices are words of n digits over {0,...,m-1}, and
// {u,v} is an edge iff there is a position h with
//   u_i = v_i for i < h,   u_h != v_h,   u_j = v_h and v_j = u_h for j > h.
// Equivalently, S(n,m) is m disjoint copies of S(n-1,m) (split on the
// leading digit) plus one edge {h j^{n-1}, j h^{n-1}} per pair h != j.
//
// Vertices are keyed internally by their base-m value ("index"), so the
// lexicographic rank of a vertex is index + 1 and dense bitsets work as
// vertex sets.

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sierp {

using std::int64_t;
using std::uint64_t;

inline constexpr int max_alphabet = 36;
inline constexpr int max_depth = 32;  // m^n <= 2^32 forces n <= 32
inline constexpr uint64_t max_vertex_count = uint64_t{1} << 32;

struct GraphParams {
    int n = 1;          // recursion depth; n = 0 is the one-vertex graph
    int m = 2;          // alphabet size
    uint64_t vcount = 2;  // m^n

    GraphParams(int depth, int alphabet) : n(depth), m(alphabet) {
        if (n < 0) throw std::invalid_argument("GraphParams: n must be >= 0");
        if (m < 2 || m > max_alphabet)
            throw std::invalid_argument("GraphParams: m must be in [2, 36]");
        vcount = 1;
        for (int i = 0; i < n; ++i) {
            vcount *= static_cast<uint64_t>(m);
            if (vcount > max_vertex_count)
                throw std::invalid_argument("GraphParams: m^n exceeds 2^32");
        }
    }

    uint64_t vertex_count() const { return vcount; }

    // size of one leading-digit copy, m^{n-1}
    uint64_t copy_size() const {
        if (n < 1) throw std::logic_error("copy_size: requires n >= 1");
        return vcount / static_cast<uint64_t>(m);
    }

    // |E| = C(m,2) * (m^n - 1) / (m - 1)
    uint64_t edge_count() const {
        const uint64_t pairs = static_cast<uint64_t>(m) * (m - 1) / 2;
        return pairs * ((vcount - 1) / (m - 1));
    }

    bool operator==(const GraphParams& o) const { return n == o.n && m == o.m; }
};

// 1 + m + m^2 + ... + m^{k-1}; corner i^k has index i * repunit(m, k)
inline uint64_t repunit(int m, int k) {
    uint64_t r = 0;
    for (int i = 0; i < k; ++i) r = r * m + 1;
    return r;
}

struct Vertex {
    std::vector<std::uint8_t> digits;  // most significant first, length n

    Vertex() = default;
    explicit Vertex(std::vector<std::uint8_t> d) : digits(std::move(d)) {}

    bool operator==(const Vertex& o) const { return digits == o.digits; }
    bool operator<(const Vertex& o) const { return digits < o.digits; }
};

inline void check_vertex(const Vertex& v, const GraphParams& p) {
    if (static_cast<int>(v.digits.size()) != p.n)
        throw std::invalid_argument("vertex has wrong word length for S(n,m)");
    for (auto d : v.digits)
        if (d >= p.m) throw std::invalid_argument("vertex digit out of range");
}

inline uint64_t vertex_index(const Vertex& v, const GraphParams& p) {
    check_vertex(v, p);
    uint64_t x = 0;
    for (auto d : v.digits) x = x * p.m + d;
    return x;
}

inline Vertex vertex_at(const GraphParams& p, uint64_t index) {
    if (index >= p.vcount) throw std::out_of_range("vertex index out of range");
    std::vector<std::uint8_t> ds(static_cast<size_t>(p.n));
    for (int i = p.n - 1; i >= 0; --i) {
        ds[static_cast<size_t>(i)] = static_cast<std::uint8_t>(index % p.m);
        index /= p.m;
    }
    return Vertex{std::move(ds)};
}

inline Vertex corner_vertex(const GraphParams& p, int i) {
    if (i < 0 || i >= p.m) throw std::invalid_argument("corner label out of range");
    return Vertex{std::vector<std::uint8_t>(static_cast<size_t>(p.n),
                                            static_cast<std::uint8_t>(i))};
}

inline uint64_t corner_index(const GraphParams& p, int i) {
    return static_cast<uint64_t>(i) * repunit(p.m, p.n);
}

// The m corner vertices i^n.  For n = 0 the words i^0 all collapse to the
// single empty word, which carries no corner role (q_0 = 0), so the list
// is empty.
inline std::vector<Vertex> corner_vertices(const GraphParams& p) {
    std::vector<Vertex> out;
    if (p.n == 0) return out;
    out.reserve(static_cast<size_t>(p.m));
    for (int i = 0; i < p.m; ++i) out.push_back(corner_vertex(p, i));
    return out;
}

inline bool is_corner_index(const GraphParams& p, uint64_t idx) {
    if (p.n == 0) return false;
    const uint64_t rep = repunit(p.m, p.n);
    return idx % rep == 0 && idx / rep < static_cast<uint64_t>(p.m);
}

inline bool is_edge(const Vertex& u, const Vertex& v, const GraphParams& p) {
    check_vertex(u, p);
    check_vertex(v, p);
    for (int h = 0; h < p.n; ++h) {  // 0-based split position
        bool ok = true;
        for (int i = 0; i < h && ok; ++i) ok = u.digits[i] == v.digits[i];
        if (!ok || u.digits[h] == v.digits[h]) continue;
        for (int j = h + 1; j < p.n && ok; ++j)
            ok = u.digits[j] == v.digits[h] && v.digits[j] == u.digits[h];
        if (ok) return true;
    }
    return false;
}

// Enumerates the neighbors of the vertex with the given index.
// Every vertex has the m-1 vertices differing in the last digit as
// neighbors; a non-corner vertex w d c^t (maximal constant tail c^t,
// d != c) additionally has w c d^t.
template <typename Fn>
inline void for_each_neighbor(const GraphParams& p, uint64_t idx, Fn&& fn) {
    if (p.n == 0) return;
    std::array<std::uint8_t, max_depth> ds{};
    uint64_t x = idx;
    for (int i = p.n - 1; i >= 0; --i) {
        ds[static_cast<size_t>(i)] = static_cast<std::uint8_t>(x % p.m);
        x /= p.m;
    }
    const int last = ds[static_cast<size_t>(p.n - 1)];
    const uint64_t base = idx - static_cast<uint64_t>(last);
    for (int j = 0; j < p.m; ++j)
        if (j != last) fn(base + static_cast<uint64_t>(j));

    int tail = 1;  // length of the maximal constant tail
    while (tail < p.n && ds[static_cast<size_t>(p.n - 1 - tail)] == last) ++tail;
    if (tail == p.n) return;  // corner vertex

    const int d = ds[static_cast<size_t>(p.n - 1 - tail)];
    // swap the digit before the tail with the tail value
    uint64_t pow_t = 1;
    for (int i = 0; i < tail; ++i) pow_t *= p.m;
    const int64_t shift = static_cast<int64_t>(pow_t - repunit(p.m, tail));
    fn(static_cast<uint64_t>(static_cast<int64_t>(idx) + (last - d) * shift));
}

inline std::vector<uint64_t> neighbor_indices(const GraphParams& p, uint64_t idx) {
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(p.m));
    for_each_neighbor(p, idx, [&](uint64_t nb) { out.push_back(nb); });
    return out;
}

inline int degree(const Vertex& v, const GraphParams& p) {
    check_vertex(v, p);
    if (p.n == 0) return 0;
    return is_corner_index(p, vertex_index(v, p)) ? p.m - 1 : p.m;
}

struct Edge {
    Vertex a, b;
};

inline constexpr uint64_t max_enumerable_vertices = uint64_t{1} << 24;

// Each edge once, ordered by (min index, max index).
template <typename Fn>
inline void for_each_edge(const GraphParams& p, Fn&& fn) {
    if (p.vcount > max_enumerable_vertices)
        throw std::length_error("edge enumeration limited to m^n <= 2^24");
    for (uint64_t v = 0; v < p.vcount; ++v)
        for_each_neighbor(p, v, [&](uint64_t nb) {
            if (nb > v) fn(v, nb);
        });
}

inline std::vector<Edge> edges(const GraphParams& p) {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(p.edge_count()));
    for_each_edge(p, [&](uint64_t a, uint64_t b) {
        out.push_back(Edge{vertex_at(p, a), vertex_at(p, b)});
    });
    return out;
}

// Corner labels of the decorated graph: I = {0..s-1} counts as inside the
// set, K = {s+t..m-1} as outside, J in between carries no exterior edge.
enum class LabelClass { in_side, neutral, out_side };

struct Decoration {
    int s = 0;
    int t = 0;

    Decoration() = default;
    Decoration(int s_, int t_) : s(s_), t(t_) {
        if (s < 0 || t < 0) throw std::invalid_argument("Decoration: s,t must be >= 0");
    }

    void check(const GraphParams& p) const {
        if (s + t > p.m) throw std::invalid_argument("Decoration: s + t must be <= m");
    }

    LabelClass label_class(int label) const {
        if (label < s) return LabelClass::in_side;
        if (label < s + t) return LabelClass::neutral;
        return LabelClass::out_side;
    }
};

// Text form: digits concatenated for m <= 10, dot-separated for m > 10.
inline std::string vertex_text(const Vertex& v, const GraphParams& p) {
    check_vertex(v, p);
    static const char* alnum = "0123456789";
    std::string out;
    if (p.m <= 10) {
        for (auto d : v.digits) out.push_back(alnum[d]);
    } else {
        for (size_t i = 0; i < v.digits.size(); ++i) {
            if (i) out.push_back('.');
            out += std::to_string(static_cast<int>(v.digits[i]));
        }
    }
    return out;
}

inline Vertex parse_vertex(const std::string& text, const GraphParams& p) {
    std::vector<std::uint8_t> ds;
    if (p.m <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad vertex digit: " + text);
            ds.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, '.')) {
            if (part.empty()) throw std::invalid_argument("bad vertex text: " + text);
            ds.push_back(static_cast<std::uint8_t>(std::stoi(part)));
        }
    }
    Vertex v{std::move(ds)};
    check_vertex(v, p);
    return v;
}

}  // namespace sierp
