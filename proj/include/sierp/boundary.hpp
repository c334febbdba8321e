#pragma once
// Edge boundaries and isoperimetric profiles.  Three independent routes to
// |Theta|(n,m;ell) for lex segments:
//   profile_direct      - count cut edges of the segment directly
//   profile_recurrence  - self-similar recurrence over (k, ell') splits
//   profile_bruteforce  - exact minimum over all ell-subsets (small graphs)
// The recurrence's corner term is validated once against the direct count
// on every instance with m^n <= 2187 before it is trusted; see
// validated_corner_branch().

#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "sierp/core_graph.hpp"
#include "sierp/lex_order.hpp"

namespace sierp {

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(uint64_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet lex_segment(const GraphParams& p, uint64_t ell) {
        check_ell(p.n, p.m, ell);
        VertexSet s(p.vcount);
        for (uint64_t i = 0; i < ell / 64; ++i) s.words_[i] = ~uint64_t{0};
        if (ell % 64) s.words_[ell / 64] = (uint64_t{1} << (ell % 64)) - 1;
        s.size_ = ell;
        return s;
    }

    uint64_t universe() const { return universe_; }
    uint64_t size() const { return size_; }

    bool contains(uint64_t v) const {
        return (words_[v / 64] >> (v % 64)) & 1;
    }

    void insert(uint64_t v) {
        uint64_t& w = words_[v / 64];
        const uint64_t bit = uint64_t{1} << (v % 64);
        size_ += !(w & bit);
        w |= bit;
    }

    void erase(uint64_t v) {
        uint64_t& w = words_[v / 64];
        const uint64_t bit = uint64_t{1} << (v % 64);
        size_ -= !!(w & bit);
        w &= ~bit;
    }

    uint64_t count_range(uint64_t lo, uint64_t hi) const {  // [lo, hi)
        uint64_t c = 0;
        for (uint64_t v = lo; v < hi; ++v) c += contains(v);
        return c;
    }

    void clear_range(uint64_t lo, uint64_t hi) {
        for (uint64_t v = lo; v < hi; ++v) erase(v);
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {  // members in ascending index order
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                fn(static_cast<uint64_t>(w) * 64 + static_cast<uint64_t>(b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet complement() const {
        VertexSet s(universe_);
        for (size_t w = 0; w < words_.size(); ++w) s.words_[w] = ~words_[w];
        if (universe_ % 64)
            s.words_.back() &= (uint64_t{1} << (universe_ % 64)) - 1;
        s.size_ = universe_ - size_;
        return s;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

private:
    uint64_t universe_ = 0;
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;
};

inline constexpr uint64_t theta_edge_scan_limit = uint64_t{1} << 16;

// |Theta(S)|: edges with exactly one endpoint in S.  Scans the whole edge
// set for small graphs, otherwise only the members' neighbor lists.
inline int64_t theta(const VertexSet& s, const GraphParams& p) {
    if (s.universe() != p.vcount)
        throw std::invalid_argument("theta: set universe does not match m^n");
    int64_t cut = 0;
    if (p.vcount <= theta_edge_scan_limit) {
        for (uint64_t v = 0; v < p.vcount; ++v) {
            const bool in = s.contains(v);
            for_each_neighbor(p, v, [&](uint64_t nb) {
                if (nb > v) cut += in != s.contains(nb);
            });
        }
    } else {
        s.for_each([&](uint64_t v) {
            for_each_neighbor(p, v, [&](uint64_t nb) { cut += !s.contains(nb); });
        });
    }
    return cut;
}

// |Theta_{s,t}(S)|: theta plus the cut exterior edges.  An I-corner's
// exterior edge is cut when the corner is missing from S, a K-corner's
// when it is present; J-corners carry none.
inline int64_t theta_decorated(const VertexSet& s, const GraphParams& p,
                               const Decoration& d) {
    d.check(p);
    int64_t cut = theta(s, p);
    for (int i = 0; i < p.m; ++i) {
        const LabelClass c = d.label_class(i);
        if (c == LabelClass::neutral) continue;
        const bool in = s.contains(corner_index(p, i));
        if (c == LabelClass::in_side ? !in : in) ++cut;
    }
    return cut;
}

struct ProfileTable {
    GraphParams params;
    std::vector<int64_t> values;  // values[ell] = |Theta|(n,m;ell), ell = 0..m^n
};

inline int64_t profile_direct(const GraphParams& p, uint64_t ell) {
    return theta(VertexSet::lex_segment(p, ell), p);
}

// whole table in one sweep: adding the next lex vertex v changes the cut
// count by deg(v) - 2 * |{neighbors of v with smaller index}|
inline ProfileTable profile_direct_table(const GraphParams& p) {
    if (p.vcount > max_enumerable_vertices)
        throw std::length_error("profile_direct_table limited to m^n <= 2^24");
    ProfileTable t{p, std::vector<int64_t>(p.vcount + 1, 0)};
    int64_t run = 0;
    for (uint64_t v = 0; v < p.vcount; ++v) {
        int64_t deg = 0, below = 0;
        for_each_neighbor(p, v, [&](uint64_t nb) {
            ++deg;
            below += nb < v;
        });
        run += deg - 2 * below;
        t.values[v + 1] = run;
    }
    return t;
}

// The recurrence's corner term when the partial copy already holds more
// corners than there are full copies.  The printed form q - 2k overcounts
// the boundary by one; the validated form subtracts the extra unit.
enum class CornerBranch { printed, corrected };

inline std::vector<int64_t> recurrence_values(int n, int m, CornerBranch br) {
    std::vector<int64_t> cur{0, 0};  // level 0
    for (int lev = 1; lev <= n; ++lev) {
        const uint64_t size = pow_u64(m, lev);
        const uint64_t csz = size / static_cast<uint64_t>(m);
        std::vector<int64_t> next(size + 1);
        for (uint64_t ell = 0; ell <= size; ++ell) {
            const uint64_t k = ell / csz;
            const uint64_t rem = ell - k * csz;
            const int64_t q = static_cast<int64_t>(q_of(lev - 1, m, rem));
            const int64_t kk = static_cast<int64_t>(k);
            int64_t corner;
            if (q <= kk)
                corner = -q;
            else
                corner = q - 2 * kk - (br == CornerBranch::corrected ? 1 : 0);
            next[ell] = kk * (m - kk) + cur[rem] + corner;
        }
        cur.swap(next);
    }
    return cur;
}

// Selects the corner-term branch that reproduces profile_direct on every
// (n,m) with m^n <= 2187, and refuses to run if neither does.
inline CornerBranch validated_corner_branch() {
    static const CornerBranch picked = [] {
        bool printed_ok = true, corrected_ok = true;
        for (int m = 2; m <= max_alphabet; ++m) {
            for (int n = 1; pow_u64(m, n) <= 2187; ++n) {
                const GraphParams p(n, m);
                const auto direct = profile_direct_table(p).values;
                if (printed_ok &&
                    recurrence_values(n, m, CornerBranch::printed) != direct)
                    printed_ok = false;
                if (corrected_ok &&
                    recurrence_values(n, m, CornerBranch::corrected) != direct)
                    corrected_ok = false;
            }
        }
        if (corrected_ok) return CornerBranch::corrected;
        if (printed_ok) return CornerBranch::printed;
        throw std::logic_error(
            "no corner-term branch matches the direct boundary oracle");
    }();
    return picked;
}

inline ProfileTable profile_recurrence(const GraphParams& p) {
    return ProfileTable{p, recurrence_values(p.n, p.m, validated_corner_branch())};
}

// shared cache; the verification sweeps request the same tables repeatedly
inline const ProfileTable& profile_table(const GraphParams& p) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ProfileTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p.n, p.m}];
    if (!slot) slot = std::make_unique<ProfileTable>(profile_recurrence(p));
    return *slot;
}

inline constexpr uint64_t bruteforce_vertex_limit = 24;

// minimum of theta over all ell-subsets, via combination enumeration
inline int64_t profile_bruteforce(const GraphParams& p, uint64_t ell) {
    const uint64_t nverts = p.vcount;
    if (nverts > bruteforce_vertex_limit)
        throw std::length_error("profile_bruteforce limited to m^n <= 24");
    check_ell(p.n, p.m, ell);
    if (ell == 0 || ell == nverts) return 0;

    std::vector<std::pair<uint64_t, uint64_t>> es;
    for_each_edge(p, [&](uint64_t a, uint64_t b) { es.emplace_back(a, b); });

    int64_t best = std::numeric_limits<int64_t>::max();
    uint64_t mask = (uint64_t{1} << ell) - 1;  // Gosper's hack over C(N, ell)
    const uint64_t stop = uint64_t{1} << nverts;
    while (mask < stop) {
        int64_t cut = 0;
        for (const auto& [a, b] : es)
            cut += ((mask >> a) ^ (mask >> b)) & 1;
        if (cut < best) best = cut;
        const uint64_t c = mask & (~mask + 1);
        const uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return best;
}

// all ell at once: Gray-code walk over the 2^N subsets with incremental
// cut updates, bucketing minima by subset size
inline std::vector<int64_t> profile_bruteforce_table(const GraphParams& p) {
    const uint64_t nverts = p.vcount;
    if (nverts > bruteforce_vertex_limit)
        throw std::length_error("profile_bruteforce limited to m^n <= 24");
    std::vector<std::vector<uint64_t>> nbr(nverts);
    for (uint64_t v = 0; v < nverts; ++v) nbr[v] = neighbor_indices(p, v);

    std::vector<int64_t> best(nverts + 1, std::numeric_limits<int64_t>::max());
    best[0] = 0;
    uint64_t mask = 0;
    int64_t cut = 0;
    const uint64_t total = uint64_t{1} << nverts;
    for (uint64_t i = 1; i < total; ++i) {
        const int v = std::countr_zero(i);
        int64_t in_nb = 0;
        for (uint64_t nb : nbr[static_cast<size_t>(v)])
            in_nb += (mask >> nb) & 1;
        const int64_t delta =
            static_cast<int64_t>(nbr[static_cast<size_t>(v)].size()) - 2 * in_nb;
        if (mask & (uint64_t{1} << v)) {
            mask &= ~(uint64_t{1} << v);
            cut -= delta;
        } else {
            mask |= uint64_t{1} << v;
            cut += delta;
        }
        const int sz = std::popcount(mask);
        if (cut < best[static_cast<size_t>(sz)]) best[static_cast<size_t>(sz)] = cut;
    }
    return best;
}

}  // namespace sierp
