#pragma once
// Lexicographic rank arithmetic on S(n,m).  Ranks are 1-based, so the lex
// ell-segment is exactly the vertices with index < ell.  k counts the full
// leading-digit copies inside the segment, q the corner vertices, and
// sigma is the corner correction that strengthens subadditivity of the
// isoperimetric profile.

#include <cstdint>
#include <stdexcept>

#include "sierp/core_graph.hpp"

namespace sierp {

inline uint64_t lex_rank(const Vertex& v, const GraphParams& p) {
    return vertex_index(v, p) + 1;
}

inline Vertex lex_unrank(uint64_t rank, const GraphParams& p) {
    if (rank < 1 || rank > p.vcount)
        throw std::out_of_range("lex rank out of [1, m^n]");
    return vertex_at(p, rank - 1);
}

inline uint64_t pow_u64(int m, int n) {
    uint64_t x = 1;
    for (int i = 0; i < n; ++i) x *= static_cast<uint64_t>(m);
    return x;
}

inline void check_ell(int n, int m, uint64_t ell) {
    if (ell > pow_u64(m, n)) throw std::out_of_range("ell out of [0, m^n]");
}

// number of full copies {i} x S(n-1,m) inside the lex ell-segment
inline uint64_t k_of(int n, int m, uint64_t ell) {
    if (n < 1) throw std::invalid_argument("k_of: requires n >= 1");
    check_ell(n, m, ell);
    return ell / pow_u64(m, n - 1);
}

struct SplitResult {
    uint64_t k = 0;    // full copies, in [0, m]
    uint64_t rem = 0;  // ell - k*m^{n-1}, in [0, m^{n-1}); (m, 0) at ell = m^n
};

inline SplitResult split(int n, int m, uint64_t ell) {
    const uint64_t k = k_of(n, m, ell);
    return SplitResult{k, ell - k * pow_u64(m, n - 1)};
}

// number of corner vertices with lex rank <= ell;
// q = 1 + floor((ell-1)(m-1) / (m^n - 1)) for n >= 1, ell >= 1
inline uint64_t q_of(int n, int m, uint64_t ell) {
    if (n < 0) throw std::invalid_argument("q_of: requires n >= 0");
    check_ell(n, m, ell);
    if (n == 0 || ell == 0) return 0;
    // (ell-1)(m-1) < 2^38 at the construction cap, no overflow in 64 bits
    return 1 + (ell - 1) * static_cast<uint64_t>(m - 1) / (pow_u64(m, n) - 1);
}

// corner correction term; both branches agree at ell_a + ell_b = m^n
inline int64_t sigma(int n, int m, uint64_t ell_a, uint64_t ell_b) {
    if (ell_b > ell_a) throw std::invalid_argument("sigma: requires ell_b <= ell_a");
    check_ell(n, m, ell_a);
    const uint64_t full = pow_u64(m, n);
    const auto q = [&](uint64_t l) { return static_cast<int64_t>(q_of(n, m, l)); };
    if (ell_a + ell_b < full)
        return q(ell_b) + (q(ell_a + ell_b) - q(ell_a));
    return q(ell_b) - q(ell_a + ell_b - full) + (m - q(ell_a));
}

}  // namespace sierp
