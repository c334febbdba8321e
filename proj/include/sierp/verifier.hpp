#pragma once
// Numeric verification engines.
//
// The central inequality is the strengthened subadditivity of the profile:
// for 1 <= ell_b <= ell_a <= m^n,
//   Sigma(ell_a, ell_b) = T[ell_a] + T[ell_b] - T[wrap(ell_a + ell_b)]
//                         - sigma(ell_a, ell_b)  >=  0,
// where wrap subtracts m^n once the sum passes it.  verify_subadditivity
// sweeps every pair, classifies each by the four binary conditionals of
// the inductive argument (16 cases), and reports violations, the case
// histogram and the minimum slack.  verify_lex_optimality checks the
// brute-force minima against lex-segment boundaries, and
// verify_lemma_suite checks the k/q splitting lemmas the induction rests
// on.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "sierp/boundary.hpp"
#include "sierp/lex_order.hpp"

namespace sierp {

inline int64_t sigma_gap(const GraphParams& p, uint64_t ell_a, uint64_t ell_b,
                         const ProfileTable& table) {
    if (ell_b < 1 || ell_b > ell_a || ell_a > p.vcount)
        throw std::out_of_range("sigma_gap: requires 1 <= ell_b <= ell_a <= m^n");
    const uint64_t sum = ell_a + ell_b;
    const uint64_t wrap = sum <= p.vcount ? sum : sum - p.vcount;
    return table.values[ell_a] + table.values[ell_b] - table.values[wrap] -
           sigma(p.n, p.m, ell_a, ell_b);
}

// Four binary conditionals of the inductive step at the given level:
//   i.   ell_a' + ell_b' < m^{level-1} ?
//   ii.  q(ell_a') <= k(ell_a) ?
//   iii. q(ell_b') <= k(ell_b) ?
//   iv.  q((ell_a+ell_b)') <= k(ell_a+ell_b) ?
// Encoded as digits 1 (first alternative) / 2 (second), e.g. "1121".
struct CaseId {
    std::uint8_t bits = 0;  // bit 3 = i, bit 2 = ii, bit 1 = iii, bit 0 = iv

    int index() const { return bits; }
    std::string label() const {
        std::string out(4, '1');
        for (int i = 0; i < 4; ++i)
            if (bits & (1 << (3 - i))) out[static_cast<size_t>(i)] = '2';
        return out;
    }
    bool operator==(const CaseId& o) const { return bits == o.bits; }
};

inline CaseId classify_case(int level, int m, uint64_t ell_a, uint64_t ell_b) {
    if (level < 2) throw std::invalid_argument("classify_case: requires level >= 2");
    if (ell_b < 1 || ell_b > ell_a || ell_a + ell_b > pow_u64(m, level))
        throw std::out_of_range("classify_case: bad (ell_a, ell_b)");
    const uint64_t csz = pow_u64(m, level - 1);
    const auto cond = [&](uint64_t ell) {
        return q_of(level - 1, m, ell % csz) <= ell / csz;
    };
    std::uint8_t bits = 0;
    if (ell_a % csz + ell_b % csz >= csz) bits |= 8;
    if (!cond(ell_a)) bits |= 4;
    if (!cond(ell_b)) bits |= 2;
    if (!cond(ell_a + ell_b)) bits |= 1;
    return CaseId{bits};
}

// Exact split of Sigma at the given level into the pieces contributed by
// the recurrence: the k(m-k) copy-count terms, the inner level-(n-1)
// profile terms, the corner terms, and -sigma.  Their sum reproduces
// sigma_gap exactly.
struct SigmaParts {
    int64_t copy_part = 0;    // from k(m-k)
    int64_t inner_part = 0;   // from the inner profile values
    int64_t corner_part = 0;  // from the corner terms
    int64_t sigma_part = 0;   // -sigma at the level

    int64_t total() const { return copy_part + inner_part + corner_part + sigma_part; }
};

inline SigmaParts sigma_decomposition(int level, int m, uint64_t ell_a,
                                      uint64_t ell_b) {
    if (level < 2) throw std::invalid_argument("sigma_decomposition: level >= 2");
    if (ell_b < 1 || ell_b > ell_a || ell_a + ell_b > pow_u64(m, level))
        throw std::out_of_range("sigma_decomposition: bad (ell_a, ell_b)");
    const uint64_t csz = pow_u64(m, level - 1);
    const auto& inner = profile_table(GraphParams(level - 1, m)).values;
    const CornerBranch br = validated_corner_branch();

    const auto kpart = [&](uint64_t ell) -> int64_t {
        const int64_t k = static_cast<int64_t>(ell / csz);
        return k * (m - k);
    };
    const auto corner = [&](uint64_t ell) -> int64_t {
        const int64_t k = static_cast<int64_t>(ell / csz);
        const int64_t q = static_cast<int64_t>(q_of(level - 1, m, ell % csz));
        if (q <= k) return -q;
        return q - 2 * k - (br == CornerBranch::corrected ? 1 : 0);
    };
    const auto inner_of = [&](uint64_t ell) { return inner[ell % csz]; };

    const uint64_t sum = ell_a + ell_b;
    SigmaParts parts;
    parts.copy_part = kpart(ell_a) + kpart(ell_b) - kpart(sum);
    parts.inner_part = inner_of(ell_a) + inner_of(ell_b) - inner_of(sum);
    parts.corner_part = corner(ell_a) + corner(ell_b) - corner(sum);
    parts.sigma_part = -sigma(level, m, ell_a, ell_b);
    return parts;
}

struct Violation {
    uint64_t ell_a = 0;
    uint64_t ell_b = 0;
    int64_t gap = 0;
};

struct SubaddReport {
    int n = 0;
    int m = 0;
    uint64_t pairs_checked = 0;
    std::vector<Violation> violations;
    std::array<uint64_t, 16> case_counts{};  // indexed by CaseId::index()
    int64_t min_slack = std::numeric_limits<int64_t>::max();
    uint64_t branch_mismatches = 0;  // both sigma forms compared at sum = m^n

    bool pass() const { return violations.empty() && branch_mismatches == 0; }

    void absorb(const SubaddReport& o) {
        pairs_checked += o.pairs_checked;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
        for (size_t i = 0; i < case_counts.size(); ++i)
            case_counts[i] += o.case_counts[i];
        min_slack = std::min(min_slack, o.min_slack);
        branch_mismatches += o.branch_mismatches;
    }
};

namespace detail {

// per-ell lookups used by the sweep; q values fit in a byte (q <= m <= 36)
struct SweepTables {
    const std::vector<int64_t>* theta;
    std::vector<std::uint8_t> q;      // q_n over [0, m^n]
    std::vector<std::uint8_t> q_sub;  // q_{n-1} over [0, m^{n-1}]
    uint64_t csz = 1;

    SweepTables(const GraphParams& p, const ProfileTable& table)
        : theta(&table.values) {
        const uint64_t full = p.vcount;
        q.resize(full + 1);
        for (uint64_t l = 0; l <= full; ++l)
            q[l] = static_cast<std::uint8_t>(q_of(p.n, p.m, l));
        if (p.n >= 2) {
            csz = p.copy_size();
            q_sub.resize(csz + 1);
            for (uint64_t l = 0; l <= csz; ++l)
                q_sub[l] = static_cast<std::uint8_t>(q_of(p.n - 1, p.m, l));
        }
    }
};

inline void sweep_rows(const GraphParams& p, const SweepTables& tb, uint64_t lo,
                       uint64_t hi, SubaddReport& out) {
    const uint64_t full = p.vcount;
    const auto& th = *tb.theta;
    const bool classify = p.n >= 2;
    const uint64_t csz = tb.csz;
    for (uint64_t la = lo; la < hi; ++la) {
        const int64_t th_a = th[la];
        const int64_t q_a = tb.q[la];
        for (uint64_t lb = 1; lb <= la; ++lb) {
            const uint64_t sum = la + lb;
            int64_t sig;
            if (sum < full) {
                sig = tb.q[lb] + (tb.q[sum] - q_a);
            } else if (sum > full) {
                sig = tb.q[lb] - tb.q[sum - full] + (p.m - q_a);
            } else {
                // both defining forms must coincide at the wrap boundary
                const int64_t first = tb.q[lb] + (tb.q[full] - q_a);
                const int64_t second = tb.q[lb] - tb.q[0] + (p.m - q_a);
                if (first != second) ++out.branch_mismatches;
                sig = first;
            }
            const uint64_t wrap = sum <= full ? sum : sum - full;
            const int64_t gap = th_a + th[lb] - th[wrap] - sig;
            ++out.pairs_checked;
            if (gap < out.min_slack) out.min_slack = gap;
            if (gap < 0) out.violations.push_back({la, lb, gap});
            if (classify && sum <= full) {
                std::uint8_t bits = 0;
                if (la % csz + lb % csz >= csz) bits |= 8;
                if (tb.q_sub[la % csz] > la / csz) bits |= 4;
                if (tb.q_sub[lb % csz] > lb / csz) bits |= 2;
                if (tb.q_sub[sum % csz] > sum / csz) bits |= 1;
                ++out.case_counts[bits];
            }
        }
    }
}

}  // namespace detail

inline constexpr uint64_t pair_sweep_vertex_limit = uint64_t{1} << 24;

// Checks Sigma >= 0 over every admissible pair.  The row space is handed
// out in blocks to worker threads; merged counts do not depend on the
// partitioning and violations are sorted afterwards.
inline SubaddReport verify_subadditivity(const GraphParams& p, int jobs = 0) {
    if (p.vcount > pair_sweep_vertex_limit)
        throw std::length_error("verify_subadditivity limited to m^n <= 2^24");
    const ProfileTable& table = profile_table(p);
    const detail::SweepTables tb(p, table);

    SubaddReport report;
    report.n = p.n;
    report.m = p.m;

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    const uint64_t full = p.vcount;
    if (jobs == 1 || full < 4096) {
        detail::sweep_rows(p, tb, 1, full + 1, report);
    } else {
        const uint64_t block = 1024;
        std::atomic<uint64_t> next{1};
        std::vector<SubaddReport> parts(static_cast<size_t>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (;;) {
                    const uint64_t lo = next.fetch_add(block);
                    if (lo > full) break;
                    const uint64_t hi = std::min(lo + block, full + 1);
                    detail::sweep_rows(p, tb, lo, hi, parts[static_cast<size_t>(w)]);
                }
            });
        for (auto& t : workers) t.join();
        for (const auto& part : parts) report.absorb(part);
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return a.ell_a != b.ell_a ? a.ell_a < b.ell_a : a.ell_b < b.ell_b;
              });
    return report;
}

struct OptimalityMismatch {
    uint64_t ell = 0;
    int64_t brute = 0;
    int64_t lex = 0;
};

struct OptimalityReport {
    int n = 0;
    int m = 0;
    bool sampled = false;  // true when only enumerable ell were checked
    std::vector<uint64_t> ells_checked;
    std::vector<OptimalityMismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

inline constexpr uint64_t optimality_sample_combinations = uint64_t{1} << 22;

// subset enumeration without the 24-vertex table guard, for sampled ell
inline int64_t profile_bruteforce_sampled(const GraphParams& p, uint64_t ell) {
    if (p.vcount > 63) throw std::length_error("sampled brute force needs m^n <= 63");
    check_ell(p.n, p.m, ell);
    if (ell == 0 || ell == p.vcount) return 0;
    std::vector<std::pair<uint64_t, uint64_t>> es;
    for_each_edge(p, [&](uint64_t a, uint64_t b) { es.emplace_back(a, b); });
    int64_t best = std::numeric_limits<int64_t>::max();
    uint64_t mask = (uint64_t{1} << ell) - 1;
    const uint64_t stop = uint64_t{1} << p.vcount;
    while (mask < stop) {
        int64_t cut = 0;
        for (const auto& [a, b] : es)
            cut += ((mask >> a) ^ (mask >> b)) & 1;
        best = std::min(best, cut);
        const uint64_t c = mask & (~mask + 1);
        const uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return best;
}

// brute-force minimum == lex-segment boundary, for every ell when the
// whole subset lattice is enumerable, otherwise for the ell whose
// combination counts stay small (from both ends, by profile duality)
inline OptimalityReport verify_lex_optimality(const GraphParams& p) {
    OptimalityReport rep;
    rep.n = p.n;
    rep.m = p.m;
    const ProfileTable& table = profile_table(p);
    if (p.vcount <= bruteforce_vertex_limit) {
        const auto brute = profile_bruteforce_table(p);
        for (uint64_t ell = 0; ell <= p.vcount; ++ell) {
            rep.ells_checked.push_back(ell);
            if (brute[ell] != table.values[ell])
                rep.mismatches.push_back({ell, brute[ell], table.values[ell]});
        }
        return rep;
    }
    if (p.vcount > 63)
        throw std::length_error("verify_lex_optimality limited to m^n <= 63");
    rep.sampled = true;
    const auto check_one = [&](uint64_t ell) {
        rep.ells_checked.push_back(ell);
        const int64_t brute = profile_bruteforce_sampled(p, ell);
        if (brute != table.values[ell])
            rep.mismatches.push_back({ell, brute, table.values[ell]});
    };
    uint64_t comb = 1;
    for (uint64_t ell = 0; ell <= p.vcount / 2; ++ell) {
        if (ell > 0) comb = comb * (p.vcount - ell + 1) / ell;
        if (comb > optimality_sample_combinations) break;
        check_one(ell);
        if (ell != p.vcount - ell) check_one(p.vcount - ell);
    }
    std::sort(rep.ells_checked.begin(), rep.ells_checked.end());
    return rep;
}

struct LemmaReport {
    int n = 0;
    int m = 0;
    uint64_t pairs_checked = 0;
    uint64_t k_additivity_failures = 0;
    uint64_t q_additivity_failures = 0;
    uint64_t duality_failures = 0;      // q(m^n - ell) == m - q(ell)
    uint64_t sandwich_failures = 0;     // k <= q <= k + 1
    uint64_t agreement_failures = 0;    // sigma branch agreement at the wrap

    bool pass() const {
        return k_additivity_failures == 0 && q_additivity_failures == 0 &&
               duality_failures == 0 && sandwich_failures == 0 &&
               agreement_failures == 0;
    }
};

// exhaustive check of the splitting lemmas: the k-additivity dichotomy on
// ell' sums, the two-value q-additivity (below and above the wrap), the
// q duality, the k <= q <= k+1 sandwich, and sigma branch agreement
inline LemmaReport verify_lemma_suite(const GraphParams& p) {
    if (p.n < 1) throw std::invalid_argument("verify_lemma_suite: requires n >= 1");
    if (p.vcount > theta_edge_scan_limit)
        throw std::length_error("verify_lemma_suite limited to m^n <= 2^16");
    LemmaReport rep;
    rep.n = p.n;
    rep.m = p.m;
    const uint64_t full = p.vcount;
    const uint64_t csz = p.copy_size();

    std::vector<uint64_t> q(full + 1), k(full + 1);
    for (uint64_t l = 0; l <= full; ++l) {
        q[l] = q_of(p.n, p.m, l);
        k[l] = k_of(p.n, p.m, l);
    }
    for (uint64_t l = 0; l <= full; ++l) {
        if (!(k[l] <= q[l] && q[l] <= k[l] + 1)) ++rep.sandwich_failures;
        if (q[full - l] != static_cast<uint64_t>(p.m) - q[l]) ++rep.duality_failures;
    }

    for (uint64_t la = 0; la <= full; ++la) {
        for (uint64_t lb = 0; lb <= la; ++lb) {
            ++rep.pairs_checked;
            const uint64_t sum = la + lb;
            if (sum <= full) {
                const uint64_t expect =
                    la % csz + lb % csz < csz ? k[la] + k[lb] : k[la] + k[lb] + 1;
                if (k[sum] != expect) ++rep.k_additivity_failures;
            }
            if (sum < full) {
                if (q[sum] != q[la] + q[lb] && q[sum] + 1 != q[la] + q[lb])
                    ++rep.q_additivity_failures;
            } else {
                // by q duality and the unwrapped lemma the wrapped value is
                // q(la) + q(lb) - m or one MORE; the extra unit goes up,
                // mirroring the -1 of the unwrapped case
                const int64_t got = static_cast<int64_t>(q[sum - full]);
                const int64_t base =
                    static_cast<int64_t>(q[la]) + static_cast<int64_t>(q[lb]) - p.m;
                if (got != base && got != base + 1) ++rep.q_additivity_failures;
            }
            if (sum == full && lb <= la && lb >= 1) {
                const int64_t first =
                    static_cast<int64_t>(q[lb]) + (static_cast<int64_t>(q[full]) -
                                                   static_cast<int64_t>(q[la]));
                const int64_t second = static_cast<int64_t>(q[lb]) -
                                       static_cast<int64_t>(q[0]) +
                                       (p.m - static_cast<int64_t>(q[la]));
                if (first != second) ++rep.agreement_failures;
            }
        }
    }
    return rep;
}

}  // namespace sierp
