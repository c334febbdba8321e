// Acceptance suite.  Runs every release criterion and prints one PASS/FAIL
// line per criterion; the exit code is the number of failures.
//
//  1. profile triple agreement on S(2,3)
//  2. recurrence == direct counting for every (n,m) with m^n <= 2187
//  3. lex optimality vs brute force on the enumerable instances
//  4. subadditivity+sigma: zero violations for n+m <= 12, m^n <= 2^24
//  5. gap decomposition identity at levels (2,3), (2,4), (3,3)
//  6. bisection width closed form, 2 <= m <= 6, m^n <= 2187
//  7. Cheeger closed form (exact rationals), same range
//  8. max-profile closed form for odd m (even-m mismatches reported)
//  9. Steiner operation properties, exhaustive + randomized
// 10. duality and splitting lemmas for n+m <= 10

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sierp/metrics.hpp"
#include "sierp/steiner.hpp"
#include "sierp/verifier.hpp"

using namespace sierp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string instance(int n, int m) {
    return "S(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

Outcome criterion_profile_triple() {
    Outcome out;
    const GraphParams p(2, 3);
    const std::vector<int64_t> expect{0, 2, 3, 2, 3, 3, 2, 3, 2, 0};
    if (profile_recurrence(p).values != expect) out.fail("recurrence table differs");
    if (profile_direct_table(p).values != expect) out.fail("direct table differs");
    if (profile_bruteforce_table(p) != expect) out.fail("brute-force table differs");
    return out;
}

Outcome criterion_recurrence_vs_direct() {
    Outcome out;
    int instances = 0;
    for (int m = 2; m <= max_alphabet; ++m)
        for (int n = 1; pow_u64(m, n) <= 2187; ++n) {
            const GraphParams p(n, m);
            ++instances;
            if (profile_recurrence(p).values != profile_direct_table(p).values)
                out.fail("mismatch on " + instance(n, m));
        }
    out.note(std::to_string(instances) + " instances");
    return out;
}

Outcome criterion_lex_optimality() {
    Outcome out;
    const std::vector<std::pair<int, int>> instances{
        {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {3, 2}, {2, 3}, {2, 4}};
    for (const auto& [n, m] : instances) {
        const auto rep = verify_lex_optimality(GraphParams(n, m));
        if (!rep.pass())
            out.fail(instance(n, m) + ": " + std::to_string(rep.mismatches.size()) +
                     " mismatches");
    }
    return out;
}

Outcome criterion_subadditivity() {
    Outcome out;
    uint64_t pairs = 0;
    int64_t min_slack = std::numeric_limits<int64_t>::max();
    for (int m = 2; m <= 11; ++m)
        for (int n = 1; n + m <= 12; ++n) {
            if (pow_u64(m, n) > pair_sweep_vertex_limit) break;
            const auto rep = verify_subadditivity(GraphParams(n, m));
            pairs += rep.pairs_checked;
            min_slack = std::min(min_slack, rep.min_slack);
            if (!rep.violations.empty())
                out.fail(instance(n, m) + ": " +
                         std::to_string(rep.violations.size()) + " violations");
            if (rep.branch_mismatches)
                out.fail(instance(n, m) + ": sigma branch mismatch at the wrap");
        }
    out.note(str(pairs) + " pairs, min slack " + str(min_slack));
    return out;
}

Outcome criterion_decomposition() {
    Outcome out;
    for (const auto& [level, m] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3}}) {
        const GraphParams p(level, m);
        const auto& table = profile_table(p);
        for (uint64_t la = 1; la <= p.vcount; ++la)
            for (uint64_t lb = 1; lb <= la && la + lb <= p.vcount; ++lb)
                if (sigma_decomposition(level, m, la, lb).total() !=
                    sigma_gap(p, la, lb, table)) {
                    out.fail("identity fails at " + instance(level, m) + " (" +
                             str(la) + "," + str(lb) + ")");
                    return out;
                }
    }
    return out;
}

template <typename Check>
Outcome sweep_closed_form(Check&& check) {
    Outcome out;
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; pow_u64(m, n) <= 2187; ++n) check(n, m, out);
    return out;
}

Outcome criterion_bisection() {
    return sweep_closed_form([](int n, int m, Outcome& out) {
        const auto& table = profile_table(GraphParams(n, m));
        const int64_t got = table.values[table.params.vcount / 2];
        if (got != bisection_width_formula(n, m))
            out.fail(instance(n, m) + ": table " + str(got) + " vs formula " +
                     str(bisection_width_formula(n, m)));
    });
}

Outcome criterion_cheeger() {
    return sweep_closed_form([](int n, int m, Outcome& out) {
        const Metrics me = compute_metrics(GraphParams(n, m));
        if (!(me.cheeger == cheeger_formula(n, m)))
            out.fail(instance(n, m) + ": " + me.cheeger.str() + " vs " +
                     cheeger_formula(n, m).str());
    });
}

Outcome criterion_max_profile() {
    Outcome out;
    int even_mismatches = 0;
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; pow_u64(m, n) <= 2187; ++n) {
            const Metrics me = compute_metrics(GraphParams(n, m));
            const bool agrees = me.max_profile == max_profile_formula(n, m);
            if (m % 2 == 1 && !agrees)
                out.fail(instance(n, m) + ": max " + str(me.max_profile) +
                         " vs formula " + str(max_profile_formula(n, m)));
            if (m % 2 == 0 && !agrees) ++even_mismatches;
        }
    out.note(std::to_string(even_mismatches) + " even-m mismatches reported, not failed");
    return out;
}

// one randomized or exhaustive Steiner trial; returns a failure message or ""
std::string steiner_trial(const GraphParams& p, const Decoration& d,
                          const VertexSet& s) {
    const int64_t theta0 = theta_decorated(s, p, d);
    for (int h = 0; h < p.m; ++h) {
        const VertexSet one = compress_h(s, p, d, h);
        if (one.size() != s.size()) return "compress_h changed cardinality";
        if (theta_decorated(one, p, d) > theta0) return "compress_h raised theta";
    }
    VertexSet cur = compress_inf(s, p, d);  // throws if the cycle bound trips
    if (cur.size() != s.size()) return "compress_inf changed cardinality";
    int64_t theta_cur = theta_decorated(cur, p, d);
    if (theta_cur > theta0) return "compress_inf raised theta";

    const uint64_t merge_bound = static_cast<uint64_t>(p.m) * p.copy_size() + 1;
    uint64_t merges = 0;
    while (!(cur == VertexSet::lex_segment(p, cur.size()))) {
        const VertexSet next = subadd(cur, p, d);
        if (next.size() != cur.size()) return "subadd changed cardinality";
        const int64_t theta_next = theta_decorated(next, p, d);
        if (theta_next > theta_cur) return "subadd raised theta";
        cur = compress_inf(next, p, d);
        theta_cur = theta_decorated(cur, p, d);
        if (theta_cur > theta_next) return "recompression raised theta";
        if (++merges > merge_bound) return "merge bound exceeded";
    }
    return "";
}

Outcome criterion_steiner() {
    Outcome out;
    uint64_t trials = 0;

    // exhaustive: every subset and every decoration on the small instances
    const std::vector<std::pair<int, int>> small{{1, 2}, {1, 3}, {1, 4}, {2, 2},
                                                 {2, 3}, {3, 2}, {4, 2}, {2, 4}};
    for (const auto& [n, m] : small) {
        const GraphParams p(n, m);
        for (uint64_t mask = 0; mask < (uint64_t{1} << p.vcount); ++mask) {
            VertexSet s(p.vcount);
            for (uint64_t v = 0; v < p.vcount; ++v)
                if (mask >> v & 1) s.insert(v);
            for (int ds = 0; ds <= m; ++ds)
                for (int dt = 0; ds + dt <= m; ++dt) {
                    ++trials;
                    const std::string err = steiner_trial(p, Decoration(ds, dt), s);
                    if (!err.empty()) {
                        out.fail(instance(n, m) + " mask " + str(mask) + " d(" +
                                 str(ds) + "," + str(dt) + "): " + err);
                        return out;
                    }
                }
        }
    }

    // randomized: 10^4 instances with m^n <= 81
    const std::vector<std::pair<int, int>> pool{{4, 3}, {3, 3}, {2, 9}, {2, 8}, {3, 4},
                                                {6, 2}, {2, 5}, {2, 6}, {2, 7}, {5, 2}};
    std::mt19937_64 rng(0x5eed5eed);
    for (int i = 0; i < 10000; ++i) {
        const auto& [n, m] = pool[rng() % pool.size()];
        const GraphParams p(n, m);
        std::vector<uint64_t> idx(p.vcount);
        for (uint64_t v = 0; v < p.vcount; ++v) idx[v] = v;
        std::shuffle(idx.begin(), idx.end(), rng);
        VertexSet s(p.vcount);
        const uint64_t size = rng() % (p.vcount + 1);
        for (uint64_t v = 0; v < size; ++v) s.insert(idx[v]);
        const int ds = static_cast<int>(rng() % (m + 1));
        const int dt = static_cast<int>(rng() % (m - ds + 1));
        ++trials;
        const std::string err = steiner_trial(p, Decoration(ds, dt), s);
        if (!err.empty()) {
            out.fail(instance(n, m) + " random trial " + str(i) + ": " + err);
            return out;
        }
    }
    out.note(str(trials) + " trials");
    return out;
}

Outcome criterion_lemmas() {
    Outcome out;
    for (int m = 2; m <= 9; ++m)
        for (int n = 1; n + m <= 10; ++n) {
            const GraphParams p(n, m);
            const auto rep = verify_lemma_suite(p);
            if (!rep.pass()) out.fail("lemma suite fails on " + instance(n, m));
            const auto& values = profile_table(p).values;
            for (uint64_t ell = 0; ell <= p.vcount; ++ell)
                if (values[ell] != values[p.vcount - ell]) {
                    out.fail("profile duality fails on " + instance(n, m));
                    break;
                }
        }
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;  // 0: no stated budget
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, "profile triple agreement on S(2,3)", 1.0, criterion_profile_triple},
        {2, "recurrence vs direct, m^n <= 2187", 60.0, criterion_recurrence_vs_direct},
        {3, "lex optimality vs brute force", 300.0, criterion_lex_optimality},
        {4, "subadditivity+sigma, n+m <= 12", 600.0, criterion_subadditivity},
        {5, "gap decomposition identity", 0.0, criterion_decomposition},
        {6, "bisection width closed form", 0.0, criterion_bisection},
        {7, "Cheeger constant closed form", 0.0, criterion_cheeger},
        {8, "max profile closed form (odd m)", 0.0, criterion_max_profile},
        {9, "Steiner operation properties", 0.0, criterion_steiner},
        {10, "duality and splitting lemmas, n+m <= 10", 0.0, criterion_lemmas},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (c.limit_s > 0 && secs > c.limit_s)
            out.fail("took " + str(secs) + "s, budget " + str(c.limit_s) + "s");
        failures += !out.pass;
        std::printf("criterion %2d: %s - %s [%.2fs]%s%s\n", c.id,
                    out.pass ? "PASS" : "FAIL", c.name, secs,
                    out.detail.empty() ? "" : " | ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
