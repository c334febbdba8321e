#pragma once
// Closed-form consequences of lex optimality, each cross-checked against
// the profile table: bisection width, the profile maximum, and the Cheeger
// constant as an exact rational.  Disagreements between a closed form and
// the exhaustive table value are reported, never silently corrected; the
// table value is the returned truth.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sierp/boundary.hpp"

namespace sierp {

struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline int64_t bisection_width_formula(int n, int m) {
    if (m % 2 == 0) return static_cast<int64_t>(m) * m / 4;
    const int64_t h = m / 2;
    return static_cast<int64_t>(n) * h * h + h;
}

// the same expression the bisection width takes for odd m
inline int64_t max_profile_formula(int n, int m) {
    const int64_t h = m / 2;
    return static_cast<int64_t>(n) * h * h + h;
}

inline Rational cheeger_formula(int n, int m) {
    if (m % 2 == 0)
        return Rational(static_cast<int64_t>(m) * m,
                        2 * static_cast<int64_t>(pow_u64(m, n)));
    return Rational(m + 1, 2 * static_cast<int64_t>(pow_u64(m, n - 1)));
}

struct Metrics {
    int n = 0;
    int m = 0;
    int64_t bisection_width = 0;
    bool bw_formula_agrees = false;
    int64_t max_profile = 0;
    bool max_formula_agrees = false;
    Rational cheeger;
    bool cheeger_formula_agrees = false;
    uint64_t cheeger_argmin = 0;  // smallest ell attaining the minimum
};

inline Metrics compute_metrics(const ProfileTable& table) {
    const GraphParams& p = table.params;
    if (p.n < 1) throw std::invalid_argument("compute_metrics: requires n >= 1");
    Metrics out;
    out.n = p.n;
    out.m = p.m;

    out.bisection_width = table.values[p.vcount / 2];
    out.bw_formula_agrees = out.bisection_width == bisection_width_formula(p.n, p.m);

    out.max_profile = *std::max_element(table.values.begin(), table.values.end());
    out.max_formula_agrees = out.max_profile == max_profile_formula(p.n, p.m);

    Rational best(table.values[1], 1);
    uint64_t argmin = 1;
    for (uint64_t ell = 2; ell <= p.vcount / 2; ++ell) {
        Rational r(table.values[ell], static_cast<int64_t>(ell));
        if (r < best) {
            best = r;
            argmin = ell;
        }
    }
    out.cheeger = best;
    out.cheeger_argmin = argmin;
    out.cheeger_formula_agrees = best == cheeger_formula(p.n, p.m);
    return out;
}

inline Metrics compute_metrics(const GraphParams& p) {
    return compute_metrics(profile_table(p));
}

inline int64_t bisection_width(const GraphParams& p) {
    return profile_table(p).values[p.vcount / 2];
}

inline int64_t max_profile(const GraphParams& p) {
    const auto& v = profile_table(p).values;
    return *std::max_element(v.begin(), v.end());
}

inline Rational cheeger(const GraphParams& p) {
    return compute_metrics(p).cheeger;
}

}  // namespace sierp
