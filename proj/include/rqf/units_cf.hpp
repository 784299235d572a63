#pragma once

/**
 * @file units_cf.hpp
 * @brief Continued fractions of quadratic surds and fundamental units.
 *
 * All expansions run on the integer (P, Q) recurrence for (P + sqrt N)/Q with
 * Q | N - P^2; no floating point is involved.
 */

#include "rqf/quad_field.hpp"

#include <compare>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace rqf {

struct CFExpansion {
    std::vector<Integer> initial;
    std::vector<Integer> period;

    friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CFExpansion& cf) {
    os << "[";
    for (std::size_t i = 0; i < cf.initial.size(); ++i) os << (i ? ", " : "") << cf.initial[i];
    os << "; (";
    for (std::size_t i = 0; i < cf.period.size(); ++i) os << (i ? ", " : "") << cf.period[i];
    return os << ")]";
}

namespace detail {

/// State (P, Q) of the complete quotient (P + sqrt N)/Q.
struct SurdState {
    Integer p, q;
    friend std::strong_ordering operator<=>(const SurdState&, const SurdState&) = default;
};

/// Floor of (P + sqrt N)/Q for non-square N.
inline Integer surd_floor(const SurdState& s, const Integer& root_floor) {
    return s.q > 0 ? floor_div(s.p + root_floor, s.q) : floor_div(s.p + root_floor + 1, s.q);
}

inline SurdState surd_step(const SurdState& s, const Integer& a, const Integer& n) {
    const Integer p = a * s.q - s.p;
    return {p, (n - p * p) / s.q};
}

}  // namespace detail

/**
 * Continued fraction of (a + b sqrt D)/c, split into preperiod and minimal
 * period. The period ends as soon as a (P, Q) state repeats.
 */
inline CFExpansion cf_expand(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    if (c == 0) throw hypothesis_error("cf_expand: zero denominator");
    if (b == 0 || is_perfect_square(d)) throw hypothesis_error("cf_expand: not an irrational surd (D=" + d.get_str() + ")");
    // Normalise to (P + sqrt N)/Q with Q | N - P^2.
    Integer pa = a, pc = c;
    const Integer bb = abs(b);
    if (b < 0) {
        pa = -a;
        pc = -c;
    }
    const Integer abs_c = abs(pc);
    const Integer n = bb * bb * pc * pc * d;
    detail::SurdState s{pa * abs_c, pc * abs_c};
    const Integer root = isqrt(n);

    std::vector<Integer> terms;
    std::map<detail::SurdState, std::size_t> seen;
    while (true) {
        if (auto it = seen.find(s); it != seen.end()) {
            CFExpansion cf;
            cf.initial.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
            cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
            return cf;
        }
        seen.emplace(s, terms.size());
        const Integer q = detail::surd_floor(s, root);
        terms.push_back(q);
        s = detail::surd_step(s, q, n);
    }
}

/// eps = (t + u sqrt D)/2 with t, u >= 1 and (t^2 - D u^2)/4 = norm.
struct FundamentalUnit {
    Integer t, u;
    int norm = 0;
    Integer d;
    /// True once checked minimal against the continued fraction.
    bool fundamental = false;

    QuadInt element() const { return QuadInt(t, u, d); }

    friend bool operator==(const FundamentalUnit& a, const FundamentalUnit& b) {
        return a.t == b.t && a.u == b.u && a.norm == b.norm && a.d == b.d;
    }
};

inline std::ostream& operator<<(std::ostream& os, const FundamentalUnit& e) {
    return os << "(" << e.t << " + " << e.u << "*sqrt(" << e.d << "))/2 [N=" << e.norm << "]";
}

/**
 * Smallest unit > 1 of the maximal order. Walks the convergents p/q of
 * omega = (1 + sqrt D)/2 (or sqrt D) until p - q*omega' is a unit, which
 * happens at the end of the first period.
 */
inline FundamentalUnit fundamental_unit(const QuadField& k) {
    const Integer& d = k.d();
    const bool one_mod_4 = k.d_is_1_mod_4();
    // omega = (P0 + sqrt D)/Q0
    detail::SurdState s = one_mod_4 ? detail::SurdState{1, 2} : detail::SurdState{0, 1};
    const Integer root = isqrt(d);

    // convergent seeds p_{-2}, p_{-1} and q_{-2}, q_{-1}
    Integer p_prev = 0, p_cur = 1;
    Integer q_prev = 1, q_cur = 0;
    while (true) {
        const Integer a = detail::surd_floor(s, root);
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        q_prev = std::move(q_cur);
        q_cur = std::move(q_next);
        s = detail::surd_step(s, a, d);

        // p - q*omega' as (t + u sqrt D)/2
        const Integer t = one_mod_4 ? Integer(2 * p_cur - q_cur) : Integer(2 * p_cur);
        const Integer u = one_mod_4 ? q_cur : Integer(2 * q_cur);
        const Integer n4 = t * t - d * u * u;
        if (n4 == 4 || n4 == -4) {
            return FundamentalUnit{t, u, n4 > 0 ? 1 : -1, d, true};
        }
    }
}

/**
 * The explicit unit ((9m+2) + 3 sqrt D)/2 for m > 0, ((9|m|-2) + 3 sqrt D)/2
 * for m < 0. Flagged fundamental only if it matches fundamental_unit().
 */
inline FundamentalUnit family_unit(const Integer& m) {
    const QuadField k = QuadField::family(m);
    const Integer t = m > 0 ? Integer(9 * m + 2) : Integer(-9 * m - 2);
    FundamentalUnit e{t, 3, 0, k.d(), false};
    const Integer n4 = t * t - 9 * k.d();
    if (n4 != 4) throw std::logic_error("family_unit: norm is not +1 for m=" + m.get_str());
    e.norm = 1;
    e.fundamental = (e == fundamental_unit(k));
    return e;
}

/**
 * Narrow-sense Richaud-Degert test: D = n^2 + r with -n < r <= n, r | 4n.
 * Any such n lies in [ceil(sqrt(D/2)), floor(sqrt(2D))].
 */
inline bool is_rd_type(const Integer& d) {
    if (d < 2) throw hypothesis_error("is_rd_type: D must be >= 2");
    if (const Integer p = square_factor(d); p != 1) throw not_squarefree_error(d, p);
    Integer lo = isqrt(d / 2);
    while (2 * lo * lo < d) ++lo;
    const Integer hi = isqrt(2 * d);
    for (Integer n = lo; n <= hi; ++n) {
        const Integer r = d - n * n;
        if (r != 0 && -n < r && r <= n && divides(r, 4 * n)) return true;
    }
    return false;
}

/// eps^k for k >= 0.
inline QuadInt unit_power(const QuadInt& eps, unsigned k) {
    QuadInt acc = QuadInt(2, 0, eps.d());
    for (unsigned i = 0; i < k; ++i) acc = acc * eps;
    return acc;
}

}  // namespace rqf
