#pragma once

/**
 * @file pell.hpp
 * @brief x^2 - D y^2 = N by exhaustive search in Nagell's fundamental window.
 */

#include "rqf/units_cf.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace rqf {

struct PellSolution {
    Integer x, y, n, d;

    bool satisfies() const { return x * x - d * y * y == n; }
    /// (x + y sqrt D)/2 lies in O_K when x = y (mod 2).
    bool integral() const { return mod_floor(x - y, 2) == 0; }

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PellSolution& s) {
    return os << "(" << s.x << ", " << s.y << ")";
}

/// X + Y sqrt D, the smallest solution of X^2 - D Y^2 = 1 with Y > 0.
struct PellUnit {
    Integer x, y;
    friend bool operator==(const PellUnit&, const PellUnit&) = default;
};

/// From the continued fraction of sqrt D; D need not be square-free.
inline PellUnit pell_unit(const Integer& d) {
    if (d < 2 || is_perfect_square(d)) throw hypothesis_error("pell_unit: D must be a non-square >= 2");
    detail::SurdState s{0, 1};
    const Integer root = isqrt(d);
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
        if (p_cur * p_cur - d * q_cur * q_cur == 1) return {p_cur, q_cur};
    }
}

/// Smallest power of a unit of O_K that lies in Z[sqrt D] and has norm +1.
inline PellUnit pell_unit(const FundamentalUnit& eps) {
    const QuadInt e = eps.element();
    QuadInt power = e;
    for (unsigned k = 1; k <= 6; ++k) {
        if (mod_floor(power.x(), 2) == 0 && mod_floor(power.y(), 2) == 0 && power.norm() == 1) {
            return {power.x() / 2, power.y() / 2};
        }
        power = power * e;
    }
    throw std::logic_error("pell_unit: no power eps^k, k <= 6, lies in Z[sqrt D] with norm 1");
}

/**
 * One solution per class of x^2 - D y^2 = N under multiplication by
 * +-(X + Y sqrt D)^k, found in the window
 *   N > 0:  0 <= y <= Y sqrt(N) / sqrt(2(X + 1))
 *   N < 0:  0 <  y <= Y sqrt(|N|) / sqrt(2(X - 1))
 * Both (x, y) and (-x, y) are reported; they may coincide in ambiguous
 * classes. Solutions with x != y (mod 2) are kept. Sorted by (y, x).
 */
inline std::vector<PellSolution> solve_pell(const Integer& d, const Integer& n, const PellUnit& unit) {
    if (d < 2 || is_perfect_square(d)) throw hypothesis_error("solve_pell: D must be a non-square >= 2");
    if (n == 0) throw hypothesis_error("solve_pell: N must be nonzero");
    if (unit.x * unit.x - d * unit.y * unit.y != 1 || unit.y <= 0) {
        throw hypothesis_error("solve_pell: supplied unit does not solve X^2 - D Y^2 = 1");
    }
    const Integer abs_n = abs(n);
    const Integer scale = 2 * (n > 0 ? Integer(unit.x + 1) : Integer(unit.x - 1));
    const Integer y_max = isqrt(unit.y * unit.y * abs_n / scale);

    std::vector<PellSolution> out;
    for (Integer y = 0; y <= y_max; ++y) {
        const Integer v = n + d * y * y;
        if (v < 0 || !is_perfect_square(v)) continue;
        const Integer x = isqrt(v);
        out.push_back({x, y, n, d});
        if (x != 0 && y != 0) out.push_back({-x, y, n, d});
    }
    std::sort(out.begin(), out.end(), [](const PellSolution& a, const PellSolution& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    return out;
}

inline std::vector<PellSolution> solve_pell(const Integer& d, const Integer& n) {
    if (d < 2 || is_perfect_square(d)) throw hypothesis_error("solve_pell: D must be a non-square >= 2");
    return solve_pell(d, n, pell_unit(d));
}

/// Whether two solutions of the same equation differ by a unit of Z[sqrt D].
inline bool same_class(const PellSolution& a, const PellSolution& b) {
    if (a.n != b.n || a.d != b.d) return false;
    // (x + y sqrt D)(x' - y' sqrt D) / N must be integral
    return divides(a.n, a.x * b.x - a.d * a.y * b.y) && divides(a.n, a.x * b.y - a.y * b.x);
}

namespace detail {

inline void require_pell_family(const Integer& m) {
    if (m <= 0 || mod_floor(m, 2) == 0) throw hypothesis_error("pell family: m must be odd and positive, got " + m.get_str());
    if (!is_squarefree(m)) throw hypothesis_error("pell family: m must be square-free, got " + m.get_str());
    if (!is_prime(9 * m + 4)) throw hypothesis_error("pell family: q = 9m+4 must be prime for m=" + m.get_str());
}

}  // namespace detail

/// (9m+4, 3) solves x^2 - D y^2 = 4q since q^2 - 9D = q(q - 9m) = 4q.
inline PellSolution family_solution(const Integer& m) {
    detail::require_pell_family(m);
    const Integer q = 9 * m + 4;
    PellSolution s{q, 3, 4 * q, 9 * m * m + 4 * m};
    if (!s.satisfies()) throw std::logic_error("family_solution: identity failed for m=" + m.get_str());
    return s;
}

struct PrincipalWitness {
    bool principal = false;
    QuadInt generator;
    IdealBasis ideal;
};

/**
 * The prime above q = 9m + 4 is generated by (q + 3 sqrt D)/2: the element has
 * norm q and lies in <q, (q + sqrt D)/2>, so it generates that ideal.
 */
inline PrincipalWitness ramified_prime_is_principal(const Integer& m) {
    detail::require_pell_family(m);
    const QuadField k = QuadField::family(m);
    const Integer q = 9 * m + 4;
    IdealBasis ideal = prime_ideal_basis(k, q, q);
    QuadInt g(q, 3, k);
    const bool ok = g.norm() == q && ideal.contains(g) && ideal.norm == q;
    return {ok, std::move(g), std::move(ideal)};
}

}  // namespace rqf
