#pragma once

/**
 * @file dedekind_sums.hpp
 * @brief Weight-4 generalized Dedekind sums S^2(a,c) and S^3(a,c).
 *
 *   S^2(a,c) = sum_{j mod c} P_2(j/c) P_2(aj/c)
 *   S^3(a,c) = sum_{j mod c} P_1(j/c) P_3(aj/c)
 *
 * dedekind_sum() is the reference: a direct O(c) summation. The closed forms
 * are fast paths and are regression-tested against it.
 */

#include "rqf/exact_arith.hpp"

namespace rqf {

/**
 * Direct summation. Any integer a is accepted (no coprimality requirement).
 *
 * With k = aj mod c the summands are integer polynomials over a common
 * denominator:
 *   P_1(j/c) P_3(k/c) = (2j - c)(2k^3 - 3ck^2 + c^2 k) / (4c^4)
 *   P_2(j/c) P_2(k/c) = (6j^2 - 6cj + c^2)(6k^2 - 6ck + c^2) / (36c^4)
 */
inline Rational dedekind_sum(int r, const Integer& a, const Integer& c) {
    if (r != 2 && r != 3) throw hypothesis_error("dedekind_sum: r must be 2 or 3");
    if (c < 1) throw hypothesis_error("dedekind_sum: c must be >= 1, got " + c.get_str());

    const Integer c2 = c * c;
    const Integer a_red = mod_floor(a, c);
    Integer acc = 0;
    Integer k = 0;  // a*j mod c, advanced incrementally
    for (Integer j = 0; j < c; ++j) {
        if (r == 3) {
            acc += (2 * j - c) * (k * (2 * k * k - 3 * c * k + c2));
        } else {
            acc += (6 * j * j - 6 * c * j + c2) * (6 * k * k - 6 * c * k + c2);
        }
        k += a_red;
        if (k >= c) k -= c;
    }
    const Integer c4 = c2 * c2;
    return make_rational(acc, (r == 3 ? 4 : 36) * c4);
}

/// S^3(sign, m) = sign * (-m^4 + 5m^2 - 4) / (120 m^3); the outer sign follows the argument.
inline Rational closed_s3_unit(int sign, const Integer& m) {
    if (sign != 1 && sign != -1) throw hypothesis_error("closed_s3_unit: sign must be +1 or -1");
    if (m < 1) throw hypothesis_error("closed_s3_unit: m must be >= 1");
    const Integer m2 = m * m;
    return make_rational(sign * (-m2 * m2 + 5 * m2 - 4), 120 * m2 * m);
}

/// S^2(+-1, m) = (m^4 + 10m^2 - 6) / (180 m^3), independent of the sign.
inline Rational closed_s2_unit(const Integer& m) {
    if (m < 1) throw hypothesis_error("closed_s2_unit: m must be >= 1");
    const Integer m2 = m * m;
    return make_rational(m2 * m2 + 10 * m2 - 6, 180 * m2 * m);
}

namespace detail {

inline void require_family_prime(const Integer& q, const char* who) {
    if (q < 7 || mod_floor(q, 3) != 1 || !is_prime(q)) {
        throw hypothesis_error(std::string(who) + ": q must be a prime = 1 (mod 3), got " + q.get_str());
    }
}

}  // namespace detail

/// S^2(2q-1, 3q) = (q^4 + 330q^2 - 160q - 6) / (4860 q^3).
inline Rational closed_s2_family(const Integer& q) {
    detail::require_family_prime(q, "closed_s2_family");
    const Integer q2 = q * q;
    return make_rational(q2 * q2 + 330 * q2 - 160 * q - 6, 4860 * q2 * q);
}

/// q^2 coefficient of the S^3(2q-1, 3q) numerator confirmed by direct summation.
/// The competing value -160 disagrees with dedekind_sum() for every such q.
inline constexpr long kS3FamilyQuadraticCoefficient = -165;

/// S^3(2q-1, 3q) = (q^4 + 40q^3 + coeff*q^2 + 80q + 4) / (3240 q^3).
inline Rational closed_s3_family_candidate(const Integer& q, long quadratic_coefficient) {
    detail::require_family_prime(q, "closed_s3_family");
    const Integer q2 = q * q;
    return make_rational(q2 * q2 + 40 * q2 * q + quadratic_coefficient * q2 + 80 * q + 4, 3240 * q2 * q);
}

inline Rational closed_s3_family(const Integer& q) {
    return closed_s3_family_candidate(q, kS3FamilyQuadraticCoefficient);
}

}  // namespace rqf
