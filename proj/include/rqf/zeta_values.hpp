#pragma once

/**
 * @file zeta_values.hpp
 * @brief zeta_K(-1) and partial zeta values zeta_K(-1, A) for real quadratic K.
 *
 * zagier_zeta() sums divisor functions over t; lang_partial_zeta() evaluates
 * the unit-matrix / Dedekind-sum formula for one ideal class. The
 * partial_zeta_* functions are closed forms on the family D = 9m^2 + 4m,
 * m > 0, and are checked against lang_partial_zeta() in the test suites.
 */

#include "rqf/dedekind_sums.hpp"
#include "rqf/quad_field.hpp"
#include "rqf/units_cf.hpp"

namespace rqf {

/// zeta_K(-1) = (1/60) sum_{|t| < sqrt D, t^2 = D mod 4} sigma((D - t^2)/4).
inline Rational zagier_zeta(const QuadField& k) {
    if (!k.d_is_1_mod_4()) {
        throw hypothesis_error("zagier_zeta: only discriminants = 1 (mod 4) are supported, D=" + k.d().get_str());
    }
    const Integer& d = k.d();
    Integer total = 0;
    // t odd, 0 < t < sqrt D; the sum is symmetric in t -> -t and t = 0 never occurs.
    for (Integer t = 1; t * t < d; t += 2) total += divisor_sigma((d - t * t) / 4);
    return make_rational(2 * total, 60);
}

/// M = [a b; c d] with eps*r1 = a r1 + b r2, eps*r2 = c r1 + d r2.
struct UnitMatrix {
    Integer a, b, c, d;
    Integer determinant() const { return a * d - b * c; }
    friend bool operator==(const UnitMatrix&, const UnitMatrix&) = default;
};

inline UnitMatrix unit_matrix(const IdealBasis& basis, const FundamentalUnit& unit) {
    if (unit.d != basis.r1.d()) throw hypothesis_error("unit_matrix: unit and basis belong to different fields");
    const QuadInt eps = unit.element();
    const Coordinates row1 = coordinates(eps * basis.r1, basis.r1, basis.r2);
    const Coordinates row2 = coordinates(eps * basis.r2, basis.r1, basis.r2);
    if (!row1.integral() || !row2.integral()) {
        throw hypothesis_error("unit_matrix: eps does not act integrally on the basis (invalid basis/unit pairing)");
    }
    UnitMatrix m{row1.u.get_num(), row1.v.get_num(), row2.u.get_num(), row2.v.get_num()};
    if (m.determinant() != unit.norm) throw std::logic_error("unit_matrix: determinant differs from N(eps)");
    return m;
}

/**
 * zeta_K(-1, A) for the class A with a in A^{-1}:
 *
 *   sgn(delta) r2 r2' / (360 N(a) c^3) * { (a+d)^3 - 6(a+d)N(eps)
 *       - 240 c^3 sgn(c) S^3(a,c) + 180 a c^3 sgn(c) S^2(a,c)
 *       - 240 c^3 sgn(c) S^3(d,c) + 180 d c^3 sgn(c) S^2(d,c) }
 *
 * The Dedekind sums are taken at modulus |c|, always by direct summation.
 */
inline Rational lang_partial_zeta(const IdealBasis& basis, const FundamentalUnit& unit) {
    if (unit.norm != 1 && unit.norm != -1) throw hypothesis_error("lang_partial_zeta: unit norm must be +-1");
    const UnitMatrix mat = unit_matrix(basis, unit);
    if (mat.c == 0) throw hypothesis_error("lang_partial_zeta: unit matrix has c = 0");

    const int sgn_c = sign(mat.c);
    const int sgn_delta = sign(basis.delta.y());
    const Integer abs_c = abs(mat.c);
    const Integer c3 = mat.c * mat.c * mat.c;
    const Integer trace = mat.a + mat.d;

    Rational brace = Rational(trace * trace * trace - 6 * trace * unit.norm);
    brace -= 240 * c3 * sgn_c * dedekind_sum(3, mat.a, abs_c);
    brace += 180 * mat.a * c3 * sgn_c * dedekind_sum(2, mat.a, abs_c);
    brace -= 240 * c3 * sgn_c * dedekind_sum(3, mat.d, abs_c);
    brace += 180 * mat.d * c3 * sgn_c * dedekind_sum(2, mat.d, abs_c);

    const Integer r2_norm = basis.r2.norm();
    return sgn_delta * r2_norm * brace / Rational(360 * basis.norm * c3);
}

namespace family {

inline void require_positive_family(const Integer& m, const char* who) {
    if (m <= 0) throw hypothesis_error(std::string(who) + ": closed forms hold for m > 0 only, got m=" + m.get_str());
    (void)QuadField::family(m);  // odd, square-free D
}

/// Basis {(1+sqrt D)/2, 1} of O_K, i.e. the trivial class.
inline IdealBasis trivial_basis(const Integer& m) { return unit_ideal_basis(QuadField::family(m)); }

/// {(3+sqrt D)/2, 3} when 3 | m.
inline IdealBasis ramified3_basis(const Integer& m) {
    if (!divides(3, m)) throw hypothesis_error("ramified3_basis: requires 3 | m");
    return prime_ideal_basis(QuadField::family(m), 3, 3);
}

/// {(1+sqrt D)/2, 3} when m = 1 (mod 3).
inline IdealBasis split3_basis(const Integer& m) {
    if (mod_floor(m, 3) != 1) throw hypothesis_error("split3_basis: requires m = 1 (mod 3)");
    return prime_ideal_basis(QuadField::family(m), 3, 1);
}

/// {(p+sqrt D)/2, p} for an odd prime p dividing D.
inline IdealBasis ramified_basis(const Integer& m, const Integer& p) {
    const QuadField k = QuadField::family(m);
    if (p < 3 || !is_prime(p) || !divides(p, k.d())) {
        throw hypothesis_error("ramified_basis: p=" + p.get_str() + " must be an odd prime dividing D");
    }
    return prime_ideal_basis(k, p, p);
}

}  // namespace family

/// zeta_K(-1, C) = (9m^3 + 6m^2 + 19m + 6)/120.
inline Rational partial_zeta_trivial(const Integer& m) {
    family::require_positive_family(m, "partial_zeta_trivial");
    return make_rational(9 * m * m * m + 6 * m * m + 19 * m + 6, 120);
}

/// 3 | m: zeta_K(-1, U) = (3m^3 + 2m^2 + 273m + 162)/360.
inline Rational partial_zeta_ramified3(const Integer& m) {
    family::require_positive_family(m, "partial_zeta_ramified3");
    if (!divides(3, m)) throw hypothesis_error("partial_zeta_ramified3: requires 3 | m");
    return make_rational(3 * m * m * m + 2 * m * m + 273 * m + 162, 360);
}

/// m = 1 (mod 3): zeta_K(-1, U) = (3m^3 + 2m^2 + 113m + 2)/360.
inline Rational partial_zeta_split3(const Integer& m) {
    family::require_positive_family(m, "partial_zeta_split3");
    if (mod_floor(m, 3) != 1) throw hypothesis_error("partial_zeta_split3: requires m = 1 (mod 3)");
    return make_rational(3 * m * m * m + 2 * m * m + 113 * m + 2, 360);
}

/// p > 3 prime, p | m: zeta_K(-1, P) = (9m^3 + 6m^2 + 9mp^4 + 10mp^2 + 6p^4)/(120 p^2).
inline Rational partial_zeta_p(const Integer& m, const Integer& p) {
    family::require_positive_family(m, "partial_zeta_p");
    if (p <= 3 || !is_prime(p) || !divides(p, m)) {
        throw hypothesis_error("partial_zeta_p: p=" + p.get_str() + " must be a prime > 3 dividing m");
    }
    const Integer p2 = p * p;
    return make_rational(9 * m * m * m + 6 * m * m + 9 * m * p2 * p2 + 10 * m * p2 + 6 * p2 * p2, 120 * p2);
}

/// The q-form (q^3 - 6q^2 + 171q - 166)/(27 * 360) with q = 9m + 4.
inline Rational partial_zeta_q_in_q(const Integer& q) {
    return make_rational(q * q * q - 6 * q * q + 171 * q - 166, 27 * 360);
}

/**
 * q = 9m + 4 prime: zeta_K(-1, Q) for the prime above q. Both closed forms are
 * evaluated; they must agree with each other and with the trivial class.
 */
inline Rational partial_zeta_q(const Integer& m) {
    family::require_positive_family(m, "partial_zeta_q");
    const Integer q = 9 * m + 4;
    if (!is_prime(q)) throw hypothesis_error("partial_zeta_q: q=9m+4=" + q.get_str() + " is not prime");
    const Rational in_q = partial_zeta_q_in_q(q);
    const Rational in_m = make_rational(9 * m * m * m + 6 * m * m + 19 * m + 6, 120);
    if (in_q != in_m) throw std::logic_error("partial_zeta_q: q-form and m-form disagree for m=" + m.get_str());
    return in_m;
}

/**
 * Lower bound for zeta_K(-1) when m = 1 (mod 3), from the trivial divisors
 * 1 and n, the divisors 3 and n/3 when 3 | n, and the extra pair at s = m:
 *
 *   (1/60) ( (9m^3 + 6m^2 + 13m + 4)/2 + (m^3 + 2m^2/3 + 19m/3) + 2(3m + 1) )
 */
inline Rational c3_lower_bound(const Integer& m) {
    if (m <= 0 || mod_floor(m, 2) == 0) throw hypothesis_error("c3_lower_bound: m must be odd and positive");
    if (mod_floor(m, 3) != 1) throw hypothesis_error("c3_lower_bound: requires m = 1 (mod 3)");
    const Integer m2 = m * m, m3 = m2 * m;
    const Rational inner = make_rational(9 * m3 + 6 * m2 + 13 * m + 4, 2) +
                           (Rational(m3) + make_rational(2 * m2, 3) + make_rational(19 * m, 3)) +
                           Rational(2 * (3 * m + 1));
    return inner / 60;
}

}  // namespace rqf
