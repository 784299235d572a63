#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integer/rational arithmetic and multiplicative number theory.
 *
 * Integer and Rational are GMP's mpz_class / mpq_class. Every Rational that
 * leaves this library is canonical (lowest terms, positive denominator), so
 * operator== is exact value equality.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rqf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation's mathematical precondition does not hold.
class hypothesis_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Always "p/q", including integers ("3/1").
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Floor division for a signed numerator and nonzero denominator.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Least nonnegative residue of a modulo |b|.
inline Integer mod_floor(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline int sign(const Integer& n) { return sgn(n); }

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing; product of prime^exponent reconstructs n.
using Factorization = std::vector<PrimePower>;

namespace detail {

inline Factorization factorize_u64(std::uint64_t n) {
    Factorization out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({Integer(static_cast<unsigned long>(p)), e});
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.push_back({Integer(static_cast<unsigned long>(n)), 1});
    return out;
}

}  // namespace detail

/// Deterministic trial division up to sqrt(n).
inline Factorization factorize(const Integer& n) {
    if (n < 1) throw hypothesis_error("factorize: n must be >= 1, got " + n.get_str());
    if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) >= sizeof(std::uint64_t)) {
        return detail::factorize_u64(n.get_ui());
    }
    Factorization out;
    Integer rest = n;
    auto take = [&](const Integer& p) {
        unsigned e = 0;
        while (divides(p, rest)) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    for (Integer p = 3; p * p <= rest; p += 2) take(p);
    if (rest > 1) out.push_back({rest, 1});
    return out;
}

inline Integer reconstruct(const Factorization& f) {
    Integer n = 1;
    for (const auto& [p, e] : f) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        n *= pe;
    }
    return n;
}

/// Trial division below 2^32; GMP's BPSW test (exact below 2^64) above.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < Integer("4294967296")) {
        const std::uint64_t v = n.get_ui();
        if (v < 4) return true;
        if (v % 2 == 0 || v % 3 == 0) return false;
        for (std::uint64_t p = 5; p * p <= v; p += 6) {
            if (v % p == 0 || v % (p + 2) == 0) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

inline bool is_squarefree(const Integer& n) {
    if (n < 1) throw hypothesis_error("is_squarefree: n must be >= 1, got " + n.get_str());
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return false;
    }
    return true;
}

/// Smallest prime p with p^2 | n, or 1 when n is square-free.
inline Integer square_factor(const Integer& n) {
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return pp.prime;
    }
    return 1;
}

/// Sum of divisors, computed multiplicatively.
inline Integer divisor_sigma(const Integer& n) {
    if (n < 1) throw hypothesis_error("divisor_sigma: n must be >= 1, got " + n.get_str());
    Integer s = 1;
    for (const auto& [p, e] : factorize(n)) {
        Integer term = 1, pk = 1;
        for (unsigned k = 0; k < e; ++k) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

/// Distinct prime divisors of |n| in increasing order (n != 0).
inline std::vector<Integer> prime_divisors(const Integer& n) {
    if (n == 0) throw hypothesis_error("prime_divisors of zero");
    std::vector<Integer> ps;
    for (const auto& pp : factorize(abs(n))) ps.push_back(pp.prime);
    return ps;
}

/**
 * Bernoulli numbers B_s via the recurrence sum_{k<=s} C(s+1,k) B_k = 0.
 * This fixes B_1 = -1/2. The periodic functions below do not depend on it.
 */
inline Rational bernoulli(unsigned s) {
    std::vector<Rational> b(s + 1);
    b[0] = 1;
    for (unsigned n = 1; n <= s; ++n) {
        Rational acc = 0;
        Integer binom = 1;  // C(n+1, k)
        for (unsigned k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -acc / (n + 1);
    }
    return b[s];
}

/// {x} in [0, 1).
inline Rational fractional_part(const Rational& x) {
    return x - Rational(floor_div(x.get_num(), x.get_den()));
}

/**
 * P_t(x) for t in {1,2,3}, evaluated on {x} with the literal polynomials.
 * At integer x this gives P_1 = -1/2, P_2 = 1/6, P_3 = 0 (no sawtooth
 * midpoint convention).
 */
inline Rational periodic_bernoulli(int t, const Rational& x) {
    const Rational f = fractional_part(x);
    switch (t) {
        case 1: return f - Rational(1, 2);
        case 2: return f * f - f + Rational(1, 6);
        case 3: return f * f * f - Rational(3, 2) * f * f + Rational(1, 2) * f;
        default: throw hypothesis_error("periodic_bernoulli: t must be 1, 2 or 3, got " + std::to_string(t));
    }
}

}  // namespace rqf
