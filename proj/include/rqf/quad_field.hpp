#pragma once

/**
 * @file quad_field.hpp
 * @brief Q(sqrt D), its ring of integers, and integral bases of prime ideals.
 *
 * Elements are stored as (x + y sqrt D)/2. For D = 1 (mod 4) integrality means
 * x = y (mod 2); for D = 2, 3 (mod 4) the ring is Z[sqrt D] and x, y are even.
 */

#include "rqf/exact_arith.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace rqf {

/// Thrown when D has a square factor; carries the offending prime.
class not_squarefree_error : public hypothesis_error {
public:
    not_squarefree_error(const Integer& d, const Integer& p)
        : hypothesis_error("D=" + d.get_str() + " is not square-free (" + p.get_str() + "^2 divides it)"),
          prime_(p) {}
    const Integer& prime() const { return prime_; }

private:
    Integer prime_;
};

class QuadField {
public:
    /// Q(sqrt D) for square-free D >= 2.
    static QuadField from_d(const Integer& d) {
        if (d < 2) throw hypothesis_error("field: D must be >= 2, got " + d.get_str());
        if (const Integer p = square_factor(d); p != 1) throw not_squarefree_error(d, p);
        return QuadField(d, std::nullopt);
    }

    /// Q(sqrt(9m^2 + 4m)) for odd m with square-free D.
    static QuadField family(const Integer& m) {
        if (mod_floor(m, 2) == 0) throw hypothesis_error("family field: m must be odd, got " + m.get_str());
        const Integer d = 9 * m * m + 4 * m;
        if (d < 2) throw hypothesis_error("family field: D must be positive, got " + d.get_str());
        if (const Integer p = square_factor(d); p != 1) throw not_squarefree_error(d, p);
        return QuadField(d, m);
    }

    const Integer& d() const { return d_; }
    const Integer& discriminant() const { return disc_; }
    const std::optional<Integer>& m() const { return m_; }
    bool is_family() const { return m_.has_value(); }
    bool d_is_1_mod_4() const { return disc_ == d_; }

    const Integer& family_m() const {
        if (!m_) throw hypothesis_error("field Q(sqrt " + d_.get_str() + ") was not built from the family");
        return *m_;
    }

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }

private:
    QuadField(Integer d, std::optional<Integer> m)
        : d_(std::move(d)), disc_(mod_floor(d_, 4) == 1 ? d_ : Integer(4 * d_)), m_(std::move(m)) {}

    Integer d_;
    Integer disc_;
    std::optional<Integer> m_;
};

inline QuadField make_family_field(const Integer& m) { return QuadField::family(m); }

/// (x + y sqrt D)/2 in the ring of integers of Q(sqrt D).
class QuadInt {
public:
    QuadInt(Integer x, Integer y, Integer d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
        const bool one_mod_4 = mod_floor(d_, 4) == 1;
        const bool ok = one_mod_4 ? mod_floor(x_ - y_, 2) == 0 : (mod_floor(x_, 2) == 0 && mod_floor(y_, 2) == 0);
        if (!ok) {
            throw hypothesis_error("(" + x_.get_str() + " + " + y_.get_str() + "*sqrt(" + d_.get_str() +
                                   "))/2 is not an algebraic integer");
        }
    }
    QuadInt(Integer x, Integer y, const QuadField& k) : QuadInt(std::move(x), std::move(y), k.d()) {}

    static QuadInt rational(const Integer& n, const QuadField& k) { return QuadInt(2 * n, 0, k); }

    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    const Integer& d() const { return d_; }

    QuadInt conj() const { return QuadInt(x_, -y_, d_, unchecked{}); }
    Integer norm() const { return (x_ * x_ - d_ * y_ * y_) / 4; }
    Integer trace() const { return x_; }

    friend QuadInt operator+(const QuadInt& a, const QuadInt& b) {
        same_field(a, b);
        return QuadInt(a.x_ + b.x_, a.y_ + b.y_, a.d_, unchecked{});
    }
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b) {
        same_field(a, b);
        return QuadInt(a.x_ - b.x_, a.y_ - b.y_, a.d_, unchecked{});
    }
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b) {
        same_field(a, b);
        // ((ax bx + D ay by) + (ax by + ay bx) sqrt D) / 4, rescaled to halves
        return QuadInt((a.x_ * b.x_ + a.d_ * a.y_ * b.y_) / 2, (a.x_ * b.y_ + a.y_ * b.x_) / 2, a.d_);
    }
    friend QuadInt operator*(const Integer& n, const QuadInt& a) { return QuadInt(n * a.x_, n * a.y_, a.d_, unchecked{}); }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& a) {
        return os << "(" << a.x_ << (a.y_ < 0 ? " - " : " + ") << abs(a.y_) << "*sqrt(" << a.d_ << "))/2";
    }

private:
    struct unchecked {};
    QuadInt(Integer x, Integer y, Integer d, unchecked) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}

    static void same_field(const QuadInt& a, const QuadInt& b) {
        if (a.d_ != b.d_) throw hypothesis_error("mixed-field operands: D=" + a.d_.get_str() + " and D=" + b.d_.get_str());
    }

    Integer x_, y_, d_;
};

inline QuadInt conj(const QuadInt& a) { return a.conj(); }
inline Integer norm(const QuadInt& a) { return a.norm(); }
inline Integer trace(const QuadInt& a) { return a.trace(); }

/// Coordinates (u, v) with target = u*r1 + v*r2 over Q.
struct Coordinates {
    Rational u, v;
    bool integral() const { return u.get_den() == 1 && v.get_den() == 1; }
};

inline Coordinates coordinates(const QuadInt& target, const QuadInt& r1, const QuadInt& r2) {
    const Integer det = r1.x() * r2.y() - r2.x() * r1.y();
    if (det == 0) throw hypothesis_error("coordinates: r1, r2 are linearly dependent");
    return {make_rational(target.x() * r2.y() - r2.x() * target.y(), det),
            make_rational(r1.x() * target.y() - target.x() * r1.y(), det)};
}

/// delta = r1 r2' - r1' r2, a rational multiple of sqrt D.
inline QuadInt delta(const QuadInt& r1, const QuadInt& r2) {
    // r1 r2' - r1' r2 = (y1 x2 - x1 y2) sqrt D / 2
    return QuadInt(0, r1.y() * r2.x() - r1.x() * r2.y(), r1.d());
}

/**
 * Z-basis {r1, r2} of an integral ideal. By convention r1 carries the sqrt D
 * part and r2 is rational, so delta has positive sqrt D coefficient for the
 * bases built here.
 */
struct IdealBasis {
    QuadInt r1;
    QuadInt r2;
    Integer norm;
    QuadInt delta;

    /// Validates that the span is an ideal and derives norm and delta.
    static IdealBasis from_generators(const QuadInt& r1, const QuadInt& r2) {
        if (r1.d() != r2.d()) throw hypothesis_error("ideal basis: mixed fields");
        QuadInt dl = rqf::delta(r1, r2);
        if (dl.y() == 0) throw hypothesis_error("ideal basis: generators are linearly dependent");
        const Integer& d = r1.d();
        const bool one_mod_4 = mod_floor(d, 4) == 1;
        // |delta| = N(a) sqrt(disc); sqrt(disc) = sqrt D or 2 sqrt D
        Integer n = abs(dl.y()) / (one_mod_4 ? 2 : 4);
        IdealBasis b{r1, r2, std::move(n), std::move(dl)};
        const QuadInt omega = one_mod_4 ? QuadInt(1, 1, d) : QuadInt(0, 2, d);
        for (const QuadInt* g : {&r1, &r2}) {
            if (!coordinates(omega * *g, r1, r2).integral()) {
                throw hypothesis_error("ideal basis: span is not closed under multiplication by the ring");
            }
        }
        return b;
    }

    bool contains(const QuadInt& a) const { return coordinates(a, r1, r2).integral(); }

    /// Conjugate ideal, with r1 replaced by its conjugate.
    IdealBasis conjugate() const { return from_generators(r1.conj(), r2); }
};

/// {(1 + sqrt D)/2, 1} (or {sqrt D, 1}): the ring of integers itself.
inline IdealBasis unit_ideal_basis(const QuadField& k) {
    const QuadInt omega = k.d_is_1_mod_4() ? QuadInt(1, 1, k) : QuadInt(0, 2, k);
    return IdealBasis::from_generators(omega, QuadInt::rational(1, k));
}

/// {(b + sqrt disc)/2, p} for b = disc (mod 2), b^2 = disc (mod 4p).
inline IdealBasis prime_ideal_basis(const QuadField& k, const Integer& p, const Integer& b) {
    const Integer& disc = k.discriminant();
    if (mod_floor(b * b - disc, 4 * p) != 0) {
        throw hypothesis_error("prime ideal basis: b^2 != disc (mod 4p) for b=" + b.get_str());
    }
    const QuadInt r1 = k.d_is_1_mod_4() ? QuadInt(b, 1, k) : QuadInt(b, 2, k);
    return IdealBasis::from_generators(r1, QuadInt::rational(p, k));
}

enum class Splitting { split, ramified, inert };

inline std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::ramified: return "ramified";
        case Splitting::inert: return "inert";
    }
    return "?";
}

struct PrimeDecomposition {
    Splitting kind;
    /// Basis of one prime above p; absent when p is inert.
    std::optional<IdealBasis> ideal;
};

inline int kronecker(const Integer& a, const Integer& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

/**
 * Decomposition of pO_K via the Kronecker symbol (disc/p). The basis uses the
 * smallest positive b with b = disc (mod 2) and b^2 = disc (mod 4p), which
 * gives {3, (3+sqrt D)/2}, {3, (1+sqrt D)/2} and {p, (p+sqrt D)/2} on the
 * family.
 */
inline PrimeDecomposition prime_splitting(const QuadField& k, const Integer& p) {
    if (!is_prime(p)) throw hypothesis_error("prime_splitting: " + p.get_str() + " is not prime");
    const Integer& disc = k.discriminant();
    const int chi = kronecker(disc, p);
    if (chi == -1) return {Splitting::inert, std::nullopt};
    const Integer four_p = 4 * p;
    for (Integer b = 1; b <= four_p; ++b) {
        if (mod_floor(b - disc, 2) == 0 && mod_floor(b * b - disc, four_p) == 0) {
            return {chi == 0 ? Splitting::ramified : Splitting::split, prime_ideal_basis(k, p, b)};
        }
    }
    throw std::logic_error("prime_splitting: no square root of the discriminant mod 4p");
}

}  // namespace rqf
