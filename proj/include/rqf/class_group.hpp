#pragma once

/**
 * @file class_group.hpp
 * @brief Class numbers from cycles of reduced indefinite binary quadratic
 *        forms, class-number certificates on the family, and table checks.
 */

#include "rqf/sweep.hpp"
#include "rqf/zeta_values.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rqf {

/// a x^2 + b xy + c y^2.
struct QForm {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    friend std::strong_ordering operator<=>(const QForm&, const QForm&) = default;
    friend bool operator==(const QForm&, const QForm&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const QForm& f) {
    return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

inline void require_indefinite_discriminant(const Integer& disc) {
    if (disc <= 0) throw hypothesis_error("discriminant must be positive, got " + disc.get_str());
    const Integer r = mod_floor(disc, 4);
    if (r != 0 && r != 1) throw hypothesis_error("not a discriminant (must be 0 or 1 mod 4): " + disc.get_str());
    if (is_perfect_square(disc)) throw hypothesis_error("discriminant is a perfect square: " + disc.get_str());
}

/// 0 < b < sqrt(disc) and sqrt(disc) - b < 2|a| < sqrt(disc) + b, decided exactly.
inline bool is_reduced(const QForm& f, const Integer& disc) {
    if (f.b <= 0 || f.b * f.b >= disc || f.a == 0) return false;
    const Integer two_a = 2 * abs(f.a);
    const Integer lo = two_a + f.b;  // 2|a| > sqrt - b  <=>  (2|a| + b)^2 > disc
    const Integer hi = two_a - f.b;  // 2|a| < sqrt + b  <=>  2|a| - b < sqrt
    return lo * lo > disc && (hi < 0 || hi * hi < disc);
}

/// All primitive reduced forms of the discriminant, sorted.
inline std::vector<QForm> reduced_forms(const Integer& disc) {
    require_indefinite_discriminant(disc);
    std::vector<QForm> out;
    const Integer root = isqrt(disc);
    for (Integer b = mod_floor(disc, 2) == 0 ? 2 : 1; b <= root; b += 2) {
        const Integer n = (disc - b * b) / 4;  // n = -ac > 0
        for (Integer a = 1; a * a <= n; ++a) {
            if (!divides(a, n)) continue;
            const Integer cof = n / a;
            for (const Integer& abs_a : a == cof ? std::vector<Integer>{a} : std::vector<Integer>{a, cof}) {
                const Integer abs_c = n / abs_a;
                for (int s : {1, -1}) {
                    QForm f{s * abs_a, b, -s * abs_c};
                    Integer g;
                    mpz_gcd(g.get_mpz_t(), f.a.get_mpz_t(), f.b.get_mpz_t());
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.c.get_mpz_t());
                    if (g == 1 && is_reduced(f, disc)) out.push_back(std::move(f));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// (a, b, c) -> (c, b', (b'^2 - disc)/(4c)) with b' = -b (mod 2c), sqrt - 2|c| < b' < sqrt.
inline QForm rho(const QForm& f, const Integer& disc) {
    const Integer root = isqrt(disc);
    const Integer two_c = 2 * abs(f.c);
    const Integer b = root - mod_floor(root + f.b, two_c);
    return {f.c, b, (b * b - disc) / (4 * f.c)};
}

/// Cycles of reduced forms under rho; each cycle listed from its smallest form.
inline std::vector<std::vector<QForm>> form_cycles(const Integer& disc) {
    const auto forms = reduced_forms(disc);
    std::set<QForm> unvisited(forms.begin(), forms.end());
    std::vector<std::vector<QForm>> cycles;
    for (const QForm& start : forms) {
        if (!unvisited.contains(start)) continue;
        std::vector<QForm> cycle;
        QForm f = start;
        do {
            if (unvisited.erase(f) != 1) throw std::logic_error("rho left the set of reduced forms or merged cycles");
            cycle.push_back(f);
            f = rho(f, disc);
        } while (!(f == start));
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

/// h+ = number of rho-cycles.
inline Integer narrow_class_number(const Integer& disc) { return Integer(static_cast<unsigned long>(form_cycles(disc).size())); }

/// h = h+ when N(eps) = -1, h+/2 otherwise.
inline Integer class_number(const QuadField& k) {
    const Integer h_plus = narrow_class_number(k.discriminant());
    const FundamentalUnit eps = fundamental_unit(k);
    if (eps.norm == -1) return h_plus;
    if (!divides(2, h_plus)) {
        throw std::logic_error("class_number: h+ = " + h_plus.get_str() + " is odd but N(eps) = +1 for D=" + k.d().get_str());
    }
    return h_plus / 2;
}

/// Necessary shape of D for h = 1: D = p or 2p with p = 1 (mod 4) prime, or D = qr with q = r = 3 (mod 4).
inline bool hasse_h1_necessary(const Integer& d) {
    if (d < 2) throw hypothesis_error("hasse_h1_necessary: D must be >= 2");
    const auto f = factorize(d);
    for (const auto& pp : f) {
        if (pp.exponent > 1) throw not_squarefree_error(d, pp.prime);
    }
    auto one_mod_4 = [](const Integer& p) { return mod_floor(p, 4) == 1; };
    auto three_mod_4 = [](const Integer& p) { return mod_floor(p, 4) == 3; };
    if (f.size() == 1) return one_mod_4(f[0].prime);
    if (f.size() == 2 && f[0].prime == 2) return one_mod_4(f[1].prime);
    if (f.size() == 2) return three_mod_4(f[0].prime) && three_mod_4(f[1].prime);
    return false;
}

/// Partial zeta values at s = -1 of the classes that certify class-number bounds.
struct FamilyClassValues {
    Rational trivial;
    std::optional<Rational> three;                     // class of the prime above 3, when not inert
    std::vector<std::pair<Integer, Rational>> primes;  // p > 3, p | m
};

/**
 * Closed forms for m > 0. For m < 0 the closed forms do not apply and the
 * values come from lang_partial_zeta() with the family unit on the same bases.
 */
inline FamilyClassValues family_class_values(const Integer& m) {
    const QuadField k = QuadField::family(m);
    FamilyClassValues v;
    const auto primes = prime_divisors(m);
    if (m > 0) {
        v.trivial = partial_zeta_trivial(m);
        if (divides(3, m)) v.three = partial_zeta_ramified3(m);
        if (mod_floor(m, 3) == 1) v.three = partial_zeta_split3(m);
        for (const auto& p : primes) {
            if (p > 3) v.primes.emplace_back(p, partial_zeta_p(m, p));
        }
        return v;
    }
    const FundamentalUnit eps = family_unit(m);
    v.trivial = lang_partial_zeta(family::trivial_basis(m), eps);
    if (divides(3, m)) v.three = lang_partial_zeta(family::ramified3_basis(m), eps);
    if (mod_floor(m, 3) == 1) v.three = lang_partial_zeta(family::split3_basis(m), eps);
    for (const auto& p : primes) {
        if (p > 3) v.primes.emplace_back(p, lang_partial_zeta(family::ramified_basis(m, p), eps));
    }
    return v;
}

struct ClassBound {
    long bound = 1;
    long distinct_partial_values = 1;
    bool zeta_excess = false;  // zeta_K(-1) > zeta(C) + zeta(U) with C != U
    bool hasse_excluded = false;
};

/**
 * Certified lower bound on h for the family field of m:
 *  - distinct partial zeta values mean distinct classes;
 *  - for m = 1 (mod 3), zeta_K(-1) > zeta(C) + zeta(U) with C != U leaves
 *    room for a third class;
 *  - D failing the h = 1 shape condition gives h >= 2.
 */
inline ClassBound class_lower_bound_detail(const Integer& m) {
    const FamilyClassValues v = family_class_values(m);
    std::set<Rational> distinct{v.trivial};
    if (v.three) distinct.insert(*v.three);
    for (const auto& [p, z] : v.primes) distinct.insert(z);

    ClassBound out;
    out.distinct_partial_values = static_cast<long>(distinct.size());
    out.bound = out.distinct_partial_values;
    if (mod_floor(m, 3) == 1 && v.three && *v.three != v.trivial) {
        const Rational total = zagier_zeta(QuadField::family(m));
        if (total > v.trivial + *v.three) {
            out.zeta_excess = true;
            out.bound = std::max(out.bound, 3L);
        }
    }
    if (!hasse_h1_necessary(9 * m * m + 4 * m)) {
        out.hasse_excluded = true;
        out.bound = std::max(out.bound, 2L);
    }
    return out;
}

inline long class_lower_bound(const Integer& m) { return class_lower_bound_detail(m).bound; }

/// Number of distinct prime divisors of m greater than 3.
inline long count_primes_above_3(const Integer& m) {
    long n = 0;
    for (const auto& p : prime_divisors(m)) n += p > 3 ? 1 : 0;
    return n;
}

// ---------------------------------------------------------------------------
// Table corpus

struct TableRow {
    Integer m, d, h;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

class corpus_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV with header `m,D,h`; blank lines and `#` comments are skipped.
inline std::vector<TableRow> parse_corpus(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            const auto b = cell.find_first_not_of(" \t");
            const auto e = cell.find_last_not_of(" \t");
            cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
        }
        if (!header_seen) {
            if (cells != std::vector<std::string>{"m", "D", "h"}) {
                throw corpus_error("corpus line " + std::to_string(lineno) + ": expected header 'm,D,h'");
            }
            header_seen = true;
            continue;
        }
        if (cells.size() != 3) throw corpus_error("corpus line " + std::to_string(lineno) + ": expected 3 fields");
        TableRow row;
        Integer* targets[] = {&row.m, &row.d, &row.h};
        for (int i = 0; i < 3; ++i) {
            if (cells[i].empty() || targets[i]->set_str(cells[i], 10) != 0) {
                throw corpus_error("corpus line " + std::to_string(lineno) + ": bad integer '" + cells[i] + "'");
            }
        }
        if (row.h < 1) throw corpus_error("corpus line " + std::to_string(lineno) + ": h must be >= 1");
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw corpus_error("corpus is empty (no 'm,D,h' header)");
    return rows;
}

struct RowCheck {
    TableRow expected;
    Integer d;  // recomputed
    Integer h;  // recomputed; 0 when the field could not be built
    std::string error;
    bool ok() const { return error.empty() && d == expected.d && h == expected.h; }
};

struct TableReport {
    std::vector<RowCheck> rows;
    std::size_t mismatches() const {
        return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return !r.ok(); }));
    }
    bool ok() const { return mismatches() == 0; }
};

inline RowCheck check_row(const TableRow& row) {
    RowCheck r{row, 9 * row.m * row.m + 4 * row.m, 0, {}};
    try {
        r.h = class_number(QuadField::family(row.m));
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

/// Recomputes D and h for every row; the report keeps corpus order.
inline TableReport verify_tables(const std::vector<TableRow>& rows, unsigned jobs = 1) {
    return TableReport{parallel_map(rows, jobs, check_row)};
}

}  // namespace rqf
