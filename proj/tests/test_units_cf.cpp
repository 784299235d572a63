#include "rqf/units_cf.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <optional>

using namespace rqf;

namespace {

CFExpansion cf_of(std::initializer_list<long> initial, std::initializer_list<long> period) {
    CFExpansion cf;
    for (long v : initial) cf.initial.emplace_back(v);
    for (long v : period) cf.period.emplace_back(v);
    return cf;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r == v) return r;
    return std::nullopt;
}

// Smallest u (<= cap) with t^2 - D u^2 = +-4 for some t >= 1 of matching parity.
std::optional<std::pair<std::uint64_t, std::uint64_t>> brute_unit(std::uint64_t d, std::uint64_t cap) {
    const bool one_mod_4 = d % 4 == 1;
    for (std::uint64_t u = one_mod_4 ? 1 : 2; u <= cap; u += one_mod_4 ? 1 : 2) {
        const std::uint64_t du2 = d * u * u;
        if (auto t = exact_sqrt(du2 - 4); t && *t > 0 && (one_mod_4 || *t % 2 == 0)) return std::pair{*t, u};
        if (auto t = exact_sqrt(du2 + 4); t && (one_mod_4 || *t % 2 == 0)) return std::pair{*t, u};
    }
    return std::nullopt;
}

}  // namespace

TEST(ContinuedFraction, ClassicalExpansions) {
    EXPECT_EQ(cf_expand(0, 1, 1, 5), cf_of({2}, {4}));
    EXPECT_EQ(cf_expand(1, 1, 2, 13), cf_of({2}, {3}));
    EXPECT_EQ(cf_expand(0, 1, 1, 2), cf_of({1}, {2}));
    EXPECT_EQ(cf_expand(0, 1, 1, 7), cf_of({2}, {1, 1, 1, 4}));
    // golden ratio: purely periodic
    EXPECT_EQ(cf_expand(1, 1, 2, 5), cf_of({}, {1}));
}

TEST(ContinuedFraction, SqrtNinetyThreeReconstructsItsConvergentUnit) {
    const CFExpansion cf = cf_expand(0, 1, 1, 93);
    ASSERT_EQ(cf.initial.size(), 1u);
    EXPECT_EQ(cf.initial[0], 9);
    EXPECT_EQ(cf.period.back(), 18);
    // convergent at the end of the period solves p^2 - 93 q^2 = +-1
    Integer p0 = 1, p1 = cf.initial[0], q0 = 0, q1 = 1;
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        Integer p2 = cf.period[i] * p1 + p0, q2 = cf.period[i] * q1 + q0;
        p0 = p1; p1 = p2; q0 = q1; q1 = q2;
    }
    const Integer n = p1 * p1 - 93 * q1 * q1;
    EXPECT_TRUE(n == 1 || n == -1);
}

TEST(ContinuedFraction, NegativeAndScaledSurds) {
    EXPECT_EQ(cf_expand(0, -1, 1, 2), cf_of({-2, 1, 1}, {2}));
    // (3 + 2 sqrt 5)/-7 = (-3 - 2 sqrt 5)/7
    EXPECT_EQ(cf_expand(3, 2, -7, 5), cf_expand(-3, -2, 7, 5));
    const CFExpansion cf = cf_expand(3, 2, -7, 5);
    EXPECT_EQ(cf.initial.front(), -2);
}

TEST(ContinuedFraction, Rejections) {
    EXPECT_THROW(cf_expand(1, 1, 2, 9), hypothesis_error);
    EXPECT_THROW(cf_expand(1, 1, 0, 5), hypothesis_error);
    EXPECT_THROW(cf_expand(1, 0, 2, 5), hypothesis_error);
}

TEST(FundamentalUnit, Examples) {
    EXPECT_EQ(fundamental_unit(QuadField::from_d(5)), (FundamentalUnit{1, 1, -1, 5}));
    EXPECT_EQ(fundamental_unit(QuadField::from_d(13)), (FundamentalUnit{3, 1, -1, 13}));
    EXPECT_EQ(fundamental_unit(make_family_field(3)), (FundamentalUnit{29, 3, 1, 93}));
    // Z[sqrt D] cases are reported as (t + u sqrt D)/2 with even t, u
    EXPECT_EQ(fundamental_unit(QuadField::from_d(2)), (FundamentalUnit{2, 2, -1, 2}));
    EXPECT_EQ(fundamental_unit(QuadField::from_d(3)), (FundamentalUnit{4, 2, 1, 3}));
    EXPECT_EQ(fundamental_unit(QuadField::from_d(94)), (FundamentalUnit{Integer(2 * 2143295), Integer(2 * 221064), 1, 94}));
}

TEST(FundamentalUnit, SquareOfThirteenUnitIsTheFamilyUnit) {
    const QuadInt eps = fundamental_unit(QuadField::from_d(13)).element();
    EXPECT_EQ(eps * eps, QuadInt(11, 3, Integer(13)));
}

// Minimality by exhaustive search over u. Units with u above the cap are
// only checked for the absence of any smaller unit.
TEST(FundamentalUnit, MinimalByBruteForceUpTo2000) {
    constexpr std::uint64_t cap = 20000;
    int fully_checked = 0;
    for (std::uint64_t d = 2; d <= 2000; ++d) {
        if (!is_squarefree(Integer(static_cast<unsigned long>(d)))) continue;
        const FundamentalUnit e = fundamental_unit(QuadField::from_d(Integer(static_cast<unsigned long>(d))));
        ASSERT_EQ(e.t * e.t - Integer(static_cast<unsigned long>(d)) * e.u * e.u, 4 * e.norm);
        ASSERT_TRUE(e.t >= 1 && e.u >= 1);
        const auto brute = brute_unit(d, cap);
        if (e.u <= static_cast<unsigned long>(cap)) {
            ASSERT_TRUE(brute) << "D=" << d;
            ASSERT_EQ(e.u, static_cast<unsigned long>(brute->second)) << "D=" << d;
            ASSERT_EQ(e.t, static_cast<unsigned long>(brute->first)) << "D=" << d;
            ++fully_checked;
        } else {
            ASSERT_FALSE(brute) << "D=" << d << " has a unit with u=" << brute->second << " < " << e.u;
        }
    }
    EXPECT_GT(fully_checked, 600);
}

TEST(FundamentalUnit, ConjugateLiesInUnitInterval) {
    for (long d : {5L, 13L, 93L, 469L, 205L, 3L, 6L}) {
        const FundamentalUnit e = fundamental_unit(QuadField::from_d(d));
        // eps > 1 and 0 < eps' < 1 for norm +1: t > u sqrt D > t - 2, i.e. t^2 > D u^2 and (t-2)^2 < D u^2
        if (e.norm == 1) {
            EXPECT_GT(e.t * e.t, d * e.u * e.u);
            EXPECT_LT((e.t - 2) * (e.t - 2), d * e.u * e.u);
        }
    }
}

TEST(FamilyUnit, Examples) {
    const FundamentalUnit u3 = family_unit(3);
    EXPECT_EQ(u3, (FundamentalUnit{29, 3, 1, 93}));
    EXPECT_TRUE(u3.fundamental);
    EXPECT_EQ(family_unit(-5), (FundamentalUnit{43, 3, 1, 205}));
    EXPECT_EQ(family_unit(7), (FundamentalUnit{65, 3, 1, 469}));
    EXPECT_THROW(family_unit(4), hypothesis_error);
    EXPECT_THROW(family_unit(9), not_squarefree_error);
}

TEST(FamilyUnit, MEqualsOneIsNotFundamental) {
    const FundamentalUnit u1 = family_unit(1);
    EXPECT_EQ(u1, (FundamentalUnit{11, 3, 1, 13}));
    EXPECT_FALSE(u1.fundamental);
    const FundamentalUnit um1 = family_unit(-1);
    EXPECT_EQ(um1, (FundamentalUnit{7, 3, 1, 5}));  // (7 + 3 sqrt 5)/2 = ((1 + sqrt 5)/2)^4
    EXPECT_FALSE(um1.fundamental);
}

TEST(FamilyUnit, AgreesWithContinuedFractionForSmallM) {
    for (long m = -61; m <= 61; m += 2) {
        if (m == 1 || m == -1) continue;
        const Integer d = 9 * m * m + 4 * m;
        if (!is_squarefree(d)) continue;
        EXPECT_TRUE(family_unit(m).fundamental) << "m=" << m;
    }
}

TEST(RichaudDegert, Examples) {
    EXPECT_TRUE(is_rd_type(5));
    EXPECT_FALSE(is_rd_type(93));
    EXPECT_FALSE(is_rd_type(13));
    EXPECT_TRUE(is_rd_type(6));    // 2^2 + 2, 2 | 8
    EXPECT_TRUE(is_rd_type(23));   // 5^2 - 2, -2 | 20
    EXPECT_THROW(is_rd_type(12), not_squarefree_error);
}

TEST(RichaudDegert, FamilyIsNeverRDType) {
    for (long m = -159; m <= 159; m += 2) {
        if (m == 1 || m == -1) continue;
        const Integer d = 9 * m * m + 4 * m;
        if (!is_squarefree(d)) continue;
        EXPECT_FALSE(is_rd_type(d)) << "m=" << m;
    }
}
