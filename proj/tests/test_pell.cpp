#include "rqf/pell.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace rqf;

namespace {

bool contains(const std::vector<PellSolution>& sols, long x, long y) {
    return std::any_of(sols.begin(), sols.end(), [&](const PellSolution& s) { return s.x == x && s.y == y; });
}

}  // namespace

TEST(Pell, Examples) {
    EXPECT_TRUE(contains(solve_pell(13, 52), 13, 3));
    EXPECT_TRUE(contains(solve_pell(93, 124), 31, 3));
    const auto five = solve_pell(5, 1);
    ASSERT_EQ(five.size(), 1u);
    EXPECT_EQ(five[0], (PellSolution{1, 0, 1, 5}));
    EXPECT_TRUE(solve_pell(3, -1).empty());
    EXPECT_TRUE(contains(solve_pell(2, -1), 1, 1));
}

TEST(Pell, SolutionsAreSortedAndSatisfyTheEquation) {
    for (long d : {2L, 13L, 93L, 469L}) {
        for (long n : {-12L, -4L, 4L, 12L, 52L}) {
            const auto sols = solve_pell(d, n);
            for (const auto& s : sols) EXPECT_TRUE(s.satisfies()) << s;
            EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end(), [](const PellSolution& a, const PellSolution& b) {
                return a.y != b.y ? a.y < b.y : a.x < b.x;
            }));
        }
    }
}

TEST(PellUnit, Examples) {
    EXPECT_EQ(pell_unit(5), (PellUnit{9, 4}));
    EXPECT_EQ(pell_unit(13), (PellUnit{649, 180}));
    EXPECT_EQ(pell_unit(2), (PellUnit{3, 2}));
    EXPECT_EQ(pell_unit(12), (PellUnit{7, 2}));
    EXPECT_THROW(pell_unit(16), hypothesis_error);
}

TEST(PellUnit, BothRoutesAgree) {
    for (long d = 2; d <= 800; ++d) {
        if (!is_squarefree(d)) continue;
        ASSERT_EQ(pell_unit(fundamental_unit(QuadField::from_d(d))), pell_unit(d)) << "D=" << d;
    }
    for (long m = 3; m <= 61; m += 2) {
        const Integer d = 9 * m * m + 4 * m;
        if (!is_squarefree(d)) continue;
        ASSERT_EQ(pell_unit(family_unit(m)), pell_unit(d)) << "m=" << m;
    }
}

// Every solution found by a bounded search is equivalent to one from the window.
TEST(Pell, WindowIsCompleteAgainstBruteForce) {
    for (long d : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 19L, 93L, 205L, 469L}) {
        const PellUnit unit = pell_unit(d);
        for (long n = -40; n <= 40; ++n) {
            if (n == 0) continue;
            const auto window = solve_pell(d, n, unit);
            for (long y = 0; y <= 3000; ++y) {
                const Integer v = Integer(n) + Integer(d) * y * y;
                if (v < 0 || !is_perfect_square(v)) continue;
                const Integer x = isqrt(v);
                for (const Integer& sx : {x, Integer(-x)}) {
                    const PellSolution s{sx, y, n, d};
                    const bool found = std::any_of(window.begin(), window.end(), [&](const PellSolution& w) { return same_class(s, w); });
                    ASSERT_TRUE(found) << "D=" << d << " N=" << n << " solution " << s << " has no window representative";
                }
            }
        }
    }
}

TEST(Pell, SameClass) {
    const PellSolution a{1, 0, 1, 5}, b{9, 4, 1, 5}, c{-9, 4, 1, 5};
    EXPECT_TRUE(same_class(a, b));
    EXPECT_TRUE(same_class(a, c));
    EXPECT_FALSE(same_class(PellSolution{2, 1, -1, 5}, PellSolution{1, 1, -4, 5}));
    // 4 + 5 = 9: (3, 1) and (-3, 1) lie in conjugate classes for N = 4
    EXPECT_FALSE(same_class(PellSolution{3, 1, 4, 5}, PellSolution{-3, 1, 4, 5}));
}

TEST(Pell, Rejections) {
    EXPECT_THROW(solve_pell(9, 4), hypothesis_error);
    EXPECT_THROW(solve_pell(5, 0), hypothesis_error);
    EXPECT_THROW(solve_pell(5, 4, PellUnit{2, 1}), hypothesis_error);
}

TEST(PellFamily, Solution) {
    EXPECT_EQ(family_solution(3), (PellSolution{31, 3, 124, 93}));
    EXPECT_EQ(family_solution(7), (PellSolution{67, 3, 268, 469}));
    EXPECT_TRUE(family_solution(1).integral());
    EXPECT_THROW(family_solution(5), hypothesis_error);   // 49
    EXPECT_THROW(family_solution(-3), hypothesis_error);
    EXPECT_THROW(family_solution(25), hypothesis_error);  // m not square-free
    EXPECT_THROW(family_solution(2), hypothesis_error);
}

TEST(PellFamily, RamifiedPrimeIsPrincipal) {
    const PrincipalWitness w = ramified_prime_is_principal(3);
    EXPECT_TRUE(w.principal);
    EXPECT_EQ(w.generator, QuadInt(31, 3, Integer(93)));
    EXPECT_EQ(w.ideal.norm, 31);
    for (long m = 1; m <= 199; m += 2) {
        if (!is_squarefree(Integer(m)) || !is_prime(Integer(9 * m + 4)) || !is_squarefree(Integer(9 * m * m + 4 * m))) continue;
        EXPECT_TRUE(ramified_prime_is_principal(m).principal) << "m=" << m;
        EXPECT_TRUE(contains(solve_pell(9 * m * m + 4 * m, 4 * (9 * m + 4), pell_unit(family_unit(m))), 9 * m + 4, 3)) << "m=" << m;
    }
}
