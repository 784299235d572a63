#include "rqf/quad_field.hpp"

#include <gtest/gtest.h>

using namespace rqf;

TEST(FamilyField, Discriminants) {
    EXPECT_EQ(make_family_field(3).d(), 93);
    EXPECT_EQ(make_family_field(1).d(), 13);
    EXPECT_EQ(make_family_field(-5).d(), 205);
    EXPECT_EQ(make_family_field(-5).discriminant(), 205);
    EXPECT_EQ(*make_family_field(7).m(), 7);
}

TEST(FamilyField, Rejections) {
    EXPECT_THROW(make_family_field(2), hypothesis_error);
    try {
        make_family_field(9);
        FAIL() << "765 = 9 * 85 is not square-free";
    } catch (const not_squarefree_error& e) {
        EXPECT_EQ(e.prime(), 3);
    }
}

TEST(GeneralField, DiscriminantCases) {
    EXPECT_EQ(QuadField::from_d(5).discriminant(), 5);
    EXPECT_EQ(QuadField::from_d(6).discriminant(), 24);
    EXPECT_EQ(QuadField::from_d(7).discriminant(), 28);
    EXPECT_THROW(QuadField::from_d(12), not_squarefree_error);
    EXPECT_THROW(QuadField::from_d(1), hypothesis_error);
    EXPECT_FALSE(QuadField::from_d(5).is_family());
}

TEST(QuadInt, NormTraceConjugate) {
    const QuadField k = make_family_field(3);
    EXPECT_EQ(QuadInt(29, 3, k).norm(), 1);
    const QuadField k13 = make_family_field(1);
    EXPECT_EQ(conj(QuadInt(1, 1, k13)), QuadInt(1, -1, k13));
    EXPECT_EQ(norm(QuadInt(13, 3, k13)), 13);
    EXPECT_EQ(trace(QuadInt(13, 3, k13)), 13);
}

TEST(QuadInt, Integrality) {
    EXPECT_THROW(QuadInt(1, 2, Integer(13)), hypothesis_error);
    EXPECT_THROW(QuadInt(1, 1, Integer(7)), hypothesis_error);
    EXPECT_NO_THROW(QuadInt(2, 4, Integer(7)));
}

TEST(QuadInt, MixedFieldsRejected) {
    const QuadInt a(1, 1, Integer(13)), b(1, 1, Integer(93));
    EXPECT_THROW(a * b, hypothesis_error);
    EXPECT_THROW(a + b, hypothesis_error);
}

TEST(QuadInt, RingLawsOnSamples) {
    for (long d : {5L, 13L, 93L, 6L, 7L}) {
        const bool one_mod_4 = d % 4 == 1;
        for (long x = -6; x <= 6; ++x) {
            for (long y = -4; y <= 4; ++y) {
                if (one_mod_4 ? (x - y) % 2 != 0 : (x % 2 != 0 || y % 2 != 0)) continue;
                const QuadInt a(x, y, Integer(d));
                const QuadInt b(one_mod_4 ? 3 : 4, one_mod_4 ? 1 : 2, Integer(d));
                const QuadInt p = a * b;
                ASSERT_EQ(p.norm(), a.norm() * b.norm());
                ASSERT_EQ(conj(p), conj(a) * conj(b));
                ASSERT_EQ(a * conj(a), QuadInt::rational(a.norm(), QuadField::from_d(d)));
            }
        }
    }
}

TEST(PrimeSplitting, PrimeThreeOnFamily) {
    const auto ram = prime_splitting(make_family_field(3), 3);
    EXPECT_EQ(ram.kind, Splitting::ramified);
    ASSERT_TRUE(ram.ideal);
    EXPECT_EQ(ram.ideal->r1, QuadInt(3, 1, Integer(93)));
    EXPECT_EQ(ram.ideal->r2, QuadInt(6, 0, Integer(93)));

    const auto split = prime_splitting(make_family_field(7), 3);
    EXPECT_EQ(split.kind, Splitting::split);
    ASSERT_TRUE(split.ideal);
    EXPECT_EQ(split.ideal->r1, QuadInt(1, 1, Integer(469)));
    EXPECT_EQ(split.ideal->norm, 3);

    const auto inert = prime_splitting(make_family_field(11), 3);
    EXPECT_EQ(inert.kind, Splitting::inert);
    EXPECT_FALSE(inert.ideal);

    EXPECT_THROW(prime_splitting(make_family_field(3), 9), hypothesis_error);
}

TEST(PrimeSplitting, DivisorsOfMAndOfQ) {
    // m = 35: primes 5 and 7 divide m, 319 = 11 * 29 = 9m + 4
    const QuadField k = make_family_field(35);
    for (long p : {5L, 7L, 11L, 29L}) {
        const auto dec = prime_splitting(k, p);
        ASSERT_EQ(dec.kind, Splitting::ramified) << p;
        EXPECT_EQ(dec.ideal->r1, QuadInt(p, 1, k));
        EXPECT_EQ(dec.ideal->delta, QuadInt(0, 2 * p, k));  // p sqrt D
    }
}

TEST(PrimeSplitting, NormsAndDeltaOverManyPrimes) {
    for (long m : {-17L, -5L, 1L, 3L, 7L, 15L, 35L, 105L}) {
        const QuadField k = make_family_field(m);
        for (long p = 2; p < 60; ++p) {
            if (!is_prime(p)) continue;
            const auto dec = prime_splitting(k, p);
            ASSERT_EQ(dec.kind == Splitting::inert, kronecker(k.discriminant(), p) == -1);
            if (!dec.ideal) continue;
            const IdealBasis& a = *dec.ideal;
            EXPECT_EQ(a.norm, p);
            EXPECT_EQ(a.conjugate().norm, p);
            EXPECT_EQ(a.norm * a.conjugate().norm, p * p);
            EXPECT_EQ(a.delta.x(), 0);
            EXPECT_EQ(a.delta.y(), 2 * p);  // delta = p sqrt D
            EXPECT_TRUE(divides(p, a.r1.norm()));
            if (dec.kind == Splitting::ramified) {
                EXPECT_TRUE(a.contains(a.conjugate().r1));
            }
        }
    }
}

TEST(PrimeSplitting, NonFamilyDiscriminants) {
    const QuadField k = QuadField::from_d(10);  // disc 40
    const auto two = prime_splitting(k, 2);
    EXPECT_EQ(two.kind, Splitting::ramified);
    EXPECT_EQ(two.ideal->norm, 2);
    const auto three = prime_splitting(k, 3);
    EXPECT_EQ(three.kind, Splitting::split);
    EXPECT_EQ(three.ideal->norm, 3);
    EXPECT_EQ(prime_splitting(QuadField::from_d(13), 2).kind, Splitting::inert);
    EXPECT_EQ(prime_splitting(QuadField::from_d(17), 2).kind, Splitting::split);
}

TEST(Delta, BasisOrientation) {
    const QuadField k = make_family_field(15);
    const IdealBasis u = IdealBasis::from_generators(QuadInt(3, 1, k), QuadInt::rational(3, k));
    EXPECT_EQ(u.delta, QuadInt(0, 6, k));  // 3 sqrt D
    const IdealBasis p = IdealBasis::from_generators(QuadInt(5, 1, k), QuadInt::rational(5, k));
    EXPECT_EQ(p.delta, QuadInt(0, 10, k));  // 5 sqrt D
    const IdealBasis o = unit_ideal_basis(k);
    EXPECT_EQ(o.delta, QuadInt(0, 2, k));  // sqrt D
    EXPECT_EQ(o.norm, 1);
    // reversing the order flips the sign
    EXPECT_EQ(delta(QuadInt::rational(3, k), QuadInt(3, 1, k)), QuadInt(0, -6, k));
}

TEST(IdealBasis, RejectsNonIdeals) {
    const QuadField k = make_family_field(3);
    // {(1 + sqrt 93)/2, 2}: 2 is inert in Q(sqrt 93), so this is not an ideal
    EXPECT_THROW(IdealBasis::from_generators(QuadInt(1, 1, k), QuadInt::rational(2, k)), hypothesis_error);
}
