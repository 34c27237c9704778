#include <gtest/gtest.h>

#include "dihedral/claims.hpp"
#include "dihedral/io.hpp"
#include "dihedral/stability.hpp"

using namespace dihedral;

// =============================================================================
// lambda_1
// =============================================================================

TEST(Lambda, WorkedExampleN5) {
    auto rep = lambda1(5, GeneratingSet(5, 1, 4));
    EXPECT_EQ(rep.lambda1, 3);
    EXPECT_EQ(rep.bound_n_half, 3); // bound is tight here
    EXPECT_EQ(rep.max_reflection_length, 3);
    EXPECT_FALSE(rep.prime_condition_met); // seven values cannot be distinct mod 5
    EXPECT_FALSE(rep.bound_prime_third.has_value());
}

TEST(Lambda, WitnessIsValidAndFirstInOrder) {
    for (auto [n, a, b] : {std::tuple{5, 1, 4}, {12, 1, 5}, {17, 3, 7}, {20, 3, 14}}) {
        GeneratingSet S(n, a, b);
        auto rep = lambda1(n, S);
        auto t = bfs_lengths(n, S);
        EXPECT_EQ(t.length_of(conjugate(rep.witness.g, rep.witness.s)), rep.lambda1);
        // nothing earlier in (g-index, s-index) order reaches lambda1
        bool earlier = false;
        for (int gi = 0; gi < 2 * n && !earlier; ++gi) {
            DihedralElement g = gi < n ? rotation(n, gi) : reflection(n, gi - n);
            for (const auto& s : S.reflections()) {
                if (g == rep.witness.g && s == rep.witness.s) {
                    earlier = true; // reached the witness itself
                    break;
                }
                EXPECT_LT(t.length_of(conjugate(g, s)), rep.lambda1);
            }
        }
    }
}

TEST(Lambda, EnginesAgree) {
    auto a = lambda1(14, GeneratingSet(14, 3, 8), Engine::sumset);
    auto b = lambda1(14, GeneratingSet(14, 3, 8), Engine::bfs);
    EXPECT_EQ(a.lambda1, b.lambda1);
    EXPECT_EQ(a.witness.g, b.witness.g);
    EXPECT_EQ(a.witness.s, b.witness.s);
}

TEST(Lambda, EqualsMaxReflectionLengthEverywhere) {
    // the three generator conjugacy classes jointly cover all reflections
    for (int n = 3; n <= 60; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (gcd3(a, b, n) != 1) continue;
                auto rep = lambda1(n, GeneratingSet(n, a, b));
                EXPECT_EQ(rep.lambda1, rep.max_reflection_length)
                    << "n=" << n << " a=" << a << " b=" << b;
            }
}

TEST(Lambda, HalfBoundHoldsSmallRange) {
    for (int n = 3; n <= 40; ++n)
        for (int a = 1; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (gcd3(a, b, n) != 1) continue;
                auto rep = lambda1(n, GeneratingSet(n, a, b));
                EXPECT_LE(rep.lambda1, n / 2 + 1);
            }
}

TEST(Lambda, RejectsNonGenerating) {
    EXPECT_THROW(lambda1(6, GeneratingSet(6, 2, 4)), std::domain_error);
}

TEST(Lambda, PrimeThirdBoundHoldsForPrimesOneModSix) {
    // when ceil(p/3) is odd the floor(p/3)+1 bound is forced
    for (int p : {7, 13, 19, 31, 37, 43})
        for (int a = 1; a < p; ++a)
            for (int b = a + 1; b < p; ++b) {
                GeneratingSet S(p, a, b);
                if (!prime_condition(p, S)) continue;
                auto rep = lambda1(p, S);
                ASSERT_TRUE(rep.bound_prime_third.has_value());
                EXPECT_LE(rep.lambda1, *rep.bound_prime_third);
            }
}

TEST(Lambda, PrimeThirdBoundFailsAtEleven) {
    // first odd level guaranteed full is floor(p/3)+2 when p = 5 mod 6, and
    // S' = {0,1,3} at p = 11 really needs it: r^7 f has length 5
    GeneratingSet S(11, 1, 3);
    ASSERT_TRUE(prime_condition(11, S));
    auto rep = lambda1(11, S);
    EXPECT_EQ(rep.lambda1, 5);
    EXPECT_EQ(*rep.bound_prime_third, 4);
    EXPECT_GT(rep.lambda1, *rep.bound_prime_third);

    auto claim = verify_prime_lambda_bound(11, 2);
    EXPECT_FALSE(claim.pass);
    EXPECT_GT(claim.witnesses_total, 0);
}

// =============================================================================
// prime condition
// =============================================================================

TEST(PrimeCondition, KnownCases) {
    EXPECT_TRUE(prime_condition(7, GeneratingSet(7, 1, 3)));  // {0,1,3,6,4,5,2}
    EXPECT_FALSE(prime_condition(5, GeneratingSet(5, 1, 2))); // -a = a-b mod 5
    EXPECT_FALSE(prime_condition(6, GeneratingSet(6, 1, 3))); // 6 not prime
}

// =============================================================================
// sharpness
// =============================================================================

TEST(Sharpness, WorkedCases) {
    EXPECT_EQ(check_sharpness(5).predicted, 3);
    EXPECT_TRUE(check_sharpness(5).match);
    EXPECT_EQ(check_sharpness(6).measured, 3); // floor(6/2), n = 2 mod 4
    EXPECT_TRUE(check_sharpness(6).match);
    EXPECT_EQ(check_sharpness(8).measured, 5); // floor(8/2)+1, n = 0 mod 4
    EXPECT_TRUE(check_sharpness(8).match);
}

TEST(Sharpness, MaxReflectionLengthFromTable) {
    EXPECT_EQ(max_reflection_length(sumset_lengths(6, GeneratingSet(6, 1, 5))), 3);
    EXPECT_EQ(max_reflection_length(sumset_lengths(8, GeneratingSet(8, 1, 7))), 5);
}

TEST(Sharpness, FormulaMatchesUpTo60) {
    for (int n = 3; n <= 60; ++n) EXPECT_TRUE(check_sharpness(n).match) << "n=" << n;
}

TEST(Sharpness, RejectsTinyModulus) {
    EXPECT_THROW(check_sharpness(2), std::invalid_argument);
}

// =============================================================================
// sqrt presentation
// =============================================================================

TEST(Sqrt, PresentationOffsets) {
    EXPECT_EQ(sqrt_presentation(10), GeneratingSet(10, 1, 3));
    EXPECT_EQ(sqrt_presentation(100), GeneratingSet(100, 1, 10));
    EXPECT_EQ(sqrt_presentation(99), GeneratingSet(99, 1, 9));
    EXPECT_THROW(sqrt_presentation(4), std::invalid_argument);
}

TEST(Sqrt, BoundValues) {
    auto r25 = check_sqrt_bound(25);
    EXPECT_EQ(r25.bound, 19); // 2*5 + 2*4 + 1
    EXPECT_TRUE(r25.holds);
    auto r100 = check_sqrt_bound(100);
    EXPECT_EQ(r100.bound, 39); // 2*10 + 2*9 + 1
    EXPECT_TRUE(r100.holds);
}

TEST(Sqrt, HoldsOnSampledRangeBothEngines) {
    for (int n = 5; n <= 120; ++n) {
        EXPECT_TRUE(check_sqrt_bound(n, Engine::sumset).holds);
        EXPECT_TRUE(check_sqrt_bound(n, Engine::bfs).holds);
    }
}

TEST(Isqrt, Exactness) {
    EXPECT_EQ(isqrt(1), 1);
    EXPECT_EQ(isqrt(3), 1);
    EXPECT_EQ(isqrt(4), 2);
    EXPECT_EQ(isqrt(99), 9);
    EXPECT_EQ(isqrt(100), 10);
    EXPECT_EQ(isqrt(101), 10);
}

// =============================================================================
// report serialization
// =============================================================================

TEST(LambdaIo, JsonAndCsv) {
    auto rep = lambda1(5, GeneratingSet(5, 1, 4));
    auto j = to_json(rep);
    EXPECT_EQ(j["lambda1"], 3);
    EXPECT_EQ(j["canonical"]["a"], 1);
    EXPECT_EQ(j["canonical"]["b"], 2);
    EXPECT_EQ(j["negation_canonical"]["a"], 1); // {0,-1,-4} re-bases to the same orbit here
    EXPECT_FALSE(j.contains("bound_prime_third"));
    EXPECT_EQ(to_csv_row(rep), "5,1,4,3,3,3,true\n");
}
