// Seeded randomized and exhaustive property checks across modules.

#include "lucas_atlas/census.hpp"
#include "lucas_atlas/lucas_core.hpp"
#include "lucas_atlas/poly.hpp"
#include "lucas_atlas/term_sets.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lucas;

TEST(Property, TermRoutesAgreeOnGrid) {
    const std::vector<std::uint64_t> ns{0, 1, 2, 3, 17, 63, 64, 65, 100, 127, 128, 255, 256, 499, 500};
    for (std::int64_t A = -50; A <= 50; ++A)
        for (std::int64_t B = -50; B <= 50; ++B)
            for (const auto n : ns) ASSERT_EQ(term({A, B}, n), term_via_ring({A, B}, n)) << A << " " << B << " " << n;
}

TEST(Property, TermRoutesAgreeRandom) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> coef(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> idx(0, 500);
    for (int i = 0; i < 2000; ++i) {
        const LucasParams p{coef(rng), coef(rng)};
        const auto n = idx(rng);
        const BigInt expected = oracle::naive_term(p, n);
        ASSERT_EQ(term(p, n), expected);
        ASSERT_EQ(term_via_ring(p, n), expected);
    }
}

TEST(Property, SignSymmetry) {
    for (std::int64_t A = -30; A <= 30; ++A)
        for (std::int64_t B = -30; B <= 30; ++B)
            for (std::uint64_t n : {1u, 2u, 5u, 12u, 77u}) ASSERT_EQ(abs(term({A, B}, n)), abs(term({-A, B}, n)));
}

TEST(Property, NondegenerateTermsNeverVanish) {
    for (std::int64_t A = -25; A <= 25; ++A)
        for (std::int64_t B = -25; B <= 25; ++B) {
            if (!is_nondegenerate({A, B})) continue;
            BigInt u0 = 0, u1 = 1;
            for (int n = 1; n <= 150; ++n) {
                ASSERT_NE(u1, 0) << A << " " << B << " " << n;
                BigInt u2 = A * u1 - B * u0;
                u0 = u1;
                u1 = u2;
            }
        }
}

TEST(Property, DegeneracyMatchesOracleExhaustive) {
    for (std::int64_t A = -200; A <= 200; ++A)
        for (std::int64_t B = -200; B <= 200; ++B) {
            const LucasParams p{A, B};
            if (!is_valid(p)) continue;
            ASSERT_EQ(classify(p).kind == SequenceKind::Degenerate, is_degenerate_oracle(p)) << A << " " << B;
        }
}

TEST(Property, ClassifyKindsAgreeWithDiscriminant) {
    for (std::int64_t A = -40; A <= 40; ++A)
        for (std::int64_t B = -40; B <= 40; ++B) {
            const LucasParams p{A, B};
            const auto c = classify(p);
            EXPECT_EQ(c.discriminant, BigInt(A) * A - 4 * BigInt(B));
            if (c.kind == SequenceKind::RealCase) {
                EXPECT_GT(c.discriminant, 0);
                const Real x = c.dominant_root_abs;
                EXPECT_LT(abs(x * x - abs(Real(A)) * x + B), Real("1e-60"));
            } else if (c.kind == SequenceKind::NonRealCase) {
                EXPECT_LT(c.discriminant, 0);
                EXPECT_LT(abs(c.dominant_root_abs - sqrt(Real(B))), Real("1e-60"));
            }
        }
}

TEST(Property, CensusJobsInvariantRandom) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> num(20, 900);
    std::uniform_int_distribution<std::int64_t> den(1, 9);
    for (int i = 0; i < 30; ++i) {
        const auto t = Rational::make(num(rng), den(rng));
        if (t < Rational::make(2, 1)) continue;
        const auto one = census::census(t, 1);
        EXPECT_EQ(census::census(t, 4).exact_count, one.exact_count);
        EXPECT_TRUE(one.sandwich_holds());
    }
}

TEST(Property, TermSetJobsInvariantRandom) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> bound(1, 4000);
    std::uniform_int_distribution<unsigned> index(5, 10);
    for (int i = 0; i < 12; ++i) {
        const auto n = index(rng);
        const auto N = bound(rng);
        const auto a = term_sets::ln_set(n, N, {true, false, 1});
        const auto b = term_sets::ln_set(n, N, {true, false, 3});
        EXPECT_EQ(*a.members, *b.members) << n << " " << N;
    }
}

TEST(Property, TermSetMembersAreSubsetsAcrossN) {
    const auto small = term_sets::ln_set(6, 700, {true, false, 1});
    const auto large = term_sets::ln_set(6, 7000, {true, false, 1});
    EXPECT_TRUE(std::includes(large.members->begin(), large.members->end(), small.members->begin(), small.members->end()));
    for (const auto v : *large.members) {
        if (v <= 700) {
            EXPECT_TRUE(std::binary_search(small.members->begin(), small.members->end(), v)) << v;
        }
    }
}

TEST(Property, EvaluationMatchesTermRandom) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coef(-100, 100);
    std::uniform_int_distribution<unsigned> idx(1, 60);
    for (int i = 0; i < 3000; ++i) {
        const LucasParams p{coef(rng), coef(rng)};
        const unsigned n = idx(rng);
        ASSERT_EQ(poly::fib_poly(n).evaluate(p.A, p.B), oracle::naive_term(p, n));
    }
}
