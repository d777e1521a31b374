#include "misbound/bound.hpp"
#include "misbound/error.hpp"

#include "support/naive_oracle.hpp"

#include <gtest/gtest.h>

using namespace misbound;

TEST(MoonMoserBound, ResidueCaseExamples)
{
    EXPECT_EQ(moon_moser_bound(6), 9U);
    EXPECT_EQ(moon_moser_bound(7), 12U);
    EXPECT_EQ(moon_moser_bound(8), 18U);
    EXPECT_EQ(moon_moser_bound(1), 1U);
}

TEST(MoonMoserBound, FirstValues)
{
    const std::uint64_t expected[] = {1, 1, 2, 3, 4, 6, 9, 12, 18, 27, 36};
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(moon_moser_bound(n), expected[n]) << "n = " << n;
}

TEST(MoonMoserBound, GuardBoundary)
{
    EXPECT_EQ(moon_moser_bound(120), 12157665459056928801ULL); // 3^40
    EXPECT_EQ(moon_moser_bound(119), 2 * 4052555153018976267ULL); // 2 * 3^39
    EXPECT_THROW(moon_moser_bound(121), CapacityError);
    EXPECT_THROW(moon_moser_bound(-1), DomainError);
}

TEST(MoonMoserBound, MatchesExactlyOneCaseExpression)
{
    for (int n = 2; n <= kBoundGuard; ++n) {
        std::uint64_t p = 1;
        const int r = n % 3;
        const int e = r == 0 ? n / 3 : (r == 1 ? (n - 4) / 3 : (n - 2) / 3);
        for (int i = 0; i < e; ++i) p *= 3;
        const std::uint64_t expected = r == 0 ? p : (r == 1 ? 4 * p : 2 * p);
        EXPECT_EQ(moon_moser_bound(n), expected) << "n = " << n;
    }
}

TEST(MoonMoserBound, TripleStepRecurrence)
{
    for (int n = 5; n <= kBoundGuard; ++n) EXPECT_EQ(moon_moser_bound(n), 3 * moon_moser_bound(n - 3)) << n;
}

TEST(SandwichCheck, Examples)
{
    EXPECT_TRUE(sandwich_check(4));
    EXPECT_TRUE(sandwich_check(6));
    EXPECT_TRUE(sandwich_check(7));
    EXPECT_THROW(sandwich_check(3), DomainError);
}

TEST(SandwichCheck, WholeRange)
{
    for (int n = 4; n <= kBoundGuard; ++n) EXPECT_TRUE(sandwich_check(n)) << "n = " << n;
}

TEST(Nondecreasing, Examples)
{
    EXPECT_TRUE(g_is_nondecreasing(2));
    EXPECT_TRUE(g_is_nondecreasing(10));
    EXPECT_TRUE(g_is_nondecreasing(kBoundGuard));
    EXPECT_THROW(g_is_nondecreasing(kBoundGuard + 1), CapacityError);
}

TEST(BranchBound, Examples)
{
    EXPECT_EQ(branch_bound(6, 2), 9U);
    EXPECT_EQ(branch_bound(6, 2), moon_moser_bound(6));
    EXPECT_EQ(branch_bound(7, 3), 12U);
    EXPECT_EQ(branch_bound(5, 4), 5U);
    EXPECT_THROW(branch_bound(5, 5), DomainError);
    EXPECT_THROW(branch_bound(5, -1), DomainError);
}

TEST(BranchBound, NeverExceedsBound)
{
    for (int n = 1; n <= kBoundGuard; ++n)
        for (int d = 0; d < n; ++d) EXPECT_LE(branch_bound(n, d), moon_moser_bound(n)) << n << ' ' << d;
}

TEST(MaxProductPartition, Examples)
{
    EXPECT_EQ(max_product_partition(4), 4U);
    EXPECT_EQ(max_product_partition(5), 6U);
    EXPECT_EQ(max_product_partition(1), 1U);
    EXPECT_THROW(max_product_partition(0), DomainError);
    EXPECT_THROW(max_product_partition(121), CapacityError);
}

TEST(MaxProductPartition, AgreesWithPartitionEnumeration)
{
    for (int n = 1; n <= 40; ++n) EXPECT_EQ(max_product_partition(n), oracle::naive_max_product(n)) << n;
}

TEST(MaxProductPartition, EqualsBoundOnWholeRange)
{
    for (int n = 2; n <= kBoundGuard; ++n) EXPECT_EQ(max_product_partition(n), moon_moser_bound(n)) << n;
}

TEST(ProofCases, HighDegree)
{
    for (int n = 4; n <= kBoundGuard; ++n)
        for (int d = 3; d < n; ++d) {
            const auto cmp = high_degree_case(n, d);
            // d = 3 is the same expression on both sides
            if (d == 3)
                EXPECT_TRUE(cmp == 0) << n;
            else
                EXPECT_TRUE(cmp < 0) << n << ' ' << d;
        }
    EXPECT_THROW(high_degree_case(6, 2), DomainError);
    EXPECT_THROW(high_degree_case(6, 6), DomainError);
}

TEST(ProofCases, DegreeTwo)
{
    for (int n = 3; n <= kBoundGuard; ++n) {
        if (n == 4)
            EXPECT_TRUE(degree_two_case(n) < 0);
        else
            EXPECT_TRUE(degree_two_case(n) == 0) << n;
    }
    EXPECT_THROW(degree_two_case(2), DomainError);
}

TEST(ProofCases, DegreeOne)
{
    for (int n = 2; n <= kBoundGuard; ++n) {
        if (n % 3 == 0)
            EXPECT_TRUE(degree_one_case(n) < 0) << n;
        else
            EXPECT_TRUE(degree_one_case(n) == 0) << n;
    }
    EXPECT_THROW(degree_one_case(1), DomainError);
}
