#include <gtest/gtest.h>

#include "ncstrip/counting.hpp"
#include "ncstrip/partition.hpp"
#include "oracles.hpp"

using namespace ncstrip;

TEST(Partition, WeightAndLength) {
    EXPECT_EQ(weight(IntPartition{}), 0);
    EXPECT_EQ(weight(IntPartition{2, 1, 1}), 4);
    EXPECT_EQ(weight(IntPartition{2, 2, 1}), 5);
    EXPECT_EQ(length(IntPartition{}), 0);
    EXPECT_EQ(length(IntPartition{2, 1, 1}), 3);
    EXPECT_EQ(length(IntPartition{1, 1}), 2);
}

TEST(Partition, RejectsBadParts) {
    EXPECT_THROW(IntPartition({1, 2}), DomainError);
    EXPECT_THROW(IntPartition({2, 0}), DomainError);
    EXPECT_EQ(IntPartition::from_multiset({1, 0, 3, 1}), (IntPartition{3, 1, 1}));
}

TEST(Partition, MultiplicityProduct) {
    EXPECT_EQ(multiplicity_product(IntPartition{}), 1);
    EXPECT_EQ(multiplicity_product(IntPartition{1, 1}), 2);
    EXPECT_EQ(multiplicity_product(IntPartition{2, 2, 1, 1}), 4);
    for (int w = 0; w <= 8; ++w) {
        for (const auto& p : partitions_of(w)) EXPECT_EQ(multiplicity_product(p), oracle::multiplicity_product(p.parts()));
    }
}

TEST(Partition, WeightAtMostSmallCases) {
    EXPECT_EQ(partitions_with_weight_at_most(0), std::vector<IntPartition>{IntPartition{}});
    const std::vector<IntPartition> two{IntPartition{}, IntPartition{1}, IntPartition{2}, IntPartition{1, 1}};
    EXPECT_EQ(partitions_with_weight_at_most(2), two);
    EXPECT_EQ(partitions_with_weight_at_most(3).size(), 7u);
}

TEST(Partition, WeightAtMostMatchesFilterAndIsCanonical) {
    for (int n = 0; n <= 10; ++n) {
        std::set<std::vector<int>> expected;
        for (int m = 0; m <= n; ++m) {
            for (auto& p : oracle::partitions_by_filter(m)) expected.insert(p);
        }
        const auto got = partitions_with_weight_at_most(n);
        std::set<std::vector<int>> seen;
        for (const auto& p : got) seen.insert(p.parts());
        EXPECT_EQ(seen.size(), got.size()) << "duplicates at n=" << n;
        EXPECT_EQ(seen, expected) << "n=" << n;
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), CanonicalOrder{}));
    }
}

TEST(Partition, ParseAndPrint) {
    EXPECT_EQ(parse_partition("2,1"), (IntPartition{2, 1}));
    EXPECT_EQ(parse_partition("(1,2)"), (IntPartition{2, 1}));
    EXPECT_EQ(parse_partition(""), IntPartition{});
    EXPECT_EQ(parse_partition("()"), IntPartition{});
    EXPECT_EQ((IntPartition{2, 1}).to_string(), "(2,1)");
    EXPECT_EQ(IntPartition{}.to_string(), "()");
    EXPECT_THROW(parse_partition("2,x"), ParseError);
    EXPECT_THROW(parse_partition("2,0"), ParseError);
}

TEST(Counting, SmallValues) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(24, 6), 134596);
    EXPECT_EQ(catalan(3), 5);
    EXPECT_EQ(fuss_catalan(2, 2), 3);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(fuss_catalan(0, k), 1);
    EXPECT_THROW(binomial(3, 4), DomainError);
    EXPECT_THROW(binomial(-1, 0), DomainError);
    EXPECT_THROW(binomial(3, -1), DomainError);
}

TEST(Counting, BinomialMatchesPascal) {
    const auto t = oracle::pascal(40);
    for (int n = 0; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), t[n][k]) << n << " choose " << k;
    }
}

TEST(Counting, FussCatalanIsExactAndExtendsCatalan) {
    const auto t = oracle::pascal(70);
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(catalan(n), fuss_catalan(n, 1));
        for (int k = 1; k <= 4; ++k) {
            const BigNat& c = t[(k + 1) * n][n];
            EXPECT_EQ(c % (k * n + 1), 0);
            EXPECT_EQ(fuss_catalan(n, k), c / (k * n + 1));
        }
    }
}

TEST(Counting, LargeFactorialsAreExact) {
    EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
    EXPECT_EQ(exact_div(factorial(30), factorial(28)), 870);
    EXPECT_THROW(exact_div(7, 2), std::logic_error);
}
