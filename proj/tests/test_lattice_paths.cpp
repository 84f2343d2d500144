#include <gtest/gtest.h>

#include "ncstrip/lattice_path.hpp"
#include "oracles.hpp"

using namespace ncstrip;

TEST(LatticePath, ParseAndPrint) {
    EXPECT_EQ(LatticePath::parse("ENEN").to_string(), "ENEN");
    EXPECT_EQ(LatticePath::parse("").size(), 0u);
    EXPECT_THROW(LatticePath::parse("ENX"), ParseError);
    EXPECT_EQ(LatticePath::parse("EENEN").east_count(), 3);
    EXPECT_EQ(LatticePath::parse("EENEN").north_count(), 2);
    EXPECT_EQ((repeat(Step::E, 2) + LatticePath::parse("N")).to_string(), "EEN");
}

TEST(LatticePath, Ascents) {
    const auto a = ascents(LatticePath::parse("EENNEN"));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], (Ascent{0, 0, 2}));
    EXPECT_EQ(a[1], (Ascent{2, 2, 1}));
    EXPECT_TRUE(ascents(LatticePath::parse("NN")).empty());
}

TEST(FussCatalan, Membership) {
    EXPECT_TRUE(is_fuss_catalan(LatticePath::parse("ENN"), 1, 2));
    EXPECT_FALSE(is_fuss_catalan(LatticePath::parse("NEN"), 1, 1));
    EXPECT_FALSE(is_fuss_catalan(LatticePath::parse("EN"), 1, 2));
    EXPECT_TRUE(is_fuss_catalan(LatticePath::parse(""), 0, 3));
    EXPECT_THROW(FussCatalanPath(2, 1, LatticePath::parse("ENNE")), DomainError);
    EXPECT_TRUE(is_fuss_binomial(LatticePath::parse("NNE"), 1, 2));
    EXPECT_THROW(FussBinomialPath(1, 2, LatticePath::parse("NE")), DomainError);
}

TEST(FussCatalan, EnumerationMatchesFilter) {
    for (int n = 0; n <= 7; ++n) {
        for (int k = 1; k * n <= 14 && k <= 4; ++k) {
            std::vector<std::string> got;
            for (const auto& p : enumerate_fuss_catalan(n, k)) got.push_back(p.to_string());
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
            EXPECT_EQ(got, oracle::fuss_catalan_by_filter(n, k)) << "n=" << n << " k=" << k;
            EXPECT_EQ(BigNat(got.size()), fuss_catalan(n, k));
        }
    }
}

TEST(FussBinomial, EnumerationCount) {
    for (int n = 0; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const auto all = enumerate_fuss_binomial(n, k);
            EXPECT_EQ(BigNat(all.size()), binomial((k + 1) * n, n));
            EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        }
    }
}

TEST(FussCatalan, TypesOfSmallPaths) {
    const FussCatalanPath p(2, 2, LatticePath::parse("ENENNN"));
    EXPECT_EQ(fc_type(p), (IntPartition{1, 1}));
    EXPECT_EQ(fc_reduced_type(p), (IntPartition{1}));
    const FussCatalanPath q(3, 1, LatticePath::parse("EENNEN"));
    EXPECT_EQ(fc_type(q), (IntPartition{2, 1}));
    EXPECT_EQ(fc_reduced_type(q), (IntPartition{1}));
}

TEST(FussBinomial, TypeSkipsBaseline) {
    EXPECT_EQ(fb_type(FussBinomialPath(2, 1, LatticePath::parse("EENN"))), IntPartition{});
    EXPECT_EQ(fb_type(FussBinomialPath(2, 1, LatticePath::parse("NEEN"))), IntPartition{2});
    EXPECT_EQ(fb_type(FussBinomialPath(2, 1, LatticePath::parse("ENNE"))), IntPartition{1});
    EXPECT_EQ(fb_type(FussBinomialPath(2, 1, LatticePath::parse("NENE"))), (IntPartition{1, 1}));
}

TEST(FussCatalan, TypeWeights) {
    for (const auto& p : enumerate_fuss_catalan(5, 2)) {
        EXPECT_EQ(weight(fc_type(p)), 5);
        EXPECT_LT(weight(fc_reduced_type(p)), 5);
    }
}
