#include <gtest/gtest.h>

#include "ncstrip/symfunc.hpp"
#include "oracles.hpp"

using namespace ncstrip;

TEST(HExpansion, ThreeTwoOverOne) {
    const auto e = expand_skew(parse_shape("3,2/1"));
    EXPECT_EQ(e.to_string(), "2h(2,1) + 2h(2) + h(1,1) + 2h(1) + h()");
    EXPECT_EQ(e.coefficient(IntPartition{2, 1}), 2);
    EXPECT_EQ(e.coefficient(IntPartition{3}), 0);
    EXPECT_EQ(e.coefficient_sum(), 8);
}

TEST(HExpansion, PrintingAndArithmetic) {
    HExpansion e;
    EXPECT_EQ(e.to_string(), "0");
    e.add(IntPartition{1}, 0);
    EXPECT_TRUE(e.empty());
    e.add(IntPartition{1}, 2);
    e.add(IntPartition{1});
    e.add(IntPartition{});
    EXPECT_EQ(e.to_string(), "3h(1) + h()");
}

TEST(HExpansion, ComparisonReportsDifferences) {
    HExpansion a, b;
    a.add(IntPartition{2}, 3);
    b.add(IntPartition{2}, 3);
    EXPECT_TRUE(h_expansions_equal(a, b).equal());
    b.add(IntPartition{1, 1});
    const auto cmp = h_expansions_equal(a, b);
    ASSERT_FALSE(cmp.equal());
    ASSERT_EQ(cmp.diffs.size(), 1u);
    EXPECT_EQ(cmp.diffs[0].lambda, (IntPartition{1, 1}));
    EXPECT_EQ(cmp.report(), "h(1,1): 0 != 1\n");
}

TEST(HExpansion, CoefficientSumCountsStrips) {
    for (const auto& shape : oracle::small_shapes(8)) {
        EXPECT_EQ(expand_skew(shape).coefficient_sum(), count_r_strips(shape)) << shape.to_string();
    }
}

TEST(HExpansion, EmptyShape) {
    const auto e = expand_skew(stretched_staircase(0, 3));
    EXPECT_EQ(e.to_string(), "h()");
}

TEST(HExpansion, StretchedStaircaseMatchesClosedForm) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k * (n + 1) <= 10; ++k) {
            const auto cmp = h_expansions_equal(expand_skew(stretched_staircase(n, k)), fuss_a_expansion_formula(n, k));
            EXPECT_TRUE(cmp.equal()) << "n=" << n << " k=" << k << "\n" << cmp.report();
        }
    }
}

TEST(HExpansion, RectangleMatchesClosedForm) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; (k + 1) * n <= 12; ++k) {
            const auto cmp = h_expansions_equal(expand_skew(rectangle(n, k)), fuss_b_expansion_formula(n, k));
            EXPECT_TRUE(cmp.equal()) << "n=" << n << " k=" << k << "\n" << cmp.report();
        }
    }
}

TEST(HExpansion, SmallClosedForms) {
    EXPECT_EQ(fuss_a_expansion_formula(1, 1).to_string(), "h(1) + h()");
    EXPECT_EQ(fuss_b_expansion_formula(1, 1).to_string(), "h(1) + h()");
    EXPECT_EQ(parking_expansion(2).to_string(), "h(2) + h(1,1)");
    EXPECT_EQ(parking_expansion(3).to_string(), "h(3) + 3h(2,1) + h(1,1,1)");
    EXPECT_THROW(parking_expansion(0), DomainError);
    EXPECT_THROW(fuss_a_expansion_formula(0, 1), DomainError);
}

TEST(HExpansion, TopPartOfStaircaseIsParking) {
    for (int n = 1; n <= 7; ++n) {
        const auto top = top_homogeneous_part(expand_skew(staircase(n)), n);
        const auto cmp = h_expansions_equal(top, parking_expansion(n));
        EXPECT_TRUE(cmp.equal()) << "n=" << n << "\n" << cmp.report();
    }
}

TEST(HExpansion, ParkingCoefficientsSumToCatalan) {
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(parking_expansion(n).coefficient_sum(), catalan(n));
}
