#include <gtest/gtest.h>

#include "csfkit/trinacria.hpp"

using namespace csfkit;

TEST(Ratios, BoundsAndValues) {
    for (Part i = 2; i <= 50; ++i) {
        Rational r = r_ratio(i);
        EXPECT_GT(r, 1);
        EXPECT_LE(r, 2);
    }
    EXPECT_EQ(r_ratio(2), rat(2));
    EXPECT_EQ(r_ratio(9), rat(9, 8));
    EXPECT_THROW(r_ratio(1), std::invalid_argument);

    EXPECT_EQ(delta_of(2), rat(4));
    EXPECT_EQ(delta_of(3), rat(3, 2));
    EXPECT_EQ(delta_of(4), rat(0));
}

TEST(FCoeff, SpecExamples) {
    EXPECT_EQ(f_coeff(Composition{9}, 1), rat(9, 4));
    EXPECT_EQ(f_coeff(Composition{5, 4}, 1), rat(-5, 2));
    EXPECT_EQ(f_coeff(Composition{2, 7}, 1), rat(26, 3));
}

TEST(FCoeff, RejectsOutsiders) {
    EXPECT_THROW(f_coeff(Composition{2, 2}, 1), std::invalid_argument);     // wrong size
    EXPECT_THROW(f_coeff(Composition{3, 1, 5}, 1), std::invalid_argument);  // part 1
    EXPECT_THROW(f_coeff(Composition{9}, 0), std::invalid_argument);
}

TEST(Y2, HandEvaluatedCoefficients) {
    CompExpansion y2 = compute_Y2(1);
    EXPECT_EQ(y2.coeff(Composition{7}), rat(12));
    EXPECT_EQ(y2.coeff(Composition{2, 5}), rat(12));
    EXPECT_THROW(compute_Y2(0), std::invalid_argument);
}

TEST(Y1, HandEvaluatedCoefficients) {
    CompExpansion y1 = compute_Y1(1);
    EXPECT_EQ(y1.coeff(Composition{8}), rat(30));
    EXPECT_EQ(y1.coeff(Composition{2, 6}), rat(46));
}

TEST(Y0, HandEvaluatedCoefficients) {
    CompExpansion y0 = compute_Y0(1);
    EXPECT_EQ(y0.coeff(Composition{5, 4}), rat(-30));
    EXPECT_EQ(y0.coeff(Composition{9}), rat(18));
}

TEST(Y0, IntegralityAndDualRoute) {
    for (Part b = 1; b <= 5; ++b) {
        CompExpansion direct = compute_Y0(b);
        for (const auto& [K, c] : direct.terms()) {
            EXPECT_TRUE(is_integer(c)) << K.to_string();
        }
        EXPECT_EQ(direct, compute_Y0_foursum(b)) << "b = " << b;
    }
}

TEST(Y0, NonnegativeOutsideK0) {
    for (Part b = 1; b <= 6; ++b) {
        for (const Composition& K : enumerate_no_ones(2 * b + 7)) {
            if (has_suffix_of_size(K, b + 2) || has_suffix_of_size(K, b + 3)) continue;
            EXPECT_GE(f_coeff(K, b), 0) << K.to_string();
        }
    }
}

TEST(Reconstruction, MatchesOracleSmall) {
    for (Part b = 1; b <= 2; ++b) {
        ESym viaY = reconstruct(b);
        EXPECT_EQ(viaY, csf_oracle(Graph::trinacria(b + 2, b, 2))) << "b = " << b;
    }
}

TEST(Reconstruction, MatchesFormula) {
    for (Part b = 1; b <= 4; ++b) {
        EXPECT_EQ(reconstruct(b), csf_trinacria(b + 2, b, 2)) << "b = " << b;
    }
}

TEST(Reconstruction, PiecesHaveExpectedDegrees) {
    YDecomposition d = decompose_trinacria(3);
    EXPECT_EQ(d.Y2.degree(), 11);
    EXPECT_EQ(d.Y1.degree(), 12);
    EXPECT_EQ(d.Y0.degree(), 13);
    for (const auto& [K, c] : d.Y0.terms()) {
        EXPECT_TRUE(K.all_parts_at_least(2));
    }
}
