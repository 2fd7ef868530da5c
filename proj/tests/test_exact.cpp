#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "symtangle/exact.hpp"

using namespace symtangle;

TEST(Exact, DeterminantMatchesEigenOnRandomGaussianIntegerMatrices) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    for (std::size_t order = 1; order <= 7; ++order) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<GaussInt> m(order * order);
            Eigen::MatrixXcd e(order, order);
            for (std::size_t i = 0; i < order * order; ++i) {
                m[i] = GaussInt(Integer(d(rng)), Integer(d(rng)));
                e(static_cast<Eigen::Index>(i / order), static_cast<Eigen::Index>(i % order)) = m[i].to_complex();
            }
            const std::complex<double> oracle = e.determinant();
            const GaussInt exact = determinant(m, order);
            const double scale = std::max(1.0, std::abs(oracle));
            EXPECT_NEAR(exact.re.get_d(), oracle.real(), 1e-9 * scale);
            EXPECT_NEAR(exact.im.get_d(), oracle.imag(), 1e-9 * scale);
        }
    }
}

TEST(Exact, RationalDeterminantAndRank) {
    QMatrix m(3, 3);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(1, 4);
    m(1, 1) = Rational(1, 5);
    m(2, 2) = GaussRational(0, 1);
    // (1/10 - 1/12) * i
    EXPECT_EQ(determinant(m), GaussRational(0, Rational(1, 60)));
    EXPECT_EQ(rank(m), 3u);

    QMatrix singular(2, 2);
    singular(0, 0) = 1;
    singular(0, 1) = GaussRational(0, 1);
    singular(1, 0) = GaussRational(0, -1);
    singular(1, 1) = 1;
    EXPECT_TRUE(determinant(singular).is_zero());
    EXPECT_EQ(rank(singular), 1u);
    EXPECT_EQ(rank(QMatrix(3, 2)), 0u);
}

TEST(Exact, PivotingFlipsSign) {
    // Permutation matrix of a transposition.
    std::vector<GaussInt> m{0, 1, 1, 0};
    EXPECT_EQ(determinant(m, 2), GaussInt(-1));
}

TEST(Exact, SquareRoots) {
    EXPECT_EQ(exact_sqrt(Rational(4, 9)), Rational(2, 3));
    EXPECT_FALSE(exact_sqrt(Rational(5, 9)).has_value());
    EXPECT_FALSE(exact_sqrt(Integer(-4)).has_value());
}

TEST(Exact, ParseRational) {
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("+5"), Rational(5));
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_EQ(to_string(GaussRational(Rational(1, 2), -1)), "1/2-1j");
}

TEST(Exact, HalfIntText) {
    EXPECT_EQ(HalfInt::from_twice(3).str(), "3/2");
    EXPECT_EQ(HalfInt::from_twice(-4).str(), "-2");
}
