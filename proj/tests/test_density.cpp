#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "support.hpp"
#include "symtangle/density.hpp"

using namespace symtangle;
using namespace symtangle::testing;

namespace {

// Reduced matrix straight from amplitudes: sum over kets that agree on the
// traced qubits.
CMatrix reduced_from_amplitudes(const FloatState &s, SubsystemMask traced) {
    const int n = s.n();
    std::vector<int> kept;
    for (int q = 0; q < n; ++q) {
        if (!(traced & (1U << q))) {
            kept.push_back(q);
        }
    }
    auto kept_index = [&](Ket k) {
        std::size_t idx = 0;
        for (int q : kept) {
            idx = (idx << 1) | static_cast<std::size_t>(ket_bit(k, q, n));
        }
        return idx;
    };
    const std::size_t dk = std::size_t{1} << kept.size();
    CMatrix out(dk, dk);
    for (Ket x = 0; x < s.dim(); ++x) {
        for (Ket y = 0; y < s.dim(); ++y) {
            bool same = true;
            for (int q = 0; q < n; ++q) {
                if ((traced & (1U << q)) && ket_bit(x, q, n) != ket_bit(y, q, n)) {
                    same = false;
                }
            }
            if (same) {
                out(kept_index(x), kept_index(y)) += s.amp(x) * std::conj(s.amp(y));
            }
        }
    }
    return out;
}

Eigen::MatrixXcd to_eigen(const CMatrix &m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            e(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
        }
    }
    return e;
}

}  // namespace

TEST(PartialTrace, MatchesAmplitudeOracle) {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 5; ++n) {
        const FloatState s = random_state(n, rng);
        const DensityMatrix rho = density_from_pure(s);
        for (SubsystemMask traced : proper_subsystems(n)) {
            const DensityMatrix r = partial_trace(rho, traced);
            EXPECT_EQ(r.n(), n - mask_size(traced));
            EXPECT_LT(max_abs_diff(r.values(), reduced_from_amplitudes(s, traced)), 1e-14);
        }
    }
}

TEST(PartialTrace, ExactLaneTracksFloatLane) {
    const ExactState w = kets({{"001", 1}, {"010", 1}, {"100", 1}});
    const DensityMatrix rho = density_from_pure(w);
    const DensityMatrix ra = partial_trace(rho, parse_mask("a", 3));
    ASSERT_TRUE(ra.is_exact());
    EXPECT_EQ((*ra.exact())(0, 0), GaussRational(Rational(1, 3)));
    EXPECT_EQ((*ra.exact())(1, 2), GaussRational(Rational(1, 3)));
    EXPECT_EQ(ra.exact()->trace(), GaussRational(1));
    EXPECT_THROW(partial_trace(rho, parse_mask("abc", 3)), std::invalid_argument);
    EXPECT_THROW(partial_trace(rho, 0), std::invalid_argument);
}

TEST(PartialTranspose, BlockEqualsGeneralOnRandomMatrices) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const DensityMatrix m(n, random_matrix(std::size_t{1} << n, rng));
            for (SubsystemMask mask = 1; mask < (1U << n); ++mask) {
                const DensityMatrix g = partial_transpose(m, mask, TransposeScheme::General);
                const DensityMatrix b = partial_transpose(m, mask, TransposeScheme::Block);
                EXPECT_EQ(max_abs_diff(g.values(), b.values()), 0.0);
                EXPECT_EQ(max_abs_diff(partial_transpose(g, mask).values(), m.values()), 0.0);
                EXPECT_TRUE(g.transposed());
            }
        }
    }
}

TEST(PartialTranspose, FullTransposeIsTranspose) {
    std::mt19937_64 rng(8);
    const DensityMatrix m(3, random_matrix(8, rng));
    const DensityMatrix t = partial_transpose(m, 0b111);
    EXPECT_EQ(max_abs_diff(t.values(), m.values().adjoint().conjugate()), 0.0);
}

TEST(PartialTranspose, TwoQubitIndexSwap) {
    // rho^{T_a}_{(i j),(k l)} = rho_{(k j),(i l)}
    std::mt19937_64 rng(2);
    const DensityMatrix m(2, random_matrix(4, rng));
    const DensityMatrix t = partial_transpose(m, parse_mask("a", 2));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    EXPECT_EQ(t(2 * i + j, 2 * k + l), m(2 * k + j, 2 * i + l));
                }
            }
        }
    }
}

TEST(PartialTranspose, ExactLaneAndBellSpectrum) {
    const DensityMatrix bell = density_from_pure(kets({{"00", 1}, {"11", 1}}));
    const DensityMatrix t = partial_transpose(bell, parse_mask("a", 2), TransposeScheme::Block);
    const SpectralSummary s = spectral_summary(t);
    EXPECT_NEAR(s.min_eig, -0.5, 1e-14);
    EXPECT_NEAR(s.eigenvalues.back(), 0.5, 1e-14);
    ASSERT_TRUE(s.exact_det.has_value());
    EXPECT_EQ(*s.exact_det, Rational(-1, 16));
    EXPECT_EQ(*s.exact_trace, Rational(1));
}

TEST(Spectral, MatchesEigenOracleOnRandomDensities) {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 4; ++n) {
        const CMatrix rho = random_density(std::size_t{1} << n, rng);
        const SpectralSummary s = spectral_summary(density_from_matrix(n, rho));
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(rho));
        double det = 1.0;
        for (Eigen::Index k = 0; k < oracle.eigenvalues().size(); ++k) {
            EXPECT_NEAR(s.eigenvalues[static_cast<std::size_t>(k)], oracle.eigenvalues()(k), 1e-13);
            det *= oracle.eigenvalues()(k);
        }
        EXPECT_NEAR(s.det, det, 1e-15);
        EXPECT_NEAR(s.trace, 1.0, 1e-13);
    }
}

TEST(Purity, ExactAndFloat) {
    const DensityMatrix ghz = density_from_pure(kets({{"000", 1}, {"111", 1}}));
    const Purity whole = purity(ghz);
    EXPECT_TRUE(whole.is_pure);
    EXPECT_EQ(whole.exact_tr_rho2, Rational(1));
    const Purity part = purity(partial_trace(ghz, parse_mask("a", 3)));
    EXPECT_FALSE(part.is_pure);
    EXPECT_EQ(part.exact_tr_rho2, Rational(1, 2));
    std::mt19937_64 rng(1);
    const Purity f = purity(density_from_pure(random_state(3, rng)));
    EXPECT_TRUE(f.is_pure);
    EXPECT_NEAR(f.tr_rho2, 1.0, 1e-14);
}

TEST(Density, InputValidation) {
    CMatrix m = CMatrix::identity(4).scaled(0.5);
    EXPECT_THROW(density_from_matrix(2, m), std::invalid_argument);
    m(0, 1) = 0.1;
    EXPECT_THROW(density_from_matrix(2, m.scaled(0.5)), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(3, CMatrix::identity(4)), std::invalid_argument);
    EXPECT_THROW(density_from_pure(ExactState(2)), std::domain_error);
}

TEST(Subsystems, SplitEnumeration) {
    EXPECT_EQ(split_representatives(2).size(), 1u);
    EXPECT_EQ(split_representatives(3).size(), 3u);
    const auto four = split_representatives(4);
    ASSERT_EQ(four.size(), 7u);
    std::vector<std::string> labels;
    for (SubsystemMask m : four) {
        labels.push_back(mask_label(m));
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"a", "b", "c", "d", "ab", "ac", "ad"}));
    EXPECT_EQ(split_representatives(6).size(), 31u);
    EXPECT_EQ(proper_subsystems(4).size(), 14u);
    EXPECT_EQ(reduced_position(2, parse_mask("a", 4)), 1);
    EXPECT_THROW(reduced_position(0, parse_mask("a", 4)), std::invalid_argument);
}

TEST(Density, SameMatrixPrefersExact) {
    const ExactState a = kets({{"01", 1}, {"10", 1}});
    const DensityMatrix ra = density_from_pure(a);
    EXPECT_TRUE(same_matrix(ra, density_from_pure(a.scaled(-3))));
    EXPECT_FALSE(same_matrix(ra, density_from_pure(kets({{"01", 1}, {"10", -1}}))));
}
