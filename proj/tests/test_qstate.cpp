#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "symtangle/qstate.hpp"

using namespace symtangle;
using symtangle::testing::kets;

TEST(Kets, BigEndianIndexing) {
    EXPECT_EQ(parse_ket("100"), 4u);
    EXPECT_EQ(ket_string(1, 3), "001");
    EXPECT_EQ(ket_bit(4, 0, 3), 1);
    EXPECT_EQ(display_index(0, 2), 3u);
    EXPECT_EQ(ket_at_display(0, 3), 7u);
    EXPECT_EQ(parse_mask("ac", 4), 0b101u);
    EXPECT_EQ(mask_label(0b1010), "bd");
    EXPECT_THROW(parse_mask("ae", 4), std::invalid_argument);
    EXPECT_THROW(parse_mask("aa", 4), std::invalid_argument);
}

TEST(ExactStates, CanonicalFormFixesSignAndContent) {
    const ExactState s = kets({{"01", -2}, {"10", 2}});
    EXPECT_EQ(s.canonical(), kets({{"10", 1}, {"01", -1}}));
    EXPECT_TRUE(equal_up_to_sign(s, kets({{"01", 1}, {"10", -1}})));
    EXPECT_FALSE(equal_up_to_sign(s, kets({{"01", 1}, {"10", 1}})));
    EXPECT_EQ(s.norm2(), 8);
}

TEST(ExactStates, PermutationMovesQubits) {
    // (ab) exchanges the first two qubits.
    const ExactState s = kets({{"100", 1}});
    EXPECT_EQ(apply_permutation(Permutation::parse("(ab)", 3), s), kets({{"010", 1}}));
    // (abc) sends the content of qubit a to qubit b.
    EXPECT_EQ(apply_permutation(Permutation::parse("(abc)", 3), s), kets({{"010", 1}}));
    EXPECT_EQ(apply_permutation(Permutation::parse("(abc)", 3), kets({{"010", 1}})), kets({{"001", 1}}));
}

TEST(ExactStates, AlgebraElementsActLinearly) {
    const auto e = GroupAlgebraElement::parse("e + (ab) - (ac) - (cba)", 3);
    const ExactState image = apply_algebra_element(e, kets({{"001", 1}}));
    EXPECT_TRUE(equal_up_to_sign(image, kets({{"001", 2}, {"100", -1}, {"010", -1}})));
}

TEST(Pauli, SingleQubitActions) {
    const ExactState zero = kets({{"0", 1}});
    const ExactState one = kets({{"1", 1}});
    EXPECT_EQ(pauli_apply('x', 0, zero), one);
    EXPECT_EQ(pauli_apply('z', 0, one), one.scaled(-1));
    EXPECT_EQ(pauli_apply('y', 0, zero), one.scaled(GaussInt(0, 1)));
    EXPECT_EQ(pauli_apply('y', 0, one), zero.scaled(GaussInt(0, -1)));
    EXPECT_THROW(pauli_apply('q', 0, zero), std::invalid_argument);
}

TEST(Pauli, OperatorIdentityWithScale) {
    const ExactState ghz = kets({{"000", 1}, {"111", 1}});
    const ExactState w = kets({{"001", 1}, {"010", 1}, {"100", 1}, {"110", 1}, {"101", 1}, {"011", 1}});
    const PauliOperator sum = PauliOperator::sum(3, 'x', {{0}, {1}, {2}}, 1, Rational(1, 3));
    EXPECT_TRUE(maps_to(sum, ghz, w, 1));
    EXPECT_FALSE(maps_to(sum, ghz, w, -1));
    const PauliOperator unscaled = PauliOperator::sum(3, 'x', {{0}, {1}, {2}});
    EXPECT_FALSE(maps_to(unscaled, ghz, w, 1));
}

TEST(TOperator, MixesPartners) {
    const ExactState q = kets({{"001", 1}, {"010", 1}, {"100", 1}});
    EXPECT_EQ(t_operator(1, q), kets({{"001", 1}, {"010", 1}, {"100", 1}, {"110", 1}, {"101", 1}, {"011", 1}}));
    EXPECT_TRUE(t_operator(-1, kets({{"0110", 1}, {"1001", 1}})).is_zero());
    const FloatState f = t_operator(-1, q.to_float());
    // (1 - X^3)/sqrt(2) on the normalized state: -1/sqrt(6) on the flipped kets.
    EXPECT_NEAR(std::abs(f.amp(parse_ket("011")) + 1.0 / std::sqrt(6.0)), 0.0, 1e-15);
}

TEST(Spin, LabelsOfKnownStates) {
    const SpinLabels w = spin_labels(kets({{"001", 1}, {"010", 1}, {"100", 1}}));
    ASSERT_TRUE(w.m_j && w.j);
    EXPECT_EQ(w.m_j->twice, 1);
    EXPECT_EQ(w.j->twice, 3);

    const SpinLabels d = spin_labels(kets({{"001", 2}, {"100", -1}, {"010", -1}}), {parse_mask("ab", 3)});
    EXPECT_EQ(d.j->twice, 1);
    ASSERT_EQ(d.partial.size(), 1u);
    EXPECT_EQ(d.partial[0].spin->twice, 2);

    const SpinLabels ghz = spin_labels(kets({{"000", 1}, {"111", 1}}));
    EXPECT_FALSE(ghz.m_j.has_value());
    EXPECT_EQ(ghz.j->twice, 3);

    const SpinLabels mixed = spin_labels(kets({{"00", 1}, {"01", 1}}));
    EXPECT_FALSE(mixed.j.has_value());
}

TEST(Spin, FloatLaneAgreesWithExact) {
    const ExactState s = kets({{"0011", 2}, {"1100", 2}, {"1001", -1}, {"0110", -1}, {"0101", -1}, {"1010", -1}});
    const SpinLabels e = spin_labels(s);
    const SpinLabels f = spin_labels(s.to_float());
    ASSERT_TRUE(e.j && f.j);
    EXPECT_EQ(e.j->twice, 0);
    EXPECT_EQ(f.j->twice, 0);
}

TEST(Spin, ExchangeGroups) {
    const ExactState u = kets({{"001", 2}, {"100", -1}, {"010", -1}});
    const auto groups = exchange_symmetric_groups(u);
    ASSERT_EQ(groups.size(), 1u);
    EXPECT_EQ(groups[0], parse_mask("ab", 3));
}

TEST(Overlap, ExactAndFloat) {
    const ExactState a = kets({{"001", 2}, {"100", -1}, {"010", -1}});
    const ExactState b = kets({{"010", 2}, {"100", -1}, {"001", -1}});
    const ExactOverlap o = inner_product(a, b);
    EXPECT_EQ(o.exact_value(), GaussRational(Rational(-1, 2)));
    EXPECT_EQ(o.abs_squared(), Rational(1, 4));
    EXPECT_NEAR(inner_product(a.to_float(), b.to_float()).real(), -0.5, 1e-15);
    // 1/sqrt(2) is irrational.
    EXPECT_FALSE(inner_product(kets({{"0", 1}}), kets({{"0", 1}, {"1", 1}})).exact_value().has_value());
}

TEST(FloatStates, ZeroVectorRejected) {
    EXPECT_THROW(FloatState(2).normalized(), std::domain_error);
    EXPECT_THROW(FloatState(2, std::vector<Complex>(3)), std::invalid_argument);
}
