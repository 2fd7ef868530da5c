#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "symtangle/harmonics.hpp"

using namespace symtangle;
using namespace symtangle::testing;

TEST(Harmonics, TableauImagesMatchFixtures) {
    for (const TableauFixture &f : harmonic_fixtures()) {
        const auto got = tableau_basis(f.n, f.lambda);
        ASSERT_EQ(got.size(), f.states.size()) << f.n << "/" << f.lambda;
        for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_TRUE(equal_up_to_sign(got[i].state, f.states[i].state)) << f.states[i].name;
            EXPECT_EQ(got[i].name, f.states[i].name);
            EXPECT_EQ(got[i].t, static_cast<int>(i) + 1);
            EXPECT_EQ(got[i].lambda, f.lambda);
        }
    }
}

TEST(Harmonics, LabelsAndOrdering) {
    const auto basis = tableau_basis(3, 1);
    EXPECT_EQ(basis[0].label(), "|3,1,1>");
    EXPECT_EQ(basis[0].tableau, "abc");
    // |m_J| descending, +m before -m.
    std::vector<long> twice_m;
    for (const auto &s : basis) {
        twice_m.push_back(s.labels.m_j->twice);
    }
    EXPECT_EQ(twice_m, (std::vector<long>{3, -3, 1, -1}));
    EXPECT_EQ(basis[2].labels.j->twice, 3);
}

TEST(Harmonics, BasisSizes) {
    EXPECT_EQ(harmonic_basis(2).size(), 4u);
    EXPECT_EQ(harmonic_basis(3).size(), 8u);
    EXPECT_EQ(harmonic_basis(4).size(), 16u);
    EXPECT_THROW(tableau_basis(3, 5), std::out_of_range);
}

TEST(Symmetric, CompleteAndIndependent) {
    for (int n = 2; n <= 5; ++n) {
        const auto basis = symmetric_basis(n);
        const std::size_t dim = std::size_t{1} << n;
        EXPECT_EQ(basis.size(), dim) << n;
        EXPECT_EQ(gram_rank(basis), dim) << n;
    }
}

TEST(Symmetric, TImagesRecordTheirSource) {
    const LabeledState w = named_state("W3+");
    EXPECT_EQ(w.t_sign, 1);
    EXPECT_EQ(w.source, "Q2+");
    ASSERT_TRUE(w.source_m_j.has_value());
    EXPECT_EQ(w.source_m_j->twice, 1);
    const LabeledState c = named_state("C2+");
    EXPECT_TRUE(c.labels.j.has_value());
    EXPECT_EQ(c.labels.j->twice, 0);
}

TEST(Registry, AliasesResolveToTheSameState) {
    EXPECT_EQ(named_state("Phi+").state, named_state("PhiBell+").state);
    EXPECT_EQ(named_state("Psi-").state, named_state("PsiBell-").state);
    EXPECT_EQ(named_state("Psi3+").state, named_state("Psi3GHZ+").state);
    EXPECT_EQ(named_state("Psi4-").state, named_state("Psi4GHZ-").state);
    EXPECT_THROW(named_state("nope"), std::invalid_argument);
    const auto names = registry_names();
    const std::set<std::string> set(names.begin(), names.end());
    for (const char *n : {"F+", "F-", "R", "C2+-C3+", "W4-", "D2-", "B-"}) {
        EXPECT_TRUE(set.count(n)) << n;
    }
}

TEST(Registry, ExtraStates) {
    // F+- = e_2 image plus twice the e_3 image: a singlet on ab times a qubit-c state.
    EXPECT_TRUE(equal_up_to_sign(named_state("F+").state, kets({{"010", 1}, {"100", -1}})));
    EXPECT_TRUE(equal_up_to_sign(named_state("F-").state, kets({{"011", 1}, {"101", -1}})));
    EXPECT_TRUE(equal_up_to_sign(named_state("R").state, kets({{"0011", 1}, {"1100", 1}, {"1001", -1}, {"0110", -1}})));
    EXPECT_TRUE(
        equal_up_to_sign(named_state("C2+-C3+").state, kets({{"0011", 1}, {"1100", 1}, {"0101", -1}, {"1010", -1}})));
}

TEST(Harmonics, DoubletOverlap) {
    const auto v = inner_product(named_state("D1+").state, named_state("D2+").state).exact_value();
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, GaussRational(Rational(-1, 2)));
}

TEST(Harmonics, SixQubitsGenerate) {
    const auto basis = symmetric_basis(6);
    EXPECT_EQ(basis.size(), 64u);
    EXPECT_EQ(gram_rank(basis), 64u);
    EXPECT_EQ(standard_tableaux(6)[25].str(), "abc/def");
}

TEST(Harmonics, PartialSpinSubsets) {
    EXPECT_EQ(partial_spin_subsets(4).size(), 10u);
    EXPECT_EQ(partial_spin_subsets(2).size(), 0u);
}
