#pragma once

// Shared fixtures for the unit tests and the acceptance gate: hand-written
// integer expansions of the reference bases and random-state generators.

#include <complex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symtangle/linalg.hpp"
#include "symtangle/qstate.hpp"

namespace symtangle::testing {

using Terms = std::vector<std::pair<std::string, long>>;

inline ExactState kets(const Terms &terms) {
    return ExactState::from_terms(static_cast<int>(terms.front().first.size()), terms);
}

inline ExactState plus(const ExactState &x, const ExactState &y) { return x + y; }
inline ExactState minus(const ExactState &x, const ExactState &y) { return x - y; }

struct Expansion {
    std::string name;
    ExactState state;
};

// Tableau-by-tableau expansions of e_lambda |ket>, in listing order. Tableaux
// that generate nothing have an empty list.
struct TableauFixture {
    int n;
    int lambda;
    std::vector<Expansion> states;
};

inline std::vector<TableauFixture> harmonic_fixtures() {
    const ExactState dp1 = kets({{"001", 2}, {"100", -1}, {"010", -1}});
    const ExactState dm1 = kets({{"110", 2}, {"011", -1}, {"101", -1}});
    const ExactState dp2 = kets({{"010", 2}, {"100", -1}, {"001", -1}});
    const ExactState dm2 = kets({{"101", 2}, {"011", -1}, {"110", -1}});
    return {
        {2, 1, {{"A+", kets({{"00", 1}})}, {"A-", kets({{"11", 1}})}, {"B+", kets({{"01", 1}, {"10", 1}})}}},
        {2, 2, {{"B-", kets({{"01", 1}, {"10", -1}})}}},
        {3,
         1,
         {{"Q1+", kets({{"000", 1}})},
          {"Q1-", kets({{"111", 1}})},
          {"Q2+", kets({{"001", 1}, {"010", 1}, {"100", 1}})},
          {"Q2-", kets({{"110", 1}, {"101", 1}, {"011", 1}})}}},
        {3, 2, {{"D1+", dp1}, {"D1-", dm1}}},
        {3, 3, {{"D2+", dp2}, {"D2-", dm2}}},
        {3, 4, {}},
        {4,
         1,
         {{"E+", kets({{"0000", 1}})},
          {"E-", kets({{"1111", 1}})},
          {"G+", kets({{"0001", 1}, {"0010", 1}, {"0100", 1}, {"1000", 1}})},
          {"G-", kets({{"1110", 1}, {"1101", 1}, {"1011", 1}, {"0111", 1}})},
          {"C1+", kets({{"0011", 1}, {"0101", 1}, {"0110", 1}, {"1001", 1}, {"1010", 1}, {"1100", 1}})}}},
        {4,
         2,
         {{"L+", kets({{"0001", 3}, {"1000", -1}, {"0010", -1}, {"0100", -1}})},
          {"L-", kets({{"1110", 3}, {"0111", -1}, {"1101", -1}, {"1011", -1}})},
          {"C1-", kets({{"0101", 1}, {"1001", 1}, {"0011", 1}, {"1010", -1}, {"0110", -1}, {"1100", -1}})}}},
        {4,
         3,
         {{"M+", kets({{"0010", 3}, {"1000", -1}, {"0001", -1}, {"0100", -1}})},
          {"M-", kets({{"1101", 3}, {"0111", -1}, {"1110", -1}, {"1011", -1}})},
          {"C2-", kets({{"0110", 1}, {"1010", 1}, {"0011", 1}, {"1001", -1}, {"0101", -1}, {"1100", -1}})}}},
        {4,
         4,
         {{"N+", kets({{"0100", 3}, {"1000", -1}, {"0001", -1}, {"0010", -1}})},
          {"N-", kets({{"1011", 3}, {"0111", -1}, {"1110", -1}, {"1101", -1}})},
          {"C3-", kets({{"0110", 1}, {"1100", 1}, {"0101", 1}, {"1001", -1}, {"0011", -1}, {"1010", -1}})}}},
        {4,
         5,
         {{"C2+", kets({{"0011", 2}, {"1100", 2}, {"1001", -1}, {"0110", -1}, {"0101", -1}, {"1010", -1}})}}},
        {4,
         6,
         {{"C3+", kets({{"0101", 2}, {"1010", 2}, {"1001", -1}, {"0110", -1}, {"0011", -1}, {"1100", -1}})}}},
        {4, 7, {}},
        {4, 8, {}},
        {4, 9, {}},
        {4, 10, {}},
    };
}

inline const ExactState &fixture(const std::string &name) {
    static const std::vector<Expansion> all = [] {
        std::vector<Expansion> out;
        for (const TableauFixture &t : harmonic_fixtures()) {
            out.insert(out.end(), t.states.begin(), t.states.end());
        }
        return out;
    }();
    for (const Expansion &e : all) {
        if (e.name == name) {
            return e.state;
        }
    }
    throw std::invalid_argument("no fixture " + name);
}

// T+- images per tableau, written as sums of the harmonic fixtures with the
// same signs as the defining expansions.
inline std::vector<TableauFixture> symmetric_fixtures() {
    auto pm = [](const std::string &stem, const std::string &p, const std::string &m) {
        return std::vector<Expansion>{{stem + "+", plus(fixture(p), fixture(m))},
                                      {stem + "-", minus(fixture(p), fixture(m))}};
    };
    auto join = [](std::vector<Expansion> a, const std::vector<Expansion> &b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    return {
        {2,
         1,
         join(pm("PhiBell", "A+", "A-"), {{"PsiBell+", kets({{"01", 1}, {"10", 1}})}})},
        {2, 2, {{"PsiBell-", kets({{"01", 1}, {"10", -1}})}}},
        {3, 1, join(pm("Psi3GHZ", "Q1+", "Q1-"), pm("W3", "Q2+", "Q2-"))},
        {3, 2, pm("U3", "D1+", "D1-")},
        {3, 3, pm("V3", "D2+", "D2-")},
        {4, 1, join(join(pm("Psi4GHZ", "E+", "E-"), pm("W4", "G+", "G-")), {{"C1+", fixture("C1+")}})},
        {4, 2, join(pm("X4", "L+", "L-"), {{"C1-", fixture("C1-")}})},
        {4, 3, join(pm("Y4", "M+", "M-"), {{"C2-", fixture("C2-")}})},
        {4, 4, join(pm("Z4", "N+", "N-"), {{"C3-", fixture("C3-")}})},
        {4, 5, {{"C2+", fixture("C2+")}}},
        {4, 6, {{"C3+", fixture("C3+")}}},
    };
}

inline FloatState random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (Complex &z : amps) {
        z = {g(rng), g(rng)};
    }
    return FloatState(n, std::move(amps)).normalized();
}

inline CMatrix random_matrix(std::size_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = {u(rng), u(rng)};
        }
    }
    return m;
}

// A A^H / Tr(A A^H): a random full-rank density matrix.
inline CMatrix random_density(std::size_t dim, std::mt19937_64 &rng) {
    const CMatrix a = random_matrix(dim, rng);
    const CMatrix m = a * a.adjoint();
    return m.scaled(1.0 / m.trace().real());
}

}  // namespace symtangle::testing
