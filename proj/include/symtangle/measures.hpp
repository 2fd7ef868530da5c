#pragma once

// Entanglement measures and separability tests on pure states: pairwise and
// single-qubit concurrence, 3-tangle, E_tau, n-tangle, positive-partial-
// transpose and purity tests, remainder tests, and cross-n compatibility.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symtangle/density.hpp"
#include "symtangle/qstate.hpp"

namespace symtangle {

constexpr double kNegativityThreshold = -1e-10;
constexpr double kPurityMargin = 1e-10;
constexpr double kOverlapThreshold = 1e-9;

/// A pure state in both lanes; the exact lane is present when the input was
/// exact.
struct PureInput {
    FloatState state;  // normalized
    std::optional<ExactState> exact;
    DensityMatrix rho;

    static PureInput from(const ExactState &s);
    static PureInput from(const FloatState &s);
    int n() const { return state.n(); }
};

/// Wootters concurrence of a two-qubit density matrix. The lambdas (square
/// roots of the eigenvalues of rho rho~) are taken as singular values of
/// W^T (Y x Y) W for rho = W W^H, which keeps pure and low-rank inputs at
/// full precision.
double concurrence(const DensityMatrix &rho2);

/// Concurrence of the (j,k) marginal. The pure-state overloads factor the
/// marginal as M M^H and take singular values of M^T (Y x Y) M through a
/// Hermitian dilation, which avoids square roots of round-off eigenvalues.
double concurrence_pair(const DensityMatrix &rho, int j, int k);
double concurrence_pair(const PureInput &s, int j, int k);

struct SplitConcurrence {
    double value = 0.0;     // C_{I(rest)}
    double squared = 0.0;   // 4 det rho_I
    double purity_route = 0.0;  // 2 (1 - Tr rho_I^2)
    std::optional<Rational> exact_squared;
};

/// Single qubit I against the rest; both routes are computed and must agree.
SplitConcurrence concurrence_split(const PureInput &s, int qubit);

struct ThreeTangle {
    double value = 0.0;  // clamped to [0, 1]
    double raw = 0.0;    // focus on qubit a, unclamped
    std::array<double, 3> per_focus{};
};

ThreeTangle three_tangle(const PureInput &s);
double e_tau(const PureInput &s);

struct NTangle {
    double value = 0.0;
    std::optional<Rational> exact;
};

/// |<psi| sigma_y^(x)n |psi*>|^2 for n = 2 and even n; n = 3 gives the 3-tangle.
NTangle n_tangle(const PureInput &s);

struct PhSplit {
    SubsystemMask mask = 0;
    double min_eig = 0.0;
    double det = 0.0;
    std::optional<Rational> exact_det;
    bool equals_rho = false;
    bool negative = false;
};

struct PhResult {
    bool any_negative = false;
    std::vector<PhSplit> splits;
};

PhSplit ph_split(const DensityMatrix &rho, SubsystemMask mask);
/// Every bipartition; negative = exact det < 0 when exact, else min eig below
/// the threshold.
PhResult ph_test(const DensityMatrix &rho);

struct PmEntry {
    SubsystemMask traced = 0;
    double tr_rho2 = 0.0;
    std::optional<Rational> exact_tr_rho2;
    bool below_one = false;
    bool boundary = false;  // within the margin of 1 but not exactly 1
};

struct PmResult {
    bool entangled = false;
    std::vector<PmEntry> entries;
};

PmEntry pm_entry(const DensityMatrix &rho, SubsystemMask traced);
PmResult pm_test(const PureInput &s);

struct Remainder {
    SubsystemMask traced = 0;
    int j = 0;
    bool equals = false;
    double det = 0.0;
    std::optional<Rational> exact_det;
    int det_sign = 0;
};

/// Traces out I, transposes qubit J of what remains, and compares.
Remainder remainder_test(const DensityMatrix &rho, SubsystemMask traced, int j);
/// First qubit outside I; -1 when fewer than two qubits remain.
int default_remainder_qubit(int n, SubsystemMask traced);

struct Classification {
    std::string label;  // NPT-entangled, bound-entangled, separable-splits, product
    std::vector<SubsystemMask> separable_splits;
};

Classification classify(const PureInput &s);

struct Candidate {
    std::string id;
    FloatState state;
};

struct CompatibilityMatch {
    int traced_qubit = 0;
    std::vector<std::string> matched;
};

struct Compatibility {
    std::vector<CompatibilityMatch> per_qubit;
    std::vector<std::string> matched;  // union, in candidate order
};

Compatibility compatibility(const PureInput &big, const std::vector<Candidate> &candidates);

struct SplitEntry {
    SubsystemMask mask = 0;
    PhSplit transpose;
    PmEntry purity;
    std::optional<Remainder> remainder;
};

struct PairEntry {
    int j = 0;
    int k = 0;
    double value = 0.0;
};

struct EntanglementReport {
    std::string id;
    int n = 0;
    bool is_pure = true;
    std::vector<SplitEntry> splits;
    std::vector<PairEntry> pairs;
    std::vector<SplitConcurrence> singles;  // indexed by qubit
    std::optional<double> e_tau;
    std::optional<ThreeTangle> tau3;
    std::optional<NTangle> tau_n;
    Classification classification;
    bool any_negative = false;
    bool pm_entangled = false;
};

SplitEntry split_entry(const DensityMatrix &rho, SubsystemMask mask);
EntanglementReport analyze(const PureInput &s, const std::string &id);

}  // namespace symtangle
