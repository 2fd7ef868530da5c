#pragma once

// Basis generation: Young symmetrizer images of computational kets
// ("permutation harmonics"), their T+- symmetrized counterparts, canonical
// |n, lambda, t> labels, and a registry of named states for n <= 4.

#include <optional>
#include <string>
#include <vector>

#include "symtangle/permgroup.hpp"
#include "symtangle/qstate.hpp"

namespace symtangle {

struct LabeledState {
    ExactState state;  // canonical representative
    int n = 0;
    int lambda = 0;  // 1-based index into standard_tableaux(n)
    int t = 0;       // 1-based row within the tableau's list
    std::string tableau;
    std::string name;  // empty when no conventional name exists
    SpinLabels labels;
    int t_sign = 0;  // 0 before T+-, otherwise the sign of T applied
    std::string source;  // for T images: name (or label) of the state T acted on
    std::optional<HalfInt> source_m_j;

    /// "|n,lambda,t>"
    std::string label() const;
    /// name if present, else label().
    std::string id() const;
};

/// Images of every ket under the idempotent of tableau `lambda` (1-based),
/// deduplicated, canonical sign, ordered by |m_J| descending with +m_J before
/// -m_J and ties broken by first display-order ket.
std::vector<LabeledState> tableau_basis(int n, int lambda);

/// tableau_basis for every standard tableau of n, in tableau order.
std::vector<LabeledState> harmonic_basis(int n);

/// T+ and T- images of every tableau state with m_J > 0, and the nonzero
/// image of every m_J = 0 state.
std::vector<LabeledState> symmetric_basis(int n);

/// Named states: generated names, Bell/GHZ aliases, F+-, R and C2+-C3+.
LabeledState named_state(const std::string &name);
std::vector<std::string> registry_names();

std::size_t gram_rank(const std::vector<ExactState> &states);
std::size_t gram_rank(const std::vector<LabeledState> &states);

/// Subsets used for the partial spin labels: every subset of 2..n-1 qubits.
std::vector<QubitMask> partial_spin_subsets(int n);

}  // namespace symtangle
