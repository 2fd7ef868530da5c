#pragma once

// n-qubit pure states. ExactState holds Gaussian-integer amplitudes with an
// implicit normalization 1/sqrt(norm2); FloatState holds normalized complex
// amplitudes. Ket index k is big-endian: qubit a is the most significant bit.
// Display order (matrix dumps) runs from |1...1> down to |0...0>.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtangle/exact.hpp"
#include "symtangle/permgroup.hpp"

namespace symtangle {

using Complex = std::complex<double>;
using Ket = std::uint32_t;
/// Bit k set <=> qubit k (a = 0) belongs to the set.
using QubitMask = std::uint32_t;

inline constexpr int kMaxQubits = 8;

void check_qubit_count(int n);
inline int ket_bit(Ket k, int qubit, int n) { return static_cast<int>((k >> (n - 1 - qubit)) & 1U); }
inline std::size_t display_index(Ket k, int n) { return ((std::size_t{1} << n) - 1) - k; }
inline Ket ket_at_display(std::size_t row, int n) { return static_cast<Ket>(((std::size_t{1} << n) - 1) - row); }
std::string ket_string(Ket k, int n);
/// Parses a bitstring written qubit-a-first, e.g. "0101".
Ket parse_ket(const std::string &bits);
int hamming_weight(Ket k);

std::string mask_label(QubitMask mask);
/// Parses labels such as "ac"; rejects labels beyond n and repeats.
QubitMask parse_mask(const std::string &labels, int n);
int mask_size(QubitMask mask);

class FloatState;

class ExactState {
   public:
    ExactState() = default;
    /// Zero vector on n qubits.
    explicit ExactState(int n);

    static ExactState basis(int n, Ket k);
    /// Integer combination of kets given as (bitstring, coefficient).
    static ExactState from_terms(int n, const std::vector<std::pair<std::string, long>> &terms);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const GaussInt &amp(Ket k) const { return amps_[k]; }
    void set(Ket k, GaussInt v) { amps_[k] = std::move(v); }
    void add(Ket k, const GaussInt &v) { amps_[k] += v; }
    const std::vector<GaussInt> &amps() const { return amps_; }

    /// Sum of |amp|^2.
    Integer norm2() const;
    bool is_zero() const;
    bool is_real() const;
    std::vector<Ket> support() const;

    ExactState operator+(const ExactState &o) const;
    ExactState operator-(const ExactState &o) const;
    ExactState scaled(const GaussInt &k) const;
    bool operator==(const ExactState &o) const = default;

    /// Primitive representative (component gcd removed) whose first nonzero
    /// amplitude in display order has positive real part and non-negative
    /// imaginary part.
    ExactState canonical() const;
    FloatState to_float() const;

   private:
    int n_ = 0;
    std::vector<GaussInt> amps_;
};

/// r with to = r * from, if one exists (from must be nonzero).
std::optional<GaussRational> ratio(const ExactState &from, const ExactState &to);
/// Same physical state up to a real global sign (normalized vectors equal up to +-1).
bool equal_up_to_sign(const ExactState &a, const ExactState &b);

class FloatState {
   public:
    FloatState() = default;
    explicit FloatState(int n);
    FloatState(int n, std::vector<Complex> amps);

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amps() const { return amps_; }
    std::vector<Complex> &amps() { return amps_; }
    Complex amp(Ket k) const { return amps_[k]; }

    double norm() const;
    bool is_zero(double tol = 1e-12) const { return norm() <= tol; }
    /// Scales to unit norm; throws std::domain_error on the zero vector.
    FloatState normalized() const;

    double tolerance = 1e-10;

   private:
    int n_ = 0;
    std::vector<Complex> amps_;
};

ExactState apply_permutation(const Permutation &p, const ExactState &s);
FloatState apply_permutation(const Permutation &p, const FloatState &s);
ExactState apply_algebra_element(const GroupAlgebraElement &x, const ExactState &s);

/// Single-qubit Pauli action; axis is 'x', 'y' or 'z'.
ExactState pauli_apply(char axis, int qubit, const ExactState &s);
FloatState pauli_apply(char axis, int qubit, const FloatState &s);

/// Tensor product of single-qubit Paulis, one character per qubit from
/// {I, X, Y, Z}, qubit a first.
struct PauliString {
    std::string ops;

    static PauliString on(int n, char axis, const std::vector<int> &qubits);
};

/// sqrt(scale_sq) * sum_k weight_k * P_k. The square-root prefactor keeps
/// operators such as (1/sqrt(3)) sum sigma_x exact.
struct PauliOperator {
    std::vector<std::pair<Rational, PauliString>> terms;
    Rational scale_sq{1};

    int n() const;
    /// Sum of `axis` strings on each listed qubit group, each with weight 1.
    static PauliOperator sum(int n, char axis, const std::vector<std::vector<int>> &groups,
                             Rational weight = 1, Rational scale_sq = 1);
};

/// sum_k weight_k P_k s, without the sqrt(scale_sq) prefactor.
std::vector<GaussRational> pauli_operator_image(const PauliOperator &op, const ExactState &s);
/// Integer-scaled image (a positive multiple of pauli_operator_image).
ExactState pauli_string_apply(const PauliOperator &op, const ExactState &s);
FloatState pauli_string_apply(const PauliOperator &op, const FloatState &s);

/// Exact test of op |s> = expected |t> for the normalized states.
bool maps_to(const PauliOperator &op, const ExactState &s, const ExactState &t, const GaussRational &expected);

/// s + X^{(x)n} s (plus) or s - X^{(x)n} s (minus); 1/sqrt(2) is absorbed
/// into the implicit normalization. May return the zero vector.
ExactState t_operator(int sign, const ExactState &s);
FloatState t_operator(int sign, const FloatState &s);

struct PartialSpin {
    QubitMask mask = 0;
    std::optional<HalfInt> spin;  // empty: not an eigenstate
};

struct SpinLabels {
    std::optional<HalfInt> m_j;  // empty: not a J_z eigenstate
    std::optional<HalfInt> j;    // empty: not a J^2 eigenstate
    std::vector<PartialSpin> partial;
};

/// J_z, J^2 and per-subset spin of the state; subsets of size < 2 are allowed.
SpinLabels spin_labels(const ExactState &s, const std::vector<QubitMask> &subsets = {});
SpinLabels spin_labels(const FloatState &s, const std::vector<QubitMask> &subsets = {});

/// Spin of the qubits in `mask` if s is an eigenstate of their total S^2.
std::optional<HalfInt> subset_spin(const ExactState &s, QubitMask mask);

/// Qubit groups within which every transposition maps s to +-s; groups of
/// size >= 2, ordered by smallest member.
std::vector<QubitMask> exchange_symmetric_groups(const ExactState &s);

/// <s|t> for the normalized states: raw / sqrt(norm_product).
struct ExactOverlap {
    GaussInt raw;
    Integer norm_product;

    std::optional<GaussRational> exact_value() const;
    Rational abs_squared() const;
    Complex value() const;
};

ExactOverlap inner_product(const ExactState &s, const ExactState &t);
Complex inner_product(const FloatState &s, const FloatState &t);

}  // namespace symtangle
