#pragma once

// Density matrices with partial trace and partial transpose. Matrices are
// indexed by the internal ket index; display order is applied only when
// dumping.

#include <optional>
#include <string>
#include <vector>

#include "symtangle/exact.hpp"
#include "symtangle/linalg.hpp"
#include "symtangle/qstate.hpp"

namespace symtangle {

using SubsystemMask = QubitMask;

class DensityMatrix {
   public:
    DensityMatrix() = default;
    DensityMatrix(int n, CMatrix values, std::optional<QMatrix> exact = std::nullopt, bool transposed = false);

    int n() const { return n_; }
    std::size_t dim() const { return values_.rows(); }
    const CMatrix &values() const { return values_; }
    const std::optional<QMatrix> &exact() const { return exact_; }
    bool is_exact() const { return exact_.has_value(); }
    /// Set on partial transposes, which may be indefinite.
    bool transposed() const { return transposed_; }
    Complex operator()(std::size_t r, std::size_t c) const { return values_(r, c); }

   private:
    int n_ = 0;
    CMatrix values_;
    std::optional<QMatrix> exact_;
    bool transposed_ = false;
};

/// |s><s| / <s|s>; exact when s is exact.
DensityMatrix density_from_pure(const ExactState &s);
DensityMatrix density_from_pure(const FloatState &s);
/// Wraps a float matrix after checking Hermiticity and unit trace within 1e-10.
DensityMatrix density_from_matrix(int n, CMatrix m);

/// Reduced matrix on the qubits outside `traced`, in their original order.
DensityMatrix partial_trace(const DensityMatrix &rho, SubsystemMask traced);

enum class TransposeScheme { General, Block };

/// Partial transpose on the qubits in `mask`. General swaps the mask bits
/// between row and column index; Block exchanges the off-diagonal sub-blocks
/// of each sub-quadrant, one qubit at a time.
DensityMatrix partial_transpose(const DensityMatrix &rho, SubsystemMask mask,
                                TransposeScheme scheme = TransposeScheme::General);

struct SpectralSummary {
    std::vector<double> eigenvalues;  // ascending
    double det = 0.0;
    double trace = 0.0;
    double min_eig = 0.0;
    double residual = 0.0;
    std::optional<Rational> exact_det;
    std::optional<Rational> exact_trace;
};

/// Throws std::invalid_argument if the matrix is not Hermitian within 1e-10.
SpectralSummary spectral_summary(const DensityMatrix &m);

struct Purity {
    bool is_pure = false;
    double tr_rho2 = 0.0;
    std::optional<Rational> exact_tr_rho2;
};

Purity purity(const DensityMatrix &rho);

/// Entrywise equality: exact when both are exact, else within tol.
bool same_matrix(const DensityMatrix &a, const DensityMatrix &b, double tol = 1e-10);

/// One mask per bipartition {I, complement}: |I| < n/2, or |I| = n/2 with
/// qubit a in I. Ordered by size, then label text. 2^(n-1) - 1 entries.
std::vector<SubsystemMask> split_representatives(int n);

/// Every nonempty proper subset, ordered by size, then label text.
std::vector<SubsystemMask> proper_subsystems(int n);

/// Index of `qubit` among the qubits that survive tracing out `traced`.
int reduced_position(int qubit, SubsystemMask traced);

}  // namespace symtangle
