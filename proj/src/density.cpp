#include "symtangle/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symtangle {

namespace {

// Ket-index bit pattern of the qubits in mask.
std::size_t index_bits(SubsystemMask mask, int n) {
    std::size_t bits = 0;
    for (int q = 0; q < n; ++q) {
        if (mask & (1U << q)) {
            bits |= std::size_t{1} << (n - 1 - q);
        }
    }
    return bits;
}

void check_mask(SubsystemMask mask, int n, bool proper) {
    const SubsystemMask all = (SubsystemMask{1} << n) - 1;
    if (mask == 0 || (mask & ~all) != 0) {
        throw std::invalid_argument("subsystem mask is empty or names qubits beyond n");
    }
    if (proper && mask == all) {
        throw std::invalid_argument("subsystem mask must be a proper subset");
    }
}

// Full index from the kept-qubit index and the traced-qubit index, both
// big-endian over their own qubit lists.
struct Embedding {
    std::vector<int> kept;
    std::vector<int> traced;
    int n;

    std::size_t full(std::size_t kept_idx, std::size_t traced_idx) const {
        std::size_t out = 0;
        const int nk = static_cast<int>(kept.size());
        const int nt = static_cast<int>(traced.size());
        for (int i = 0; i < nk; ++i) {
            if ((kept_idx >> (nk - 1 - i)) & 1U) {
                out |= std::size_t{1} << (n - 1 - kept[static_cast<std::size_t>(i)]);
            }
        }
        for (int i = 0; i < nt; ++i) {
            if ((traced_idx >> (nt - 1 - i)) & 1U) {
                out |= std::size_t{1} << (n - 1 - traced[static_cast<std::size_t>(i)]);
            }
        }
        return out;
    }
};

template <typename Matrix, typename Zero>
Matrix trace_out(const Matrix &m, const Embedding &e, Zero zero) {
    const std::size_t dk = std::size_t{1} << e.kept.size();
    const std::size_t dt = std::size_t{1} << e.traced.size();
    Matrix out(dk, dk);
    for (std::size_t r = 0; r < dk; ++r) {
        for (std::size_t c = 0; c < dk; ++c) {
            auto acc = zero();
            for (std::size_t t = 0; t < dt; ++t) {
                acc = acc + m(e.full(r, t), e.full(c, t));
            }
            out(r, c) = acc;
        }
    }
    return out;
}

template <typename Matrix>
Matrix transpose_general(const Matrix &m, std::size_t bits) {
    const std::size_t dim = m.rows();
    Matrix out(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r2 = (r & ~bits) | (c & bits);
            const std::size_t c2 = (c & ~bits) | (r & bits);
            out(r, c) = m(r2, c2);
        }
    }
    return out;
}

template <typename Matrix>
Matrix transpose_block(const Matrix &m, SubsystemMask mask, int n) {
    Matrix cur = m;
    const std::size_t dim = m.rows();
    for (int q = 0; q < n; ++q) {
        if (!(mask & (1U << q))) {
            continue;
        }
        const std::size_t half = std::size_t{1} << (n - 1 - q);
        const std::size_t block = 2 * half;
        Matrix next = cur;
        for (std::size_t r0 = 0; r0 < dim; r0 += block) {
            for (std::size_t c0 = 0; c0 < dim; c0 += block) {
                for (std::size_t x = 0; x < half; ++x) {
                    for (std::size_t y = 0; y < half; ++y) {
                        next(r0 + x, c0 + half + y) = cur(r0 + half + x, c0 + y);
                        next(r0 + half + x, c0 + y) = cur(r0 + x, c0 + half + y);
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

CMatrix to_float(const QMatrix &q) {
    CMatrix out(q.rows(), q.cols());
    for (std::size_t r = 0; r < q.rows(); ++r) {
        for (std::size_t c = 0; c < q.cols(); ++c) {
            out(r, c) = q(r, c).to_complex();
        }
    }
    return out;
}

bool lex_mask_less(SubsystemMask x, SubsystemMask y) {
    const int sx = mask_size(x);
    const int sy = mask_size(y);
    if (sx != sy) {
        return sx < sy;
    }
    return mask_label(x) < mask_label(y);
}

}  // namespace

DensityMatrix::DensityMatrix(int n, CMatrix values, std::optional<QMatrix> exact, bool transposed)
    : n_(n), values_(std::move(values)), exact_(std::move(exact)), transposed_(transposed) {
    check_qubit_count(n);
    const std::size_t dim = std::size_t{1} << n;
    if (values_.rows() != dim || values_.cols() != dim) {
        throw std::invalid_argument("density matrix must be 2^n x 2^n");
    }
    if (exact_ && (exact_->rows() != dim || exact_->cols() != dim)) {
        throw std::invalid_argument("exact density matrix must be 2^n x 2^n");
    }
}

DensityMatrix density_from_pure(const ExactState &s) {
    if (s.is_zero()) {
        throw std::domain_error("density matrix of the zero vector");
    }
    const Rational norm(s.norm2());
    const std::size_t dim = s.dim();
    QMatrix q(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (s.amps()[r].is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < dim; ++c) {
            if (s.amps()[c].is_zero()) {
                continue;
            }
            const GaussInt prod = s.amps()[r] * s.amps()[c].conj();
            Rational re(prod.re, norm.get_num());
            Rational im(prod.im, norm.get_num());
            re.canonicalize();
            im.canonicalize();
            q(r, c) = GaussRational(re, im);
        }
    }
    CMatrix f = to_float(q);
    return DensityMatrix(s.n(), std::move(f), std::move(q));
}

DensityMatrix density_from_pure(const FloatState &s) {
    const FloatState u = s.normalized();
    const std::size_t dim = u.dim();
    CMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = u.amp(static_cast<Ket>(r)) * std::conj(u.amp(static_cast<Ket>(c)));
        }
    }
    return DensityMatrix(s.n(), std::move(m));
}

DensityMatrix density_from_matrix(int n, CMatrix m) {
    if (m.hermitian_defect() > 1e-10) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-10) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
    return DensityMatrix(n, std::move(m));
}

int reduced_position(int qubit, SubsystemMask traced) {
    if (traced & (1U << qubit)) {
        throw std::invalid_argument("qubit is traced out");
    }
    int pos = 0;
    for (int q = 0; q < qubit; ++q) {
        pos += (traced & (1U << q)) ? 0 : 1;
    }
    return pos;
}

DensityMatrix partial_trace(const DensityMatrix &rho, SubsystemMask traced) {
    const int n = rho.n();
    check_mask(traced, n, true);
    Embedding e{{}, {}, n};
    for (int q = 0; q < n; ++q) {
        ((traced & (1U << q)) ? e.traced : e.kept).push_back(q);
    }
    const int nk = static_cast<int>(e.kept.size());
    CMatrix f = trace_out(rho.values(), e, [] { return Complex{0.0, 0.0}; });
    std::optional<QMatrix> q;
    if (rho.exact()) {
        q = trace_out(*rho.exact(), e, [] { return GaussRational(); });
    }
    return DensityMatrix(nk, std::move(f), std::move(q), rho.transposed());
}

DensityMatrix partial_transpose(const DensityMatrix &rho, SubsystemMask mask, TransposeScheme scheme) {
    const int n = rho.n();
    check_mask(mask, n, false);
    if (scheme == TransposeScheme::General) {
        const std::size_t bits = index_bits(mask, n);
        std::optional<QMatrix> q;
        if (rho.exact()) {
            q = transpose_general(*rho.exact(), bits);
        }
        return DensityMatrix(n, transpose_general(rho.values(), bits), std::move(q), true);
    }
    std::optional<QMatrix> q;
    if (rho.exact()) {
        q = transpose_block(*rho.exact(), mask, n);
    }
    return DensityMatrix(n, transpose_block(rho.values(), mask, n), std::move(q), true);
}

SpectralSummary spectral_summary(const DensityMatrix &m) {
    const EigenDecomposition eig = hermitian_eigen(m.values());
    SpectralSummary out;
    out.eigenvalues = eig.values;
    out.det = 1.0;
    for (double v : eig.values) {
        out.det *= v;
    }
    out.trace = m.values().trace().real();
    out.min_eig = eig.values.empty() ? 0.0 : eig.values.front();
    out.residual = eigen_residual(m.values(), eig);
    if (m.exact()) {
        const GaussRational d = determinant(*m.exact());
        const GaussRational t = m.exact()->trace();
        if (!d.is_real() || !t.is_real()) {
            throw std::logic_error("Hermitian matrix produced a non-real determinant or trace");
        }
        out.exact_det = d.re;
        out.exact_trace = t.re;
    }
    return out;
}

Purity purity(const DensityMatrix &rho) {
    Purity out;
    const CMatrix &v = rho.values();
    double tr2 = 0.0;
    for (const Complex &z : v.data()) {
        tr2 += std::norm(z);
    }
    out.tr_rho2 = tr2;
    if (rho.exact()) {
        const QMatrix &q = *rho.exact();
        Rational acc = 0;
        for (std::size_t r = 0; r < q.rows(); ++r) {
            for (std::size_t c = 0; c < q.cols(); ++c) {
                acc += q(r, c).norm();
            }
        }
        out.exact_tr_rho2 = acc;
        out.is_pure = (q * q) == q;
    } else {
        out.is_pure = max_abs_diff(v * v, v) < 1e-10;
    }
    return out;
}

bool same_matrix(const DensityMatrix &a, const DensityMatrix &b, double tol) {
    if (a.n() != b.n()) {
        return false;
    }
    if (a.exact() && b.exact()) {
        return *a.exact() == *b.exact();
    }
    return max_abs_diff(a.values(), b.values()) <= tol;
}

std::vector<SubsystemMask> split_representatives(int n) {
    check_qubit_count(n);
    std::vector<SubsystemMask> out;
    const SubsystemMask all = (SubsystemMask{1} << n) - 1;
    for (SubsystemMask m = 1; m < all; ++m) {
        const int k = mask_size(m);
        if (2 * k < n || (2 * k == n && (m & 1U))) {
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), lex_mask_less);
    return out;
}

std::vector<SubsystemMask> proper_subsystems(int n) {
    check_qubit_count(n);
    std::vector<SubsystemMask> out;
    const SubsystemMask all = (SubsystemMask{1} << n) - 1;
    for (SubsystemMask m = 1; m < all; ++m) {
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), lex_mask_less);
    return out;
}

}  // namespace symtangle
