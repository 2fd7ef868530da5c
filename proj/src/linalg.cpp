#include "symtangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symtangle {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix &o) const {
    if (cols_ != o.rows_) {
        throw std::invalid_argument("CMatrix product: shape mismatch");
    }
    CMatrix r(rows_, o.cols_);
    if (rows_ == cols_ && o.rows_ == o.cols_) {
        active_kernels().gemm(data_.data(), o.data_.data(), r.data_.data(), rows_);
        return r;
    }
    const KernelTable &k = active_kernels();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            k.axpy((*this)(i, j), o.row(j), r.row(i), o.cols_);
        }
    }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix &o) const {
    CMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] += o.data_[i];
    }
    return r;
}

CMatrix CMatrix::operator-(const CMatrix &o) const {
    CMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] -= o.data_[i];
    }
    return r;
}

CMatrix CMatrix::scaled(Complex s) const {
    CMatrix r = *this;
    for (Complex &v : r.data_) {
        v *= s;
    }
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMatrix CMatrix::conjugate() const {
    CMatrix r = *this;
    for (Complex &v : r.data_) {
        v = std::conj(v);
    }
    return r;
}

Complex CMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex &v : data_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex &v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double CMatrix::hermitian_defect() const {
    if (rows_ != cols_) {
        return INFINITY;
    }
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return d;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    }
    return d;
}

namespace {

double off_diagonal_norm2(const CMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMatrix &m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    const double scale = std::max(1.0, m.max_abs());
    if (m.hermitian_defect() > 1e-10 * scale) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
    }
    const KernelTable &k = active_kernels();

    // Symmetrize so round-off in the input cannot drift.
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    // Rows of `vt` are the columns of V, so plane rotations touch contiguous
    // memory.
    CMatrix vt = CMatrix::identity(n);

    const double total = std::max(a.frobenius_norm(), 1e-300);
    const double eps = 1e-30 * total * total;
    EigenDecomposition out;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm2(a) <= eps) {
            break;
        }
        ++out.sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const Complex phase = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U acts on the (p, q) plane as [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                // with phi = arg(a_pq); A <- U^H A U zeroes a_pq.
                const Complex ph = std::conj(phase);
                const Complex u_pp = c, u_pq = s, u_qp = -s * ph, u_qq = c * ph;
                // Rows p and q of U^H A.
                k.mix2(a.row(p), a.row(q), n, std::conj(u_pp), std::conj(u_qp), std::conj(u_pq), std::conj(u_qq));
                // Columns p and q follow from Hermiticity outside the 2x2 block.
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == p || i == q) {
                        continue;
                    }
                    a(i, p) = std::conj(a(p, i));
                    a(i, q) = std::conj(a(q, i));
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                // V <- V U, stored transposed: rows p, q of V^T mix with U^T.
                k.mix2(vt.row(p), vt.row(q), n, u_pp, u_qp, u_pq, u_qq);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a(src, src).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, col) = vt(src, i);
        }
    }
    return out;
}

double eigen_residual(const CMatrix &m, const EigenDecomposition &eig) {
    const std::size_t n = m.rows();
    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col) {
        double r2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                acc += m(i, j) * eig.vectors(j, col);
            }
            acc -= eig.values[col] * eig.vectors(i, col);
            r2 += std::norm(acc);
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    return worst;
}

CMatrix sqrt_psd(const CMatrix &m) {
    const EigenDecomposition eig = hermitian_eigen(m);
    const std::size_t n = m.rows();
    CMatrix scaled_vecs = eig.vectors;
    for (std::size_t col = 0; col < n; ++col) {
        const double root = std::sqrt(std::max(0.0, eig.values[col]));
        for (std::size_t i = 0; i < n; ++i) {
            scaled_vecs(i, col) *= root;
        }
    }
    return scaled_vecs * eig.vectors.adjoint();
}

}  // namespace symtangle
