#include "symtangle/exact.hpp"

#include <stdexcept>
#include <utility>

namespace symtangle {

GaussRational operator+(const GaussRational &a, const GaussRational &b) {
    return {a.re + b.re, a.im + b.im};
}

GaussRational operator-(const GaussRational &a, const GaussRational &b) {
    return {a.re - b.re, a.im - b.im};
}

GaussRational operator-(const GaussRational &a) { return {-a.re, -a.im}; }

GaussRational operator*(const GaussRational &a, const GaussRational &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRational operator/(const GaussRational &a, const GaussRational &b) {
    Rational d = b.norm();
    if (sgn(d) == 0) {
        throw std::domain_error("division by zero in Q(i)");
    }
    GaussRational num = a * b.conj();
    return {Rational(num.re / d), Rational(num.im / d)};
}

std::string HalfInt::str() const {
    if (twice % 2 == 0) {
        return std::to_string(twice / 2);
    }
    return std::to_string(twice) + "/2";
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = GaussRational(1);
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix &o) const {
    if (cols_ != o.rows_) {
        throw std::invalid_argument("QMatrix product: shape mismatch");
    }
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussRational &a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const GaussRational &b = o(k, j);
                if (!b.is_zero()) {
                    r(i, j) = r(i, j) + a * b;
                }
            }
        }
    }
    return r;
}

GaussRational QMatrix::trace() const {
    GaussRational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t = t + (*this)(i, i);
    }
    return t;
}

bool QMatrix::is_hermitian() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (!((*this)(i, j) == (*this)(j, i).conj())) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Row-reduces in place and returns the rank.
std::size_t eliminate(QMatrix &m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m(pivot, j), m(r, j));
            }
        }
        const GaussRational p = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) {
                continue;
            }
            const GaussRational f = m(i, c) / p;
            for (std::size_t j = c; j < cols; ++j) {
                if (!m(r, j).is_zero()) {
                    m(i, j) = m(i, j) - f * m(r, j);
                }
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

namespace {

// Exact quotient in Z[i]; the caller guarantees divisibility.
GaussInt exact_divide(const GaussInt &a, const GaussInt &b) {
    const Integer d = b.norm();
    const GaussInt num = a * b.conj();
    Integer re, im;
    mpz_divexact(re.get_mpz_t(), num.re.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(im.get_mpz_t(), num.im.get_mpz_t(), d.get_mpz_t());
    return {re, im};
}

}  // namespace

GaussInt determinant(std::vector<GaussInt> m, std::size_t order) {
    if (m.size() != order * order) {
        throw std::invalid_argument("determinant: size mismatch");
    }
    if (order == 0) {
        return GaussInt(1);
    }
    // Fraction-free (Bareiss) elimination keeps intermediate sizes bounded.
    auto at = [&](std::size_t r, std::size_t c) -> GaussInt & { return m[r * order + c]; };
    GaussInt prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < order; ++k) {
        std::size_t pivot = k;
        while (pivot < order && at(pivot, k).is_zero()) {
            ++pivot;
        }
        if (pivot == order) {
            return GaussInt(0);
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < order; ++j) {
                std::swap(at(pivot, j), at(k, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < order; ++i) {
            for (std::size_t j = k + 1; j < order; ++j) {
                at(i, j) = exact_divide(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            }
            at(i, k) = GaussInt(0);
        }
        prev = at(k, k);
    }
    GaussInt det = at(order - 1, order - 1);
    return negate ? -det : det;
}

GaussRational determinant(QMatrix m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    const std::size_t order = m.rows();
    Integer denom = 1;
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), m(i, j).re.get_den_mpz_t());
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), m(i, j).im.get_den_mpz_t());
        }
    }
    std::vector<GaussInt> scaled(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            const GaussRational &v = m(i, j);
            Rational re = v.re * denom;
            Rational im = v.im * denom;
            scaled[i * order + j] = GaussInt(re.get_num(), im.get_num());
        }
    }
    const GaussInt det = determinant(std::move(scaled), order);
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), denom.get_mpz_t(), order);
    Rational re(det.re, scale);
    Rational im(det.im, scale);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

std::size_t rank(QMatrix m) { return eliminate(m); }

std::optional<Integer> exact_sqrt(const Integer &v) {
    if (sgn(v) < 0) {
        return std::nullopt;
    }
    Integer root = sqrt(v);
    if (root * root == v) {
        return root;
    }
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational &v) {
    auto n = exact_sqrt(Integer(v.get_num()));
    auto d = exact_sqrt(Integer(v.get_den()));
    if (!n || !d) {
        return std::nullopt;
    }
    Rational r(*n, *d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(const GaussRational &z) {
    std::string s = z.re.get_str();
    if (sgn(z.im) >= 0) {
        s += "+";
    }
    s += z.im.get_str() + "j";
    return s;
}

Rational parse_rational(const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational");
    }
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digits = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/' && !seen_slash && digits) {
            seen_slash = true;
            digits = false;
        } else if (ch >= '0' && ch <= '9') {
            digits = true;
        } else {
            throw std::invalid_argument("malformed rational: " + text);
        }
    }
    if (!digits) {
        throw std::invalid_argument("malformed rational: " + text);
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q(body, 10);
    if (sgn(q.get_den()) == 0) {
        throw std::invalid_argument("zero denominator: " + text);
    }
    q.canonicalize();
    return q;
}

}  // namespace symtangle
