#pragma once

// Exact arithmetic for the integer/rational lane: Gaussian integers, Gaussian
// rationals, half-integers, and dense matrices over Q(i).

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symtangle {

using Integer = mpz_class;
using Rational = mpq_class;

/// a + b i with a, b in Z.
struct GaussInt {
    Integer re{0};
    Integer im{0};

    GaussInt() = default;
    GaussInt(long v) : re(v), im(0) {}
    GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussInt conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    GaussInt &operator+=(const GaussInt &o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt &operator-=(const GaussInt &o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussInt &operator*=(const Integer &k) {
        re *= k;
        im *= k;
        return *this;
    }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussInt operator+(GaussInt a, const GaussInt &b) { return a += b; }
inline GaussInt operator-(GaussInt a, const GaussInt &b) { return a -= b; }
inline GaussInt operator-(const GaussInt &a) { return {-a.re, -a.im}; }
inline GaussInt operator*(const GaussInt &a, const GaussInt &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussInt operator*(GaussInt a, const Integer &k) { return a *= k; }
inline bool operator==(const GaussInt &a, const GaussInt &b) { return a.re == b.re && a.im == b.im; }

/// a + b i with a, b in Q.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(long v) : re(v), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(const GaussInt &g) : re(g.re), im(g.im) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

GaussRational operator+(const GaussRational &a, const GaussRational &b);
GaussRational operator-(const GaussRational &a, const GaussRational &b);
GaussRational operator-(const GaussRational &a);
GaussRational operator*(const GaussRational &a, const GaussRational &b);
GaussRational operator/(const GaussRational &a, const GaussRational &b);
inline bool operator==(const GaussRational &a, const GaussRational &b) {
    return a.re == b.re && a.im == b.im;
}

/// Multiple of 1/2; used for spin quantum numbers.
struct HalfInt {
    long twice = 0;

    static HalfInt from_twice(long t) { return HalfInt{t}; }
    double value() const { return static_cast<double>(twice) / 2.0; }
    std::string str() const;
    friend bool operator==(HalfInt, HalfInt) = default;
};

/// Dense row-major matrix over Q(i).
class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussRational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussRational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix operator*(const QMatrix &o) const;
    bool operator==(const QMatrix &o) const = default;

    GaussRational trace() const;
    bool is_hermitian() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRational> data_;
};

/// Exact determinant of a row-major Gaussian-integer matrix of the given order.
GaussInt determinant(std::vector<GaussInt> m, std::size_t order);

/// Exact determinant over Q(i) (cleared to a common denominator first).
GaussRational determinant(QMatrix m);

/// Exact rank by Gaussian elimination over Q(i).
std::size_t rank(QMatrix m);

/// Integer square root if `v` is a perfect square.
std::optional<Integer> exact_sqrt(const Integer &v);

/// Rational square root if both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational &v);

std::string to_string(const Rational &q);
std::string to_string(const GaussRational &z);

/// Parses "p", "-p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string &text);

}  // namespace symtangle
