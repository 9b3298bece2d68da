#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdssdc {

/// Complex number with exact rational real and imaginary parts.
/// mpq_class keeps every fraction reduced with a positive denominator,
/// so equality and zero tests are exact.
class ExactComplex {
public:
    ExactComplex() : re_(0), im_(0) {}
    ExactComplex(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex rational(long num, long den);
    static ExactComplex make(long re_num, long re_den, long im_num, long im_den);
    static ExactComplex i();  // sqrt(-1)

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ExactComplex conj() const { return {re_, -im_}; }
    ExactComplex operator-() const { return {-re_, -im_}; }
    ExactComplex operator+(const ExactComplex& o) const { return {re_ + o.re_, im_ + o.im_}; }
    ExactComplex operator-(const ExactComplex& o) const { return {re_ - o.re_, im_ - o.im_}; }
    ExactComplex operator*(const ExactComplex& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    ExactComplex& operator+=(const ExactComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }

    /// |z|^2 as an exact rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    ExactComplex operator/(const ExactComplex& o) const;

    bool operator==(const ExactComplex& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const ExactComplex& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Canonical string form used by the CodeSpec JSON schema:
    /// "0", "1", "-j", "1/2-1/2*j", "3/4*j", ...
    std::string str() const;
    static ExactComplex parse(const std::string& s);

private:
    mpq_class re_, im_;
};

inline ExactComplex operator*(const mpq_class& q, const ExactComplex& z) {
    return ExactComplex(q * z.re(), q * z.im());
}

/// Dense matrix over ExactComplex, row-major. Sizes here stay tiny
/// (N, K <= 12ish, T <= 50ish), so density with zero-skipping in the
/// products is plenty fast.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ExactComplex& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const ExactComplex& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_identity() const;
    int nonzero_count() const;
    bool is_row_monomial() const;     // at most one nonzero per row
    bool is_column_monomial() const;  // at most one nonzero per column

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix conj_transpose() const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix scaled(const ExactComplex& s) const;

    /// Exact rank via Gaussian elimination over the rational complex field.
    int rank() const;

    /// Exact inverse (throws std::invalid_argument when singular).
    ExactMatrix inverse() const;

    std::vector<std::complex<double>> to_complex_rowmajor() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<ExactComplex> a_;
};

/// Kronecker product, exact: (a ⊗ b)[i1*br+i2, j1*bc+j2] = a[i1,j1]*b[i2,j2].
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace pdssdc
