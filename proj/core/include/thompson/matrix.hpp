#pragma once

// Dense complex matrices for the representation engines. Two scalar modes:
// std::complex<double> for numeric work and GaussianRational for exact
// checks with Gaussian-rational entries.

#include "thompson/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <vector>

namespace thompson {

using Rational = boost::multiprecision::cpp_rational;

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long long r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline bool is_zero(const GaussianRational& z) { return z.re == 0 && z.im == 0; }
inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }

template <typename Scalar>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }
    const Scalar& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }

    Matrix adjoint() const {
        Matrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(c, r) = conj((*this)(r, c));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw domain_error("matrix dimension mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                if (is_zero(a(r, k))) continue;
                for (int c = 0; c < b.cols_; ++c) m(r, c) = m(r, c) + a(r, k) * b(k, c);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw domain_error("matrix dimension mismatch in sum");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw domain_error("matrix dimension mismatch in difference");
        Matrix m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
        return m;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw domain_error("matrix-vector dimension mismatch");
        std::vector<Scalar> out(static_cast<std::size_t>(rows_), Scalar(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                out[static_cast<std::size_t>(r)] =
                    out[static_cast<std::size_t>(r)] + (*this)(r, c) * v[static_cast<std::size_t>(c)];
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

using ComplexMatrix = Matrix<std::complex<double>>;
using RationalMatrix = Matrix<GaussianRational>;

// Largest entry magnitude of A - B (numeric mode only).
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace thompson
