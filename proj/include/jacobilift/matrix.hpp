// Dense matrices over an arbitrary scalar ring, row-major.
#pragma once

#include <initializer_list>
#include <vector>

#include "jacobilift/scalar.hpp"

namespace jlift {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, T(0)) {
        if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    }
    Matrix(int rows, int cols, std::initializer_list<T> entries) : Matrix(rows, cols) {
        if (static_cast<std::size_t>(rows) * cols != entries.size())
            throw DimensionError("entry count does not match shape");
        std::size_t i = 0;
        for (const T& v : entries) a_[i++] = v;
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.require_same_shape(y);
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (int j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& x) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }
    Matrix operator-() const { return T(-1) * *this; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const T& v : a_)
            if (!(v == T(0))) return false;
        return true;
    }

    T trace() const {
        if (!is_square()) throw DimensionError("trace of non-square matrix");
        T t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix block(int i0, int j0, int h, int w) const {
        Matrix r(h, w);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < w; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }
    void set_block(int i0, int j0, const Matrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> a_;
};

using MatQ = Matrix<Rational>;
using MatC = Matrix<Complex>;
using MatG = Matrix<GaussRational>;
using MatZ = Matrix<long>;

inline MatC to_complex(const MatQ& m) {
    MatC r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Complex(to_real(m(i, j)), 0.0L);
    return r;
}

inline MatQ to_rational(const MatZ& m) {
    MatQ r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline Real max_abs(const MatC& m) {
    Real v = 0.0L;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

}  // namespace jlift
