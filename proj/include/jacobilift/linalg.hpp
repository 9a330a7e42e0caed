// Dense elimination over exact fields (Rational, GaussRational) and over
// Complex.  Exact paths never make rank decisions in floating point.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jacobilift/matrix.hpp"

namespace jlift {

namespace detail {

// Pivot quality: exact fields only distinguish zero/nonzero, complex pivots
// by magnitude (partial pivoting).
inline bool better_pivot(const Rational& cand, const Rational& cur) {
    return cur == 0 && cand != 0;
}
inline bool better_pivot(const GaussRational& cand, const GaussRational& cur) {
    return cur.is_zero() && !cand.is_zero();
}
inline bool better_pivot(const Complex& cand, const Complex& cur) {
    return std::abs(cand) > std::abs(cur);
}

inline bool entry_is_zero(const Rational& v) { return v == 0; }
inline bool entry_is_zero(const GaussRational& v) { return v.is_zero(); }
inline bool entry_is_zero(const Complex& v) { return v == Complex(0, 0); }

}  // namespace detail

// Gauss-Jordan with pivot search; returns (rref, pivot columns, row permutation sign-free).
template <class T>
struct RrefResult {
    Matrix<T> mat;
    std::vector<int> pivot_cols;
    std::vector<int> pivot_rows;  // row in rref holding each pivot, in pivot order
};

template <class T>
RrefResult<T> rref(Matrix<T> m) {
    RrefResult<T> out{Matrix<T>(0, 0), {}, {}};
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int best = r;
        for (int i = r; i < m.rows(); ++i)
            if (detail::better_pivot(m(i, c), m(best, c))) best = i;
        if (detail::entry_is_zero(m(best, c))) continue;
        if (best != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || detail::entry_is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        out.pivot_rows.push_back(r);
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

// Kernel basis of m (as columns of the domain), reduced-echelon convention:
// one vector per free column, unit coefficient there.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    RrefResult<T> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = T(0) - r.mat(r.pivot_rows[p], f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
int rank(const Matrix<T>& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
    int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<T>::identity(n));
    RrefResult<T> r = rref(std::move(aug));
    if (static_cast<int>(r.pivot_cols.size()) != n || r.pivot_cols.back() != n - 1)
        throw SingularMatrixError("matrix is singular");
    return r.mat.block(0, n, n, n);
}

template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    int n = m.rows();
    T det(1);
    for (int c = 0; c < n; ++c) {
        int best = c;
        for (int i = c; i < n; ++i)
            if (detail::better_pivot(m(i, c), m(best, c))) best = i;
        if (detail::entry_is_zero(m(best, c))) return T(0);
        if (best != c) {
            for (int j = 0; j < n; ++j) std::swap(m(best, j), m(c, j));
            det = T(0) - det;
        }
        det = det * m(c, c);
        T inv = T(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (detail::entry_is_zero(m(i, c))) continue;
            T f = inv * m(i, c);
            for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

// Solve m x = b for square invertible m.
template <class T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& b) {
    if (!m.is_square() || m.rows() != static_cast<int>(b.size()))
        throw DimensionError("solve shape mismatch");
    int n = m.rows();
    Matrix<T> aug(n, n + 1);
    aug.set_block(0, 0, m);
    for (int i = 0; i < n; ++i) aug(i, n) = b[i];
    RrefResult<T> r = rref(std::move(aug));
    if (static_cast<int>(r.pivot_cols.size()) != n || r.pivot_cols.back() != n - 1)
        throw SingularMatrixError("singular system");
    std::vector<T> x(n);
    for (int i = 0; i < n; ++i) x[i] = r.mat(i, n);
    return x;
}

// Exact positive semidefiniteness over Q.  Pivoted LDL^t by Schur
// complements; a zero diagonal entry forces its whole row to vanish.
inline bool psd_check_exact(MatQ a) {
    if (!a.is_square()) throw DimensionError("psd check needs a square matrix");
    if (!a.is_symmetric()) throw ValidationError("psd check needs a symmetric matrix");
    int n = a.rows();
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) { p = i; break; }
        if (p == -1) {
            // All remaining diagonal entries vanish: PSD iff nothing is left.
            for (int i = 0; i < n; ++i)
                if (!done[i])
                    for (int j = 0; j < n; ++j)
                        if (!done[j] && a(i, j) != 0) return false;
            return true;
        }
        if (a(p, p) < 0) return false;
        Rational inv = 1 / a(p, p);
        std::vector<Rational> prow(n);
        for (int j = 0; j < n; ++j) prow[j] = a(p, j);
        for (int i = 0; i < n; ++i) {
            if (done[i] || i == p || a(i, p) == 0) continue;
            Rational f = a(i, p) * inv;
            for (int j = 0; j < n; ++j)
                if (!done[j] && j != p) a(i, j) -= f * prow[j];
        }
        for (int i = 0; i < n; ++i) {
            a(i, p) = 0;
            a(p, i) = 0;
        }
        done[p] = true;
    }
    return true;
}

inline bool is_positive_definite_exact(const MatQ& a) {
    if (!a.is_square()) throw DimensionError("pd check needs a square matrix");
    if (!a.is_symmetric()) throw ValidationError("pd check needs a symmetric matrix");
    MatQ m = a;
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        if (m(c, c) <= 0) return false;
        Rational inv = 1 / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return true;
}

// Exact LDL^t of a positive definite rational matrix: A = L D L^t with L unit
// lower triangular.  Throws if A is not positive definite.
struct LdltQ {
    MatQ l;
    std::vector<Rational> d;
};

inline LdltQ ldlt_exact(const MatQ& a) {
    if (!a.is_square() || !a.is_symmetric())
        throw ValidationError("ldlt needs a symmetric square matrix");
    int n = a.rows();
    MatQ m = a;
    LdltQ out{MatQ::identity(n), std::vector<Rational>(n)};
    for (int c = 0; c < n; ++c) {
        if (m(c, c) <= 0) throw ValidationError("ldlt: matrix is not positive definite");
        out.d[c] = m(c, c);
        Rational inv = 1 / m(c, c);
        for (int i = c + 1; i < n; ++i) out.l(i, c) = m(i, c) * inv;
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (int j = c + 1; j <= i; ++j) {
                m(i, j) -= f * m(c, j);
                m(j, i) = m(i, j);
            }
        }
    }
    return out;
}

// Real symmetric positive definiteness with margin: true iff a - margin*I
// admits a Cholesky factorization, i.e. lambda_min(a) > margin.
inline bool is_positive_definite_with_margin(Matrix<Real> m, Real margin) {
    int n = m.rows();
    for (int i = 0; i < n; ++i) m(i, i) -= margin;
    for (int c = 0; c < n; ++c) {
        if (!(m(c, c) > 0.0L)) return false;
        Real piv = m(c, c);
        for (int i = c + 1; i < n; ++i) {
            Real f = m(i, c) / piv;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return true;
}

}  // namespace jlift
