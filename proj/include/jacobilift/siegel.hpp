// Points of the Siegel upper half plane H_n and of H_{n,m} = H_n x C^(m,n).
#pragma once

#include "jacobilift/linalg.hpp"
#include "jacobilift/matrix.hpp"

namespace jlift {

// Smallest admissible eigenvalue of Im Z; guards the conditioning of the
// Moebius action.
inline constexpr Real kSiegelImMargin = 1e-10L;

class SiegelPoint {
  public:
    // Symmetrizes on construction, then validates Im Z > margin.
    explicit SiegelPoint(const MatC& z) : z_(z.rows(), z.cols()) {
        if (!z.is_square()) throw DimensionError("Siegel point must be square");
        int n = z.rows();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) z_(i, j) = (z(i, j) + z(j, i)) / Real(2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!is_finite(z_(i, j))) throw ValidationError("non-finite Siegel point entry");
        Matrix<Real> im(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) im(i, j) = z_(i, j).imag();
        if (!is_positive_definite_with_margin(im, kSiegelImMargin))
            throw ValidationError("imaginary part of Siegel point is not positive definite");
    }

    // Degree-1 convenience.
    explicit SiegelPoint(Complex z) : SiegelPoint(MatC(1, 1, {z})) {}

    int degree() const { return z_.rows(); }
    const MatC& mat() const { return z_; }
    Complex scalar() const {
        if (degree() != 1) throw DimensionError("scalar() on degree > 1 Siegel point");
        return z_(0, 0);
    }

    Matrix<Real> imag_part() const {
        Matrix<Real> im(degree(), degree());
        for (int i = 0; i < degree(); ++i)
            for (int j = 0; j < degree(); ++j) im(i, j) = z_(i, j).imag();
        return im;
    }

    // Lower bound for lambda_min(Im Z) via bisected Cholesky probes, used by
    // the series tail majorants.
    Real imag_min_eigenvalue_bound() const {
        Matrix<Real> im = imag_part();
        Real hi = 0.0L;
        for (int i = 0; i < degree(); ++i) hi = std::max(hi, im(i, i));
        Real lo = 0.0L;
        for (int it = 0; it < 60 && hi - lo > 1e-12L * (1.0L + hi); ++it) {
            Real mid = (lo + hi) / 2;
            if (is_positive_definite_with_margin(im, mid))
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

  private:
    MatC z_;
};

struct JacobiDomainPoint {
    SiegelPoint z;
    MatC w;  // m x n

    JacobiDomainPoint(SiegelPoint z_in, MatC w_in) : z(std::move(z_in)), w(std::move(w_in)) {
        if (w.cols() != z.degree()) throw DimensionError("W column count must match degree of Z");
        for (int i = 0; i < w.rows(); ++i)
            for (int j = 0; j < w.cols(); ++j)
                if (!is_finite(w(i, j))) throw ValidationError("non-finite W entry");
    }

    int n() const { return z.degree(); }
    int m() const { return w.rows(); }
};

}  // namespace jlift
