// Scalar types: exact rationals / Gaussian rationals for group and polynomial
// algebra, extended-precision complex for series evaluation.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace jlift {

using Rational = mpq_class;
using Real = long double;
using Complex = std::complex<Real>;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TailBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" (or plain "p"); denominator is normalized positive.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ValidationError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Correctly rounded enough for our matrix sizes: integers below 2^64 convert
// exactly, larger ones lose only trailing bits per limb step.
inline Real to_real(const mpz_class& z) {
    const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
    std::size_t n = mpz_size(z.get_mpz_t());
    Real acc = 0.0L;
    const Real base = std::ldexp(1.0L, GMP_NUMB_BITS);
    for (std::size_t i = n; i-- > 0;) acc = acc * base + static_cast<Real>(limbs[i]);
    return mpz_sgn(z.get_mpz_t()) < 0 ? -acc : acc;
}

inline Real to_real(const Rational& q) {
    return to_real(q.get_num()) / to_real(q.get_den());
}

// Coefficient field Q(i) for the polynomial layer.  The 2*pi*i factors of the
// analytic formulas enter only at evaluation time.
struct GaussRational {
    Rational re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(long r) : re(r), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational conj() const { return {re, -im}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw ValidationError("division by zero Gaussian rational");
        GaussRational num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline Complex to_complex(const GaussRational& g) {
    return Complex(to_real(g.re), to_real(g.im));
}

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace jlift
