// Symplectic, Heisenberg and Jacobi group elements with exact rational
// entries, and their actions on H_n and H_{n,m}.
#pragma once

#include <vector>

#include "jacobilift/siegel.hpp"

namespace jlift {

// J_n = [[0, E],[-E, 0]].
MatQ symplectic_form(int n);

// Exact test of  tM J_n M = J_n.
bool symplectic_check(const MatQ& m);

class SymplecticElement {
  public:
    // Validates the symplectic relation exactly.
    explicit SymplecticElement(MatQ m);

    static SymplecticElement identity(int n);
    // Standard generators of Sp(n,Z): translation by a symmetric integral B,
    // the inversion J_n, and GL(n,Z) block rotations.
    static SymplecticElement translation(const MatQ& b);
    static SymplecticElement inversion(int n);
    static SymplecticElement gl_embed(const MatQ& u);

    int degree() const { return n_; }
    const MatQ& mat() const { return m_; }
    MatQ block_a() const { return m_.block(0, 0, n_, n_); }
    MatQ block_b() const { return m_.block(0, n_, n_, n_); }
    MatQ block_c() const { return m_.block(n_, 0, n_, n_); }
    MatQ block_d() const { return m_.block(n_, n_, n_, n_); }

    SymplecticElement inverse() const;
    friend SymplecticElement operator*(const SymplecticElement& x, const SymplecticElement& y);
    friend bool operator==(const SymplecticElement& x, const SymplecticElement& y) {
        return x.m_ == y.m_;
    }

  private:
    MatQ m_;
    int n_;
};

class HeisenbergElement {
  public:
    // (lambda, mu, kappa) with kappa + mu t(lambda) symmetric; this is exactly
    // the condition under which the parabolic embedding is symplectic.
    HeisenbergElement(MatQ lambda, MatQ mu, MatQ kappa);

    static HeisenbergElement zero(int n, int m);

    int n() const { return lambda_.cols(); }
    int m() const { return lambda_.rows(); }
    const MatQ& lambda() const { return lambda_; }
    const MatQ& mu() const { return mu_; }
    const MatQ& kappa() const { return kappa_; }

    bool is_integral() const;

  private:
    MatQ lambda_, mu_, kappa_;
};

struct JacobiElement {
    SymplecticElement m;
    HeisenbergElement h;

    JacobiElement(SymplecticElement m_in, HeisenbergElement h_in);

    static JacobiElement identity(int n, int m);
    int n() const { return m.degree(); }
    int heis_m() const { return h.m(); }

    JacobiElement inverse() const;
};

// Semidirect product law:  (M,(l,u,k)) (M',(l',u',k')) =
// (MM', (lt+l', ut+u', k+k'+lt t(u') - ut t(l')))  with (lt,ut) = (l,u) M'.
JacobiElement jacobi_mul(const JacobiElement& g, const JacobiElement& gp);

// M<Z> = (AZ+B)(CZ+D)^{-1}, re-symmetrized and revalidated.
SiegelPoint siegel_action(const SymplecticElement& m, const SiegelPoint& z);

// CZ + D at a point, as a complex matrix.
MatC denominator_matrix(const SymplecticElement& m, const SiegelPoint& z);

// (3.1):  g (Z,W) = (M<Z>, (W + lambda Z + mu)(CZ+D)^{-1}).
JacobiDomainPoint jacobi_action(const JacobiElement& g, const JacobiDomainPoint& p);

}  // namespace jlift
