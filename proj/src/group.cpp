#include "jacobilift/group.hpp"

namespace jlift {

MatQ symplectic_form(int n) {
    MatQ j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

bool symplectic_check(const MatQ& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw DimensionError("symplectic check needs a square matrix of even size");
    int n = m.rows() / 2;
    MatQ j = symplectic_form(n);
    return m.transpose() * j * m == j;
}

SymplecticElement::SymplecticElement(MatQ m) : m_(std::move(m)) {
    if (!symplectic_check(m_)) throw ValidationError("matrix is not symplectic");
    n_ = m_.rows() / 2;
}

SymplecticElement SymplecticElement::identity(int n) {
    return SymplecticElement(MatQ::identity(2 * n));
}

SymplecticElement SymplecticElement::translation(const MatQ& b) {
    if (!b.is_symmetric()) throw ValidationError("translation block must be symmetric");
    int n = b.rows();
    MatQ m = MatQ::identity(2 * n);
    m.set_block(0, n, b);
    return SymplecticElement(std::move(m));
}

SymplecticElement SymplecticElement::inversion(int n) {
    return SymplecticElement(symplectic_form(n));
}

SymplecticElement SymplecticElement::gl_embed(const MatQ& u) {
    if (!u.is_square()) throw DimensionError("gl_embed needs a square block");
    int n = u.rows();
    MatQ m(2 * n, 2 * n);
    m.set_block(0, 0, u);
    m.set_block(n, n, inverse(u).transpose());
    return SymplecticElement(std::move(m));
}

SymplecticElement SymplecticElement::inverse() const {
    // M^{-1} = J^{-1} tM J for symplectic M.
    MatQ j = symplectic_form(n_);
    return SymplecticElement(-j * m_.transpose() * j);
}

SymplecticElement operator*(const SymplecticElement& x, const SymplecticElement& y) {
    if (x.n_ != y.n_) throw DimensionError("symplectic degree mismatch");
    return SymplecticElement(x.m_ * y.m_);
}

HeisenbergElement::HeisenbergElement(MatQ lambda, MatQ mu, MatQ kappa)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), kappa_(std::move(kappa)) {
    if (mu_.rows() != lambda_.rows() || mu_.cols() != lambda_.cols())
        throw DimensionError("lambda and mu must have equal shape");
    if (kappa_.rows() != lambda_.rows() || kappa_.cols() != lambda_.rows())
        throw DimensionError("kappa must be m x m");
    if (!(kappa_ + mu_ * lambda_.transpose()).is_symmetric())
        throw ValidationError("kappa + mu t(lambda) must be symmetric");
}

HeisenbergElement HeisenbergElement::zero(int n, int m) {
    return HeisenbergElement(MatQ(m, n), MatQ(m, n), MatQ(m, m));
}

bool HeisenbergElement::is_integral() const {
    auto integral = [](const MatQ& a) {
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j).get_den() != 1) return false;
        return true;
    };
    return integral(lambda_) && integral(mu_) && integral(kappa_);
}

JacobiElement::JacobiElement(SymplecticElement m_in, HeisenbergElement h_in)
    : m(std::move(m_in)), h(std::move(h_in)) {
    if (m.degree() != h.n()) throw DimensionError("symplectic/Heisenberg degree mismatch");
}

JacobiElement JacobiElement::identity(int n, int m) {
    return JacobiElement(SymplecticElement::identity(n), HeisenbergElement::zero(n, m));
}

JacobiElement JacobiElement::inverse() const {
    SymplecticElement mi = m.inverse();
    MatQ lt = h.lambda() * mi.block_a() + h.mu() * mi.block_c();
    MatQ ut = h.lambda() * mi.block_b() + h.mu() * mi.block_d();
    MatQ kappa = -h.kappa() + lt * ut.transpose() - ut * lt.transpose();
    return JacobiElement(std::move(mi), HeisenbergElement(-lt, -ut, std::move(kappa)));
}

JacobiElement jacobi_mul(const JacobiElement& g, const JacobiElement& gp) {
    if (g.n() != gp.n() || g.heis_m() != gp.heis_m())
        throw DimensionError("Jacobi element (n,m) mismatch");
    const SymplecticElement& mp = gp.m;
    MatQ lt = g.h.lambda() * mp.block_a() + g.h.mu() * mp.block_c();
    MatQ ut = g.h.lambda() * mp.block_b() + g.h.mu() * mp.block_d();
    MatQ kappa = g.h.kappa() + gp.h.kappa() + lt * gp.h.mu().transpose() -
                 ut * gp.h.lambda().transpose();
    return JacobiElement(g.m * gp.m,
                         HeisenbergElement(lt + gp.h.lambda(), ut + gp.h.mu(), std::move(kappa)));
}

MatC denominator_matrix(const SymplecticElement& m, const SiegelPoint& z) {
    if (m.degree() != z.degree()) throw DimensionError("degree mismatch in CZ+D");
    return to_complex(m.block_c()) * z.mat() + to_complex(m.block_d());
}

SiegelPoint siegel_action(const SymplecticElement& m, const SiegelPoint& z) {
    MatC num = to_complex(m.block_a()) * z.mat() + to_complex(m.block_b());
    MatC den = denominator_matrix(m, z);
    return SiegelPoint(num * inverse(den));
}

JacobiDomainPoint jacobi_action(const JacobiElement& g, const JacobiDomainPoint& p) {
    if (g.n() != p.n() || g.heis_m() != p.m())
        throw DimensionError("Jacobi action (n,m) mismatch");
    MatC den_inv = inverse(denominator_matrix(g.m, p.z));
    MatC w = (p.w + to_complex(g.h.lambda()) * p.z.mat() + to_complex(g.h.mu())) * den_inv;
    return JacobiDomainPoint(siegel_action(g.m, p.z), std::move(w));
}

}  // namespace jlift
