#ifndef RMT_SU1N_HPP
#define RMT_SU1N_HPP

#include "rmt/profile.hpp"
#include "rmt/special.hpp"
#include "rmt/types.hpp"

#include <functional>
#include <random>
#include <vector>

namespace rmt {

struct ChiParam {
    int n; // complex hyperbolic dimension parameter, >= 2
    int l; // character index, |l| < n
    ChiParam(int n_, int l_) : n(n_), l(l_) {
        if (n < 2) throw DomainError("ChiParam: n >= 2 required");
        if (std::abs(l) >= n) throw DomainError("ChiParam: |l| < n required");
    }
    int abs_l() const { return std::abs(l); }
};

struct RootData {
    int m_beta;        // 2(n-1)
    int m_2beta;       // 1
    int rho;           // n
    int m_plus_beta;   // 2(n-1) - 2|l|
    int m_plus_2beta;  // 1 + 2|l|
    int rho_plus;      // n + |l|
};
RootData structure_constants(int n, int l);

// c-function in Gamma form for arbitrary even-multiplicity pair (m_beta, m_2beta)
Cx c_fn(Cx lambda, double m_beta, double m_2beta);

// 1 / ( c(lambda, m_plus(l)) c(-lambda, m_plus(l)) ) via the Gamma quotient
Cx c_product_inv(Cx lambda, int n, int l);

// factorization 1/(c c~) = gamma * p(lambda) * q(lambda)
struct CProductParts {
    double gamma;
    int lambda_power;              // 1 or 3
    std::vector<double> roots_sq;  // factors (lambda^2 - r^2)
    bool q_is_tan;                 // else cot
};
CProductParts gamma_pq(int n, int l);
Cx eval_c_parts(const CProductParts& parts, Cx lambda);
// polynomial part p(lambda) alone
Cx eval_p(const CProductParts& parts, Cx lambda);

// dimension of the chi_l-spherical representation indexed by m, via the
// c-function ratio with alpha anchored at m = 0
double dim_chi_l(int n, int l, int m);
// independent oracle: Weyl dimension formula for SU(n+1) with highest weight
// (m+|l|, 0, ..., 0, -m)
long weyl_dim_oracle(int n, int l, int m);

// ---------------------------------------------------------------------------
// group-level pieces

// dense (n+1)x(n+1) complex matrix
struct MatC {
    int n = 0; // side
    std::vector<Cx> a;
    MatC() = default;
    explicit MatC(int side) : n(side), a(side * side, Cx(0, 0)) {}
    Cx& at(int i, int j) { return a[i * n + j]; }
    const Cx& at(int i, int j) const { return a[i * n + j]; }
    static MatC eye(int side);
    MatC operator*(const MatC& o) const;
    MatC adjoint() const;
    double dist(const MatC& o) const;
};

MatC su1n_cartan(int n, double t);                       // exp(tH), boost in coords (0, n)
MatC su1n_embed_k(const MatC& U);                        // diag((det U)^{-1}, U)
MatC su1n_nilpotent(int n, const std::vector<Cx>& w, double s); // exp of g_beta(w) + g_{2beta}(s)
MatC haar_unitary(int n, std::mt19937_64& rng);

struct IwasawaSU1n {
    double eH;    // e^{H(x)}
    Cx chi1;      // chi_1(K(x)) = det-part of the K component
};
IwasawaSU1n iwasawa_su1n(const MatC& x); // x in SU(1,n), light-cone recipe

// candidate closed form (validated against the K-integral oracle):
//   phi_{lambda,l}(a_t) = (cosh t)^{|l|} phi_lambda^{(n-1,|l|)}(t)
Cx phi_chi_l(Cx lambda, const ChiParam& par, Cx t);

// K-integral oracle, reduced to the joint law of (det U, last column entry):
// 3-dimensional quadrature over (det phase, |u_n|, arg u_n); t real, moderate
Cx phi_chi_l_oracle(Cx lambda, const ChiParam& par, double t, int n_angle = 64, int n_radial = 48);

// spherical transform / inversion for chi_l-radial profiles
Cx transform_chi_l(const RadialProfile& f, const ChiParam& par, Cx lambda);
std::vector<Cx> transform_chi_l_batch(const RadialProfile& f, const ChiParam& par,
                                      const std::vector<Cx>& lambdas, double tol = 1e-8);
Cx invert_chi_l(const std::function<Cx(double)>& fhat, double y_max, const ChiParam& par,
                double t, double tol = 1e-8);

// single calibrated constant in the inversion prefactor
//   C_inv(n,l) = kappa0 * 2^{2n+2|l|-1} / (4 pi),
// kappa0 fixed once by the l = 0 round-trip and frozen
double su1n_inversion_kappa0();
double su1n_inversion_prefactor(const ChiParam& par);

} // namespace rmt

#endif
