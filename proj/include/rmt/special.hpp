#ifndef RMT_SPECIAL_HPP
#define RMT_SPECIAL_HPP

#include "rmt/types.hpp"

#include <vector>

namespace rmt {

// Principal-branch log Gamma on C minus the poles {0,-1,-2,...}.
// Lanczos rational approximation, reflection for Re z < 1/2.
Cx log_gamma(Cx z);

inline Cx gamma_fn(Cx z) { return std::exp(log_gamma(z)); }

// log(sin z) without overflow for large |Im z|
Cx log_sin(Cx z);

// Gauss hypergeometric 2F1(a,b;c;z).
// Direct series for small |z|, Pfaff transformation z -> z/(z-1) otherwise.
// Supported region: z on or near the ray (-inf, 0] (distance <= ~0.5).
Cx hyp2f1(Cx a, Cx b, Cx c, Cx z);

struct JacobiParams {
    double alpha;
    double beta;
    JacobiParams(double a, double b) : alpha(a), beta(b) {
        if (a < -0.5 || b < -0.5) throw DomainError("JacobiParams: need alpha,beta >= -1/2");
    }
    double rho() const { return alpha + beta + 1.0; }
};

// Jacobi function phi_lambda^{(alpha,beta)}(t)
//   = 2F1((rho-lambda)/2, (rho+lambda)/2; alpha+1; -sinh^2 t),  rho = alpha+beta+1,
// on the strip |Im t| <= 0.3.  Even in lambda, equals 1 at t = 0.
// Hypergeometric series for small |Re t|, exponential-series expansion for large.
Cx jacobi_phi(const JacobiParams& p, Cx lambda, Cx t);

// Expansion of the Jacobi function around t = +infinity:
//   phi_lambda = c(lambda) Phi_lambda + c(-lambda) Phi_{-lambda},
//   Phi_lambda(t) = e^{(lambda-rho)t} sum_k G_k(lambda) e^{-2kt}.
// Coefficients are cached per (params, lambda); evaluation is cheap per t.
class JacobiAsymptotic {
public:
    JacobiAsymptotic(const JacobiParams& p, Cx lambda, int max_terms = 220);
    // Exact limit at a positive integer k where c(k) = 0 (the discrete-series
    // points): the growing branch degenerates to the residues of G_j.
    static JacobiAsymptotic resonant_zero(const JacobiParams& p, long k, int max_terms = 220);
    // valid for Re t >= ~0.25 (series in e^{-2t}); throws AccuracyError otherwise
    Cx eval(Cx t) const;
    bool usable() const { return usable_; }

private:
    JacobiAsymptotic(const JacobiParams& p, Cx lambda, int max_terms, bool resonant);
    JacobiParams p_;
    Cx lambda_;
    std::vector<Cx> coef_plus_;   // G_k(lambda)
    std::vector<Cx> coef_minus_;  // G_k(-lambda)
    Cx c_plus_, c_minus_;         // Harish-Chandra c(lambda), c(-lambda)
    bool usable_ = true;

    static std::vector<Cx> expansion_coeffs(const JacobiParams& p, Cx lambda, int K);
    // regular values G_j(k) for j < k and residues Res_{lambda=k} G_j for j >= k
    static std::vector<Cx> expansion_residues(const JacobiParams& p, long k, int K);
};

// Harish-Chandra c-function for the (alpha,beta) Jacobi system,
//   c(lambda) = 2^{rho-lambda} Gamma(alpha+1) Gamma(lambda)
//               / ( Gamma((lambda+rho)/2) Gamma((lambda-rho)/2 + alpha + 1) ).
// Finite 0/0 limits at integer points are evaluated exactly.
Cx jacobi_c(const JacobiParams& p, Cx lambda);

// Large-t evaluator that also covers integer spectral parameters, where the
// two-branch expansion degenerates (resonance): those are computed as the
// symmetric average over lambda = k +- eps, bias O(eps^2).
class JacobiEval {
public:
    JacobiEval(const JacobiParams& p, Cx lambda, int max_terms = 220);
    bool usable() const;
    Cx eval(Cx t) const;

private:
    std::vector<JacobiAsymptotic> legs_;
};

} // namespace rmt

#endif
