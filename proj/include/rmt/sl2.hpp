#ifndef RMT_SL2_HPP
#define RMT_SL2_HPP

#include "rmt/profile.hpp"
#include "rmt/special.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/su2.hpp"
#include "rmt/types.hpp"

#include <vector>

namespace rmt {

enum class Parity { even, odd };

struct KTypeSL2 {
    int n;
    explicit KTypeSL2(int n_) : n(n_) {}
    Parity sigma() const { return (n % 2 == 0) ? Parity::even : Parity::odd; }
};

inline Parity parity_of(int n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

// L_sigma^{n,n} = { k of opposite parity : 0 < k < n or n < k < 0 }
std::vector<int> discrete_spectrum(int n);

struct CartanPoint {
    double t;
    double s; // the point a_{t+is}; working strip |s| <= 0.3
    CartanPoint(double t_, double s_ = 0.0) : t(t_), s(s_) {
        if (std::abs(s) > 0.3 + 1e-12) throw DomainError("CartanPoint: |s| > 0.3");
    }
    Cx z() const { return Cx(t, s); }
};

struct IwasawaSL2 {
    double theta, t, xi;
};

// x = k_theta a_t n_xi for real unimodular x
IwasawaSL2 iwasawa_sl2(const Mat2& x);

// Principal-series matrix coefficient Phi_{sigma,lambda}^{n,n}(a_{t+is}),
// evaluated by the reduced K-integral
//   (1/2pi) int_0^{2pi} (cosh z - sinh z e^{i phi})^n (cosh 2z - sinh 2z cos phi)^{-(lambda+1+n)/2} dphi
// for n >= 0 (z = t+is), and by conjugation symmetry for n < 0.
Cx phi_nn(Cx lambda, int n, const CartanPoint& p);

// Shared-node evaluation table for many lambda at a fixed (n, point).  The
// node set is refined adaptively for lambda_ref; each evaluation still
// carries its own embedded Gauss/Kronrod error estimate.
class PhiTable {
public:
    PhiTable(int n, const CartanPoint& p, Cx lambda_ref, double tol = 1e-11);
    Cx eval(Cx lambda) const; // throws AccuracyError if the embedded error is too large
    int n() const { return n_; }

private:
    struct Node {
        double wk, wg; // Kronrod / Gauss weight (wg = 0 off the G7 subset)
        Cx afac;       // A(phi)^n  (or substituted-variable prefactor)
        Cx lnR2;       // log(cosh 2z - sinh 2z cos phi)
    };
    int n_;
    bool conj_mode_ = false; // n < 0: evaluate with conjugated inputs
    double tol_;
    std::vector<Node> nodes_;
    void build_direct(Cx z, Cx lambda_ref);
    void build_substituted(Cx z, Cx lambda_ref);
};

// Cheap per-t evaluator of Phi_{sigma,lambda}^{n,n}(a_t) for t away from 0,
// through the exponential expansion around t = +infinity; cross-validated
// against the K-integral once per process.  Valid for t >= 0.5.
class PhiAsymptotic {
public:
    PhiAsymptotic(int n, Cx lambda);
    bool usable() const { return je_.usable(); }
    Cx eval(double t) const;

private:
    int an_;
    bool conj_;
    JacobiEval je_;
};

// Candidate closed forms for Phi in terms of a single 2F1, used only by the
// parameter-resolution experiment.
enum class PhiHypMapping {
    repeated_param,   // cosh^{2n} 2F1(n+(1-l)/2, n+(1-l)/2; 1; -sinh^2 t)
    split_param,      // cosh^{2n} 2F1(n+(1-l)/2, n+(1+l)/2; 1; -sinh^2 t)
    half_shift,       // cosh^{n}  2F1((n+1-l)/2, (n+1+l)/2; 1; -sinh^2 t)
    a_shift           // cosh^{2n} 2F1((n+1-l)/2, (n+1+l)/2; n+1; -sinh^2 t)
};
Cx phi_nn_hyp(Cx lambda, int n, double t, PhiHypMapping mapping);
const char* phi_hyp_mapping_name(PhiHypMapping m);

// Discrete-series coefficient Psi_k^{n,n}(a_t) = Phi_{sigma,|k|}^{n,n}(a_t), k in L
Cx psi_disc(int k, int n, double t);

// Plancherel density mu(sigma, lambda)
Cx plancherel_mu(Parity sigma, Cx lambda);

// spherical transform against the principal series / discrete series
Cx transform_H(const RadialProfile& f, int n, Cx lambda);
Cx transform_B(const RadialProfile& f, int n, int k);

// batched version sharing Phi tables across the lambda list
std::vector<Cx> transform_H_batch(const RadialProfile& f, int n, const std::vector<Cx>& lambdas,
                                  double tol = 1e-9);

// Inversion: kappa * [ (1/4pi^2) int_{iR} fH(lambda) Phi mu dlambda
//                      + (1/2pi) sum_{k in L} fB(k) Psi_k |k| ].
// fH is supplied as a callable on the imaginary axis (argument y, lambda = iy)
// together with a truncation height; fB holds values indexed like discrete_spectrum(n).
Cx invert(const std::function<Cx(double)>& fH, double y_max, const std::vector<Cx>& fB, int n,
          double t, double tol = 1e-9);

// Haar-normalization calibration for the inversion constants, fixed once by
// the n = 0 round-trip and frozen (report records it).
double sl2_inversion_kappa();

} // namespace rmt

#endif
