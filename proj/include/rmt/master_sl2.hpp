#ifndef RMT_MASTER_SL2_HPP
#define RMT_MASTER_SL2_HPP

#include "rmt/hardy.hpp"
#include "rmt/sl2.hpp"

#include <vector>

namespace rmt {

// Normalization constant of the interpolating factor, fixed by the
// requirement that the residues of b*mu at the spectral points reproduce the
// series coefficients exactly:
//   n even:  b(l) mu(sigma,l) = c(n) l / cos(pi l / 2),  c(n) = (i/4)(-1)^{n/2}
//   n odd:   b(l) mu(sigma,l) = c(n) l / sin(pi l / 2),  c(n) = (i/4)(-1)^{(n+3)/2}
Cx b_norm_c(int n);
Cx b_mu_sl2(int n, Cx lambda);   // the product b(lambda) mu(sigma, lambda)
Cx b_sl2(int n, Cx lambda);      // b alone

// Residue of b*mu at a spectral pole (lambda = 2j+1 for even n, 2j for odd n)
Cx b_mu_residue(int n, long pole);

enum class SeriesWeight { weighted, unweighted }; // (2m+n+1) factor present / absent

// Spectral series sum_{m} (-1)^{m+1} w_m a(2m+n+1) psi_{2m+n,n}(point).
// For n < 0 the sum starts at m = ceil(|n|/2), folding the small spectral
// parameters (which restrict to discrete-series coefficients) into the series.
Cx series_f_sl2(const HardyFunction& a, int n, const CartanPoint& p, double tol,
                SeriesWeight w = SeriesWeight::weighted);
// group-point variant evaluated through the exact SU(2) oracle (n >= 0)
Cx series_f_sl2_group(const HardyFunction& a, int n, const Mat2& g, double tol);

// Contour representation
//   (1/2) int_{Re = -eta} (a b + a~ b~) Phi mu dlambda
//   + sum_{k in L} (-1)^{(k-n-1)/2} k a(k) Psi_k(a_t)
Cx contour_rhs_sl2(const HardyFunction& a, int n, double t, double eta);

struct RectangleCheck {
    Cx contour_value;
    Cx residue_sum_2pii; // 2 pi i * sum of residues
    double top_mag, right_mag, bottom_mag;
    bool shifted; // contour nudged off a pole
};
RectangleCheck rectangle_residue_check(const HardyFunction& a, int n, double t, int k);

// profile of the part-(2) extension on a uniform t-grid (reused by transforms)
RadialProfile master_profile_sl2(const HardyFunction& a, int n, double dt = 0.02,
                                 double weight_cut = 1e-9);

struct TransformIdentityResult {
    std::vector<Cx> lhs, rhs;       // continuous side, per lambda
    std::vector<Cx> lhsB, rhsB;     // discrete side, per k in L
    double max_rel_err, max_rel_err_B;
};
TransformIdentityResult transform_identity_check(const HardyFunction& a, int n,
                                                 const std::vector<Cx>& lambdas,
                                                 const RadialProfile* prebuilt = nullptr);

// --- classical master theorem -------------------------------------------------

Cx classical_series(const HardyFunction& a, double x, double tol = 1e-10);
Cx classical_contour(const HardyFunction& a, double x, double eta, double tol = 1e-10);
// Mellin transform int_0^inf f(x) x^{-lambda-1} dx, split at x = 1 with the
// series integrated termwise on (0,1); this is the analytic continuation that
// extends the classically convergent strip -delta < Re lambda < 0.
Cx classical_mellin(const HardyFunction& a, Cx lambda, double tol = 1e-10);
// brute-force Mellin quadrature; honest improper integral, needs Re lambda < 0
Cx classical_mellin_brute(const HardyFunction& a, Cx lambda, double tol = 1e-8);

// --- optimality probe ----------------------------------------------------------

struct CounterexampleReport {
    double series_max_abs;              // max |term| over the sample set
    std::vector<double> heights;
    std::vector<double> truncated_mags; // |truncated contour| at each height
    double growth_ratio;                // mag(last) / mag(first)
    bool hardy_check_fails;             // envelope violated for the declared A < pi/2
    bool divergent_as_expected;
};
CounterexampleReport counterexample_probe(int n, const std::vector<double>& heights);

} // namespace rmt

#endif
