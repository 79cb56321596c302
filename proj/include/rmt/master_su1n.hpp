#ifndef RMT_MASTER_SU1N_HPP
#define RMT_MASTER_SU1N_HPP

#include "rmt/hardy.hpp"
#include "rmt/su1n.hpp"

#include <vector>

namespace rmt {

// Interpolating-factor quotient B(lambda) = b(lambda) / (c(lambda,m+) c(-lambda,m+)).
// The residue-matching requirement fixes the sign uniformly over the four
// parity cases:
//   B(lambda) = (i/4) alpha (p(lambda)/p(rho+)) / sin(pi (lambda - rho+)/2).
Cx b_quotient_chi_l(int n, int l, Cx lambda);
// b itself (quotient times c(lambda) c(-lambda))
Cx b_chi_l(int n, int l, Cx lambda);
// residue of B at the spectral pole lambda_m = rho+ + 2m
Cx b_quotient_residue(int n, int l, int m);

// spectral series  sum_m (-1)^m d_m a(rho+ + 2m) psi_m(a_t)
Cx series_f_chi_l(const HardyFunction& a, int n, int l, double t, double tol);

// contour representation
//   (1/2) int_{Re = -eta} [a(l) B(l) + a(-l) B(-l)] phi_{l,chi}(a_t) dlambda
Cx contour_rhs_chi_l(const HardyFunction& a, int n, int l, double t, double eta);

RadialProfile master_profile_chi_l(const HardyFunction& a, int n, int l, double dt = 0.02,
                                   double weight_cut = 1e-8);

struct TransformIdentityChiResult {
    std::vector<Cx> lhs, rhs;
    double max_rel_err;
};
// kappa-calibrated transform of the part-(2) extension against a b + a~ b~
TransformIdentityChiResult transform_identity_check_chi_l(const HardyFunction& a, int n, int l,
                                                          const std::vector<Cx>& lambdas,
                                                          const RadialProfile* prebuilt = nullptr);

// residue-vs-series case-sign validation: termwise comparison of
// -2 pi i Res_{lambda_m} with the m-th series coefficient
struct CaseSignCheck {
    int n, l;
    double max_rel_err; // over the first few m
    bool pass;
};
CaseSignCheck case_sign_check(int n, int l, const HardyFunction& a, double t, int m_count = 4);

} // namespace rmt

#endif
