#ifndef RMT_HARDY_HPP
#define RMT_HARDY_HPP

#include "rmt/types.hpp"

#include <functional>
#include <string>

namespace rmt {

// member of the interpolation class: holomorphic on Re lambda > -delta with
// |a(lambda)| <= C e^{-p Re lambda + A |Im lambda|}
struct HardyFunction {
    std::string name;
    std::function<Cx(Cx)> eval;
    double A = 0.0;
    double p = 1.0;
    double delta = 1.0;
    double C = 1.0;

    Cx operator()(Cx lambda) const { return eval(lambda); }
};

struct HardyCheckResult {
    double worst_ratio;   // max |a| e^{p Re - A|Im|} / C over the sample grid
    double cr_residual;   // worst Cauchy-Riemann residual (holomorphy probe)
    bool pass;
};

// samples H(delta) on a log-spaced grid and verifies the growth envelope
HardyCheckResult hardy_bound_check(const HardyFunction& a, int sample_count = 200);

// registry: "exp:p=1.0", "exp-over-linear:p=1.0", "gamma-reciprocal",
// "const:c=1.0", "counterexample-cos", "counterexample-sin", "zero-on:k=1,p=1.0"
HardyFunction make_hardy(const std::string& spec);

} // namespace rmt

#endif
