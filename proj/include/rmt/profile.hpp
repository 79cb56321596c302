#ifndef RMT_PROFILE_HPP
#define RMT_PROFILE_HPP

#include "rmt/types.hpp"

#include <functional>
#include <vector>

namespace rmt {

// Radial profile exchanged between transform stages: samples on a uniform
// t-grid, cubic interpolation, and decay metadata past the grid end.
struct RadialProfile {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<Cx> samples;
    // |f(t)| <= tail_C e^{-tail_rate (t - t_end)} for t beyond the grid; a
    // compactly supported profile uses tail_C = 0
    double tail_C = 0.0;
    double tail_rate = 1.0;

    double t_end() const { return t0 + dt * double(samples.size() - 1); }

    Cx eval(double t) const {
        if (samples.size() < 4) throw DomainError("RadialProfile: needs >= 4 samples");
        if (t < t0 - 1e-12) throw DomainError("RadialProfile: evaluation left of grid");
        if (t >= t_end()) return Cx(0.0, 0.0);
        double x = (t - t0) / dt;
        long i = long(std::floor(x));
        long n = long(samples.size());
        long i0 = std::min(std::max(i - 1, 0L), n - 4);
        double s = x - double(i0 + 1);
        // 4-point Lagrange cubic through samples i0..i0+3 at offsets -1,0,1,2
        const Cx &f0 = samples[i0], &f1 = samples[i0 + 1], &f2 = samples[i0 + 2],
                 &f3 = samples[i0 + 3];
        double c0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
        double c1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
        double c2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
        double c3 = (s + 1.0) * s * (s - 1.0) / 6.0;
        return c0 * f0 + c1 * f1 + c2 * f2 + c3 * f3;
    }

    static RadialProfile sample(const std::function<Cx(double)>& f, double t0, double t_end,
                                double dt) {
        RadialProfile p;
        p.t0 = t0;
        p.dt = dt;
        long n = long(std::ceil((t_end - t0) / dt)) + 1;
        p.samples.resize(n);
        for (long i = 0; i < n; ++i) p.samples[i] = f(t0 + dt * double(i));
        return p;
    }
};

// smooth compactly supported bump: exp(beta - beta r^2/(r^2 - (t-c)^2)) on |t-c| < r
struct Bump {
    double center, radius, beta;
    Bump(double c, double r, double b = 4.0) : center(c), radius(r), beta(b) {}
    double operator()(double t) const {
        double x = (t - center) / radius;
        double d = 1.0 - x * x;
        if (d <= 1e-14) return 0.0;
        return std::exp(beta - beta / d);
    }
};

} // namespace rmt

#endif
