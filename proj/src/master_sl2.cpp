#include "rmt/master_sl2.hpp"

#include "rmt/quadrature.hpp"
#include "rmt/special.hpp"

#include <algorithm>

namespace rmt {

Cx b_norm_c(int n) {
    long e = (n % 2 == 0) ? (n / 2) : ((n + 3) / 2);
    return Cx(0, 0.25) * double(parity_sign(e));
}

Cx b_mu_sl2(int n, Cx lambda) {
    Cx c = b_norm_c(n);
    if (n % 2 == 0) {
        double r = std::round(lambda.real());
        if (std::abs(lambda.imag()) < 1e-10 && std::abs(lambda.real() - r) < 1e-10 &&
            (long(std::abs(r)) % 2 == 1))
            throw PoleError("b_mu_sl2: pole at odd integer");
        return c * lambda / std::cos(PI * lambda / 2.0);
    }
    double r = std::round(lambda.real());
    if (std::abs(lambda.imag()) < 1e-10 && std::abs(lambda.real() - r) < 1e-10 && r != 0.0 &&
        (long(std::abs(r)) % 2 == 0))
        throw PoleError("b_mu_sl2: pole at even integer");
    if (std::abs(lambda) < 0.05) {
        // lambda / sin(pi lambda/2) = (2/pi)(1 + w^2/6 + 7 w^4/360 + ...), w = pi lambda / 2
        Cx w = PI * lambda / 2.0, w2 = w * w;
        return c * (2.0 / PI) * (1.0 + w2 / 6.0 + 7.0 * w2 * w2 / 360.0);
    }
    return c * lambda / std::sin(PI * lambda / 2.0);
}

Cx b_sl2(int n, Cx lambda) {
    Cx c = b_norm_c(n);
    if (n % 2 == 0) return (-2.0 * c * Cx(0, 1) / PI) / std::sin(PI * lambda / 2.0);
    return (2.0 * c * Cx(0, 1) / PI) / std::cos(PI * lambda / 2.0);
}

Cx b_mu_residue(int n, long pole) {
    Cx c = b_norm_c(n);
    if (n % 2 == 0) {
        if (pole % 2 == 0) throw DomainError("b_mu_residue: not a pole");
        long j = (pole - 1) / 2;
        return double(parity_sign(j + 1)) * (2.0 / PI) * c * double(pole);
    }
    if (pole % 2 != 0 || pole == 0) throw DomainError("b_mu_residue: not a pole");
    long j = pole / 2;
    return double(parity_sign(j)) * (4.0 * double(j) / PI) * c;
}

// ---------------------------------------------------------------------------
// spectral series

namespace {

long series_start(int n) { return (n >= 0) ? 0 : ((std::abs(n) + 1) / 2); }

// certified forward bound on |term_m|; C_psi covers the complexified strip
double series_term_bound(const HardyFunction& a, int n, double t, long m, SeriesWeight w) {
    double lam = 2.0 * m + n + 1.0;
    double wgt = (w == SeriesWeight::weighted) ? lam : 1.0;
    return wgt * a.C * std::exp(-a.p * lam) * std::exp((2.0 * m + n) * std::abs(t));
}

} // namespace

Cx series_f_sl2(const HardyFunction& a, int n, const CartanPoint& p, double tol,
                SeriesWeight w) {
    double ratio0 = std::exp(2.0 * (std::abs(p.t) - a.p));
    if (ratio0 >= 1.0)
        throw DivergenceError("series_f_sl2: |t| >= p, tail certificate fails");
    const double strip_C = (p.s == 0.0) ? 1.0 : 10.0; // growth certificate on the strip
    Cx sum(0, 0), comp(0, 0);
    long m = series_start(n);
    for (long guard = 0; guard < 100000; ++guard, ++m) {
        double lam = 2.0 * m + n + 1.0;
        double wgt = (w == SeriesWeight::weighted) ? lam : 1.0;
        Cx psi = phi_nn(Cx(lam, 0.0), n, p);
        Cx term = double(parity_sign(m + 1)) * wgt * a.eval(Cx(lam, 0.0)) * psi;
        Cx y = term - comp;
        Cx s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        double r_fwd = ratio0 * (2.0 * m + n + 3.0) / (2.0 * m + n + 1.0);
        if (r_fwd < 1.0) {
            double tail = strip_C * series_term_bound(a, n, p.t, m + 1, w) / (1.0 - r_fwd);
            if (tail < tol) return sum;
        }
    }
    throw AccuracyError("series_f_sl2: term budget exhausted", sum, 1.0);
}

Cx series_f_sl2_group(const HardyFunction& a, int n, const Mat2& g, double tol) {
    if (n < 0)
        throw DomainError("series_f_sl2_group: exact oracle terms need n >= 0");
    // decomposition supplies the growth exponent for the tail certificate
    KAHDecomposition dec = kah_decompose(g);
    double t = dec.t;
    double ratio0 = std::exp(2.0 * (t - a.p));
    if (ratio0 >= 1.0)
        throw DivergenceError("series_f_sl2_group: point outside the convergence region");
    double phase = std::abs(so2c_character(dec.h.inv_unimodular(), 1));
    double strip_C = std::pow(std::max(phase, 1.0 / phase), std::abs(n)) + 1.0;
    Cx sum(0, 0);
    for (long m = 0; m < 100000; ++m) {
        double lam = 2.0 * m + n + 1.0;
        Cx term = double(parity_sign(m + 1)) * lam * a.eval(Cx(lam, 0.0)) * psi_exact(m, n, g);
        sum += term;
        double r_fwd = ratio0 * (2.0 * m + n + 3.0) / (2.0 * m + n + 1.0);
        if (r_fwd < 1.0) {
            double tail = strip_C * series_term_bound(a, n, t, m + 1, SeriesWeight::weighted) /
                          (1.0 - r_fwd);
            if (tail < tol) return sum;
        }
    }
    throw AccuracyError("series_f_sl2_group: term budget exhausted", sum, 1.0);
}

Cx contour_rhs_sl2(const HardyFunction& a, int n, double t, double eta) {
    if (eta < 0.0 || eta >= a.delta)
        throw DomainError("contour_rhs_sl2: eta outside [0, delta)");

    Cx integral(0, 0);
    if (t == 0.0) {
        auto G = [&](Cx lam) {
            return a.eval(lam) * b_mu_sl2(n, lam) + a.eval(-lam) * b_mu_sl2(n, -lam);
        };
        integral = integrate_vertical_line(G, -eta, QuadTol(1e-11, 1e-10),
                                           {PI / 2.0 - a.A, 2})
                       .value;
    } else {
        PhiTable tab(n, CartanPoint(t, 0.0), Cx(-eta, 40.0));
        auto G = [&](Cx lam) {
            Cx phi;
            try {
                phi = tab.eval(lam);
            } catch (const AccuracyError&) {
                phi = phi_nn(lam, n, CartanPoint(t, 0.0));
            }
            return (a.eval(lam) * b_mu_sl2(n, lam) + a.eval(-lam) * b_mu_sl2(n, -lam)) * phi;
        };
        integral = integrate_vertical_line(G, -eta, QuadTol(1e-11, 1e-10),
                                           {PI / 2.0 - a.A, 2})
                       .value;
    }
    Cx val = 0.5 * Cx(0, 1) * integral; // dlambda = i dy
    for (int k : discrete_spectrum(n)) {
        if (n < 0) break; // folded into the series; no separate terms
        val += double(parity_sign((k - n - 1) / 2)) * double(k) * a.eval(Cx(k, 0.0)) *
               psi_disc(k, n, t);
    }
    return val;
}

RectangleCheck rectangle_residue_check(const HardyFunction& a, int n, double t, int k) {
    if (k < 1) throw DomainError("rectangle_residue_check: k >= 1");
    const bool odd = (n % 2 != 0);
    double shift = odd ? -1e-3 : 0.0; // odd parity: pole of b*mu sits on Re = 2k
    double x0 = shift, x1 = 2.0 * k + shift, y1 = 2.0 * k;

    PhiTable tab(n, CartanPoint(t, 0.0), Cx(x1, y1));
    auto F = [&](Cx lam) -> Cx {
        Cx phi;
        try {
            phi = tab.eval(lam);
        } catch (const AccuracyError&) {
            phi = phi_nn(lam, n, CartanPoint(t, 0.0));
        }
        return a.eval(lam) * b_mu_sl2(n, lam) * phi;
    };

    QuadTol qt(1e-12, 1e-11, 44);
    auto bottom = integrate_segment([&](double x) { return F(Cx(x, -y1)); }, x0, x1, qt);
    auto right = integrate_segment([&](double y) { return F(Cx(x1, y)); }, -y1, y1, qt);
    auto top = integrate_segment([&](double x) { return F(Cx(x, y1)); }, x0, x1, qt);
    auto left = integrate_segment([&](double y) { return F(Cx(x0, y)); }, -y1, y1, qt);
    Cx contour = bottom.value + Cx(0, 1) * right.value - top.value - Cx(0, 1) * left.value;

    Cx residues(0, 0);
    if (!odd) {
        for (long pole = 1; pole < 2 * k; pole += 2)
            residues += a.eval(Cx(double(pole), 0)) * b_mu_residue(n, pole) *
                        phi_nn(Cx(double(pole), 0), n, CartanPoint(t, 0.0));
    } else {
        for (long pole = 2; pole < 2 * k; pole += 2)
            residues += a.eval(Cx(double(pole), 0)) * b_mu_residue(n, pole) *
                        phi_nn(Cx(double(pole), 0), n, CartanPoint(t, 0.0));
    }

    RectangleCheck rc;
    rc.contour_value = contour;
    rc.residue_sum_2pii = 2.0 * PI * Cx(0, 1) * residues;
    rc.top_mag = std::abs(top.value);
    rc.right_mag = std::abs(right.value);
    rc.bottom_mag = std::abs(bottom.value);
    rc.shifted = odd;
    return rc;
}

RadialProfile master_profile_sl2(const HardyFunction& a, int n, double dt, double weight_cut) {
    // fixed half-line quadrature grid in y shared by all t samples; the
    // integrand at eta = 0 is even in y
    const double rate = PI / 2.0 - a.A;
    auto S = [&](double y) {
        Cx lam(0, y);
        return a.eval(lam) * b_mu_sl2(n, lam) + a.eval(-lam) * b_mu_sl2(n, -lam);
    };
    double C_est = 1e-300;
    for (double y : {1.0, 2.0, 4.0, 8.0, 16.0})
        C_est = std::max(C_est, std::abs(S(y)) * std::exp(rate * y) / ((1.0 + y) * (1.0 + y)));
    C_est *= 10.0;
    double Y = 8.0;
    while (C_est * (1.0 + Y) * (1.0 + Y) * std::exp(-rate * Y) / rate > 1e-13 && Y < 300.0)
        Y *= 1.2;

    std::vector<QuadNode> ygrid = composite_gk_nodes(0.0, Y, 0.7);
    std::vector<Cx> Wv(ygrid.size());
    std::vector<PhiAsymptotic> fast;
    fast.reserve(ygrid.size());
    for (size_t i = 0; i < ygrid.size(); ++i) {
        Cx lam(0, ygrid[i].x);
        Wv[i] = ygrid[i].wk * S(ygrid[i].x); // b*mu already carries the density
        fast.emplace_back(n, lam);
    }

    auto f_at = [&](double t) -> Cx {
        Cx acc(0, 0);
        if (t < 0.5) {
            if (t == 0.0) {
                for (size_t i = 0; i < ygrid.size(); ++i) acc += Wv[i];
            } else {
                PhiTable tab(n, CartanPoint(t, 0.0), Cx(0, Y), 1e-12);
                for (size_t i = 0; i < ygrid.size(); ++i) {
                    Cx phi;
                    try {
                        phi = tab.eval(Cx(0, ygrid[i].x));
                    } catch (const AccuracyError& e) {
                        phi = e.best;
                    }
                    acc += Wv[i] * phi;
                }
            }
        } else {
            for (size_t i = 0; i < ygrid.size(); ++i) acc += Wv[i] * fast[i].eval(t);
        }
        return Cx(0, 1) * acc; // (1/2) i * (2 * half-line)
    };

    std::vector<Cx> samples;
    double peak = 0.0;
    double t = 0.0;
    const double t_cap = 30.0;
    while (t <= t_cap) {
        Cx f = f_at(t);
        samples.push_back(f);
        double wmag = std::abs(f) * std::exp(t) * (1.0 + t);
        peak = std::max(peak, wmag);
        if (t > 2.0 && wmag < weight_cut * peak) break;
        t += dt;
    }
    // discrete contribution rides on top of the contour extension
    for (size_t i = 0; i < samples.size(); ++i) {
        double ti = dt * double(i);
        for (int k : discrete_spectrum(n)) {
            if (n < 0) break;
            samples[i] += double(parity_sign((k - n - 1) / 2)) * double(k) *
                          a.eval(Cx(k, 0.0)) * psi_disc(k, n, ti);
        }
    }
    RadialProfile p;
    p.t0 = 0.0;
    p.dt = dt;
    p.samples = std::move(samples);
    p.tail_C = 0.0;
    p.tail_rate = 1.0;
    return p;
}

TransformIdentityResult transform_identity_check(const HardyFunction& a, int n,
                                                 const std::vector<Cx>& lambdas,
                                                 const RadialProfile* prebuilt) {
    RadialProfile own;
    const RadialProfile* prof = prebuilt;
    if (!prof) {
        own = master_profile_sl2(a, n);
        prof = &own;
    }
    const double kappa = sl2_inversion_kappa();
    TransformIdentityResult out;
    out.max_rel_err = 0.0;
    out.max_rel_err_B = 0.0;
    std::vector<Cx> tr = transform_H_batch(*prof, n, lambdas, 1e-9);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        Cx lam = lambdas[i];
        Cx lhs = kappa / (4.0 * PI * PI) * tr[i];
        Cx rhs = 0.5 * (a.eval(lam) * b_sl2(n, lam) + a.eval(-lam) * b_sl2(n, -lam));
        out.lhs.push_back(lhs);
        out.rhs.push_back(rhs);
        out.max_rel_err = std::max(out.max_rel_err, std::abs(lhs - rhs) / std::abs(rhs));
    }
    for (int k : discrete_spectrum(n)) {
        if (n < 0) break;
        Cx lhs = kappa / (2.0 * PI) * transform_B(*prof, n, k);
        Cx rhs = double(parity_sign((k - n - 1) / 2)) * a.eval(Cx(k, 0.0));
        out.lhsB.push_back(lhs);
        out.rhsB.push_back(rhs);
        out.max_rel_err_B = std::max(out.max_rel_err_B, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return out;
}

// ---------------------------------------------------------------------------
// classical case

Cx classical_series(const HardyFunction& a, double x, double tol) {
    if (x <= 0.0) throw DomainError("classical_series: x must be positive");
    double ratio = x * std::exp(-a.p);
    auto term = [&](long k) { return double(parity_sign(k)) * a.eval(Cx(double(k), 0)) *
                                     std::pow(x, double(k)); };
    return sum_series_with_tail(term, {a.C, ratio}, tol).value;
}

Cx classical_contour(const HardyFunction& a, double x, double eta, double tol) {
    if (eta <= 0.0 || eta >= a.delta) throw DomainError("classical_contour: eta outside (0,delta)");
    auto F = [&](Cx lam) { return (-PI / std::sin(PI * lam)) * a.eval(lam) * std::pow(x, lam); };
    auto r = integrate_vertical_line(F, -eta, QuadTol(tol, tol), {PI - a.A, 0});
    return r.value / (2.0 * PI);
}

Cx classical_mellin(const HardyFunction& a, Cx lambda, double tol) {
    if (lambda.real() >= a.delta || lambda.real() <= -a.delta)
        throw DomainError("classical_mellin: Re lambda outside (-delta, delta)");
    // int_0^1: termwise, sum_k (-1)^k a(k)/(k - lambda)
    Cx near(0, 0);
    if (a.p > 0.05) {
        auto term = [&](long k) {
            return double(parity_sign(k)) * a.eval(Cx(double(k), 0)) / (double(k) - lambda);
        };
        // |1/(k - lambda)| <= 1/(1 - Re lambda) once k >= 1
        double Cfac = std::max(2.0, 1.0 / std::max(0.05, 1.0 - lambda.real()));
        near = sum_series_with_tail(term, {a.C * Cfac, std::exp(-a.p)}, tol).value;
    } else {
        // slowly decaying coefficients: pair consecutive terms, algebraic tail
        Cx s(0, 0);
        long J = 4000000;
        for (long j = 0; j < J; ++j) {
            double k0 = 2.0 * j, k1 = 2.0 * j + 1.0;
            s += a.eval(Cx(k0, 0)) / (k0 - lambda) - a.eval(Cx(k1, 0)) / (k1 - lambda);
        }
        near = s;
    }
    // int_1^inf: exchange with the contour representation,
    //   int_1^inf x^{mu-lambda-1} dx = 1/(lambda-mu) for Re mu < Re lambda
    double eta = a.delta / 2.0;
    if (lambda.real() <= -eta) eta = (a.delta + lambda.real()) / 2.0 - lambda.real(); // keep mu left of lambda
    auto F = [&](Cx mu) {
        return (-PI / std::sin(PI * mu)) * a.eval(mu) / (lambda - mu);
    };
    Cx far = integrate_vertical_line(F, -eta, QuadTol(tol, tol), {PI - a.A, 0}).value / (2.0 * PI);
    return near + far;
}

Cx classical_mellin_brute(const HardyFunction& a, Cx lambda, double tol) {
    if (lambda.real() >= 0.0)
        throw DomainError("classical_mellin_brute: needs Re lambda < 0 for convergence at 0");
    auto fser = [&](double x) { return classical_series(a, x, tol / 100.0); };
    double eta = a.delta / 2.0;
    auto fcont = [&](double x) { return classical_contour(a, x, eta, tol / 100.0); };
    // (0,1]: substitute x = u^q to absorb the x^{-Re lambda - 1} endpoint power
    int q = std::max(2, int(std::ceil(1.5 / (-lambda.real()))));
    q = std::min(q, 24);
    auto g1 = [&](double u) {
        if (u <= 0.0) return Cx(0, 0);
        double x = std::pow(u, q);
        return double(q) * fser(x) * std::exp((-double(q) * lambda - 1.0) * std::log(Cx(u, 0)));
    };
    Cx part1 = integrate_segment(g1, 0.0, 1.0, QuadTol(tol / 4, tol / 4, 40)).value;
    // [1, T]: contour extension; tail bounded by C_f x^{-eta - Re lambda - 1}
    const double T = 240.0;
    auto g2 = [&](double x) { return fcont(x) * std::exp((-lambda - 1.0) * std::log(Cx(x, 0))); };
    Cx part2 = integrate_segment(g2, 1.0, T, QuadTol(tol / 4, tol / 4, 30)).value;
    // power-law tail estimate: fit f ~ c x^{-s} on [T/2, T], integrate exactly
    Cx fT = fcont(T), fT2 = fcont(T / 2.0);
    Cx tail(0, 0);
    if (std::abs(fT) > 1e-300 && std::abs(fT2) > 0.0) {
        double sfit = -std::log(std::abs(fT) / std::abs(fT2)) / std::log(2.0);
        if (sfit > 0.0 && sfit < 50.0)
            tail = fT * std::exp(-lambda * std::log(Cx(T, 0))) / (sfit + lambda);
    }
    return part1 + part2 + tail;
}

// ---------------------------------------------------------------------------
// optimality probe

CounterexampleReport counterexample_probe(int n, const std::vector<double>& heights) {
    HardyFunction a = make_hardy((n % 2 == 0) ? "counterexample-cos" : "counterexample-sin");
    CounterexampleReport rep;
    rep.heights = heights;

    // every spectral sample a(2m+n+1) vanishes; check the first 24 terms at e and a_{0.3}
    double series_max = 0.0;
    for (const double t : {0.0, 0.3}) {
        for (long m = series_start(n); m < series_start(n) + 24; ++m) {
            double lam = 2.0 * m + n + 1.0;
            Cx term = lam * a.eval(Cx(lam, 0)) * phi_nn(Cx(lam, 0), n, CartanPoint(t, 0.0));
            series_max = std::max(series_max, std::abs(term));
        }
    }
    rep.series_max_abs = series_max;

    // truncated contour integrals at t = 0 (Phi = 1) grow without bound
    auto G = [&](Cx lam) {
        return a.eval(lam) * b_mu_sl2(n, lam) + a.eval(-lam) * b_mu_sl2(n, -lam);
    };
    for (double Y : heights) {
        auto r = integrate_vertical_line_truncated(G, 0.0, Y, QuadTol(1e-10, 1e-10));
        rep.truncated_mags.push_back(std::abs(0.5 * Cx(0, 1) * r.value));
    }
    rep.growth_ratio = rep.truncated_mags.back() / std::max(rep.truncated_mags.front(), 1e-300);
    rep.hardy_check_fails = !hardy_bound_check(a).pass;
    rep.divergent_as_expected =
        rep.hardy_check_fails && rep.growth_ratio >= 10.0 && rep.series_max_abs < 1e-12;
    return rep;
}

} // namespace rmt
