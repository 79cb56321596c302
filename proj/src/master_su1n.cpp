#include "rmt/master_su1n.hpp"

#include "rmt/quadrature.hpp"

#include <algorithm>

namespace rmt {

namespace {

// stable 1/sin(pi(lambda-rho+)/2) decomposed by the parity of rho+
Cx inv_sin_shifted(int rho_plus, Cx lambda) {
    if (rho_plus % 2 == 1) {
        double sgn = -parity_sign((rho_plus - 1) / 2);
        return sgn / std::cos(PI * lambda / 2.0);
    }
    double sgn = parity_sign(rho_plus / 2);
    return sgn / std::sin(PI * lambda / 2.0);
}

} // namespace

Cx b_quotient_chi_l(int n, int l, Cx lambda) {
    CProductParts parts = gamma_pq(n, l);
    RootData rd = structure_constants(n, l);
    double alpha = double(weyl_dim_oracle(n, l, 0));
    Cx prho = eval_p(parts, Cx(double(rd.rho_plus), 0));
    if (rd.rho_plus % 2 == 0 && std::abs(lambda) < 0.05) {
        // p(lambda)/sin(pi lambda/2): pull one lambda out of p against the sine
        Cx w = PI * lambda / 2.0, w2 = w * w;
        Cx lam_over_sin = (2.0 / PI) * (1.0 + w2 / 6.0 + 7.0 * w2 * w2 / 360.0);
        Cx p_rest = ipow(lambda, parts.lambda_power - 1);
        for (double r : parts.roots_sq) p_rest *= (lambda * lambda - r * r);
        double sgn = parity_sign(rd.rho_plus / 2);
        return Cx(0, 0.25) * alpha * sgn * p_rest * lam_over_sin / prho;
    }
    return Cx(0, 0.25) * alpha * eval_p(parts, lambda) * inv_sin_shifted(rd.rho_plus, lambda) /
           prho;
}

Cx b_chi_l(int n, int l, Cx lambda) {
    Cx w = c_product_inv(lambda, n, l);
    if (std::abs(w) < 1e-280) throw PoleError("b_chi_l: zero of the Plancherel weight");
    return b_quotient_chi_l(n, l, lambda) / w;
}

Cx b_quotient_residue(int n, int l, int m) {
    CProductParts parts = gamma_pq(n, l);
    RootData rd = structure_constants(n, l);
    double alpha = double(weyl_dim_oracle(n, l, 0));
    Cx prho = eval_p(parts, Cx(double(rd.rho_plus), 0));
    Cx pm = eval_p(parts, Cx(double(rd.rho_plus + 2 * m), 0));
    return Cx(0, 0.25) * alpha * (pm / prho) * (2.0 / PI) * double(parity_sign(m));
}

Cx series_f_chi_l(const HardyFunction& a, int n, int l, double t, double tol) {
    double ratio0 = std::exp(2.0 * (std::abs(t) - a.p));
    if (ratio0 >= 1.0)
        throw DivergenceError("series_f_chi_l: |t| >= p, tail certificate fails");
    ChiParam par(n, l);
    RootData rd = structure_constants(n, l);
    const double C_psi = 2.0;
    Cx sum(0, 0), comp(0, 0);
    for (long m = 0; m < 100000; ++m) {
        double lam = double(rd.rho_plus + 2 * m);
        double dm = dim_chi_l(n, l, int(m));
        Cx term = double(parity_sign(m)) * dm * a.eval(Cx(lam, 0)) *
                  phi_chi_l(Cx(lam, 0), par, Cx(t, 0));
        Cx y = term - comp;
        Cx s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        double d_next = dim_chi_l(n, l, int(m + 1));
        double r_fwd = ratio0 * d_next / dm;
        if (r_fwd < 1.0) {
            double bound = d_next * a.C * std::exp(-a.p * (lam + 2.0)) * C_psi *
                           std::exp((2.0 * (m + 1) + par.abs_l()) * std::abs(t));
            if (bound / (1.0 - r_fwd) < tol) return sum;
        }
    }
    throw AccuracyError("series_f_chi_l: term budget exhausted", sum, 1.0);
}

Cx contour_rhs_chi_l(const HardyFunction& a, int n, int l, double t, double eta) {
    if (eta < 0.0 || eta >= double(n) * a.delta)
        throw DomainError("contour_rhs_chi_l: eta outside [0, n delta)");
    ChiParam par(n, l);
    auto G = [&](Cx lam) {
        Cx S = a.eval(lam) * b_quotient_chi_l(n, l, lam) +
               a.eval(-lam) * b_quotient_chi_l(n, l, -lam);
        return S * phi_chi_l(lam, par, Cx(t, 0));
    };
    auto r = integrate_vertical_line(G, -eta, QuadTol(1e-10, 1e-9),
                                     {PI / 2.0 - a.A, 2 * n + 1});
    return 0.5 * Cx(0, 1) * r.value;
}

RadialProfile master_profile_chi_l(const HardyFunction& a, int n, int l, double dt,
                                   double weight_cut) {
    ChiParam par(n, l);
    JacobiParams jp(double(n - 1), double(par.abs_l()));
    const int al = par.abs_l();

    // truncation height from the certified decay e^{-(pi/2 - A)|y|} poly(2n+1)
    const double rate = PI / 2.0 - a.A;
    double C_est = 0.0;
    for (double y : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        Cx lam(0, y);
        Cx S = a.eval(lam) * b_quotient_chi_l(n, l, lam) +
               a.eval(-lam) * b_quotient_chi_l(n, l, -lam);
        C_est = std::max(C_est, std::abs(S) * std::exp(rate * y) / std::pow(1.0 + y, 2 * n + 1));
    }
    C_est *= 10.0;
    double Y = 8.0;
    while (C_est * std::pow(1.0 + Y, 2 * n + 1) * std::exp(-rate * Y) / rate > 1e-11 && Y < 400.0)
        Y *= 1.2;

    // fixed symmetric-half quadrature grid; G(iy) is even in y at eta = 0
    std::vector<double> ys, ws;
    {
        int panels = std::max(8, int(std::ceil(Y / 0.45)));
        for (int p = 0; p < panels; ++p) {
            double a0 = Y * p / panels, b0 = Y * (p + 1) / panels;
            double h = 0.5 * (b0 - a0), c = 0.5 * (a0 + b0);
            for (int i = 0; i < 7; ++i) {
                ys.push_back(c - h * gk::xk[i]);
                ws.push_back(h * gk::wk[i]);
                ys.push_back(c + h * gk::xk[i]);
                ws.push_back(h * gk::wk[i]);
            }
            ys.push_back(c);
            ws.push_back(h * gk::wk[7]);
        }
    }
    std::vector<Cx> Sv(ys.size());
    std::vector<JacobiEval> asyms;
    asyms.reserve(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) {
        Cx lam(0, ys[i]);
        Sv[i] = a.eval(lam) * b_quotient_chi_l(n, l, lam) +
                a.eval(-lam) * b_quotient_chi_l(n, l, -lam);
        asyms.emplace_back(jp, lam);
    }

    auto f_at = [&](double t) -> Cx {
        Cx acc(0, 0);
        for (size_t i = 0; i < ys.size(); ++i) {
            Cx lam(0, ys[i]);
            Cx phi;
            if (t >= 0.45 && std::abs(ys[i]) > 0.05 && asyms[i].usable())
                phi = ipow(std::cosh(Cx(t, 0)), al) * asyms[i].eval(Cx(t, 0));
            else
                phi = phi_chi_l(lam, par, Cx(t, 0));
            acc += ws[i] * Sv[i] * phi;
        }
        // (1/2) * i * (2 * half-line integral)
        return Cx(0, 1) * acc;
    };

    std::vector<Cx> samples;
    double peak = 0.0, t = 0.0;
    const double t_cap = 30.0;
    while (t <= t_cap) {
        Cx f = f_at(t);
        samples.push_back(f);
        double wmag = std::abs(f) * std::exp(double(n) * t) * (1.0 + t);
        peak = std::max(peak, wmag);
        if (t > 1.5 && wmag < weight_cut * peak) break;
        t += dt;
    }
    RadialProfile p;
    p.t0 = 0.0;
    p.dt = dt;
    p.samples = std::move(samples);
    p.tail_C = 0.0;
    p.tail_rate = 1.0;
    return p;
}

TransformIdentityChiResult transform_identity_check_chi_l(const HardyFunction& a, int n, int l,
                                                          const std::vector<Cx>& lambdas,
                                                          const RadialProfile* prebuilt) {
    ChiParam par(n, l);
    RadialProfile own;
    const RadialProfile* prof = prebuilt;
    if (!prof) {
        own = master_profile_chi_l(a, n, l);
        prof = &own;
    }
    const double C_inv = su1n_inversion_prefactor(par);
    TransformIdentityChiResult out;
    out.max_rel_err = 0.0;
    std::vector<Cx> tr = transform_chi_l_batch(*prof, par, lambdas, 1e-9);
    for (size_t i = 0; i < lambdas.size(); ++i) {
        Cx lam = lambdas[i];
        // spectral densities against the common kernel phi |c|^{-2} dy:
        //   C_inv fhat = (i/2) (a b + a~ b~)
        Cx lhs = Cx(0, -2.0) * C_inv * tr[i];
        Cx rhs = a.eval(lam) * b_chi_l(n, l, lam) + a.eval(-lam) * b_chi_l(n, l, -lam);
        out.lhs.push_back(lhs);
        out.rhs.push_back(rhs);
        out.max_rel_err = std::max(out.max_rel_err, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return out;
}

CaseSignCheck case_sign_check(int n, int l, const HardyFunction& a, double t, int m_count) {
    ChiParam par(n, l);
    RootData rd = structure_constants(n, l);
    CaseSignCheck out{n, l, 0.0, true};
    for (int m = 0; m < m_count; ++m) {
        double lam = double(rd.rho_plus + 2 * m);
        // numeric residue of the full integrand a B phi at the spectral pole
        auto F = [&](Cx z) {
            return a.eval(z) * b_quotient_chi_l(n, l, z) * phi_chi_l(z, par, Cx(t, 0));
        };
        Cx res_num = residue_simple(F, Cx(lam, 0), 0.5, 1e-10);
        Cx via_contour = -2.0 * PI * Cx(0, 1) * res_num;
        Cx series_term = double(parity_sign(m)) * dim_chi_l(n, l, m) * a.eval(Cx(lam, 0)) *
                         phi_chi_l(Cx(lam, 0), par, Cx(t, 0));
        double rel = std::abs(via_contour - series_term) / std::abs(series_term);
        out.max_rel_err = std::max(out.max_rel_err, rel);
    }
    out.pass = out.max_rel_err < 1e-6;
    return out;
}

} // namespace rmt
