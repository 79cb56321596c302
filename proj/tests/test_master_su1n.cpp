#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmt/master_su1n.hpp"
#include "rmt/quadrature.hpp"

#include <random>

using namespace rmt;

TEST_CASE("interpolating factor structure") {
    // b is odd when n + |l| is odd and even when n + |l| is even; the
    // symmetrized combination a b + a~ b~ is what the contour consumes
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (auto [n, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 1}, {4, 1}}) {
        int sign = ((n + std::abs(l)) % 2 == 1) ? 1 : -1; // odd rho+: b(-l) = -b(l)
        for (int i = 0; i < 12; ++i) {
            Cx lam(ur(rng), ur(rng) + 0.3);
            Cx bp = b_chi_l(n, l, lam), bm = b_chi_l(n, l, -lam);
            CHECK(std::abs(bm + double(sign) * bp) < 1e-10 * std::abs(bp));
        }
    }
    // simple poles of b/(c c~) at rho+ , rho+ + 2, ... detected numerically
    int n = 3, l = 2;
    auto B = [&](Cx z) { return b_quotient_chi_l(n, l, z); };
    for (int m : {0, 1, 2}) {
        double pole = 5.0 + 2.0 * m;
        Cx r1 = residue_simple(B, Cx(pole, 0), 0.4);
        CHECK(std::abs(r1 - b_quotient_residue(n, l, m)) < 1e-9 * std::abs(r1));
    }
    // no pole of the quotient below rho+ on the positive axis (p cancels them)
    Cx probe = residue_simple(B, Cx(3.0, 0), 0.3);
    CHECK(std::abs(probe) < 1e-9);
}

TEST_CASE("residue assembly reproduces the series coefficients in all parity cases") {
    auto a = make_hardy("exp:p=1.0");
    for (auto [n, l] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 1}, {4, 1}}) {
        auto cs = case_sign_check(n, l, a, 0.3, 3);
        CHECK(cs.max_rel_err < 1e-6);
        CHECK(cs.pass);
    }
}

TEST_CASE("series convergence and tail guard") {
    auto a = make_hardy("exp:p=1.0");
    Cx v = series_f_chi_l(a, 3, 2, 0.3, 1e-8);
    CHECK(is_finite(v));
    CHECK_THROWS_AS(series_f_chi_l(a, 3, 2, 1.01, 1e-8), DivergenceError);
}

TEST_CASE("series equals contour, no discrete terms") {
    auto a = make_hardy("exp:p=1.0");
    for (auto [n, l] : std::vector<std::pair<int, int>>{{3, 2}, {3, 1}, {4, 1}}) {
        for (double t : {0.2, 0.4}) {
            Cx s = series_f_chi_l(a, n, l, t, 1e-8);
            Cx c = contour_rhs_chi_l(a, n, l, t, 0.0);
            CHECK(std::abs(s - c) <= 1e-6 * std::abs(s));
        }
    }
    CHECK_THROWS_AS(contour_rhs_chi_l(a, 3, 2, 0.3, 3.5), DomainError);
}

TEST_CASE("contour shift invariance up to n delta") {
    auto a = make_hardy("exp:p=1.0");
    Cx v0 = contour_rhs_chi_l(a, 3, 2, 0.3, 0.0);
    Cx v1 = contour_rhs_chi_l(a, 3, 2, 0.3, 3.0 * a.delta / 4.0);
    CHECK(std::abs(v1 - v0) < 1e-7);
}

TEST_CASE("symmetrized integrand is regular near the origin") {
    auto a = make_hardy("exp:p=1.0");
    int n = 3, l = 2;
    double bound = 0;
    for (double r : {1e-4, 1e-3, 1e-2, 0.1, 0.3, 0.5})
        for (double th : {0.0, PI / 3, PI / 2, 2.3}) {
            Cx lam = r * std::exp(Cx(0, th));
            Cx S = a.eval(lam) * b_quotient_chi_l(n, l, lam) +
                   a.eval(-lam) * b_quotient_chi_l(n, l, -lam);
            bound = std::max(bound, std::abs(S));
        }
    CHECK(bound < 50.0);
}

TEST_CASE("kappa-calibrated transform identity") {
    auto a = make_hardy("exp:p=1.0");
    auto ti = transform_identity_check_chi_l(a, 3, 2, {Cx(0, 0.5), Cx(0, 1.0)});
    CHECK(ti.max_rel_err < 1e-4);
    // rhs is even under lambda -> -lambda by construction
    Cx r1 = a.eval(Cx(0, 1)) * b_chi_l(3, 2, Cx(0, 1)) +
            a.eval(Cx(0, -1)) * b_chi_l(3, 2, Cx(0, -1));
    Cx r2 = a.eval(Cx(0, -1)) * b_chi_l(3, 2, Cx(0, -1)) +
            a.eval(Cx(0, 1)) * b_chi_l(3, 2, Cx(0, 1));
    CHECK(std::abs(r1 - r2) < 1e-15);
}

TEST_CASE("three-way equality: series, contour, inversion of the spectral data") {
    auto a = make_hardy("exp:p=1.0");
    int n = 3, l = 2;
    ChiParam par(n, l);
    const double C_inv = su1n_inversion_prefactor(par);
    // part (3) in closed form: C_inv fhat = (i/2)(a b + a~ b~)
    auto fhat = [&](double y) {
        Cx lam(0, y);
        Cx rhs = a.eval(lam) * b_chi_l(n, l, lam) + a.eval(-lam) * b_chi_l(n, l, -lam);
        return Cx(0, 0.5) * rhs / C_inv;
    };
    for (double t : {0.2, 0.4}) {
        Cx s = series_f_chi_l(a, n, l, t, 1e-8);
        Cx c = contour_rhs_chi_l(a, n, l, t, 0.0);
        Cx v = invert_chi_l(fhat, 40.0, par, t, 1e-8);
        CHECK(std::abs(s - c) < 1e-5 * std::abs(s));
        CHECK(std::abs(v - s) < 1e-4 * std::abs(s));
        CHECK(std::abs(v - c) < 1e-4 * std::abs(c));
    }
}

TEST_CASE("inversion round trip at (3,2) with the frozen calibration") {
    ChiParam par(3, 2);
    CHECK(std::abs(su1n_inversion_kappa0() - 1.0) < 1e-4);
    Bump bump(1.0, 0.7, 6.0);
    RadialProfile f = RadialProfile::sample([&](double t) { return Cx(bump(t), 0); }, 0.0, 2.0,
                                            0.01);
    const double Y = 60.0;
    auto ygrid = composite_gk_nodes(0.0, Y, 0.8);
    std::vector<Cx> lams(ygrid.size());
    for (size_t i = 0; i < ygrid.size(); ++i) lams[i] = Cx(0, ygrid[i].x);
    auto fh = transform_chi_l_batch(f, par, lams, 1e-9);
    JacobiParams jp(2.0, 2.0);
    std::vector<JacobiEval> asyms;
    asyms.reserve(lams.size());
    for (auto& lam : lams) asyms.emplace_back(jp, lam);
    double pref = su1n_inversion_prefactor(par);
    for (double t : {0.7, 1.0, 1.3}) {
        Cx half(0, 0);
        for (size_t i = 0; i < lams.size(); ++i) {
            Cx w = c_product_inv(lams[i], 3, 2);
            if (w == Cx(0, 0)) continue;
            Cx phi = (std::abs(ygrid[i].x) > 0.05 && asyms[i].usable())
                         ? ipow(std::cosh(Cx(t, 0)), 2) * asyms[i].eval(Cx(t, 0))
                         : phi_chi_l(lams[i], par, Cx(t, 0));
            half += ygrid[i].wk * fh[i] * phi * w;
        }
        Cx rec = pref * 2.0 * half;
        CHECK(std::abs(rec - f.eval(t)) < 1e-3 * std::max(1e-2, std::abs(f.eval(t))));
    }
}
