#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmt/master_sl2.hpp"
#include "rmt/special.hpp"

#include <random>

using namespace rmt;

TEST_CASE("Hardy class membership") {
    CHECK(hardy_bound_check(make_hardy("exp:p=1.0")).pass);
    CHECK(hardy_bound_check(make_hardy("exp-over-linear:p=1.0")).pass);
    CHECK(hardy_bound_check(make_hardy("gamma-reciprocal")).pass);
    // the borderline interpolants fail every envelope with A < pi/2
    CHECK_FALSE(hardy_bound_check(make_hardy("counterexample-cos")).pass);
    CHECK_FALSE(hardy_bound_check(make_hardy("counterexample-sin")).pass);
    CHECK_THROWS_AS(make_hardy("nonsense"), ConfigError);
}

TEST_CASE("interpolating factor: symmetry, residues, decay") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ur(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        Cx lam(ur(rng), ur(rng));
        // even K-type: b is odd
        CHECK(std::abs(b_sl2(2, -lam) + b_sl2(2, lam)) < 1e-12 * std::abs(b_sl2(2, lam)));
        // odd K-type: b is even
        CHECK(std::abs(b_sl2(3, -lam) - b_sl2(3, lam)) < 1e-12 * std::abs(b_sl2(3, lam)));
    }
    // residues of b mu at the spectral poles, against the quadrature residue
    for (int n : {2, -2}) {
        for (long j = 0; j <= 3; ++j) {
            long pole = 2 * j + 1;
            auto f = [&](Cx z) { return b_mu_sl2(n, z); };
            Cx num = residue_simple(f, Cx(double(pole), 0), 0.4);
            CHECK(std::abs(num - b_mu_residue(n, pole)) < 1e-10);
        }
    }
    for (long j = 1; j <= 3; ++j) {
        auto f = [&](Cx z) { return b_mu_sl2(3, z); };
        Cx num = residue_simple(f, Cx(2.0 * j, 0), 0.4);
        CHECK(std::abs(num - b_mu_residue(3, 2 * j)) < 1e-10);
    }
    // |b mu| <= |lambda| e^{-pi |Im lambda| / 2} on the imaginary axis
    for (double y = 1.0; y < 20.0; y += 0.7)
        CHECK(std::abs(b_mu_sl2(2, Cx(0, y))) <= y * std::exp(-PI * y / 2.0) * (1 + 1e-12));
}

TEST_CASE("spectral series convergence and divergence") {
    auto a = make_hardy("exp:p=1.0");
    Cx at_e = series_f_sl2(a, 2, CartanPoint(0.0, 0.0), 1e-8);
    CHECK(is_finite(at_e));
    // group-point evaluation through the exact oracle agrees on A
    Cx grp = series_f_sl2_group(a, 2, mat2_cartan(Cx(0.3, 0)), 1e-8);
    Cx crt = series_f_sl2(a, 2, CartanPoint(0.3, 0.0), 1e-8);
    CHECK(std::abs(grp - crt) < 1e-7);
    CHECK_THROWS_AS(series_f_sl2(a, 2, CartanPoint(1.01, 0.0), 1e-8), DivergenceError);
}

TEST_CASE("series equals contour plus discrete terms") {
    auto a = make_hardy("exp:p=1.0");
    for (int n : {2, 3, -2, -3}) {
        for (double t : {0.0, 0.4, 0.8}) {
            Cx s = series_f_sl2(a, n, CartanPoint(t, 0.0), 1e-9);
            Cx c = contour_rhs_sl2(a, n, t, 0.0);
            CHECK(std::abs(s - c) <= 1e-7 * std::abs(s));
        }
    }
    CHECK_THROWS_AS(contour_rhs_sl2(a, 2, 0.3, 1.5), DomainError); // eta >= delta
}

TEST_CASE("contour is independent of the shift") {
    auto a = make_hardy("exp:p=1.0");
    for (int n : {2, 3}) {
        Cx v0 = contour_rhs_sl2(a, n, 0.4, 0.0);
        Cx v1 = contour_rhs_sl2(a, n, 0.4, a.delta / 4.0);
        Cx v2 = contour_rhs_sl2(a, n, 0.4, a.delta / 2.0);
        CHECK(std::abs(v1 - v0) < 1e-8);
        CHECK(std::abs(v2 - v0) < 1e-8);
    }
}

TEST_CASE("rectangle residue bookkeeping") {
    auto a = make_hardy("exp:p=1.0");
    double prev_tb = 0, prev_r = 0;
    for (int k : {2, 3, 4}) {
        auto rc = rectangle_residue_check(a, 2, 0.4, k);
        CHECK(std::abs(rc.contour_value - rc.residue_sum_2pii) < 1e-8);
        // top/bottom decay at the certified rate e^{(A-pi/2)2k} (poly-corrected);
        // the right edge decays at its own e^{-2(p-t)k} rate
        double tb = rc.top_mag + rc.bottom_mag;
        if (k > 2) {
            double expect = std::exp((a.A - PI / 2.0) * 2.0) * double(k * k) /
                            double((k - 1) * (k - 1));
            CHECK(tb / prev_tb < 3.0 * expect);
            CHECK(tb / prev_tb > expect / 3.0);
            CHECK(rc.right_mag < prev_r);
        }
        prev_tb = tb;
        prev_r = rc.right_mag;
    }
    // odd parity nudges the contour off the pole at the right edge
    auto rc3 = rectangle_residue_check(a, 3, 0.4, 2);
    CHECK(rc3.shifted);
    CHECK(std::abs(rc3.contour_value - rc3.residue_sum_2pii) < 1e-7);
}

TEST_CASE("transform identity and discrete recovery") {
    auto a = make_hardy("exp:p=1.0");
    auto ti = transform_identity_check(a, 2, {Cx(0, 0.5), Cx(0, 1.0), Cx(0, 1.5)});
    CHECK(ti.max_rel_err < 1e-5);
    REQUIRE(ti.lhsB.size() == 1);
    CHECK(ti.max_rel_err_B < 1e-5);
    // rhs is even by construction
    Cx r1 = 0.5 * (a.eval(Cx(0, 1)) * b_sl2(2, Cx(0, 1)) + a.eval(Cx(0, -1)) * b_sl2(2, Cx(0, -1)));
    Cx r2 = 0.5 * (a.eval(Cx(0, -1)) * b_sl2(2, Cx(0, -1)) + a.eval(Cx(0, 1)) * b_sl2(2, Cx(0, 1)));
    CHECK(std::abs(r1 - r2) < 1e-15);
}

TEST_CASE("three-way equality: series, contour, inversion of the spectral data") {
    // third route: the part-(3) spectral data in closed form, pushed back
    // through the inversion machinery
    auto a = make_hardy("exp:p=1.0");
    const double kappa = sl2_inversion_kappa();
    CHECK(std::abs(kappa - 2.0 * PI) < 1e-6);
    for (int n : {2, 3}) {
        auto fH = [&, n](double y) {
            Cx lam(0, y);
            return (4.0 * PI * PI / kappa) * 0.5 *
                   (a.eval(lam) * b_sl2(n, lam) + a.eval(-lam) * b_sl2(n, -lam));
        };
        std::vector<Cx> fB;
        for (int k : discrete_spectrum(n))
            fB.push_back((2.0 * PI / kappa) * double(parity_sign((k - n - 1) / 2)) *
                         a.eval(Cx(k, 0)));
        for (double t : {0.2, 0.6}) {
            Cx s = series_f_sl2(a, n, CartanPoint(t, 0.0), 1e-9);
            Cx c = contour_rhs_sl2(a, n, t, 0.0);
            Cx v = invert(fH, 40.0, fB, n, t, 1e-9);
            CHECK(std::abs(s - c) < 1e-6 * std::abs(s));
            CHECK(std::abs(v - s) < 1e-5 * std::abs(s));
            CHECK(std::abs(v - c) < 1e-5 * std::abs(c));
        }
    }
}

TEST_CASE("interpolant vanishing on the discrete spectrum separates the parts") {
    // a zero planted at lambda = 1 = L_{2,2} member: the discrete data vanishes
    auto a = make_hardy("zero-on:k=1,p=1.0");
    auto ti = transform_identity_check(a, 2, {Cx(0, 1.0)});
    REQUIRE(ti.lhsB.size() == 1);
    CHECK(std::abs(ti.lhsB[0]) < 1e-6);
    CHECK(std::abs(ti.rhsB[0]) < 1e-15);
}

TEST_CASE("negative K-type: no discrete terms, weighted series wins") {
    auto a = make_hardy("exp:p=1.0");
    Cx contour = contour_rhs_sl2(a, -2, 0.4, 0.0);
    Cx weighted = series_f_sl2(a, -2, CartanPoint(0.4, 0.0), 1e-9, SeriesWeight::weighted);
    Cx unweighted = series_f_sl2(a, -2, CartanPoint(0.4, 0.0), 1e-9, SeriesWeight::unweighted);
    CHECK(std::abs(weighted - contour) < 1e-7 * std::abs(contour));
    CHECK(std::abs(unweighted - contour) > 1e-2 * std::abs(contour));
}

TEST_CASE("symmetrized integrand is regular near the origin") {
    auto a = make_hardy("exp:p=1.0");
    for (int n : {2, 3}) {
        double bound = 0;
        for (double r : {1e-6, 1e-4, 1e-2, 0.2, 0.5})
            for (double th : {0.0, PI / 3, PI / 2}) {
                Cx lam = r * std::exp(Cx(0, th));
                Cx S = a.eval(lam) * b_mu_sl2(n, lam) + a.eval(-lam) * b_mu_sl2(n, -lam);
                bound = std::max(bound, std::abs(S));
            }
        CHECK(bound < 10.0);
    }
}

TEST_CASE("classical master theorem") {
    auto g = make_hardy("gamma-reciprocal");
    // part 1: the series is e^{-x}
    for (double x : {0.5, 1.0, 2.0})
        CHECK(std::abs(classical_series(g, x, 1e-12) - std::exp(-x)) < 1e-11);
    // part 2: contour reconstruction
    for (double x : {0.5, 1.0, 2.0})
        CHECK(std::abs(classical_contour(g, x, g.delta / 2, 1e-10) - std::exp(-x)) < 1e-8);
    // part 3: Mellin side equals -pi/sin * a = Gamma(-lambda)
    for (double re : {0.1, 0.25, 0.4})
        for (double im : {-2.0, 0.0, 2.0}) {
            Cx lam(re, im);
            CHECK(std::abs(classical_mellin(g, lam, 1e-9) - gamma_fn(-lam)) < 1e-7);
        }
    // independent quadrature on the classically convergent side
    for (Cx lam : {Cx(-0.3, 0.0), Cx(-0.5, 1.0)}) {
        Cx M = classical_mellin(g, lam, 1e-9);
        Cx B = classical_mellin_brute(g, lam, 1e-8);
        CHECK(std::abs(M - B) < 1e-7);
    }
    // constant interpolant: f = c/(1+x), Mellin = -pi/sin(pi lambda) (beta integral)
    auto cst = make_hardy("const:c=1.0");
    CHECK(std::abs(classical_series(cst, 0.5, 1e-12) - 2.0 / 3.0) < 1e-10);
    Cx lam(-0.3, 0.0);
    CHECK(std::abs(classical_mellin(cst, lam, 1e-8) - (-PI / std::sin(PI * lam))) < 1e-6);
    CHECK(std::abs(classical_mellin_brute(cst, lam, 1e-7) - (-PI / std::sin(PI * lam))) < 2e-4);
    // series divergence outside the radius
    CHECK_THROWS_AS(classical_series(cst, 1.2, 1e-10), DivergenceError);
}

TEST_CASE("optimality probe diverges as expected") {
    for (int n : {2, 3}) {
        auto rep = counterexample_probe(n, {10.0, 20.0, 30.0});
        CHECK(rep.series_max_abs <= 1e-12);
        CHECK(rep.growth_ratio >= 10.0);
        CHECK(rep.hardy_check_fails);
        CHECK(rep.divergent_as_expected);
        // cubic growth of the truncated integral: 27x from height 10 to 30
        CHECK(rep.growth_ratio > 20.0);
        CHECK(rep.growth_ratio < 40.0);
    }
}
