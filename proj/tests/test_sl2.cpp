#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmt/sl2.hpp"

#include <random>

using namespace rmt;

TEST_CASE("Iwasawa coordinates") {
    auto iw = iwasawa_sl2(mat2_cartan(Cx(0.8, 0)));
    CHECK(std::abs(iw.t - 0.8) < 1e-14);
    CHECK(std::abs(iw.theta) < 1e-14);
    CHECK(std::abs(iw.xi) < 1e-14);
    auto iw2 = iwasawa_sl2(mat2_rotation(0.6));
    CHECK(std::abs(iw2.theta - 0.6) < 1e-14);
    CHECK(std::abs(iw2.t) < 1e-14);
    auto iw3 = iwasawa_sl2(mat2_unipotent(1.7));
    CHECK(std::abs(iw3.xi - 1.7) < 1e-14);
    CHECK(std::abs(iw3.t) < 1e-14);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ur(-1.2, 1.2);
    for (int i = 0; i < 50; ++i) {
        Mat2 x = mat2_rotation(ur(rng)) * mat2_cartan(Cx(ur(rng), 0)) * mat2_unipotent(ur(rng));
        auto d = iwasawa_sl2(x);
        Mat2 rec = mat2_rotation(d.theta) * mat2_cartan(Cx(d.t, 0)) * mat2_unipotent(d.xi);
        double err = 0;
        for (int j = 0; j < 4; ++j) err = std::max(err, std::abs(rec.a[j] - x.a[j]));
        CHECK(err < 1e-12);
    }
    CHECK_THROWS_AS(iwasawa_sl2(Mat2{{Cx(1, 0.1), Cx(0, 0), Cx(0, 0), Cx(1, 0)}}), DomainError);
}

TEST_CASE("discrete spectrum sets") {
    CHECK(discrete_spectrum(0).empty());
    CHECK(discrete_spectrum(1).empty());
    CHECK(discrete_spectrum(-1).empty());
    CHECK(discrete_spectrum(2) == std::vector<int>{1});
    CHECK(discrete_spectrum(3) == std::vector<int>{2});
    CHECK(discrete_spectrum(4) == std::vector<int>{1, 3});
    CHECK(discrete_spectrum(-2) == std::vector<int>{-1});
    CHECK(discrete_spectrum(-4) == std::vector<int>{-1, -3});
    for (int n : {2, 3, 4, 5, -2, -5})
        CHECK(int(discrete_spectrum(n).size()) == (std::abs(n) - 1 + 1) / 2);
}

TEST_CASE("principal-series coefficient basics") {
    CHECK(std::abs(phi_nn(Cx(1.3, 0.7), 3, CartanPoint(0.0, 0.0)) - 1.0) < 1e-15);
    CHECK(std::abs(phi_nn(Cx(2, 0), 1, CartanPoint(0.5, 0.0)) - std::cosh(0.5)) < 1e-12);
    // evenness in lambda
    Cx a = phi_nn(Cx(0, 0.8), 2, CartanPoint(1.0, 0.0));
    Cx b = phi_nn(Cx(0, -0.8), 2, CartanPoint(1.0, 0.0));
    CHECK(std::abs(a - b) < 1e-10);
    // value is even in t (Weyl flip)
    Cx c = phi_nn(Cx(0.4, 0.2), 2, CartanPoint(-0.9, 0.0));
    Cx d = phi_nn(Cx(0.4, 0.2), 2, CartanPoint(0.9, 0.0));
    CHECK(std::abs(c - d) < 1e-12);
    CHECK_THROWS_AS(CartanPoint(0.5, 0.5), DomainError);
}

TEST_CASE("conjugation symmetry across the K-type sign") {
    for (double s : {0.0, 0.15, -0.25}) {
        Cx lhs = std::conj(phi_nn(Cx(0.5, 0.3), 2, CartanPoint(0.9, s)));
        Cx rhs = phi_nn(Cx(0.5, -0.3), -2, CartanPoint(0.9, -s));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("compact dual identity against the polynomial model") {
    for (int n : {0, 1, 2, 3})
        for (int m : {0, 1, 2, 3})
            for (double t : {0.0, 0.5, 1.25, 2.0}) {
                Cx lhs = psi_exact(m, n, mat2_cartan(Cx(t, 0)));
                Cx rhs = phi_nn(Cx(2.0 * m + n + 1.0, 0), n, CartanPoint(t, 0.0));
                // absolute for O(1) values, relative once the coefficient grows
                CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
            }
}

TEST_CASE("all three evaluation routes agree pairwise") {
    for (int n : {0, 2, 3, -2})
        for (Cx lam : {Cx(0, 4.0), Cx(0.8, 0.3)}) {
            // direct K-integral table vs asymptotic expansion
            Cx tab_lo = PhiTable(n, CartanPoint(1.8, 0.0), lam).eval(lam);
            Cx fast_lo = PhiAsymptotic(n, lam).eval(1.8);
            CHECK(std::abs(tab_lo - fast_lo) <= 1e-9 * std::max(1.0, std::abs(tab_lo)));
            // substituted-peak K-integral table vs asymptotic expansion
            Cx tab_hi = PhiTable(n, CartanPoint(2.6, 0.0), lam).eval(lam);
            Cx fast_hi = phi_nn(lam, n, CartanPoint(2.6, 0.0));
            CHECK(std::abs(tab_hi - fast_hi) <= 1e-9 * std::max(1.0, std::abs(tab_hi)));
        }
}

TEST_CASE("closed-form mapping resolution") {
    // exactly one candidate reproduces the K-integral on the validation grid
    double worst[4] = {0, 0, 0, 0};
    auto maps = {PhiHypMapping::repeated_param, PhiHypMapping::split_param, PhiHypMapping::half_shift,
                 PhiHypMapping::a_shift};
    int idx = 0;
    for (auto m : maps) {
        for (int n : {0, 1, 2, 3})
            for (Cx lam : {Cx(0.7, 0), Cx(1.0, 0.3), Cx(2.0, 0)})
                for (double t : {0.25, 0.5, 1.0})
                    worst[idx] = std::max(worst[idx], std::abs(phi_nn_hyp(lam, n, t, m) -
                                                               phi_nn(lam, n, CartanPoint(t, 0))));
        ++idx;
    }
    CHECK(worst[2] < 1e-10);        // half-shift validates
    CHECK(worst[0] > 1e-3);         // repeated-parameter form does not
    CHECK(worst[1] > 1e-3);         // nor the split-parameter variant
    CHECK(worst[3] > 1e-3);         // nor the a-shift variant
    // the n = 0 candidate is the classical spherical function for all of them
    CHECK(std::abs(phi_nn_hyp(Cx(1.4, 0), 0, 0.7, PhiHypMapping::half_shift) -
                   phi_nn(Cx(1.4, 0), 0, CartanPoint(0.7, 0))) < 1e-12);
}

TEST_CASE("discrete-series coefficients") {
    CHECK_THROWS_AS(psi_disc(2, 2, 0.5), DomainError);
    CHECK(std::abs(psi_disc(1, 2, 0.0) - 1.0) < 1e-13);
    CHECK(std::abs(psi_disc(1, 2, 0.5) - phi_nn(Cx(1, 0), 2, CartanPoint(0.5, 0))) < 1e-13);
    // formal degree normalization: int Psi_k^2 sinh 2t dt = 1/k
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}}) {
        auto g = [&, k = k, n = n](double t) {
            Cx v = psi_disc(k, n, t);
            return v * v * std::sinh(2.0 * t);
        };
        Cx I = integrate_segment(g, 0.0, 30.0, QuadTol(1e-10, 1e-9, 30)).value;
        CHECK(std::abs(I - 1.0 / k) < 1e-8);
    }
}

TEST_CASE("Plancherel density") {
    CHECK(std::abs(plancherel_mu(Parity::even, Cx(0, 0))) < 1e-15);
    Cx v = plancherel_mu(Parity::even, Cx(0, 2.0));
    CHECK(std::abs(v - Cx(0, -PI * std::tanh(PI))) < 1e-12);
    CHECK(std::abs(plancherel_mu(Parity::odd, Cx(1, 0))) < 1e-12);
    CHECK_THROWS_AS(plancherel_mu(Parity::even, Cx(3, 0)), PoleError);
    CHECK_THROWS_AS(plancherel_mu(Parity::odd, Cx(2, 0)), PoleError);
    // mu is even
    CHECK(std::abs(plancherel_mu(Parity::odd, Cx(0.3, 1.0)) -
                   plancherel_mu(Parity::odd, Cx(-0.3, -1.0))) < 1e-13);
}

TEST_CASE("radial symmetry of the kernel under inversion") {
    // Phi(a_{-t}) = Phi(a_t): the K-bi-equivariance collapse used by the transform
    for (int n : {0, 2, 3})
        for (double t : {0.4, 1.1}) {
            Cx a = phi_nn(Cx(0, 1.3), n, CartanPoint(t, 0));
            Cx b = phi_nn(Cx(0, 1.3), n, CartanPoint(-t, 0));
            CHECK(std::abs(a - b) < 1e-12);
        }
}

TEST_CASE("transform requires decay metadata") {
    RadialProfile p;
    p.t0 = 0;
    p.dt = 0.1;
    p.samples.assign(32, Cx(1, 0));
    p.tail_rate = 0.0;
    CHECK_THROWS_AS(transform_H(p, 0, Cx(0, 1)), DomainError);
}

TEST_CASE("invert() recovers a bump from sampled spectral data") {
    const int n = 2;
    Bump bump(1.1, 0.7, 6.0);
    RadialProfile f = RadialProfile::sample([&](double t) { return Cx(bump(t), 0); }, 0.0, 2.0,
                                            0.01);
    const double Y = 44.0;
    // sample the transform on a fine y-grid and hand invert() the interpolant
    const int ny = 881;
    std::vector<Cx> lams(ny);
    for (int i = 0; i < ny; ++i) lams[i] = Cx(0, Y * i / (ny - 1));
    auto fh = transform_H_batch(f, n, lams, 1e-9);
    RadialProfile fhg;
    fhg.t0 = 0.0;
    fhg.dt = Y / (ny - 1);
    fhg.samples = fh;
    auto fH = [&](double y) { return fhg.eval(std::abs(y)); };
    std::vector<Cx> fB;
    for (int k : discrete_spectrum(n)) fB.push_back(transform_B(f, n, k));
    for (double t : {0.8, 1.3}) {
        Cx rec = invert(fH, Y, fB, n, t, 1e-8);
        CHECK(std::abs(rec - f.eval(t)) < 1e-4);
    }
}

TEST_CASE("spherical round trip at n = 0") {
    Bump bump(1.2, 0.8, 6.0);
    RadialProfile f = RadialProfile::sample([&](double t) { return Cx(bump(t), 0); }, 0.0, 2.2,
                                            0.01);
    const double Y = 44.0;
    auto ygrid = composite_gk_nodes(0.0, Y, 0.8);
    std::vector<Cx> lams(ygrid.size());
    for (size_t i = 0; i < ygrid.size(); ++i) lams[i] = Cx(0, ygrid[i].x);
    auto fh = transform_H_batch(f, 0, lams, 1e-9);
    for (double t : {0.7, 1.2, 1.7}) {
        PhiTable tab(0, CartanPoint(t, 0.0), Cx(0, Y), 1e-12);
        Cx half(0, 0);
        for (size_t i = 0; i < ygrid.size(); ++i)
            half += ygrid[i].wk * fh[i] * tab.eval(lams[i]) *
                    plancherel_mu(Parity::even, lams[i]);
        Cx rec = sl2_inversion_kappa() * Cx(0, 1) * 2.0 * half / (4.0 * PI * PI);
        CHECK(std::abs(rec - f.eval(t)) < 1e-4);
    }
}
