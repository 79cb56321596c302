#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmt/quadrature.hpp"

using namespace rmt;

TEST_CASE("segment basics") {
    auto one = [](double) { return Cx(1, 0); };
    CHECK(std::abs(integrate_segment(one, 0.0, 1.0).value - 1.0) < 1e-14);
    auto s = [](double t) { return Cx(std::sin(t), 0); };
    CHECK(std::abs(integrate_segment(s, 0.0, PI).value - 2.0) < 1e-13);
}

TEST_CASE("Poisson-type integral cross-checked by a Riemann sum") {
    // (1/2pi) int (cosh 1 - sinh 1 cos phi)^{-1} dphi = (cosh^2 - sinh^2)^{-1/2} = 1
    auto f = [](double phi) {
        return Cx(1.0 / (std::cosh(1.0) - std::sinh(1.0) * std::cos(phi)) / (2.0 * PI), 0);
    };
    Cx v = integrate_segment(f, 0.0, 2.0 * PI).value;
    CHECK(std::abs(v - 1.0) < 1e-12);
    // brute Riemann sum as the independent route
    Cx r(0, 0);
    const int N = 200000;
    for (int i = 0; i < N; ++i) r += f((i + 0.5) * 2.0 * PI / N) * (2.0 * PI / N);
    CHECK(std::abs(v - r) < 1e-9);
}

TEST_CASE("QuadTol invariant") {
    CHECK_THROWS_AS(QuadTol(1e-16, 1e-10), ConfigError);
}

TEST_CASE("max depth reports best estimate") {
    // |x|^{-0.95} is integrable but needle-sharp; shallow depth cap must throw
    auto f = [](double x) { return Cx(std::pow(std::abs(x) + 1e-14, -0.95), 0); };
    try {
        integrate_segment(f, 0.0, 1.0, QuadTol(1e-12, 1e-12, 6));
        CHECK(false);
    } catch (const AccuracyError& e) {
        CHECK(std::abs(e.best) > 0.0);
        CHECK(e.err_estimate > 0.0);
    }
}

TEST_CASE("vertical line: Gaussian, symmetry, rejection") {
    auto g = [](Cx lam) { return std::exp(lam * lam); };
    auto r = integrate_vertical_line(g, 0.0, QuadTol(1e-11, 1e-11), {1.0, 0});
    CHECK(std::abs(r.value - std::sqrt(PI)) < 1e-10);
    auto odd = [](Cx lam) { return lam.imag() * std::exp(lam * lam); };
    auto r2 = integrate_vertical_line(odd, 0.0, QuadTol(1e-11, 1e-11), {1.0, 1});
    CHECK(std::abs(r2.value) < 1e-11);
    CHECK_THROWS_AS(integrate_vertical_line(g, 0.0, QuadTol(1e-11, 1e-11), {-1.0, 0}),
                    DomainError);
}

TEST_CASE("rectangle contour values") {
    auto inv = [](Cx z) { return 1.0 / z; };
    auto r = integrate_rectangle(inv, Cx(-1, -1), Cx(1, 1), QuadTol(1e-12, 1e-12));
    CHECK(std::abs(r.value - 2.0 * PI * Cx(0, 1)) < 1e-10);
    auto entire = [](Cx z) { return std::exp(z) * z; };
    auto r2 = integrate_rectangle(entire, Cx(-1, -1), Cx(1, 1), QuadTol(1e-12, 1e-12));
    CHECK(std::abs(r2.value) < 1e-11);
    // lambda/cos(pi lambda/2) around a square enclosing lambda = 1 only
    auto f = [](Cx z) { return z / std::cos(PI * z / 2.0); };
    auto r3 = integrate_rectangle(f, Cx(0.2, -0.7), Cx(1.8, 0.7), QuadTol(1e-12, 1e-12));
    Cx expect = 2.0 * PI * Cx(0, 1) * Cx(-2.0 / PI, 0);
    CHECK(std::abs(r3.value - expect) < 1e-10);
    // cross-check the enclosed residue numerically
    Cx res = residue_simple(f, Cx(1, 0), 0.4);
    CHECK(std::abs(r3.value - 2.0 * PI * Cx(0, 1) * res) < 1e-10);
}

TEST_CASE("simple residues") {
    auto inv = [](Cx z) { return 1.0 / z; };
    CHECK(std::abs(residue_simple(inv, Cx(0, 0), 0.5) - 1.0) < 1e-12);
    auto f = [](Cx z) { return z / std::cos(PI * z / 2.0); };
    for (long j = 0; j <= 3; ++j) {
        double pole = 2.0 * j + 1.0;
        Cx expect = double(parity_sign(j + 1)) * (2.0 / PI) * pole;
        CHECK(std::abs(residue_simple(f, Cx(pole, 0), 0.5) - expect) < 1e-10);
    }
    auto g = [](Cx z) { return 1.0 / std::sin(PI * z / 2.0); };
    CHECK(std::abs(residue_simple(g, Cx(0, 0), 0.5) - 2.0 / PI) < 1e-11);
    // radius overlapping a neighbouring pole must be detected
    CHECK_THROWS_AS(residue_simple(g, Cx(0, 0), 2.5), DomainError);
}

TEST_CASE("series with certified tails") {
    auto geo = [](long m) { return Cx(std::pow(0.5, double(m)), 0); };
    auto r = sum_series_with_tail(geo, {1.0, 0.5}, 1e-12);
    CHECK(std::abs(r.value - 2.0) < 1e-11);
    auto alt = [](long m) {
        double f = 1.0;
        for (long j = 2; j <= m; ++j) f *= j;
        return Cx(parity_sign(m) / f, 0);
    };
    auto r2 = sum_series_with_tail(alt, {2.0, 0.5}, 1e-12);
    CHECK(std::abs(r2.value - std::exp(-1.0)) < 1e-11);
    CHECK_THROWS_AS(sum_series_with_tail(geo, {1.0, 1.02}, 1e-10), DivergenceError);
}
