#ifndef RMT_QUADRATURE_HPP
#define RMT_QUADRATURE_HPP

#include "rmt/types.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace rmt {

struct QuadTol {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 60;
    QuadTol() = default;
    QuadTol(double a, double r, int d = 60) : abs_tol(a), rel_tol(r), max_depth(d) {
        if (abs_tol < 64.0 * 2.220446049250313e-16)
            throw ConfigError("QuadTol: abs_tol below 64*machine-epsilon");
        if (rel_tol <= 0.0) throw ConfigError("QuadTol: rel_tol must be positive");
    }
};

struct IntegralResult {
    Cx value;
    double err;
};

// Gauss-Kronrod 7/15 nodes on [-1,1] (positive half; symmetric)
namespace gk {
extern const double xk[8];  // Kronrod abscissae, xk[7] = 0
extern const double wk[8];  // Kronrod weights
extern const double wg[4];  // Gauss weights for xk[1], xk[3], xk[5], xk[7]
} // namespace gk

// One GK15 panel: value, embedded error, plus node/value export for tables.
template <typename F>
IntegralResult gk15_panel(F&& f, double a, double b) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    Cx fv[15];
    int idx = 0;
    for (int i = 0; i < 7; ++i) {
        fv[idx++] = f(c - h * gk::xk[i]);
        fv[idx++] = f(c + h * gk::xk[i]);
    }
    fv[idx] = f(c);
    Cx k(0, 0), g(0, 0);
    idx = 0;
    for (int i = 0; i < 7; ++i) {
        k += gk::wk[i] * (fv[idx] + fv[idx + 1]);
        if (i % 2 == 1) g += gk::wg[i / 2] * (fv[idx] + fv[idx + 1]);
        idx += 2;
    }
    k += gk::wk[7] * fv[14];
    g += gk::wg[3] * fv[14];
    k *= h;
    g *= h;
    double err = std::abs(k - g);
    // standard GK error sharpening
    err = std::pow(200.0 * err, 1.5);
    err = std::min(std::abs(k - g), err);
    return {k, std::max(err, 1e-18 * std::abs(k))};
}

// Adaptive bisection on [a,b].  Error model: accept a panel when its embedded
// error estimate is below the share of the global tolerance proportional to
// its length.  Throws AccuracyError (carrying the best estimate) at max_depth.
template <typename F>
IntegralResult integrate_segment(F&& f, double a, double b, const QuadTol& tol = QuadTol()) {
    struct Panel {
        double a, b;
        int depth;
        IntegralResult r;
    };
    if (!(b > a) && !(a > b)) return {Cx(0, 0), 0.0};
    const double len = std::abs(b - a);
    std::vector<Panel> stack;
    stack.push_back({a, b, 0, gk15_panel(f, a, b)});
    // two passes: estimate magnitude, then refine against mixed tolerance
    Cx total = stack[0].r.value;
    Cx sum(0, 0);
    double err_sum = 0.0;
    std::vector<Panel> work;
    work.swap(stack);
    bool depth_hit = false;
    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();
        double goal = std::max(tol.abs_tol, tol.rel_tol * std::abs(total)) *
                      (std::abs(p.b - p.a) / len);
        if (p.r.err <= goal || p.depth >= tol.max_depth) {
            if (p.r.err > goal) depth_hit = true;
            sum += p.r.value;
            err_sum += p.r.err;
            continue;
        }
        double m = 0.5 * (p.a + p.b);
        Panel l{p.a, m, p.depth + 1, gk15_panel(f, p.a, m)};
        Panel r{m, p.b, p.depth + 1, gk15_panel(f, m, p.b)};
        total += l.r.value + r.r.value - p.r.value; // running refinement of the magnitude estimate
        work.push_back(l);
        work.push_back(r);
    }
    if (depth_hit && err_sum > 4.0 * std::max(tol.abs_tol, tol.rel_tol * std::abs(sum)))
        throw AccuracyError("integrate_segment: max depth reached", sum, err_sum);
    return {sum, err_sum};
}

struct DecayCert {
    double rate;      // > 0
    int poly_degree;  // |f(x0+iy)| <= C (1+|y|)^d e^{-rate |y|}
};

// Integral over the vertical line Re = x0, parametrized by height:
//   returns  int_{-inf}^{inf} f(x0 + i y) dy
// (the caller supplies the dlambda = i dy factor when needed).
// Truncation height certified from the decay bound; the constant C is
// estimated by sampling and inflated by a safety factor.
IntegralResult integrate_vertical_line(const std::function<Cx(Cx)>& f, double x0,
                                       const QuadTol& tol, const DecayCert& decay);

// Truncated variant used by the divergence probe: no tail certificate.
IntegralResult integrate_vertical_line_truncated(const std::function<Cx(Cx)>& f, double x0,
                                                 double height, const QuadTol& tol);

// Counter-clockwise rectangle with corners {x0, x1} x {y0, y1}.
IntegralResult integrate_rectangle(const std::function<Cx(Cx)>& f, Cx corner_lo, Cx corner_hi,
                                   const QuadTol& tol);

// (1/2pi i) contour integral over a circle around `pole`; matches the residue
// for a simple pole.  Radius-halving cross-check guards against neighbours.
Cx residue_simple(const std::function<Cx(Cx)>& f, Cx pole, double radius,
                  double tol = 1e-11);

// flattened composite GK15 node set on [a,b] with panel width <= h
struct QuadNode {
    double x, wk, wg;
};
std::vector<QuadNode> composite_gk_nodes(double a, double b, double h);

struct TailCert {
    double C;
    double ratio; // |term(m)| <= C ratio^m for m >= m0
};

struct SeriesResult {
    Cx value;
    long m_used;
};

// Sums term(0) + term(1) + ... until the certified geometric tail drops
// below abs_tol.  ratio >= 1 is a divergence error by contract.
SeriesResult sum_series_with_tail(const std::function<Cx(long)>& term, const TailCert& cert,
                                  double abs_tol, long m_start = 0, long max_terms = 200000);

} // namespace rmt

#endif
