#include "rmt/quadrature.hpp"

namespace rmt {

namespace gk {
// (G7, K15) pair
const double xk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                      0.741531185599394, 0.586087235467691, 0.405845151377397,
                      0.207784955007898, 0.0};
const double wk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                      0.140653259715525, 0.169004726639267, 0.190350578064785,
                      0.204432940075298, 0.209482141084728};
const double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                      0.417959183673469};
} // namespace gk

IntegralResult integrate_vertical_line(const std::function<Cx(Cx)>& f, double x0,
                                       const QuadTol& tol, const DecayCert& decay) {
    if (decay.rate <= 0.0)
        throw DomainError("integrate_vertical_line: decay rate must be positive");
    const int d = decay.poly_degree;
    const double r = decay.rate;

    // estimate C on a sparse height grid
    double C = 0.0;
    for (double y : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
        for (double s : {1.0, -1.0}) {
            double m = std::abs(f(Cx(x0, s * y)));
            C = std::max(C, m * std::exp(r * y) / std::pow(1.0 + y, d));
        }
    }
    C = 10.0 * std::max(C, 1e-300);

    // tail(Y) = int_Y^inf (1+y)^d e^{-ry} dy <= (1+Y)^d e^{-rY}/r * 1/(1 - d/(r(1+Y)))
    auto tail_bound = [&](double Y) {
        double den = 1.0 - double(d) / (r * (1.0 + Y));
        if (den <= 0.1) return 1e300;
        return std::pow(1.0 + Y, d) * std::exp(-r * Y) / r / den;
    };
    double Y = 5.0;
    while (C * tail_bound(Y) > tol.abs_tol / 10.0 && Y < 4000.0) Y *= 1.25;
    if (C * tail_bound(Y) > tol.abs_tol / 10.0)
        throw AccuracyError("integrate_vertical_line: cannot certify tail", Cx(0, 0), 1e300);

    auto g = [&](double y) { return f(Cx(x0, y)); };
    IntegralResult lower = integrate_segment(g, -Y, 0.0, tol);
    IntegralResult upper = integrate_segment(g, 0.0, Y, tol);
    return {lower.value + upper.value, lower.err + upper.err + 2.0 * C * tail_bound(Y)};
}

IntegralResult integrate_vertical_line_truncated(const std::function<Cx(Cx)>& f, double x0,
                                                 double height, const QuadTol& tol) {
    auto g = [&](double y) { return f(Cx(x0, y)); };
    IntegralResult lower = integrate_segment(g, -height, 0.0, tol);
    IntegralResult upper = integrate_segment(g, 0.0, height, tol);
    return {lower.value + upper.value, lower.err + upper.err};
}

IntegralResult integrate_rectangle(const std::function<Cx(Cx)>& f, Cx corner_lo, Cx corner_hi,
                                   const QuadTol& tol) {
    const double x0 = corner_lo.real(), y0 = corner_lo.imag();
    const double x1 = corner_hi.real(), y1 = corner_hi.imag();
    if (!(x1 > x0) || !(y1 > y0))
        throw DomainError("integrate_rectangle: corners must be ordered (lo < hi)");
    Cx acc(0, 0);
    double err = 0.0;
    // bottom, right, top, left: counter-clockwise, dlambda included per edge
    auto bottom = integrate_segment([&](double x) { return f(Cx(x, y0)); }, x0, x1, tol);
    auto right = integrate_segment([&](double y) { return f(Cx(x1, y)); }, y0, y1, tol);
    auto top = integrate_segment([&](double x) { return f(Cx(x, y1)); }, x0, x1, tol);
    auto left = integrate_segment([&](double y) { return f(Cx(x0, y)); }, y0, y1, tol);
    acc = bottom.value + Cx(0, 1) * right.value - top.value - Cx(0, 1) * left.value;
    err = bottom.err + right.err + top.err + left.err;
    return {acc, err};
}

std::vector<QuadNode> composite_gk_nodes(double a, double b, double h) {
    int np = std::max(1, int(std::ceil((b - a) / h)));
    std::vector<QuadNode> nodes;
    nodes.reserve(15 * np);
    for (int p = 0; p < np; ++p) {
        double a0 = a + (b - a) * p / np, b0 = a + (b - a) * (p + 1) / np;
        double hw = 0.5 * (b0 - a0), c = 0.5 * (a0 + b0);
        for (int i = 0; i < 7; ++i) {
            bool g = (i % 2 == 1);
            nodes.push_back({c - hw * gk::xk[i], hw * gk::wk[i], g ? hw * gk::wg[i / 2] : 0.0});
            nodes.push_back({c + hw * gk::xk[i], hw * gk::wk[i], g ? hw * gk::wg[i / 2] : 0.0});
        }
        nodes.push_back({c, hw * gk::wk[7], hw * gk::wg[3]});
    }
    return nodes;
}

namespace {

Cx residue_trapezoid(const std::function<Cx(Cx)>& f, Cx pole, double radius, double tol) {
    // (1/2pi i) oint f = (1/N) sum f(pole + r e^{i th_j}) r e^{i th_j}; spectral in N
    Cx prev(0, 0);
    for (int N = 32; N <= 8192; N *= 2) {
        Cx s(0, 0);
        for (int j = 0; j < N; ++j) {
            double th = 2.0 * PI * j / N;
            Cx w = radius * std::exp(Cx(0, th));
            s += f(pole + w) * w;
        }
        s /= double(N);
        if (N > 32 && std::abs(s - prev) < tol * std::max(1.0, std::abs(s))) return s;
        prev = s;
    }
    throw AccuracyError("residue_simple: trapezoid did not converge", prev, 1.0);
}

} // namespace

Cx residue_simple(const std::function<Cx(Cx)>& f, Cx pole, double radius, double tol) {
    if (radius <= 0.0) throw DomainError("residue_simple: radius must be positive");
    Cx r1 = residue_trapezoid(f, pole, radius, tol);
    Cx r2 = residue_trapezoid(f, pole, radius / 2.0, tol);
    if (std::abs(r1 - r2) > 50.0 * tol * std::max(1.0, std::abs(r1)))
        throw DomainError("residue_simple: radius-halving disagreement (pole not simple or another pole nearby)");
    return r2;
}

SeriesResult sum_series_with_tail(const std::function<Cx(long)>& term, const TailCert& cert,
                                  double abs_tol, long m_start, long max_terms) {
    if (cert.ratio >= 1.0)
        throw DivergenceError("sum_series_with_tail: certified ratio >= 1, series diverges");
    if (cert.ratio < 0.0) throw DomainError("sum_series_with_tail: ratio must be nonnegative");
    Cx sum(0, 0), comp(0, 0);
    long m = m_start;
    for (; m < m_start + max_terms; ++m) {
        Cx t = term(m);
        // Kahan
        Cx y = t - comp;
        Cx s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        double tail = cert.C * std::pow(cert.ratio, double(m + 1)) / (1.0 - cert.ratio);
        if (tail < abs_tol) return {sum, m - m_start + 1};
    }
    throw AccuracyError("sum_series_with_tail: term budget exhausted", sum, 1.0);
}

} // namespace rmt
