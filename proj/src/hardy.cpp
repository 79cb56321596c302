#include "rmt/hardy.hpp"

#include "rmt/special.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

namespace rmt {

HardyCheckResult hardy_bound_check(const HardyFunction& a, int sample_count) {
    // log-spaced real offsets into the half-plane and heights up to 40
    std::vector<double> res, ims;
    int nr = std::max(4, sample_count / 16), ni = std::max(8, sample_count / 8);
    for (int i = 0; i < nr; ++i)
        res.push_back(-a.delta + 1e-3 +
                      (std::exp(3.0 * i / (nr - 1)) - 1.0) / (std::exp(3.0) - 1.0) * 25.0);
    ims.push_back(0.0);
    for (int i = 0; i < ni; ++i) ims.push_back(0.05 * std::pow(40.0 / 0.05, double(i) / (ni - 1)));

    double worst = 0.0;
    for (double x : res)
        for (double y : ims)
            for (double sgn : {1.0, -1.0}) {
                Cx lam(x, sgn * y);
                double ratio = std::abs(a.eval(lam)) * std::exp(a.p * x - a.A * std::abs(y)) / a.C;
                worst = std::max(worst, ratio);
                if (y == 0.0) break;
            }

    // Cauchy-Riemann residual on a coarse grid (finite differences)
    double cr = 0.0;
    const double h = 1e-5;
    for (double x : {-0.2, 0.3, 1.7})
        for (double y : {0.0, 0.9, 3.7}) {
            Cx z(x, y);
            Cx dx = (a.eval(z + h) - a.eval(z - h)) / (2.0 * h);
            Cx dy = (a.eval(z + Cx(0, h)) - a.eval(z - Cx(0, h))) / (2.0 * h);
            double scale = std::abs(dx) + std::abs(dy) + 1e-12;
            cr = std::max(cr, std::abs(dx + Cx(0, 1) * dy) / scale);
        }

    return {worst, cr, worst <= 1.0 + 1e-9 && cr < 1e-4};
}

namespace {

std::map<std::string, double> parse_kv(const std::string& s) {
    std::map<std::string, double> kv;
    if (s.empty()) return kv;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("hardy spec: expected k=v in '" + item + "'");
        kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return kv;
}

} // namespace

HardyFunction make_hardy(const std::string& spec) {
    std::string name = spec, args;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto kv = parse_kv(args);
    auto get = [&](const std::string& k, double dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    };

    HardyFunction h;
    h.name = spec;
    if (name == "exp") {
        double p = get("p", 1.0);
        h.eval = [p](Cx l) { return std::exp(-p * l); };
        h.A = 0.0;
        h.p = p;
        h.delta = get("delta", 1.0);
        h.C = 1.0 + 1e-12;
    } else if (name == "exp-over-linear") {
        double p = get("p", 1.0), delta = get("delta", 0.9);
        h.eval = [p](Cx l) { return std::exp(-p * l) / (l + 1.0); };
        h.A = 0.0;
        h.p = p;
        h.delta = delta;
        h.C = 1.0 / (1.0 - delta) + 1e-9;
    } else if (name == "gamma-reciprocal") {
        h.eval = [](Cx l) {
            // 1/Gamma(l+1) is entire; fill the lgamma poles with the limit 0
            double r = std::round(l.real());
            if (r <= -1.0 && std::abs(l.real() - r) < 1e-13 && std::abs(l.imag()) < 1e-13)
                return Cx(0.0, 0.0);
            return std::exp(-log_gamma(l + 1.0));
        };
        h.A = 2.0; // 1/|Gamma| grows like e^{(pi/2)|Im|}; admissible classically (A < pi)
        h.p = get("p", 1.0);
        h.delta = get("delta", 0.9);
        h.C = 2000.0;
    } else if (name == "const") {
        double c = get("c", 1.0);
        h.eval = [c](Cx) { return Cx(c, 0.0); };
        h.A = 0.0;
        h.p = 0.0;
        h.delta = get("delta", 0.9);
        h.C = c + 1e-12;
    } else if (name == "counterexample-cos") {
        // argument-reduced so the zeros at odd integers are exact in doubles
        h.eval = [](Cx l) { return l * cos_half_pi(l); };
        h.A = get("A", 1.5); // any A < pi/2 must fail the envelope
        h.p = get("p", 1.0);
        h.delta = 1.0;
        h.C = get("C", 100.0);
    } else if (name == "counterexample-sin") {
        h.eval = [](Cx l) { return l * sin_half_pi(l); };
        h.A = get("A", 1.5);
        h.p = get("p", 1.0);
        h.delta = 1.0;
        h.C = get("C", 100.0);
    } else if (name == "zero-on") {
        // e^{-p l} with a planted zero at l = k; stays in the class
        double p = get("p", 1.0), k = get("k", 1.0);
        h.eval = [p, k](Cx l) { return (l - k) / (l + k + 2.0) * std::exp(-p * l); };
        h.A = 0.0;
        h.p = p;
        h.delta = get("delta", 1.0);
        h.C = 4.0 + 2.0 * k;
    } else {
        throw ConfigError("make_hardy: unknown interpolant '" + name + "'");
    }
    return h;
}

} // namespace rmt
