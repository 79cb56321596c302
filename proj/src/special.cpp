#include "rmt/special.hpp"

#include <array>

namespace rmt {

namespace {

// Lanczos g = 7, 9 coefficients
constexpr double LANCZOS_G = 7.0;
constexpr std::array<double, 9> LANCZOS_C = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

constexpr double LOG_SQRT_2PI = 0.91893853320467274178032973640562;

bool near_nonpos_int(Cx z, double tol = 1e-12) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

Cx log_gamma_core(Cx z) {
    // Re z >= 1/2
    Cx x = LANCZOS_C[0];
    for (int k = 1; k < 9; ++k) x += LANCZOS_C[k] / (z + double(k - 1));
    Cx t = z + (LANCZOS_G - 0.5);
    return LOG_SQRT_2PI + (z - 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

Cx log_sin(Cx z) {
    // sin z = e^{-iz}(1 - e^{2iz}) i/2 for Im z > 0, mirrored below; avoids overflow
    const Cx I(0.0, 1.0);
    const double LN2 = 0.69314718055994530941723212145818;
    if (z.imag() > 0.0)
        return I * (PI / 2) - LN2 - I * z + std::log(1.0 - std::exp(2.0 * I * z));
    return -I * (PI / 2) - LN2 + I * z + std::log(1.0 - std::exp(-2.0 * I * z));
}

Cx log_gamma(Cx z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (near_nonpos_int(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(PI) - log_sin(PI * z) - log_gamma_core(1.0 - z);
}

namespace {

bool is_nonpos_int_param(Cx a, long& n_out) {
    double r = std::round(a.real());
    if (r > 0.0 || std::abs(a.real() - r) > 1e-13 || std::abs(a.imag()) > 1e-13) return false;
    n_out = long(-r);
    return true;
}

Cx hyp2f1_series(Cx a, Cx b, Cx c, Cx z, long max_terms = 200000) {
    Cx term(1.0, 0.0), sum(1.0, 0.0);
    int small_count = 0;
    for (long k = 0; k < max_terms; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-30)) {
            if (++small_count >= 3) return sum;
        } else {
            small_count = 0;
        }
    }
    throw AccuracyError("hyp2f1: series did not converge", sum, std::abs(term));
}

Cx hyp2f1_terminating(Cx a, Cx b, Cx c, Cx z, long n) {
    // a = -n
    Cx term(1.0, 0.0), sum(1.0, 0.0);
    for (long k = 0; k < n; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
    }
    return sum;
}

} // namespace

Cx hyp2f1(Cx a, Cx b, Cx c, Cx z) {
    if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(z))
        throw DomainError("hyp2f1: non-finite input");
    long n;
    if (is_nonpos_int_param(a, n)) return hyp2f1_terminating(a, b, c, z, n);
    if (is_nonpos_int_param(b, n)) return hyp2f1_terminating(b, a, c, z, n);
    if (near_nonpos_int(c)) throw DomainError("hyp2f1: c is a nonpositive integer");
    if (std::abs(z) <= 0.6) return hyp2f1_series(a, b, c, z);

    if (z.real() > 0.55) throw DomainError("hyp2f1: argument outside supported region");
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    Cx w = z / (z - 1.0);
    if (std::abs(w) > 0.985)
        throw AccuracyError("hyp2f1: transformed argument too close to 1", Cx(0, 0), 1.0);
    return std::exp(-a * std::log(1.0 - z)) * hyp2f1_series(a, c - b, c, w);
}

Cx jacobi_c(const JacobiParams& p, Cx lambda) {
    double rho = p.rho();
    Cx w1 = (lambda + rho) / 2.0;
    Cx w2 = (lambda - rho) / 2.0 + p.alpha + 1.0;
    bool num_pole = near_nonpos_int(lambda, 1e-9);
    bool d1_pole = near_nonpos_int(w1, 1e-9);
    bool d2_pole = near_nonpos_int(w2, 1e-9);
    if (!num_pole && !d1_pole && !d2_pole) {
        Cx lg = log_gamma(Cx(p.alpha + 1.0, 0.0)) + log_gamma(lambda) - log_gamma(w1) -
                log_gamma(w2);
        return std::exp((rho - lambda) * std::log(2.0) + lg);
    }
    if (!num_pole) return Cx(0.0, 0.0); // denominator pole only: zero of c
    if (num_pole && d2_pole && !d1_pole) {
        // simple poles cancel: Gamma(lambda)/Gamma(w2) -> (-1)^{k+M} M!/(2 k!)
        long k = std::lround(-lambda.real());
        long M = std::lround(-w2.real());
        Cx lg = log_gamma(Cx(p.alpha + 1.0, 0.0)) + log_gamma(Cx(double(M + 1), 0)) -
                log_gamma(Cx(double(k + 1), 0)) - log_gamma(w1);
        return 0.5 * double(parity_sign(k + M)) *
               std::exp((rho - lambda) * std::log(2.0) + lg);
    }
    throw PoleError("jacobi_c: pole of the c-function");
}

std::vector<Cx> JacobiAsymptotic::expansion_coeffs(const JacobiParams& p, Cx lambda, int K) {
    // Recursion from L u = (lambda^2 - rho^2) u with
    // L = d^2/dt^2 + ((2a+1) coth t + (2b+1) tanh t) d/dt:
    //   4k(lambda - k) G_k = sum_{m=1}^{k} q_m G_{k-m} (lambda - rho - 2(k-m)),
    //   q_m = 2((2a+1) + (-1)^m (2b+1)).
    double rho = p.rho();
    double qa = 2.0 * p.alpha + 1.0, qb = 2.0 * p.beta + 1.0;
    std::vector<Cx> G(K);
    G[0] = 1.0;
    for (int k = 1; k < K; ++k) {
        Cx s(0.0, 0.0);
        for (int m = 1; m <= k; ++m) {
            double qm = 2.0 * (qa + ((m % 2) ? -qb : qb));
            if (qm == 0.0) continue;
            s += qm * G[k - m] * (lambda - rho - 2.0 * double(k - m));
        }
        Cx denom = 4.0 * double(k) * (lambda - double(k));
        if (std::abs(denom) < 1e-8)
            throw PoleError("jacobi asymptotic expansion: lambda too close to a positive integer");
        G[k] = s / denom;
    }
    return G;
}

std::vector<Cx> JacobiAsymptotic::expansion_residues(const JacobiParams& p, long k, int K) {
    double rho = p.rho();
    double qa = 2.0 * p.alpha + 1.0, qb = 2.0 * p.beta + 1.0;
    const Cx lam(double(k), 0.0);
    std::vector<Cx> G(K, Cx(0, 0)); // regular values below k, residues from k on
    G[0] = 1.0;
    for (long j = 1; j < K; ++j) {
        Cx s(0, 0);
        for (long m = 1; m <= j; ++m) {
            double qm = 2.0 * (qa + ((m % 2) ? -qb : qb));
            if (qm == 0.0) continue;
            // below k both factors are regular; from k on the residues propagate
            // through the same linear recursion
            if (j - m < k && j > k) continue; // regular part does not feed residues
            s += qm * G[j - m] * (lam - rho - 2.0 * double(j - m));
        }
        if (j < k)
            G[j] = s / (4.0 * double(j) * (lam - double(j)));
        else if (j == k)
            G[j] = s / (4.0 * double(j)); // residue: d/dlambda of 4j(lambda-j) is 4j
        else
            G[j] = s / (4.0 * double(j) * (lam - double(j)));
    }
    return G;
}

JacobiAsymptotic::JacobiAsymptotic(const JacobiParams& p, Cx lambda, int max_terms)
    : JacobiAsymptotic(p, lambda, max_terms, false) {}

JacobiAsymptotic JacobiAsymptotic::resonant_zero(const JacobiParams& p, long k, int max_terms) {
    return JacobiAsymptotic(p, Cx(double(k), 0.0), max_terms, true);
}

JacobiAsymptotic::JacobiAsymptotic(const JacobiParams& p, Cx lambda, int max_terms, bool resonant)
    : p_(p), lambda_(lambda) {
    try {
        if (resonant) {
            long k = std::lround(lambda.real());
            // c has a simple zero at k; only the residues of G_j survive there:
            //   lim c(l) Phi_l = c'(k) sum_{j>=k} Res G_j e^{(k-rho-2j)t}
            double rho = p.rho();
            double M = -((double(k) - rho) / 2.0 + p.alpha + 1.0);
            long Mi = std::lround(M);
            if (Mi < 0 || std::abs(M - double(Mi)) > 1e-9)
                throw DomainError("jacobi resonant_zero: c(k) does not vanish");
            Cx lgp = log_gamma(Cx(p.alpha + 1.0, 0)) + log_gamma(Cx(double(Mi + 1), 0)) +
                     log_gamma(Cx(double(k), 0)) - log_gamma(Cx((double(k) + rho) / 2.0, 0));
            c_plus_ = 0.5 * double(parity_sign(Mi)) *
                      std::exp((rho - double(k)) * std::log(2.0) + lgp);
            coef_plus_ = expansion_residues(p, k, max_terms);
            for (long j = 0; j < std::min<long>(k, max_terms); ++j) coef_plus_[j] = Cx(0, 0);
            c_minus_ = jacobi_c(p, -lambda);
            coef_minus_ = expansion_coeffs(p, -lambda, max_terms);
            return;
        }
        c_plus_ = jacobi_c(p, lambda);
        c_minus_ = jacobi_c(p, -lambda);
        // a vanishing c drops its branch entirely
        coef_plus_ = (c_plus_ == Cx(0, 0)) ? std::vector<Cx>(max_terms, Cx(0, 0))
                                           : expansion_coeffs(p, lambda, max_terms);
        coef_minus_ = (c_minus_ == Cx(0, 0)) ? std::vector<Cx>(max_terms, Cx(0, 0))
                                             : expansion_coeffs(p, -lambda, max_terms);
    } catch (const PoleError&) {
        usable_ = false;
    }
}

Cx JacobiAsymptotic::eval(Cx t) const {
    if (!usable_) throw AccuracyError("jacobi asymptotic: unusable at this lambda", Cx(0, 0), 1.0);
    if (t.real() < 0.2)
        throw AccuracyError("jacobi asymptotic: Re t too small", Cx(0, 0), 1.0);
    double rho = p_.rho();
    Cx q = std::exp(-2.0 * t); // |q| = e^{-2 Re t} < 1
    Cx qk(1.0, 0.0);
    Cx sp(0.0, 0.0), sm(0.0, 0.0);
    double tail = 1e300;
    int small_run = 0; // even/odd coefficients can vanish identically, so demand a run
    size_t k = 0;
    for (; k < coef_plus_.size(); ++k) {
        Cx tp = coef_plus_[k] * qk, tm = coef_minus_[k] * qk;
        sp += tp;
        sm += tm;
        tail = std::abs(tp) + std::abs(tm);
        qk *= q;
        if (k > 4 && tail < 1e-17 * (std::abs(sp) + std::abs(sm) + 1e-30)) {
            if (++small_run >= 3) break;
        } else {
            small_run = 0;
        }
    }
    if (k + 1 >= coef_plus_.size() && tail > 1e-12 * (std::abs(sp) + std::abs(sm) + 1e-30))
        throw AccuracyError("jacobi asymptotic: slow convergence", Cx(0, 0), tail);
    return c_plus_ * std::exp((lambda_ - rho) * t) * sp + c_minus_ * std::exp((-lambda_ - rho) * t) * sm;
}

JacobiEval::JacobiEval(const JacobiParams& p, Cx lambda, int max_terms) {
    double r = std::round(lambda.real());
    bool integer = r >= 1.0 && std::abs(lambda.real() - r) < 1e-8 &&
                   std::abs(lambda.imag()) < 1e-8;
    if (integer && jacobi_c(p, Cx(r, 0.0)) == Cx(0, 0)) {
        // c(k) = 0: exact degenerate limit
        legs_.push_back(JacobiAsymptotic::resonant_zero(p, std::lround(r), max_terms));
    } else if (integer) {
        // both branches genuinely present; the coefficients have simple poles
        // at k that cancel in the symmetric average (relative bias O((eps t)^2))
        const double eps = 3e-6;
        legs_.emplace_back(p, Cx(r + eps, 0.0), max_terms);
        legs_.emplace_back(p, Cx(r - eps, 0.0), max_terms);
    } else {
        legs_.emplace_back(p, lambda, max_terms);
    }
}

bool JacobiEval::usable() const {
    for (auto& l : legs_)
        if (!l.usable()) return false;
    return !legs_.empty();
}

Cx JacobiEval::eval(Cx t) const {
    if (legs_.size() == 1) return legs_[0].eval(t);
    return 0.5 * (legs_[0].eval(t) + legs_[1].eval(t));
}

Cx jacobi_phi(const JacobiParams& p, Cx lambda, Cx t) {
    if (std::abs(t.imag()) > 0.3 + 1e-12) throw DomainError("jacobi_phi: |Im t| > 0.3");
    double rho = p.rho();
    Cx sh = std::sinh(t);
    Cx z = -sh * sh;
    Cx a = (rho - lambda) / 2.0, b = (rho + lambda) / 2.0, c(p.alpha + 1.0, 0.0);

    double tre = std::abs(t.real());
    Cx w = z / (z - 1.0); // = tanh^2 t
    // parameter-size heuristic: the hypergeometric series loses digits when |b w| is large
    double par = std::max(std::abs(a), std::abs(b));
    bool series_ok = (std::abs(w) < 0.7) && (par * std::abs(w) < 24.0);
    if (series_ok) return hyp2f1(a, b, c, z);

    if (tre < 0.25)
        return hyp2f1(a, b, c, z); // last resort near t = 0; parameters moderate there in practice
    JacobiAsymptotic asym(p, lambda);
    if (asym.usable()) {
        Cx tt = (t.real() < 0.0) ? -t : t; // even in t
        return asym.eval(tt);
    }
    return hyp2f1(a, b, c, z);
}

} // namespace rmt
