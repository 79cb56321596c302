#include "rmt/su1n.hpp"

#include "rmt/quadrature.hpp"

#include <algorithm>

namespace rmt {

RootData structure_constants(int n, int l) {
    ChiParam par(n, l); // validates
    RootData r;
    r.m_beta = 2 * (n - 1);
    r.m_2beta = 1;
    r.rho = n;
    r.m_plus_beta = 2 * (n - 1) - 2 * par.abs_l();
    r.m_plus_2beta = 1 + 2 * par.abs_l();
    r.rho_plus = n + par.abs_l();
    return r;
}

Cx c_fn(Cx lambda, double m_beta, double m_2beta) {
    double rho = 0.5 * m_beta + m_2beta;
    Cx lg = log_gamma(Cx(0.5 * (m_beta + m_2beta + 1.0), 0)) + log_gamma(lambda) -
            log_gamma(lambda / 2.0 + m_beta / 4.0 + m_2beta / 2.0) -
            log_gamma(lambda / 2.0 + m_beta / 4.0 + 0.5);
    return std::exp((rho - lambda) * std::log(2.0) + lg);
}

Cx c_product_inv(Cx lambda, int n, int l) {
    ChiParam par(n, l);
    int al = par.abs_l();
    if (std::abs(lambda) < 1e-9) return Cx(0, 0); // p has a zero of order >= 1 at 0
    Cx num = log_gamma((lambda + double(n + al)) / 2.0) + log_gamma((lambda + double(n - al)) / 2.0) +
             log_gamma((-lambda + double(n + al)) / 2.0) + log_gamma((-lambda + double(n - al)) / 2.0);
    Cx den = log_gamma(lambda) + log_gamma(-lambda);
    return std::exp(-2.0 * double(n + al) * std::log(2.0) - 2.0 * log_gamma(Cx(n, 0)) + num - den);
}

CProductParts gamma_pq(int n, int l) {
    ChiParam par(n, l);
    const int al = par.abs_l();
    const int rp = n + al;      // rho(m_plus)
    const int nm = n - al;
    CProductParts parts;
    parts.gamma = PI * std::pow(2.0, 3.0 - 4.0 * n - 2.0 * al) /
                  std::pow(std::tgamma(double(n)), 2.0);
    if (l % 2 == 0) parts.gamma = -parts.gamma;
    if (rp % 2 == 1) {
        // n, l opposite parity: p = lambda * prod over both families, q = tan
        parts.lambda_power = 1;
        parts.q_is_tan = true;
        for (int j = 1; j <= (rp - 1) / 2; ++j) parts.roots_sq.push_back(double(rp - 2 * j));
        for (int j = 1; j <= (nm - 1) / 2; ++j) parts.roots_sq.push_back(double(nm - 2 * j));
    } else {
        // same parity: p = lambda^3 * products, q = cot
        parts.lambda_power = 3;
        parts.q_is_tan = false;
        for (int j = 1; j <= rp / 2 - 1; ++j) parts.roots_sq.push_back(double(rp - 2 * j));
        for (int j = 1; j <= nm / 2 - 1; ++j) parts.roots_sq.push_back(double(nm - 2 * j));
    }
    return parts;
}

Cx eval_p(const CProductParts& parts, Cx lambda) {
    Cx p = ipow(lambda, parts.lambda_power);
    for (double r : parts.roots_sq) p *= (lambda * lambda - r * r);
    return p;
}

Cx eval_c_parts(const CProductParts& parts, Cx lambda) {
    Cx q = parts.q_is_tan ? std::tan(PI * lambda / 2.0) : 1.0 / std::tan(PI * lambda / 2.0);
    return parts.gamma * eval_p(parts, lambda) * q;
}

long weyl_dim_oracle(int n, int l, int m) {
    if (m < 0) throw DomainError("weyl_dim_oracle: m >= 0");
    // n = 1 is the formal rank-one sanity case; n >= 2 otherwise
    if (n < 1 || std::abs(l) >= n) throw DomainError("weyl_dim_oracle: need |l| < n, n >= 1");
    // highest weight (m+|l|, 0, ..., 0, -m) for SU(n+1), Weyl dimension formula
    const int N = n + 1;
    std::vector<double> h(N, 0.0);
    h[0] = double(m + std::abs(l));
    h[N - 1] = double(-m);
    double dim = 1.0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            dim *= (h[i] - h[j] + double(j - i)) / double(j - i);
    long r = std::lround(dim);
    if (std::abs(dim - double(r)) > 1e-6 * std::max(1.0, dim) || r <= 0)
        throw DomainError("weyl_dim_oracle: non-integral dimension");
    return r;
}

double dim_chi_l(int n, int l, int m) {
    if (m < 0) throw DomainError("dim_chi_l: m >= 0");
    CProductParts parts = gamma_pq(n, l);
    RootData rd = structure_constants(n, l);
    Cx pr = eval_p(parts, Cx(double(rd.rho_plus), 0));
    if (std::abs(pr) < 1e-12)
        throw DomainError("dim_chi_l: p vanishes at rho(m_plus), formula degenerate");
    double alpha = double(weyl_dim_oracle(n, l, 0));
    Cx val = alpha * eval_p(parts, Cx(double(2 * m + rd.rho_plus), 0)) / pr;
    return val.real();
}

// ---------------------------------------------------------------------------
// matrices

MatC MatC::eye(int side) {
    MatC m(side);
    for (int i = 0; i < side; ++i) m.at(i, i) = 1.0;
    return m;
}

MatC MatC::operator*(const MatC& o) const {
    MatC r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Cx v = at(i, k);
            if (v == Cx(0, 0)) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

MatC MatC::adjoint() const {
    MatC r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
}

double MatC::dist(const MatC& o) const {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - o.a[i]);
    return std::sqrt(s);
}

MatC su1n_cartan(int n, double t) {
    MatC m = MatC::eye(n + 1);
    m.at(0, 0) = std::cosh(t);
    m.at(n, n) = std::cosh(t);
    m.at(0, n) = std::sinh(t);
    m.at(n, 0) = std::sinh(t);
    return m;
}

MatC su1n_embed_k(const MatC& U) {
    int n = U.n;
    // det via Gaussian elimination (small)
    MatC T = U;
    Cx det(1, 0);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(T.at(r, c)) > std::abs(T.at(piv, c))) piv = r;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(T.at(c, j), T.at(piv, j));
            det = -det;
        }
        det *= T.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            Cx f = T.at(r, c) / T.at(c, c);
            for (int j = c; j < n; ++j) T.at(r, j) -= f * T.at(c, j);
        }
    }
    MatC k(n + 1);
    k.at(0, 0) = 1.0 / det;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k.at(i + 1, j + 1) = U.at(i, j);
    return k;
}

MatC su1n_nilpotent(int n, const std::vector<Cx>& w, double s) {
    if (int(w.size()) != n - 1) throw DomainError("su1n_nilpotent: w must have n-1 entries");
    // X = X_beta(w) + X_{2beta}(s); nilpotent of order 3, exp by the cubic Taylor sum
    MatC X(n + 1);
    for (int j = 0; j < n - 1; ++j) {
        X.at(0, j + 1) = std::conj(w[j]);
        X.at(n, j + 1) = std::conj(w[j]);
        X.at(j + 1, 0) = w[j];
        X.at(j + 1, n) = -w[j];
    }
    Cx is(0, s);
    X.at(0, 0) += is;
    X.at(0, n) += -is;
    X.at(n, 0) += is;
    X.at(n, n) += -is;
    MatC I = MatC::eye(n + 1);
    MatC X2 = X * X;
    MatC X3 = X2 * X;
    MatC out(n + 1);
    for (size_t i = 0; i < out.a.size(); ++i)
        out.a[i] = I.a[i] + X.a[i] + 0.5 * X2.a[i] + X3.a[i] / 6.0;
    return out;
}

MatC haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    MatC A(n);
    for (auto& e : A.a) e = Cx(g(rng), g(rng));
    // Gram-Schmidt columns with phase fix from the R diagonal
    for (int c = 0; c < n; ++c) {
        for (int c2 = 0; c2 < c; ++c2) {
            Cx proj(0, 0);
            for (int r = 0; r < n; ++r) proj += std::conj(A.at(r, c2)) * A.at(r, c);
            for (int r = 0; r < n; ++r) A.at(r, c) -= proj * A.at(r, c2);
        }
        double nn = 0;
        for (int r = 0; r < n; ++r) nn += std::norm(A.at(r, c));
        nn = std::sqrt(nn);
        // phase convention: divide by nn * (phase of a reference entry)
        Cx ref = (std::abs(A.at(c, c)) > 1e-300) ? A.at(c, c) / std::abs(A.at(c, c)) : Cx(1, 0);
        for (int r = 0; r < n; ++r) A.at(r, c) /= nn * ref;
    }
    return A;
}

IwasawaSU1n iwasawa_su1n(const MatC& x) {
    const int N = x.n;
    const int n = N - 1;
    // group membership: x* I_{1,n} x = I_{1,n}
    MatC J = MatC::eye(N);
    for (int i = 1; i < N; ++i) J.at(i, i) = -1.0;
    MatC test = x.adjoint() * J * x;
    if (test.dist(J) > 1e-8) throw DomainError("iwasawa_su1n: matrix not in SU(1,n)");
    // light-cone vector e_0 + e_n is fixed by N and scaled by a_t
    std::vector<Cx> v(N, Cx(0, 0));
    for (int i = 0; i < N; ++i) v[i] = x.at(i, 0) + x.at(i, n);
    double nv = 0;
    for (auto& e : v) nv += std::norm(e);
    nv = std::sqrt(nv);
    IwasawaSU1n out;
    out.eH = nv / std::sqrt(2.0);
    out.chi1 = out.eH / v[0];
    return out;
}

Cx phi_chi_l(Cx lambda, const ChiParam& par, Cx t) {
    if (std::abs(t.imag()) > 0.3 + 1e-12) throw DomainError("phi_chi_l: |Im t| > 0.3");
    JacobiParams jp(double(par.n - 1), double(par.abs_l()));
    return ipow(std::cosh(t), par.abs_l()) * jacobi_phi(jp, lambda, t);
}

Cx phi_chi_l_oracle(Cx lambda, const ChiParam& par, double t, int n_angle, int n_radial) {
    if (std::abs(t) > 2.0 + 1e-12) throw DomainError("phi_chi_l_oracle: |t| <= 2 only");
    const int n = par.n, l = par.l;
    const double sh = std::sinh(t), ch = std::cosh(t), sh2 = std::sinh(2.0 * t);
    // zeta = u_n det(U): |zeta| = r with density 2(n-1) r (1-r^2)^{n-2}, phases uniform;
    // integrand depends on the two angles through their sum only
    Cx s = -(lambda + double(n + l)) / 2.0;

    // Gauss-Legendre nodes on [0,1] via Newton on P_k
    std::vector<double> xg(n_radial), wg_(n_radial);
    {
        int k = n_radial;
        for (int i = 0; i < k; ++i) {
            double x = std::cos(PI * (i + 0.75) / (k + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= k; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = k * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= k; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = k * (x * p1 - p0) / (x * x - 1.0);
            xg[i] = 0.5 * (x + 1.0);
            wg_[i] = 1.0 / ((1.0 - x * x) * dp * dp); // includes the [0,1] scaling
        }
    }

    Cx acc(0, 0);
    for (int ir = 0; ir < n_radial; ++ir) {
        double r = xg[ir];
        double wr = wg_[ir] * 2.0 * (n - 1) * r * std::pow(1.0 - r * r, n - 2);
        Cx acc_ang(0, 0);
        for (int ia = 0; ia < n_angle; ++ia) {
            double psi_u = 2.0 * PI * ia / n_angle;
            for (int ib = 0; ib < n_angle; ++ib) {
                double th_det = 2.0 * PI * ib / n_angle;
                double cphi = std::cos(psi_u + th_det), sphi = std::sin(psi_u + th_det);
                double e2H = 1.0 + sh * sh * (1.0 + r * r) + sh2 * r * cphi;
                Cx zeta(r * cphi, r * sphi);
                Cx val = std::exp(s * std::log(Cx(e2H, 0))) * ipow(ch + sh * zeta, l);
                acc_ang += val;
            }
        }
        acc += wr * acc_ang / double(n_angle) / double(n_angle);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// transform / inversion

namespace {

double chi_measure(int n, double t) {
    return std::pow(std::sinh(t), 2.0 * (n - 1)) * std::sinh(2.0 * t);
}

} // namespace

std::vector<Cx> transform_chi_l_batch(const RadialProfile& f, const ChiParam& par,
                                      const std::vector<Cx>& lambdas, double tol) {
    if (!(f.tail_rate > 0.0)) throw DomainError("transform_chi_l: missing decay certificate");
    JacobiParams jp(double(par.n - 1), double(par.abs_l()));
    std::vector<Cx> out(lambdas.size(), Cx(0, 0));
    // per-lambda expansion caches; evaluation per t is a short exponential sum
    std::vector<JacobiEval> asym;
    asym.reserve(lambdas.size());
    for (auto& l : lambdas) asym.emplace_back(jp, l);
    const int al = par.abs_l();
    for (size_t j = 0; j < lambdas.size(); ++j) {
        Cx lam = lambdas[j];
        auto integrand = [&](double t) -> Cx {
            Cx ft = f.eval(t);
            if (ft == Cx(0, 0)) return Cx(0, 0);
            Cx phi;
            if (t >= 0.45 && asym[j].usable())
                phi = ipow(std::cosh(Cx(t, 0)), al) * asym[j].eval(Cx(t, 0));
            else
                phi = phi_chi_l(lam, par, Cx(t, 0));
            return ft * phi * chi_measure(par.n, t);
        };
        out[j] = integrate_segment(integrand, f.t0, f.t_end(), QuadTol(tol, tol, 30)).value;
    }
    return out;
}

Cx transform_chi_l(const RadialProfile& f, const ChiParam& par, Cx lambda) {
    return transform_chi_l_batch(f, par, {lambda})[0];
}

double su1n_inversion_prefactor(const ChiParam& par) {
    return su1n_inversion_kappa0() *
           std::pow(2.0, 2.0 * par.n + 2.0 * par.abs_l() - 1.0) / (4.0 * PI);
}

Cx invert_chi_l(const std::function<Cx(double)>& fhat, double y_max, const ChiParam& par,
                double t, double tol) {
    JacobiParams jp(double(par.n - 1), double(par.abs_l()));
    const int al = par.abs_l();
    auto g = [&](double y) -> Cx {
        Cx lam(0, y);
        Cx w = c_product_inv(lam, par.n, par.l);
        if (w == Cx(0, 0)) return Cx(0, 0);
        Cx phi;
        if (t >= 0.45 && std::abs(y) > 0.05) {
            JacobiEval asym(jp, lam);
            phi = asym.usable() ? ipow(std::cosh(Cx(t, 0)), al) * asym.eval(Cx(t, 0))
                                : phi_chi_l(lam, par, Cx(t, 0));
        } else {
            phi = phi_chi_l(lam, par, Cx(t, 0));
        }
        return fhat(y) * phi * w;
    };
    Cx I = integrate_segment(g, -y_max, y_max, QuadTol(tol, tol, 30)).value;
    return su1n_inversion_prefactor(par) * I;
}

double su1n_inversion_kappa0() {
    static const double kappa0 = [] {
        // l = 0 round-trip at n = 3; the transform is sampled exactly on the
        // quadrature grid of the recovery integral (no interpolation)
        ChiParam par(3, 0);
        Bump bump(1.0, 0.7, 9.0);
        RadialProfile prof = RadialProfile::sample([&](double t) { return Cx(bump(t), 0); },
                                                   0.0, 1.8, 0.002);
        const double y_max = 60.0;
        // GK panels on [0, y_max]; integrand oscillation rate <= t_end = 1.8
        std::vector<double> ys, ws;
        {
            int panels = std::max(8, int(std::ceil(y_max / 0.8)));
            for (int p = 0; p < panels; ++p) {
                double a0 = y_max * p / panels, b0 = y_max * (p + 1) / panels;
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
        std::vector<Cx> lams(ys.size());
        for (size_t i = 0; i < ys.size(); ++i) lams[i] = Cx(0, ys[i]);
        std::vector<Cx> fh = transform_chi_l_batch(prof, par, lams, 1e-10);
        JacobiParams jp(2.0, 0.0);
        double num = 0.0, den = 0.0;
        double pref = std::pow(2.0, 2.0 * par.n - 1.0) / (4.0 * PI);
        std::vector<JacobiEval> asyms;
        asyms.reserve(lams.size());
        for (auto& lam : lams) asyms.emplace_back(jp, lam);
        for (double t : {0.7, 1.0, 1.3}) {
            Cx half(0, 0);
            for (size_t i = 0; i < lams.size(); ++i) {
                Cx w = c_product_inv(lams[i], par.n, par.l);
                if (w == Cx(0, 0)) continue;
                Cx phi = (std::abs(ys[i]) > 0.05 && asyms[i].usable())
                             ? asyms[i].eval(Cx(t, 0))
                             : jacobi_phi(jp, lams[i], Cx(t, 0));
                half += ws[i] * fh[i] * phi * w;
            }
            double rec = (pref * 2.0 * half).real(); // even integrand
            num += bump(t) * rec;
            den += rec * rec;
        }
        return num / den;
    }();
    return kappa0;
}

} // namespace rmt
