#include "rmt/su2.hpp"

namespace rmt {

Mat2 mat2_rotation(double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    return {{Cx(c, 0), Cx(s, 0), Cx(-s, 0), Cx(c, 0)}};
}

Mat2 mat2_cartan(Cx z) { return {{std::exp(z), Cx(0, 0), Cx(0, 0), std::exp(-z)}}; }

Mat2 mat2_unipotent(double xi) { return {{Cx(1, 0), Cx(xi, 0), Cx(0, 0), Cx(1, 0)}}; }

Mat2 mat2_so2c(Cx w) {
    Cx c = std::cos(w), s = std::sin(w);
    return {{c, s, -s, c}};
}

PolySpace::PolySpace(int m) : degree(m) {
    if (m < 0) throw DomainError("PolySpace: negative degree");
    weights.resize(m + 1);
    // w_j = j!(m-j)!/m! = 1/C(m,j)
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        weights[j] = 1.0 / binom;
        binom = binom * double(m - j) / double(j + 1);
    }
}

Cx PolySpace::inner(const std::vector<Cx>& f, const std::vector<Cx>& g) const {
    Cx s(0, 0);
    for (int j = 0; j <= degree; ++j) s += f[j] * std::conj(g[j]) * weights[j];
    return s;
}

std::vector<std::vector<Cx>> rep_matrix(int m, const Mat2& g) {
    if (std::abs(g.det() - 1.0) > 1e-10)
        throw DomainError("rep_matrix: determinant differs from 1");
    // pi_m(g) u^j v^{m-j} = (g00 u + g10 v)^j (g01 u + g11 v)^{m-j}
    const int dim = m + 1;
    std::vector<std::vector<Cx>> M(dim, std::vector<Cx>(dim, Cx(0, 0)));
    // binomial tables per column
    for (int j = 0; j <= m; ++j) {
        // expand (g00 u + g10 v)^j: coeff of u^p v^{j-p} = C(j,p) g00^p g10^{j-p}
        std::vector<Cx> first(j + 1), second(m - j + 1);
        {
            double binom = 1.0;
            for (int p = 0; p <= j; ++p) {
                first[p] = binom * ipow(g.a[0], p) * ipow(g.a[2], j - p);
                binom = binom * double(j - p) / double(p + 1);
            }
            binom = 1.0;
            for (int q = 0; q <= m - j; ++q) {
                second[q] = binom * ipow(g.a[1], q) * ipow(g.a[3], m - j - q);
                binom = binom * double(m - j - q) / double(q + 1);
            }
        }
        for (int p = 0; p <= j; ++p)
            for (int q = 0; q <= m - j; ++q) M[p + q][j] += first[p] * second[q];
    }
    return M;
}

std::vector<Cx> apply_rep(const std::vector<std::vector<Cx>>& M, const std::vector<Cx>& v) {
    const size_t dim = M.size();
    std::vector<Cx> out(dim, Cx(0, 0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) out[i] += M[i][j] * v[j];
    return out;
}

std::vector<Cx> n_spherical_vector(int N, int n) {
    int an = std::abs(n);
    if (N < an || (N - an) % 2 != 0)
        throw DomainError("n_spherical_vector: no such representation (parity or degree)");
    int q = (N - an) / 2;
    // (u^2+v^2)^q expansion: sum_r C(q,r) u^{2r} v^{2(q-r)}
    // times (u -+ iv)^{an}: sum_s C(an,s) u^s (-+i v)^{an-s}
    Cx unit = (n >= 0) ? Cx(0, -1) : Cx(0, 1);
    std::vector<Cx> coeff(N + 1, Cx(0, 0));
    double bq = 1.0;
    for (int r = 0; r <= q; ++r) {
        double bs = 1.0;
        for (int s = 0; s <= an; ++s) {
            int upow = 2 * r + s;
            coeff[upow] += bq * bs * ipow(unit, an - s);
            bs = bs * double(an - s) / double(s + 1);
        }
        bq = bq * double(q - r) / double(r + 1);
    }
    return coeff;
}

int n_spherical_multiplicity(int N, int n) {
    // trace of the projector (1/2pi) int e_n(k_t) pi_N(k_t) dt; integrand is a
    // trigonometric polynomial of degree <= N + |n|, so that many nodes are exact
    const int M = 2 * (N + std::abs(n)) + 2;
    double acc = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * PI * j / M;
        auto R = rep_matrix(N, mat2_rotation(th));
        Cx tr(0, 0);
        for (int i = 0; i <= N; ++i) tr += R[i][i];
        acc += (std::exp(Cx(0, n * th)) * tr).real();
    }
    acc /= M;
    return int(std::lround(acc));
}

Cx psi_exact(int m, int n, const Mat2& g) {
    const int N = 2 * m + n;
    std::vector<Cx> f = n_spherical_vector(N, n);
    PolySpace ps(N);
    auto M = rep_matrix(N, g.inv_unimodular());
    auto Mf = apply_rep(M, f);
    return ps.inner(Mf, f) / ps.inner(f, f);
}

namespace {

// eigen-decomposition of a 2x2 Hermitian matrix; returns (eigenvalues desc, unitary columns)
void herm2_eigen(const Mat2& B, double& l1, double& l2, Cx v1[2], Cx v2[2]) {
    double a = B.a[0].real(), d = B.a[3].real();
    Cx b = B.a[1];
    double tr = a + d;
    double disc = std::sqrt(std::max(0.0, 0.25 * (a - d) * (a - d) + std::norm(b)));
    l1 = 0.5 * tr + disc;
    l2 = 0.5 * tr - disc;
    // eigenvector for l1: (b, l1 - a) or (l1 - d, conj(b))
    Cx x0, x1;
    if (std::abs(b) + std::abs(l1 - a) > std::abs(l1 - d) + std::abs(b)) {
        x0 = b;
        x1 = Cx(l1 - a, 0);
    } else {
        x0 = Cx(l1 - d, 0);
        x1 = std::conj(b);
    }
    double nn = std::sqrt(std::norm(x0) + std::norm(x1));
    if (nn < 1e-300) {
        x0 = Cx(1, 0);
        x1 = Cx(0, 0);
        nn = 1.0;
    }
    v1[0] = x0 / nn;
    v1[1] = x1 / nn;
    // orthogonal complement
    v2[0] = -std::conj(v1[1]);
    v2[1] = std::conj(v1[0]);
}

// Hermitian PD square root of a 2x2 Hermitian matrix
Mat2 herm2_sqrt(const Mat2& B) {
    double l1, l2;
    Cx v1[2], v2[2];
    herm2_eigen(B, l1, l2, v1, v2);
    double s1 = std::sqrt(std::max(l1, 0.0)), s2 = std::sqrt(std::max(l2, 0.0));
    Mat2 R;
    R.a[0] = s1 * v1[0] * std::conj(v1[0]) + s2 * v2[0] * std::conj(v2[0]);
    R.a[1] = s1 * v1[0] * std::conj(v1[1]) + s2 * v2[0] * std::conj(v2[1]);
    R.a[2] = s1 * v1[1] * std::conj(v1[0]) + s2 * v2[1] * std::conj(v2[0]);
    R.a[3] = s1 * v1[1] * std::conj(v1[1]) + s2 * v2[1] * std::conj(v2[1]);
    return R;
}

} // namespace

KAHDecomposition kah_decompose(const Mat2& g) {
    if (std::abs(g.det() - 1.0) > 1e-9) throw DomainError("kah_decompose: det != 1");
    // S = g g^T = u e^{2Z} u^T and B = S S^* = u e^{4Z} u^*
    Mat2 S = g * g.transpose();
    Mat2 B = S * S.adjoint();
    double l1, l2;
    Cx v1[2], v2[2];
    herm2_eigen(B, l1, l2, v1, v2);

    KAHDecomposition out;
    if (l1 <= 1.0 + 1e-9) {
        // t = 0: polar decomposition; the Hermitian factor lies in SO(2,C)
        Mat2 P = herm2_sqrt(g.adjoint() * g);
        Mat2 Pinv = P.inv_unimodular(); // det P = |det g| = 1
        out.u = g * Pinv;
        out.t = 0.0;
        out.h = P;
    } else {
        out.t = 0.25 * std::log(l1);
        // phase-fix: the correct columns satisfy S conj(w_j) = e^{2 z_j} w_j
        Cx cols[2][2] = {{v1[0], v1[1]}, {v2[0], v2[1]}};
        Mat2 U;
        for (int j = 0; j < 2; ++j) {
            Cx Sv0 = S.a[0] * std::conj(cols[j][0]) + S.a[1] * std::conj(cols[j][1]);
            Cx Sv1 = S.a[2] * std::conj(cols[j][0]) + S.a[3] * std::conj(cols[j][1]);
            Cx mu = std::conj(cols[j][0]) * Sv0 + std::conj(cols[j][1]) * Sv1;
            double phi = 0.5 * std::arg(mu);
            Cx fix = std::exp(Cx(0, phi));
            U.a[0 + j] = cols[j][0] * fix;
            U.a[2 + j] = cols[j][1] * fix;
        }
        // the phase-fix pins each column up to +-1 only, so det U = +-1;
        // a single column sign flip preserves S = U e^{2Z} U^T
        if (std::abs(U.det() + 1.0) < std::abs(U.det() - 1.0)) {
            U.a[1] = -U.a[1];
            U.a[3] = -U.a[3];
        }
        out.u = U;
        out.h = mat2_cartan(Cx(-out.t, 0.0)) * U.adjoint() * g;
    }
    // verify h in SO(2,C) and reconstruction
    Mat2 hh = out.h.transpose() * out.h;
    Mat2 I{{Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)}};
    double dev = 0.0;
    for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(hh.a[i] - I.a[i]));
    if (dev > 1e-8) throw DomainError("kah_decompose: SO(2,C) factor check failed");
    Mat2 rec = out.u * mat2_cartan(Cx(out.t, 0.0)) * out.h;
    double rerr = 0.0;
    for (int i = 0; i < 4; ++i) rerr = std::max(rerr, std::abs(rec.a[i] - g.a[i]));
    if (rerr > 1e-8 * std::max(1.0, g.norm()))
        throw DomainError("kah_decompose: reconstruction failed");
    return out;
}

Cx so2c_character(const Mat2& h, int n) {
    // h = [[cos w, sin w], [-sin w, cos w]]; e^{iw} = cos w + i sin w
    Cx eiw = h.a[0] + Cx(0, 1) * h.a[1];
    Cx w = -Cx(0, 1) * std::log(eiw);
    return std::exp(Cx(0, 1) * double(n) * w);
}

HSBoundResult hilbert_schmidt_bound_check(int m, int n, const Mat2& g) {
    const int N = 2 * m + n;
    PolySpace ps(N);
    std::vector<Cx> f = n_spherical_vector(N, n);
    double fn = std::sqrt(ps.inner(f, f).real());
    for (auto& c : f) c /= fn;

    KAHDecomposition dec = kah_decompose(g);
    auto M = rep_matrix(N, g);
    auto Mf = apply_rep(M, f);
    // orthonormal basis e_j = u^j v^{N-j} / sqrt(w_j): sum_j |<Mf, e_j>|^2 = ||Mf||_w^2
    double hs = ps.inner(Mf, Mf).real();

    Cx enh = so2c_character(dec.h.inv_unimodular(), n);
    double hs_bound = std::norm(enh) * std::exp((4.0 * m + 2.0 * n) * dec.t);

    // |psi(g)| = |<pi(g^{-1}) f, f>| is controlled by the decomposition of g^{-1}
    KAHDecomposition dinv = kah_decompose(g.inv_unimodular());
    Cx enh2 = so2c_character(dinv.h.inv_unimodular(), n);
    double psi_abs = std::abs(psi_exact(m, n, g));
    double psi_bound = std::abs(enh2) * std::exp((2.0 * m + double(n)) * dinv.t);

    HSBoundResult r;
    r.hs_sum = hs;
    r.hs_bound = hs_bound;
    r.psi_abs = psi_abs;
    r.psi_bound = psi_bound;
    r.pass = (hs <= hs_bound * (1.0 + 1e-9) + 1e-12) && (psi_abs <= psi_bound * (1.0 + 1e-9) + 1e-12);
    return r;
}

} // namespace rmt
