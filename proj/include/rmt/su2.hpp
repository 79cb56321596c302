#ifndef RMT_SU2_HPP
#define RMT_SU2_HPP

#include "rmt/types.hpp"

#include <array>
#include <vector>

namespace rmt {

// 2x2 complex matrix, row-major
struct Mat2 {
    std::array<Cx, 4> a{}; // [ a[0] a[1] ; a[2] a[3] ]
    Cx det() const { return a[0] * a[3] - a[1] * a[2]; }
    Mat2 operator*(const Mat2& o) const {
        return {{a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                 a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]}};
    }
    Mat2 adjoint() const {
        return {{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
    }
    Mat2 transpose() const { return {{a[0], a[2], a[1], a[3]}}; }
    Mat2 conjugate() const {
        return {{std::conj(a[0]), std::conj(a[1]), std::conj(a[2]), std::conj(a[3])}};
    }
    // inverse assuming det = 1
    Mat2 inv_unimodular() const { return {{a[3], -a[1], -a[2], a[0]}}; }
    double norm() const {
        double s = 0;
        for (auto& e : a) s += std::norm(e);
        return std::sqrt(s);
    }
};

Mat2 mat2_rotation(double theta);              // [[cos, sin], [-sin, cos]]
Mat2 mat2_cartan(Cx z);                        // diag(e^z, e^{-z})
Mat2 mat2_unipotent(double xi);                // [[1, xi], [0, 1]]
Mat2 mat2_so2c(Cx w);                          // [[cos w, sin w], [-sin w, cos w]]

// degree-m homogeneous polynomials in (u,v); monomial basis u^j v^{m-j}
struct PolySpace {
    int degree;
    std::vector<double> weights; // invariant inner product: <u^j v^{m-j}, same> = j!(m-j)!/m!
    explicit PolySpace(int m);
    int dim() const { return degree + 1; }
    Cx inner(const std::vector<Cx>& f, const std::vector<Cx>& g) const;
};

// matrix of pi_m(g), pi_m(g)f(u,v) = f((u,v) g), in the monomial basis
std::vector<std::vector<Cx>> rep_matrix(int m, const Mat2& g);

std::vector<Cx> apply_rep(const std::vector<std::vector<Cx>>& M, const std::vector<Cx>& v);

// coefficient vector of the K-type-n eigenvector in degree N:
//   n >= 0: (u^2+v^2)^{(N-n)/2} (u-iv)^n
//   n <  0: (u^2+v^2)^{(N-|n|)/2} (u+iv)^{|n|}
// throws when no such vector exists (parity or N < |n|)
std::vector<Cx> n_spherical_vector(int N, int n);

// multiplicity of the e^{-in theta} eigenvalue of pi_N(k_theta); exact integer
// via the character projection (trapezoid rule is exact for trig polynomials)
int n_spherical_multiplicity(int N, int n);

// normalized compact-dual spherical function: <pi_{2m+n}(g^{-1}) f', f'> / ||f'||^2
Cx psi_exact(int m, int n, const Mat2& g);

// unique decomposition g = u exp(diag(t,-t)) h, u in SU(2), t >= 0, h in SO(2,C)
struct KAHDecomposition {
    Mat2 u;
    double t;
    Mat2 h;
};
KAHDecomposition kah_decompose(const Mat2& g);

// holomorphic character on SO(2,C): e_n(h) = e^{i n w} with h = rotation by w in C
Cx so2c_character(const Mat2& h, int n);

struct HSBoundResult {
    double hs_sum;      // sum_j |<pi(g) f0, e_j>|^2
    double hs_bound;    // |e_n(h^{-1})|^2 e^{(4m+2n)t}
    double psi_abs;     // |psi_{2m+n,n}(g)|
    double psi_bound;   // e^{(2m+n)t'} |e_n(h'^{-1})| from the decomposition of g^{-1}
    bool pass;
};
HSBoundResult hilbert_schmidt_bound_check(int m, int n, const Mat2& g);

} // namespace rmt

#endif
