#include "rmt/master_sl2.hpp"
#include "rmt/master_su1n.hpp"
#include "rmt/special.hpp"
#include "rmt/suites.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rmt;

namespace {

Mat2 mat2_from_rows(const std::vector<std::vector<Cx>>& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw DomainError("expected a 2x2 matrix");
    return Mat2{{rows[0][0], rows[0][1], rows[1][0], rows[1][1]}};
}

} // namespace

PYBIND11_MODULE(_rmt, m) {
    m.doc() = "spherical harmonic analysis on rank-one line bundles: kernels, "
              "transforms, and Ramanujan-type interpolation identities";

    // special functions
    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("hyp2f1", &hyp2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
    m.def(
        "jacobi_phi",
        [](double alpha, double beta, Cx lam, Cx t) {
            return jacobi_phi(JacobiParams(alpha, beta), lam, t);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("lam"), py::arg("t"));

    // SL(2,R) bundle
    m.def(
        "phi_nn",
        [](Cx lam, int n, double t, double s) { return phi_nn(lam, n, CartanPoint(t, s)); },
        py::arg("lam"), py::arg("n"), py::arg("t"), py::arg("s") = 0.0);
    m.def(
        "psi_exact",
        [](int mrep, int n, const std::vector<std::vector<Cx>>& g) {
            return psi_exact(mrep, n, mat2_from_rows(g));
        },
        py::arg("m"), py::arg("n"), py::arg("g"));
    m.def(
        "plancherel_mu",
        [](int n, Cx lam) { return plancherel_mu(parity_of(n), lam); },
        py::arg("n"), py::arg("lam"));
    m.def("discrete_spectrum", &discrete_spectrum, py::arg("n"));
    m.def("psi_disc", &psi_disc, py::arg("k"), py::arg("n"), py::arg("t"));
    m.def("b_sl2", &b_sl2, py::arg("n"), py::arg("lam"));
    m.def("sl2_inversion_kappa", &sl2_inversion_kappa);
    m.def(
        "series_f_sl2",
        [](const std::string& a_spec, int n, double t, double tol) {
            return series_f_sl2(make_hardy(a_spec), n, CartanPoint(t, 0.0), tol);
        },
        py::arg("a"), py::arg("n"), py::arg("t"), py::arg("tol") = 1e-9);
    m.def(
        "contour_rhs_sl2",
        [](const std::string& a_spec, int n, double t, double eta) {
            return contour_rhs_sl2(make_hardy(a_spec), n, t, eta);
        },
        py::arg("a"), py::arg("n"), py::arg("t"), py::arg("eta") = 0.0);

    // classical interpolation theorem
    m.def(
        "classical_series",
        [](const std::string& a_spec, double x) { return classical_series(make_hardy(a_spec), x); },
        py::arg("a"), py::arg("x"));
    m.def(
        "classical_contour",
        [](const std::string& a_spec, double x, double eta) {
            auto a = make_hardy(a_spec);
            return classical_contour(a, x, eta > 0 ? eta : a.delta / 2.0);
        },
        py::arg("a"), py::arg("x"), py::arg("eta") = -1.0);
    m.def(
        "classical_mellin",
        [](const std::string& a_spec, Cx lam) { return classical_mellin(make_hardy(a_spec), lam); },
        py::arg("a"), py::arg("lam"));

    // SU(1,n) bundle
    m.def("c_fn", &c_fn, py::arg("lam"), py::arg("m_beta"), py::arg("m_2beta"));
    m.def("c_product_inv", &c_product_inv, py::arg("lam"), py::arg("n"), py::arg("l"));
    m.def("dim_chi_l", &dim_chi_l, py::arg("n"), py::arg("l"), py::arg("m"));
    m.def("weyl_dim_oracle", &weyl_dim_oracle, py::arg("n"), py::arg("l"), py::arg("m"));
    m.def(
        "phi_chi_l",
        [](Cx lam, int n, int l, Cx t) { return phi_chi_l(lam, ChiParam(n, l), t); },
        py::arg("lam"), py::arg("n"), py::arg("l"), py::arg("t"));
    m.def(
        "phi_chi_l_oracle",
        [](Cx lam, int n, int l, double t) { return phi_chi_l_oracle(lam, ChiParam(n, l), t); },
        py::arg("lam"), py::arg("n"), py::arg("l"), py::arg("t"));
    m.def(
        "series_f_chi_l",
        [](const std::string& a_spec, int n, int l, double t, double tol) {
            return series_f_chi_l(make_hardy(a_spec), n, l, t, tol);
        },
        py::arg("a"), py::arg("n"), py::arg("l"), py::arg("t"), py::arg("tol") = 1e-8);
    m.def(
        "contour_rhs_chi_l",
        [](const std::string& a_spec, int n, int l, double t, double eta) {
            return contour_rhs_chi_l(make_hardy(a_spec), n, l, t, eta);
        },
        py::arg("a"), py::arg("n"), py::arg("l"), py::arg("t"), py::arg("eta") = 0.0);
    m.def("su1n_inversion_kappa0", &su1n_inversion_kappa0);

    // verification driver
    m.def(
        "run_suite",
        [](const std::string& suite, int n, int l, const std::string& a_spec,
           unsigned long seed) {
            SuiteConfig cfg;
            cfg.suite = suite;
            cfg.n = n;
            cfg.l = l;
            cfg.a_spec = a_spec;
            cfg.seed = seed;
            cfg.validate();
            return emit(run_suite(cfg), EmitFormat::json);
        },
        py::arg("suite"), py::arg("n") = 2, py::arg("l") = 0, py::arg("a") = std::string(),
        py::arg("seed") = 12345UL);

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<PoleError>(m, "PoleError");
    py::register_exception<DivergenceError>(m, "DivergenceError");
    py::register_exception<ConfigError>(m, "ConfigError");
}
