import cmath
import json
import math

import _rmt as rmt


def test_special_functions():
    assert abs(rmt.log_gamma(1.0 + 0j)) < 1e-14
    assert abs(cmath.exp(rmt.log_gamma(0.5 + 0j)) - math.sqrt(math.pi)) < 1e-13
    z = 0.3 + 0.7j
    refl = cmath.exp(rmt.log_gamma(z) + rmt.log_gamma(1 - z))
    assert abs(refl - math.pi / cmath.sin(math.pi * z)) < 1e-12 * abs(refl)
    assert abs(rmt.hyp2f1(1, 1, 2, -0.5) - 2 * math.log(1.5)) < 1e-13
    assert abs(rmt.jacobi_phi(0.0, 0.0, 1.3 + 0j, 0 + 0j) - 1.0) < 1e-14


def test_sl2_kernel():
    assert abs(rmt.phi_nn(2 + 0j, 1, 0.5) - math.cosh(0.5)) < 1e-12
    g = [[math.exp(0.7), 0], [0, math.exp(-0.7)]]
    assert abs(rmt.psi_exact(0, 1, g) - math.cosh(0.7)) < 1e-12
    assert rmt.discrete_spectrum(4) == [1, 3]
    assert abs(rmt.plancherel_mu(2, 0j)) < 1e-14


def test_master_identity():
    s = rmt.series_f_sl2("exp:p=1.0", 2, 0.4)
    c = rmt.contour_rhs_sl2("exp:p=1.0", 2, 0.4)
    assert abs(s - c) < 1e-6 * abs(s)


def test_classical():
    x = 1.0
    assert abs(rmt.classical_series("gamma-reciprocal", x) - math.exp(-x)) < 1e-10
    lam = 0.25 + 1j
    m = rmt.classical_mellin("gamma-reciprocal", lam)
    gamma = cmath.exp(rmt.log_gamma(-lam))
    assert abs(m - gamma) < 1e-7


def test_su1n():
    assert rmt.weyl_dim_oracle(2, 0, 1) == 8
    assert abs(rmt.dim_chi_l(3, 2, 1) - 70.0) < 1e-9
    cand = rmt.phi_chi_l(0.7j, 3, 2, 0.5 + 0j)
    orac = rmt.phi_chi_l_oracle(0.7j, 3, 2, 0.5)
    assert abs(cand - orac) < 1e-3


def test_suite_driver():
    payload = json.loads(rmt.run_suite("counterexample"))
    assert payload["summary"]["fail"] == 0
    cases = payload["suites"][0]["cases"]
    assert all(c["status"] == "DIVERGENT-AS-EXPECTED" for c in cases)
