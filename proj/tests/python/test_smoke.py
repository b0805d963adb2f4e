import math

import pytest

import ptsqw


def test_version():
    assert ptsqw.__version__


def test_xwell_level():
    lv = ptsqw.xwell.solve_level(0, 1.0)
    assert lv.omega == pytest.approx(0.358415122530, abs=1e-9)
    assert 0.0625 < lv.E < 0.25
    assert lv.parity == ptsqw.xwell.Parity.plus
    # sigma split identities
    assert lv.p_decay**2 + lv.k**2 == pytest.approx(lv.q_osc**2, rel=1e-13)
    assert 2 * lv.p_decay * lv.q_osc == pytest.approx(1.0, rel=1e-13)


def test_xwell_wavefunction():
    wf = ptsqw.xwell.make_wavefunction(ptsqw.xwell.solve_level(1, 2.0))
    assert wf(0.0) == 1.0 + 0.0j
    x = 1.234
    assert wf(-x) == pytest.approx(wf(x).conjugate())


def test_xwell_spectrum_and_estimates():
    levels = ptsqw.xwell.spectrum(10.0, 4)
    energies = [lv.E for lv in levels]
    assert energies == sorted(energies)
    assert ptsqw.xwell.weak_coupling_estimate(0, 0.01) == pytest.approx(
        ptsqw.xwell.solve_level(0, 0.01).omega, abs=1e-6
    )
    with pytest.raises(ValueError):
        ptsqw.xwell.weak_coupling_estimate(0, 10.0)
    assert ptsqw.xwell.hermitian_box_levels(2) == [0.25, 1.0]


def test_pwell_spectrum():
    spec = ptsqw.pwell.find_spectrum(1.0)
    assert len(spec.roots) == 1
    assert spec.roots[0].alpha == pytest.approx(0.4132632771, abs=1e-8)
    assert spec.digits_used == 16
    assert ptsqw.pwell.count_levels(0.1) == 1
    assert ptsqw.pwell.threshold_alpha(8.0) == pytest.approx(1.0)


def test_pwell_coefficients_and_psi():
    spec = ptsqw.pwell.find_spectrum(1.0)
    E = spec.roots[0].E
    par = ptsqw.pwell.params(E, 1.0)
    cf = ptsqw.pwell.coefficients(E, 1.0)
    res = ptsqw.pwell.matching_residuals(E, 1.0, cf)
    assert max(abs(r) for r in res) < 1e-9
    assert ptsqw.pwell.psi(1.0 - 1e-12, par, cf) == pytest.approx(
        ptsqw.pwell.psi(1.0 + 1e-12, par, cf), abs=1e-11
    )
    zeros = ptsqw.pwell.nodal_zeros(par, cf, ptsqw.pwell.Region.left, 5)
    spacing = math.pi / (math.sqrt(3.0) * par.beta)
    assert zeros[0] - zeros[1] == pytest.approx(spacing, abs=1e-10)


def test_oracle_agrees():
    spec = ptsqw.pwell.find_spectrum(1.0)
    E = spec.roots[0].E
    assert abs(ptsqw.oracle.p_matching_det(E, 1.0)) < 1e-9
    lv = ptsqw.xwell.solve_level(0, 1.0)
    assert abs(ptsqw.oracle.x_matching_det(lv.E, 1.0)) < 1e-9


def test_policy_and_errors():
    pol = ptsqw.PrecisionPolicy(digits=20, max_digits=60)
    assert pol.adaptive()
    with pytest.raises(ValueError):
        ptsqw.PrecisionPolicy(digits=5)
    with pytest.raises(RuntimeError):
        ptsqw.pwell.locate_doublet_birth(0.01, 0.1)
    with pytest.raises(ValueError):
        ptsqw.pwell.params(2.0, 1.0)


def test_sweep():
    recs = ptsqw.pwell.sweep([0.5, 5.0, 50.0])
    assert [r.n_levels for r in recs] == [1, 2, 3]
    assert recs[2].events[0].kind == ptsqw.pwell.EventKind.threshold_entry
