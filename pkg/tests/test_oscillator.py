"""Tests for the closed-form oscillator thermodynamics.

Frozen reference numbers come from an independent mpmath evaluation of the
same trigamma / log-gamma expressions at 40-digit precision.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from qbrownian.core import DomainError
from qbrownian.matsubara import Prescription
from qbrownian.oscillator import (damped_entropy, damped_specific_heat,
                                  damped_specific_heat_via_entropy, lambda_pm,
                                  oscillator_expansion, undamped_thermo)

TWO_PI = 2.0 * math.pi

C_DAMPED_REF = {
    (1.0, 1.0): 0.8162033382977143834464571,
    (0.5, 2.0): 0.588861449611827186449658,
    (2.0, 5.0): 0.7543543142976419899867575,
    (0.01, 1.0): 0.01048853537745437736900681,
}

S_DAMPED_REF = {
    (1.0, 1.0): 1.174107391136215033090699,
    (0.2, 0.5): 0.1532383415402892507647376,
    (1000.0, 1.0): 7.90791445475210143837394,
}

UNDAMPED_AT_UNIT_THETA = dict(
    Z=0.9595173756674718597461014,
    E=1.081976706869326424385002,
    S=1.040651852256408315406646,
    C=0.9206735942077923189454135,
)


def test_undamped_frozen_values():
    point = undamped_thermo(1.0)
    for name, want in UNDAMPED_AT_UNIT_THETA.items():
        assert getattr(point, name) == pytest.approx(want, rel=1e-14), name


def test_undamped_limits():
    cold = undamped_thermo(1e-4)
    assert cold.E == pytest.approx(0.5, rel=1e-15)
    assert cold.C == 0.0
    assert cold.S == 0.0
    hot = undamped_thermo(1e4)
    assert hot.C == pytest.approx(1.0, rel=1e-6)
    assert hot.E == pytest.approx(1e4, rel=1e-6)


@pytest.mark.parametrize("key", sorted(C_DAMPED_REF))
def test_damped_specific_heat_frozen(key):
    theta, alpha = key
    got = damped_specific_heat(theta, alpha)
    assert got.C == pytest.approx(C_DAMPED_REF[key], rel=1e-13)
    assert got.route is Prescription.ENERGY


@pytest.mark.parametrize("key", sorted(S_DAMPED_REF))
def test_damped_entropy_frozen(key):
    theta, alpha = key
    got = damped_entropy(theta, alpha)
    assert got.S == pytest.approx(S_DAMPED_REF[key], rel=1e-13)


def test_lambda_pair_invariants():
    rng = np.random.default_rng(41)
    for _ in range(200):
        theta = float(rng.uniform(0.01, 20.0))
        alpha = float(rng.uniform(0.0, 6.0))
        pair = lambda_pm(theta, alpha)
        scale = 1.0 / (TWO_PI * theta)
        product = pair.lam_plus * pair.lam_minus
        total = pair.lam_plus + pair.lam_minus
        assert abs(product - scale * scale) <= 1e-14 * scale * scale
        assert abs(total - alpha * scale) <= 1e-14 * max(scale, alpha * scale)
        if alpha < 2.0:
            assert pair.lam_minus == pair.lam_plus.conjugate()
        else:
            assert pair.lam_plus.imag == 0.0
            assert pair.lam_minus.imag == 0.0


def test_two_specific_heat_routes_agree():
    rng = np.random.default_rng(977)
    for _ in range(60):
        theta = float(rng.uniform(0.02, 30.0))
        alpha = float(rng.uniform(0.0, 5.0))
        via_energy = damped_specific_heat(theta, alpha).C
        via_entropy = damped_specific_heat_via_entropy(theta, alpha).C
        assert abs(via_energy - via_entropy) < 1e-11
    assert damped_specific_heat_via_entropy(1.0, 1.0).route is Prescription.PARTITION


def test_zero_damping_reduces_to_undamped():
    for theta in (0.1, 0.5, 1.0, 3.0, 20.0):
        plain = undamped_thermo(theta)
        assert damped_specific_heat(theta, 0.0).C == pytest.approx(plain.C, abs=1e-12)
        assert damped_specific_heat_via_entropy(theta, 0.0).C == pytest.approx(
            plain.C, abs=1e-12)
        assert damped_entropy(theta, 0.0).S == pytest.approx(plain.S, abs=1e-12)


def test_specific_heat_monotone_and_bounded():
    # at alpha = 0 the exact C is exponentially small below theta ~ 0.05,
    # beneath the 1e-15 cancellation noise of the damped closed form, so the
    # undamped grid starts where the signal is resolvable
    for alpha, t_low in ((0.0, 0.05), (0.5, 0.01), (2.0, 0.01), (5.0, 0.01)):
        thetas = np.logspace(math.log10(t_low), 2, 80)
        values = [damped_specific_heat(float(t), alpha).C for t in thetas]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(-1e-14 < v < 1.0 for v in values)


def test_damping_lowers_specific_heat_at_low_temperature():
    # below theta ~ 0.1 the quantum suppression is lifted linearly by damping
    for theta in (0.02, 0.05):
        undamped = damped_specific_heat(theta, 0.0).C
        damped = damped_specific_heat(theta, 1.0).C
        assert damped > undamped


def test_expansion_values_and_errors():
    value, last = oscillator_expansion("damped_lowT", 0.01, alpha=1.0)
    expect = (math.pi / 3.0) * 0.01 + (4.0 * math.pi ** 3 / 15.0) * 2.0 * 1e-6
    assert value == pytest.approx(expect, rel=1e-14)
    assert last == pytest.approx((4.0 * math.pi ** 3 / 15.0) * 2.0 * 1e-6, rel=1e-14)

    value, last = oscillator_expansion("damped_highT", 10.0, alpha=1.0)
    assert value == pytest.approx(1.0 - 1.0 / (TWO_PI * 10.0) - 1.0 / 2400.0, rel=1e-14)

    value, _ = oscillator_expansion("undamped_highT", 8.0)
    assert value == pytest.approx(1.0 - 1.0 / (12.0 * 64.0), rel=1e-14)

    value, _ = oscillator_expansion("undamped_lowT", 0.1)
    assert value == pytest.approx(100.0 * math.exp(-10.0), rel=1e-14)


def test_expansion_tracks_exact_value():
    for theta in (0.01, 0.02):
        exact = damped_specific_heat(theta, 1.0).C
        approx = oscillator_expansion("damped_lowT", theta, alpha=1.0).value
        assert abs(approx - exact) < 1e-3 * exact
    for theta in (30.0, 100.0):
        exact = damped_specific_heat(theta, 1.0).C
        approx = oscillator_expansion("damped_highT", theta, alpha=1.0).value
        assert abs(approx - exact) < 1e-4


def test_expansion_rejects_bad_requests():
    with pytest.raises(DomainError):
        oscillator_expansion("no_such_kind", 1.0)
    with pytest.raises(DomainError):
        oscillator_expansion("damped_lowT", 0.5, alpha=0.0)
    with pytest.raises(DomainError):
        oscillator_expansion("damped_highT", 0.5)


@pytest.mark.parametrize("call", [
    lambda: undamped_thermo(0.0),
    lambda: undamped_thermo(-1.0),
    lambda: undamped_thermo(math.inf),
    lambda: lambda_pm(1.0, -0.5),
    lambda: lambda_pm(1.0, math.inf),
    lambda: damped_specific_heat(0.0, 1.0),
    lambda: damped_entropy(-2.0, 1.0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()
