"""Closed-form thermodynamics of the quantum harmonic oscillator, damped and not.

Reduced units throughout: temperature theta = k_B T / (hbar omega0), damping
ratio alpha = gamma / omega0, energies in hbar omega0, entropy and specific
heat in k_B.  The damped closed forms hold for strictly ohmic (memoryless)
damping and are assembled from the characteristic pair

    lambda_pm = (1 / (2 pi theta)) * (alpha/2 +- sqrt((alpha/2)^2 - 1)),

a complex-conjugate pair below critical damping (alpha < 2) and a real pair
above it.  The two specific-heat routes, differentiating the internal energy
and differentiating the entropy, are algebraically identical but are kept as
separately coded expressions so their agreement stays a meaningful check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import DomainError, real_with_im_check
from .matsubara import Prescription
from .specfun import g_func, g_func_prime, trigamma

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class LambdaPair:
    """Characteristic exponents of the damped oscillator, in 2*pi*theta units."""

    lam_plus: complex
    lam_minus: complex


@dataclass(frozen=True)
class OscillatorPoint:
    """One evaluated thermodynamic state; unevaluated quantities stay None."""

    theta: float
    alpha: float
    Z: float | None = None
    E: float | None = None
    S: float | None = None
    C: float | None = None
    route: Prescription | None = None


class ExpansionResult(NamedTuple):
    value: float
    last_term: float


def _check_theta(theta: float) -> None:
    if not (theta > 0.0 and math.isfinite(theta)):
        raise DomainError(f"theta must be positive and finite, got {theta!r}")


def _check_alpha(alpha: float) -> None:
    if not (alpha >= 0.0 and math.isfinite(alpha)):
        raise DomainError(f"alpha must be >= 0 and finite, got {alpha!r}")


def _bose(x: float) -> float:
    # occupation 1/(e^x - 1) for x > 0, stable at both ends
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def undamped_thermo(theta: float) -> OscillatorPoint:
    """Textbook single-oscillator Z, E, S, C at reduced temperature theta.

    Uses expm1-based forms so the deep quantum regime (theta << 1) underflows
    gracefully to the ground state instead of losing digits.
    """
    _check_theta(theta)
    x = 1.0 / theta
    occupation = _bose(x)
    energy = 0.5 + occupation
    # S = x n(x) - ln(1 - e^-x)
    entropy = x * occupation - math.log1p(-math.exp(-x)) if x < 700.0 else 0.0
    # C = x^2 e^-x / (1 - e^-x)^2 written through expm1 for small x
    em = math.expm1(-x)
    heat = x * x * math.exp(-x) / (em * em) if x < 700.0 else 0.0
    if x / 2.0 < 700.0:
        partition = 1.0 / (2.0 * math.sinh(x / 2.0))
    else:
        partition = 0.0
    return OscillatorPoint(theta=theta, alpha=0.0, Z=partition, E=energy,
                           S=entropy, C=heat)


def lambda_pm(theta: float, alpha: float) -> LambdaPair:
    """Characteristic pair; conjugate for alpha < 2, real for alpha >= 2."""
    _check_theta(theta)
    _check_alpha(alpha)
    scale = 1.0 / (TWO_PI * theta)
    half = alpha / 2.0
    root = cmath.sqrt(complex(half * half - 1.0, 0.0))
    return LambdaPair(lam_plus=scale * (half + root), lam_minus=scale * (half - root))


def damped_specific_heat(theta: float, alpha: float) -> OscillatorPoint:
    """Specific heat of the ohmically damped oscillator, internal-energy route.

    C/k_B = 1 - a + lam_+^2 psi'(1 + lam_+) + lam_-^2 psi'(1 + lam_-) with
    a = alpha / (2 pi theta).  At alpha = 0 this reduces to the undamped
    closed form analytically; it is evaluated through the same expression so
    the reduction is a checked property, not a special case.
    """
    pair = lambda_pm(theta, alpha)
    a = alpha / (TWO_PI * theta)
    total = complex(1.0 - a, 0.0)
    total += pair.lam_plus ** 2 * trigamma(1.0 + pair.lam_plus)
    total += pair.lam_minus ** 2 * trigamma(1.0 + pair.lam_minus)
    heat = real_with_im_check(total, what="specific heat")
    return OscillatorPoint(theta=theta, alpha=alpha, C=heat,
                           route=Prescription.ENERGY)


def damped_entropy(theta: float, alpha: float) -> OscillatorPoint:
    """Entropy of the ohmically damped oscillator.

    S/k_B = 1 + ln theta + a + g(lam_+) + g(lam_-).  Vanishes for theta -> 0
    at any damping, with leading slope (pi/3) alpha.
    """
    pair = lambda_pm(theta, alpha)
    a = alpha / (TWO_PI * theta)
    total = complex(1.0 + math.log(theta) + a, 0.0)
    total += g_func(pair.lam_plus) + g_func(pair.lam_minus)
    entropy = real_with_im_check(total, what="entropy")
    return OscillatorPoint(theta=theta, alpha=alpha, S=entropy,
                           route=Prescription.PARTITION)


def damped_specific_heat_via_entropy(theta: float, alpha: float) -> OscillatorPoint:
    """Specific heat obtained by differentiating the entropy instead.

    C/k_B = 1 - a - lam_+ g'(lam_+) - lam_- g'(lam_-).  Algebraically
    identical to the internal-energy route; evaluated through g_func_prime so
    the two code paths share no intermediate expression.
    """
    pair = lambda_pm(theta, alpha)
    a = alpha / (TWO_PI * theta)
    total = complex(1.0 - a, 0.0)
    total -= pair.lam_plus * g_func_prime(pair.lam_plus)
    total -= pair.lam_minus * g_func_prime(pair.lam_minus)
    heat = real_with_im_check(total, what="specific heat")
    return OscillatorPoint(theta=theta, alpha=alpha, C=heat,
                           route=Prescription.PARTITION)


_EXPANSION_KINDS = ("undamped_lowT", "undamped_highT", "damped_lowT", "damped_highT")


def oscillator_expansion(kind: str, theta: float, alpha: float = 0.0) -> ExpansionResult:
    """Truncated limit expansions of C/k_B, returning (value, last kept term).

    undamped_lowT   theta^-2 exp(-1/theta)                      error O(e^-1/theta/theta^3)
    undamped_highT  1 - (1/12) theta^-2                         error O(theta^-4)
    damped_lowT     (pi/3) a th + (4 pi^3/15) a (3-a^2) th^3    error O(theta^5)
    damped_highT    1 - a/(2 pi th) + (a^2-2)/(24 th^2)         error O(theta^-3)

    The damped kinds take the power-law structure that any nonzero coupling
    enforces; they are meaningless at alpha = 0, where the low-temperature
    behavior is exponential instead.
    """
    _check_theta(theta)
    if kind not in _EXPANSION_KINDS:
        raise DomainError(f"kind must be one of {_EXPANSION_KINDS}, got {kind!r}")
    if kind == "undamped_lowT":
        x = 1.0 / theta
        value = x * x * math.exp(-x) if x < 700.0 else 0.0
        return ExpansionResult(value=value, last_term=value)
    if kind == "undamped_highT":
        term = 1.0 / (12.0 * theta * theta)
        return ExpansionResult(value=1.0 - term, last_term=term)
    _check_alpha(alpha)
    if alpha == 0.0:
        raise DomainError("damped expansions need alpha > 0")
    if kind == "damped_lowT":
        t1 = (math.pi / 3.0) * alpha * theta
        t3 = (4.0 * math.pi ** 3 / 15.0) * alpha * (3.0 - alpha * alpha) * theta ** 3
        return ExpansionResult(value=t1 + t3, last_term=abs(t3))
    t1 = alpha / (TWO_PI * theta)
    t2 = (alpha * alpha - 2.0) / (24.0 * theta * theta)
    return ExpansionResult(value=1.0 - t1 + t2, last_term=abs(t2))
