"""Thermodynamics of a free quantum Brownian particle.

With no confining frequency, the damping rate is the only scale: here
theta = k_B T / (hbar gamma), energies are in hbar gamma, and C is in k_B.
The strictly ohmic specific heat depends on the single ratio a = 1/(2 pi theta);
a Drude cutoff enters through r = omega_D / gamma via the pair

    z_pm = (r / (4 pi theta)) * (1 +- sqrt(1 - 4/r)),

complex conjugates for r < 4 and real for r > 4.  C interpolates between the
classical kinetic value 1/2 at high temperature and a linear-in-T vanishing at
low temperature with the cutoff-independent slope pi/3; lowering the cutoff
weakens the effective damping and raises C toward 1/2 everywhere else.
"""

from __future__ import annotations

import dataclasses
import cmath
import math

from .core import DEFAULT_TOL, DomainError, Tolerances, real_with_im_check
from .matsubara import DampingKernel, SumResult, Prescription, energy_sum
from .specfun import trigamma

TWO_PI = 2.0 * math.pi

_DEGENERATE_BAND = 1e-10
_PSI2_STEP = 1e-6


@dataclasses.dataclass(frozen=True)
class FreeParticlePoint:
    """One evaluated state of the free particle; unset quantities stay None.

    regularized marks energies that are defined only up to an additive,
    temperature-independent constant.
    """

    theta: float
    cutoff_ratio: float
    E: float | None = None
    C: float | None = None
    regularized: bool = False


def _check_theta(theta: float) -> None:
    if not (theta > 0.0 and math.isfinite(theta)):
        raise DomainError(f"theta must be positive and finite, got {theta!r}")


def ohmic_specific_heat(theta: float) -> FreeParticlePoint:
    """C/k_B = 1/2 - a + a^2 psi'(1 + a), a = 1/(2 pi theta), strict ohmic.

    Monotonically increasing in theta, bounded by the classical 1/2, and
    linear with slope pi/3 at low temperature.
    """
    _check_theta(theta)
    a = 1.0 / (TWO_PI * theta)
    heat = 0.5 - a + a * a * trigamma(1.0 + a).real
    return FreeParticlePoint(theta=theta, cutoff_ratio=math.inf, C=heat)


def ohmic_lowT_expansion(theta: float) -> float:
    """Two-term low-temperature series (pi/3) theta - (4 pi^3/15) theta^3."""
    _check_theta(theta)
    return (math.pi / 3.0) * theta - (4.0 * math.pi ** 3 / 15.0) * theta ** 3


def drude_z_pm(theta: float, cutoff_ratio: float) -> tuple[complex, complex]:
    """Characteristic pair of the Drude-damped free particle.

    Conjugate for cutoff_ratio < 4(underdamped bath response), real above;
    the two coincide at cutoff_ratio = 4.
    """
    _check_theta(theta)
    if not (cutoff_ratio > 0.0 and math.isfinite(cutoff_ratio)):
        raise DomainError(
            f"cutoff_ratio must be positive and finite here, got {cutoff_ratio!r}")
    z0 = cutoff_ratio / (2.0 * TWO_PI * theta)
    s = cmath.sqrt(complex(1.0 - 4.0 / cutoff_ratio, 0.0))
    return z0 * (1.0 + s), z0 * (1.0 - s)


def drude_specific_heat(theta: float, cutoff_ratio: float) -> FreeParticlePoint:
    """Specific heat with a Drude cutoff; dispatches to ohmic at inf.

    C/k_B = 1/2 - a [z_+ psi'(1+z_+) - z_- psi'(1+z_-)] / (z_+ - z_-) * 2 z_0,
    written through s = sqrt(1 - 4/r).  The s -> 0 degeneracy at r = 4 is a
    removable 0/0; inside a narrow band it is evaluated through the limit
    2 z_0 [psi'(1+z_0) + z_0 psi''(1+z_0)] with psi'' from a symmetric
    difference of psi' (step 1e-6, leaving ~1e-10 absolute error in C).
    """
    _check_theta(theta)
    if not cutoff_ratio > 0.0:
        raise DomainError(
            f"cutoff_ratio must be positive (inf = ohmic), got {cutoff_ratio!r}")
    if cutoff_ratio == math.inf:
        heat = ohmic_specific_heat(theta).C
        return FreeParticlePoint(theta=theta, cutoff_ratio=math.inf, C=heat)
    a = 1.0 / (TWO_PI * theta)
    z0 = cutoff_ratio / (2.0 * TWO_PI * theta)
    disc = 1.0 - 4.0 / cutoff_ratio
    if abs(disc) < _DEGENERATE_BAND:
        h = _PSI2_STEP
        psi2 = (trigamma(1.0 + z0 + h).real - trigamma(1.0 + z0 - h).real) / (2.0 * h)
        bracket_over_s = 2.0 * z0 * (trigamma(1.0 + z0).real + z0 * psi2)
        heat = 0.5 - a * bracket_over_s
    else:
        s = cmath.sqrt(complex(disc, 0.0))
        z_plus = z0 * (1.0 + s)
        z_minus = z0 * (1.0 - s)
        bracket = z_plus * trigamma(1.0 + z_plus) - z_minus * trigamma(1.0 + z_minus)
        heat = real_with_im_check(0.5 - a * bracket / s, what="specific heat")
    return FreeParticlePoint(theta=theta, cutoff_ratio=cutoff_ratio, C=heat)


def free_energy_internal(theta: float, kernel: DampingKernel,
                         tol: Tolerances = DEFAULT_TOL) -> SumResult:
    """Internal energy of the free particle from the frequency sum.

    theta is measured against kernel.gamma, and the returned value is in
    hbar gamma units, so the kernel can be built in any consistent frequency
    scale.  Strictly ohmic kernels give the cutoff-regularized energy with
    the regularized flag set; only its temperature dependence is physical.
    """
    _check_theta(theta)
    if kernel.gamma <= 0.0:
        raise DomainError("the free particle needs kernel.gamma > 0 for a scale")
    beta = 1.0 / (theta * kernel.gamma)
    result = energy_sum(0.0, kernel, beta, Prescription.ENERGY, tol=tol)
    return dataclasses.replace(result, value=result.value / kernel.gamma,
                               tail_bound=result.tail_bound / kernel.gamma)
