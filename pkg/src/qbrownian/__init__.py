"""Equilibrium thermodynamics of dissipative quantum systems.

Specific heat, entropy, and internal energy of an ohmically or Drude-damped
quantum harmonic oscillator and of a free quantum Brownian particle, at
arbitrary coupling strength, computed through mutually independent routes:
trigamma-based closed forms, tail-accelerated frequency sums under both
energy prescriptions, direct spectral quadrature, and limit expansions.
"""

from .core import (ConvergenceError, DEFAULT_TOL, DivergenceError, DomainError,
                   FREE_PARTICLE, OSCILLATOR, ReducedParams, Tolerances,
                   make_reduced, to_physical)
from .free_particle import (FreeParticlePoint, drude_specific_heat, drude_z_pm,
                            free_energy_internal, ohmic_lowT_expansion,
                            ohmic_specific_heat)
from .matsubara import (DampingKernel, FdResult, Prescription, SumResult,
                        energy_sum, kernel_laplace, position_variance_sum,
                        prescription_gap, specific_heat_fd)
from .oscillator import (ExpansionResult, LambdaPair, OscillatorPoint,
                         damped_entropy, damped_specific_heat,
                         damped_specific_heat_via_entropy, lambda_pm,
                         oscillator_expansion, undamped_thermo)
from .quadrature import MomentResult, f_n_integral, moments, spectral_energy
from .specfun import (PoleError, digamma, g_func, g_func_prime, ln_gamma,
                      trigamma)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DEFAULT_TOL", "DampingKernel", "DivergenceError",
    "DomainError", "ExpansionResult", "FREE_PARTICLE", "FdResult",
    "FreeParticlePoint", "LambdaPair", "MomentResult", "OSCILLATOR",
    "OscillatorPoint", "PoleError", "Prescription", "ReducedParams",
    "SumResult", "Tolerances", "damped_entropy", "damped_specific_heat",
    "damped_specific_heat_via_entropy", "digamma", "drude_specific_heat",
    "drude_z_pm", "energy_sum", "f_n_integral", "free_energy_internal",
    "g_func", "g_func_prime", "kernel_laplace", "lambda_pm", "ln_gamma",
    "make_reduced", "moments", "ohmic_lowT_expansion", "ohmic_specific_heat",
    "oscillator_expansion", "position_variance_sum", "prescription_gap",
    "specific_heat_fd", "spectral_energy", "to_physical", "trigamma",
    "undamped_thermo", "__version__",
]
