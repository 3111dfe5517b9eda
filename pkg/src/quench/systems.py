"""Deuteron in a suddenly applied uniform electrostatic field.

Two nucleons bound by a harmonic potential, one charged, in natural units
hbar = m = c = 1.  At t = 0 the system sits in its oscillator ground state
and a uniform field of strength `field` along z switches on.  In Jacobi
coordinates r = (r1 - r2)/sqrt2, R = (r1 + r2)/sqrt2 the motion separates:

  * relative x, y: plain oscillator, frequency omega
  * relative z: oscillator driven by the constant force field/sqrt2
  * center of mass X, Y: free
  * center of mass Z: uniform force field/sqrt2 on a plane wave

so every factor evolves by exact kernel algebra.  The relative density stays
a rigid Gaussian whose z center executes -(sqrt2 field / omega^2)
sin^2(omega t / 2), period 2 pi / omega.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import (GaussianState, PlaneWaveState, apply_kernel_to_gaussian,
                      apply_kernel_to_plane_wave, driven_oscillator_kernel,
                      free_kernel, linear_kernel, oscillator_kernel)

__all__ = [
    "DeuteronParams",
    "EvolvedDeuteronState",
    "lab_to_jacobi",
    "jacobi_to_lab",
    "nucleon_positions",
    "initial_ground_state",
    "evolve_ground_state",
    "relative_density",
    "density_center",
    "peak_density",
    "oscillation_period",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DeuteronParams:
    """Oscillator frequency, field strength, and center-of-mass wave vector."""

    omega: float
    field: float
    k_com: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega > 0.0):
            raise DomainError(f"omega must be positive, got {self.omega}")
        if not math.isfinite(self.field):
            raise DomainError("field must be finite")
        if len(self.k_com) != 3 or not all(math.isfinite(k) for k in self.k_com):
            raise DomainError("k_com must be three finite components")

    @property
    def linear_coeff(self) -> float:
        """Force coefficient field/sqrt2 acting on both Jacobi z coordinates."""
        return self.field / _SQRT2


@dataclass(frozen=True)
class EvolvedDeuteronState:
    """Product state at time t: three Gaussian relative factors, three
    plane-wave center-of-mass factors."""

    relative_x: GaussianState
    relative_y: GaussianState
    relative_z: GaussianState
    com_x: PlaneWaveState
    com_y: PlaneWaveState
    com_z: PlaneWaveState
    time: float

    def relative_values(self, x, y, z):
        """Relative wavefunction on broadcastable coordinate arrays."""
        return (self.relative_x.evaluate(x) * self.relative_y.evaluate(y)
                * self.relative_z.evaluate(z))

    def relative_density_values(self, x, y, z):
        return np.abs(self.relative_values(x, y, z)) ** 2

    def norm(self) -> float:
        """Norm of the relative factor; the plane-wave factors are unimodular."""
        return (self.relative_x.norm() * self.relative_y.norm()
                * self.relative_z.norm())


def lab_to_jacobi(r1, r2):
    """Nucleon positions to Jacobi pair (relative, center of mass).

    r = (r1 - r2)/sqrt2, R = (r1 + r2)/sqrt2; the inverse map has the same
    matrix, so the transform composed with jacobi_to_lab is the identity.
    """
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    return (r1 - r2) / _SQRT2, (r1 + r2) / _SQRT2


def jacobi_to_lab(rel, com):
    """Inverse of lab_to_jacobi."""
    rel = np.asarray(rel, dtype=float)
    com = np.asarray(com, dtype=float)
    return (com + rel) / _SQRT2, (com - rel) / _SQRT2


def nucleon_positions(z_rel: float, z_com: float) -> tuple[float, float]:
    """Field-axis positions of the two nucleons from the Jacobi pair."""
    return (z_com + z_rel) / _SQRT2, (z_com - z_rel) / _SQRT2


def initial_ground_state(params: DeuteronParams) -> EvolvedDeuteronState:
    """Ground state of the unperturbed relative oscillator times a
    center-of-mass plane wave; overall amplitude (omega/pi)^(3/4)."""
    axis = GaussianState(amplitude=(params.omega / math.pi) ** 0.25,
                         gamma=0.5 * params.omega)
    kx, ky, kz = params.k_com
    return EvolvedDeuteronState(
        relative_x=axis, relative_y=axis, relative_z=axis,
        com_x=PlaneWaveState(kx), com_y=PlaneWaveState(ky),
        com_z=PlaneWaveState(kz), time=0.0)


def evolve_ground_state(params: DeuteronParams, t: float) -> EvolvedDeuteronState:
    """Exact state at time t >= 0 after the field switches on.

    Each factor goes through its own closed-form kernel.  Raises
    CausticError at the oscillator focal times (t a multiple of pi/omega),
    where the coefficient form of the kernels degenerates.
    """
    t = float(t)
    if not (math.isfinite(t) and t >= 0.0):
        raise DomainError(f"evolution time must be >= 0, got {t}")
    start = initial_ground_state(params)
    if t == 0.0:
        return start
    k_osc = oscillator_kernel(params.omega, t)
    k_driven = driven_oscillator_kernel(params.omega, params.linear_coeff, t)
    k_free = free_kernel(t)
    k_linear = linear_kernel(params.linear_coeff, t)
    return EvolvedDeuteronState(
        relative_x=apply_kernel_to_gaussian(k_osc, start.relative_x),
        relative_y=apply_kernel_to_gaussian(k_osc, start.relative_y),
        relative_z=apply_kernel_to_gaussian(k_driven, start.relative_z),
        com_x=apply_kernel_to_plane_wave(k_free, start.com_x),
        com_y=apply_kernel_to_plane_wave(k_free, start.com_y),
        com_z=apply_kernel_to_plane_wave(k_linear, start.com_z),
        time=t)


def density_center(params: DeuteronParams, t: float) -> float:
    """z position of the relative-density peak,
    -(sqrt2 field / omega^2) sin^2(omega t / 2)."""
    return -(_SQRT2 * params.field / params.omega ** 2) \
        * math.sin(0.5 * params.omega * float(t)) ** 2


def peak_density(params: DeuteronParams) -> float:
    """Relative density at its peak, (omega/pi)^(3/2); the packet is rigid,
    so this does not depend on time."""
    return (params.omega / math.pi) ** 1.5


def relative_density(params: DeuteronParams, x, y, z, t: float):
    """Closed-form relative density at time t,

        (omega/pi)^(3/2) exp(-omega (x^2 + y^2))
            * exp(-omega [z + (sqrt2 field/omega^2) sin^2(omega t/2)]^2).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    center = density_center(params, t)
    w = params.omega
    return (w / math.pi) ** 1.5 * np.exp(-w * (x * x + y * y)) \
        * np.exp(-w * (z - center) ** 2)


def oscillation_period(params: DeuteronParams) -> float:
    """Period of the density-center oscillation, 2 pi / omega."""
    return 2.0 * math.pi / params.omega
