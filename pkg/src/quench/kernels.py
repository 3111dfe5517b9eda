"""Closed-form propagators as complex Gaussian coefficient forms.

A kernel is stored as

    K(x, t; x') = prefactor * exp(a x^2 + b x x' + c x'^2 + d x + e x' + f)

so that applying it to a Gaussian wave packet, applying it to a plane wave,
and composing two kernels are all exact coefficient algebra on top of the
Gaussian integral

    int exp(-beta y^2 + alpha y) dy = sqrt(pi/beta) exp(alpha^2 / 4 beta).

Units are hbar = m = 1 throughout.  The oscillator prefactor carries the
quarter-period phase jumps (factor exp(-i pi/2) per focal crossing) so the
builders return the true propagator, and the semigroup law holds, for every
non-caustic time.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import CausticError, DomainError, UnsupportedKernelError
from .numerics import gaussian_integral, oscillatory_gaussian_integral

__all__ = [
    "GaussianKernel",
    "GaussianState",
    "PlaneWaveState",
    "free_kernel",
    "oscillator_kernel",
    "linear_kernel",
    "driven_oscillator_kernel",
    "apply_kernel_to_gaussian",
    "apply_kernel_to_plane_wave",
    "gaussian_overlap",
    "compose_kernels",
]

CAUSTIC_EPS = 1e-9


def _require_finite(name, *values):
    for z in values:
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError(f"{name} must be finite")


@dataclass(frozen=True)
class GaussianKernel:
    """Propagator in Gaussian coefficient form, with its elapsed time."""

    prefactor: complex
    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex
    time: float

    def evaluate(self, x, xp):
        """Kernel values K(x, time; xp); x and xp broadcast as arrays."""
        x = np.asarray(x)
        xp = np.asarray(xp)
        return self.prefactor * np.exp(
            self.a * x * x + self.b * x * xp + self.c * xp * xp
            + self.d * x + self.e * xp + self.f)


@dataclass(frozen=True)
class GaussianState:
    """Wave packet amplitude * exp(-gamma x^2 + mu x), Re(gamma) > 0."""

    amplitude: complex
    gamma: complex
    mu: complex = 0j

    def __post_init__(self):
        _require_finite("gaussian state parameters",
                        self.amplitude, self.gamma, self.mu)
        if complex(self.gamma).real <= 0.0:
            raise DomainError(
                f"gaussian state requires Re(gamma) > 0, got {self.gamma}")

    def evaluate(self, x):
        x = np.asarray(x)
        return self.amplitude * np.exp(-self.gamma * x * x + self.mu * x)

    def norm(self) -> float:
        """L2 norm, from the closed-form Gaussian integral of |psi|^2."""
        val = gaussian_integral(2.0 * complex(self.gamma).real,
                                2.0 * complex(self.mu).real)
        return abs(self.amplitude) * math.sqrt(val.real)

    @property
    def center(self) -> float:
        """Peak position of |psi|^2."""
        return complex(self.mu).real / (2.0 * complex(self.gamma).real)

    @property
    def width(self) -> float:
        """Standard deviation of |psi|^2."""
        return 1.0 / (2.0 * math.sqrt(complex(self.gamma).real))


@dataclass(frozen=True)
class PlaneWaveState:
    """Plane wave phase * exp(i k x); phase stays unimodular under evolution."""

    wave_number: float
    phase: complex = 1.0 + 0j

    def evaluate(self, x):
        x = np.asarray(x)
        return self.phase * np.exp(1j * self.wave_number * x)


def free_kernel(t: float) -> GaussianKernel:
    """Free-particle propagator (2 pi i t)^(-1/2) exp[i (x-x')^2 / 2t].

    Parameters
    ----------
    t : float
        Elapsed time, t > 0.
    """
    t = float(t)
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"free kernel requires t > 0, got {t}")
    a = 0.5j / t
    return GaussianKernel(prefactor=1.0 / cmath.sqrt(2j * math.pi * t),
                          a=a, b=-1j / t, c=a, d=0j, e=0j, f=0j, time=t)


def oscillator_kernel(omega: float, t: float) -> GaussianKernel:
    """Harmonic oscillator propagator in coefficient form.

    Coefficient content of
        [omega / (2 pi i sin wt)]^(1/2)
            * exp{-(omega/2i) [(x^2+x'^2) cot wt - 2 x x' / sin wt]}
    with the prefactor phase advanced by exp(-i pi/2) at each focal time
    crossed, which keeps the builder equal to the true propagator (and the
    composition law exact) on every caustic-free interval.

    Raises
    ------
    CausticError
        When |sin(omega t)| < 1e-9; the kernel degenerates to a delta form.
    """
    omega = float(omega)
    t = float(t)
    if not (math.isfinite(omega) and omega > 0.0):
        raise DomainError(f"oscillator kernel requires omega > 0, got {omega}")
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"oscillator kernel requires t > 0, got {t}")
    theta = omega * t
    sin_t = math.sin(theta)
    if abs(sin_t) < CAUSTIC_EPS:
        raise CausticError(
            f"oscillator kernel at a caustic: |sin(omega t)| = {abs(sin_t):.2e}")
    crossings = math.floor(theta / math.pi)
    prefactor = cmath.exp(-1j * (0.25 * math.pi + 0.5 * math.pi * crossings)) \
        * math.sqrt(omega / (2.0 * math.pi * abs(sin_t)))
    a = 0.5j * omega * math.cos(theta) / sin_t
    return GaussianKernel(prefactor=prefactor, a=a, b=-1j * omega / sin_t,
                          c=a, d=0j, e=0j, f=0j, time=t)


def linear_kernel(g: float, t: float) -> GaussianKernel:
    """Propagator for a uniform force, potential V = g x.

    Coefficient content of
        (2 pi i t)^(-1/2) exp{i [(x-x')^2/2t - (g t/2)(x+x') - g^2 t^3/24]}.
    """
    g = float(g)
    t = float(t)
    if not math.isfinite(g):
        raise DomainError("linear kernel requires finite g")
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"linear kernel requires t > 0, got {t}")
    base = free_kernel(t)
    d = -0.5j * g * t
    return GaussianKernel(prefactor=base.prefactor, a=base.a, b=base.b,
                          c=base.c, d=d, e=d, f=-1j * g * g * t ** 3 / 24.0,
                          time=t)


def _tan_excess(theta: float) -> float:
    """tan(theta) - theta without cancellation for small theta.

    The direct difference loses all digits as theta -> 0; the Maclaurin
    tail theta^3/3 + 2 theta^5/15 + ... is exact to roundoff for
    |theta| <= 0.1, where the first omitted term is below 1e-9 relative.
    """
    if abs(theta) > 0.1:
        return math.tan(theta) - theta
    t2 = theta * theta
    return theta * t2 * (1.0 / 3.0 + t2 * (2.0 / 15.0 + t2 * (
        17.0 / 315.0 + t2 * (62.0 / 2835.0 + t2 * 1382.0 / 155925.0))))


def driven_oscillator_kernel(omega: float, linear_coeff: float,
                             t: float) -> GaussianKernel:
    """Oscillator propagator with a constant linear drive V = linear_coeff x.

    Built from the plain oscillator kernel by shifting both arguments to the
    displaced equilibrium x -> x + linear_coeff/omega^2 and multiplying by
    the constant phase exp(+i linear_coeff^2 t / (2 omega^2)) that the
    completed-square Lagrangian constant contributes to the action.  The
    shift terms collapse through (cos - 1)/sin = -tan(theta/2) to

        d = e = -i (lam/omega) tan(omega t / 2)
        f = -i (lam^2/omega^3) [tan(omega t / 2) - omega t / 2],

    which stay fully accurate down to the free-force limit omega -> 0.
    """
    omega = float(omega)
    lam = float(linear_coeff)
    if not math.isfinite(lam):
        raise DomainError("driven oscillator kernel requires finite linear_coeff")
    base = oscillator_kernel(omega, t)
    half = 0.5 * omega * t
    d = -1j * (lam / omega) * math.tan(half)
    f = -1j * lam * lam / omega ** 3 * _tan_excess(half)
    return GaussianKernel(prefactor=base.prefactor, a=base.a, b=base.b,
                          c=base.c, d=d, e=d, f=f, time=t)


def apply_kernel_to_gaussian(kernel: GaussianKernel,
                             state: GaussianState) -> GaussianState:
    """Propagate a Gaussian wave packet exactly.

    The x' integral is a Gaussian integral with beta = gamma - c and
    alpha = b x + e + mu; collecting powers of x gives the new packet

        gamma' = -(a + b^2 / 4 beta)
        mu'    = d + b (e + mu) / (2 beta)
        A'     = A * prefactor * sqrt(pi/beta) * exp(f + (e + mu)^2 / 4 beta).

    Raises DomainError when the combined exponent fails Re(beta) > 0 or when
    the result is not a normalizable packet.
    """
    beta = complex(state.gamma) - kernel.c
    root = gaussian_integral(beta, 0.0)  # sqrt(pi/beta), domain-checked
    m = kernel.e + complex(state.mu)
    amplitude = state.amplitude * kernel.prefactor * root \
        * cmath.exp(kernel.f + m * m / (4.0 * beta))
    gamma = -(kernel.a + kernel.b * kernel.b / (4.0 * beta))
    mu = kernel.d + kernel.b * m / (2.0 * beta)
    return GaussianState(amplitude=amplitude, gamma=gamma, mu=mu)


def gaussian_overlap(bra: GaussianState, ket: GaussianState) -> complex:
    """Inner product <bra|ket> = int conj(bra) ket dx in closed form."""
    beta = complex(bra.gamma).conjugate() + complex(ket.gamma)
    alpha = complex(bra.mu).conjugate() + complex(ket.mu)
    return (complex(bra.amplitude).conjugate() * complex(ket.amplitude)
            * gaussian_integral(beta, alpha))


def apply_kernel_to_plane_wave(kernel: GaussianKernel,
                               state: PlaneWaveState) -> PlaneWaveState:
    """Propagate a plane wave through a free or uniform-force kernel.

    Needs the plane-wave closure pattern b^2 = 4 a c (true for the free and
    linear families and their compositions): the x' integral then leaves a
    pure exp(i k' x) with

        i k' = d + b (e + i k) / (2 beta),  beta = -c,

    and the unimodular phase picks up
    prefactor * sqrt(pi/beta) * exp(f + (e + i k)^2 / 4 beta).
    """
    scale = max(1.0, abs(kernel.b) ** 2)
    if abs(kernel.b * kernel.b - 4.0 * kernel.a * kernel.c) > 1e-10 * scale \
            or kernel.c == 0:
        raise UnsupportedKernelError(
            "kernel coefficients lack plane-wave closure (b^2 != 4 a c)")
    beta = -kernel.c
    root = oscillatory_gaussian_integral(beta, 0.0)
    m = kernel.e + 1j * state.wave_number
    phase = state.phase * kernel.prefactor * root \
        * cmath.exp(kernel.f + m * m / (4.0 * beta))
    k_new = (kernel.d + kernel.b * m / (2.0 * beta)) / 1j
    if abs(k_new.imag) > 1e-9 * max(1.0, abs(k_new.real)):
        raise UnsupportedKernelError(
            f"plane-wave closure produced a complex wave number {k_new}")
    return PlaneWaveState(wave_number=k_new.real, phase=phase)


def compose_kernels(second: GaussianKernel,
                    first: GaussianKernel) -> GaussianKernel:
    """Chain two propagators: K(x, t1 + t2; x') = int K2(x; y) K1(y; x') dy.

    The intermediate y integral has beta = -(c2 + a1), which is purely
    oscillatory for unitary kernels, so the improper-integral value is used.
    Coefficient bookkeeping with alpha = b2 x + b1 x' + (e2 + d1) gives the
    composed form; times add.
    """
    beta = -(second.c + first.a)
    root = oscillatory_gaussian_integral(beta, 0.0)
    m = second.e + first.d
    quarter = 1.0 / (4.0 * beta)
    return GaussianKernel(
        prefactor=first.prefactor * second.prefactor * root,
        a=second.a + second.b * second.b * quarter,
        b=second.b * first.b * (2.0 * quarter),
        c=first.c + first.b * first.b * quarter,
        d=second.d + second.b * m * (2.0 * quarter),
        e=first.e + first.b * m * (2.0 * quarter),
        f=first.f + second.f + m * m * quarter,
        time=first.time + second.time)
