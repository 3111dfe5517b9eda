"""Shared numerical primitives: grids, Gaussian integrals, Fresnel integrals,
quadrature application of kernels, and a dense symmetric eigensolver.

Everything works in ordinary double precision.  Complex square roots take the
principal branch throughout.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "Grid1D",
    "SymmetricMatrix",
    "gaussian_integral",
    "oscillatory_gaussian_integral",
    "fresnel",
    "apply_kernel_numeric",
    "eigensolve_symmetric",
]


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1-D grid with trapezoid weights.

    Parameters
    ----------
    x_min, x_max : float
        Grid endpoints, x_min < x_max.
    n_points : int
        Number of points, at least 2.  Endpoints are included.
    """

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise DomainError("grid endpoints must be finite")
        if not self.x_max > self.x_min:
            raise DomainError("grid requires x_max > x_min")
        if self.n_points < 2:
            raise DomainError("grid requires at least 2 points")

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n_points, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w


@dataclass(frozen=True)
class SymmetricMatrix:
    """Dense real symmetric matrix, symmetrized by averaging at construction."""

    array: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.asarray(self.array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("symmetric matrix requires a square 2-D array")
        if not np.all(np.isfinite(a)):
            raise DomainError("symmetric matrix entries must be finite")
        object.__setattr__(self, "array", 0.5 * (a + a.T))

    @property
    def dim(self) -> int:
        return self.array.shape[0]


def gaussian_integral(beta: complex, alpha: complex) -> complex:
    """Full-line integral of exp(-beta x^2 + alpha x).

    Evaluates sqrt(pi/beta) * exp(alpha^2 / (4 beta)) with the principal
    square root.  Convergence requires Re(beta) > 0; anything else raises
    DomainError rather than silently continuing the formula.

    Parameters
    ----------
    beta, alpha : complex
        Quadratic and linear exponent coefficients.

    Returns
    -------
    complex
    """
    beta = complex(beta)
    alpha = complex(alpha)
    for z in (beta, alpha):
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("gaussian integral coefficients must be finite")
    if beta.real <= 0.0:
        raise DomainError(
            f"gaussian integral diverges: Re(beta) = {beta.real} <= 0")
    return cmath.sqrt(math.pi / beta) * cmath.exp(alpha * alpha / (4.0 * beta))


def oscillatory_gaussian_integral(beta: complex, alpha: complex) -> complex:
    """Gaussian integral extended to purely oscillatory quadratic exponents.

    Same closed form as gaussian_integral, accepted for Re(beta) >= 0 with
    beta != 0.  For Re(beta) = 0 the full-line integral converges only
    improperly (Fresnel sense) and its value is the principal-branch
    continuation, which is what composition of unitary propagators needs.
    """
    beta = complex(beta)
    alpha = complex(alpha)
    if beta.real < 0.0 or beta == 0:
        raise DomainError(
            f"oscillatory gaussian integral requires Re(beta) >= 0, beta != 0; "
            f"got beta = {beta}")
    return cmath.sqrt(math.pi / beta) * cmath.exp(alpha * alpha / (4.0 * beta))


# Fresnel evaluation switches between three representations.  The Maclaurin
# series loses digits to cancellation beyond |u| ~ 2.5 and the divergent
# auxiliary-function expansion only reaches 1e-11 for |u| >~ 4, so a
# convergent rotated-contour integral bridges the middle band.
_FRESNEL_SERIES_CUT = 2.0
_FRESNEL_ASYMPTOTIC_CUT = 4.5
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _fresnel_series(u: float) -> tuple[float, float]:
    # C(u) = u sum_n (-z^2)^n / ((2n)! (4n+1)),  z = pi u^2 / 2
    # S(u) = u z sum_n (-z^2)^n / ((2n+1)! (4n+3))
    z = 0.5 * math.pi * u * u
    z2 = z * z
    c_sum, term, n = 0.0, 1.0, 0
    while True:
        inc = term / (4 * n + 1)
        c_sum += inc
        if abs(inc) < 1e-17:
            break
        n += 1
        term *= -z2 / ((2 * n) * (2 * n - 1))
    s_sum, term, n = 0.0, 1.0, 0
    while True:
        inc = term / (4 * n + 3)
        s_sum += inc
        if abs(inc) < 1e-17:
            break
        n += 1
        term *= -z2 / ((2 * n) * (2 * n + 1))
    return u * c_sum, u * z * s_sum


def _fresnel_aux_contour(u: float) -> complex:
    # g + i f = e^{i pi/4} int_0^inf exp(-pi tau^2/2 - a (1-i) tau) dtau
    # with a = pi u / sqrt 2, from rotating the complementary integral
    # int_u^inf e^{i pi t^2/2} dt onto the steepest-descent ray.
    a = math.pi * u / math.sqrt(2.0)
    # truncate where the damping reaches e^-45
    t_max = (-a + math.sqrt(a * a + 90.0 * math.pi)) / math.pi
    n_panels = max(4, math.ceil(a * t_max / math.pi) + 2)
    edges = np.linspace(0.0, t_max, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    tau = mid[:, None] + half * _GL_NODES[None, :]
    vals = np.exp(-0.5 * math.pi * tau * tau - a * (1.0 - 1.0j) * tau)
    total = half * np.sum(vals @ _GL_WEIGHTS)
    return cmath.exp(0.25j * math.pi) * complex(total)


def _fresnel_aux_asymptotic(u: float) -> complex:
    # g + i f = sum_k c_k, c_0 = i/(pi u), c_{k+1} = c_k * (-i)(2k+1)/(pi u^2);
    # divergent, truncated at the smallest term.
    pix2 = math.pi * u * u
    c = 1j / (math.pi * u)
    total = 0j
    prev = abs(c)
    k = 0
    while True:
        total += c
        c = c * (-1j) * (2 * k + 1) / pix2
        k += 1
        if abs(c) >= prev or abs(c) < 1e-18:
            break
        prev = abs(c)
    return total


def fresnel(u: float) -> tuple[float, float]:
    """Fresnel integrals C(u) = int_0^u cos(pi v^2/2) dv and the sine analogue.

    Parameters
    ----------
    u : float
        Real argument; C and S are odd in u.

    Returns
    -------
    (float, float)
        (C(u), S(u)), absolute accuracy well below 1e-10 on |u| <= 50.
    """
    u = float(u)
    if not math.isfinite(u):
        raise DomainError("fresnel argument must be finite")
    sign = -1.0 if u < 0 else 1.0
    x = abs(u)
    if x <= _FRESNEL_SERIES_CUT:
        c, s = _fresnel_series(x)
        return sign * c, sign * s
    if x < _FRESNEL_ASYMPTOTIC_CUT:
        aux = _fresnel_aux_contour(x)
    else:
        aux = _fresnel_aux_asymptotic(x)
    g, f = aux.real, aux.imag
    th = 0.5 * math.pi * x * x
    c = 0.5 + f * math.sin(th) - g * math.cos(th)
    s = 0.5 - f * math.cos(th) - g * math.sin(th)
    return sign * c, sign * s


def apply_kernel_numeric(kernel_values: np.ndarray,
                         state_values: np.ndarray,
                         grid: Grid1D) -> np.ndarray:
    """Propagate state samples through sampled kernel values by trapezoid rule.

    Parameters
    ----------
    kernel_values : ndarray, shape (n_out, grid.n_points)
        K(x_i, x'_j) sampled with x' on `grid`.
    state_values : ndarray, shape (grid.n_points,)
        psi(x'_j) on the same grid.
    grid : Grid1D
        Integration grid for x'.

    Returns
    -------
    ndarray, shape (n_out,)
        Trapezoid approximation of int K(x_i, x') psi(x') dx'.
    """
    kernel_values = np.asarray(kernel_values)
    state_values = np.asarray(state_values)
    if kernel_values.ndim != 2:
        raise ValueError("kernel_values must be a 2-D array")
    if state_values.ndim != 1:
        raise ValueError("state_values must be a 1-D array")
    if kernel_values.shape[1] != grid.n_points:
        raise ValueError(
            f"kernel_values has {kernel_values.shape[1]} columns but the grid "
            f"has {grid.n_points} points")
    if state_values.shape[0] != grid.n_points:
        raise ValueError(
            f"state_values has {state_values.shape[0]} samples but the grid "
            f"has {grid.n_points} points")
    return kernel_values @ (grid.trapezoid_weights() * state_values)


def eigensolve_symmetric(matrix: SymmetricMatrix,
                         max_sweeps: int = 64) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Threshold sweeps: early sweeps skip rotations on entries below a
    decreasing threshold, later sweeps annihilate everything.  Raises
    ConvergenceError if the off-diagonal mass has not vanished after
    `max_sweeps` sweeps.

    Parameters
    ----------
    matrix : SymmetricMatrix
    max_sweeps : int
        Sweep budget before giving up.

    Returns
    -------
    (values, vectors)
        Eigenvalues ascending; vectors[:, k] is the unit eigenvector for
        values[k], orthonormal by construction as a product of rotations.
    """
    a = np.array(matrix.array, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v
    scale = np.max(np.abs(a))
    if scale == 0.0:
        return np.zeros(n), v

    converged = False
    for sweep in range(max_sweeps):
        off = np.sum(np.abs(a)) - np.sum(np.abs(a.diagonal()))
        if off <= 1e-14 * n * scale:
            converged = True
            break
        # coarse threshold on the first sweeps, exact annihilation later
        threshold = 0.2 * off / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold:
                    continue
                if abs(apq) <= 1e-16 * scale:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                if abs(theta) > 1e12:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    if not converged:
        off = np.sum(np.abs(a)) - np.sum(np.abs(a.diagonal()))
        if off > 1e-14 * n * scale:
            raise ConvergenceError(
                f"jacobi sweeps exhausted ({max_sweeps}) with off-diagonal "
                f"mass {off:.3e}")
    values = a.diagonal().copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]
