"""Truncated-eigenbasis treatment of a sudden perturbation.

The state before the quench is an eigenstate phi_nu of H-.  Afterwards the
Hamiltonian is H+ = H- + delta_V.  Expanding in the H- eigenbasis and
keeping the first N functions turns the evolution into a dense symmetric
matrix problem:

    H+[n', n] = E_n delta_{n'n} + int phi_n' delta_V phi_n dx,

diagonalized once; the state at time t is then a residue-style sum of
phase factors over the truncated spectrum,

    b_n(t) = sum_k V[n, k] exp(-i E_k t) c_k,   c_k = V[nu, k],

from which survival probability, position expectation, energy, and grid
wavefunctions follow.  Two bases are provided: harmonic oscillator
(Hermite-recurrence functions, ladder-operator position matrix) and a hard
box on [0, L] (sine functions, quadrature position matrix).
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import CoverageError, DomainError
from .numerics import Grid1D, SymmetricMatrix, eigensolve_symmetric

__all__ = [
    "BasisSpec",
    "PerturbationSpec",
    "SpectralSolution",
    "oscillator_basis",
    "box_basis",
    "default_oscillator_grid",
    "basis_eval",
    "basis_matrix",
    "basis_energy",
    "position_matrix",
    "perturbation_matrix",
    "hplus_matrix",
    "solve_quench",
    "coefficients_at",
    "survival_amplitude",
    "survival_probability",
    "expectation_position",
    "expectation_energy",
    "wavefunction_on_grid",
]

_TAIL_MASS_LIMIT = 1e-10


@dataclass(frozen=True)
class BasisSpec:
    """Truncated eigenbasis of the pre-quench Hamiltonian.

    kind "oscillator" uses `omega`; kind "box" uses `box_length` (well on
    [0, box_length]).  `size` is the truncation index N.
    """

    kind: str
    size: int
    omega: float = 0.0
    box_length: float = 0.0

    def __post_init__(self):
        if self.kind not in ("oscillator", "box"):
            raise DomainError(f"unknown basis kind {self.kind!r}")
        if self.size < 1:
            raise DomainError("basis size must be >= 1")
        param = self.omega if self.kind == "oscillator" else self.box_length
        if not (math.isfinite(param) and param > 0.0):
            raise DomainError(
                f"{self.kind} basis requires a positive scale parameter")


def oscillator_basis(omega: float, size: int) -> BasisSpec:
    return BasisSpec(kind="oscillator", size=size, omega=omega)


def box_basis(box_length: float, size: int) -> BasisSpec:
    return BasisSpec(kind="box", size=size, box_length=box_length)


@dataclass(frozen=True)
class PerturbationSpec:
    """Pointwise evaluator of delta_V = V+ - V- and its quadrature grid."""

    delta_v: Callable
    grid: Grid1D


@dataclass(frozen=True)
class SpectralSolution:
    """Diagonalized truncated quench problem."""

    eigenvalues: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)
    initial_index: int = 0
    initial_coeffs: np.ndarray = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.eigenvalues.shape[0]


def default_oscillator_grid(omega: float, size: int) -> Grid1D:
    """Grid covering the classical turning points of the highest kept state
    plus eight ground-state widths of tail, 8N+1 points."""
    half = math.sqrt(2.0 * size / omega) + 8.0 / math.sqrt(omega)
    return Grid1D(-half, half, 8 * size + 1)


def default_box_grid(box_length: float, size: int) -> Grid1D:
    return Grid1D(0.0, box_length, 8 * size + 1)


def _check_index(b: BasisSpec, n: int):
    if not 0 <= n < b.size:
        raise IndexError(f"basis index {n} outside truncated range 0..{b.size - 1}")


def basis_matrix(b: BasisSpec, x) -> np.ndarray:
    """All N basis functions sampled on x; row n is phi_n.

    The oscillator rows come from the normalized Hermite-function recurrence
        phi_{n+1} = sqrt(2/(n+1)) xi phi_n - sqrt(n/(n+1)) phi_{n-1},
    xi = sqrt(omega) x, which is stable in this normalized form.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros((b.size, x.size))
    if b.kind == "oscillator":
        xi = math.sqrt(b.omega) * x
        out[0] = (b.omega / math.pi) ** 0.25 * np.exp(-0.5 * xi * xi)
        if b.size > 1:
            out[1] = math.sqrt(2.0) * xi * out[0]
        for n in range(1, b.size - 1):
            out[n + 1] = (math.sqrt(2.0 / (n + 1)) * xi * out[n]
                          - math.sqrt(n / (n + 1.0)) * out[n - 1])
    else:
        inside = (x >= 0.0) & (x <= b.box_length)
        amp = math.sqrt(2.0 / b.box_length)
        for n in range(b.size):
            out[n, inside] = amp * np.sin(
                (n + 1) * math.pi * x[inside] / b.box_length)
    return out


def basis_eval(b: BasisSpec, n: int, x):
    """phi_n sampled at x (scalar in, scalar out)."""
    _check_index(b, n)
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    vals = basis_matrix(b, x)[n]
    return float(vals[0]) if scalar else vals


def basis_energy(b: BasisSpec, n: int) -> float:
    """Pre-quench level: (n + 1/2) omega, or (n+1)^2 pi^2 / (2 L^2)."""
    _check_index(b, n)
    if b.kind == "oscillator":
        return (n + 0.5) * b.omega
    return (n + 1) ** 2 * math.pi ** 2 / (2.0 * b.box_length ** 2)


def position_matrix(b: BasisSpec) -> np.ndarray:
    """Matrix of x in the truncated basis.

    Oscillator: ladder-operator form, entries sqrt((n+1)/(2 omega)) on the
    first off-diagonals.  Box: trapezoid quadrature on the default grid.
    """
    if b.kind == "oscillator":
        off = np.sqrt(np.arange(1, b.size) / (2.0 * b.omega))
        return np.diag(off, 1) + np.diag(off, -1)
    grid = default_box_grid(b.box_length, b.size)
    xs = grid.points()
    phi = basis_matrix(b, xs)
    wx = grid.trapezoid_weights() * xs
    mat = phi @ (wx[:, None] * phi.T)
    return 0.5 * (mat + mat.T)


def _check_coverage(b: BasisSpec, grid: Grid1D):
    if b.kind == "box":
        if grid.x_min > 0.0 or grid.x_max < b.box_length:
            raise CoverageError(
                f"grid [{grid.x_min}, {grid.x_max}] does not span the box "
                f"[0, {b.box_length}]")
        return
    edge = basis_matrix(b, np.array([grid.x_min, grid.x_max]))
    tail = float(np.max(np.sum(edge * edge, axis=1))) * grid.spacing
    if tail > _TAIL_MASS_LIMIT:
        raise CoverageError(
            f"basis tail mass {tail:.3e} on the grid boundary exceeds "
            f"{_TAIL_MASS_LIMIT}; widen the quadrature grid")


def perturbation_matrix(b: BasisSpec, p: PerturbationSpec) -> SymmetricMatrix:
    """Quadrature matrix of delta_V in the basis, symmetrized by averaging.

    Raises CoverageError when the basis leaks past the grid boundary.
    """
    _check_coverage(b, p.grid)
    xs = p.grid.points()
    dv = np.asarray(p.delta_v(xs), dtype=float)
    if dv.shape != xs.shape:
        dv = np.broadcast_to(dv, xs.shape).astype(float)
    if not np.all(np.isfinite(dv)):
        raise DomainError("delta_V must be finite on the quadrature grid")
    phi = basis_matrix(b, xs)
    weighted = p.grid.trapezoid_weights() * dv
    mat = phi @ (weighted[:, None] * phi.T)
    return SymmetricMatrix(mat)  # constructor averages away quadrature skew


def hplus_matrix(b: BasisSpec, p: PerturbationSpec) -> SymmetricMatrix:
    """Truncated post-quench Hamiltonian diag(E_n) + perturbation matrix."""
    pert = perturbation_matrix(b, p)
    energies = np.array([basis_energy(b, n) for n in range(b.size)])
    return SymmetricMatrix(pert.array + np.diag(energies))


def solve_quench(b: BasisSpec, p: PerturbationSpec,
                 nu: int = 0) -> SpectralSolution:
    """Diagonalize the truncated H+ for the initial state phi_nu.

    initial_coeffs[k] = V[nu, k] are the eigenbasis coordinates of phi_nu;
    the downstream phase sum over them is the residue evaluation of the
    Laplace-domain solution.
    """
    _check_index(b, nu)
    values, vectors = eigensolve_symmetric(hplus_matrix(b, p))
    return SpectralSolution(eigenvalues=values, eigenvectors=vectors,
                            initial_index=nu,
                            initial_coeffs=vectors[nu, :].copy())


def coefficients_at(sol: SpectralSolution, t: float) -> np.ndarray:
    """H- basis coefficients b_n(t) = sum_k V[n,k] e^{-i E_k t} c_k."""
    phases = np.exp(-1j * sol.eigenvalues * float(t))
    return sol.eigenvectors @ (phases * sol.initial_coeffs)


def survival_amplitude(sol: SpectralSolution, t: float) -> complex:
    """Overlap of psi(t) with the initial state, b_nu(t)."""
    phases = np.exp(-1j * sol.eigenvalues * float(t))
    return complex(np.sum(sol.initial_coeffs ** 2 * phases))


def survival_probability(sol: SpectralSolution, t: float) -> float:
    """|<phi_nu | psi(t)>|^2."""
    return abs(survival_amplitude(sol, t)) ** 2


def expectation_position(sol: SpectralSolution, b: BasisSpec,
                         t: float) -> float:
    """<psi(t)| x |psi(t)> through the basis position matrix."""
    coeffs = coefficients_at(sol, t)
    return float(np.real(np.conj(coeffs) @ (position_matrix(b) @ coeffs)))


def expectation_energy(sol: SpectralSolution, t: float) -> float:
    """<psi(t)| H+ |psi(t)>; constant in time up to roundoff."""
    weights = np.abs(np.exp(-1j * sol.eigenvalues * float(t))
                     * sol.initial_coeffs) ** 2
    return float(np.sum(weights * sol.eigenvalues))


def wavefunction_on_grid(sol: SpectralSolution, b: BasisSpec, t: float,
                         grid: Grid1D) -> np.ndarray:
    """psi(x, t) = sum_n b_n(t) phi_n(x) sampled on the grid."""
    coeffs = coefficients_at(sol, t)
    return coeffs @ basis_matrix(b, grid.points())
