"""Transient quantum dynamics of bound states under sudden perturbations.

Closed-form Gaussian propagator algebra, the deuteron-in-a-field quench,
diffraction in time behind a suddenly opened shutter, and a truncated
eigenbasis spectral method, each cross-validating the others.
"""

from .errors import (
    CausticError,
    ConfigError,
    ConvergenceError,
    CoverageError,
    DomainError,
    UnsupportedKernelError,
)
from .numerics import (
    Grid1D,
    SymmetricMatrix,
    apply_kernel_numeric,
    eigensolve_symmetric,
    fresnel,
    gaussian_integral,
    oscillatory_gaussian_integral,
)
from .kernels import (
    CAUSTIC_EPS,
    GaussianKernel,
    GaussianState,
    PlaneWaveState,
    apply_kernel_to_gaussian,
    apply_kernel_to_plane_wave,
    compose_kernels,
    driven_oscillator_kernel,
    free_kernel,
    gaussian_overlap,
    linear_kernel,
    oscillator_kernel,
)
from .systems import (
    DeuteronParams,
    EvolvedDeuteronState,
    density_center,
    evolve_ground_state,
    initial_ground_state,
    jacobi_to_lab,
    lab_to_jacobi,
    nucleon_positions,
    oscillation_period,
    peak_density,
    relative_density,
)
from .diffraction import (
    ShutterQuery,
    cornu_spiral,
    shutter_amplitude,
    shutter_density,
    u0,
    wavefront_position,
)
from .spectral import (
    BasisSpec,
    PerturbationSpec,
    SpectralSolution,
    basis_energy,
    basis_eval,
    basis_matrix,
    box_basis,
    coefficients_at,
    default_oscillator_grid,
    expectation_energy,
    expectation_position,
    hplus_matrix,
    oscillator_basis,
    perturbation_matrix,
    position_matrix,
    solve_quench,
    survival_amplitude,
    survival_probability,
    wavefunction_on_grid,
)

__version__ = "0.1.0"

__all__ = [
    "CausticError",
    "ConfigError",
    "ConvergenceError",
    "CoverageError",
    "DomainError",
    "UnsupportedKernelError",
    "Grid1D",
    "SymmetricMatrix",
    "apply_kernel_numeric",
    "eigensolve_symmetric",
    "fresnel",
    "gaussian_integral",
    "oscillatory_gaussian_integral",
    "CAUSTIC_EPS",
    "GaussianKernel",
    "GaussianState",
    "PlaneWaveState",
    "apply_kernel_to_gaussian",
    "apply_kernel_to_plane_wave",
    "compose_kernels",
    "driven_oscillator_kernel",
    "free_kernel",
    "gaussian_overlap",
    "linear_kernel",
    "oscillator_kernel",
    "DeuteronParams",
    "EvolvedDeuteronState",
    "density_center",
    "evolve_ground_state",
    "initial_ground_state",
    "jacobi_to_lab",
    "lab_to_jacobi",
    "nucleon_positions",
    "oscillation_period",
    "peak_density",
    "relative_density",
    "ShutterQuery",
    "cornu_spiral",
    "shutter_amplitude",
    "shutter_density",
    "u0",
    "wavefront_position",
    "BasisSpec",
    "PerturbationSpec",
    "SpectralSolution",
    "basis_energy",
    "basis_eval",
    "basis_matrix",
    "box_basis",
    "coefficients_at",
    "default_oscillator_grid",
    "expectation_energy",
    "expectation_position",
    "hplus_matrix",
    "oscillator_basis",
    "perturbation_matrix",
    "position_matrix",
    "solve_quench",
    "survival_amplitude",
    "survival_probability",
    "wavefunction_on_grid",
    "__version__",
]
