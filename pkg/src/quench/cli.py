"""Command-line front end for the quench scenarios.

    quench <mode> --config <path> [--out <path>] [--format csv|json]
                  [--no-plots]

Modes: deuteron, diffraction, spectral, kernels-check.  Configs are flat
``key = value`` text with ``#`` comments.  The report path writes the
delimited data file, a JSON summary, any auxiliary tables (Cornu spiral,
convergence study, density slices), and matplotlib renderings of the same
data; identical configs produce byte-identical outputs.

Exit status: 0 on success, 2 for config errors (message names the
offending key), 3 for numerical-domain errors such as caustics or
quadrature-coverage failures.
"""

import argparse
import csv
import json
import math
import sys

import numpy as np

from .errors import ConfigError, ConvergenceError, DomainError
from .numerics import (Grid1D, SymmetricMatrix, apply_kernel_numeric,
                       eigensolve_symmetric, fresnel)
from .kernels import (CAUSTIC_EPS, GaussianState, apply_kernel_to_gaussian,
                      compose_kernels, driven_oscillator_kernel, free_kernel,
                      linear_kernel, oscillator_kernel)
from . import systems
from .systems import DeuteronParams
from . import diffraction
from .diffraction import ShutterQuery, cornu_spiral, shutter_density
from . import spectral
from .plots import (save_deuteron_plots, save_diffraction_plots,
                    save_spectral_plots)

__all__ = ["main", "read_config", "run_mode"]

UNITS = "natural units: hbar = m = c = 1"

_MODE_KEYS = {
    "deuteron": {"omega", "field", "k_com", "times", "time_start",
                 "time_stop", "time_steps", "slice_times",
                 "slice_z_half_width", "slice_z_points"},
    "diffraction": {"wave_number", "time", "x_start", "x_stop", "x_points",
                    "cornu_u_max", "cornu_points"},
    "spectral": {"basis", "size", "omega", "box_length", "coupling",
                 "initial_index", "times", "time_start", "time_stop",
                 "time_steps", "grid_half_width", "grid_points",
                 "convergence_sizes"},
    "kernels-check": {"omega", "seed"},
}


# ---------------------------------------------------------------- config ----

def read_config(path: str) -> dict:
    """Parse a flat key = value file, raising ConfigError with the line or
    key at fault."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    params = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(
                f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{path}:{lineno}: empty key")
        if key in params:
            raise ConfigError(f"duplicate key {key!r} at {path}:{lineno}")
        params[key] = value
    return params


def _check_keys(mode: str, params: dict):
    allowed = _MODE_KEYS[mode]
    for key in params:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} for mode {mode!r}")


def _get_float(params, key, default=None, minimum=None, positive=False):
    if key not in params:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return float(default)
    try:
        value = float(params[key])
    except ValueError:
        raise ConfigError(
            f"key {key!r}: expected a number, got {params[key]!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"key {key!r}: value must be finite")
    if positive and value <= 0.0:
        raise ConfigError(f"key {key!r}: value must be > 0, got {value}")
    if minimum is not None and value < minimum:
        raise ConfigError(
            f"key {key!r}: value must be >= {minimum}, got {value}")
    return value


def _get_int(params, key, default=None, minimum=None):
    if key not in params:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return int(default)
    try:
        value = int(params[key])
    except ValueError:
        raise ConfigError(
            f"key {key!r}: expected an integer, got {params[key]!r}") from None
    if minimum is not None and value < minimum:
        raise ConfigError(
            f"key {key!r}: value must be >= {minimum}, got {value}")
    return value


def _get_choice(params, key, choices, default):
    value = params.get(key, default)
    if value not in choices:
        raise ConfigError(
            f"key {key!r}: expected one of {sorted(choices)}, got {value!r}")
    return value


def _get_float_list(params, key, default=None, length=None):
    if key not in params:
        if default is None:
            return None
        return list(default)
    items = [s for s in params[key].split(",") if s.strip()]
    try:
        values = [float(s) for s in items]
    except ValueError:
        raise ConfigError(
            f"key {key!r}: expected comma-separated numbers, "
            f"got {params[key]!r}") from None
    if length is not None and len(values) != length:
        raise ConfigError(
            f"key {key!r}: expected {length} values, got {len(values)}")
    if not values:
        raise ConfigError(f"key {key!r}: empty list")
    return values


def _get_int_list(params, key, default):
    if key not in params:
        return list(default)
    values = _get_float_list(params, key)
    out = []
    for v in values:
        if v != int(v) or v < 1:
            raise ConfigError(
                f"key {key!r}: expected positive integers, got {params[key]!r}")
        out.append(int(v))
    return out


def _resolve_times(params, default_stop, default_steps=100):
    """Sweep times from an explicit `times` list or a start/stop/steps range;
    the two styles are mutually exclusive."""
    has_list = "times" in params
    has_range = any(k in params for k in
                    ("time_start", "time_stop", "time_steps"))
    if has_list and has_range:
        raise ConfigError(
            "key 'times': cannot be combined with time_start/time_stop/"
            "time_steps")
    if has_list:
        values = _get_float_list(params, "times")
        if any(t < 0 for t in values):
            raise ConfigError("key 'times': times must be >= 0")
        return np.array(values, dtype=float)
    start = _get_float(params, "time_start", default=0.0, minimum=0.0)
    stop = _get_float(params, "time_stop", default=default_stop)
    if stop <= start:
        raise ConfigError(
            f"key 'time_stop': must exceed time_start, got {stop}")
    steps = _get_int(params, "time_steps", default=default_steps, minimum=1)
    return np.linspace(start, stop, steps + 1)


# ---------------------------------------------------------------- output ----

def _pyify(obj):
    """Recursively convert numpy scalars/arrays so json can serialize."""
    if isinstance(obj, dict):
        return {k: _pyify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_pyify(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_pyify(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


def _write_csv(path, header, rows):
    """Comma-separated with LF endings; floats in shortest round-trip form."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])


def _cell(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _json_value(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(value)


def _write_json(path, document):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(_pyify(document), fh, indent=2)
        fh.write("\n")


def _stem(out_path: str) -> str:
    for ext in (".csv", ".json"):
        if out_path.endswith(ext):
            return out_path[: -len(ext)]
    return out_path


def _emit(out_path, fmt, summary, header, rows, tables, renderer, plots):
    """Write the data file, summary, auxiliary tables, and figures.

    csv format: data at out_path, summary at <stem>.summary.json, one CSV
    per auxiliary table.  json format: a single document embedding the data
    and tables under the summary.
    """
    stem = _stem(out_path)
    files = [out_path]
    if fmt == "csv":
        _write_csv(out_path, header, rows)
        for name, (theader, trows) in tables.items():
            tpath = f"{stem}_{name}.csv"
            _write_csv(tpath, theader, trows)
            files.append(tpath)
        summary_path = f"{stem}.summary.json"
        files.append(summary_path)
        if plots:
            files.extend(renderer(stem))
        summary["files"] = files
        _write_json(summary_path, summary)
    else:
        if plots:
            files.extend(renderer(stem))
        document = dict(summary)
        document["data"] = {"columns": list(header),
                            "rows": [[_json_value(v) for v in r]
                                     for r in rows]}
        document["tables"] = {
            name: {"columns": list(theader),
                   "rows": [[_json_value(v) for v in r] for r in trows]}
            for name, (theader, trows) in tables.items()}
        document["files"] = files
        _write_json(out_path, document)
    return files


def _report(summary, files):
    print(f"mode: {summary['mode']}  [{UNITS}]")
    for name, value in summary["derived"].items():
        if isinstance(value, (int, float)):
            print(f"  derived {name} = {_cell(value)}")
    for name, value in summary["checks"].items():
        if isinstance(value, dict):
            status = "PASS" if value["pass"] else "FAIL"
            print(f"  {status} {name}: error {value['error']:.3e} "
                  f"(tolerance {value['tolerance']:.1e})")
        else:
            print(f"  check {name} = {value:.6e}")
    for path in files:
        print(f"wrote {path}")


# ---------------------------------------------------------- deuteron mode ----

def run_deuteron(params, out_path, fmt, plots):
    _check_keys("deuteron", params)
    omega = _get_float(params, "omega", positive=True)
    field = _get_float(params, "field")
    k_com = _get_float_list(params, "k_com", default=(0.0, 0.0, 0.0),
                            length=3)
    dp = DeuteronParams(omega=omega, field=field, k_com=tuple(k_com))
    period = systems.oscillation_period(dp)
    times = _resolve_times(params, default_stop=2.0 * period)

    amplitude = math.sqrt(2.0) * field / omega ** 2
    centers = np.array([systems.density_center(dp, t) for t in times])
    peak = systems.peak_density(dp)
    peaks = np.full_like(centers, peak)

    norms = np.ones_like(centers)
    center_err = 0.0
    peak_err = 0.0
    for i, t in enumerate(times):
        if t == 0.0 or abs(math.sin(omega * t)) <= CAUSTIC_EPS:
            continue  # closed form continues through the focal times
        state = systems.evolve_ground_state(dp, t)
        norms[i] = state.norm()
        center_err = max(center_err,
                         abs(state.relative_z.center - centers[i]))
        peak_here = float(state.relative_density_values(0.0, 0.0,
                                                        centers[i]))
        peak_err = max(peak_err, abs(peak_here - peak) / peak)

    slice_times = _get_float_list(params, "slice_times", default=None)
    default_slices = [0.0, 0.25 * period, 0.5 * period]
    snap_times = slice_times if slice_times is not None else default_slices
    half = _get_float(params, "slice_z_half_width",
                      default=4.0 / math.sqrt(omega) + abs(amplitude),
                      positive=True)
    z_points = _get_int(params, "slice_z_points", default=401, minimum=2)
    z_grid = np.linspace(-half, half, z_points)
    snap_rows = [systems.relative_density(dp, 0.0, 0.0, z_grid, t)
                 for t in snap_times]

    summary = {
        "mode": "deuteron",
        "units": UNITS,
        "params": {"omega": omega, "field": field, "k_com": list(k_com)},
        "derived": {"period": period, "amplitude": amplitude,
                    "peak_density": peak},
        "checks": {
            "center_kernel_vs_closed_max_abs_error": center_err,
            "peak_density_kernel_max_rel_error": peak_err,
            "norm_max_abs_error": float(np.max(np.abs(norms - 1.0))),
        },
    }
    rows = list(zip(times, centers, peaks, norms))
    tables = {}
    if slice_times is not None:
        srows = [(t, z, d) for t, drow in zip(snap_times, snap_rows)
                 for z, d in zip(z_grid, drow)]
        tables["slices"] = (["t", "z", "density"], srows)

    def renderer(stem):
        return save_deuteron_plots(stem, times, centers, snap_times, z_grid,
                                   snap_rows, amplitude, period)

    files = _emit(out_path, fmt, summary, ["t", "center", "peak_density",
                                           "norm"], rows, tables, renderer,
                  plots)
    _report(summary, files)
    return 0


# ------------------------------------------------------- diffraction mode ----

def run_diffraction(params, out_path, fmt, plots):
    _check_keys("diffraction", params)
    k = _get_float(params, "wave_number", positive=True)
    t = _get_float(params, "time", positive=True)
    query = ShutterQuery(wave_number=k, time=t)
    front = diffraction.wavefront_position(query)
    x_start = _get_float(params, "x_start", default=0.0)
    x_stop = _get_float(params, "x_stop", default=2.0 * front)
    if x_stop <= x_start:
        raise ConfigError(f"key 'x_stop': must exceed x_start, got {x_stop}")
    x_points = _get_int(params, "x_points", default=801, minimum=2)
    xs = np.linspace(x_start, x_stop, x_points)
    u0s = diffraction.u0(query, xs)
    dens = shutter_density(query, xs)

    u_max = _get_float(params, "cornu_u_max", default=5.0, positive=True)
    n_cornu = _get_int(params, "cornu_points", default=1001, minimum=2)
    cu, cc, cs = cornu_spiral(-u_max, u_max, n_cornu)

    def x_at(u0):
        return front - u0 * math.sqrt(math.pi * t)

    quarter = abs(float(shutter_density(query, x_at(0.0))) - 0.25)
    shadow = float(shutter_density(query, x_at(-20.0)))
    ring = np.linspace(-1.0 / 20.0, 1.0 / 20.0, 65)  # one fringe at u0 = 20
    plateau = float(np.mean(
        [shutter_density(query, x_at(20.0 + r)) for r in ring]))

    summary = {
        "mode": "diffraction",
        "units": UNITS,
        "params": {"wave_number": k, "time": t},
        "derived": {"wavefront": front},
        "checks": {
            "quarter_point_abs_error": quarter,
            "shadow_density_at_u0_minus_20": shadow,
            "plateau_fringe_mean_abs_error": abs(plateau - 1.0),
        },
    }
    rows = list(zip(xs, u0s, dens))
    tables = {"cornu": (["u", "C", "S"], list(zip(cu, cc, cs)))}

    def renderer(stem):
        return save_diffraction_plots(stem, xs, dens, front, cc, cs)

    files = _emit(out_path, fmt, summary, ["x", "u0", "density"], rows,
                  tables, renderer, plots)
    _report(summary, files)
    return 0


# ---------------------------------------------------------- spectral mode ----

def _spectral_basis(params):
    kind = _get_choice(params, "basis", {"oscillator", "box"}, "oscillator")
    size = _get_int(params, "size", default=60, minimum=1)
    if kind == "oscillator":
        omega = _get_float(params, "omega", positive=True)
        return spectral.oscillator_basis(omega, size)
    box_length = _get_float(params, "box_length", positive=True)
    return spectral.box_basis(box_length, size)


def _spectral_grid(params, basis):
    n_default = 8 * basis.size + 1
    if basis.kind == "box":
        points = _get_int(params, "grid_points", default=n_default, minimum=2)
        return Grid1D(0.0, basis.box_length, points)
    if "grid_half_width" in params:
        half = _get_float(params, "grid_half_width", positive=True)
        points = _get_int(params, "grid_points", default=n_default, minimum=2)
        return Grid1D(-half, half, points)
    if "grid_points" in params:
        default = spectral.default_oscillator_grid(basis.omega, basis.size)
        points = _get_int(params, "grid_points", default=n_default, minimum=2)
        return Grid1D(default.x_min, default.x_max, points)
    return spectral.default_oscillator_grid(basis.omega, basis.size)


def run_spectral(params, out_path, fmt, plots):
    _check_keys("spectral", params)
    basis = _spectral_basis(params)
    coupling = _get_float(params, "coupling")
    nu = _get_int(params, "initial_index", default=0, minimum=0)
    if nu >= basis.size:
        raise ConfigError(
            f"key 'initial_index': must be < size, got {nu}")
    grid = _spectral_grid(params, basis)
    pert = spectral.PerturbationSpec(delta_v=lambda x: coupling * x,
                                     grid=grid)
    sol = spectral.solve_quench(basis, pert, nu)

    if basis.kind == "oscillator":
        default_stop = 4.0 * math.pi / basis.omega
    else:
        default_stop = 10.0
    times = _resolve_times(params, default_stop=default_stop,
                           default_steps=160)

    survival = np.empty(times.size)
    expect_x = np.empty(times.size)
    norms = np.empty(times.size)
    energies = np.empty(times.size)
    xmat = spectral.position_matrix(basis)
    for i, t in enumerate(times):
        coeffs = spectral.coefficients_at(sol, t)
        survival[i] = abs(spectral.survival_amplitude(sol, t)) ** 2
        expect_x[i] = float(np.real(np.conj(coeffs) @ (xmat @ coeffs)))
        norms[i] = float(np.vdot(coeffs, coeffs).real)
        energies[i] = spectral.expectation_energy(sol, t)

    n_report = min(basis.size, 12)
    checks = {
        "norm_max_abs_error": float(np.max(np.abs(norms - 1.0))),
        "energy_drift_max_abs_error":
            float(np.max(np.abs(energies - energies[0]))),
        "survival_at_zero_abs_error":
            abs(float(spectral.survival_probability(sol, 0.0)) - 1.0),
    }
    derived = {"eigenvalues": [float(v) for v in sol.eigenvalues[:n_report]]}

    conv_sizes = conv_errors = None
    if basis.kind == "oscillator":
        omega = basis.omega
        exact = [(n + 0.5) * omega - coupling ** 2 / (2.0 * omega ** 2)
                 for n in range(min(11, basis.size))]
        checks["eigenvalue_closed_form_max_abs_error"] = float(max(
            abs(sol.eigenvalues[n] - exact[n]) for n in range(len(exact))))

        def closed_center(t):
            return -(coupling / omega ** 2) * (1.0 - math.cos(omega * t))

        conv_sizes = _get_int_list(params, "convergence_sizes",
                                   default=(10, 20, 40, 80))
        conv_errors = []
        for size in conv_sizes:
            cb = spectral.oscillator_basis(omega, size)
            cp = spectral.PerturbationSpec(
                delta_v=lambda x: coupling * x,
                grid=spectral.default_oscillator_grid(omega, size))
            csol = spectral.solve_quench(cb, cp, min(nu, size - 1))
            err = max(abs(spectral.expectation_position(csol, cb, t)
                          - closed_center(t)) for t in times)
            conv_errors.append(float(err))
        derived["convergence"] = {"sizes": conv_sizes,
                                  "max_abs_errors": conv_errors}
    elif "convergence_sizes" in params:
        raise ConfigError(
            "key 'convergence_sizes': the convergence study needs the "
            "oscillator basis (no closed form for the box)")

    summary = {
        "mode": "spectral",
        "units": UNITS,
        "params": {"basis": basis.kind, "size": basis.size,
                   "coupling": coupling, "initial_index": nu,
                   **({"omega": basis.omega} if basis.kind == "oscillator"
                      else {"box_length": basis.box_length})},
        "derived": derived,
        "checks": checks,
    }
    rows = list(zip(times, survival, expect_x, norms, energies))
    tables = {}
    if conv_sizes is not None:
        tables["convergence"] = (["size", "max_abs_error"],
                                 list(zip(conv_sizes, conv_errors)))

    def renderer(stem):
        return save_spectral_plots(stem, times, survival, expect_x,
                                   conv_sizes, conv_errors)

    files = _emit(out_path, fmt, summary,
                  ["t", "survival", "expect_x", "norm", "energy"], rows,
                  tables, renderer, plots)
    _report(summary, files)
    return 0


# ------------------------------------------------------ kernels-check mode ----

def _coeff_distance(k1, k2, relative=False):
    pairs = [(k1.prefactor, k2.prefactor), (k1.a, k2.a), (k1.b, k2.b),
             (k1.c, k2.c), (k1.d, k2.d), (k1.e, k2.e), (k1.f, k2.f)]
    if relative:
        return max(abs(x - y) / max(1.0, abs(y)) for x, y in pairs)
    return max(abs(x - y) for x, y in pairs)


def kernel_invariant_suite(omega=1.0, seed=7):
    """The property suite behind `quench kernels-check`.

    Returns a list of (name, measured_error, tolerance) covering semigroup
    composition, unitarity in closed form and on a grid, the Fresnel
    derivative identity, eigensolver reconstruction, the small-omega kernel
    limits, the short-time delta limit, and closed-form vs grid propagation.
    """
    rng = np.random.default_rng(seed)
    packet = GaussianState(amplitude=1.0, gamma=0.5 + 0.2j, mu=0.4 - 0.3j)
    results = []

    err = 0.0
    for build in (lambda t: free_kernel(t),
                  lambda t: oscillator_kernel(omega, t),
                  lambda t: linear_kernel(0.3, t),
                  lambda t: driven_oscillator_kernel(omega, 0.3, t)):
        for t1, t2 in ((0.4, 0.9), (1.3, 2.6), (0.7, 3.9)):
            err = max(err, _coeff_distance(
                compose_kernels(build(t2), build(t1)), build(t1 + t2)))
    results.append(("semigroup_composition", err, 1e-10))

    err = 0.0
    norm0 = packet.norm()
    for kern in (free_kernel(0.8), oscillator_kernel(omega, 1.1),
                 driven_oscillator_kernel(omega, 0.4, 2.3)):
        err = max(err, abs(apply_kernel_to_gaussian(kern, packet).norm()
                           - norm0))
    results.append(("unitarity_closed_form", err, 1e-9))

    grid = Grid1D(-24.0, 24.0, 2001)
    xs = grid.points()
    kern = free_kernel(0.8)
    kmat = kern.evaluate(xs[:, None], xs[None, :])
    evolved = apply_kernel_to_gaussian(kern, packet)
    numeric = apply_kernel_numeric(kmat, packet.evaluate(xs), grid)
    w = grid.trapezoid_weights()
    grid_norm = math.sqrt(float(np.sum(w * np.abs(numeric) ** 2)))
    results.append(("unitarity_on_grid", abs(grid_norm - norm0), 1e-8))

    closed = evolved.evaluate(xs)
    interior = np.abs(xs) <= 0.8 * grid.x_max
    results.append(("grid_oracle_equivalence",
                    float(np.max(np.abs(numeric - closed)[interior])), 1e-6))

    # h = 1e-6 balances the h^2 |C'''| / 6 ~ (pi u h)^2 truncation term
    # against roundoff; 1e-5 already breaches 1e-8 by |u| = 30.
    us = np.concatenate([np.linspace(-8.0, 8.0, 41), [-30.0, 15.0, 30.0]])
    h = 1e-6
    err = 0.0
    for u in us:
        cp, sp = fresnel(u + h)
        cm, sm = fresnel(u - h)
        arg = 0.5 * math.pi * u * u
        err = max(err, abs((cp - cm) / (2 * h) - math.cos(arg)),
                  abs((sp - sm) / (2 * h) - math.sin(arg)))
    results.append(("fresnel_derivative", err, 1e-8))

    raw = rng.standard_normal((40, 40))
    sym = SymmetricMatrix(raw + raw.T)
    values, vectors = eigensolve_symmetric(sym)
    recon = vectors @ np.diag(values) @ vectors.T
    rel = float(np.max(np.abs(recon - sym.array))
                / np.max(np.abs(sym.array)))
    results.append(("eigensolver_reconstruction", rel, 1e-10))

    results.append(("small_omega_free_limit",
                    _coeff_distance(oscillator_kernel(1e-4, 1.0),
                                    free_kernel(1.0), relative=True), 1e-6))
    results.append(("small_omega_linear_limit",
                    _coeff_distance(driven_oscillator_kernel(1e-4, 0.3, 1.0),
                                    linear_kernel(0.3, 1.0), relative=True),
                    1e-6))

    width_one = GaussianState(amplitude=(2.0 * math.pi) ** -0.25, gamma=0.25)
    short = apply_kernel_to_gaussian(free_kernel(1e-6), width_one)
    span = np.linspace(-5.0, 5.0, 401)
    delta_err = float(np.max(np.abs(short.evaluate(span)
                                    - width_one.evaluate(span))))
    results.append(("delta_limit", delta_err, 1e-4))
    return results


def run_kernels_check(params, out_path, fmt, plots):
    _check_keys("kernels-check", params)
    omega = _get_float(params, "omega", default=1.0, positive=True)
    seed = _get_int(params, "seed", default=7, minimum=0)
    results = kernel_invariant_suite(omega=omega, seed=seed)

    checks = {name: {"error": err, "tolerance": tol, "pass": err <= tol}
              for name, err, tol in results}
    all_pass = all(entry["pass"] for entry in checks.values())
    summary = {
        "mode": "kernels-check",
        "units": UNITS,
        "params": {"omega": omega, "seed": seed},
        "derived": {"oscillator_period": 2.0 * math.pi / omega},
        "checks": checks,
    }
    rows = [(name, err, tol, "PASS" if err <= tol else "FAIL")
            for name, err, tol in results]

    def renderer(stem):
        return []

    files = _emit(out_path, fmt, summary,
                  ["check", "error", "tolerance", "status"], rows, {},
                  renderer, plots)
    _report(summary, files)
    return 0 if all_pass else 3


# ------------------------------------------------------------- dispatch ----

_RUNNERS = {
    "deuteron": run_deuteron,
    "diffraction": run_diffraction,
    "spectral": run_spectral,
    "kernels-check": run_kernels_check,
}


def run_mode(mode, config_path, out_path=None, fmt="csv", plots=True):
    params = read_config(config_path)
    if out_path is None:
        ext = "csv" if fmt == "csv" else "json"
        out_path = f"quench_{mode.replace('-', '_')}.{ext}"
    return _RUNNERS[mode](params, out_path, fmt, plots)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="quench",
        description="Transient dynamics of suddenly perturbed bound states.")
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in _RUNNERS:
        mp = sub.add_parser(mode, help=f"run the {mode} scenario")
        mp.add_argument("--config", required=True,
                        help="flat key = value config file")
        mp.add_argument("--out", default=None,
                        help="output data file (default quench_<mode>.<ext>)")
        mp.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="data file format (default csv)")
        mp.add_argument("--no-plots", action="store_true",
                        help="skip PNG figure rendering")
    args = parser.parse_args(argv)
    try:
        return run_mode(args.mode, args.config, args.out, args.format,
                        not args.no_plots)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ConvergenceError) as exc:
        print(f"numerical-domain error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
