"""Diffraction in time: sudden opening of a shutter in front of a
monoenergetic beam.

A plane wave exp(i k x) fills x < 0; at t = 0 the shutter at the origin
opens and the beam propagates freely.  The transmitted amplitude is a free
propagation of the half-line wave train,

    M(x, k, t) = e^{-i pi/4} / sqrt2 * e^{i(k x - k^2 t/2)}
                 * {[1/2 + C(u0)] + i [1/2 + S(u0)]}

with the moving similarity variable u0 = (pi t)^(-1/2) (k t - x) and the
Fresnel integrals C, S.  The density

    |M|^2 = 1/2 {[1/2 + C(u0)]^2 + [1/2 + S(u0)]^2}

is normalized so that the classical limit deep behind the wavefront is 1;
transcriptions that drop the 1/2 tend to 2 instead.  On the wavefront
x = k t the density is exactly 1/4, and ahead of it the transient decays
to 0: the time analogue of Fresnel edge diffraction, with |M|^2 tracing
distances to the Cornu spiral eye.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numerics import fresnel

__all__ = [
    "ShutterQuery",
    "u0",
    "shutter_amplitude",
    "shutter_density",
    "wavefront_position",
    "cornu_spiral",
]


@dataclass(frozen=True)
class ShutterQuery:
    """Beam wave number and elapsed time since the shutter opened."""

    wave_number: float
    time: float

    def __post_init__(self):
        if not (math.isfinite(self.wave_number) and self.wave_number > 0.0):
            raise DomainError(
                f"shutter beam requires wave_number > 0, got {self.wave_number}")
        if not (math.isfinite(self.time) and self.time > 0.0):
            raise DomainError(f"shutter requires time > 0, got {self.time}")


def u0(query: ShutterQuery, x):
    """Similarity variable (pi t)^(-1/2) (k t - x); positive behind the
    classical wavefront, zero on it, negative ahead of it."""
    x = np.asarray(x, dtype=float)
    return (query.wave_number * query.time - x) / math.sqrt(
        math.pi * query.time)


def wavefront_position(query: ShutterQuery) -> float:
    """Classical wavefront x = k t, where u0 vanishes."""
    return query.wave_number * query.time


def _fresnel_terms(u):
    u = np.atleast_1d(np.asarray(u, dtype=float))
    c = np.empty(u.shape)
    s = np.empty(u.shape)
    for i, ui in enumerate(u.ravel()):
        ci, si = fresnel(ui)
        c.ravel()[i] = 0.5 + ci
        s.ravel()[i] = 0.5 + si
    return c, s


def shutter_amplitude(query: ShutterQuery, x):
    """Transmitted amplitude M(x, k, t); x may be a scalar or an array."""
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    c, s = _fresnel_terms(u0(query, xs))
    k = query.wave_number
    carrier = np.exp(1j * (k * xs - 0.5 * k * k * query.time))
    vals = cmath.exp(-0.25j * math.pi) / math.sqrt(2.0) * carrier * (c + 1j * s)
    return vals[0] if scalar else vals


def shutter_density(query: ShutterQuery, x):
    """Transmitted density 1/2 {[1/2 + C(u0)]^2 + [1/2 + S(u0)]^2}."""
    scalar = np.isscalar(x) or np.asarray(x).ndim == 0
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    c, s = _fresnel_terms(u0(query, xs))
    vals = 0.5 * (c * c + s * s)
    return float(vals[0]) if scalar else vals


def cornu_spiral(u_min: float, u_max: float,
                 n_points: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sample the Cornu spiral (C(u), S(u)) on n_points uniform u values.

    Returns
    -------
    (u, C, S) : three ndarrays of length n_points.
    """
    if not (math.isfinite(u_min) and math.isfinite(u_max) and u_min < u_max):
        raise DomainError("cornu spiral requires finite u_min < u_max")
    if n_points < 2:
        raise DomainError("cornu spiral requires at least 2 points")
    u = np.linspace(u_min, u_max, n_points)
    c = np.empty(n_points)
    s = np.empty(n_points)
    for i, ui in enumerate(u):
        c[i], s[i] = fresnel(ui)
    return u, c, s
