"""Chord-based energy functionals on discrete closed curves.

Everything here is a uniform double Riemann sum over the parameter grid
t_i = 2*pi*i/N with weight (2*pi/N)^2, diagonal excluded where the
integrand is singular.  The circle reference values come from adaptive
quadrature of the corresponding closed-form integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate, special

from .errors import (
    DegenerateCurveError,
    KernelSingularityError,
    ParameterDomainError,
)
from .geometry import (
    TWO_PI,
    PolyCurve,
    arc_matrix,
    chord_matrix,
    lambda_chord,
    squared_chord_matrix,
)

#: distinguished return value for the distortion of non-embedded curves
INFINITE_DISTORTION = math.inf

#: two distinct parameters mapping within this distance are "coincident"
COINCIDENCE_TOL = 1e-12


@dataclass(frozen=True)
class EnergyParams:
    """Exponent pair (j, p) of the chord/arc energy integrand
    (chord^-j - arc^-j)^p."""

    j: float
    p: float

    def convergent(self) -> bool:
        """The double integral converges iff j < 2 + 1/p."""
        return 0 < self.j < 2.0 + 1.0 / self.p

    def theorem_applies(self) -> bool:
        """Circle minimality is proved for convergent params with p >= 1."""
        return self.convergent() and self.p >= 1

    def require_convergent(self) -> None:
        if not self.convergent():
            raise ParameterDomainError(
                f"(j={self.j}, p={self.p}) outside the convergence region "
                "0 < j < 2 + 1/p")


@dataclass
class ChordKernel:
    """Evaluation rule F(chord, arc) for a renormalization energy.

    The flags describe F(sqrt(x), y) as a function of x; they are
    caller-asserted metadata.  validate() spot-checks them on a sample
    grid and raises ValueError on a violation.
    """

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    decreasing: bool | None = None
    convex: bool | None = None
    name: str = field(default="kernel")

    def __call__(self, x, y):
        return self.fn(x, y)

    def validate(self, n_x: int = 64, n_y: int = 16) -> None:
        ys = np.linspace(0.2, np.pi - 0.2, n_y)
        for y in ys:
            xs = np.linspace(1e-3 * y**2, y**2 * (1 - 1e-6), n_x)
            vals = np.asarray([float(self.fn(math.sqrt(x), y)) for x in xs])
            dv = np.diff(vals)
            if self.decreasing and np.any(dv > 1e-9 * max(1, np.abs(vals).max())):
                raise ValueError(
                    f"{self.name}: declared decreasing in squared chord "
                    f"but increases at y={y:.3f}")
            d2 = np.diff(vals, 2)
            if self.convex and np.any(d2 < -1e-7 * max(1, np.abs(vals).max())):
                raise ValueError(
                    f"{self.name}: declared convex in squared chord "
                    f"but is concave at y={y:.3f}")


def _check_embedded(dist: np.ndarray) -> None:
    off = dist + np.eye(dist.shape[0]) * 10.0
    if off.min() < COINCIDENCE_TOL:
        i, k = np.unravel_index(np.argmin(off), off.shape)
        raise DegenerateCurveError(
            f"coincident vertices at distinct parameters ({i}, {k})")


def energy_Ejp(curve: PolyCurve, params: EnergyParams) -> float:
    """Discrete chord/arc energy sum (2pi/N)^2 sum_{i!=k}
    (chord^-j - arc^-j)^p."""
    params.require_convergent()
    dist = chord_matrix(curve)
    _check_embedded(dist)
    arc = arc_matrix(curve)
    n = curve.n
    mask = ~np.eye(n, dtype=bool)
    integrand = dist[mask] ** -params.j - arc[mask] ** -params.j
    # chord <= arc, so the integrand is nonnegative up to round-off;
    # clip keeps fractional powers real at the adjacent-edge zeros
    integrand = np.maximum(integrand, 0.0)
    return float((TWO_PI / n) ** 2 * np.sum(integrand ** params.p))


def renorm_energy(curve: PolyCurve, kernel: ChordKernel) -> float:
    """Double Riemann sum of F(chord, arc) excluding the diagonal."""
    dist = chord_matrix(curve)
    arc = arc_matrix(curve)
    n = curve.n
    mask = ~np.eye(n, dtype=bool)
    vals = np.asarray(kernel(dist[mask], arc[mask]), dtype=float)
    bad = ~np.isfinite(vals)
    if bad.any():
        flat = np.zeros((n, n))
        flat[mask] = bad
        i, k = np.unravel_index(np.argmax(flat), flat.shape)
        raise KernelSingularityError(i, k, float("nan"))
    return float((TWO_PI / n) ** 2 * vals.sum())


def _bound_integrand(s: np.ndarray, j: float, p: float) -> np.ndarray:
    return (np.sin(s) ** -j - s ** -j) ** p


def circle_bound(params: EnergyParams, series_cut: float = 1e-4) -> float:
    """Sharp circle value 2^(3-jp) pi * int_0^(pi/2) (csc^j s - s^-j)^p ds.

    Below series_cut the integrand is replaced by its leading behavior
    (j/6)^p * s^((2-j)p), integrated in closed form; adaptive quadrature
    covers the rest.  Absolute tolerance 1e-9.
    """
    params.require_convergent()
    j, p = params.j, params.p
    expo = (2.0 - j) * p
    # leading term of (csc^j - s^-j)^p as s -> 0
    head = (j / 6.0) ** p * series_cut ** (expo + 1) / (expo + 1)
    tail, _ = integrate.quad(
        _bound_integrand, series_cut, np.pi / 2, args=(j, p),
        epsabs=1e-12, epsrel=1e-12, limit=200)
    return float(2.0 ** (3.0 - j * p) * np.pi * (head + tail))


def avg_chord_p(curve: PolyCurve, p: float) -> float:
    """L^p mean of the chord length over all parameter pairs,
    ((1/N^2) sum |c_i - c_k|^p)^(1/p); the diagonal contributes zero."""
    if p <= 0:
        raise ParameterDomainError(f"need p > 0, got {p}")
    d2 = squared_chord_matrix(curve.vertices)
    return float(np.mean(d2 ** (p / 2.0)) ** (1.0 / p))


def circle_avg_chord(p: float) -> float:
    """Closed form A_p of the unit circle:
    ((2^p/pi) * int_0^pi sin^p u du)^(1/p), via the Beta integral."""
    if p <= 0:
        raise ParameterDomainError(f"need p > 0, got {p}")
    integral = math.sqrt(math.pi) * special.gamma((p + 1) / 2) \
        / special.gamma(p / 2 + 1)
    return float(((2.0 ** p / math.pi) * integral) ** (1.0 / p))


def segment_avg_chord(p: float) -> float:
    """Closed form A_p of the doubly covered segment of length pi:
    (2 pi^p / ((p+1)(p+2)))^(1/p), the mean of |x-y|^p on [0, pi]^2."""
    if p <= 0:
        raise ParameterDomainError(f"need p > 0, got {p}")
    return float((2.0 * math.pi ** p / ((p + 1) * (p + 2))) ** (1.0 / p))


def distortion_at(curve: PolyCurve, k: int) -> float:
    """Worst arc/chord ratio at grid separation k (arclength 2*pi*k/N).

    Returns the infinity sentinel when some chord vanishes at positive
    arc distance (non-embedded curve)."""
    n = curve.n
    k = k % n
    if k == 0:
        return 0.0
    arc = arc_distance_scalar(n, k)
    chords = np.linalg.norm(
        np.roll(curve.vertices, -k, axis=0) - curve.vertices, axis=1)
    cmin = chords.min()
    if cmin < COINCIDENCE_TOL:
        return INFINITE_DISTORTION
    return float(arc / cmin)


def arc_distance_scalar(n: int, k: int) -> float:
    s = (k % n) * (TWO_PI / n)
    return min(s, TWO_PI - s)


def distortion(curve: PolyCurve) -> float:
    """Gromov distortion over the grid: max over separations k in
    [1, N/2] of the worst arc/chord ratio."""
    n = curve.n
    best = 0.0
    for k in range(1, n // 2 + 1):
        d = distortion_at(curve, k)
        if d == INFINITE_DISTORTION:
            return INFINITE_DISTORTION
        best = max(best, d)
    return best


def chord_average(curve: PolyCurve, k: int,
                 f: Callable[[np.ndarray], np.ndarray]) -> float:
    """Mean of f(squared chord) at grid separation k:
    (1/N) sum_i f(|c_{i+k} - c_i|^2)."""
    chords = np.roll(curve.vertices, -(k % curve.n), axis=0) - curve.vertices
    sq = np.sum(chords ** 2, axis=1)
    return float(np.mean(f(sq)))
