"""Discrete closed curves with the unit-speed normalization.

A curve is stored as N vertices in R^2 or R^3, cyclically closed, with
vertex i sitting at the uniform parameter value t_i = 2*pi*i/N.  All
constructors return curves whose edges are equal in length (relative
spread below EDGE_SPREAD_TOL) and whose perimeter is exactly renormalized
to 2*pi, so integrals over the curve become uniform Riemann sums with
weight 2*pi/N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCurveError, InvalidDiscretizationError

TWO_PI = 2.0 * np.pi

#: minimum vertex count for a meaningful closed polygon
MIN_VERTICES = 8

#: relative tolerance on the perimeter after normalization
PERIMETER_TOL = 1e-9

#: relative tolerance on edge-length spread (discrete unit speed)
EDGE_SPREAD_TOL = 1e-6


@dataclass(frozen=True)
class PolyCurve:
    """Closed polygon approximating a unit-speed curve of length 2*pi.

    vertices has shape (n, dim) with dim 2 or 3; row i is the point at
    parameter 2*pi*i/n.  Indexing is cyclic: vertex(i) == vertex(i + n).
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        object.__setattr__(self, "vertices", v)
        if v.ndim != 2 or v.shape[1] not in (2, 3):
            raise InvalidDiscretizationError(
                f"vertices must have shape (n, 2) or (n, 3), got {v.shape}"
            )
        if v.shape[0] < MIN_VERTICES:
            raise InvalidDiscretizationError(
                f"need at least {MIN_VERTICES} vertices, got {v.shape[0]}"
            )

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    def vertex(self, i: int) -> np.ndarray:
        return self.vertices[i % self.n]

    def edges(self) -> np.ndarray:
        """Edge vectors, edge i running from vertex i to vertex i+1."""
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    def edge_lengths(self) -> np.ndarray:
        return np.linalg.norm(self.edges(), axis=1)

    def perimeter(self) -> float:
        return float(self.edge_lengths().sum())

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def validate(self) -> None:
        """Raise InvalidDiscretizationError if the unit-speed invariants fail."""
        lengths = self.edge_lengths()
        perim = lengths.sum()
        if abs(perim - TWO_PI) > PERIMETER_TOL * TWO_PI:
            raise InvalidDiscretizationError(
                f"perimeter {perim} differs from 2*pi beyond tolerance"
            )
        mean = perim / self.n
        spread = (lengths.max() - lengths.min()) / mean
        if spread > EDGE_SPREAD_TOL:
            raise InvalidDiscretizationError(
                f"edge-length relative spread {spread:.3e} exceeds {EDGE_SPREAD_TOL}"
            )


def chord(curve: PolyCurve, i: int, k: int) -> float:
    """Straight-line distance between vertices i and i+k."""
    return float(np.linalg.norm(curve.vertex(i + k) - curve.vertex(i)))


def arc_distance(curve: PolyCurve, i: int, k: int) -> float:
    """Shorter distance along the curve between vertices i and i+k.

    Always in [0, pi] since the curve has length 2*pi.
    """
    step = TWO_PI / curve.n
    s = (k % curve.n) * step
    return float(min(s, TWO_PI - s))


def lambda_chord(s):
    """Chord length subtended by arclength s on the unit circle: 2 sin(s/2)."""
    return 2.0 * np.sin(np.asarray(s) / 2.0)


def squared_chord_matrix(vertices: np.ndarray) -> np.ndarray:
    """Pairwise squared distances of a vertex array via the Gram matrix."""
    sq = np.einsum("id,id->i", vertices, vertices)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (vertices @ vertices.T)
    return np.maximum(d2, 0.0)


def chord_matrix(curve: PolyCurve) -> np.ndarray:
    """All pairwise vertex distances as an (n, n) array."""
    return np.sqrt(squared_chord_matrix(curve.vertices))


def arc_matrix(curve: PolyCurve) -> np.ndarray:
    """Pairwise arc distances; entry (i, j) depends only on (j - i) mod n."""
    n = curve.n
    k = np.abs(np.arange(n)[None, :] - np.arange(n)[:, None])
    s = np.minimum(k, n - k) * (TWO_PI / n)
    return s


def _equalize_and_scale(points: np.ndarray, m: int, max_iter: int = 60,
                        tol: float = 1e-12) -> np.ndarray:
    """Resample a closed polyline to m vertices at equal arclength spacing,
    iterating until the edge spread converges, then scale to perimeter 2*pi.

    Equalize first, scale second: scaling preserves edge equality.
    """
    pts = np.asarray(points, dtype=float)
    for _ in range(max_iter):
        closed = np.vstack([pts, pts[:1]])
        seg = np.linalg.norm(np.diff(closed, axis=0), axis=1)
        total = seg.sum()
        if total < 1e-6:
            raise DegenerateCurveError("curve perimeter collapsed below 1e-6")
        cum = np.concatenate([[0.0], np.cumsum(seg)])
        targets = np.arange(m) * (total / m)
        new = np.empty((m, pts.shape[1]))
        for d in range(pts.shape[1]):
            new[:, d] = np.interp(targets, cum, closed[:, d])
        lengths = np.linalg.norm(
            np.diff(np.vstack([new, new[:1]]), axis=0), axis=1)
        mean = lengths.mean()
        pts = new
        if (lengths.max() - lengths.min()) / mean < tol:
            break
    perim = np.linalg.norm(
        np.diff(np.vstack([pts, pts[:1]]), axis=0), axis=1).sum()
    return pts * (TWO_PI / perim)


def resample_arclength(curve: PolyCurve, m: int) -> PolyCurve:
    """Redistribute m vertices at equal arclength along the polygonal trace.

    Idempotent at fixed m: an already equal-edge curve maps to itself.
    """
    if m < MIN_VERTICES:
        raise InvalidDiscretizationError(f"need m >= {MIN_VERTICES}, got {m}")
    return PolyCurve(_equalize_and_scale(curve.vertices, m))


def make_circle(n: int) -> PolyCurve:
    """Regular n-gon with perimeter exactly 2*pi, centered at the origin.

    The circumradius is (pi/n)/sin(pi/n), slightly above 1, so that the
    inscribed polygon has the full length of the unit circle.
    """
    if n < MIN_VERTICES:
        raise InvalidDiscretizationError(f"need n >= {MIN_VERTICES}, got {n}")
    r = (np.pi / n) / np.sin(np.pi / n)
    t = TWO_PI * np.arange(n) / n
    return PolyCurve(r * np.column_stack([np.cos(t), np.sin(t)]))


def make_ellipse(axis_ratio: float, n: int) -> PolyCurve:
    """Ellipse with semi-axis ratio axis_ratio, resampled to equal edges.

    The result is the unit-speed (equal-edge) reparameterization of the
    elliptical trace, which for axis_ratio > 1 is not the same mapping as
    the uniform-parameter ellipse.
    """
    if axis_ratio < 1:
        raise InvalidDiscretizationError(
            f"axis_ratio must be >= 1, got {axis_ratio}")
    dense = max(64 * n, 4096)
    t = TWO_PI * np.arange(dense) / dense
    pts = np.column_stack([axis_ratio * np.cos(t), np.sin(t)])
    return PolyCurve(_equalize_and_scale(pts, n))


def make_double_segment(n: int) -> PolyCurve:
    """Degenerate closed curve traversing a segment of length pi twice.

    Runs 0 -> pi -> 0 along the x-axis with n equal steps of 2*pi/n.
    Non-embedded by design: parameters t and 2*pi - t coincide in space.
    """
    if n < MIN_VERTICES:
        raise InvalidDiscretizationError(f"need n >= {MIN_VERTICES}, got {n}")
    if n % 2 != 0:
        raise InvalidDiscretizationError(
            f"double segment needs even n, got {n}")
    half = n // 2
    up = np.arange(half + 1) * (np.pi / half)
    x = np.concatenate([up, up[-2:0:-1]])
    return PolyCurve(np.column_stack([x, np.zeros(n)]))


def _inscribe_equal_chords(trace, n: int, max_iter: int = 80,
                           tol: float = 1e-13) -> np.ndarray:
    """Place n points exactly on a smooth closed trace t -> R^d so that
    consecutive chords are equal, then scale to perimeter 2*pi.

    Keeping the vertices on the analytic trace (rather than on its
    chords) preserves the exponential decay of the DFT spectrum, which
    the Fourier-side checks rely on.
    """
    t = TWO_PI * np.arange(n) / n
    for _ in range(max_iter):
        pts = trace(t)
        closed = np.vstack([pts, pts[:1]])
        seg = np.linalg.norm(np.diff(closed, axis=0), axis=1)
        total = seg.sum()
        if total < 1e-6:
            raise DegenerateCurveError("curve perimeter collapsed below 1e-6")
        spread = (seg.max() - seg.min()) / (total / n)
        if spread < tol:
            break
        cum = np.concatenate([[0.0], np.cumsum(seg)])
        t_ext = np.concatenate([t, [t[0] + TWO_PI]])
        targets = np.arange(n) * (total / n)
        t = np.interp(targets, cum, t_ext)
    perim = np.linalg.norm(
        np.diff(np.vstack([pts, pts[:1]]), axis=0), axis=1).sum()
    return pts * (TWO_PI / perim)


def random_closed_curve(seed: int, K: int = 6, amplitude_decay: float = 0.4,
                        n: int = 512, dim: int = 2) -> PolyCurve:
    """Random smooth closed curve from Fourier modes up to harmonic K.

    Coefficients for harmonic k have magnitude proportional to
    amplitude_decay**|k|; vertices are placed on the smooth trace with
    equal chord lengths and perimeter 2*pi.  Deterministic per seed;
    degenerate draws (perimeter below 1e-6 before normalization) fall
    through to the next substream.
    """
    if K < 1:
        raise InvalidDiscretizationError(f"need K >= 1, got {K}")
    for attempt in range(32):
        rng = np.random.default_rng((seed, attempt))
        ks = np.arange(1, K + 1)
        scale = 0.25 * amplitude_decay ** ks[:, None]
        a = rng.normal(size=(K, dim)) * scale
        b = rng.normal(size=(K, dim)) * scale
        # base circle in the first two coordinates keeps the speed bounded
        # away from zero, so the chord-equalized sampling stays smooth
        a[0, 0] += 1.0
        b[0, 1] += 1.0

        def trace(t, a=a, b=b):
            return (np.cos(np.outer(t, ks)) @ a
                    + np.sin(np.outer(t, ks)) @ b)

        dense = TWO_PI * np.arange(4096) / 4096
        da = -np.sin(np.outer(dense, ks)) * ks @ a \
            + np.cos(np.outer(dense, ks)) * ks @ b
        speed = np.linalg.norm(da, axis=1)
        perim = float(np.trapezoid(
            np.append(speed, speed[0]), dx=TWO_PI / 4096))
        if perim < 1e-6 or speed.min() < 0.35 * speed.mean():
            continue
        try:
            return PolyCurve(_inscribe_equal_chords(trace, n))
        except DegenerateCurveError:
            continue
    raise DegenerateCurveError(
        f"no non-degenerate sample found for seed {seed}")


def save_curve(curve: PolyCurve, path) -> None:
    """Write the curve JSON file: {"dim": d, "n": N, "vertices": [...]}."""
    payload = {
        "dim": curve.dim,
        "n": curve.n,
        "vertices": curve.vertices.tolist(),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)


def load_curve(path) -> PolyCurve:
    """Read a curve JSON file and check the unit-speed invariants."""
    with open(path) as fh:
        payload = json.load(fh)
    vertices = np.asarray(payload["vertices"], dtype=float)
    if vertices.shape != (payload["n"], payload["dim"]):
        raise InvalidDiscretizationError(
            "vertex array shape disagrees with declared n/dim")
    curve = PolyCurve(vertices)
    curve.validate()
    return curve
