"""Fourier-side verification of the chord-square inequality.

A closed curve c(t) = sum_k a_k e^{ikt} satisfies, for every shift s,

    int |c(t+s) - c(t)|^2 dt <= (2 sin(s/2))^2 * int |c'(t)|^2 dt,

with a deficit expressible as a series over harmonics k >= 2.  This
module computes that deficit both from DFT coefficients and directly
from vertex differences, plus the two elementary pointwise inequalities
the series argument rests on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import TWO_PI, PolyCurve, lambda_chord


@dataclass(frozen=True)
class FourierCurve:
    """Complex Fourier coefficients of a closed curve.

    coeffs has shape (2K+1, dim): row K + k holds a_k in C^dim for
    k = -K..K, in the normalization c(t) = sum_k a_k e^{ikt}.
    n records the source grid size (used for the default deficit grid).
    """

    coeffs: np.ndarray
    n: int

    @property
    def K(self) -> int:
        return (self.coeffs.shape[0] - 1) // 2

    def coeff(self, k: int) -> np.ndarray:
        """a_k as a vector in C^dim."""
        if abs(k) > self.K:
            return np.zeros(self.coeffs.shape[1], dtype=complex)
        return self.coeffs[self.K + k]

    def centroid(self) -> np.ndarray:
        return self.coeff(0).real

    def derivative_energy(self) -> float:
        """int |c'|^2 dt = 2 pi sum k^2 |a_k|^2 (Parseval on c')."""
        k = np.arange(-self.K, self.K + 1)
        return float(TWO_PI * np.sum(k[:, None] ** 2
                                     * np.abs(self.coeffs) ** 2))

    def reconstruct(self, n: int | None = None) -> np.ndarray:
        """Evaluate the truncated series on the uniform n-point grid."""
        n = n or self.n
        t = TWO_PI * np.arange(n) / n
        k = np.arange(-self.K, self.K + 1)
        phases = np.exp(1j * np.outer(t, k))
        return (phases @ self.coeffs).real


@dataclass(frozen=True)
class DeficitProfile:
    """Wirtinger deficit rho(s) sampled on the shift grid s = 2 pi k / n."""

    s: np.ndarray
    rho: np.ndarray

    def max_abs(self) -> float:
        return float(np.abs(self.rho).max())


def analyze(curve: PolyCurve, K: int | None = None) -> FourierCurve:
    """DFT of the vertex samples in the normalization
    c(t) = sum a_k e^{ikt}, truncated at |k| <= K (default floor(n/2)-1)."""
    n = curve.n
    if K is None:
        K = n // 2 - 1
    spec = np.fft.fft(curve.vertices, axis=0) / n
    coeffs = np.empty((2 * K + 1, curve.dim), dtype=complex)
    for k in range(-K, K + 1):
        coeffs[K + k] = spec[k % n]
    return FourierCurve(coeffs=coeffs, n=n)


def deficit(fc: FourierCurve, n: int | None = None) -> DeficitProfile:
    """Deficit series 8 pi sum_{k>=2} (k^2 sin^2(s/2) - sin^2(ks/2))
    (|a_-k|^2 + |a_k|^2) on the grid s = 2 pi m / n, m = 1..n-1."""
    n = n or fc.n
    s = TWO_PI * np.arange(1, n) / n
    K = fc.K
    rho = np.zeros_like(s)
    for k in range(2, K + 1):
        weight = float(np.sum(np.abs(fc.coeff(k)) ** 2
                              + np.abs(fc.coeff(-k)) ** 2))
        if weight == 0.0:
            continue
        rho += 8 * np.pi * weight * (k ** 2 * np.sin(s / 2) ** 2
                                     - np.sin(k * s / 2) ** 2)
    return DeficitProfile(s=s, rho=rho)


def deficit_direct(curve: PolyCurve, k: int) -> float:
    """Deficit at shift s = 2 pi k / n straight from the polygon:
    lambda^2(s) * int |c'|^2 (piecewise-constant derivative) minus the
    Riemann sum of the squared chords."""
    n = curve.n
    step = TWO_PI / n
    s = (k % n) * step
    edges = curve.edges()
    deriv_energy = float(np.sum(edges ** 2)) / step
    chords = np.roll(curve.vertices, -(k % n), axis=0) - curve.vertices
    chord_term = step * float(np.sum(chords ** 2))
    return float(lambda_chord(s) ** 2 * deriv_energy - chord_term)


def trig_lemma_check(k: int, theta: float) -> tuple[float, float]:
    """Both sides of sin^2(k theta) <= k^2 sin^2(theta) for integer k >= 2."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return float(np.sin(k * theta) ** 2), float(k ** 2 * np.sin(theta) ** 2)


def tetra_check(A, B, C, D) -> tuple[float, float, float]:
    """Both sides and the gap of the tetrahedron inequality
    |AC|^2 + |BD|^2 <= |BC|^2 + |AD|^2 + 2 |AB| |CD|.

    The gap vanishes exactly when AB and DC are parallel as vectors
    (same direction)."""
    A, B, C, D = (np.asarray(P, dtype=float) for P in (A, B, C, D))
    def d(P, Q):
        return float(np.linalg.norm(P - Q))
    lhs = d(A, C) ** 2 + d(B, D) ** 2
    rhs = d(B, C) ** 2 + d(A, D) ** 2 + 2 * d(A, B) * d(C, D)
    return lhs, rhs, rhs - lhs


def ellipse_uniform_parameter(a0, a, b, n: int) -> PolyCurve:
    """Curve c(t) = a0 + (cos t) a + (sin t) b sampled uniformly in t.

    This is the extremal family of the chord-square inequality: the
    mapping matters, so no arclength resampling is applied and the
    result generally violates the equal-edge invariant."""
    t = TWO_PI * np.arange(n) / n
    a0, a, b = (np.asarray(v, dtype=float) for v in (a0, a, b))
    pts = a0 + np.outer(np.cos(t), a) + np.outer(np.sin(t), b)
    return PolyCurve(pts)
