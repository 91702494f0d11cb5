"""Experiment orchestration: the verification suite, figure
reproduction, and SVG emission."""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field

import numpy as np

from . import functionals as fn
from . import geometry as geo
from . import optimizer as opt
from . import shape as shp
from . import spectral as spec

FORMAT_VERSION = 1

#: floats are written with 17 significant digits so CSV/JSON round-trip
FLOAT_FMT = "%.17g"


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of a sweep/figures run, round-trippable as JSON."""

    p_min: float = 1.0
    p_max: float = 4.0
    p_step: float = 0.05
    fine_grid: tuple = ()
    n: int = 256
    seed: int = 0
    max_iters: int = 2000
    perturb: float = 0.05
    version: int = FORMAT_VERSION

    def to_json(self) -> str:
        payload = dict(self.__dict__)
        payload["fine_grid"] = list(self.fine_grid)
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        payload = json.loads(text)
        known = set(cls.__dataclass_fields__)
        unknown = set(payload) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        if "fine_grid" in payload:
            payload["fine_grid"] = tuple(payload["fine_grid"])
        return cls(**payload)

    def p_grid(self) -> list[float]:
        count = int(round((self.p_max - self.p_min) / self.p_step)) + 1
        grid = [round(self.p_min + i * self.p_step, 10) for i in range(count)]
        grid.extend(p for p in self.fine_grid if p not in grid)
        return sorted(grid)


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    bound: float
    tolerance: float


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    def add(self, name, passed, measured, bound, tolerance):
        self.checks.append(CheckResult(name, bool(passed), float(measured),
                                       float(bound), float(tolerance)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name}: measured={c.measured:.6g} "
                         f"bound={c.bound:.6g} tol={c.tolerance:.2g}")
        n_fail = sum(not c.passed for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} "
                     "checks passed")
        return "\n".join(lines)


def verify_all(seed: int = 1, n_curves: int = 50, n: int = 512) -> VerificationReport:
    """Run every cross-module inequality suite on seeded random curves."""
    if n_curves < 1:
        raise ValueError(f"need n_curves >= 1, got {n_curves}")
    report = VerificationReport()
    curves = [geo.random_closed_curve(seed + i, n=n) for i in range(n_curves)]
    curves3 = [geo.random_closed_curve(seed + 1000 + i, n=n, dim=3)
               for i in range(max(1, n_curves // 10))]

    # circle minimality of the chord/arc energies
    for (j, p) in [(2, 1), (1, 1), (1, 2), (2, 1.5)]:
        params = fn.EnergyParams(j, p)
        bound = fn.circle_bound(params)
        worst = min(fn.energy_Ejp(c, params) for c in curves + curves3)
        report.add(f"energy({j},{p}) >= circle bound", worst >= 0.95 * bound,
                   worst, bound, 0.05 * bound)

    # chord-average inequality for concave increasing test functions.
    # An inscribed polygon's chords overshoot the smooth chord function
    # by O(1/n^2), so the continuum bounds below get a matching slack.
    disc_tol = 10.0 / n**2
    concave = {"sqrt": np.sqrt, "log": np.log, "pow0.4": lambda x: x ** 0.4}
    worst_gap = -np.inf
    for c in curves[: min(10, n_curves)]:
        for k in range(1, n, max(1, n // 64)):
            lam2 = float(fn.lambda_chord(fn.arc_distance_scalar(n, k)) ** 2)
            for fname, f in concave.items():
                gap = fn.chord_average(c, k, f) - float(f(np.asarray(lam2)))
                worst_gap = max(worst_gap, gap)
    report.add("chord average <= f(lambda^2)", worst_gap <= disc_tol,
               worst_gap, 0.0, disc_tol)

    # distortion lower bounds
    worst = min(fn.distortion(c) for c in curves)
    report.add("distortion >= pi/2", worst >= np.pi / 2 - 1e-9,
               worst, np.pi / 2, 1e-9)
    worst_at = np.inf
    for c in curves[: min(10, n_curves)]:
        for k in range(1, n // 2 + 1, max(1, n // 128)):
            s = fn.arc_distance_scalar(n, k)
            worst_at = min(worst_at,
                           fn.distortion_at(c, k) - s / fn.lambda_chord(s))
    report.add("distortion_at >= s/lambda(s)", worst_at >= -disc_tol,
               worst_at, 0.0, disc_tol)

    # Wirtinger deficit: series nonnegativity and oracle agreement
    worst_rho = np.inf
    worst_agree = 0.0
    for c in curves[: min(20, n_curves)]:
        fc = spec.analyze(c)
        prof = spec.deficit(fc)
        worst_rho = min(worst_rho, prof.rho.min())
        direct = np.array([spec.deficit_direct(c, k) for k in range(1, n)])
        scale = max(1.0, 4.0 * fc.derivative_energy())
        worst_agree = max(worst_agree,
                          float(np.abs(direct - prof.rho).max()) / scale)
    report.add("deficit series >= 0", worst_rho >= -1e-8, worst_rho, 0.0, 1e-8)
    # aliasing between DFT and continuum coefficients is O(1/n^2)
    agree_tol = max(1e-4, disc_tol)
    report.add("deficit series vs direct", worst_agree <= agree_tol,
               worst_agree, 0.0, agree_tol)

    # pointwise lemmas
    rng = np.random.default_rng(seed)
    ks = rng.integers(2, 51, size=10000)
    thetas = rng.uniform(-10, 10, size=10000)
    viol = np.sin(ks * thetas) ** 2 - ks ** 2 * np.sin(thetas) ** 2
    report.add("sin^2(k theta) <= k^2 sin^2(theta)", viol.max() <= 1e-9,
               float(viol.max()), 0.0, 1e-9)
    worst_tetra = np.inf
    for dim in (2, 3):
        pts = rng.normal(size=(10000, 4, dim))
        for row in pts[:2000]:
            _, _, gap = spec.tetra_check(*row)
            worst_tetra = min(worst_tetra, gap)
    report.add("tetrahedron inequality gap >= 0", worst_tetra >= -1e-12,
               worst_tetra, 0.0, 1e-12)

    # power-mean monotonicity of the chord means
    c = curves[0]
    vals = [fn.avg_chord_p(c, p) for p in (0.5, 1, 2, 3, 4)]
    mono = all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))
    report.add("A_p monotone in p", mono, float(min(np.diff(vals))), 0.0, 1e-12)
    return report


def emit_svg(curves, labels, path, size: int = 800) -> None:
    """Write planar curves into one SVG document with a shared scale."""
    curves = list(curves)
    labels = list(labels)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{size}" height="{size}" '
             f'viewBox="0 0 {size} {size}">']
    if curves:
        allpts = np.vstack([c.vertices for c in curves])
        lo = allpts.min(axis=0)
        hi = allpts.max(axis=0)
        span = max(float((hi - lo).max()), 1e-12)
        margin = 0.08 * size

        def to_px(pts):
            scaled = (pts - (lo + hi) / 2) / span * (size - 2 * margin)
            x = scaled[:, 0] + size / 2
            y = size / 2 - scaled[:, 1]
            return np.column_stack([x, y])

        for curve, label in zip(curves, labels):
            px = to_px(curve.vertices)
            d = "M " + " L ".join(f"{x:.2f} {y:.2f}" for x, y in px) + " Z"
            parts.append(f'<path d="{d}" fill="none" stroke="black" '
                         'stroke-width="1.5"/>')
            lx, ly = px[0]
            parts.append(f'<text x="{lx + 4:.2f}" y="{ly - 4:.2f}" '
                         f'font-size="14">{label}</text>')
    parts.append("</svg>")
    try:
        with open(path, "w") as fh:
            fh.write("\n".join(parts))
    except OSError as exc:
        raise OSError(f"failed to write SVG to {path}: {exc}") from exc


def _polyline_svg(xs, ys, path, xlabel, ylabel, size: int = 800) -> None:
    """Minimal scatter/line plot as SVG (axes, ticks omitted on purpose)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    keep = np.isfinite(xs) & np.isfinite(ys)
    xs, ys = xs[keep], ys[keep]
    margin = 80
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
             f'height="{size}" viewBox="0 0 {size} {size}">']
    if len(xs) >= 2:
        def scale(v, lo, hi, a, b):
            if hi - lo < 1e-300:
                return np.full_like(v, (a + b) / 2)
            return a + (v - lo) / (hi - lo) * (b - a)
        px = scale(xs, xs.min(), xs.max(), margin, size - margin)
        py = scale(ys, ys.min(), ys.max(), size - margin, margin)
        d = "M " + " L ".join(f"{x:.2f} {y:.2f}" for x, y in zip(px, py))
        parts.append(f'<path d="{d}" fill="none" stroke="black" '
                     'stroke-width="1.5"/>')
        for x, y in zip(px, py):
            parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        parts.append(f'<text x="{size // 2}" y="{size - 20}" '
                     f'font-size="16">{xlabel}</text>')
        parts.append(f'<text x="20" y="{size // 2}" font-size="16" '
                     f'transform="rotate(-90 20 {size // 2})">{ylabel}</text>')
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts))


SWEEP_COLUMNS = ["p", "value", "r", "efit_log10", "eccentricity", "converged"]


def write_sweep_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_COLUMNS)
        for rec in records:
            writer.writerow([
                FLOAT_FMT % rec.p, FLOAT_FMT % rec.value, FLOAT_FMT % rec.r,
                FLOAT_FMT % rec.efit_log10, FLOAT_FMT % rec.eccentricity,
                int(rec.converged)])


def read_sweep_csv(path) -> list[shp.SweepRecord]:
    out = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != SWEEP_COLUMNS:
            raise ValueError(f"unexpected sweep CSV header {reader.fieldnames}")
        for row in reader:
            out.append(shp.SweepRecord(
                p=float(row["p"]), value=float(row["value"]),
                r=float(row["r"]), efit_log10=float(row["efit_log10"]),
                eccentricity=float(row["eccentricity"]),
                converged=bool(int(row["converged"]))))
    return out


def reproduce_figures(outdir, config: ExperimentConfig | None = None) -> dict:
    """Run the sweep behind the figure set and write all outputs.

    Produces sweep.csv, one curve JSON per grid exponent, a gallery SVG
    of selected maximizers, and width-ratio / fit-error plots.  Agreement
    is qualitative (transition location and trends), not pixel parity.
    """
    config = config or ExperimentConfig(
        fine_grid=tuple(round(3.462 + 0.002 * i, 10) for i in range(12)))
    os.makedirs(outdir, exist_ok=True)
    opts = opt.OptimizeOptions(n=config.n, max_iters=config.max_iters,
                               perturb=config.perturb, seed=config.seed)
    grid = config.p_grid()
    records = []
    curves = {}
    current = geo.make_circle(config.n)
    for p in grid:
        try:
            init = opt.perturb_mode2(current, config.perturb)
            result = opt.maximize(p, init, opts)
            current = result.curve
            canon = opt.canonicalize(result.curve)
            fit = shp.fit_conic(canon)
            records.append(shp.SweepRecord(
                p=p, value=result.value, r=shp.width_ratio(canon),
                efit_log10=float(np.log10(max(fit.residual, 1e-300))),
                eccentricity=fit.eccentricity, converged=result.converged))
            curves[p] = canon
            geo.save_curve(canon, os.path.join(outdir, f"curve_p{p:.3f}.json"))
        except (geo.DegenerateCurveError, ValueError):
            records.append(shp.SweepRecord(
                p=p, value=float("nan"), r=float("nan"),
                efit_log10=float("nan"), eccentricity=float("nan"),
                converged=False))
    csv_path = os.path.join(outdir, "sweep.csv")
    write_sweep_csv(records, csv_path)
    with open(os.path.join(outdir, "config.json"), "w") as fh:
        fh.write(config.to_json())

    gallery = [p for p in grid if p in curves]
    gallery = gallery[:: max(1, len(gallery) // 8)]
    gallery_path = os.path.join(outdir, "gallery.svg")
    emit_svg([curves[p] for p in gallery],
             [f"p={p:g}" for p in gallery], gallery_path)
    width_path = os.path.join(outdir, "width_ratio.svg")
    _polyline_svg([r.p for r in records], [r.r for r in records],
                  width_path, "p", "width ratio r(p)")
    efit_path = os.path.join(outdir, "fit_error.svg")
    _polyline_svg([r.p for r in records], [r.efit_log10 for r in records],
                  efit_path, "p", "log10 ellipse-fit error")
    return {"sweep_csv": csv_path, "gallery": gallery_path,
            "width_ratio": width_path, "fit_error": efit_path,
            "records": records}
