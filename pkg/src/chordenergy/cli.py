"""Command-line interface.

Exit codes: 0 success, 2 precondition/parameter errors, 3 verification
failure, 4 I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import functionals as fn
from . import geometry as geo
from . import harness
from . import optimizer as opt
from . import shape as shp
from . import spectral as spec
from .errors import ChordEnergyError

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3
EXIT_IO = 4


def _emit(payload, quiet: bool) -> None:
    if not quiet:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _load(path):
    return geo.load_curve(path)


def cmd_verify(args) -> int:
    report = harness.verify_all(seed=args.seed, n_curves=args.curves,
                                n=args.n)
    if not args.quiet:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def cmd_energy(args) -> int:
    curve = _load(args.curve)
    params = fn.EnergyParams(args.j, args.p)
    value = fn.energy_Ejp(curve, params)
    _emit({"value": value, "n": curve.n,
           "params": {"j": args.j, "p": args.p}}, args.quiet)
    return EXIT_OK


def cmd_apnorm(args) -> int:
    curve = _load(args.curve)
    value = fn.avg_chord_p(curve, args.p)
    _emit({"value": value, "n": curve.n, "params": {"p": args.p}}, args.quiet)
    return EXIT_OK


def cmd_distortion(args) -> int:
    curve = _load(args.curve)
    value = fn.distortion(curve)
    _emit({"value": value if np.isfinite(value) else "inf",
           "n": curve.n, "params": {}}, args.quiet)
    return EXIT_OK


def cmd_bound(args) -> int:
    value = fn.circle_bound(fn.EnergyParams(args.j, args.p))
    _emit({"value": value, "n": None,
           "params": {"j": args.j, "p": args.p}}, args.quiet)
    return EXIT_OK


def cmd_deficit(args) -> int:
    curve = _load(args.curve)
    if args.direct:
        rows = [(fn.arc_distance_scalar(curve.n, k),
                 spec.deficit_direct(curve, k))
                for k in range(1, curve.n)]
    else:
        prof = spec.deficit(spec.analyze(curve))
        rows = list(zip(prof.s.tolist(), prof.rho.tolist()))
    out = args.out or "-"
    lines = ["s,rho"] + [f"{s:.17g},{r:.17g}" for s, r in rows]
    text = "\n".join(lines) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_maximize(args) -> int:
    opts = opt.OptimizeOptions(n=args.n, max_iters=args.max_iters,
                               perturb=args.perturb, seed=args.seed)
    init = opt.perturb_mode2(geo.make_circle(args.n), args.perturb)
    result = opt.maximize(args.p, init, opts)
    canon = opt.canonicalize(result.curve)
    if args.out:
        geo.save_curve(canon, args.out)
    _emit({"value": result.value, "n": args.n,
           "params": {"p": args.p, "iterations": result.iterations,
                      "converged": result.converged}}, args.quiet)
    return EXIT_OK


def cmd_sweep(args) -> int:
    count = int(round((args.p_max - args.p_min) / args.step)) + 1
    grid = [round(args.p_min + i * args.step, 10) for i in range(count)]
    opts = opt.OptimizeOptions(n=args.n, max_iters=args.max_iters,
                               perturb=args.perturb, seed=args.seed)
    records = opt.sweep(grid, opts)
    harness.write_sweep_csv(records, args.out)
    if not args.quiet:
        print(f"wrote {len(records)} rows to {args.out}")
    return EXIT_OK


def cmd_crossover(args) -> int:
    value = opt.crossover_segment_circle()
    if args.quiet:
        return EXIT_OK
    print(f"{value:.6f}")
    return EXIT_OK


def cmd_shape(args) -> int:
    curve = _load(args.curve)
    canon = opt.canonicalize(curve)
    fit = shp.fit_conic(canon)
    ratio = shp.width_ratio(canon)
    _emit({"r": ratio if np.isfinite(ratio) else "inf",
           "efit_log10": float(np.log10(max(fit.residual, 1e-300))),
           "eccentricity": fit.eccentricity if fit.elliptic else None,
           "elliptic": fit.elliptic}, args.quiet)
    return EXIT_OK


def cmd_figures(args) -> int:
    config = None
    if args.config:
        with open(args.config) as fh:
            config = harness.ExperimentConfig.from_json(fh.read())
    paths = harness.reproduce_figures(args.out, config)
    if not args.quiet:
        print(json.dumps({k: v for k, v in paths.items()
                          if k != "records"}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordenergy",
        description="Chord functionals on discrete closed curves: "
                    "energies, deficits, and maximizer experiments.")
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--n", type=int, default=512)
    parser.add_argument("--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="run the inequality verification suite")
    s.add_argument("--curves", type=int, default=50)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("energy", help="chord/arc energy of a curve file")
    s.add_argument("--curve", required=True)
    s.add_argument("--j", type=float, required=True)
    s.add_argument("--p", type=float, required=True)
    s.set_defaults(func=cmd_energy)

    s = sub.add_parser("apnorm", help="p-th power mean chord length")
    s.add_argument("--curve", required=True)
    s.add_argument("--p", type=float, required=True)
    s.set_defaults(func=cmd_apnorm)

    s = sub.add_parser("distortion", help="Gromov distortion of a curve file")
    s.add_argument("--curve", required=True)
    s.set_defaults(func=cmd_distortion)

    s = sub.add_parser("bound", help="sharp circle value of the energy")
    s.add_argument("--j", type=float, required=True)
    s.add_argument("--p", type=float, required=True)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("deficit", help="Wirtinger deficit profile as CSV")
    s.add_argument("--curve", required=True)
    group = s.add_mutually_exclusive_group()
    group.add_argument("--series", action="store_true", default=True)
    group.add_argument("--direct", action="store_true")
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_deficit)

    s = sub.add_parser("maximize", help="maximize the chord-power mean")
    s.add_argument("--p", type=float, required=True)
    s.add_argument("--max-iters", type=int, default=2000)
    s.add_argument("--perturb", type=float, default=0.05)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_maximize)

    s = sub.add_parser("sweep", help="continuation sweep over exponents")
    s.add_argument("--p-min", type=float, required=True)
    s.add_argument("--p-max", type=float, required=True)
    s.add_argument("--step", type=float, default=0.05)
    s.add_argument("--max-iters", type=int, default=2000)
    s.add_argument("--perturb", type=float, default=0.05)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("crossover",
                       help="exponent where the segment beats the circle")
    s.set_defaults(func=cmd_crossover)

    s = sub.add_parser("shape", help="shape diagnostics of a curve file")
    s.add_argument("--curve", required=True)
    s.set_defaults(func=cmd_shape)

    s = sub.add_parser("figures", help="full sweep and SVG figure set")
    s.add_argument("--out", required=True)
    s.add_argument("--config", default=None)
    s.set_defaults(func=cmd_figures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ChordEnergyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
