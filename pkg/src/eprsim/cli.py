"""Command-line front end: reproducible correlation tables, CHSH reports,
coincidence-experiment sweeps, and the pair-symmetry table.

Every command accepts ``--seed`` (commands that draw samples print a
recoverable random seed to stderr when it is omitted) and ``--format
{csv,json}``; both formats carry identical numeric content. Angles are
radians unless ``--degrees`` is given. ``--workers`` (default from the
EPRSIM_WORKERS environment variable) never changes any result.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from ._rng import angle_key, derive_seed, validate_seed
from .chsh import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    ChshSettings,
    chsh_value,
    cosine_optimal_settings,
    optimize_settings,
    violation_report,
)
from .correlations import (
    FERMION,
    PHOTON,
    AnalyzerPair,
    entangled_correlation_model,
    polarizer_angle_to_pair_angle,
)
from .ensemble import (
    EnsembleGeometry,
    analytic_average_correlation,
    averaged_correlation_model,
    mc_average_correlation,
)
from .experiment import (
    DISENTANGLED,
    ENTANGLED,
    FORMAT_VERSION,
    ExperimentConfig,
    counts_std_error,
    default_sweep_angles,
    fit_visibility,
    normalized_correlation,
    run_pairs,
    visibility_sweep,
    write_sweep_csv,
    write_sweep_json,
)
from .photon import classification_table

_MODELS = (ENTANGLED, DISENTANGLED)
_KINDS = (FERMION, PHOTON)


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().entropy % (2**63))


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return validate_seed(args.seed)
    seed = _fresh_seed()
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _geometry(kind: str) -> EnsembleGeometry:
    if kind == PHOTON:
        return EnsembleGeometry.transverse_circle()
    return EnsembleGeometry.sphere()


def _pair_for_angle(theta: float, kind: str) -> AnalyzerPair:
    return AnalyzerPair(
        [1.0, 0.0, 0.0], [math.cos(theta), math.sin(theta), 0.0], kind=kind
    )


def _emit(args, columns: list[str], rows: list[list], meta: dict) -> None:
    if args.format == "json":
        payload = {
            "format_version": FORMAT_VERSION,
            "config": meta,
            "rows": [dict(zip(columns, row)) for row in rows],
        }
        print(json.dumps(payload, indent=2))
        return
    print(f"# format_version: {FORMAT_VERSION}")
    print(",".join(columns))
    for row in rows:
        print(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))


def _cmd_correlate(args) -> int:
    angles = list(args.theta_ab or [])
    if args.grid is not None:
        if args.grid < 1:
            raise ValueError("--grid must be >= 1")
        angles.extend(float(t) for t in default_sweep_angles(max(2, args.grid))[: args.grid])
    if not angles:
        raise ValueError("provide at least one --theta-ab or a --grid size")
    if args.degrees:
        angles = [math.radians(t) for t in angles]
    if args.polarizer_angles:
        if args.kind != PHOTON:
            raise ValueError("--polarizer-angles applies only to --kind photon")
        angles = [polarizer_angle_to_pair_angle(t) for t in angles]

    seed = _resolve_seed(args) if args.mc else args.seed
    columns = ["theta_ab_rad", "e_analytic"]
    if args.mc:
        columns += ["e_mc", "std_err"]
    rows: list[list] = []
    for theta in angles:
        pair = _pair_for_angle(theta, args.kind)
        if args.model == ENTANGLED:
            e_analytic = entangled_correlation_model()(pair.a, pair.b)
        else:
            e_analytic = analytic_average_correlation(pair, _geometry(args.kind))
        row: list = [float(theta), float(e_analytic)]
        if args.mc:
            angle_seed = derive_seed(seed, angle_key(theta))
            if args.model == ENTANGLED:
                counts = run_pairs(
                    ExperimentConfig(
                        model=ENTANGLED,
                        kind=args.kind,
                        n_pairs=args.n,
                        seed=angle_seed,
                        settings=pair,
                    ),
                    workers=args.workers,
                )
                row += [normalized_correlation(counts), counts_std_error(counts)]
            else:
                estimate = mc_average_correlation(
                    pair, _geometry(args.kind), args.n, angle_seed, workers=args.workers
                )
                row += [estimate.mean, estimate.std_error]
        rows.append(row)
    meta = {
        "command": "correlate",
        "model": args.model,
        "kind": args.kind,
        "mc": bool(args.mc),
        "n": args.n if args.mc else None,
        "seed": seed,
    }
    _emit(args, columns, rows, meta)
    return 0


def _cmd_chsh(args) -> int:
    if args.model == ENTANGLED:
        model = entangled_correlation_model()
    else:
        model = averaged_correlation_model(_geometry(args.kind))

    if args.degenerate:
        settings = ChshSettings.from_planar_angles(
            0.0, 0.0, math.pi / 4.0, math.pi / 4.0
        )
        s_max = abs(chsh_value(model, settings))
    elif args.optimize:
        settings, s_max = optimize_settings(model)
    else:
        settings = cosine_optimal_settings()
        s_max = abs(chsh_value(model, settings))

    report = violation_report(model, settings)
    columns = ["model", "kind", "s", "abs_s", "classical_bound", "tsirelson_bound", "violates"]
    rows = [
        [
            args.model,
            args.kind,
            float(report.s),
            float(s_max),
            float(CLASSICAL_BOUND),
            float(TSIRELSON_BOUND),
            report.violates,
        ]
    ]
    meta = {
        "command": "chsh",
        "model": args.model,
        "kind": args.kind,
        "optimize": bool(args.optimize),
        "degenerate": bool(args.degenerate),
        "settings": {
            name: [float(v) for v in getattr(settings, name)]
            for name in ("a", "a_prime", "b", "b_prime")
        },
        "seed": args.seed,
    }
    _emit(args, columns, rows, meta)
    return 0


def _cmd_simulate(args) -> int:
    seed = _resolve_seed(args)
    angles = default_sweep_angles(args.angles)
    points = visibility_sweep(
        args.model, args.kind, args.n, seed, angles=angles, workers=args.workers
    )
    fit = fit_visibility([(p.theta_ab, p.counts) for p in points])
    config = {
        "command": "simulate",
        "model": args.model,
        "kind": args.kind,
        "n_pairs": args.n,
        "angles": args.angles,
    }
    out = args.out
    suffix = f".{args.format}"
    path = out if out.endswith(suffix) else out + suffix
    try:
        if args.format == "json":
            write_sweep_json(path, points, config, seed)
        else:
            write_sweep_csv(path, points)
    except OSError as exc:
        raise ValueError(f"cannot write {path}: {exc}") from exc
    print(f"V = {fit.v:.6f} (rms residual {fit.residual:.6f})")
    print(f"wrote: {path}")
    return 0


def _cmd_classify(args) -> int:
    columns = ["state", "parity", "r_perp"]
    rows = [
        [name, cls.parity or "none", cls.r_perp or "none"]
        for name, cls in classification_table()
    ]
    meta = {"command": "classify", "seed": args.seed}
    _emit(args, columns, rows, meta)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="64-bit RNG seed")
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker threads (default: EPRSIM_WORKERS or 1); never changes results",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eprsim",
        description="Correlations of separated particle pairs: entangled "
        "versus decohered, analytic and simulated.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    correlate = sub.add_parser(
        "correlate", help="analytic and Monte Carlo correlations on an angle grid"
    )
    correlate.add_argument("--model", choices=_MODELS, required=True)
    correlate.add_argument("--kind", choices=_KINDS, default=PHOTON)
    correlate.add_argument(
        "--theta-ab", type=float, action="append", help="analyzer angle (repeatable)"
    )
    correlate.add_argument("--grid", type=int, default=None, help="evenly spaced angles over [0, pi]")
    correlate.add_argument("--degrees", action="store_true", help="angles are degrees")
    correlate.add_argument(
        "--polarizer-angles",
        action="store_true",
        help="photon angles are polarizer settings (doubled internally)",
    )
    correlate.add_argument("--mc", action="store_true", help="add a Monte Carlo column")
    correlate.add_argument("--n", type=int, default=100_000, help="Monte Carlo samples per angle")
    _add_common(correlate)
    correlate.set_defaults(func=_cmd_correlate)

    chsh = sub.add_parser("chsh", help="CHSH statistic, bounds, and optimal settings")
    chsh.add_argument("--model", choices=_MODELS, required=True)
    chsh.add_argument("--kind", choices=_KINDS, default=PHOTON)
    group = chsh.add_mutually_exclusive_group()
    group.add_argument("--optimize", action="store_true", help="search for the optimal settings")
    group.add_argument(
        "--degenerate", action="store_true", help="evaluate at a = a' and b = b'"
    )
    _add_common(chsh)
    chsh.set_defaults(func=_cmd_chsh)

    simulate = sub.add_parser(
        "simulate", help="coincidence-count sweep with a visibility fit"
    )
    simulate.add_argument("--model", choices=_MODELS, required=True)
    simulate.add_argument("--kind", choices=_KINDS, default=PHOTON)
    simulate.add_argument("--n", type=int, default=100_000, help="pairs per angle")
    simulate.add_argument("--angles", type=int, default=12, help="sweep points over [0, pi]")
    simulate.add_argument("--out", default="sweep", help="output path (extension added)")
    _add_common(simulate)
    simulate.set_defaults(func=_cmd_simulate)

    classify = sub.add_parser(
        "classify", help="parity / transverse-rotation table of the pair states"
    )
    _add_common(classify)
    classify.set_defaults(func=_cmd_classify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"eprsim: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
