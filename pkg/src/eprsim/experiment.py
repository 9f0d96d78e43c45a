"""Event-level simulation of a two-detector coincidence experiment.

Every pair yields exactly one joint outcome (ideal detectors, no dark
counts or timing windows): entangled pairs draw it from the singlet
coincidence probabilities, decohered pairs first draw a shared axis from
the ensemble geometry and then the outcome from the fixed-axis
probabilities. Counts are bit-reproducible from the seed; sweep angles get
independent substreams keyed by the angle value, so reordering a sweep
never changes any per-angle table.

Sweep results are emitted as CSV with columns
``theta_ab_rad,n_pp,n_pm,n_mp,n_mm,e_hat,std_err`` and as JSON carrying
the same rows plus a config echo and the seed; both formats carry
``format_version: 1``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ._rng import angle_key, derive_seed, map_chunks, validate_seed
from .chsh import ChshSettings
from .correlations import (
    FERMION,
    PHOTON,
    AnalyzerPair,
    entangled_joint_probabilities,
)
from .ensemble import EnsembleGeometry, sample_axis_vectors

__all__ = [
    "ENTANGLED",
    "DISENTANGLED",
    "FORMAT_VERSION",
    "CountsTable",
    "VisibilityFit",
    "ExperimentConfig",
    "SweepPoint",
    "run_pairs",
    "run_chsh_counts",
    "normalized_correlation",
    "counts_std_error",
    "fit_visibility",
    "default_sweep_angles",
    "visibility_sweep",
    "PrefactorReport",
    "prefactor_insensitivity_demo",
    "sweep_csv_text",
    "write_sweep_csv",
    "sweep_json_payload",
    "write_sweep_json",
]

ENTANGLED = "entangled"
DISENTANGLED = "disentangled"

FORMAT_VERSION = 1

_DEFAULT_SWEEP_POINTS = 12


@dataclass(frozen=True)
class CountsTable:
    """The four coincidence counters of one analyzer-pair run."""

    n_pp: int
    n_pm: int
    n_mp: int
    n_mm: int

    def __post_init__(self) -> None:
        for name in ("n_pp", "n_pm", "n_mp", "n_mm"):
            value = getattr(self, name)
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
            object.__setattr__(self, name, int(value))

    @property
    def total(self) -> int:
        return self.n_pp + self.n_pm + self.n_mp + self.n_mm

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n_pp, self.n_pm, self.n_mp, self.n_mm)

    def __add__(self, other: "CountsTable") -> "CountsTable":
        return CountsTable(
            self.n_pp + other.n_pp,
            self.n_pm + other.n_pm,
            self.n_mp + other.n_mp,
            self.n_mm + other.n_mm,
        )


@dataclass(frozen=True)
class VisibilityFit:
    """Fitted coincidence-curve amplitude and root-mean-square residual."""

    v: float
    residual: float


@dataclass(frozen=True, eq=False)
class ExperimentConfig:
    """One coincidence run: model, species, pair count, seed, settings.

    ``geometry`` (the axis distribution) is required for the disentangled
    model and ignored for the entangled one.
    """

    model: str
    kind: str
    n_pairs: int
    seed: int
    settings: AnalyzerPair | ChshSettings
    geometry: EnsembleGeometry | None = None

    def __post_init__(self) -> None:
        if self.model not in (ENTANGLED, DISENTANGLED):
            raise ValueError(f"model must be 'entangled' or 'disentangled', got {self.model!r}")
        if self.kind not in (FERMION, PHOTON):
            raise ValueError(f"kind must be 'fermion' or 'photon', got {self.kind!r}")
        if self.n_pairs < 1:
            raise ValueError(f"n_pairs must be >= 1, got {self.n_pairs}")
        object.__setattr__(self, "seed", validate_seed(self.seed))
        if self.model == DISENTANGLED and self.geometry is None:
            raise ValueError("the disentangled model needs an ensemble geometry")
        if not isinstance(self.settings, (AnalyzerPair, ChshSettings)):
            raise ValueError("settings must be an AnalyzerPair or ChshSettings")


def _outcome_counts_fixed(rng: np.random.Generator, count: int, cum: np.ndarray) -> np.ndarray:
    u = rng.random(count)
    outcomes = np.searchsorted(cum, u, side="right")
    return np.bincount(outcomes, minlength=4)


def _outcome_counts_disentangled(
    rng: np.random.Generator,
    count: int,
    a: np.ndarray,
    b: np.ndarray,
    geometry: EnsembleGeometry,
) -> np.ndarray:
    axes = sample_axis_vectors(geometry, rng, count)
    product = (axes @ a) * (axes @ b)
    u = rng.random(count)
    p_pp = 0.25 * (1.0 - product)
    c1 = p_pp
    c2 = 0.5  # p_pp + p_pm is exactly one half for every axis
    c3 = 0.5 + 0.25 * (1.0 + product)
    outcomes = (u >= c1).astype(np.int64) + (u >= c2) + (u >= c3)
    return np.bincount(outcomes, minlength=4)


def run_pairs(config: ExperimentConfig, workers: int | None = None) -> CountsTable:
    """Simulate ``n_pairs`` coincidences for a single analyzer pair.

    Bit-reproducible from ``config.seed``; the result never depends on the
    worker count.
    """
    pair = config.settings
    if not isinstance(pair, AnalyzerPair):
        raise ValueError("run_pairs needs AnalyzerPair settings; see run_chsh_counts")
    if config.model == ENTANGLED:
        probs = entangled_joint_probabilities(pair).as_array()
        cum = np.cumsum(probs)[:3]

        def chunk(rng: np.random.Generator, count: int) -> np.ndarray:
            return _outcome_counts_fixed(rng, count, cum)

    else:
        geometry = config.geometry

        def chunk(rng: np.random.Generator, count: int) -> np.ndarray:
            return _outcome_counts_disentangled(rng, count, pair.a, pair.b, geometry)

    totals = sum(map_chunks(chunk, config.n_pairs, config.seed, workers))
    return CountsTable(*(int(v) for v in totals))


def run_chsh_counts(
    config: ExperimentConfig, workers: int | None = None
) -> dict[str, CountsTable]:
    """Coincidence tables for the four analyzer pairs of a CHSH setting set.

    Each pair runs on its own substream derived from the config seed, so
    the four tables are independent and individually reproducible.
    """
    settings = config.settings
    if not isinstance(settings, ChshSettings):
        raise ValueError("run_chsh_counts needs ChshSettings settings")
    pairs = {
        "ab": (settings.a, settings.b),
        "ab_prime": (settings.a, settings.b_prime),
        "a_prime_b": (settings.a_prime, settings.b),
        "a_prime_b_prime": (settings.a_prime, settings.b_prime),
    }
    out: dict[str, CountsTable] = {}
    for index, (name, (va, vb)) in enumerate(pairs.items()):
        sub = ExperimentConfig(
            model=config.model,
            kind=config.kind,
            n_pairs=config.n_pairs,
            seed=derive_seed(config.seed, index),
            settings=AnalyzerPair(va, vb, kind=config.kind),
            geometry=config.geometry,
        )
        out[name] = run_pairs(sub, workers=workers)
    return out


def normalized_correlation(counts: CountsTable) -> float:
    """Count-normalized correlation (pp - pm - mp + mm) / total, in [-1, 1]."""
    total = counts.total
    if total == 0:
        raise ValueError("no coincidences: all four counters are zero")
    return (counts.n_pp - counts.n_pm - counts.n_mp + counts.n_mm) / total


def counts_std_error(counts: CountsTable) -> float:
    """Multinomial standard error of the normalized correlation."""
    total = counts.total
    if total == 0:
        raise ValueError("no coincidences: all four counters are zero")
    e = normalized_correlation(counts)
    return math.sqrt(max(0.0, 1.0 - e * e) / total)


def fit_visibility(sweep: Sequence[tuple[float, CountsTable]]) -> VisibilityFit:
    """Least-squares fit of the sweep correlations to -v * cos(theta).

    Needs at least two distinct angles with nonzero totals; if every angle
    has a vanishing cosine the amplitude is unidentifiable and the design
    is rejected as degenerate.
    """
    if len({float(theta) for theta, _ in sweep}) < 2:
        raise ValueError("need at least 2 distinct sweep angles")
    thetas = np.array([float(theta) for theta, _ in sweep])
    estimates = np.array([normalized_correlation(counts) for _, counts in sweep])
    cosines = np.cos(thetas)
    denominator = float(np.dot(cosines, cosines))
    if denominator < 1e-24:
        raise ValueError("degenerate design: every sweep angle has cos(theta) = 0")
    v = -float(np.dot(estimates, cosines)) / denominator
    residuals = estimates + v * cosines
    return VisibilityFit(v=v, residual=float(np.sqrt(np.mean(residuals**2))))


def default_sweep_angles(count: int = _DEFAULT_SWEEP_POINTS) -> np.ndarray:
    """Equally spaced analyzer angles covering [0, pi]."""
    if count < 2:
        raise ValueError(f"a sweep needs at least 2 angles, got {count}")
    return np.linspace(0.0, math.pi, count)


@dataclass(frozen=True)
class SweepPoint:
    """One sweep angle: counts, normalized correlation, and its standard error."""

    theta_ab: float
    counts: CountsTable
    e_hat: float
    std_err: float


def _sweep_pair(theta: float, kind: str) -> AnalyzerPair:
    # Rotate b against a fixed a inside the transverse (xy) plane, so the
    # same sweep serves both geometries.
    return AnalyzerPair(
        [1.0, 0.0, 0.0], [math.cos(theta), math.sin(theta), 0.0], kind=kind
    )


def _geometry_for(kind: str) -> EnsembleGeometry:
    if kind == PHOTON:
        return EnsembleGeometry.transverse_circle()
    return EnsembleGeometry.sphere()


def visibility_sweep(
    model: str,
    kind: str,
    n_pairs: int,
    seed: int,
    angles: Iterable[float] | None = None,
    geometry: EnsembleGeometry | None = None,
    workers: int | None = None,
) -> list[SweepPoint]:
    """Run a coincidence sweep over analyzer angles.

    Each angle runs ``n_pairs`` pairs on a substream derived from
    ``(seed, angle)``; permuting the angle order leaves every per-angle
    table unchanged.
    """
    seed = validate_seed(seed)
    if angles is None:
        angles = default_sweep_angles()
    if geometry is None and model == DISENTANGLED:
        geometry = _geometry_for(kind)
    points = []
    for theta in angles:
        theta = float(theta)
        config = ExperimentConfig(
            model=model,
            kind=kind,
            n_pairs=n_pairs,
            seed=derive_seed(seed, angle_key(theta)),
            settings=_sweep_pair(theta, kind),
            geometry=geometry,
        )
        counts = run_pairs(config, workers=workers)
        points.append(
            SweepPoint(
                theta_ab=theta,
                counts=counts,
                e_hat=normalized_correlation(counts),
                std_err=counts_std_error(counts),
            )
        )
    return points


@dataclass(frozen=True)
class PrefactorReport:
    """Entangled versus rescaled-disentangled sweep comparison.

    Doubling the disentangled correlations should reproduce the entangled
    curve up to sampling noise: the two models share one functional form
    and differ only by the prefactor, which count normalization hides.
    """

    angles: tuple[float, ...]
    e_entangled: tuple[float, ...]
    e_disentangled_rescaled: tuple[float, ...]
    max_abs_difference: float


def prefactor_insensitivity_demo(
    entangled: ExperimentConfig,
    disentangled: ExperimentConfig,
    angles: Iterable[float] | None = None,
    workers: int | None = None,
) -> PrefactorReport:
    """Sweep both configs over the same angles and compare curve shapes.

    The configs supply model, species, pair count, and seed for their
    respective sweeps; per-angle analyzer pairs are generated internally.
    """
    if entangled.model != ENTANGLED or disentangled.model != DISENTANGLED:
        raise ValueError("pass one entangled and one disentangled config, in that order")
    angle_list = [float(t) for t in (default_sweep_angles() if angles is None else angles)]
    ent = visibility_sweep(
        ENTANGLED, entangled.kind, entangled.n_pairs, entangled.seed,
        angles=angle_list, workers=workers,
    )
    dis = visibility_sweep(
        DISENTANGLED, disentangled.kind, disentangled.n_pairs, disentangled.seed,
        angles=angle_list, geometry=disentangled.geometry, workers=workers,
    )
    e_ent = tuple(p.e_hat for p in ent)
    e_dis2 = tuple(2.0 * p.e_hat for p in dis)
    gap = max(abs(x - y) for x, y in zip(e_ent, e_dis2))
    return PrefactorReport(
        angles=tuple(angle_list),
        e_entangled=e_ent,
        e_disentangled_rescaled=e_dis2,
        max_abs_difference=gap,
    )


_CSV_HEADER = "theta_ab_rad,n_pp,n_pm,n_mp,n_mm,e_hat,std_err"


def _fmt(value: float) -> str:
    return repr(float(value))


def sweep_csv_text(points: Sequence[SweepPoint]) -> str:
    """Stable CSV rendering of a sweep (one row per angle)."""
    lines = [f"# format_version: {FORMAT_VERSION}", _CSV_HEADER]
    for p in points:
        c = p.counts
        lines.append(
            f"{_fmt(p.theta_ab)},{c.n_pp},{c.n_pm},{c.n_mp},{c.n_mm},"
            f"{_fmt(p.e_hat)},{_fmt(p.std_err)}"
        )
    return "\n".join(lines) + "\n"


def write_sweep_csv(path, points: Sequence[SweepPoint]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(sweep_csv_text(points))


def sweep_json_payload(
    points: Sequence[SweepPoint], config: dict, seed: int
) -> dict:
    """JSON payload mirroring the CSV rows plus config echo and seed."""
    rows = []
    for p in points:
        c = p.counts
        rows.append(
            {
                "theta_ab_rad": float(p.theta_ab),
                "n_pp": c.n_pp,
                "n_pm": c.n_pm,
                "n_mp": c.n_mp,
                "n_mm": c.n_mm,
                "e_hat": float(p.e_hat),
                "std_err": float(p.std_err),
            }
        )
    return {
        "format_version": FORMAT_VERSION,
        "config": config,
        "seed": int(seed),
        "rows": rows,
    }


def write_sweep_json(path, points: Sequence[SweepPoint], config: dict, seed: int) -> None:
    payload = sweep_json_payload(points, config, seed)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
