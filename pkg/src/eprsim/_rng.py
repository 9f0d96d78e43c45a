"""Deterministic seeding and chunked execution for the Monte Carlo layers.

Samples are generated in fixed-size chunks; chunk ``i`` draws from a
generator derived only from ``(seed, i)``, and partial results are reduced
in chunk order. Results are therefore a pure function of the seed and the
sample count, independent of worker count and scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

CHUNK_SIZE = 1 << 16
WORKERS_ENV = "EPRSIM_WORKERS"

_MAX_SEED = 2**64


def validate_seed(seed) -> int:
    seed = int(seed)
    if not 0 <= seed < _MAX_SEED:
        raise ValueError(f"seed must be a 64-bit non-negative integer, got {seed!r}")
    return seed


def substream(*key: int) -> np.random.Generator:
    """Generator derived from an integer key tuple."""
    return np.random.default_rng(np.random.SeedSequence([int(k) for k in key]))


def derive_seed(*key: int) -> int:
    """64-bit child seed derived from an integer key tuple."""
    ss = np.random.SeedSequence([int(k) for k in key])
    return int(ss.generate_state(1, np.uint64)[0])


def angle_key(theta: float) -> int:
    """Stable integer key for a sweep angle (its float64 bit pattern)."""
    return int(np.float64(theta).view(np.uint64))


def resolve_workers(workers: int | None) -> int:
    """Worker count: explicit argument, else the environment, else 1."""
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        workers = int(env) if env else 1
    workers = int(workers)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return workers


def chunk_counts(n: int) -> Sequence[int]:
    """Per-chunk sample counts for ``n`` total samples."""
    if n < 1:
        raise ValueError(f"need at least one sample, got {n}")
    full, rest = divmod(n, CHUNK_SIZE)
    counts = [CHUNK_SIZE] * full
    if rest:
        counts.append(rest)
    return counts


def map_chunks(
    fn: Callable[[np.random.Generator, int], object],
    n: int,
    seed: int,
    workers: int | None = None,
) -> list:
    """Run ``fn(rng, count)`` over every chunk and return results in order.

    ``fn`` must be a pure function of the generator and the count; the
    generator for chunk ``i`` depends only on ``(seed, i)``.
    """
    seed = validate_seed(seed)
    counts = chunk_counts(n)
    workers = resolve_workers(workers)

    def run(index: int):
        return fn(substream(seed, index), counts[index])

    indices = range(len(counts))
    if workers == 1 or len(counts) == 1:
        return [run(i) for i in indices]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, indices))
