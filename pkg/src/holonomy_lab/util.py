"""Shared plumbing: bounded parallel map and deterministic rational sampling."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from random import Random

THREADS_ENV = "HOLONOMY_LAB_THREADS"


def worker_count() -> int:
    """Parallelism cap from the environment; defaults to sequential."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(fn, items):
    """Map preserving input order, using at most worker_count() threads."""
    items = list(items)
    n = worker_count()
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))


def small_rationals(rng: Random, height: int = 12, max_den: int = 4) -> Fraction:
    """One small-height nonzero-ish rational, deterministic from rng state."""
    num = rng.randint(-height, height)
    den = rng.randint(1, max_den)
    return Fraction(num, den)
