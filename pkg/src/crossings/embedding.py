"""Convex embeddings: crossing predicate, counters, sampling and exact laws.

An embedding is a permutation ``pi`` with ``pi(v)`` the position of vertex
``v`` among ``n`` points in convex position.  Two vertex-disjoint edges
cross iff their endpoint positions interleave.

Random source
-------------
Samples are drawn in fixed chunks of :data:`CHUNK_SIZE` permutations.
Chunk ``i`` uses ``numpy.random.PCG64`` seeded by
``SeedSequence(seed, spawn_key=(i,))``, draws the Fisher-Yates swap
indices with ``Generator.integers`` (Lemire's unbiased bounded integers),
and applies the shuffle.  Output therefore depends only on
``(seed, samples)``, never on how many workers ran the chunks.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import CapExceededError, ValidationError
from .graph import Graph

CHUNK_SIZE = 4096
DEFAULT_CAP = 9
GENERATOR_ID = "numpy.PCG64 / SeedSequence(seed, spawn_key=(chunk,)) / Fisher-Yates with Lemire bounded integers; chunk=4096"


def default_cap() -> int:
    return int(os.environ.get("CROSSINGS_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class Permutation:
    """``mapping[v-1]`` is the position of vertex ``v``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise ValidationError(f"not a permutation of 1..{len(self.mapping)}: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.mapping)

    def __call__(self, v: int) -> int:
        return self.mapping[v - 1]

    def rotate(self, shift: int) -> "Permutation":
        n = len(self.mapping)
        return Permutation(tuple((p - 1 + shift) % n + 1 for p in self.mapping))


def _positions(p) -> np.ndarray:
    if isinstance(p, Permutation):
        p = p.mapping
    return np.asarray(p, dtype=np.int64)


def is_crossing(pa: int, pb: int, pc: int, pd: int) -> bool:
    """Do edges at positions ``{pa, pb}`` and ``{pc, pd}`` interleave?"""
    if len({pa, pb, pc, pd}) != 4:
        raise ValidationError("edges share a vertex (positions are not distinct)")
    l1, r1 = min(pa, pb), max(pa, pb)
    l2, r2 = min(pc, pd), max(pc, pd)
    return l1 < l2 < r1 < r2 or l2 < l1 < r2 < r1


@lru_cache(maxsize=64)
def _disjoint_pairs(g: Graph) -> tuple[np.ndarray, ...]:
    e = np.asarray(g.edges, dtype=np.int64).reshape(-1, 2) - 1
    i, j = np.triu_indices(len(e), 1)
    a, b, c, d = e[i, 0], e[i, 1], e[j, 0], e[j, 1]
    keep = (a != c) & (a != d) & (b != c) & (b != d)
    return a[keep], b[keep], c[keep], d[keep]


@lru_cache(maxsize=64)
def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(g.degrees[1:])
    indices = [w - 1 for v in range(1, g.n + 1) for w in sorted(g.adjacency[v])]
    return indptr, np.asarray(indices, dtype=np.int64)


def crossings_baseline(g: Graph, positions: np.ndarray) -> np.ndarray:
    """Scan every vertex-disjoint edge pair; ``positions`` is samples x n."""
    a, b, c, d = _disjoint_pairs(g)
    out = np.zeros(positions.shape[0], dtype=np.int64)
    step = max(1, 2_000_000 // max(1, positions.shape[0]))
    for s in range(0, len(a), step):
        pa, pb = positions[:, a[s:s + step]], positions[:, b[s:s + step]]
        pc, pd = positions[:, c[s:s + step]], positions[:, d[s:s + step]]
        l1, r1 = np.minimum(pa, pb), np.maximum(pa, pb)
        l2, r2 = np.minimum(pc, pd), np.maximum(pc, pd)
        hit = ((l1 < l2) & (l2 < r1) & (r1 < r2)) | ((l2 < l1) & (l1 < r2) & (r2 < r1))
        out += hit.sum(axis=1)
    return out


def crossings_fast(g: Graph, positions: np.ndarray) -> np.ndarray:
    indptr, indices = _csr(g)
    return _kernels.crossings_sweep(np.ascontiguousarray(positions, dtype=np.int64), indptr, indices)


def count_crossings_batch(g: Graph, positions, algorithm: str = "fast") -> np.ndarray:
    positions = np.atleast_2d(np.asarray(positions, dtype=np.int64))
    if positions.shape[1] != g.n:
        raise ValidationError(f"permutation length {positions.shape[1]} != n = {g.n}")
    if algorithm == "baseline":
        return crossings_baseline(g, positions)
    if algorithm == "fast":
        return crossings_fast(g, positions)
    raise ValidationError(f"unknown algorithm {algorithm!r}")


def count_crossings(g: Graph, p, algorithm: str = "fast") -> int:
    pos = _positions(p)
    if pos.ndim != 1 or len(pos) != g.n:
        raise ValidationError(f"permutation length {len(pos)} != n = {g.n}")
    return int(count_crossings_batch(g, pos[None, :], algorithm)[0])


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk,))
    return np.random.Generator(np.random.PCG64(ss))


def permutation_chunk(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` uniform permutations of ``1..n`` (rows are position maps)."""
    if n == 1:
        return np.ones((size, 1), dtype=np.int64)
    highs = np.arange(n, 1, -1, dtype=np.int64)
    draws = rng.integers(0, highs, size=(size, n - 1), dtype=np.int64)
    return _kernels.fisher_yates(draws)


def _chunk_sizes(samples: int) -> list[int]:
    full, rest = divmod(samples, CHUNK_SIZE)
    return [CHUNK_SIZE] * full + ([rest] if rest else [])


def sample_permutations(n: int, samples: int, seed: int) -> Iterator[np.ndarray]:
    for i, size in enumerate(_chunk_sizes(samples)):
        yield permutation_chunk(n, size, chunk_generator(seed, i))


def sample_crossings(g: Graph, samples: int, seed: int, algorithm: str = "fast",
                     threads: int = 1) -> np.ndarray:
    if samples < 1:
        raise ValidationError("samples must be positive")

    def run(job):
        i, size = job
        pos = permutation_chunk(g.n, size, chunk_generator(seed, i))
        return count_crossings_batch(g, pos, algorithm)

    jobs = list(enumerate(_chunk_sizes(samples)))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(run, jobs))
    else:
        parts = [run(j) for j in jobs]
    return np.concatenate(parts)


@dataclass(frozen=True)
class Pmf:
    support: tuple[int, ...]
    probability: tuple[Fraction, ...]

    def __post_init__(self):
        if sum(self.probability) != 1:
            raise ValidationError("probabilities do not sum to 1")

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "Pmf":
        total = sum(int(c) for c in counts)
        ks = [k for k, c in enumerate(counts) if c]
        return cls(tuple(ks), tuple(Fraction(int(counts[k]), total) for k in ks))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(zip(self.support, self.probability))

    def moment(self, r: int) -> Fraction:
        return sum((Fraction(k) ** r * p for k, p in zip(self.support, self.probability)), Fraction(0))

    @property
    def mean(self) -> Fraction:
        return self.moment(1)

    @property
    def variance(self) -> Fraction:
        return self.moment(2) - self.mean ** 2

    def cdf(self, k: float) -> Fraction:
        return sum((p for s, p in zip(self.support, self.probability) if s <= k), Fraction(0))

    def to_json(self) -> list[dict]:
        return [{"k": k, "numerator": p.numerator, "denominator": p.denominator}
                for k, p in zip(self.support, self.probability)]

    @classmethod
    def from_json(cls, rows: list[dict]) -> "Pmf":
        return cls(tuple(r["k"] for r in rows),
                   tuple(Fraction(r["numerator"], r["denominator"]) for r in rows))


def all_positions(n: int, reduce: str = "none", batch: int = 50_000) -> Iterator[np.ndarray]:
    """Every position map (reduce='none'), or those with ``pi(1) = 1``."""
    if reduce == "none":
        it = itertools.permutations(range(1, n + 1))
    elif reduce == "fix-first":
        it = ((1,) + rest for rest in itertools.permutations(range(2, n + 1)))
    else:
        raise ValidationError(f"unknown reduction {reduce!r}")
    while True:
        block = list(itertools.islice(it, batch))
        if not block:
            return
        yield np.asarray(block, dtype=np.int64)


def exact_distribution(g: Graph, reduce: str = "none", cap: int | None = None,
                       algorithm: str = "fast") -> Pmf:
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceededError(f"n = {g.n} exceeds the enumeration cap {cap}")
    counts = np.zeros(max(1, math.comb(g.m, 2)) + 1, dtype=np.int64)
    for pos in all_positions(g.n, reduce):
        x = count_crossings_batch(g, pos, algorithm)
        counts += np.bincount(x, minlength=len(counts))[: len(counts)]
    return Pmf.from_counts(counts.tolist())


def write_samples(path, counts) -> None:
    with open(path, "w") as fh:
        fh.writelines(f"{int(c)}\n" for c in counts)
