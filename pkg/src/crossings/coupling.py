"""Size-bias coupling for the crossing count.

Given a uniform embedding ``pi``, a uniform 2-matching ``I = (e, f)`` and a
uniform choice among four roles, ``pi_s`` is ``pi`` if ``I`` already
crosses; otherwise one transposition of two endpoint positions makes ``I``
cross.

Role assignment for a non-crossing ``I``: read the four endpoint positions
around the circle starting at an endpoint of the "outer" edge so they
appear as ``u1 < v1 < v2 < u2``.

* nested (one edge spans the other): ``u`` is the spanning edge, ``u1``
  its left end, ``u2`` its right end, ``v1 < v2`` the inner edge.
* disjoint intervals: ``u`` is the left edge with ``u1`` its *right* end
  and ``u2`` its left end, ``v1 < v2`` the right edge.  This is the nested
  picture rotated around the circle.

Choosing ``u1`` or ``v1`` swaps the positions of ``u2`` and ``v2``;
choosing ``u2`` or ``v2`` swaps ``u1`` and ``v1``.  Both swaps produce a
crossing in both cases.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .census import SubgraphCensus
from .embedding import (
    Permutation,
    _chunk_sizes,
    _disjoint_pairs,
    all_positions,
    chunk_generator,
    count_crossings_batch,
    default_cap,
    permutation_chunk,
)
from .errors import CapExceededError, NoCouplingError, ValidationError
from .graph import Graph

ROLES = ("u1", "u2", "v1", "v2")


class NoCouplingWarning(UserWarning):
    pass


def _matching_table(g: Graph) -> np.ndarray:
    """2-matchings as rows ``(a, b, c, d)`` of 0-based vertices."""
    a, b, c, d = _disjoint_pairs(g)
    return np.stack([a, b, c, d], axis=1)


def assign_roles(positions: np.ndarray, quad: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Role vertices ``(u1, u2, v1, v2)`` per row, plus a crossing mask.

    ``positions`` is rows x n, ``quad`` is rows x 4 (edge ``quad[:, :2]``
    and edge ``quad[:, 2:]``).  Roles of crossing rows are meaningless.
    """
    rows = np.arange(len(quad))
    p = positions[rows[:, None], quad]
    swap_e = p[:, 0] > p[:, 1]
    swap_f = p[:, 2] > p[:, 3]
    el = np.where(swap_e, quad[:, 1], quad[:, 0])
    er = np.where(swap_e, quad[:, 0], quad[:, 1])
    fl = np.where(swap_f, quad[:, 3], quad[:, 2])
    fr = np.where(swap_f, quad[:, 2], quad[:, 3])
    pel, per = positions[rows, el], positions[rows, er]
    pfl, pfr = positions[rows, fl], positions[rows, fr]

    crossing = ((pel < pfl) & (pfl < per) & (per < pfr)) | ((pfl < pel) & (pel < pfr) & (pfr < per))
    e_outer = (pel < pfl) & (pfr < per)
    f_outer = (pfl < pel) & (per < pfr)
    e_left = per < pfl

    u1 = np.select([e_outer, f_outer, e_left], [el, fl, er], fr)
    u2 = np.select([e_outer, f_outer, e_left], [er, fr, el], fl)
    v1 = np.select([e_outer, f_outer, e_left], [fl, el, fl], el)
    v2 = np.select([e_outer, f_outer, e_left], [fr, er, fr], er)
    return np.stack([u1, u2, v1, v2], axis=1), crossing


def couple(positions: np.ndarray, quad: np.ndarray, choice: np.ndarray):
    """Apply the construction row-wise.

    Returns ``(positions_s, chosen_vertex, crossing)``; ``chosen_vertex`` is
    the 0-based vertex in the chosen role (recorded even when unused).
    """
    roles, crossing = assign_roles(positions, quad)
    rows = np.arange(len(quad))
    chosen = roles[rows, choice]
    # choice u1/v1 (roles 0, 2) swaps u2 <-> v2; u2/v2 swaps u1 <-> v1
    first_pair = (choice == 0) | (choice == 2)
    x = np.where(first_pair, roles[:, 1], roles[:, 0])
    y = np.where(first_pair, roles[:, 3], roles[:, 2])
    out = positions.copy()
    act = ~crossing
    r = rows[act]
    out[r, x[act]] = positions[r, y[act]]
    out[r, y[act]] = positions[r, x[act]]
    return out, chosen, crossing


@dataclass(frozen=True)
class CouplingSample:
    x: int
    x_s: int
    index: tuple[tuple[int, int], tuple[int, int]]
    vertex_choice: int | None
    perm: Permutation
    perm_s: Permutation


@dataclass
class CouplingBatch:
    """Vectorized coupled samples; vertices are 1-based."""

    x: np.ndarray
    x_s: np.ndarray
    index: np.ndarray
    vertex_choice: np.ndarray
    crossed: np.ndarray
    perm: np.ndarray
    perm_s: np.ndarray

    def __len__(self):
        return len(self.x)

    def __getitem__(self, i) -> CouplingSample:
        q = self.index[i]
        return CouplingSample(
            int(self.x[i]), int(self.x_s[i]),
            ((int(q[0]), int(q[1])), (int(q[2]), int(q[3]))),
            None if self.crossed[i] else int(self.vertex_choice[i]),
            Permutation(tuple(int(v) for v in self.perm[i])),
            Permutation(tuple(int(v) for v in self.perm_s[i])),
        )


def _coupled_chunk(g: Graph, table: np.ndarray, size: int, rng: np.random.Generator,
                   keep_perms: bool):
    pos = permutation_chunk(g.n, size, rng)
    idx = rng.integers(0, len(table), size=size)
    choice = rng.integers(0, 4, size=size)
    quad = table[idx]
    pos_s, chosen, crossed = couple(pos, quad, choice)
    x = count_crossings_batch(g, pos)
    x_s = count_crossings_batch(g, pos_s)
    return CouplingBatch(x, x_s, quad + 1, chosen + 1, crossed,
                         pos if keep_perms else pos[:0], pos_s if keep_perms else pos_s[:0])


def sample_coupled_batch(g: Graph, samples: int, seed: int, keep_perms: bool = False) -> CouplingBatch:
    """``samples`` coupled draws, chunked like :func:`~crossings.embedding.sample_crossings`.

    Per chunk the stream is consumed as: permutations, then matching
    indices, then role choices.
    """
    table = _matching_table(g)
    if len(table) == 0:
        raise NoCouplingError("graph has no 2-matching; the coupling is undefined")
    parts = [_coupled_chunk(g, table, size, chunk_generator(seed, i), keep_perms)
             for i, size in enumerate(_chunk_sizes(samples))]
    return CouplingBatch(*(np.concatenate([getattr(p, f) for p in parts])
                           for f in ("x", "x_s", "index", "vertex_choice", "crossed", "perm", "perm_s")))


def sample_coupled(g: Graph, seed: int) -> CouplingSample:
    return sample_coupled_batch(g, 1, seed, keep_perms=True)[0]


def _enumerate_coupling(g: Graph, cap: int | None):
    """Yield ``(x, xs)`` blocks over all (pi, I, choice); xs has shape rows x (m2 * 4)."""
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceededError(f"n = {g.n} exceeds the enumeration cap {cap}")
    table = _matching_table(g)
    if len(table) == 0:
        raise NoCouplingError("graph has no 2-matching; the coupling is undefined")
    for pos in all_positions(g.n, batch=max(1, 200_000 // (4 * len(table)))):
        x = count_crossings_batch(g, pos)
        rows = len(pos)
        rep = np.repeat(pos, len(table) * 4, axis=0)
        quad = np.tile(np.repeat(table, 4, axis=0), (rows, 1))
        choice = np.tile(np.arange(4), rows * len(table))
        pos_s, _, _ = couple(rep, quad, choice)
        xs = count_crossings_batch(g, pos_s).reshape(rows, len(table) * 4)
        yield x, xs


def _test_function(tag: str):
    if tag == "identity":
        return lambda v: Fraction(v)
    if tag == "square":
        return lambda v: Fraction(v) ** 2
    if tag.startswith("indicator"):
        k = int(tag.strip("indicator():= "))
        return lambda v: Fraction(int(v == k))
    raise ValidationError(f"unknown test function {tag!r}")


def exact_size_bias_check(g: Graph, f: str = "identity", cap: int | None = None) -> tuple[Fraction, Fraction]:
    """``(E[X f(X)], mu E[f(X_s)])`` by exhaustive enumeration; equal iff size-biased."""
    fn = _test_function(f)
    hx: dict[int, int] = {}
    hs: dict[int, int] = {}
    for x, xs in _enumerate_coupling(g, cap):
        for v, c in zip(*np.unique(x, return_counts=True)):
            hx[int(v)] = hx.get(int(v), 0) + int(c)
        for v, c in zip(*np.unique(xs, return_counts=True)):
            hs[int(v)] = hs.get(int(v), 0) + int(c)
    nx, ns = sum(hx.values()), sum(hs.values())
    mu = Fraction(sum(v * c for v, c in hx.items()), nx)
    lhs = sum((v * fn(v) * c for v, c in hx.items()), Fraction(0)) / nx
    rhs = mu * sum((fn(v) * c for v, c in hs.items()), Fraction(0)) / ns
    return lhs, rhs


def conditional_diff_variance(g: Graph, cap: int | None = None) -> Fraction:
    """Exact variance over pi of the mean coupled increment given pi.

    ``D(pi) = (1/m2) sum_i (mean over the 4 choices of X^(i)(pi) - X(pi))``.
    Returns 0 with a :class:`NoCouplingWarning` when there is no 2-matching.
    """
    m2 = len(_matching_table(g))
    if m2 == 0:
        cap = default_cap() if cap is None else cap
        if g.n > cap:
            raise CapExceededError(f"n = {g.n} exceeds the enumeration cap {cap}")
        warnings.warn("no coupling defined (m2 = 0)", NoCouplingWarning, stacklevel=2)
        return Fraction(0)
    # T = 4 m2 D is an integer per pi
    total = total_sq = count = 0
    for x, xs in _enumerate_coupling(g, cap):
        t = xs.sum(axis=1) - 4 * m2 * x
        total += int(t.sum())
        total_sq += int((t * t).sum())
        count += len(t)
    var_t = Fraction(count * total_sq - total * total, count * count)
    return var_t / (16 * m2 * m2)


def lemma_variance_bound(c: SubgraphCensus) -> Fraction:
    """Upper bound on the variance of the conditional coupled increment (exact)."""
    if c.m2 == 0:
        raise NoCouplingError("bound needs at least one 2-matching")
    return 4 * c.delta ** 2 * c.m ** 2 * (
        1 + (Fraction(32 * c.delta, c.m) - 1) * Fraction(6 * c.m4, c.m2 ** 2)
        + Fraction(c.delta ** 2 * c.m, 2 * c.m2))


def max_increment(c: SubgraphCensus) -> int:
    """Deterministic bound on |X_s - X|: 2 * max_degree * (m - 1)."""
    return 2 * c.delta * max(c.m - 1, 0)
