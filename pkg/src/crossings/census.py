"""Counts of r-matchings and of the small configurations that drive the moments.

Configuration types (unordered edge subsets, classified by component shape):

* ``C2`` -- a 2-edge path plus two more edges, all three components disjoint.
* ``C4`` -- two vertex-disjoint 2-edge paths.
* ``C5`` -- a 3-edge path plus a disjoint edge.
* ``C6`` -- a 4-edge path.
* ``C7`` -- a 2-edge path plus a disjoint edge.

The fast counters enumerate 2-edge paths (one per pair of neighbors of a
center vertex) and 3-edge paths, and for each one evaluate how many edges,
2-edge paths or 2-matchings survive after deleting its vertices.  Those
"what survives" quantities are O(1) per anchor given degrees, neighbor
degree sums and codegrees.  ``m4`` then follows from partitioning all
unordered pairs of 2-matchings by the shape of their union.

:func:`census_by_enumeration` classifies every 3- and 4-edge subset
directly; it is slow and kept as the reference the fast path is tested
against.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from math import comb

import numpy as np

from .errors import ValidationError
from .graph import FamilyId, Graph

CONFIG_TYPES = ("C2", "C4", "C5", "C6", "C7")


@dataclass(frozen=True)
class SubgraphCensus:
    n: int
    m: int
    m2: int
    m3: int
    m4: int
    s2: int
    s4: int
    s5: int
    s6: int
    s7: int
    delta: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def matchings(self, r: int) -> int:
        return {1: self.m, 2: self.m2, 3: self.m3, 4: self.m4}[r]

    def config(self, t: str) -> int:
        return getattr(self, "s" + t[1:])


class _Structure:
    """Degree, codegree and adjacency lookups shared by the counters."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.m = g.m
        self.base = g.n + 1
        self.deg = np.asarray(g.degrees, dtype=np.int64)
        eu = np.array([e[0] for e in g.edges], dtype=np.int64)
        ev = np.array([e[1] for e in g.edges], dtype=np.int64)
        self.eu, self.ev = eu, ev
        self.edge_keys = np.sort(np.concatenate([eu * self.base + ev, ev * self.base + eu]))

        self.nbr_sum = np.zeros(self.base, dtype=np.int64)
        np.add.at(self.nbr_sum, eu, self.deg[ev])
        np.add.at(self.nbr_sum, ev, self.deg[eu])

        # 2-edge paths a - c - b with a < b
        ends_a, centers, ends_b = [], [], []
        for c in range(1, g.n + 1):
            nb = sorted(g.adjacency[c])
            d = len(nb)
            if d < 2:
                continue
            i, j = np.triu_indices(d, 1)
            nb_arr = np.asarray(nb, dtype=np.int64)
            ends_a.append(nb_arr[i])
            ends_b.append(nb_arr[j])
            centers.append(np.full(len(i), c, dtype=np.int64))
        empty = np.zeros(0, dtype=np.int64)
        self.p3_a = np.concatenate(ends_a) if ends_a else empty
        self.p3_c = np.concatenate(centers) if centers else empty
        self.p3_b = np.concatenate(ends_b) if ends_b else empty

        keys = self.p3_a * self.base + self.p3_b
        self.codeg_keys, counts = np.unique(keys, return_counts=True)
        self.codeg_counts = counts.astype(np.int64)

        # CSR adjacency for path extension
        self.indptr = np.zeros(self.base + 1, dtype=np.int64)
        self.indptr[1:] = np.cumsum(self.deg)
        self.indices = np.concatenate(
            [np.asarray(sorted(g.adjacency[v]), dtype=np.int64) for v in range(self.base)]
        ) if g.m else empty

    def adjacent(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        keys = x * self.base + y
        if len(self.edge_keys) == 0:
            return np.zeros(len(keys), dtype=np.int64)
        pos = np.searchsorted(self.edge_keys, keys)
        pos = np.minimum(pos, len(self.edge_keys) - 1)
        return (self.edge_keys[pos] == keys).astype(np.int64)

    def codeg(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        lo, hi = np.minimum(x, y), np.maximum(x, y)
        keys = lo * self.base + hi
        if len(self.codeg_keys) == 0:
            return np.zeros(len(keys), dtype=np.int64)
        pos = np.searchsorted(self.codeg_keys, keys)
        pos = np.minimum(pos, len(self.codeg_keys) - 1)
        return np.where(self.codeg_keys[pos] == keys, self.codeg_counts[pos], 0)

    @property
    def p2(self) -> int:
        return int(sum(comb(int(d), 2) for d in self.deg))

    def survivors(self, verts: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
        """Edges and 2-edge paths left after deleting each vertex set.

        ``verts`` holds one array per slot; row ``i`` across the slots is one
        set of distinct vertices.
        """
        deg = self.deg
        s = len(verts)
        adj = {}
        for i, j in itertools.combinations(range(s), 2):
            adj[i, j] = adj[j, i] = self.adjacent(verts[i], verts[j])
        inside = sum(adj[i, j] for i, j in itertools.combinations(range(s), 2))
        deg_sum = sum(deg[v] for v in verts)
        edges_left = self.m - deg_sum + inside

        # for w outside S with k_w neighbors in S:
        # C(d_w, 2) - C(d_w - k_w, 2) = k_w d_w - k_w - C(k_w, 2)
        kd = sum(self.nbr_sum[v] for v in verts)
        kd = kd - sum(adj[i, j] * (deg[verts[i]] + deg[verts[j]])
                      for i, j in itertools.combinations(range(s), 2))
        k1 = deg_sum - 2 * inside
        k2 = 0
        for i, j in itertools.combinations(range(s), 2):
            shared_inside = sum(adj[i, l] * adj[j, l] for l in range(s) if l not in (i, j))
            k2 = k2 + self.codeg(verts[i], verts[j]) - shared_inside
        lost_inside = sum(deg[v] * (deg[v] - 1) // 2 for v in verts)
        paths_left = self.p2 - lost_inside - (kd - k1 - k2)
        return edges_left, paths_left

    def directed_p4(self) -> tuple[np.ndarray, ...]:
        """All 3-edge paths a-b-c-d, each listed once per direction."""
        a = np.concatenate([self.p3_a, self.p3_b])
        b = np.concatenate([self.p3_c, self.p3_c])
        c = np.concatenate([self.p3_b, self.p3_a])
        reps = self.deg[c]
        rows = np.repeat(np.arange(len(c)), reps)
        offsets = np.arange(len(rows)) - np.repeat(np.cumsum(reps) - reps, reps)
        d = self.indices[self.indptr[c[rows]] + offsets] if len(rows) else rows
        a, b, c = a[rows], b[rows], c[rows]
        keep = (d != b) & (d != a)
        return a[keep], b[keep], c[keep], d[keep]


def _choose2(x):
    return x * (x - 1) // 2


def census(g: Graph) -> SubgraphCensus:
    st = _Structure(g)
    m = g.m
    p2 = st.p2
    m2 = comb(m, 2) - p2

    if m2 == 0:
        return SubgraphCensus(g.n, m, 0, 0, 0, 0, 0, 0, 0, 0, g.max_degree)

    e_left, p_left = st.survivors([st.eu, st.ev])
    m3_3 = int(np.sum(_choose2(e_left) - p_left))

    a, c, b = st.p3_a, st.p3_c, st.p3_b
    e_left, p_left = st.survivors([a, c, b])
    s7 = int(np.sum(e_left))
    s4_2 = int(np.sum(p_left))
    s2 = int(np.sum(_choose2(e_left) - p_left))

    pa, pb, pc, pd = st.directed_p4()
    e_left, _ = st.survivors([pa, pb, pc, pd])
    s5_2 = int(np.sum(e_left))
    deg = st.deg
    ext = (deg[pa] - 1 - st.adjacent(pa, pc) - st.adjacent(pa, pd)) + \
          (deg[pd] - 1 - st.adjacent(pd, pb) - st.adjacent(pd, pa))
    s6_4 = int(np.sum(ext))

    q4_2 = int(np.sum(_choose2(st.codeg_counts)))

    assert m3_3 % 3 == 0 and s4_2 % 2 == 0 and s5_2 % 2 == 0 and s6_4 % 4 == 0 and q4_2 % 2 == 0
    m3, s4, s5, s6, q4 = m3_3 // 3, s4_2 // 2, s5_2 // 2, s6_4 // 4, q4_2 // 2

    # every unordered pair of distinct 2-matchings is one of: vertex-disjoint
    # (3 per 4-matching), sharing an edge (3 per 3-matching, 1 per C7), or
    # sharing vertices only (2 per C2, 2 per C4, 1 per C5, C6, 4-cycle)
    rest = comb(m2, 2) - 3 * m3 - s7 - 2 * s2 - 2 * s4 - s5 - s6 - q4
    assert rest % 3 == 0 and rest >= 0
    return SubgraphCensus(g.n, m, m2, m3, rest // 3, s2, s4, s5, s6, s7, g.max_degree)


def count_r_matchings(g: Graph, r: int) -> int:
    if r not in (1, 2, 3, 4):
        raise ValidationError(f"r must be in 1..4, got {r}")
    if r == 1:
        return g.m
    if r == 2:
        return comb(g.m, 2) - sum(comb(d, 2) for d in g.degrees)
    return census(g).matchings(r)


def count_config(g: Graph, t: str) -> int:
    if t not in CONFIG_TYPES:
        raise ValidationError(f"unknown configuration type {t!r}")
    return census(g).config(t)


def classify_subset(edges) -> str | None:
    """Name the shape of a 3- or 4-edge subset, or None if it is none of ours.

    Returns one of ``m3``, ``m4``, ``C2``, ``C4``, ``C5``, ``C6``, ``C7``,
    ``Q4`` (the 4-cycle, which never contributes), or None.
    """
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(x) > 2 for x in nbrs.values()):
        return None
    seen: set[int] = set()
    paths, cycles = [], []
    for start in nbrs:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        n_edges = sum(len(nbrs[x]) for x in comp) // 2
        (cycles if n_edges == len(comp) else paths).append(n_edges)
    shape = tuple(sorted(paths, reverse=True))
    if cycles:
        return "Q4" if cycles == [4] and not paths else None
    return {
        (1, 1, 1): "m3",
        (2, 1): "C7",
        (1, 1, 1, 1): "m4",
        (2, 1, 1): "C2",
        (2, 2): "C4",
        (3, 1): "C5",
        (4,): "C6",
    }.get(shape)


def census_by_enumeration(g: Graph) -> SubgraphCensus:
    """Reference census: classify every 2-, 3- and 4-edge subset. O(m^4)."""
    counts = dict.fromkeys(("m2", "m3", "m4", "C2", "C4", "C5", "C6", "C7", "Q4"), 0)
    for e, f in itertools.combinations(g.edges, 2):
        if not set(e) & set(f):
            counts["m2"] += 1
    for r in (3, 4):
        for sub in itertools.combinations(g.edges, r):
            kind = classify_subset(sub)
            if kind is not None:
                counts[kind] += 1
    return SubgraphCensus(
        g.n, g.m, counts["m2"], counts["m3"], counts["m4"], counts["C2"], counts["C4"],
        counts["C5"], counts["C6"], counts["C7"], g.max_degree)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if a >= b >= 0 else 0


def closed_form_census(family: FamilyId) -> SubgraphCensus:
    """Census from the families' closed forms (no enumeration).

    Linear terms that go negative below a family's natural range are clamped
    at zero; the 4-edge path count of a cycle needs at least 5 vertices.
    """
    k = family.k
    if family.tag == "matching":
        return SubgraphCensus(2 * k, k, comb(k, 2), comb(k, 3), comb(k, 4), 0, 0, 0, 0, 0, 1)
    if family.tag == "path":
        return SubgraphCensus(
            k, k - 1, _binom(k - 2, 2), _binom(k - 3, 3), _binom(k - 4, 4),
            3 * _binom(k - 4, 3), _binom(k - 4, 2), 2 * _binom(k - 4, 2), max(k - 4, 0),
            2 * _binom(k - 3, 2), min(2, k - 1))
    if family.tag == "cycle":
        # m_r(C_k) = k/r * C(k-r-1, r-1)
        return SubgraphCensus(
            k, k, k * (k - 3) // 2, k * _binom(k - 4, 2) // 3, k * _binom(k - 5, 3) // 4,
            k * _binom(k - 5, 2), max(k * (k - 5) // 2, 0), max(k * (k - 5), 0),
            k if k >= 5 else 0, max(k * (k - 4), 0), 2)
    if family.tag == "triangles":
        return SubgraphCensus(
            3 * k, 3 * k, 9 * comb(k, 2), 27 * comb(k, 3), 81 * comb(k, 4),
            81 * comb(k, 3), 9 * comb(k, 2), 0, 0, 18 * comb(k, 2), 2)
    # kite
    return SubgraphCensus(k, k - 1, k - 3, 0, 0, 0, 0, 0, 0, _binom(k - 3, 2), k - 2)
