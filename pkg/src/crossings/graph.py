"""Simple undirected graphs on vertices ``1..n`` and the example families.

Canonical family labelings (fixed so that seeded runs are reproducible):

* ``matching k``  -- 2k vertices, edges ``(2i-1, 2i)`` for ``i = 1..k``.
* ``path k``      -- k vertices, edges ``(i, i+1)``.
* ``cycle k``     -- the path edges plus ``(1, k)``.
* ``triangles k`` -- 3k vertices; triangle ``j`` is ``{3j+1, 3j+2, 3j+3}``.
* ``kite k``      -- k vertices; star center is vertex 1 joined to
  ``2..k-1``, and the pendant edge is ``(k-1, k)``.  So ``m = k-1`` and
  ``max_degree = k-2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdgeError, ParseError, SelfLoopError, ValidationError, VertexRangeError

Edge = tuple[int, int]

FAMILIES = ("matching", "path", "cycle", "triangles", "kite")
FAMILY_MINIMUM = {"matching": 1, "path": 2, "cycle": 3, "triangles": 1, "kite": 4}


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    _validated: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._validated:
            g = build_graph(self.n, self.edges)
            object.__setattr__(self, "edges", g.edges)
            object.__setattr__(self, "_validated", True)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex; index 0 is an unused placeholder."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """``degrees[v]`` for ``v`` in ``1..n``; ``degrees[0] == 0``."""
        return tuple(len(s) for s in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max_degree(self)

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Return the isomorphic graph with vertex ``v`` renamed ``mapping[v-1]``."""
        return build_graph(self.n, [(mapping[u - 1], mapping[v - 1]) for u, v in self.edges])


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Edges are stored as ``(u, v)`` with ``u < v`` and sorted
    lexicographically.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"vertex count must be a positive integer, got {n!r}")
    seen: set[Edge] = set()
    for pair in edges:
        if len(pair) != 2:
            raise ValidationError(f"edge {tuple(pair)!r} is not a vertex pair")
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= n:
                raise VertexRangeError(f"endpoint {w} outside 1..{n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)), _validated=True)


@dataclass(frozen=True)
class FamilyId:
    tag: str
    k: int

    def __post_init__(self):
        if self.tag not in FAMILY_MINIMUM:
            raise ValidationError(f"unknown family {self.tag!r}; expected one of {', '.join(FAMILIES)}")
        if self.k < FAMILY_MINIMUM[self.tag]:
            raise ValidationError(
                f"{self.tag} needs size >= {FAMILY_MINIMUM[self.tag]}, got {self.k}")

    def __str__(self):
        return f"{self.tag}:{self.k}"


def family_graph(family: FamilyId) -> Graph:
    k = family.k
    if family.tag == "matching":
        return build_graph(2 * k, [(2 * i - 1, 2 * i) for i in range(1, k + 1)])
    if family.tag == "path":
        return build_graph(k, [(i, i + 1) for i in range(1, k)])
    if family.tag == "cycle":
        return build_graph(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])
    if family.tag == "triangles":
        edges = []
        for j in range(k):
            a, b, c = 3 * j + 1, 3 * j + 2, 3 * j + 3
            edges += [(a, b), (a, c), (b, c)]
        return build_graph(3 * k, edges)
    # kite
    return build_graph(k, [(1, j) for j in range(2, k)] + [(k - 1, k)])


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing 'n m' header")
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError(f"line {lineno}: malformed header {' '.join(header)!r}, expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer header {' '.join(header)!r}") from None
    if m < 0:
        raise ParseError(f"line {lineno}: negative edge count {m}")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"declared {m} edges, found {len(body)}")
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {' '.join(parts)!r}") from None
    return build_graph(n, edges)


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
