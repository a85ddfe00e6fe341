"""Simple undirected graphs, degree-pair edge partitions, and the
definitional hyperbolic Sombor index.

The degree-pair counting polynomial of a graph collects, for each unordered
degree pair (i, j) with i <= j, the number m_ij of edges whose endpoints have
degrees i and j, as the term m_ij*x^i*y^j.  hso_direct sums
sqrt(d(u)^2 + d(v)^2) / min(d(u), d(v)) over the edges with exact radical
arithmetic; it is the oracle the operator-pipeline route is checked against.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    DegenerateDegreeError,
    EdgeListFormatError,
    EdgeListParseError,
    MPolyTopoError,
)
from .polyring import BiPoly, RadScalar

Edge = tuple[int, int]


class DisconnectedGraphWarning(UserWarning):
    """Emitted when a degree-based computation runs on a disconnected graph.

    Degree-pair counts depend only on degrees, so the result is still well
    defined; the warning flags that the usual connectivity assumption of the
    molecular-graph setting does not hold.
    """


class SimpleGraph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("_adj",)

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise EdgeListFormatError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise EdgeListFormatError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)

    @classmethod
    def from_edges(cls, edges: Sequence[Edge]) -> "SimpleGraph":
        """Graph over 0..max vertex id appearing in the edge list."""
        n = max((max(u, v) for u, v in edges), default=-1) + 1
        return cls(n, edges)

    @property
    def n(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self._adj)

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v, in sorted order."""
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._adj) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self._adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class EdgePartition:
    """Multiset of degree pairs: counts[(i, j)] = m_ij with 1 <= i <= j."""

    counts: Mapping[Edge, int]

    def __post_init__(self):
        norm: dict[Edge, int] = {}
        for (i, j), m in self.counts.items():
            if i < 1 or j < 1:
                raise DegenerateDegreeError(f"degree pair ({i}, {j}) has a degree < 1")
            if m <= 0:
                raise ValueError(f"pair count for ({i}, {j}) must be positive, got {m}")
            key = (i, j) if i <= j else (j, i)
            norm[key] = norm.get(key, 0) + m
        object.__setattr__(self, "counts", dict(sorted(norm.items())))

    @property
    def edge_count(self) -> int:
        return sum(self.counts.values())

    def items(self) -> Iterator[tuple[Edge, int]]:
        return iter(self.counts.items())

    def to_bipoly(self) -> BiPoly:
        return BiPoly([((i, j), m) for (i, j), m in self.counts.items()])

    def to_json_obj(self) -> dict[str, int]:
        """JSON form: {"i,j": count, ...}."""
        return {f"{i},{j}": m for (i, j), m in self.counts.items()}

    @classmethod
    def from_json_obj(cls, data: Mapping[str, int]) -> "EdgePartition":
        counts = {}
        for key, m in data.items():
            i, j = (int(tok) for tok in key.split(","))
            counts[(i, j)] = int(m)
        return cls(counts)


def _check_degrees(g: SimpleGraph) -> tuple[int, ...]:
    degs = g.degrees()
    isolated = [v for v, d in enumerate(degs) if d == 0]
    if isolated:
        raise DegenerateDegreeError(
            f"vertices {isolated} are isolated; minimum degree 1 is required"
        )
    if not g.is_connected():
        warnings.warn(
            "graph is disconnected; degree-pair results are still exact",
            DisconnectedGraphWarning,
            stacklevel=3,
        )
    return degs


def edge_partition(g: SimpleGraph) -> EdgePartition:
    """Count edges by the unordered degree pair of their endpoints."""
    degs = _check_degrees(g)
    counts: dict[Edge, int] = {}
    for u, v in g.edges():
        du, dv = degs[u], degs[v]
        key = (du, dv) if du <= dv else (dv, du)
        counts[key] = counts.get(key, 0) + 1
    return EdgePartition(counts)


def m_polynomial(g: SimpleGraph) -> BiPoly:
    """The degree-pair counting polynomial sum m_ij * x^i * y^j."""
    return edge_partition(g).to_bipoly()


def hso_pair(i: int, j: int) -> RadScalar:
    """Contribution of one edge with endpoint degrees i <= j:
    sqrt(i^2 + j^2) / min(i, j), exactly."""
    lo = min(i, j)
    return RadScalar.sqrt(i * i + j * j) * Fraction(1, lo)


def hso_direct(g: SimpleGraph) -> RadScalar:
    """Hyperbolic Sombor index straight from the definition (edge sum)."""
    degs = _check_degrees(g)
    total = RadScalar.zero()
    for u, v in g.edges():
        total = total + hso_pair(degs[u], degs[v])
    return total


PairFunction = Callable[[int, int], Union[RadScalar, Fraction, int, float]]


def generic_index(g: SimpleGraph, f: PairFunction) -> RadScalar | float:
    """A degree-based index sum f(d(u), d(v)) over edges.

    f is called with the unordered pair (i, j), i <= j.  The sum is computed
    twice, once per edge and once from the degree-pair counts, and the two
    routes must agree; exact inputs give an exact RadScalar, a float-valued f
    gives a float.
    """
    degs = _check_degrees(g)
    edge_vals = []
    for u, v in g.edges():
        du, dv = degs[u], degs[v]
        edge_vals.append(f(min(du, dv), max(du, dv)))
    part_vals = []
    for (i, j), m in edge_partition(g).items():
        part_vals.append((f(i, j), m))

    exact = all(isinstance(v, (int, Fraction, RadScalar)) for v in edge_vals) and all(
        isinstance(v, (int, Fraction, RadScalar)) for v, _ in part_vals
    )
    if exact:
        by_edge = RadScalar.zero()
        for v in edge_vals:
            by_edge = by_edge + v
        by_partition = RadScalar.zero()
        for v, m in part_vals:
            by_partition = by_partition + (v * m if isinstance(v, RadScalar) else RadScalar.rational(v) * m)
        if by_edge != by_partition:
            raise MPolyTopoError(
                f"edge-sum route {by_edge} disagrees with partition-sum route {by_partition}"
            )
        return by_edge

    by_edge_f = sum(float(v) if not isinstance(v, RadScalar) else v.to_float() for v in edge_vals)
    by_partition_f = sum(
        m * (float(v) if not isinstance(v, RadScalar) else v.to_float()) for v, m in part_vals
    )
    if abs(by_edge_f - by_partition_f) > 1e-9 * max(1.0, abs(by_edge_f)):
        raise MPolyTopoError(
            f"edge-sum route {by_edge_f} disagrees with partition-sum route {by_partition_f}"
        )
    return by_edge_f


def read_edge_list(text: str) -> SimpleGraph:
    """Parse whitespace-separated vertex-id pairs, one edge per line.

    '#' starts a comment; blank lines are skipped.  Vertex ids are
    non-negative integers and the graph spans 0..max id.  Self-loops and
    duplicate edges (in either order) are rejected.
    """
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise EdgeListParseError(f"line {lineno}: non-integer token in {raw!r}") from exc
        if u < 0 or v < 0:
            raise EdgeListParseError(f"line {lineno}: vertex ids must be >= 0, got {raw!r}")
        if u == v:
            raise EdgeListFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append(key)
    return SimpleGraph.from_edges(edges)


def random_connected_graph(n: int, rng: random.Random, extra_edges: int | None = None) -> SimpleGraph:
    """Random connected simple graph: a random recursive tree plus extra edges.

    With extra_edges=None a uniformly random number of the remaining vertex
    pairs is added, so densities range from tree to complete.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    rest = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    if extra_edges is None:
        extra_edges = rng.randint(0, len(rest))
    edges.update(rng.sample(rest, min(extra_edges, len(rest))))
    return SimpleGraph(n, sorted(edges))
