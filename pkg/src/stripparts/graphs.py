"""Base graphs and the strip product adjacency.

The strip product of a base graph G (m vertices) with a path of n columns
has vertex set {0..m-1} x {0..n-1}; two vertices are adjacent when they
share a column and their rows form an edge of G, or share a row and sit in
consecutive columns.  The product is never materialized: everything below
answers adjacency questions from G alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple


class GraphSpecError(ValueError):
    """A graph description string or edge-list file could not be parsed."""


class ProductCoordinates(NamedTuple):
    """0-based position inside the strip product: (column, row)."""

    column: int
    row: int


@dataclass(frozen=True)
class BaseGraph:
    """Simple undirected graph on vertices 0..m-1.

    Edges are stored as a frozenset of (u, v) pairs with u < v, so two
    structurally equal graphs compare (and hash) equal.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        m = self.vertex_count
        if not isinstance(m, int) or m < 1:
            raise GraphSpecError(f"vertex count must be a positive integer, got {m!r}")
        for e in self.edges:
            if len(e) != 2:
                raise GraphSpecError(f"edge {e!r} is not a pair")
            u, v = e
            if not (0 <= u < m and 0 <= v < m):
                raise GraphSpecError(f"edge {e!r} out of range for {m} vertices")
            if u == v:
                raise GraphSpecError(f"loop edge {e!r} not allowed")
            if u > v:
                raise GraphSpecError(f"edge {e!r} not in canonical (u < v) order")

    # ---- constructors ----

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "BaseGraph":
        """Build from any iterable of pairs; orientation is normalized."""
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphSpecError(f"loop edge ({u}, {v}) not allowed")
            canon.add((min(u, v), max(u, v)))
        return cls(vertex_count, frozenset(canon))

    @classmethod
    def path(cls, m: int) -> "BaseGraph":
        """Path graph P_m (no edges when m = 1)."""
        if m < 1:
            raise GraphSpecError(f"path graph needs at least 1 vertex, got {m}")
        return cls(m, frozenset((i, i + 1) for i in range(m - 1)))

    @classmethod
    def cycle(cls, m: int) -> "BaseGraph":
        """Cycle graph C_m; needs m >= 3 to stay simple."""
        if m < 3:
            raise GraphSpecError(f"cycle graph needs at least 3 vertices, got {m}")
        return cls(m, frozenset({(i, i + 1) for i in range(m - 1)} | {(0, m - 1)}))

    @classmethod
    def complete(cls, m: int) -> "BaseGraph":
        """Complete graph K_m."""
        if m < 1:
            raise GraphSpecError(f"complete graph needs at least 1 vertex, got {m}")
        return cls(m, frozenset((i, j) for i in range(m) for j in range(i + 1, m)))

    # ---- derived views ----

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """Edges in sorted order, for deterministic iteration."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor tuple per vertex, sorted."""
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edge_list:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges


# === description strings ===


def parse_graph_spec(text: str) -> BaseGraph:
    """Parse ``path:m``, ``cycle:m``, ``complete:m`` or ``file:<path>``."""
    kind, sep, arg = text.partition(":")
    if not sep:
        raise GraphSpecError(
            f"graph spec {text!r} has no ':'; expected kind:argument"
        )
    if kind == "file":
        return load_edge_list(arg)
    builders = {"path": BaseGraph.path, "cycle": BaseGraph.cycle, "complete": BaseGraph.complete}
    if kind not in builders:
        raise GraphSpecError(
            f"unknown graph kind {kind!r}; expected path, cycle, complete or file"
        )
    try:
        m = int(arg, 10)
    except ValueError:
        raise GraphSpecError(f"graph spec {text!r}: {arg!r} is not an integer") from None
    return builders[kind](m)


def load_edge_list(path: str) -> BaseGraph:
    """Read a graph file: first line m, then one ``u v`` edge per line."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise GraphSpecError(f"cannot read graph file {path!r}: {exc}") from None
    lines = [ln.strip() for ln in raw.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphSpecError(f"graph file {path!r} is empty")
    try:
        m = int(lines[0], 10)
    except ValueError:
        raise GraphSpecError(
            f"graph file {path!r}: first line must be the vertex count, got {lines[0]!r}"
        ) from None
    if m < 1:
        raise GraphSpecError(f"graph file {path!r}: vertex count must be positive, got {m}")
    seen: set[tuple[int, int]] = set()
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 2:
            raise GraphSpecError(f"graph file {path!r}: bad edge line {ln!r}")
        try:
            u, v = int(fields[0], 10), int(fields[1], 10)
        except ValueError:
            raise GraphSpecError(f"graph file {path!r}: bad edge line {ln!r}") from None
        if u == v:
            raise GraphSpecError(f"graph file {path!r}: loop edge {ln!r} not allowed")
        if not (0 <= u < m and 0 <= v < m):
            raise GraphSpecError(f"graph file {path!r}: edge {ln!r} out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphSpecError(f"graph file {path!r}: duplicate edge {ln!r}")
        seen.add(key)
    return BaseGraph(m, frozenset(seen))


# === strip product adjacency ===


def product_vertex_count(graph: BaseGraph, n: int) -> int:
    return graph.vertex_count * n


def product_adjacent(graph: BaseGraph, n: int, a, b) -> bool:
    """Adjacency in the strip product, coordinates as (column, row)."""
    if n < 1:
        raise ValueError(f"strip length must be positive, got {n}")
    ca, ra = a
    cb, rb = b
    m = graph.vertex_count
    for col, row in ((ca, ra), (cb, rb)):
        if not (0 <= col < n):
            raise ValueError(f"column {col} out of range for strip length {n}")
        if not (0 <= row < m):
            raise ValueError(f"row {row} out of range for {m} rows")
    if ca == cb:
        return ra != rb and graph.has_edge(ra, rb)
    if ra == rb:
        return abs(ca - cb) == 1
    return False


def product_edges(graph: BaseGraph, n: int) -> list[tuple[int, int]]:
    """All strip product edges over flattened indices column*m + row."""
    if n < 1:
        raise ValueError(f"strip length must be positive, got {n}")
    m = graph.vertex_count
    out: list[tuple[int, int]] = []
    for col in range(n):
        base = col * m
        for u, v in graph.edge_list:
            out.append((base + u, base + v))
        if col + 1 < n:
            for row in range(m):
                out.append((base + row, base + m + row))
    return out
