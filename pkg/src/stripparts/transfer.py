"""Column-by-column dynamic programming over coloring/connectivity states.

A column state records the color of every base vertex in the current
column together with the partition of that column into classes that are
connected through the strip built so far (via same-color paths only).
Class labels are canonical restricted-growth style: reading rows from 0
upward, first occurrences appear in increasing order 0, 1, 2, ...

Appending a column either continues an old class through a same-colored
contact or seals it.  A sealed class is a finished piece of the final
partition and contributes one factor of y; when the strip ends, every
class still open closes and contributes its own factor of y.  Summing
those weights over all colorings of the appended columns yields, for each
strip length, the exact polynomial whose y^i coefficient counts the
colorings splitting into i pieces.
"""

from __future__ import annotations

import multiprocessing
from itertools import product as iproduct
from typing import NamedTuple

from .errors import StateCapExceededError
from .graphs import BaseGraph
from .polynomials import YPoly

DEFAULT_STATE_CAP = 200_000


class ColumnState(NamedTuple):
    """Coloring of one column plus its canonical connectivity classes."""

    coloring: tuple[int, ...]
    blocks: tuple[int, ...]

    @property
    def block_count(self) -> int:
        return max(self.blocks) + 1


def canonical_rgs(labels) -> tuple[int, ...]:
    """Relabel arbitrary class labels in first-occurrence order."""
    mapping: dict = {}
    out = []
    for lab in labels:
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out.append(mapping[lab])
    return tuple(out)


def check_state(graph: BaseGraph, k: int, state: ColumnState) -> None:
    """Raise ValueError unless the state satisfies every invariant."""
    m = graph.vertex_count
    coloring, blocks = state
    if len(coloring) != m:
        raise ValueError(f"coloring length {len(coloring)} != vertex count {m}")
    if len(blocks) != m:
        raise ValueError(f"block vector length {len(blocks)} != vertex count {m}")
    if any(not (0 <= c < k) for c in coloring):
        raise ValueError(f"coloring {coloring} has entries outside 0..{k - 1}")
    nxt = 0
    for b in blocks:
        if b < 0 or b > nxt:
            raise ValueError(f"block labels {blocks} not in first-occurrence order")
        if b == nxt:
            nxt += 1
    for i in range(m):
        for j in range(i + 1, m):
            if blocks[i] == blocks[j] and coloring[i] != coloring[j]:
                raise ValueError(f"block {blocks[i]} mixes colors in state {state}")
    for u, v in graph.edge_list:
        if coloring[u] == coloring[v] and blocks[u] != blocks[v]:
            raise ValueError(
                f"same-colored adjacent vertices {u},{v} fall in different blocks"
            )


def initial_states(graph: BaseGraph, k: int) -> dict[ColumnState, YPoly]:
    """All single-column states, one per coloring, each with weight 1."""
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    m = graph.vertex_count
    out: dict[ColumnState, YPoly] = {}
    for coloring in iproduct(range(k), repeat=m):
        parent = list(range(m))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in graph.edge_list:
            if coloring[u] == coloring[v]:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[rv] = ru
        blocks = canonical_rgs([find(v) for v in range(m)])
        out[ColumnState(coloring, blocks)] = YPoly.one()
    return out


def transition(
    graph: BaseGraph, k: int, state: ColumnState, new_coloring
) -> tuple[ColumnState, int]:
    """Append one column; return the successor state and the number of old
    classes sealed by the step (each sealed class is worth one factor of y).
    """
    m = graph.vertex_count
    nc = tuple(new_coloring)
    if len(nc) != m:
        raise ValueError(f"coloring length {len(nc)} != vertex count {m}")
    if any(not (0 <= c < k) for c in nc):
        raise ValueError(f"coloring {nc} has entries outside 0..{k - 1}")
    if len(state.coloring) != m or len(state.blocks) != m:
        raise ValueError(f"state {state} does not fit a {m}-vertex base graph")
    nblocks = max(state.blocks) + 1
    parent = list(range(m + nblocks))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    # joins inside the new column
    for u, v in graph.edge_list:
        if nc[u] == nc[v]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[rv] = ru
    # same-colored horizontal contacts continue old classes
    for u in range(m):
        if state.coloring[u] == nc[u]:
            ru, rv = find(u), find(m + state.blocks[u])
            if ru != rv:
                parent[rv] = ru
    new_roots = [find(u) for u in range(m)]
    alive = set(new_roots)
    closed = sum(1 for b in range(nblocks) if find(m + b) not in alive)
    return ColumnState(nc, canonical_rgs(new_roots)), closed


# === series computation ===


def _closing_sum(weighted: dict[ColumnState, YPoly]) -> YPoly:
    """Close every open class of every state: sum of weight * y^classes."""
    acc = YPoly.zero()
    for state, weight in weighted.items():
        acc = acc + weight.shift(state.block_count)
    return acc


def _step_worker(entries) -> dict[ColumnState, tuple[int, ...]]:
    """Apply cached transition rows to a chunk of weighted states."""
    acc: dict[ColumnState, list[int]] = {}
    for wcoeffs, row in entries:
        for target, closed in row:
            cur = acc.get(target)
            if cur is None:
                acc[target] = [0] * closed + list(wcoeffs)
            else:
                need = closed + len(wcoeffs)
                if len(cur) < need:
                    cur.extend([0] * (need - len(cur)))
                for i, c in enumerate(wcoeffs):
                    cur[closed + i] += c
    return {t: tuple(v) for t, v in acc.items()}


def series(
    graph: BaseGraph,
    k: int,
    n_max: int,
    *,
    state_cap: int = DEFAULT_STATE_CAP,
    workers: int = 1,
) -> list[YPoly]:
    """Partition-count polynomials for strip lengths 0..n_max.

    Entry n is the polynomial whose y^i coefficient counts the colorings
    of G x P_n with exactly i monochromatic pieces; entry 0 is the
    constant 1 (empty strip), kept so recurrence guessing lines up with
    plain list indexing.  The result does not depend on the worker count.
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    if n_max < 1:
        raise ValueError(f"strip length must be positive, got {n_max}")
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    m = graph.vertex_count
    if k**m > state_cap:
        raise StateCapExceededError(
            f"{k**m} single-column states exceed the cap of {state_cap}"
        )
    current = initial_states(graph, k)
    out = [YPoly.one(), _closing_sum(current)]
    if n_max == 1:
        return out
    colorings = tuple(iproduct(range(k), repeat=m))
    rows: dict[ColumnState, tuple[tuple[ColumnState, int], ...]] = {}
    pool = None
    try:
        if workers > 1:
            pool = multiprocessing.get_context("fork").Pool(workers)
        for _ in range(2, n_max + 1):
            for s in current:
                if s not in rows:
                    rows[s] = tuple(transition(graph, k, s, c) for c in colorings)
            if len(rows) > state_cap:
                raise StateCapExceededError(
                    f"{len(rows)} reachable column states exceed the cap of {state_cap}"
                )
            if pool is None or len(current) < 2:
                nxt: dict[ColumnState, YPoly] = {}
                for s, w in current.items():
                    for target, closed in rows[s]:
                        p = w.shift(closed)
                        nxt[target] = nxt[target] + p if target in nxt else p
            else:
                items = list(current.items())
                chunk = (len(items) + workers - 1) // workers
                jobs = [
                    [(w.coeffs, rows[s]) for s, w in items[i : i + chunk]]
                    for i in range(0, len(items), chunk)
                ]
                nxt = {}
                for part in pool.map(_step_worker, jobs):
                    for target, coeffs in part.items():
                        p = YPoly(coeffs)
                        nxt[target] = nxt[target] + p if target in nxt else p
            current = nxt
            out.append(_closing_sum(current))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return out


# === explicit matrix form ===


def transfer_matrix(
    graph: BaseGraph, k: int, *, state_cap: int = DEFAULT_STATE_CAP
) -> tuple[list[ColumnState], list[list[YPoly]], list[YPoly], list[YPoly]]:
    """States plus (matrix, init, final) so that final . matrix^(n-1) . init
    reproduces the series term for strip length n.

    matrix[j][i] sums y^closed over all one-column transitions from state
    i to state j.  States are listed in discovery order: the single-column
    states sorted lexicographically, then breadth-first closure with new
    colorings tried in lexicographic order.
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    m = graph.vertex_count
    if k**m > state_cap:
        raise StateCapExceededError(
            f"{k**m} single-column states exceed the cap of {state_cap}"
        )
    start = initial_states(graph, k)
    states: list[ColumnState] = sorted(start)
    index = {s: i for i, s in enumerate(states)}
    colorings = tuple(iproduct(range(k), repeat=m))
    entries: dict[tuple[int, int], YPoly] = {}
    i = 0
    while i < len(states):
        s = states[i]
        for c in colorings:
            target, closed = transition(graph, k, s, c)
            j = index.get(target)
            if j is None:
                j = len(states)
                index[target] = j
                states.append(target)
                if len(states) > state_cap:
                    raise StateCapExceededError(
                        f"{len(states)} reachable column states exceed the cap of {state_cap}"
                    )
            mono = YPoly.monomial(1, closed)
            key = (j, i)
            entries[key] = entries[key] + mono if key in entries else mono
        i += 1
    size = len(states)
    matrix = [[YPoly.zero() for _ in range(size)] for _ in range(size)]
    for (j, i2), p in entries.items():
        matrix[j][i2] = p
    init = [YPoly.one() if s in start else YPoly.zero() for s in states]
    final = [YPoly.monomial(1, s.block_count) for s in states]
    return states, matrix, init, final
