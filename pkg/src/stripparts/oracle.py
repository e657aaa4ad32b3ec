"""Exhaustive counting oracle over explicit colorings.

Counts vertex colorings of the strip product G x P_n grouped by the number
of maximal same-color connected pieces.  Every coloring splits the product
uniquely into such pieces, and conversely a partition into connected
monochromatic pieces whose touching pieces carry distinct colors comes
from exactly one coloring; the histogram produced here therefore counts
colored partitions by size.  The enumeration is deliberately simple: it
walks every coloring in mixed-radix (base-k) order over the flattened
vertex index and runs union-find over the product edges whose endpoints
received equal colors.

For large ranges the same per-coloring loop is compiled with numba; the
pure Python path stays the reference and both are compared in the tests.
"""

from __future__ import annotations

import multiprocessing

from .errors import BudgetExceededError
from .graphs import BaseGraph, product_edges
from .polynomials import YPoly

DEFAULT_ORACLE_BUDGET = 10**8

# ranges at least this large go through the compiled kernel when available
_JIT_THRESHOLD = 50_000


class UnionFind:
    """Disjoint sets with path compression and union by size."""

    __slots__ = ("parent", "size", "count")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


def component_count(graph: BaseGraph, n: int, coloring) -> int:
    """Number of maximal same-color connected pieces of one coloring.

    The coloring is a flat sequence over column*m + row indices.
    """
    m = graph.vertex_count
    total = m * n
    if len(coloring) != total:
        raise ValueError(f"coloring has {len(coloring)} entries, expected {total}")
    uf = UnionFind(total)
    for u, v in product_edges(graph, n):
        if coloring[u] == coloring[v]:
            uf.union(u, v)
    return uf.count


# === histogram kernels ===


def _histogram_python(k: int, mn: int, eu, ev, lo: int, hi: int) -> list[int]:
    """Reference kernel: component-count histogram over colorings [lo, hi)."""
    hist = [0] * (mn + 1)
    digits = [0] * mn
    idx = lo
    for j in range(mn):
        digits[j] = idx % k
        idx //= k
    nedges = len(eu)
    for _ in range(lo, hi):
        uf = UnionFind(mn)
        for e in range(nedges):
            u, v = eu[e], ev[e]
            if digits[u] == digits[v]:
                uf.union(u, v)
        hist[uf.count] += 1
        j = 0
        while j < mn:
            digits[j] += 1
            if digits[j] == k:
                digits[j] = 0
                j += 1
            else:
                break
    return hist


_NUMBA_KERNEL = None


def _get_numba_kernel():
    """Compile the histogram kernel once per process; None if numba is absent."""
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is not None:
        return _NUMBA_KERNEL
    try:
        import numba
        import numpy as np
    except ImportError:
        return None

    @numba.njit(numba.int64[:](numba.int64, numba.int64, numba.int64[:], numba.int64[:], numba.int64, numba.int64))
    def kernel(k, mn, eu, ev, lo, hi):  # pragma: no cover - compiled
        hist = np.zeros(mn + 1, dtype=np.int64)
        digits = np.zeros(mn, dtype=np.int64)
        idx = lo
        for j in range(mn):
            digits[j] = idx % k
            idx //= k
        parent = np.empty(mn, dtype=np.int64)
        size = np.empty(mn, dtype=np.int64)
        nedges = eu.shape[0]
        for _ in range(lo, hi):
            for v in range(mn):
                parent[v] = v
                size[v] = 1
            comps = mn
            for e in range(nedges):
                u = eu[e]
                v = ev[e]
                if digits[u] == digits[v]:
                    ru = u
                    while parent[ru] != ru:
                        parent[ru] = parent[parent[ru]]
                        ru = parent[ru]
                    rv = v
                    while parent[rv] != rv:
                        parent[rv] = parent[parent[rv]]
                        rv = parent[rv]
                    if ru != rv:
                        if size[ru] < size[rv]:
                            ru, rv = rv, ru
                        parent[rv] = ru
                        size[ru] += size[rv]
                        comps -= 1
            hist[comps] += 1
            j = 0
            while j < mn:
                digits[j] += 1
                if digits[j] == k:
                    digits[j] = 0
                    j += 1
                else:
                    break
        return hist

    _NUMBA_KERNEL = kernel
    return kernel


def _run_range(k: int, mn: int, eu, ev, lo: int, hi: int, use_jit: bool) -> list[int]:
    """Histogram one contiguous coloring range with the selected kernel."""
    if hi <= lo:
        return [0] * (mn + 1)
    if use_jit:
        kernel = _get_numba_kernel()
        if kernel is not None:
            import numpy as np

            out = kernel(
                k, mn, np.asarray(eu, dtype=np.int64), np.asarray(ev, dtype=np.int64), lo, hi
            )
            return [int(c) for c in out]
    return _histogram_python(k, mn, eu, ev, lo, hi)


def _chunk_worker(args) -> list[int]:
    k, mn, eu, ev, lo, hi, use_jit = args
    return _run_range(k, mn, eu, ev, lo, hi, use_jit)


def oracle_distribution(
    graph: BaseGraph,
    k: int,
    n: int,
    *,
    budget: int = DEFAULT_ORACLE_BUDGET,
    workers: int = 1,
    engine: str = "auto",
) -> YPoly:
    """Partition counts by size as a polynomial: coefficient of y**i is the
    number of colorings of G x P_n with exactly i monochromatic pieces.

    Enumerates all k**(m*n) colorings; raises BudgetExceededError first when
    that count exceeds the budget.  The result does not depend on the worker
    count or kernel choice (contiguous chunks are summed in order).
    """
    if k < 1:
        raise ValueError(f"color count must be positive, got {k}")
    if n < 1:
        raise ValueError(f"strip length must be positive, got {n}")
    if engine not in ("auto", "python", "jit"):
        raise ValueError(f"unknown engine {engine!r}")
    m = graph.vertex_count
    mn = m * n
    total = k**mn
    if total > budget:
        raise BudgetExceededError(
            f"enumeration needs {total} colorings but the budget is {budget}"
        )
    edges = product_edges(graph, n)
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    use_jit = engine == "jit" or (engine == "auto" and total >= _JIT_THRESHOLD)
    if engine == "jit" and _get_numba_kernel() is None:
        raise RuntimeError("jit engine requested but numba is not available")
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    if workers == 1 or total < 2 * workers:
        hist = _run_range(k, mn, eu, ev, 0, total, use_jit)
    else:
        if use_jit:
            _get_numba_kernel()  # compile in the parent before forking
        bounds = [total * i // workers for i in range(workers + 1)]
        jobs = [
            (k, mn, eu, ev, bounds[i], bounds[i + 1], use_jit) for i in range(workers)
        ]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers) as pool:
            parts = pool.map(_chunk_worker, jobs)
        hist = [0] * (mn + 1)
        for part in parts:
            for i, c in enumerate(part):
                hist[i] += c
    return YPoly(hist)
