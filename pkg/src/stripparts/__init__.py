"""Exact counting of k-colored partitions of strip products G x P_n.

A k-colored partition splits the strip into connected monochromatic
pieces, touching pieces colored differently; such partitions correspond
one-to-one with vertex k-colorings.  The package counts them by size with
exact integer arithmetic, via two independent engines (exhaustive
enumeration and a column-state transfer method), reconstructs the
rational generating function in (x, y), and derives totals and expected
piece counts.
"""

from .errors import BudgetExceededError, ResourceLimitError, StateCapExceededError
from .genfun import (
    GRID_GF,
    TRIANGLE_GF,
    DegenerateGFError,
    GFVerificationError,
    RationalGF,
    RecurrenceNotFoundError,
    eval_gf_at_y1,
    expected_size,
    gf_equiv,
    guess_recurrence,
    matches_series,
    rational_gf,
    triangle_expected_size,
)
from .graphs import (
    BaseGraph,
    GraphSpecError,
    ProductCoordinates,
    load_edge_list,
    parse_graph_spec,
    product_adjacent,
    product_edges,
    product_vertex_count,
)
from .oracle import (
    DEFAULT_ORACLE_BUDGET,
    UnionFind,
    component_count,
    oracle_distribution,
)
from .polynomials import XYPoly, YPoly, poly_gcd, poly_lcm, solve_linear_system
from .transfer import (
    DEFAULT_STATE_CAP,
    ColumnState,
    canonical_rgs,
    check_state,
    initial_states,
    series,
    transfer_matrix,
    transition,
)

__version__ = "0.1.0"

__all__ = [
    "BaseGraph",
    "BudgetExceededError",
    "ColumnState",
    "DEFAULT_ORACLE_BUDGET",
    "DEFAULT_STATE_CAP",
    "DegenerateGFError",
    "GFVerificationError",
    "GRID_GF",
    "GraphSpecError",
    "ProductCoordinates",
    "RationalGF",
    "RecurrenceNotFoundError",
    "ResourceLimitError",
    "StateCapExceededError",
    "TRIANGLE_GF",
    "UnionFind",
    "XYPoly",
    "YPoly",
    "canonical_rgs",
    "check_state",
    "component_count",
    "eval_gf_at_y1",
    "expected_size",
    "gf_equiv",
    "guess_recurrence",
    "initial_states",
    "load_edge_list",
    "matches_series",
    "oracle_distribution",
    "parse_graph_spec",
    "poly_gcd",
    "poly_lcm",
    "product_adjacent",
    "product_edges",
    "product_vertex_count",
    "rational_gf",
    "series",
    "solve_linear_system",
    "transfer_matrix",
    "transition",
    "triangle_expected_size",
]
