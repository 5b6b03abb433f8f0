"""Rough approximations of Cayley and pseudo-Cayley graphs.

Three families are provided, all taken with respect to a normal subgroup N:

* ``edge``   -- keep the vertex set G, approximate the connection set S:
  lower ``(G; N_(S))``, upper ``(G; N^(S) - {1})``.
* ``vertex`` -- keep S, approximate the vertex set R:
  lower ``(N_(R); S ∩ N_(R))``, upper ``(N^(R); S)``.
* ``full``   -- approximate both: lower ``(N_(R); N_(S))``, upper
  ``(N^(R); N^(S) - {1})``.

Here ``N_`` is the lower and ``N^`` the upper approximation.  An empty
lower vertex set yields the graph with no vertices; the upper approximation
of the empty connection set is taken to be empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .approx import lower_mask, upper_mask
from .errors import GraphError, PreconditionError
from .graphs import (
    Graph,
    _approx_graph,
    cayley_graph,
    is_minimal_cayley_set,
    make_connection_set,
    pseudo_cayley_graph,
    pseudo_cayley_violation,
)
from .groups import ElementSet, FiniteGroup

Side = Literal["lower", "upper"]
Family = Literal["edge", "vertex", "full"]
FAMILIES = ("edge", "vertex", "full")


@dataclass(frozen=True)
class RoughGraphPair:
    lower: Graph
    upper: Graph
    modulus: ElementSet
    family: str
    original: Graph | None = None

    @property
    def definable(self) -> bool:
        return self.lower == self.upper


# -- mask-level families (no validation; shared with the law suite) --------


def edge_family_masks(G: FiniteGroup, n: int, s: int) -> tuple[int, int]:
    """``(lower S, upper S)`` for the edge family."""
    return lower_mask(G, n, s), upper_mask(G, n, s) & ~(1 << G.identity)


def vertex_family_masks(G: FiniteGroup, n: int, r: int, s: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """``((lower R, lower S), (upper R, upper S))`` for the vertex family."""
    lo = lower_mask(G, n, r)
    return (lo, s & lo), (upper_mask(G, n, r), s)


def full_family_masks(G: FiniteGroup, n: int, r: int, s: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """``((lower R, lower S), (upper R, upper S))`` for the full family."""
    lo_s, up_s = edge_family_masks(G, n, s)
    return (lower_mask(G, n, r), lo_s), (upper_mask(G, n, r), up_s)


def family_graphs(G: FiniteGroup, family: str, n: int, r: int, s: int) -> tuple[Graph, Graph]:
    """Unvalidated ``(lower, upper)`` graphs; ``r`` is ignored for ``edge``."""
    if family == "edge":
        lo_s, up_s = edge_family_masks(G, n, s)
        full = G._full
        return _approx_graph(G, full, lo_s), _approx_graph(G, full, up_s)
    if family == "vertex":
        (lr, ls), (ur, us) = vertex_family_masks(G, n, r, s)
    elif family == "full":
        (lr, ls), (ur, us) = full_family_masks(G, n, r, s)
    else:
        raise PreconditionError(f"unknown family {family!r}")
    return _approx_graph(G, lr, ls), _approx_graph(G, ur, us)


# -- public constructors ----------------------------------------------------


def _normal(G: FiniteGroup, N) -> ElementSet:
    N = G.subset(N)
    if not G.is_normal_mask(N.mask):
        raise PreconditionError(f"{N!r} is not a normal subgroup of {G.spec}")
    return N


def _pseudo_input(G: FiniteGroup, R, S) -> tuple[ElementSet, ElementSet, Graph]:
    R, S = G.subset(R), G.subset(S)
    return R, S, pseudo_cayley_graph(G, R, S)


def _graph_or_empty(G: FiniteGroup, rmask: int, smask: int) -> Graph:
    if not rmask:
        return Graph.empty(G, ElementSet(G, smask))
    return pseudo_cayley_graph(G, ElementSet(G, rmask), ElementSet(G, smask))


def rough_edge_cayley(G: FiniteGroup, N, S) -> RoughGraphPair:
    """Lower and upper edge approximations of the Cayley graph ``(G;S)``."""
    N = _normal(G, N)
    S = make_connection_set(G, S)
    if not S:
        raise PreconditionError("the edge family needs a nonempty connection set")
    lo_s, up_s = edge_family_masks(G, N.mask, S.mask)
    return RoughGraphPair(
        lower=cayley_graph(G, G.from_mask(lo_s)),
        upper=cayley_graph(G, G.from_mask(up_s)),
        modulus=N,
        family="edge",
        original=cayley_graph(G, S),
    )


def rough_vertex_pseudo(G: FiniteGroup, N, R, S) -> RoughGraphPair:
    """Vertex approximations of the pseudo-Cayley graph ``(R;S)``."""
    N = _normal(G, N)
    R, S, original = _pseudo_input(G, R, S)
    (lr, ls), (ur, us) = vertex_family_masks(G, N.mask, R.mask, S.mask)
    return RoughGraphPair(
        lower=_graph_or_empty(G, lr, ls),
        upper=_graph_or_empty(G, ur, us),
        modulus=N,
        family="vertex",
        original=original,
    )


def rough_pseudo(G: FiniteGroup, N, R, S) -> RoughGraphPair:
    """Vertex-and-edge approximations of the pseudo-Cayley graph ``(R;S)``."""
    N = _normal(G, N)
    R, S, original = _pseudo_input(G, R, S)
    (lr, ls), (ur, us) = full_family_masks(G, N.mask, R.mask, S.mask)
    return RoughGraphPair(
        lower=_graph_or_empty(G, lr, ls),
        upper=_graph_or_empty(G, ur, us),
        modulus=N,
        family="full",
        original=original,
    )


def rough_graph_pair(G: FiniteGroup, family: str, N, S, R=None) -> RoughGraphPair:
    """Dispatch on ``family``; ``R`` is required for ``vertex`` and ``full``."""
    if family == "edge":
        return rough_edge_cayley(G, N, S)
    if R is None:
        raise PreconditionError(f"the {family} family needs a vertex set R")
    if family == "vertex":
        return rough_vertex_pseudo(G, N, R, S)
    if family == "full":
        return rough_pseudo(G, N, R, S)
    raise PreconditionError(f"unknown family {family!r}")


# -- predicates -------------------------------------------------------------


def _side(side: str) -> None:
    if side not in ("lower", "upper"):
        raise PreconditionError(f"side must be 'lower' or 'upper', got {side!r}")


def _edge_set(G: FiniteGroup, N, S, side: str) -> int:
    _side(side)
    N = _normal(G, N)
    S = make_connection_set(G, S)
    lo_s, up_s = edge_family_masks(G, N.mask, S.mask)
    return up_s if side == "upper" else lo_s


def is_edge_rough_generating(G: FiniteGroup, N, S, side: Side = "upper") -> bool:
    """The approximated connection set generates ``G``."""
    return G.closure_mask(_edge_set(G, N, S, side)) == G._full


def is_edge_rough_optimal(G: FiniteGroup, N, S, side: Side = "upper") -> bool:
    """The approximated connection set is a minimal Cayley set for ``G``."""
    return is_minimal_cayley_set(G, G.from_mask(_edge_set(G, N, S, side)))


def _vertex_target(G: FiniteGroup, N, R, S, side: str) -> tuple[ElementSet, int, int]:
    _side(side)
    N = _normal(G, N)
    R, S = G.subset(R), G.subset(S)
    problem = pseudo_cayley_violation(G, R.mask, S.mask)
    if problem:
        raise GraphError(problem)
    k = upper_mask(G, N.mask, R.mask) if side == "upper" else lower_mask(G, N.mask, R.mask)
    return N, k, S.mask


def is_vertex_rough_generating(G: FiniteGroup, N, R, S, side: Side = "upper") -> bool:
    """The approximation of ``R`` is a subgroup and ``S`` generates it."""
    _, k, s = _vertex_target(G, N, R, S, side)
    return bool(k) and G.is_subgroup_mask(k) and G.closure_mask(s) == k


def is_vertex_rough_optimal(G: FiniteGroup, N, R, S, side: Side = "upper") -> bool:
    """The approximation of ``R`` is a subgroup with ``S`` a minimal Cayley set for it."""
    _, k, s = _vertex_target(G, N, R, S, side)
    if not k or not G.is_subgroup_mask(k):
        return False
    return is_minimal_cayley_set(G, G.from_mask(s), within=G.from_mask(k))


def _full_sets(G: FiniteGroup, N, R, S, side: str) -> tuple[int, int]:
    N, k, s = _vertex_target(G, N, R, S, side)
    lo_s, up_s = edge_family_masks(G, N.mask, s)
    return k, (up_s if side == "upper" else lo_s)


def is_rough_generating(G: FiniteGroup, N, R, S, side: Side = "upper") -> bool:
    """The approximation of ``R`` is a subgroup generated by the approximation of ``S``."""
    k, s = _full_sets(G, N, R, S, side)
    return bool(k) and G.is_subgroup_mask(k) and G.closure_mask(s) == k


def is_rough_optimal(G: FiniteGroup, N, R, S, side: Side = "upper") -> bool:
    """Like :func:`is_rough_generating` but requiring a minimal Cayley set."""
    k, s = _full_sets(G, N, R, S, side)
    if not k or not G.is_subgroup_mask(k):
        return False
    return is_minimal_cayley_set(G, G.from_mask(s), within=G.from_mask(k))


def orbit_condition(G: FiniteGroup, nmask: int, rmask: int, smask: int) -> bool:
    """Mask-level ``N_(R) ≠ ∅`` and ``<S>r = R`` for some ``r`` in ``R``."""
    if not lower_mask(G, nmask, rmask):
        return False
    k = G.closure_mask(smask)
    for r in range(G.order):
        if rmask >> r & 1 and G.product_mask(k, 1 << r) == rmask:
            return True
    return False


def is_definable_by_orbit(G: FiniteGroup, N, R, S) -> bool:
    """Sufficient condition for ``R`` to be definable.

    True iff the lower approximation of ``R`` is nonempty and ``R`` is a
    single orbit ``<S>r``.  The condition is not necessary: compare with
    :func:`roughcayley.approx.is_definable`.
    """
    N = _normal(G, N)
    R, S = G.subset(R), G.subset(S)
    problem = pseudo_cayley_violation(G, R.mask, S.mask)
    if problem:
        raise GraphError(problem)
    return orbit_condition(G, N.mask, R.mask, S.mask)
