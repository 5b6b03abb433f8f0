"""Executable algebraic laws for approximations and rough graphs.

Every law is checked over a domain drawn from one group: all normal
subgroups, subsets, connection sets, subgroups and valid ``(R;S)`` pairs
when the group is small enough (``exhaustive``), otherwise a seeded random
sample of configurations.  :func:`run_laws` tallies cases and keeps the first
violating configuration of each law as a witness; domains are enumerated
smallest-first, so that witness is also a small one.

Graphs are handled here as ``(vertex mask, edge mask)`` tuples, which is all
that graph equality and inclusion look at.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .approx import lower_mask, upper_mask
from .errors import PreconditionError
from .graphs import (
    Graph,
    closed_vertex_sets,
    close_vertex_set,
    connection_set_violation,
    edge_connectivity,
    edge_mask_for,
    enumerate_connection_sets,
    is_connected,
    is_minimal_cayley_set,
    min_degree,
    pseudo_cayley_violation,
)
from .groups import FiniteGroup, _subgroup_masks, iter_bits
from .rough_graphs import (
    edge_family_masks,
    full_family_masks,
    orbit_condition,
    vertex_family_masks,
)

#: Groups up to this order are swept exhaustively by default.
EXHAUSTIVE_LIMIT = 8
#: Random configurations per law for larger groups.
DEFAULT_SAMPLES = 500
#: Connection sets are enumerated up front, which stops being feasible here.
MAX_LAW_ORDER = 16

LAWS: dict[str, str] = {
    # set approximations
    "set.sandwich": "lower(A) ⊆ A ⊆ upper(A)",
    "set.upper_union": "upper(A ∪ B) = upper(A) ∪ upper(B)",
    "set.lower_intersection": "lower(A ∩ B) = lower(A) ∩ lower(B)",
    "set.lower_monotone": "A ⊆ B ⇒ lower(A) ⊆ lower(B)",
    "set.upper_monotone": "A ⊆ B ⇒ upper(A) ⊆ upper(B)",
    "set.lower_union_superset": "lower(A) ∪ lower(B) ⊆ lower(A ∪ B)",
    "set.upper_intersection_subset": "upper(A ∩ B) ⊆ upper(A) ∩ upper(B)",
    "set.upper_modulus_monotone": "N ⊆ H ⇒ N-upper(A) ⊆ H-upper(A)",
    "set.lower_modulus_antitone": "N ⊆ H ⇒ H-lower(A) ⊆ N-lower(A)",
    "set.meet_modulus_upper": "(H ∩ N)-upper(A) = H-upper(A) ∩ N-upper(A)",
    "set.meet_modulus_lower": "(H ∩ N)-lower(A) = H-lower(A) ∩ N-lower(A)",
    "set.meet_modulus_upper_inclusion": "(H ∩ N)-upper(A) ⊆ H-upper(A) ∩ N-upper(A)",
    "set.meet_modulus_lower_inclusion": "H-lower(A) ∪ N-lower(A) ⊆ (H ∩ N)-lower(A)",
    "set.upper_of_subgroup": "A subgroup ⇒ upper(A) subgroup",
    "set.upper_of_normal": "A normal ⇒ upper(A) normal",
    "set.lower_of_subgroup": "A subgroup, N ⊆ A ⇒ lower(A) subgroup",
    "set.lower_of_normal": "A normal, N ⊆ A ⇒ lower(A) normal",
    "set.coset_saturated": "lower(A), upper(A) are unions of cosets of N",
    "set.idempotent": "upper(upper(A)) = upper(A); lower(lower(A)) = lower(A) if nonempty",
    # Cayley and pseudo-Cayley graphs
    "cayley.connected_iff_generates": "(G;S) connected ⇔ <S> = G",
    "cayley.union": "(G;S1) ∪ (G;S2) = (G;S1 ∪ S2)",
    "cayley.intersection": "(G;S1) ∩ (G;S2) = (G;S1 ∩ S2)",
    "cayley.subgroup_union": "(H1;S) ∪ (H2;S) = (H1 ∪ H2;S)",
    "cayley.subgroup_intersection": "(H1;S) ∩ (H2;S) = (H1 ∩ H2;S)",
    "cayley.subgroup_meet": "(H1;S1) ∩ (H2;S2) = (H1 ∩ H2;S1 ∩ S2)",
    "cayley.subgraph_iff_connection_subset": "(G;S1) ⊆ (G;S2) ⇔ S1 ⊆ S2",
    "cayley.subgraph_iff_vertex_subset": "(H1;S) ⊆ (H2;S) ⇔ H1 ⊆ H2",
    "cayley.regular": "every vertex of (G;S) has degree |S|",
    "cayley.minimal_implies_optimal": "S minimal Cayley set ⇒ λ(G;S) = δ(G;S)",
    # edge family
    "edge.valid": "lower and upper connection sets are valid connection sets",
    "edge.sandwich": "lower ⊆ X ⊆ upper",
    "edge.upper_union": "upper(X1 ∪ X2) = upper(X1) ∪ upper(X2)",
    "edge.lower_intersection": "lower(X1 ∩ X2) = lower(X1) ∩ lower(X2)",
    "edge.lower_monotone": "X1 ⊆ X2 ⇒ lower(X1) ⊆ lower(X2)",
    "edge.upper_monotone": "X1 ⊆ X2 ⇒ upper(X1) ⊆ upper(X2)",
    "edge.lower_union_superset": "lower(X1) ∪ lower(X2) ⊆ lower(X1 ∪ X2)",
    "edge.upper_intersection_subset": "upper(X1 ∩ X2) ⊆ upper(X1) ∩ upper(X2)",
    "edge.upper_modulus_monotone": "N ⊆ H ⇒ N-upper(X) ⊆ H-upper(X)",
    "edge.lower_modulus_antitone": "N ⊆ H ⇒ H-lower(X) ⊆ N-lower(X)",
    "edge.meet_modulus_upper": "(H ∩ N)-upper(X) = H-upper(X) ∩ N-upper(X)",
    "edge.meet_modulus_lower": "(H ∩ N)-lower(X) = H-lower(X) ∩ N-lower(X)",
    "edge.meet_modulus_upper_inclusion": "(H ∩ N)-upper(X) ⊆ H-upper(X) ∩ N-upper(X)",
    "edge.meet_modulus_lower_inclusion": "H-lower(X) ∪ N-lower(X) ⊆ (H ∩ N)-lower(X)",
    "edge.generating_implies_connected": "approximated S generates G ⇒ approximation connected",
    "edge.optimal_implies_optimal_connected": "approximated S minimal ⇒ approximation has λ = δ",
    # vertex family
    "vertex.valid": "lower and upper are pseudo-Cayley graphs",
    "vertex.sandwich": "lower ⊆ X ⊆ upper",
    "vertex.upper_union": "upper(X1 ∪ X2) = upper(X1) ∪ upper(X2)",
    "vertex.lower_intersection": "lower(X1 ∩ X2) = lower(X1) ∩ lower(X2)",
    "vertex.lower_monotone": "X1 ⊆ X2 ⇒ lower(X1) ⊆ lower(X2)",
    "vertex.upper_monotone": "X1 ⊆ X2 ⇒ upper(X1) ⊆ upper(X2)",
    "vertex.lower_union_superset": "lower(X1) ∪ lower(X2) ⊆ lower(X1 ∪ X2)",
    "vertex.upper_intersection_subset": "upper(X1 ∩ X2) ⊆ upper(X1) ∩ upper(X2)",
    "vertex.upper_modulus_monotone": "N ⊆ H ⇒ N-upper(X) ⊆ H-upper(X)",
    "vertex.lower_modulus_antitone": "N ⊆ H ⇒ H-lower(X) ⊆ N-lower(X)",
    "vertex.meet_modulus_upper": "(H ∩ N)-upper(X) = H-upper(X) ∩ N-upper(X)",
    "vertex.meet_modulus_lower": "(H ∩ N)-lower(X) = H-lower(X) ∩ N-lower(X)",
    "vertex.meet_modulus_upper_inclusion": "(H ∩ N)-upper(X) ⊆ H-upper(X) ∩ N-upper(X)",
    "vertex.meet_modulus_lower_inclusion": "H-lower(X) ∪ N-lower(X) ⊆ (H ∩ N)-lower(X)",
    "vertex.exact_iff_modulus_inside": "X = (H;S), H ≤ G: N ⊆ H ⇔ lower = X = upper",
    "vertex.empty_iff_modulus_outside": "X = (H;S), H ≤ G: N ⊄ H ⇔ lower is empty",
    "vertex.orbit_implies_definable": "lower(R) ≠ ∅ and <S>r = R ⇒ R definable",
    "vertex.generating_implies_connected": "vertex rough generating ⇒ approximation connected",
    "vertex.optimal_implies_optimal_connected": "vertex rough optimal ⇒ approximation has λ = δ",
    # full family
    "full.valid": "lower and upper are pseudo-Cayley graphs",
    "full.sandwich": "lower ⊆ X ⊆ upper",
    "full.lower_intersection": "lower(X1 ∩ X2) = lower(X1) ∩ lower(X2)",
    "full.lower_monotone": "X1 ⊆ X2 ⇒ lower(X1) ⊆ lower(X2)",
    "full.upper_monotone": "X1 ⊆ X2 ⇒ upper(X1) ⊆ upper(X2)",
    "full.upper_intersection_subset": "upper(X1 ∩ X2) ⊆ upper(X1) ∩ upper(X2)",
    "full.upper_modulus_monotone": "N ⊆ H ⇒ N-upper(X) ⊆ H-upper(X)",
    "full.lower_modulus_antitone": "N ⊆ H ⇒ H-lower(X) ⊆ N-lower(X)",
    "full.meet_modulus_upper": "(H ∩ N)-upper(X) = H-upper(X) ∩ N-upper(X)",
    "full.meet_modulus_lower": "(H ∩ N)-lower(X) = H-lower(X) ∩ N-lower(X)",
    "full.meet_modulus_upper_inclusion": "(H ∩ N)-upper(X) ⊆ H-upper(X) ∩ N-upper(X)",
    "full.meet_modulus_lower_inclusion": "H-lower(X) ∪ N-lower(X) ⊆ (H ∩ N)-lower(X)",
    "full.matches_edge_on_subgroup": "N ⊆ H ≤ G, S ⊆ H: full pair of (H;S) = edge pair of (H;S)",
    "full.generating_implies_connected": "rough generating ⇒ approximation connected",
    "full.optimal_implies_optimal_connected": "rough optimal ⇒ approximation has λ = δ",
}


@dataclass
class LawResult:
    law: str
    description: str
    checked: int = 0
    violations: int = 0
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass
class GroupReport:
    group: str
    mode: str
    results: dict[str, LawResult] = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.results.values())


# -- domain context ----------------------------------------------------------


class LawContext:
    """Domains and memoised approximations for one group."""

    def __init__(
        self,
        G: FiniteGroup,
        *,
        exhaustive: bool | None = None,
        samples: int = DEFAULT_SAMPLES,
        seed: int = 0,
    ):
        self.G = G
        self.exhaustive = G.order <= EXHAUSTIVE_LIMIT if exhaustive is None else exhaustive
        self.samples = samples
        self.rng = random.Random(f"{seed}:{G.spec}:{G.order}")
        self.full = G._full
        self.e = 1 << G.identity
        subgroups = _subgroup_masks(G)
        self.subgroups = subgroups
        self.normals = [m for m in subgroups if G.is_normal_mask(m)]
        self.conns = [c.mask for c in enumerate_connection_sets(G)]
        self._lo: dict[tuple[int, int], int] = {}
        self._up: dict[tuple[int, int], int] = {}
        self._pseudo: list[tuple[int, int]] | None = None
        self._by_s: dict[int, list[int]] | None = None

    # memoised approximations
    def lo(self, n: int, a: int) -> int:
        key = (n, a)
        v = self._lo.get(key)
        if v is None:
            v = self._lo[key] = lower_mask(self.G, n, a)
        return v

    def up(self, n: int, a: int) -> int:
        key = (n, a)
        v = self._up.get(key)
        if v is None:
            v = self._up[key] = upper_mask(self.G, n, a)
        return v

    def graph(self, v: int, s: int) -> tuple[int, int]:
        return (v, edge_mask_for(self.G, v, s)) if v else (0, 0)

    # domains
    def random_subset(self) -> int:
        while True:
            a = self.rng.getrandbits(self.G.order)
            if a:
                return a

    def random_pseudo(self) -> tuple[int, int]:
        s = self.rng.choice(self.conns)
        return close_vertex_set(self.G, self.random_subset(), s), s

    def pseudo(self) -> list[tuple[int, int]]:
        if self._pseudo is None:
            self._pseudo = [
                (r.mask, s) for s in self.conns for r in closed_vertex_sets(self.G, self.G.from_mask(s))
            ]
        return self._pseudo

    def pseudo_by_s(self) -> dict[int, list[int]]:
        if self._by_s is None:
            by_s: dict[int, list[int]] = {}
            for r, s in self.pseudo():
                by_s.setdefault(s, []).append(r)
            self._by_s = by_s
        return self._by_s

    def subgroup_conns(self) -> list[tuple[int, int]]:
        return [(k, s) for k in self.subgroups for s in self.conns if s & ~k == 0]

    def draw(self, kinds: str) -> Iterator[tuple]:
        """Yield configurations for the given kind letters.

        ``N``/``H`` normal subgroup, ``A`` nonempty subset, ``K`` subgroup,
        ``S`` connection set, ``X`` valid ``(R, S)``, ``Y`` a pair of valid
        ``(R1, R2, S)`` sharing S, ``C`` a subgroup with a connection set
        inside it.
        """
        if self.exhaustive:
            pools = []
            for k in kinds:
                if k == "Y":
                    pools.append(
                        [(r1, r2, s) for s, rs in self.pseudo_by_s().items() for r1 in rs for r2 in rs]
                    )
                else:
                    pools.append(self._pool(k))
            yield from itertools.product(*pools)
            return
        for _ in range(self.samples):
            picked: list = []
            for i, k in enumerate(kinds):
                prev = kinds[i - 1] if i else None
                # half of the repeated-kind draws are nested so that
                # inclusion premises actually occur in the sample
                if prev is not None and (prev == k or prev + k == "NH") and self.rng.random() < 0.5:
                    picked.append(self._grow(k, picked[-1]))
                else:
                    picked.append(self._pick(k))
            yield tuple(picked)

    def _grow(self, k: str, base):
        """A random draw of kind ``k`` containing ``base``."""
        rng, G = self.rng, self.G
        if k == "H":
            return rng.choice([h for h in self.normals if base & ~h == 0])
        if k == "A":
            return base | self.rng.getrandbits(G.order)
        if k == "S":
            return base | rng.choice(self.conns)
        if k == "X":
            r, s = base
            s2 = s | rng.choice(self.conns)
            return close_vertex_set(G, r | self.random_subset(), s2), s2
        if k == "C":
            h, s = base
            h2 = rng.choice([m for m in self.subgroups if h & ~m == 0])
            extra = rng.choice([c for c in self.conns if c & ~h2 == 0])
            return h2, s | extra
        return self._pick(k)

    def _pool(self, k: str) -> list:
        if k in "NH":
            return self.normals
        if k == "A":
            return list(range(1, self.full + 1))
        if k == "K":
            return self.subgroups
        if k == "S":
            return self.conns
        if k == "X":
            return self.pseudo()
        if k == "C":
            return self.subgroup_conns()
        raise ValueError(k)

    def _pick(self, k: str):
        rng = self.rng
        if k in "NH":
            return rng.choice(self.normals)
        if k == "A":
            return self.random_subset()
        if k == "K":
            return rng.choice(self.subgroups)
        if k == "S":
            return rng.choice(self.conns)
        if k == "X":
            return self.random_pseudo()
        if k == "Y":
            s = rng.choice(self.conns)
            r1 = close_vertex_set(self.G, self.random_subset(), s)
            extra = self.random_subset() | (r1 if rng.random() < 0.5 else 0)
            return r1, close_vertex_set(self.G, extra, s), s
        if k == "C":
            kk = rng.choice(self.subgroups)
            inside = [s for s in self.conns if s & ~kk == 0]
            return kk, rng.choice(inside)
        raise ValueError(k)


# -- helpers -----------------------------------------------------------------


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _gsub(x: tuple[int, int], y: tuple[int, int]) -> bool:
    return x[0] & ~y[0] == 0 and x[1] & ~y[1] == 0


def _gunion(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return x[0] | y[0], x[1] | y[1]


def _ginter(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    return x[0] & y[0], x[1] & y[1]


def format_value(G: FiniteGroup, value) -> str:
    if isinstance(value, tuple) and len(value) == 2:
        return f"({format_value(G, value[0])};{format_value(G, value[1])})"
    if isinstance(value, int):
        return "{" + ",".join(G.labels[x] for x in iter_bits(value)) + "}"
    return str(value)


Outcome = tuple  # (law, ok, witness items)


# -- law families --------------------------------------------------------------


def _set_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, lo, up = ctx.G, ctx.lo, ctx.up
    for n, a in ctx.draw("NA"):
        la, ua = lo(n, a), up(n, a)
        yield "set.sandwich", _sub(la, a) and _sub(a, ua), (("N", n), ("A", a))
        blocks, coset_of = G.coset_data(n)
        sat = all(_sub(coset_of[x], la) for x in iter_bits(la)) and all(
            _sub(coset_of[x], ua) for x in iter_bits(ua)
        )
        yield "set.coset_saturated", sat, (("N", n), ("A", a))
        ok = up(n, ua) == ua and (not la or lo(n, la) == la)
        yield "set.idempotent", ok, (("N", n), ("A", a))
    for n, a, b in ctx.draw("NAA"):
        la, lb, ua, ub = lo(n, a), lo(n, b), up(n, a), up(n, b)
        w = (("N", n), ("A", a), ("B", b))
        yield "set.upper_union", up(n, a | b) == ua | ub, w
        yield "set.lower_intersection", lo(n, a & b) == la & lb, w
        if _sub(a, b):
            yield "set.lower_monotone", _sub(la, lb), w
            yield "set.upper_monotone", _sub(ua, ub), w
        yield "set.lower_union_superset", _sub(la | lb, lo(n, a | b)), w
        yield "set.upper_intersection_subset", _sub(up(n, a & b), ua & ub), w
    for n, h, a in ctx.draw("NHA"):
        w = (("N", n), ("H", h), ("A", a))
        if _sub(n, h):
            yield "set.upper_modulus_monotone", _sub(up(n, a), up(h, a)), w
            yield "set.lower_modulus_antitone", _sub(lo(h, a), lo(n, a)), w
        m = n & h
        yield "set.meet_modulus_upper", up(m, a) == up(h, a) & up(n, a), w
        yield "set.meet_modulus_lower", lo(m, a) == lo(h, a) & lo(n, a), w
        yield "set.meet_modulus_upper_inclusion", _sub(up(m, a), up(h, a) & up(n, a)), w
        yield "set.meet_modulus_lower_inclusion", _sub(lo(h, a) | lo(n, a), lo(m, a)), w
    for n, k in ctx.draw("NK"):
        w = (("N", n), ("A", k))
        yield "set.upper_of_subgroup", G.is_subgroup_mask(up(n, k)), w
        normal_k = G.is_normal_mask(k)
        if normal_k:
            yield "set.upper_of_normal", G.is_normal_mask(up(n, k)), w
        if _sub(n, k):
            yield "set.lower_of_subgroup", G.is_subgroup_mask(lo(n, k)), w
            if normal_k:
                yield "set.lower_of_normal", G.is_normal_mask(lo(n, k)), w


def _cayley_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, full = ctx.G, ctx.full
    for (s,) in ctx.draw("S"):
        X = Graph(G, G.elements, edge_mask_for(G, full, s))
        gen = G.closure_mask(s) == full
        yield "cayley.connected_iff_generates", is_connected(X) == gen, (("S", s),)
        deg = s.bit_count()
        yield "cayley.regular", all(X.degree(v) == deg for v in range(G.order)), (("S", s),)
        if is_minimal_cayley_set(G, G.from_mask(s)):
            yield "cayley.minimal_implies_optimal", edge_connectivity(X) == min_degree(X) == deg, (("S", s),)
    for s1, s2 in ctx.draw("SS"):
        x1, x2 = ctx.graph(full, s1), ctx.graph(full, s2)
        w = (("S1", s1), ("S2", s2))
        yield "cayley.union", _gunion(x1, x2) == ctx.graph(full, s1 | s2), w
        yield "cayley.intersection", _ginter(x1, x2) == ctx.graph(full, s1 & s2), w
        yield "cayley.subgraph_iff_connection_subset", _gsub(x1, x2) == _sub(s1, s2), w
    for (h1, s1), (h2, s2) in ctx.draw("CC"):
        y1, y2 = ctx.graph(h1, s1), ctx.graph(h2, s2)
        w = (("X1", (h1, s1)), ("X2", (h2, s2)))
        yield "cayley.subgroup_meet", _ginter(y1, y2) == ctx.graph(h1 & h2, s1 & s2), w
        if s1 == s2:
            yield "cayley.subgroup_union", _gunion(y1, y2) == ctx.graph(h1 | h2, s1), w
            yield "cayley.subgroup_intersection", _ginter(y1, y2) == ctx.graph(h1 & h2, s1), w
            yield "cayley.subgraph_iff_vertex_subset", _gsub(y1, y2) == _sub(h1, h2), w


def _optimal(G: FiniteGroup, v: int, s: int) -> bool:
    X = Graph(G, G.from_mask(v), edge_mask_for(G, v, s))
    return is_connected(X) and edge_connectivity(X) == min_degree(X)


def _connected(G: FiniteGroup, v: int, s: int) -> bool:
    return is_connected(Graph(G, G.from_mask(v), edge_mask_for(G, v, s)))


def _edge_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, full = ctx.G, ctx.full
    edge = lambda n, s: edge_family_masks(G, n, s)  # noqa: E731
    for n, s in ctx.draw("NS"):
        w = (("N", n), ("S", s))
        ls, us = edge(n, s)
        ok = connection_set_violation(G, ls) is None and connection_set_violation(G, us) is None
        yield "edge.valid", ok, w
        x = ctx.graph(full, s)
        yield "edge.sandwich", _gsub(ctx.graph(full, ls), x) and _gsub(x, ctx.graph(full, us)), w
        for side, cs in (("lower", ls), ("upper", us)):
            if G.closure_mask(cs) == full:
                yield "edge.generating_implies_connected", _connected(G, full, cs), w + (("side", side),)
            if is_minimal_cayley_set(G, G.from_mask(cs)):
                yield "edge.optimal_implies_optimal_connected", _optimal(G, full, cs), w + (("side", side),)
    for n, s1, s2 in ctx.draw("NSS"):
        w = (("N", n), ("S1", s1), ("S2", s2))
        l1, u1 = edge(n, s1)
        l2, u2 = edge(n, s2)
        lu, uu = edge(n, s1 | s2)
        li, ui = edge(n, s1 & s2)
        g = lambda s: ctx.graph(full, s)  # noqa: E731
        yield "edge.upper_union", g(uu) == _gunion(g(u1), g(u2)), w
        yield "edge.lower_intersection", g(li) == _ginter(g(l1), g(l2)), w
        if _gsub(g(s1), g(s2)):
            yield "edge.lower_monotone", _gsub(g(l1), g(l2)), w
            yield "edge.upper_monotone", _gsub(g(u1), g(u2)), w
        yield "edge.lower_union_superset", _gsub(_gunion(g(l1), g(l2)), g(lu)), w
        yield "edge.upper_intersection_subset", _gsub(g(ui), _ginter(g(u1), g(u2))), w
    for n, h, s in ctx.draw("NHS"):
        w = (("N", n), ("H", h), ("S", s))
        ln, un = edge(n, s)
        lh, uh = edge(h, s)
        lm, um = edge(n & h, s)
        g = lambda s: ctx.graph(full, s)  # noqa: E731
        if _sub(n, h):
            yield "edge.upper_modulus_monotone", _gsub(g(un), g(uh)), w
            yield "edge.lower_modulus_antitone", _gsub(g(lh), g(ln)), w
        yield "edge.meet_modulus_upper", g(um) == _ginter(g(uh), g(un)), w
        yield "edge.meet_modulus_lower", g(lm) == _ginter(g(lh), g(ln)), w
        yield "edge.meet_modulus_upper_inclusion", _gsub(g(um), _ginter(g(uh), g(un))), w
        yield "edge.meet_modulus_lower_inclusion", _gsub(_gunion(g(lh), g(ln)), g(lm)), w


def _valid_output(G: FiniteGroup, v: int, s: int, strict: bool) -> bool:
    return pseudo_cayley_violation(G, v, s, strict) is None


def _pseudo_single(ctx: LawContext, family: str) -> Iterator[Outcome]:
    G = ctx.G
    masks = vertex_family_masks if family == "vertex" else full_family_masks
    for n, (r, s) in ctx.draw("NX"):
        w = (("N", n), ("X", (r, s)))
        (lr, ls), (ur, us) = masks(G, n, r, s)
        strict = _sub(s, r)
        yield f"{family}.valid", _valid_output(G, lr, ls, strict) and _valid_output(G, ur, us, strict), w
        x = ctx.graph(r, s)
        yield f"{family}.sandwich", _gsub(ctx.graph(lr, ls), x) and _gsub(x, ctx.graph(ur, us)), w
        # rough generating / optimal: approximated vertex set is a subgroup and
        # the (approximated) connection set generates it / is minimal for it
        gen_sets = {"lower": (lr, s if family == "vertex" else ls), "upper": (ur, us)}
        for side, (k, cs) in gen_sets.items():
            if not k or not G.is_subgroup_mask(k):
                continue
            graph_s = ls if side == "lower" else us
            if G.closure_mask(cs) == k:
                yield f"{family}.generating_implies_connected", _connected(G, k, graph_s), w + (("side", side),)
            if is_minimal_cayley_set(G, G.from_mask(cs), within=G.from_mask(k)):
                yield f"{family}.optimal_implies_optimal_connected", _optimal(G, k, graph_s), w + (("side", side),)
        if family == "vertex":
            if orbit_condition(G, n, r, s):
                yield "vertex.orbit_implies_definable", ctx.lo(n, r) == ctx.up(n, r), w
    for n, h, (r, s) in ctx.draw("NHX"):
        w = (("N", n), ("H", h), ("X", (r, s)))
        (lnr, lns), (unr, uns) = masks(G, n, r, s)
        (lhr, lhs), (uhr, uhs) = masks(G, h, r, s)
        (lmr, lms), (umr, ums) = masks(G, n & h, r, s)
        g = ctx.graph
        if _sub(n, h):
            yield f"{family}.upper_modulus_monotone", _gsub(g(unr, uns), g(uhr, uhs)), w
            yield f"{family}.lower_modulus_antitone", _gsub(g(lhr, lhs), g(lnr, lns)), w
        yield f"{family}.meet_modulus_upper", g(umr, ums) == _ginter(g(uhr, uhs), g(unr, uns)), w
        yield f"{family}.meet_modulus_lower", g(lmr, lms) == _ginter(g(lhr, lhs), g(lnr, lns)), w
        yield (
            f"{family}.meet_modulus_upper_inclusion",
            _gsub(g(umr, ums), _ginter(g(uhr, uhs), g(unr, uns))),
            w,
        )
        yield (
            f"{family}.meet_modulus_lower_inclusion",
            _gsub(_gunion(g(lhr, lhs), g(lnr, lns)), g(lmr, lms)),
            w,
        )


def _vertex_pair_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, g = ctx.G, ctx.graph
    for n, (r1, r2, s) in ctx.draw("NY"):
        w = (("N", n), ("X1", (r1, s)), ("X2", (r2, s)))
        (l1r, l1s), (u1r, u1s) = vertex_family_masks(G, n, r1, s)
        (l2r, l2s), (u2r, u2s) = vertex_family_masks(G, n, r2, s)
        (lur, lus), (uur, uus) = vertex_family_masks(G, n, r1 | r2, s)
        L1, L2, U1, U2 = g(l1r, l1s), g(l2r, l2s), g(u1r, u1s), g(u2r, u2s)
        yield "vertex.upper_union", g(uur, uus) == _gunion(U1, U2), w
        yield "vertex.lower_union_superset", _gsub(_gunion(L1, L2), g(lur, lus)), w
        if r1 & r2:  # the intersection graph needs a common vertex
            (lir, lis), (uir, uis) = vertex_family_masks(G, n, r1 & r2, s)
            yield "vertex.lower_intersection", g(lir, lis) == _ginter(L1, L2), w
            yield "vertex.upper_intersection_subset", _gsub(g(uir, uis), _ginter(U1, U2)), w
        if _gsub(g(r1, s), g(r2, s)):
            yield "vertex.lower_monotone", _gsub(L1, L2), w
            yield "vertex.upper_monotone", _gsub(U1, U2), w


def _full_pair_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, g = ctx.G, ctx.graph
    for n, (r1, s1), (r2, s2) in ctx.draw("NXX"):
        w = (("N", n), ("X1", (r1, s1)), ("X2", (r2, s2)))
        (l1r, l1s), (u1r, u1s) = full_family_masks(G, n, r1, s1)
        (l2r, l2s), (u2r, u2s) = full_family_masks(G, n, r2, s2)
        L1, L2, U1, U2 = g(l1r, l1s), g(l2r, l2s), g(u1r, u1s), g(u2r, u2s)
        if r1 & r2:
            (lir, lis), (uir, uis) = full_family_masks(G, n, r1 & r2, s1 & s2)
            yield "full.lower_intersection", g(lir, lis) == _ginter(L1, L2), w
            yield "full.upper_intersection_subset", _gsub(g(uir, uis), _ginter(U1, U2)), w
        if _gsub(g(r1, s1), g(r2, s2)):
            yield "full.lower_monotone", _gsub(L1, L2), w
            yield "full.upper_monotone", _gsub(U1, U2), w


def _subgroup_graph_laws(ctx: LawContext) -> Iterator[Outcome]:
    G, g = ctx.G, ctx.graph
    for n, (h, s) in ctx.draw("NC"):
        w = (("N", n), ("X", (h, s)))
        x = g(h, s)
        (lr, ls), (ur, us) = vertex_family_masks(G, n, h, s)
        lower, upper = g(lr, ls), g(ur, us)
        inside = _sub(n, h)
        yield "vertex.exact_iff_modulus_inside", inside == (lower == x == upper), w
        yield "vertex.empty_iff_modulus_outside", (not inside) == (lower == (0, 0)), w
        if inside:
            (flr, fls), (fur, fus) = full_family_masks(G, n, h, s)
            els, eus = edge_family_masks(G, n, s)
            ok = g(flr, fls) == g(h, els) and g(fur, fus) == g(h, eus)
            yield "full.matches_edge_on_subgroup", ok, w


FAMILIES: dict[str, Callable[[LawContext], Iterable[Outcome]]] = {
    "set": _set_laws,
    "cayley": _cayley_laws,
    "edge": _edge_laws,
    "vertex": lambda ctx: itertools.chain(_pseudo_single(ctx, "vertex"), _vertex_pair_laws(ctx)),
    "full": lambda ctx: itertools.chain(_pseudo_single(ctx, "full"), _full_pair_laws(ctx)),
    "subgroup-graphs": _subgroup_graph_laws,
}


def run_laws(
    G: FiniteGroup,
    *,
    only: Iterable[str] | None = None,
    exhaustive: bool | None = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> GroupReport:
    """Check the laws on ``G`` and return per-law tallies.

    ``only`` restricts to law ids (or family prefixes such as ``"edge"``).
    """
    if G.order > MAX_LAW_ORDER:
        raise PreconditionError(
            f"law checks are limited to groups of order <= {MAX_LAW_ORDER}; {G.spec} has order {G.order}"
        )
    ctx = LawContext(G, exhaustive=exhaustive, samples=samples, seed=seed)
    wanted = None if only is None else tuple(only)

    def selected(law: str) -> bool:
        return wanted is None or any(law == w or law.startswith(w + ".") for w in wanted)

    results = {law: LawResult(law, desc) for law, desc in LAWS.items() if selected(law)}
    families = [
        fn
        for name, fn in FAMILIES.items()
        if any(law.startswith(prefix) for law in results for prefix in _prefixes(name))
    ]
    for fn in families:
        for law, ok, witness in fn(ctx):
            res = results.get(law)
            if res is None:
                continue
            res.checked += 1
            if not ok:
                res.violations += 1
                if res.witness is None:
                    res.witness = f"G={G.spec} " + " ".join(
                        f"{k}={format_value(G, v)}" for k, v in witness
                    )
    mode = "exhaustive" if ctx.exhaustive else f"sampled({samples}, seed={seed})"
    return GroupReport(G.spec, mode, results)


def _prefixes(family: str) -> tuple[str, ...]:
    if family == "subgroup-graphs":
        return ("vertex.exact_iff", "vertex.empty_iff", "full.matches_edge")
    return (family + ".",)
