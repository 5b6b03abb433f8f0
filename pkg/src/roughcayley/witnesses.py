"""Counterexamples showing that the one-way rough-graph inclusions are strict.

Each :class:`ConverseWitness` lists a configuration and the boolean facts it
is supposed to exhibit, e.g. ``X1 ⊆ X2`` is false while ``lower(X1) ⊆
lower(X2)`` is true, which shows that the monotonicity law cannot be
reversed.  :func:`evaluate` recomputes those facts from scratch, so a
witness either reproduces exactly or reports which fact disagrees.

Two catalogues are provided: edge approximations of Cayley graphs on the
dihedral group of order 6 and vertex approximations of edgeless
pseudo-Cayley graphs on the dihedral group of order 8.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, graph_intersection, graph_union, is_subgraph, pseudo_cayley_graph
from .groups import FiniteGroup, make_dihedral
from .rough_graphs import family_graphs


@dataclass(frozen=True)
class ConverseWitness:
    """A named configuration plus the facts it should exhibit."""

    key: str
    group: str
    family: str
    statement: str
    config: dict[str, str]
    expected: dict[str, bool]


@dataclass
class WitnessOutcome:
    witness: ConverseWitness
    actual: dict[str, bool] = field(default_factory=dict)

    @property
    def reproduced(self) -> bool:
        return self.actual == self.witness.expected

    def mismatches(self) -> list[str]:
        return [k for k, v in self.witness.expected.items() if self.actual.get(k) != v]


def _w(key, group, family, statement, expected, **config) -> ConverseWitness:
    return ConverseWitness(key, group, family, statement, config, expected)


EDGE_WITNESSES: tuple[ConverseWitness, ...] = (
    _w("edge.1", "dihedral:3", "edge", "X1 ⊄ X2 yet lower(X1) ⊆ lower(X2)",
       {"X1 ⊆ X2": False, "lower(X1) ⊆ lower(X2)": True},
       N="1,P,P2", S1="e", S2="Pe"),
    _w("edge.2", "dihedral:3", "edge", "X1 ⊄ X2 yet upper(X1) ⊆ upper(X2)",
       {"X1 ⊆ X2": False, "upper(X1) ⊆ upper(X2)": True},
       N="1,P,P2,e,Pe,P2e", S1="e", S2="Pe"),
    _w("edge.3", "dihedral:3", "edge", "lower(X1 ∪ X2) ⊄ lower(X1) ∪ lower(X2)",
       {"lower(X1 ∪ X2) ⊆ lower(X1) ∪ lower(X2)": False},
       N="1,P,P2", S1="e,P2e", S2="e,Pe"),
    _w("edge.4", "dihedral:3", "edge", "upper(X1) ∩ upper(X2) ⊄ upper(X1 ∩ X2)",
       {"upper(X1) ∩ upper(X2) ⊆ upper(X1 ∩ X2)": False},
       N="1,P,P2", S1="P2e", S2="Pe"),
    _w("edge.5", "dihedral:3", "edge", "N ⊄ H yet N-upper(X) ⊆ H-upper(X)",
       {"N ⊆ H": False, "N-upper(X) ⊆ H-upper(X)": True},
       N="1,P,P2", H="1", S="P,P2,e,Pe,P2e"),
    _w("edge.6", "dihedral:3", "edge", "N ⊄ H yet H-lower(X) ⊆ N-lower(X)",
       {"N ⊆ H": False, "H-lower(X) ⊆ N-lower(X)": True},
       N="1,P,P2", H="1", S="e,Pe,P2e"),
)

VERTEX_WITNESSES: tuple[ConverseWitness, ...] = (
    _w("vertex.1", "dihedral:4", "vertex", "X1 ⊄ X2 yet lower(X1) ⊆ lower(X2)",
       {"X1 ⊆ X2": False, "lower(X1) ⊆ lower(X2)": True},
       N="1,P2", R1="1,P2", R2="1,P2,e", S=""),
    _w("vertex.2", "dihedral:4", "vertex", "X1 ⊄ X2 yet upper(X1) ⊆ upper(X2)",
       {"X1 ⊆ X2": False, "upper(X1) ⊆ upper(X2)": True},
       N="1,P2", R1="1,e,P2,P2e", R2="1,P2,P2e", S=""),
    _w("vertex.3", "dihedral:4", "vertex", "lower(X1 ∪ X2) ⊄ lower(X1) ∪ lower(X2)",
       {"lower(X1 ∪ X2) ⊆ lower(X1) ∪ lower(X2)": False},
       N="1,P2", R1="1,P,P2", R2="1,P3", S=""),
    _w("vertex.4", "dihedral:4", "vertex", "upper(X1) ∩ upper(X2) ⊄ upper(X1 ∩ X2)",
       {"upper(X1) ∩ upper(X2) ⊆ upper(X1 ∩ X2)": False},
       N="1,P2", R1="1,P,P2", R2="1,P2,P3", S=""),
    _w("vertex.5", "dihedral:4", "vertex", "N ⊄ H yet N-upper(X) ⊆ H-upper(X)",
       {"N ⊆ H": False, "N-upper(X) ⊆ H-upper(X)": True},
       N="1,P,P2,P3", H="1,P2", R="1,P,P2,P3", S=""),
    _w("vertex.6", "dihedral:4", "vertex", "N ⊄ H yet H-lower(X) ⊆ N-lower(X)",
       {"N ⊆ H": False, "H-lower(X) ⊆ N-lower(X)": True},
       N="1,P,P2,P3", H="1,P2", R="1,P,P2,P3", S=""),
)

ALL_WITNESSES = EDGE_WITNESSES + VERTEX_WITNESSES

#: ``vertex.1`` as printed has ``X1 ⊆ X2``, so it cannot refute anything.
#: Exchanging the two vertex sets gives a configuration that does.
VERTEX_1_SWAPPED = _w(
    "vertex.1-swapped", "dihedral:4", "vertex", "X1 ⊄ X2 yet lower(X1) ⊆ lower(X2)",
    {"X1 ⊆ X2": False, "lower(X1) ⊆ lower(X2)": True},
    N="1,P2", R1="1,P2,e", R2="1,P2", S="",
)


def witnesses_for(spec: str) -> tuple[ConverseWitness, ...]:
    return tuple(w for w in ALL_WITNESSES if w.group == spec)


def _group(spec: str) -> FiniteGroup:
    family, _, n = spec.partition(":")
    if family != "dihedral":
        raise ValueError(f"witness groups are dihedral, got {spec!r}")
    return make_dihedral(int(n))


def _pair(G: FiniteGroup, family: str, n: int, r: int, s: int) -> tuple[Graph, Graph]:
    return family_graphs(G, family, n, r, s)


def evaluate(w: ConverseWitness) -> WitnessOutcome:
    """Recompute every fact listed in ``w.expected``."""
    G = _group(w.group)
    m = {k: G.subset(v).mask for k, v in w.config.items()}
    n, full = m["N"], G._full
    facts: dict[str, bool] = {}

    if "H" in m:
        h = m["H"]
        r, s = m.get("R", full), m["S"]
        lo_n, up_n = _pair(G, w.family, n, r, s)
        lo_h, up_h = _pair(G, w.family, h, r, s)
        facts["N ⊆ H"] = n & ~h == 0
        facts["N-upper(X) ⊆ H-upper(X)"] = is_subgraph(up_n, up_h)
        facts["H-lower(X) ⊆ N-lower(X)"] = is_subgraph(lo_h, lo_n)
    else:
        if w.family == "edge":
            r1 = r2 = full
            s1, s2 = m["S1"], m["S2"]
        else:
            r1, r2 = m["R1"], m["R2"]
            s1 = s2 = m["S"]
        x1 = pseudo_cayley_graph(G, G.from_mask(r1), G.from_mask(s1))
        x2 = pseudo_cayley_graph(G, G.from_mask(r2), G.from_mask(s2))
        lo1, up1 = _pair(G, w.family, n, r1, s1)
        lo2, up2 = _pair(G, w.family, n, r2, s2)
        lo_u, _ = _pair(G, w.family, n, r1 | r2, s1 | s2)
        _, up_i = _pair(G, w.family, n, r1 & r2, s1 & s2)
        facts["X1 ⊆ X2"] = is_subgraph(x1, x2)
        facts["lower(X1) ⊆ lower(X2)"] = is_subgraph(lo1, lo2)
        facts["upper(X1) ⊆ upper(X2)"] = is_subgraph(up1, up2)
        facts["lower(X1 ∪ X2) ⊆ lower(X1) ∪ lower(X2)"] = is_subgraph(lo_u, graph_union(lo1, lo2))
        facts["upper(X1) ∩ upper(X2) ⊆ upper(X1 ∩ X2)"] = is_subgraph(
            graph_intersection(up1, up2, allow_disjoint=True), up_i
        )
    return WitnessOutcome(w, {k: facts[k] for k in w.expected})


def evaluate_all(spec: str | None = None) -> list[WitnessOutcome]:
    pool = ALL_WITNESSES if spec is None else witnesses_for(spec)
    return [evaluate(w) for w in pool]
