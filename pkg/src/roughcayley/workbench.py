"""Loading groups, exporting graphs and building analysis reports.

This is the non-interactive half of the command line tool: everything here
is deterministic and returns plain strings or dictionaries, so the CLI only
has to deal with argument parsing, files and exit codes.
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass
from pathlib import Path

from .approx import lower_mask, upper_mask
from .errors import GraphError, PreconditionError
from .graphs import (
    Graph,
    components,
    edge_connectivity,
    is_minimal_cayley_set,
    is_optimal_connected,
    min_degree,
)
from .groups import ElementSet, FiniteGroup, make_cyclic, make_dihedral, make_from_table
from .rough_graphs import (
    RoughGraphPair,
    is_definable_by_orbit,
    is_edge_rough_generating,
    is_edge_rough_optimal,
    is_rough_generating,
    is_rough_optimal,
    is_vertex_rough_generating,
    is_vertex_rough_optimal,
    rough_graph_pair,
)

REPORT_SCHEMA = 1

#: Named collections of groups accepted wherever a group spec is expected.
FLEETS: dict[str, tuple[str, ...]] = {
    "default": tuple(f"cyclic:{n}" for n in range(2, 13)) + tuple(f"dihedral:{n}" for n in range(1, 9)),
    "acceptance": tuple(f"cyclic:{n}" for n in range(2, 13)) + tuple(f"dihedral:{n}" for n in range(1, 5)),
    "small": tuple(f"cyclic:{n}" for n in range(1, 9)) + tuple(f"dihedral:{n}" for n in range(1, 5)),
}

_SPEC = re.compile(r"^(cyclic|dihedral|Z|D):?(\d+)$")


# -- groups -----------------------------------------------------------------


def group_from_document(doc: dict) -> FiniteGroup:
    """Build a group from the group file format.

    Either ``{"family": "cyclic" | "dihedral", "n": int}`` or
    ``{"table": [[int]], "labels": [str]}``.
    """
    if not isinstance(doc, dict):
        raise PreconditionError("group document must be an object")
    if "family" in doc:
        family, n = doc["family"], doc.get("n")
        if family == "cyclic":
            return make_cyclic(n)
        if family == "dihedral":
            return make_dihedral(n)
        raise PreconditionError(f"unknown group family {family!r}")
    if "table" in doc:
        return make_from_table(doc["table"], doc.get("labels"))
    raise PreconditionError('group document needs either "family" and "n" or "table"')


def group_to_document(G: FiniteGroup) -> dict:
    return G.to_dict()


def write_group_file(G: FiniteGroup, path: str | Path) -> None:
    Path(path).write_text(json.dumps(group_to_document(G)) + "\n", encoding="utf-8")


def load_group_file(path: str | Path) -> FiniteGroup:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"{path}: not valid JSON ({exc})") from None
    return group_from_document(doc)


def parse_group(spec: str) -> FiniteGroup:
    """``cyclic:8``, ``dihedral:4`` (or ``Z8``/``D4``), or a group file path."""
    m = _SPEC.match(spec.strip())
    if m:
        family, n = m.group(1), int(m.group(2))
        return make_cyclic(n) if family in ("cyclic", "Z") else make_dihedral(n)
    path = Path(spec)
    if path.is_file():
        return load_group_file(path)
    raise PreconditionError(
        f"cannot read group {spec!r}: expected cyclic:<n>, dihedral:<n> or a group file"
    )


def parse_groups(spec: str) -> list[FiniteGroup]:
    """Like :func:`parse_group` but also accepts ``fleet:<name>``."""
    if spec.startswith("fleet:"):
        name = spec.split(":", 1)[1]
        if name not in FLEETS:
            raise PreconditionError(f"unknown fleet {name!r}; known: {', '.join(FLEETS)}")
        return [parse_group(s) for s in FLEETS[name]]
    return [parse_group(spec)]


# -- DOT --------------------------------------------------------------------


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(X: Graph, name: str = "X") -> str:
    """Undirected DOT text; vertices in index order, edges as sorted pairs."""
    G = X.group
    lines = [f"graph {_quote(name)} {{"]
    lines.append(f"  // group {G.spec}, {X.vertex_count} vertices, {X.edge_count} edges")
    for v in X.vertices:
        lines.append(f"  v{v} [label={_quote(G.label(v))}];")
    for a, b in X.iter_edges():
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r"^\s*v(\d+) \[label=")
_DOT_EDGE = re.compile(r"^\s*v(\d+) -- v(\d+);")


def graph_from_dot(G: FiniteGroup, text: str) -> Graph:
    """Read back a graph written by :func:`to_dot`."""
    vmask = emask = 0
    n = G.order
    for line in text.splitlines():
        if m := _DOT_EDGE.match(line):
            a, b = sorted((int(m.group(1)), int(m.group(2))))
            emask |= 1 << (a * n + b)
        elif m := _DOT_NODE.match(line):
            vmask |= 1 << int(m.group(1))
    return Graph(G, ElementSet(G, vmask), emask)


# -- reports ----------------------------------------------------------------


@dataclass
class GraphSummary:
    vertices: list[str]
    connection: list[str]
    vertex_count: int
    edge_count: int
    components: int
    connected: bool | None
    min_degree: int | None
    edge_connectivity: int | None
    optimal_connected: bool | None

    @classmethod
    def of(cls, X: Graph) -> "GraphSummary":
        conn = X.connection.labels() if X.connection is not None else []
        if X.is_empty:
            return cls([], conn, 0, 0, 0, None, None, None, None)
        comps = len(components(X))
        connected = comps == 1
        return cls(
            vertices=X.vertices.labels(),
            connection=conn,
            vertex_count=X.vertex_count,
            edge_count=X.edge_count,
            components=comps,
            connected=connected,
            min_degree=min_degree(X),
            edge_connectivity=edge_connectivity(X) if connected else None,
            optimal_connected=is_optimal_connected(X),
        )


@dataclass
class AnalysisReport:
    group: str
    order: int
    family: str
    N: list[str]
    S: list[str]
    R: list[str] | None
    lower: GraphSummary
    original: GraphSummary
    upper: GraphSummary
    predicates: dict[str, object]

    def to_dict(self) -> dict:
        return {"schema": REPORT_SCHEMA, **asdict(self)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"group {self.group} (order {self.order}), {self.family} family"]
        lines.append(f"N = {_braces(self.N)}")
        if self.R is not None:
            lines.append(f"R = {_braces(self.R)}")
        lines.append(f"S = {_braces(self.S)}")
        for role in ("lower", "original", "upper"):
            g: GraphSummary = getattr(self, role)
            lam = "-" if g.edge_connectivity is None else g.edge_connectivity
            lines.append(
                f"{role:8} vertices {_braces(g.vertices)} connection {_braces(g.connection)}"
            )
            lines.append(
                f"{'':8} |V|={g.vertex_count} |E|={g.edge_count} components={g.components}"
                f" connected={_fmt(g.connected)} lambda={lam} delta="
                f"{'-' if g.min_degree is None else g.min_degree}"
                f" optimal_connected={_fmt(g.optimal_connected)}"
            )
        for key, value in self.predicates.items():
            if isinstance(value, dict):
                value = " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
            else:
                value = _fmt(value)
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def _braces(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def _fmt(v: object) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _predicates(G: FiniteGroup, pair: RoughGraphPair, N, R, S) -> dict[str, object]:
    fam = pair.family
    original = pair.original
    rmask = original.vertices.mask
    sides = ("lower", "upper")
    if fam == "edge":
        generating = {s: is_edge_rough_generating(G, N, S, s) for s in sides}
        optimal = {s: is_edge_rough_optimal(G, N, S, s) for s in sides}
    elif fam == "vertex":
        generating = {s: is_vertex_rough_generating(G, N, R, S, s) for s in sides}
        optimal = {s: is_vertex_rough_optimal(G, N, R, S, s) for s in sides}
    else:
        generating = {s: is_rough_generating(G, N, R, S, s) for s in sides}
        optimal = {s: is_rough_optimal(G, N, R, S, s) for s in sides}
    minimal = G.is_subgroup_mask(rmask) and is_minimal_cayley_set(
        G, original.connection, within=original.vertices
    )
    out: dict[str, object] = {
        "generating": generating,
        "optimal": optimal,
        "minimal": minimal,
        "definable": pair.definable,
    }
    if fam != "edge":
        n = pair.modulus.mask
        out["vertex_set_definable"] = lower_mask(G, n, rmask) == upper_mask(G, n, rmask)
        out["orbit_condition"] = is_definable_by_orbit(G, N, R, S)
    return out


def analyse(G: FiniteGroup, family: str, N, S, R=None) -> tuple[AnalysisReport, RoughGraphPair]:
    """Compute a rough pair and summarise it.

    Constructor errors propagate unchanged (e.g. :class:`GraphError` for an
    invalid ``(R;S)``).
    """
    if family not in ("edge", "vertex", "full"):
        raise PreconditionError(f"unknown family {family!r}")
    N, S = G.subset(N), G.subset(S)
    if R is not None:
        R = G.subset(R)
    if family == "edge" and R is not None and R.mask != G._full:
        raise PreconditionError("the edge family always uses the whole group as vertex set")
    pair = rough_graph_pair(G, family, N, S, R)
    report = AnalysisReport(
        group=G.spec,
        order=G.order,
        family=family,
        N=N.labels(),
        S=S.labels(),
        R=None if family == "edge" else R.labels(),
        lower=GraphSummary.of(pair.lower),
        original=GraphSummary.of(pair.original),
        upper=GraphSummary.of(pair.upper),
        predicates=_predicates(G, pair, N, R, S),
    )
    return report, pair


def dot_files(pair: RoughGraphPair) -> dict[str, str]:
    """``{"lower.dot": ..., "original.dot": ..., "upper.dot": ...}``."""
    return {
        f"{role}.dot": to_dot(getattr(pair, role), f"{pair.family}_{role}")
        for role in ("lower", "original", "upper")
    }


__all__ = [
    "FLEETS",
    "REPORT_SCHEMA",
    "AnalysisReport",
    "GraphError",
    "GraphSummary",
    "analyse",
    "dot_files",
    "graph_from_dot",
    "group_from_document",
    "group_to_document",
    "load_group_file",
    "parse_group",
    "parse_groups",
    "to_dot",
    "write_group_file",
]
