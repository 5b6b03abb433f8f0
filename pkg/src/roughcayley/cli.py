"""Command line workbench.

Exit status is 0 for success or a true verdict, 1 for a false verdict or a
law violation, and 2 for usage and validation errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import graphs as g
from . import rough_graphs as rg
from .approx import is_definable
from .errors import RoughCayleyError
from .groups import FiniteGroup, enumerate_normal_subgroups, enumerate_subgroups, is_normal, is_subgroup
from .laws import DEFAULT_SAMPLES, GroupReport, run_laws
from .witnesses import evaluate_all, witnesses_for
from .workbench import analyse, dot_files, parse_group, parse_groups, to_dot, write_group_file

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2
ENUMERATE_LIMIT = 16
FAMILY_NAMES = ("edge", "vertex", "full")


class UsageError(Exception):
    pass


def _write_json(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def _braces(labels: Sequence[str]) -> str:
    return "{" + ", ".join(labels) + "}"


def _group_arg(args: argparse.Namespace) -> FiniteGroup:
    spec = args.group or getattr(args, "group_pos", None)
    if not spec:
        raise UsageError("a group is required (--group cyclic:8, dihedral:4 or a group file)")
    return parse_group(spec)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {getattr(args, 'predicate', '')}".strip() + f" needs {', '.join(missing)}")


# -- enumerate --------------------------------------------------------------


def _sample_connection_sets(G: FiniteGroup, k: int, seed: int) -> list[g.ConnectionSet]:
    pairs = g.inverse_pairs(G)
    rng = random.Random(f"{seed}:{G.spec}")
    found: dict[int, g.ConnectionSet] = {}
    attempts = 0
    while len(found) < min(k, 2 ** len(pairs)) and attempts < 50 * k:
        attempts += 1
        mask = 0
        for p in pairs:
            if rng.random() < 0.5:
                mask |= p.mask
        found.setdefault(mask, g.ConnectionSet(G, mask))
    return sorted(found.values(), key=lambda s: s.sort_key())


def cmd_enumerate(args: argparse.Namespace) -> int:
    G = _group_arg(args)
    if G.order > ENUMERATE_LIMIT and args.sample is None:
        raise UsageError(
            f"{G.spec} has order {G.order} > {ENUMERATE_LIMIT}: exhaustive connection-set "
            "enumeration is refused; pass --sample K to draw K random connection sets"
        )
    normals = enumerate_normal_subgroups(G)
    conns = (
        g.enumerate_connection_sets(G)
        if args.sample is None
        else _sample_connection_sets(G, args.sample, args.seed)
    )
    doc: dict = {
        "schema": 1,
        "group": G.spec,
        "order": G.order,
        "normal_subgroups": [N.labels() for N in normals],
        "connection_sets": [S.labels() for S in conns],
        "sampled": args.sample is not None,
    }
    print(f"group {G.spec} (order {G.order})")
    print(f"normal subgroups ({len(normals)}):")
    for N in normals:
        print(f"  {_braces(N.labels())}")
    if args.subgroups:
        subs = enumerate_subgroups(G)
        doc["subgroups"] = [H.labels() for H in subs]
        print(f"subgroups ({len(subs)}):")
        for H in subs:
            print(f"  {_braces(H.labels())}")
    word = "sampled" if args.sample is not None else "all"
    print(f"connection sets ({word}, {len(conns)}):")
    for S in conns:
        print(f"  {_braces(S.labels())}")
    if args.S is not None:
        S = g.make_connection_set(G, args.S)
        rs = g.closed_vertex_sets(G, S)
        doc["vertex_sets"] = {"S": S.labels(), "R": [R.labels() for R in rs]}
        print(f"vertex sets R with (R;{_braces(S.labels())}) a pseudo-Cayley graph ({len(rs)}):")
        for R in rs:
            print(f"  {_braces(R.labels())}")
    if args.json:
        _write_json(args.json, json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


# -- approx -----------------------------------------------------------------


def _split_positional(args: argparse.Namespace) -> None:
    rest = list(args.positional)
    if rest and rest[0] in FAMILY_NAMES:
        if args.family is not None and args.family != rest[0]:
            raise UsageError(f"conflicting families {rest[0]!r} and --family {args.family!r}")
        args.family = rest.pop(0)
    if len(rest) > 1 or (rest and args.group):
        raise UsageError(f"unexpected arguments: {' '.join(rest)}")
    args.group_pos = rest[0] if rest else None
    if args.family is None:
        args.family = "edge"


def cmd_approx(args: argparse.Namespace) -> int:
    _split_positional(args)
    G = _group_arg(args)
    _require(args, "N", "S")
    if args.family != "edge" and args.R is None:
        raise UsageError(f"the {args.family} family needs --R")
    if args.strict and args.family != "edge":
        problem = g.pseudo_cayley_violation(G, G.subset(args.R).mask, G.subset(args.S).mask, strict=True)
        if problem:
            raise UsageError(problem)
    report, pair = analyse(G, args.family, args.N, args.S, args.R)
    sys.stdout.write(report.to_text())
    if args.dot:
        out = Path(args.dot)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in dot_files(pair).items():
            (out / name).write_text(text, encoding="utf-8")
    if args.json:
        _write_json(args.json, report.to_json())
    return EXIT_OK


# -- check ------------------------------------------------------------------


def _graph(G: FiniteGroup, args: argparse.Namespace) -> g.Graph:
    _require(args, "S")
    if args.R is None:
        return g.cayley_graph(G, args.S)
    return g.pseudo_cayley_graph(G, args.R, args.S, strict=args.strict)


def _within(G: FiniteGroup, args: argparse.Namespace):
    return None if args.R is None else G.subset(args.R)


def _check_connected(G, a):
    return g.is_connected(_graph(G, a))


def _check_generates(G, a):
    _require(a, "S")
    return g.generates(G, a.S, within=_within(G, a))


def _check_minimal(G, a):
    _require(a, "S")
    return g.is_minimal_cayley_set(G, a.S, within=_within(G, a))


def _check_optimal_connected(G, a):
    return g.is_optimal_connected(_graph(G, a))


def _check_edge_minimal(G, a):
    return g.is_edge_minimal_connected(_graph(G, a))


def _check_definable(G, a):
    _require(a, "N")
    target = a.R if a.R is not None else a.S
    if target is None:
        raise UsageError("check definable needs --R (or --S)")
    return is_definable(G, a.N, target)


def _check_orbit(G, a):
    _require(a, "N", "R", "S")
    return rg.is_definable_by_orbit(G, a.N, a.R, a.S)


def _check_normal(G, a):
    _require(a, "N")
    return is_normal(G, G.subset(a.N))


def _check_subgroup(G, a):
    _require(a, "R")
    return is_subgroup(G, G.subset(a.R))


def _edge_pred(fn):
    def run(G, a):
        _require(a, "N", "S")
        return fn(G, a.N, a.S, a.side)

    return run


def _pseudo_pred(fn):
    def run(G, a):
        _require(a, "N", "R", "S")
        return fn(G, a.N, a.R, a.S, a.side)

    return run


PREDICATES: dict[str, tuple[Callable[[FiniteGroup, argparse.Namespace], bool], str]] = {
    "connected": (_check_connected, "(R;S) or (G;S) is connected"),
    "generates": (_check_generates, "<S> equals R (default G)"),
    "minimal": (_check_minimal, "S is a minimal Cayley set for R (default G)"),
    "optimal-connected": (_check_optimal_connected, "graph is connected with λ = δ"),
    "edge-minimal": (_check_edge_minimal, "graph is connected and every edge is a bridge"),
    "definable": (_check_definable, "R (or S) is a union of N-cosets"),
    "orbit-definable": (_check_orbit, "lower(R) ≠ ∅ and R = <S>r for some r"),
    "normal": (_check_normal, "N is a normal subgroup"),
    "subgroup": (_check_subgroup, "R is a subgroup"),
    "edge-generating": (_edge_pred(rg.is_edge_rough_generating), "approximated S generates G"),
    "edge-optimal": (_edge_pred(rg.is_edge_rough_optimal), "approximated S is a minimal Cayley set"),
    "vertex-generating": (_pseudo_pred(rg.is_vertex_rough_generating), "S generates the approximated R"),
    "vertex-optimal": (_pseudo_pred(rg.is_vertex_rough_optimal), "S is minimal for the approximated R"),
    "rough-generating": (_pseudo_pred(rg.is_rough_generating), "approximated S generates approximated R"),
    "rough-optimal": (_pseudo_pred(rg.is_rough_optimal), "approximated S is minimal for approximated R"),
}


def cmd_check(args: argparse.Namespace) -> int:
    G = _group_arg(args)
    fn, _ = PREDICATES[args.predicate]
    verdict = bool(fn(G, args))
    print(f"{args.predicate} {G.spec}: {'true' if verdict else 'false'}")
    return EXIT_OK if verdict else EXIT_FALSE


# -- lawsuite ---------------------------------------------------------------


def _run_one(job: tuple[str, tuple[str, ...] | None, int, int, bool | None]) -> GroupReport:
    spec, only, samples, seed, exhaustive = job
    return run_laws(parse_group(spec), only=only, samples=samples, seed=seed, exhaustive=exhaustive)


def cmd_lawsuite(args: argparse.Namespace) -> int:
    spec = args.group or args.group_pos
    if not spec:
        raise UsageError("lawsuite needs a group or fleet:<name>")
    groups = parse_groups(spec)
    only = tuple(args.only) if args.only else None
    exhaustive = True if args.exhaustive else None
    jobs = [(G.spec if G.family != "table" else spec, only, args.sample, args.seed, exhaustive) for G in groups]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    elif len(groups) == 1 and groups[0].family == "table":
        G = groups[0]
        reports = [run_laws(G, only=only, samples=args.sample, seed=args.seed, exhaustive=exhaustive)]
    else:
        reports = [_run_one(job) for job in jobs]

    failing = 0
    totals: dict[str, list[int]] = {}
    doc: dict = {"schema": 1, "groups": []}
    for rep in reports:
        print(f"== {rep.group} [{rep.mode}]")
        entry = {"group": rep.group, "mode": rep.mode, "laws": []}
        for law in sorted(rep.results):
            r = rep.results[law]
            t = totals.setdefault(law, [0, 0, 0])
            t[0] += r.checked
            t[1] += r.violations
            t[2] += 0 if r.passed else 1
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {law} checked={r.checked}"
            if not r.passed:
                line += f" violations={r.violations} witness: {r.witness}"
            print(f"  {line}")
            entry["laws"].append(
                {"law": law, "checked": r.checked, "violations": r.violations, "witness": r.witness}
            )
        failing += sum(1 for r in rep.results.values() if not r.passed)
        if witnesses_for(rep.group) and only is None:
            entry["converse"] = []
            for outcome in evaluate_all(rep.group):
                w = outcome.witness
                status = "PASS" if outcome.reproduced else "FAIL"
                detail = "" if outcome.reproduced else f" mismatched: {', '.join(outcome.mismatches())}"
                print(f"  {status} converse.{w.key}: {w.statement}{detail}")
                entry["converse"].append({"key": w.key, "reproduced": outcome.reproduced, "facts": outcome.actual})
                failing += 0 if outcome.reproduced else 1
        doc["groups"].append(entry)

    print("== summary")
    for law in sorted(totals):
        checked, violations, groups_failing = totals[law]
        status = "PASS" if violations == 0 else "FAIL"
        print(f"  {status} {law} checked={checked} violations={violations} groups_failing={groups_failing}")
    print(f"{len(reports)} group(s), {failing} failing check(s)")
    if args.json:
        _write_json(args.json, json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    return EXIT_FALSE if failing else EXIT_OK


# -- export -----------------------------------------------------------------


def cmd_export(args: argparse.Namespace) -> int:
    G = _group_arg(args)
    if args.out is None and args.S is None:
        raise UsageError("export needs --out (group file) and/or --S (graph as DOT)")
    if args.out is not None:
        write_group_file(G, args.out)
    if args.S is not None:
        X = _graph(G, args)
        text = to_dot(X, "X")
        if args.dot:
            out = Path(args.dot)
            out.mkdir(parents=True, exist_ok=True)
            (out / "graph.dot").write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _common(p: argparse.ArgumentParser, *, positional: bool = True) -> None:
    if positional:
        p.add_argument("group_pos", nargs="?", metavar="GROUP", help="group spec (same as --group)")
    p.add_argument("--group", help="cyclic:<n>, dihedral:<n>, or a group file (JSON)")


def _config(p: argparse.ArgumentParser) -> None:
    p.add_argument("--N", help="normal subgroup, comma-separated labels")
    p.add_argument("--S", help="connection set, comma-separated labels")
    p.add_argument("--R", help="vertex set, comma-separated labels")
    p.add_argument("--strict", action="store_true", help="also require S ⊆ R")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roughcayley",
        description="Rough approximations of Cayley and pseudo-Cayley graphs over finite groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list normal subgroups and connection sets")
    _common(p)
    p.add_argument("--S", help="also list the vertex sets R valid for this connection set")
    p.add_argument("--subgroups", action="store_true", help="also list all subgroups")
    p.add_argument("--sample", type=int, metavar="K", help="draw K random connection sets")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("approx", help="compute a rough pair and report on it")
    p.add_argument("positional", nargs="*", metavar="[FAMILY] [GROUP]",
                   help="optional family (edge|vertex|full) and group spec")
    p.add_argument("--group", help="cyclic:<n>, dihedral:<n>, or a group file (JSON)")
    p.add_argument("--family", choices=FAMILY_NAMES)
    _config(p)
    p.add_argument("--dot", metavar="DIR", help="write lower.dot, original.dot, upper.dot")
    p.add_argument("--json", metavar="FILE", help="write the analysis report as JSON")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("check", help="evaluate one predicate; exit 0 if true, 1 if false")
    p.add_argument("predicate", choices=sorted(PREDICATES))
    _common(p)
    _config(p)
    p.add_argument("--side", choices=("lower", "upper"), default="upper")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lawsuite", help="check the algebraic laws on a group or fleet")
    _common(p)
    p.add_argument("--only", action="append", metavar="LAW", help="law id or family prefix (repeatable)")
    p.add_argument("--sample", type=int, default=DEFAULT_SAMPLES, metavar="K",
                   help="random configurations per law for groups of order > 8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="sweep every group exhaustively")
    p.add_argument("--jobs", type=int, default=1, help="worker processes across groups")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=cmd_lawsuite)

    p = sub.add_parser("export", help="write a group file and/or a graph as DOT")
    _common(p)
    _config(p)
    p.add_argument("--out", metavar="FILE", help="group file to write")
    p.add_argument("--dot", metavar="DIR", help="directory for graph.dot (default: stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RoughCayleyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
