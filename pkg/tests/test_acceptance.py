"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in pytest's terminal summary (see ``conftest.py``)
and also when this file is run directly with ``python3 tests/test_acceptance.py``.
Expected values for the worked examples are written out literally; the
fleet-wide criteria compare the library against the brute-force oracles in
``oracles.py``.
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from roughcayley import (  # noqa: E402
    components,
    edge_connectivity,
    enumerate_connection_sets,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    generates,
    is_minimal_cayley_set,
    make_cyclic,
    make_dihedral,
    pseudo_cayley_graph,
    rough_edge_cayley,
    rough_pseudo,
    rough_vertex_pseudo,
    run_laws,
)
from roughcayley.cli import main as cli_main  # noqa: E402
from roughcayley.witnesses import ALL_WITNESSES, evaluate  # noqa: E402
from roughcayley.workbench import FLEETS, parse_group  # noqa: E402

RESULTS: dict[int, str] = {}
D4_R = "P,P2,P3,Pe,P2e,P3e"


def record(n: int, ok: bool, title: str, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}"
    if detail:
        line += f" -- {detail}"
    RESULTS[n] = line
    print(line)


def fleet():
    return [parse_group(spec) for spec in FLEETS["acceptance"]]


def test_criterion_1_cyclic_edge_example():
    G = make_cyclic(8)
    start = time.perf_counter()
    pair = rough_edge_cayley(G, "0,4", "1,2,6,7")
    elapsed_ms = (time.perf_counter() - start) * 1000
    lower_s, upper_s = set(pair.lower.connection), set(pair.upper.connection)
    vertices = set(range(8))
    oracle_comps = oracles.bfs_components(vertices, {frozenset(e) for e in pair.lower.edges})
    comps = components(pair.lower)
    ok = (
        lower_s == {2, 6}
        and upper_s == {1, 2, 3, 5, 6, 7}
        and sorted(len(c) for c in oracle_comps) == [4, 4]
        and {frozenset(c) for c in comps} == set(oracle_comps)
        and elapsed_ms < 1.0
    )
    record(1, ok, "Z8 edge family", f"lower S={sorted(lower_s)} upper S={sorted(upper_s)} "
           f"components={[len(c) for c in oracle_comps]} time={elapsed_ms:.3f} ms")
    assert ok


def test_criterion_2_dihedral_vertex_example():
    G = make_dihedral(4)
    pair = rough_vertex_pseudo(G, "1,P2", D4_R, "e")
    ok = (
        pair.upper.vertices == G.elements
        and pair.lower.vertices.labels() == ["P", "P3", "Pe", "P3e"]
        and pair.lower.connection.labels() == []
        and pair.lower.edge_count == 0
    )
    record(2, ok, "D4 vertex family", f"lower V={pair.lower.vertices.labels()} "
           f"lower S={pair.lower.connection.labels()} |upper V|={pair.upper.vertex_count}")
    assert ok


def test_criterion_3_dihedral_full_example():
    G = make_dihedral(4)
    pair = rough_pseudo(G, "1,P2", D4_R, "e")
    ok = (
        pair.lower.vertices.labels() == ["P", "P3", "Pe", "P3e"]
        and pair.lower.connection.labels() == []
        and pair.lower.edge_count == 0
        and pair.upper.connection.labels() == ["e", "P2e"]
    )
    record(3, ok, "D4 full family", f"lower=({pair.lower.vertices.labels()}; "
           f"{pair.lower.connection.labels()}) upper S={pair.upper.connection.labels()}")
    assert ok


def test_criterion_4_law_suites_over_fleet():
    start = time.perf_counter()
    failing: dict[str, int] = {}
    checked = 0
    for G in fleet():
        report = run_laws(G, samples=500, seed=0)
        for law, r in report.results.items():
            checked += r.checked
            if r.violations:
                failing[law] = failing.get(law, 0) + r.violations
    elapsed = time.perf_counter() - start
    ok = not failing and elapsed < 300
    detail = f"{checked} cases in {elapsed:.1f} s"
    if failing:
        detail += "; violated: " + ", ".join(f"{k} ({v})" for k, v in sorted(failing.items()))
    record(4, ok, "law suites, zero violations", detail)
    assert ok, detail


def test_criterion_5_converse_counterexamples():
    outcomes = [evaluate(w) for w in ALL_WITNESSES]
    bad = [f"{o.witness.group} {o.witness.key}: {', '.join(o.mismatches())}" for o in outcomes if not o.reproduced]
    ok = not bad
    detail = f"{len(outcomes) - len(bad)}/{len(outcomes)} reproduced"
    if bad:
        detail += "; mismatched " + "; ".join(bad)
    record(5, ok, "converse counterexamples", detail)
    assert ok, detail


def test_criterion_6_connected_iff_generates():
    mismatches, total = [], 0
    for G in fleet():
        vertices = set(range(G.order))
        for S in enumerate_connection_sets(G):
            total += 1
            bfs = oracles.is_connected(vertices, oracles.edges(G, vertices, S))
            if bfs != generates(G, S):
                mismatches.append((G.spec, S.labels()))
    ok = not mismatches
    record(6, ok, "BFS connectivity equals generation", f"{total} connection sets, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_7_minimal_sets_are_optimally_connected():
    mismatches, minimal, brute = [], 0, 0
    for G in fleet():
        vertices = set(range(G.order))
        for S in enumerate_connection_sets(G):
            lib = is_minimal_cayley_set(G, S)
            if lib != oracles.is_minimal_cayley(G, S):
                mismatches.append((G.spec, S.labels(), "minimality"))
            if not lib:
                continue
            minimal += 1
            X = pseudo_cayley_graph(G, G.elements, S)
            lam = edge_connectivity(X)
            if lam != len(S):
                mismatches.append((G.spec, S.labels(), f"lambda={lam}"))
            if X.edge_count <= 24:
                brute += 1
                es = oracles.edges(G, vertices, S)
                if oracles.brute_lambda(vertices, es) != lam:
                    mismatches.append((G.spec, S.labels(), "oracle"))
    ok = not mismatches
    record(7, ok, "minimal Cayley sets give lambda = |S|",
           f"{minimal} minimal sets, {brute} checked by edge deletion, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_8_subgroup_dichotomy():
    mismatches, total = [], 0
    for G in fleet():
        conns = enumerate_connection_sets(G)
        for H in enumerate_subgroups(G):
            inside = [S for S in conns if S <= H]
            for N in enumerate_normal_subgroups(G):
                for S in inside:
                    total += 1
                    pair = rough_vertex_pseudo(G, N, H, S)
                    X = pair.original
                    contained = N <= H
                    exact = pair.lower == X == pair.upper
                    if contained != exact or (not contained) != pair.lower.is_empty:
                        mismatches.append((G.spec, H.labels(), N.labels(), S.labels()))
    ok = not mismatches
    record(8, ok, "N ⊆ H dichotomy for (H;S)", f"{total} configurations, {len(mismatches)} mismatches")
    assert ok, mismatches[:5]


def test_criterion_9_determinism(tmp_path, capsys):
    outputs = []
    for run in ("a", "b"):
        out = tmp_path / run
        code = cli_main([
            "approx", "edge", "cyclic:8", "--N", "0,4", "--S", "1,2,6,7",
            "--dot", str(out), "--json", str(out / "report.json"),
        ])
        assert code == 0
        outputs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    capsys.readouterr()
    ok = outputs[0] == outputs[1] and set(outputs[0]) == {"lower.dot", "original.dot", "upper.dot", "report.json"}
    record(9, ok, "byte-identical approx outputs", f"files={sorted(outputs[0])}")
    assert ok


if __name__ == "__main__":  # pragma: no cover
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
