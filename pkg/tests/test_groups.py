from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import build
from roughcayley import (
    ElementSet,
    GroupAxiomError,
    InvalidOrderError,
    PreconditionError,
    UnknownElementError,
    coset_partition,
    direct_product,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    generated_subgroup,
    is_normal,
    is_subgroup,
    left_coset,
    make_cyclic,
    make_dihedral,
    make_from_table,
)

KLEIN_TABLE = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def _perm_dihedral(n):
    """Symmetries of the regular n-gon as vertex permutations, keyed by (rotation, flip)."""

    def compose(f, g):  # f after g
        return tuple(f[g[v]] for v in range(n))

    rot = tuple((v + 1) % n for v in range(n))
    flip = tuple((-v) % n for v in range(n))
    ident = tuple(range(n))
    perms = {}
    p = ident
    for i in range(n):
        perms[(i, 0)] = p
        perms[(i, 1)] = compose(p, flip)
        p = compose(rot, p)
    return perms, compose


class TestConstruction:
    def test_cyclic_table(self, z8):
        assert z8.table[1][7] == 0
        assert z8.identity == 0
        assert z8.inv(3) == 5

    def test_trivial_group(self):
        G = make_cyclic(1)
        assert G.order == 1 and G.identity == 0 and G.inv(0) == 0
        assert enumerate_normal_subgroups(G) == [G.trivial]

    @pytest.mark.parametrize("maker", [make_cyclic, make_dihedral])
    @pytest.mark.parametrize("bad", [0, -3, 2.5, True])
    def test_invalid_order(self, maker, bad):
        with pytest.raises(InvalidOrderError):
            maker(bad)

    def test_dihedral_relations(self, d4):
        e, P = d4.element("e"), d4.element("P")
        assert d4.label(d4.mul(e, P)) == "P3e"
        Pe = d4.element("Pe")
        assert d4.mul(Pe, Pe) == d4.identity
        assert make_dihedral(3).order == 6

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_dihedral_matches_permutation_representation(self, n):
        G = make_dihedral(n)
        perms, compose = _perm_dihedral(n) if n > 2 else (None, None)
        if perms is None or len(set(perms.values())) < 2 * n:
            # n <= 2 is not faithful on the polygon; fall back to the relations
            for x, y in itertools.product(range(2 * n), repeat=2):
                a, fx, b, fy = x % n, x // n, y % n, y // n
                rot = (a - b if fx else a + b) % n
                assert G.mul(x, y) == rot + n * ((fx + fy) % 2)
            return
        index = {perms[(i % n, i // n)]: i for i in range(2 * n)}
        for x, y in itertools.product(range(2 * n), repeat=2):
            px, py = perms[(x % n, x // n)], perms[(y % n, y // n)]
            assert G.mul(x, y) == index[compose(px, py)]

    def test_klein_from_table(self):
        G = make_from_table(KLEIN_TABLE, ["1", "a", "b", "c"])
        assert G.order == 4 and G.is_abelian()
        assert all(G.mul(x, x) == G.identity for x in range(4))

    def test_not_latin_square(self):
        with pytest.raises(GroupAxiomError) as info:
            make_from_table([[0, 1], [1, 1]])
        assert info.value.axiom == "latin-square"

    def test_associativity_witness(self):
        # A Latin square with identity 0 that is not associative (order 5 loop).
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(GroupAxiomError) as info:
            make_from_table(table)
        assert info.value.axiom == "associativity"
        a, b, c = info.value.witness
        assert table[table[a][b]][c] != table[a][table[b][c]]

    def test_label_errors(self):
        with pytest.raises(GroupAxiomError):
            make_from_table(KLEIN_TABLE, ["1", "a", "a", "c"])
        with pytest.raises(GroupAxiomError):
            make_from_table(KLEIN_TABLE, ["1", "a"])

    def test_direct_product_is_klein(self):
        G = direct_product(make_cyclic(2), make_cyclic(2))
        klein = make_from_table(KLEIN_TABLE)
        assert G.table == klein.table
        assert len(enumerate_subgroups(G)) == 5

    def test_unknown_label(self, z8):
        with pytest.raises(UnknownElementError, match="9"):
            z8.subset("1,9")


class TestElementSet:
    def test_parsing_and_protocol(self, d4):
        A = d4.subset("P, e")
        assert A.labels() == ["P", "e"]
        assert "e" in A and d4.element("P") in A and "P2" not in A
        assert len(A) == 2 and bool(A) and not d4.subset("")
        B = d4.subset(["e", "P2"])
        assert (A | B).labels() == ["P", "P2", "e"]
        assert (A & B).labels() == ["e"]
        assert (A - B).labels() == ["P"]
        assert A & B <= A < A | B

    def test_equality_and_hash(self, z8):
        assert z8.subset("0,4") == ElementSet(z8, 0b10001)
        assert len({z8.subset("0,4"), z8.subset([4, 0])}) == 1

    def test_mixed_groups_rejected(self, z8, d4):
        with pytest.raises(PreconditionError):
            z8.subset("0") | d4.subset("1")


class TestSubgroups:
    @pytest.mark.parametrize(
        "gens, expected",
        [("1", set(range(8))), ("2,6", {0, 2, 4, 6}), ("", {0})],
    )
    def test_generated_subgroup(self, z8, gens, expected):
        assert set(generated_subgroup(z8, z8.subset(gens))) == expected

    @pytest.mark.parametrize("H, expected", [("0,4", True), ("1,2", False), ("", False)])
    def test_is_subgroup(self, z8, H, expected):
        assert is_subgroup(z8, z8.subset(H)) is expected

    def test_is_normal_examples(self, d3, d4):
        assert is_normal(d4, d4.subset("1,P2"))
        assert not is_normal(d3, d3.subset("1,e"))
        assert is_normal(d3, d3.elements)

    def test_normal_subgroups_of_z8_and_d3(self, z8, d3):
        assert [set(N) for N in enumerate_normal_subgroups(z8)] == [
            {0}, {0, 4}, {0, 2, 4, 6}, set(range(8))
        ]
        assert [N.labels() for N in enumerate_normal_subgroups(d3)] == [
            ["1"], ["1", "P", "P2"], ["1", "P", "P2", "e", "Pe", "P2e"]
        ]

    @pytest.mark.parametrize("spec", ["cyclic:6", "cyclic:8", "dihedral:3", "dihedral:4", "dihedral:6"])
    def test_subgroups_match_powerset_oracle(self, spec):
        G = build(spec)
        expected = {H for H in oracles.all_subgroups(G)}
        got = {frozenset(H) for H in enumerate_subgroups(G)}
        assert got == expected
        normals = {frozenset(N) for N in enumerate_normal_subgroups(G)}
        assert normals == {H for H in expected if oracles.is_normal(G, H)}

    def test_subgroup_counts(self):
        # frozen from the powerset oracle
        assert len(enumerate_subgroups(make_dihedral(4))) == 10
        assert len(enumerate_normal_subgroups(make_dihedral(4))) == 6
        assert len(enumerate_subgroups(make_cyclic(12))) == 6


class TestCosets:
    def test_left_coset(self, z8, d4):
        assert set(left_coset(z8, 1, z8.subset("0,4"))) == {1, 5}
        N = d4.subset("1,P2")
        assert left_coset(d4, d4.identity, N) == N
        assert left_coset(d4, "P", N).labels() == ["P", "P3"]

    def test_left_coset_needs_normal(self, d3):
        with pytest.raises(PreconditionError):
            left_coset(d3, "P", d3.subset("1,e"))

    def test_partition(self, small_group):
        for N in enumerate_normal_subgroups(small_group):
            blocks = coset_partition(small_group, N)
            union = set()
            for B in blocks:
                assert len(B) == len(N)
                assert not union & set(B)
                union |= set(B)
            assert union == set(range(small_group.order))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 9), dihedral=st.booleans(), data=st.data())
def test_generated_subgroup_matches_closure_oracle(n, dihedral, data):
    G = make_dihedral(n) if dihedral else make_cyclic(n)
    X = data.draw(st.sets(st.integers(0, G.order - 1), max_size=3))
    assert frozenset(generated_subgroup(G, X)) == oracles.generated(G, X)
