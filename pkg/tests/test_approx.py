from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from roughcayley import (
    PreconditionError,
    classify_rough_subgroup,
    enumerate_normal_subgroups,
    is_definable,
    lower_approx,
    make_cyclic,
    make_dihedral,
    rough_pair,
    upper_approx,
)

D4_R = "P,P2,P3,Pe,P2e,P3e"


class TestLowerUpper:
    def test_z8_connection_set(self, z8):
        N, A = z8.subset("0,4"), z8.subset("1,2,6,7")
        assert set(lower_approx(z8, N, A)) == {2, 6}
        assert set(upper_approx(z8, N, A)) == {1, 2, 3, 5, 6, 7}

    def test_d4_vertex_set(self, d4):
        assert lower_approx(d4, "1,P2", D4_R).labels() == ["P", "P3", "Pe", "P3e"]

    def test_d4_reflection_upper(self, d4):
        assert upper_approx(d4, "1,P2", "e").labels() == ["e", "P2e"]

    def test_trivial_and_whole_modulus(self, small_group):
        G = small_group
        A = G.from_mask(0b1 | (1 << (G.order - 1)))
        assert lower_approx(G, G.trivial, A) == A == upper_approx(G, G.trivial, A)
        assert upper_approx(G, G.elements, A) == G.elements

    def test_rough_pair_with_empty_lower(self, z8):
        pair = rough_pair(z8, "0,2,4,6", "1,2")
        assert not pair.lower
        assert pair.upper == z8.elements
        assert pair.boundary == z8.elements and not pair.definable

    @pytest.mark.parametrize(
        "N, A, expected",
        [("0,4", "2,6", True), ("0,4", "1,2,6,7", False)],
    )
    def test_is_definable_z8(self, z8, N, A, expected):
        assert is_definable(z8, N, A) is expected

    def test_trivial_modulus_is_always_definable(self, d4):
        assert is_definable(d4, "1", D4_R)

    def test_preconditions(self, d3):
        with pytest.raises(PreconditionError, match="normal"):
            lower_approx(d3, "1,e", "P")
        with pytest.raises(PreconditionError, match="nonempty"):
            upper_approx(d3, "1", "")


class TestClassify:
    def test_modulus_inside_subgroup(self, z8):
        c = classify_rough_subgroup(z8, "0,4", "0,2,4,6")
        assert c.upper_is_subgroup and c.lower_is_subgroup

    def test_empty_lower_reports_false(self, z8):
        c = classify_rough_subgroup(z8, "0,2,4,6", "0,4")
        assert c.upper_is_subgroup
        assert not c.lower_nonempty and not c.lower_is_subgroup and not c.lower_is_normal

    def test_trivial_modulus_normal_subgroup(self, d4):
        c = classify_rough_subgroup(d4, "1", "1,P,P2,P3")
        assert c.upper_is_subgroup and c.upper_is_normal
        assert c.lower_is_subgroup and c.lower_is_normal


def test_matches_oracle_exhaustively_on_small_groups(small_group):
    G = small_group
    for N in enumerate_normal_subgroups(G):
        for a in range(1, 1 << G.order):
            A = G.from_mask(a)
            pair = rough_pair(G, N, A)
            assert frozenset(pair.lower) == oracles.lower(G, N, A)
            assert frozenset(pair.upper) == oracles.upper(G, N, A)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(2, 12), dihedral=st.booleans(), data=st.data())
def test_matches_oracle_random(n, dihedral, data):
    G = make_dihedral(n) if dihedral else make_cyclic(n)
    normals = enumerate_normal_subgroups(G)
    N = data.draw(st.sampled_from(normals))
    A = data.draw(st.sets(st.integers(0, G.order - 1), min_size=1))
    pair = rough_pair(G, N, A)
    assert frozenset(pair.lower) == oracles.lower(G, N, A)
    assert frozenset(pair.upper) == oracles.upper(G, N, A)
    assert pair.lower <= G.subset(A) <= pair.upper
