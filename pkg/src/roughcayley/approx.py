"""Lower and upper approximations with respect to a normal subgroup.

The granules are the cosets ``xN``.  Both approximations are computed one
coset at a time, so results are unions of whole cosets by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .groups import ElementSet, FiniteGroup


def lower_mask(G: FiniteGroup, nmask: int, amask: int) -> int:
    """Unchecked lower approximation on raw masks; ``A = 0`` gives ``0``."""
    out = 0
    for block in G.coset_data(nmask)[0]:
        if block & ~amask == 0:
            out |= block
    return out


def upper_mask(G: FiniteGroup, nmask: int, amask: int) -> int:
    """Unchecked upper approximation on raw masks; ``A = 0`` gives ``0``."""
    out = 0
    for block in G.coset_data(nmask)[0]:
        if block & amask:
            out |= block
    return out


def _prepare(G: FiniteGroup, N, A) -> tuple[ElementSet, ElementSet]:
    N = G.subset(N)
    A = G.subset(A)
    if not G.is_normal_mask(N.mask):
        raise PreconditionError(f"{N!r} is not a normal subgroup of {G.spec}")
    if not A:
        raise PreconditionError("approximations are only defined for nonempty sets")
    return N, A


def lower_approx(G: FiniteGroup, N, A) -> ElementSet:
    """``{x in G : xN ⊆ A}``.  May be empty."""
    N, A = _prepare(G, N, A)
    return ElementSet(G, lower_mask(G, N.mask, A.mask))


def upper_approx(G: FiniteGroup, N, A) -> ElementSet:
    """``{x in G : xN ∩ A ≠ ∅}``.  Always contains ``A``."""
    N, A = _prepare(G, N, A)
    return ElementSet(G, upper_mask(G, N.mask, A.mask))


@dataclass(frozen=True)
class RoughPair:
    lower: ElementSet
    upper: ElementSet
    modulus: ElementSet

    @property
    def boundary(self) -> ElementSet:
        return self.upper - self.lower

    @property
    def definable(self) -> bool:
        return self.lower == self.upper


def rough_pair(G: FiniteGroup, N, A) -> RoughPair:
    N, A = _prepare(G, N, A)
    return RoughPair(
        lower=ElementSet(G, lower_mask(G, N.mask, A.mask)),
        upper=ElementSet(G, upper_mask(G, N.mask, A.mask)),
        modulus=N,
    )


def is_definable(G: FiniteGroup, N, A) -> bool:
    """True iff ``A`` is a union of cosets of ``N``."""
    N, A = _prepare(G, N, A)
    return lower_mask(G, N.mask, A.mask) == upper_mask(G, N.mask, A.mask)


@dataclass(frozen=True)
class RoughSubgroupClass:
    upper_is_subgroup: bool
    upper_is_normal: bool
    lower_is_subgroup: bool
    lower_is_normal: bool
    lower_nonempty: bool


def classify_rough_subgroup(G: FiniteGroup, N, A) -> RoughSubgroupClass:
    """Subgroup and normality predicates on both approximations of ``A``.

    An empty lower approximation reports both lower predicates as false.
    """
    N, A = _prepare(G, N, A)
    lo = lower_mask(G, N.mask, A.mask)
    up = upper_mask(G, N.mask, A.mask)
    return RoughSubgroupClass(
        upper_is_subgroup=G.is_subgroup_mask(up),
        upper_is_normal=G.is_normal_mask(up),
        lower_is_subgroup=bool(lo) and G.is_subgroup_mask(lo),
        lower_is_normal=bool(lo) and G.is_normal_mask(lo),
        lower_nonempty=bool(lo),
    )
