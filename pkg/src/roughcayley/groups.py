"""Finite groups as explicit operation tables.

Elements are the dense indices ``0..n-1``; labels are for display and for
parsing user input only.  Subsets of a group are :class:`ElementSet` values
backed by an integer bitmask, which keeps the exhaustive law sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    GroupAxiomError,
    InvalidOrderError,
    PreconditionError,
    UnknownElementError,
)

#: Exhaustive operations (subgroup enumeration, law sweeps) are only
#: supported up to this order.
MAX_EXHAUSTIVE_ORDER = 64

Element = Union[int, str]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    """A finite group given by its full Cayley table.

    ``table[a][b]`` is the index of ``a*b``.  Instances are immutable; use
    :func:`make_cyclic`, :func:`make_dihedral` or :func:`make_from_table`
    rather than calling the constructor directly.
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        labels: Sequence[str],
        *,
        family: str = "table",
        param: int | None = None,
    ):
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.labels: tuple[str, ...] = tuple(labels)
        self.family = family
        self.param = param
        self.identity = next(
            e for e in range(self.order) if self.table[e] == tuple(range(self.order))
        )
        inverses = [0] * self.order
        for x in range(self.order):
            inverses[x] = self.table[x].index(self.identity)
        self.inverses: tuple[int, ...] = tuple(inverses)
        self._index = {label: i for i, label in enumerate(self.labels)}
        self._full = (1 << self.order) - 1
        self._cosets: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
        self._hash = hash((self.order, self.table))
        self._memo: dict = {}

    # -- basics -----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def label(self, x: int) -> str:
        return self.labels[x]

    def element(self, x: Element) -> int:
        """Resolve a label (or an in-range index) to an element index."""
        if isinstance(x, str):
            try:
                return self._index[x.strip()]
            except KeyError:
                raise UnknownElementError(
                    f"unknown element {x!r} for group {self.spec}"
                ) from None
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < self.order:
            raise UnknownElementError(f"element index {x!r} out of range for {self.spec}")
        return x

    def subset(self, items: "ElementSet | Iterable[Element] | str" = ()) -> "ElementSet":
        """Build an :class:`ElementSet` from indices, labels or a label string.

        A string is split on commas, so ``g.subset("P,P2e")`` works.  An
        existing ``ElementSet`` is returned unchanged after a group check.
        """
        if isinstance(items, ElementSet):
            if items.group != self:
                raise PreconditionError("element set belongs to a different group")
            return items
        if isinstance(items, str):
            items = [part for part in items.split(",") if part.strip()]
        mask = 0
        for item in items:
            mask |= 1 << self.element(item)
        return ElementSet(self, mask)

    def from_mask(self, mask: int) -> "ElementSet":
        return ElementSet(self, mask & self._full)

    @property
    def elements(self) -> "ElementSet":
        return ElementSet(self, self._full)

    @property
    def trivial(self) -> "ElementSet":
        return ElementSet(self, 1 << self.identity)

    @property
    def spec(self) -> str:
        """Short descriptor such as ``cyclic:8`` or ``dihedral:4``."""
        if self.family in ("cyclic", "dihedral"):
            return f"{self.family}:{self.param}"
        return f"table:{self.order}"

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def to_dict(self) -> dict:
        """Serialise to the group file format (always the explicit table form)."""
        return {"table": [list(row) for row in self.table], "labels": list(self.labels)}

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.table == other.table and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec})"

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        state["_cosets"] = {}
        state["_memo"] = {}
        return state

    # -- mask-level kernels (used by the approximation and law modules) ---

    def closure_mask(self, mask: int) -> int:
        """Subgroup generated by the elements in ``mask``."""
        gens = list(iter_bits(mask))
        seen = 1 << self.identity
        frontier = [self.identity]
        table = self.table
        while frontier:
            nxt = []
            for x in frontier:
                row = table[x]
                for g in gens:
                    y = row[g]
                    if not seen >> y & 1:
                        seen |= 1 << y
                        nxt.append(y)
            frontier = nxt
        return seen

    def product_mask(self, left: int, right: int) -> int:
        """The set product ``{a*b : a in left, b in right}``."""
        out = 0
        right_items = list(iter_bits(right))
        for a in iter_bits(left):
            row = self.table[a]
            for b in right_items:
                out |= 1 << row[b]
        return out

    def inverse_mask(self, mask: int) -> int:
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.inverses[x]
        return out

    def is_subgroup_mask(self, mask: int) -> bool:
        if not mask >> self.identity & 1:
            return False
        return self.product_mask(mask, mask) == mask and self.inverse_mask(mask) == mask

    def is_normal_mask(self, mask: int) -> bool:
        if not self.is_subgroup_mask(mask):
            return False
        members = list(iter_bits(mask))
        table = self.table
        for a in range(self.order):
            row, ainv = table[a], self.inverses[a]
            for n in members:
                if not mask >> table[row[n]][ainv] & 1:
                    return False
        return True

    def coset_data(self, nmask: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """``(blocks, coset_of)`` for a normal subgroup given as a mask.

        ``blocks`` lists the distinct cosets ordered by smallest member and
        ``coset_of[x]`` is the mask of ``xN``.  Normality is not rechecked.
        """
        cached = self._cosets.get(nmask)
        if cached is not None:
            return cached
        members = list(iter_bits(nmask))
        coset_of = [0] * self.order
        blocks = []
        covered = 0
        for x in range(self.order):
            if covered >> x & 1:
                continue
            row = self.table[x]
            block = 0
            for n in members:
                block |= 1 << row[n]
            blocks.append(block)
            covered |= block
            for y in iter_bits(block):
                coset_of[y] = block
        result = (tuple(blocks), tuple(coset_of))
        self._cosets[nmask] = result
        return result


@dataclass(frozen=True, slots=True, eq=False)
class ElementSet:
    """An immutable subset of a finite group."""

    group: FiniteGroup
    mask: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.mask == other.mask and (
            self.group is other.group or self.group == other.group
        )

    def __hash__(self) -> int:
        return hash((self.group, self.mask))

    def _other(self, other: "ElementSet") -> int:
        if not isinstance(other, ElementSet):
            return NotImplemented  # type: ignore[return-value]
        if other.group is not self.group and other.group != self.group:
            raise PreconditionError("element sets belong to different groups")
        return other.mask

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, x: object) -> bool:
        if isinstance(x, str):
            x = self.group.element(x)
        return isinstance(x, int) and 0 <= x < self.group.order and bool(self.mask >> x & 1)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask | self._other(other))

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask & self._other(other))

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.group, self.mask & ~self._other(other))

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~self._other(other) == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "ElementSet") -> bool:
        return other <= self

    def __gt__(self, other: "ElementSet") -> bool:
        return other < self

    def isdisjoint(self, other: "ElementSet") -> bool:
        return self.mask & self._other(other) == 0

    def labels(self) -> list[str]:
        return [self.group.labels[x] for x in self]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order by size, then lexicographically by member indices."""
        return (len(self), tuple(self))

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


# -- constructors ----------------------------------------------------------


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidOrderError(f"group parameter must be a positive integer, got {n!r}")


def make_cyclic(n: int) -> FiniteGroup:
    """The additive group of integers modulo ``n``."""
    _check_order(n)
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, [str(i) for i in range(n)], family="cyclic", param=n)


def dihedral_label(i: int, reflection: bool) -> str:
    rot = "" if i == 0 else ("P" if i == 1 else f"P{i}")
    if reflection:
        return rot + "e"
    return rot or "1"


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` with ``P**n = e**2 = 1`` and ``eP = P^-1 e``.

    Index ``i`` is the rotation ``P^i`` and index ``n + i`` is ``P^i e``, so
    the element order is ``1, P, ..., P^(n-1), e, Pe, ..., P^(n-1)e``.
    """
    _check_order(n)
    table = []
    for x in range(2 * n):
        a, fx = x % n, x // n
        row = []
        for y in range(2 * n):
            b, fy = y % n, y // n
            # P^a e^fx P^b e^fy = P^(a + (-1)^fx b) e^(fx+fy)
            rot = (a - b if fx else a + b) % n
            row.append(rot + n * ((fx + fy) % 2))
        table.append(row)
    labels = [dihedral_label(i, False) for i in range(n)]
    labels += [dihedral_label(i, True) for i in range(n)]
    return FiniteGroup(table, labels, family="dihedral", param=n)


def validate_table(table: Sequence[Sequence[int]]) -> None:
    """Raise :class:`GroupAxiomError` unless ``table`` is a group table."""
    n = len(table)
    if n == 0:
        raise InvalidOrderError("operation table is empty")
    full = set(range(n))
    for a, row in enumerate(table):
        if len(row) != n:
            raise GroupAxiomError("square", (a,), f"row {a} has {len(row)} entries, expected {n}")
        if set(row) != full:
            raise GroupAxiomError("latin-square", (a,), f"row {a} is not a permutation of 0..{n - 1}")
    for b in range(n):
        if {table[a][b] for a in range(n)} != full:
            raise GroupAxiomError(
                "latin-square", (b,), f"column {b} is not a permutation of 0..{n - 1}"
            )
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise GroupAxiomError("identity", (), "no two-sided identity element")
    e = ids[0]
    for x in range(n):
        if not any(table[x][y] == e and table[y][x] == e for y in range(n)):
            raise GroupAxiomError("inverse", (x,), f"element {x} has no two-sided inverse")
    for a in range(n):
        ra = table[a]
        for b in range(n):
            rab = table[ra[b]]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupAxiomError(
                        "associativity",
                        (a, b, c),
                        f"({a}*{b})*{c} = {rab[c]} but {a}*({b}*{c}) = {ra[rb[c]]}",
                    )


def make_from_table(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> FiniteGroup:
    """Validate a user-supplied operation table and wrap it as a group."""
    table = [list(row) for row in table]
    validate_table(table)
    n = len(table)
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = [str(s) for s in labels]
    if len(labels) != n:
        raise GroupAxiomError("labels", (len(labels),), f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise GroupAxiomError("labels", (), "labels must be distinct")
    return FiniteGroup(table, labels)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element ``(a, b)`` has index ``a * |h| + b``."""
    m = h.order
    size = g.order * m
    table = [
        [g.table[x // m][y // m] * m + h.table[x % m][y % m] for y in range(size)]
        for x in range(size)
    ]
    labels = [f"({g.labels[x // m]},{h.labels[x % m]})" for x in range(size)]
    return make_from_table(table, labels)


# -- subgroup machinery ----------------------------------------------------


def generated_subgroup(G: FiniteGroup, X: ElementSet | Iterable[Element]) -> ElementSet:
    """The smallest subgroup containing ``X``; the empty set gives ``{1}``."""
    X = G.subset(X)
    return ElementSet(G, G.closure_mask(X.mask))


def is_subgroup(G: FiniteGroup, H: ElementSet | Iterable[Element]) -> bool:
    return G.is_subgroup_mask(G.subset(H).mask)


def is_normal(G: FiniteGroup, N: ElementSet | Iterable[Element]) -> bool:
    """True iff ``N`` is a subgroup with ``aNa^-1 = N`` for every ``a``."""
    return G.is_normal_mask(G.subset(N).mask)


def _subgroup_masks(G: FiniteGroup) -> list[int]:
    if G.order > MAX_EXHAUSTIVE_ORDER:
        raise PreconditionError(
            f"subgroup enumeration is limited to order <= {MAX_EXHAUSTIVE_ORDER}"
        )
    cyclic = {G.closure_mask(1 << x) for x in range(G.order)}
    found = {G.closure_mask(0)}
    frontier = list(found)
    # every subgroup is a join of cyclic subgroups, so extend one cyclic at a time
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c & ~h:
                    k = G.closure_mask(h | c)
                    if k not in found:
                        found.add(k)
                        nxt.append(k)
        frontier = nxt
    return sorted(found, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))


def enumerate_subgroups(G: FiniteGroup) -> list[ElementSet]:
    """All subgroups of ``G`` sorted by size, then by member indices."""
    return [ElementSet(G, m) for m in _subgroup_masks(G)]


def enumerate_normal_subgroups(G: FiniteGroup) -> list[ElementSet]:
    """All normal subgroups of ``G`` sorted by size, then by member indices."""
    return [ElementSet(G, m) for m in _subgroup_masks(G) if G.is_normal_mask(m)]


def _require_normal(G: FiniteGroup, N: ElementSet) -> None:
    if not G.is_normal_mask(N.mask):
        raise PreconditionError(f"{N!r} is not a normal subgroup of {G.spec}")


def left_coset(G: FiniteGroup, x: Element, N: ElementSet | Iterable[Element]) -> ElementSet:
    """The coset ``xN`` of a normal subgroup ``N``."""
    N = G.subset(N)
    _require_normal(G, N)
    x = G.element(x)
    return ElementSet(G, G.coset_data(N.mask)[1][x])


def coset_partition(G: FiniteGroup, N: ElementSet | Iterable[Element]) -> list[ElementSet]:
    """The cosets of a normal subgroup, ordered by smallest member."""
    N = G.subset(N)
    _require_normal(G, N)
    return [ElementSet(G, b) for b in G.coset_data(N.mask)[0]]
