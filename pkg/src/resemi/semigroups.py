"""Finite semigroups of hashable elements, with brute-force property oracles.

Works uniformly over Transformation and GFMatrix elements (anything
immutable whose ``*`` is an associative composition).  For semigroups of
at most ``table_cap`` elements the full Cayley table is precomputed once
and every oracle runs on small-integer indices.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass


class SizeCapExceeded(ValueError):
    """A closure or build would grow past the permitted element count."""


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of one property check, with an optional witness.

    For a failed universally-quantified property the witness is a concrete
    failing element (or pair); for successful existential checks it is the
    found partner.  ``clause`` records which side of a characterization
    fired, when that is meaningful.
    """

    prop: str
    holds: bool
    witness: object = None
    clause: str | None = None


IdempotentsUnits = namedtuple("IdempotentsUnits", ["idempotents", "units", "units_available"])

_DEFAULT_TABLE_CAP = 4096


def _element_text(el) -> str:
    return el.to_text()


def _check_same_kind(elements) -> None:
    first = elements[0]
    sig = (type(first), getattr(first, "n", None), getattr(first, "p", None),
           getattr(first, "rows", None), getattr(first, "cols", None))
    for el in elements[1:]:
        if (type(el), getattr(el, "n", None), getattr(el, "p", None),
                getattr(el, "rows", None), getattr(el, "cols", None)) != sig:
            raise ValueError("mixed element kinds or sizes")


class FiniteSemigroup:
    """Explicit finite semigroup: a duplicate-free element list closed
    under ``a * b``.

    Closure is verified at construction (the verification doubles as the
    Cayley-table build).  A two-sided identity is detected by scan, never
    assumed.  Instances are immutable after construction and safe to share.
    """

    def __init__(self, elements, table_cap: int = _DEFAULT_TABLE_CAP) -> None:
        elems = []
        index: dict = {}
        for el in elements:
            if el not in index:
                index[el] = len(elems)
                elems.append(el)
        if not elems:
            raise ValueError("a semigroup needs at least one element")
        _check_same_kind(elems)
        self.elements = tuple(elems)
        self._index = index
        m = len(elems)
        if m <= table_cap:
            table = []
            for a in elems:
                row = []
                for b in elems:
                    k = index.get(a * b)
                    if k is None:
                        raise ValueError(
                            f"not closed under composition: {a!r} * {b!r} missing"
                        )
                    row.append(k)
                table.append(row)
            self.table = table
        else:
            for a in elems:
                for b in elems:
                    if a * b not in index:
                        raise ValueError(
                            f"not closed under composition: {a!r} * {b!r} missing"
                        )
            self.table = None
        self.identity_index = self._find_identity()
        self._units: list[int] | None = None
        self._inverse_of: dict[int, int] | None = None
        self._idempotents: list[int] | None = None

    # -- basics ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, el) -> bool:
        return el in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSemigroup) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"FiniteSemigroup({len(self.elements)} elements)"

    def key(self) -> frozenset:
        """Order-free identity of the semigroup (its element set)."""
        return frozenset(self.elements)

    def index_of(self, el) -> int:
        try:
            return self._index[el]
        except KeyError:
            raise ValueError("element not in semigroup") from None

    def compose_idx(self, i: int, j: int) -> int:
        if self.table is not None:
            return self.table[i][j]
        return self._index[self.elements[i] * self.elements[j]]

    @property
    def has_identity(self) -> bool:
        return self.identity_index is not None

    @property
    def identity(self):
        if self.identity_index is None:
            return None
        return self.elements[self.identity_index]

    def _find_identity(self):
        m = len(self.elements)
        if self.table is not None:
            ident = list(range(m))
            for e in range(m):
                if self.table[e] == ident and all(self.table[j][e] == j for j in range(m)):
                    return e
            return None
        for e, cand in enumerate(self.elements):
            if all(cand * x == x == x * cand for x in self.elements):
                return e
        return None

    # -- cached element classes ------------------------------------------

    def idempotent_indices(self) -> list[int]:
        if self._idempotents is None:
            self._idempotents = [
                i for i in range(len(self.elements)) if self.compose_idx(i, i) == i
            ]
        return self._idempotents

    def unit_indices(self) -> list[int]:
        """Indices of elements with a two-sided inverse (empty when there is
        no identity)."""
        if self._units is None:
            units: list[int] = []
            inverse: dict[int, int] = {}
            e = self.identity_index
            if e is not None:
                m = len(self.elements)
                for u in range(m):
                    for v in range(m):
                        if self.compose_idx(u, v) == e and self.compose_idx(v, u) == e:
                            units.append(u)
                            inverse[u] = v
                            break
            self._units = units
            self._inverse_of = inverse
        return self._units

    def inverse_of_unit(self, i: int) -> int:
        self.unit_indices()
        return self._inverse_of[i]

    def is_group(self) -> bool:
        return self.has_identity and len(self.unit_indices()) == len(self.elements)


def closure_elements(gens, size_cap: int = 1_000_000) -> list:
    """Closure of the generators as an ordered element list.

    Breadth-first over words in the generators, ties within a level broken
    by textual form, so the order is reproducible.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator required")
    _check_same_kind(gens)
    first = sorted(set(gens), key=_element_text)
    if len(first) > size_cap:
        raise SizeCapExceeded("size cap exceeded")
    order = list(first)
    known = set(order)
    frontier = order
    while frontier:
        new = {}
        for x in frontier:
            for g in first:
                prod = x * g
                if prod not in known and prod not in new:
                    new[prod] = None
        if not new:
            break
        batch = sorted(new, key=_element_text)
        if len(order) + len(batch) > size_cap:
            raise SizeCapExceeded("size cap exceeded")
        order.extend(batch)
        known.update(batch)
        frontier = batch
    return order


def generate(gens, size_cap: int = 1_000_000, table_cap: int = _DEFAULT_TABLE_CAP) -> FiniteSemigroup:
    """Smallest composition-closed superset of the generators."""
    return FiniteSemigroup(closure_elements(gens, size_cap), table_cap=table_cap)


def idempotents_units(s: FiniteSemigroup) -> IdempotentsUnits:
    """Idempotents and units of s; units are empty (flagged unavailable)
    when no two-sided identity exists."""
    idem = [s.elements[i] for i in s.idempotent_indices()]
    units = [s.elements[i] for i in s.unit_indices()]
    return IdempotentsUnits(idem, units, s.has_identity)


def element_oracle(s: FiniteSemigroup, a, mode: str) -> PropertyVerdict:
    """Exhaustive-search element check; the witness is the found partner.

    ``regular``: some b with aba = a.  ``unit_regular``: some unit u with
    aua = a (identity required).  ``completely_regular``: some b with
    aba = a and ab = ba.
    """
    i = s.index_of(a)
    m = len(s.elements)
    if mode == "regular":
        for j in range(m):
            if s.compose_idx(s.compose_idx(i, j), i) == i:
                return PropertyVerdict(mode, True, witness=s.elements[j])
        return PropertyVerdict(mode, False)
    if mode == "unit_regular":
        if not s.has_identity:
            raise ValueError("identity required")
        for j in s.unit_indices():
            if s.compose_idx(s.compose_idx(i, j), i) == i:
                return PropertyVerdict(mode, True, witness=s.elements[j])
        return PropertyVerdict(mode, False)
    if mode == "completely_regular":
        for j in range(m):
            if (
                s.compose_idx(s.compose_idx(i, j), i) == i
                and s.compose_idx(i, j) == s.compose_idx(j, i)
            ):
                return PropertyVerdict(mode, True, witness=s.elements[j])
        return PropertyVerdict(mode, False)
    raise ValueError(f"unknown element mode {mode!r}")


def semigroup_oracle(s: FiniteSemigroup, mode: str) -> PropertyVerdict:
    """Brute-force semigroup-level check; failure carries a witness."""
    if mode == "group":
        if not s.has_identity:
            return PropertyVerdict(mode, False, clause="no two-sided identity")
        units = set(s.unit_indices())
        for i in range(len(s.elements)):
            if i not in units:
                return PropertyVerdict(mode, False, witness=s.elements[i], clause="non-unit element")
        return PropertyVerdict(mode, True)
    if mode == "inverse":
        reg = semigroup_oracle(s, "regular")
        if not reg.holds:
            return PropertyVerdict(mode, False, witness=reg.witness, clause="not regular")
        idem = s.idempotent_indices()
        for e in idem:
            for f in idem:
                if s.compose_idx(e, f) != s.compose_idx(f, e):
                    return PropertyVerdict(
                        mode, False,
                        witness=(s.elements[e], s.elements[f]),
                        clause="idempotents do not commute",
                    )
        return PropertyVerdict(mode, True)
    if mode in ("regular", "unit_regular", "completely_regular"):
        for a in s.elements:
            v = element_oracle(s, a, mode)
            if not v.holds:
                return PropertyVerdict(mode, False, witness=a)
        return PropertyVerdict(mode, True)
    raise ValueError(f"unknown semigroup mode {mode!r}")


def inverse_by_unique_inverses(s: FiniteSemigroup) -> PropertyVerdict:
    """Inverse-semigroup test straight from the unique-inverse definition:
    every x has exactly one y with xyx = x and yxy = y."""
    m = len(s.elements)
    for i in range(m):
        count = 0
        for j in range(m):
            ij = s.compose_idx(i, j)
            ji = s.compose_idx(j, i)
            if s.compose_idx(ij, i) == i and s.compose_idx(ji, j) == j:
                count += 1
                if count > 1:
                    break
        if count != 1:
            return PropertyVerdict("inverse", False, witness=s.elements[i],
                                   clause=f"{count if count > 1 else 0} inverses")
    return PropertyVerdict("inverse", True)


def closure_indices(s: FiniteSemigroup, seed: set[int]) -> frozenset:
    """Indices of the subsemigroup generated inside s by the seed indices."""
    members = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (s.compose_idx(a, b), s.compose_idx(b, a)):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(members)


def _is_group_subset(s: FiniteSemigroup, idxs: frozenset) -> bool:
    ident = None
    for e in idxs:
        if all(s.compose_idx(e, x) == x == s.compose_idx(x, e) for x in idxs):
            ident = e
            break
    if ident is None:
        return False
    for x in idxs:
        if not any(
            s.compose_idx(x, y) == ident and s.compose_idx(y, x) == ident for y in idxs
        ):
            return False
    return True


def subgroup_containing(s: FiniteSemigroup, a, scan_pairs: bool = False):
    """Search for a subgroup of s containing a; None if there is none.

    Always tries the closure of {a}; with ``scan_pairs`` also the closure
    of {a, b} for every b (exhaustive, only sensible on small semigroups).
    Returns the subgroup's elements as a tuple on success.
    """
    i = s.index_of(a)
    own = closure_indices(s, {i})
    if _is_group_subset(s, own):
        return tuple(s.elements[k] for k in sorted(own))
    if scan_pairs:
        for j in range(len(s.elements)):
            sub = closure_indices(s, {i, j})
            if _is_group_subset(s, sub):
                return tuple(s.elements[k] for k in sorted(sub))
    return None
