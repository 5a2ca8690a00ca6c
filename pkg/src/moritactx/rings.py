"""Finite unital rings presented by dense Cayley tables.

Elements are the indices 0..order-1; the addition and multiplication tables
are read-only int32 arrays. Rings constructed by this package (``make_zn``,
quotients, context rings) are correct by construction and only get cheap
sanity checks; user-supplied tables must go through ``validate_ring``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import bool_array, indices_of, mask_from_bool
from .errors import InvalidOrderError, MalformedTableError, NotAnIdealError
from .spans import AddGroup
from .validation import ValidationReport, Verdict, Violation, as_table

__all__ = [
    "FiniteRing",
    "RingElement",
    "RingMap",
    "make_zn",
    "ring_from_tables",
    "validate_ring",
    "quotient_ring",
    "verify_ring_map",
]


class FiniteRing:
    """A finite ring with identity, on the index set 0..order-1.

    Treat instances as immutable. Identity-based equality is intentional:
    structurally equal rings built twice are distinct carriers.
    """

    __slots__ = ("order", "add", "mul", "zero", "one", "neg", "name", "_labels", "_label_fn", "_addgroup", "_cache")

    def __init__(self, add, mul, zero: int, one: int, labels=None, name: str | None = None, label_fn=None):
        add = as_table(add, None, None, "add")
        k = add.shape[0]
        if add.shape[1] != k:
            raise MalformedTableError(f"add: expected a square table, got {add.shape}")
        mul = as_table(mul, k, k, "mul")
        if not (0 <= zero < k and 0 <= one < k):
            raise MalformedTableError(f"zero/one indices out of range for order {k}")
        if zero == one:
            raise InvalidOrderError("a unital ring needs one != zero (order >= 2)")
        self.order = k
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.name = name or f"ring{k}"
        self._labels = tuple(str(x) for x in labels) if labels is not None else None
        self._label_fn = label_fn
        self._addgroup: AddGroup | None = None
        self._cache: dict = {}
        self._basic_sanity()

    def _basic_sanity(self) -> None:
        k = self.order
        idx = np.arange(k, dtype=np.int32)
        if not (self.add[self.zero] == idx).all() or not (self.add[:, self.zero] == idx).all():
            raise MalformedTableError("zero is not an additive identity")
        if not (self.mul[self.one] == idx).all() or not (self.mul[:, self.one] == idx).all():
            raise MalformedTableError("one is not a two-sided multiplicative identity")
        hits = self.add == self.zero
        if not (hits.sum(axis=1) == 1).all():
            raise MalformedTableError("some element lacks a unique additive inverse")
        neg = hits.argmax(axis=1).astype(np.int32)
        neg.setflags(write=False)
        self.neg = neg

    # -- presentation helpers -------------------------------------------------

    def label(self, i: int) -> str:
        if self._labels is not None:
            return self._labels[i]
        if self._label_fn is not None:
            return self._label_fn(i)
        return str(i)

    @property
    def labels(self) -> tuple[str, ...]:
        if self._labels is None:
            self._labels = tuple(self.label(i) for i in range(self.order))
        return self._labels

    @property
    def addgroup(self) -> AddGroup:
        if self._addgroup is None:
            self._addgroup = AddGroup(self.add, self.zero)
        return self._addgroup

    def element(self, index: int) -> RingElement:
        return RingElement(self, int(index))

    def format_subset(self, mask: int) -> str:
        members = indices_of(mask, self.order)
        return "{" + ", ".join(self.label(int(i)) for i in members) + "}"

    def __repr__(self) -> str:
        return f"<FiniteRing {self.name} order={self.order}>"


@dataclass(frozen=True)
class RingElement:
    """One ring element; a thin index wrapper with arithmetic operators."""

    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.order:
            raise MalformedTableError(f"element index {self.index} out of range for order {self.ring.order}")

    def _check(self, other: RingElement) -> None:
        if other.ring is not self.ring:
            raise ValueError("elements live in different rings")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, int(self.ring.add[self.index, other.index]))

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.ring, int(self.ring.mul[self.index, other.index]))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, int(self.ring.neg[self.index]))

    @property
    def label(self) -> str:
        return self.ring.label(self.index)


@dataclass(frozen=True)
class RingMap:
    """A function between ring carriers, given by its image tuple."""

    source: FiniteRing
    target: FiniteRing
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.source.order:
            raise MalformedTableError(
                f"map image has {len(self.image)} entries for a source of order {self.source.order}"
            )
        for x in self.image:
            if not 0 <= x < self.target.order:
                raise MalformedTableError(f"map image value {x} out of range")

    def __call__(self, i: int) -> int:
        return self.image[i]

    def image_array(self) -> np.ndarray:
        return np.asarray(self.image, dtype=np.int64)

    def kernel_mask(self) -> int:
        arr = self.image_array()
        return mask_from_bool(arr == self.target.zero)


def make_zn(n: int) -> FiniteRing:
    """The ring of integers mod n, with labels 0..n-1."""
    if n < 2:
        raise InvalidOrderError(f"make_zn needs n >= 2, got {n}")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, zero=0, one=1, labels=[str(i) for i in range(n)], name=f"Z{n}")


def validate_ring(add, mul, zero: int | None = None, one: int | None = None) -> ValidationReport:
    """Exhaustively check the unital-ring axioms on raw tables.

    ``zero``/``one`` are inferred by scanning when not supplied. Shape or
    range problems raise MalformedTableError; axiom failures come back as
    violations with one witness each.
    """
    add = as_table(add, None, None, "add")
    k = add.shape[0]
    if add.shape[1] != k:
        raise MalformedTableError(f"add: expected a square table, got {add.shape}")
    mul = as_table(mul, k, k, "mul")
    idx = np.arange(k, dtype=np.int32)
    violations: list[Violation] = []

    if zero is None:
        hits = [z for z in range(k) if (add[z] == idx).all() and (add[:, z] == idx).all()]
        zero = hits[0] if hits else None
    if zero is None:
        violations.append(Violation("additive-identity", ("no candidate",)))
        return ValidationReport("ring", tuple(violations))

    if not ((add[zero] == idx).all() and (add[:, zero] == idx).all()):
        bad = int(np.flatnonzero(add[zero] != idx)[0])
        violations.append(Violation("additive-identity", (zero, bad)))

    if (np.sort(add, axis=1) != idx[None, :]).any():
        row = int(np.flatnonzero((np.sort(add, axis=1) != idx[None, :]).any(axis=1))[0])
        violations.append(Violation("additive-inverse", (row,)))

    if (add != add.T).any():
        a, b = map(int, np.argwhere(add != add.T)[0])
        violations.append(Violation("additive-commutativity", (a, b)))

    def assoc_witness(table: np.ndarray) -> tuple | None:
        for a in range(k):
            left = table[table[a], :]
            right = table[a][table]
            if (left != right).any():
                b, c = map(int, np.argwhere(left != right)[0])
                return (a, b, c)
        return None

    w = assoc_witness(add)
    if w:
        violations.append(Violation("additive-associativity", w))
    w = assoc_witness(mul)
    if w:
        violations.append(Violation("multiplicative-associativity", w))

    if one is None:
        hits = [e for e in range(k) if (mul[e] == idx).all() and (mul[:, e] == idx).all()]
        one = hits[0] if hits else None
    if one is None:
        violations.append(Violation("multiplicative-identity", ("no candidate",)))
    else:
        if not ((mul[one] == idx).all() and (mul[:, one] == idx).all()):
            violations.append(Violation("multiplicative-identity", (one,)))
        if one == zero:
            violations.append(Violation("identity-distinct", (zero,)))

    for a in range(k):
        left = mul[a][add]                       # a*(b+c)
        right = add[np.ix_(mul[a], mul[a])]      # a*b + a*c
        if (left != right).any():
            b, c = map(int, np.argwhere(left != right)[0])
            violations.append(Violation("left-distributivity", (a, b, c)))
            break
    for a in range(k):
        left = mul[:, a][add]                    # (b+c)*a
        right = add[np.ix_(mul[:, a], mul[:, a])]
        if (left != right).any():
            b, c = map(int, np.argwhere(left != right)[0])
            violations.append(Violation("right-distributivity", (b, c, a)))
            break

    return ValidationReport("ring", tuple(violations))


def ring_from_tables(add, mul, zero: int | None = None, one: int | None = None,
                     labels=None, name: str | None = None) -> FiniteRing:
    """Validating constructor for user-supplied tables."""
    from .errors import ValidationFailedError

    report = validate_ring(add, mul, zero, one)
    if not report.ok:
        raise ValidationFailedError("ring axioms failed: " + "; ".join(str(v) for v in report.violations), report)
    add = as_table(add, None, None, "add")
    k = add.shape[0]
    idx = np.arange(k, dtype=np.int32)
    mul = as_table(mul, k, k, "mul")
    if zero is None:
        zero = next(z for z in range(k) if (add[z] == idx).all())
    if one is None:
        one = next(e for e in range(k) if (mul[e] == idx).all() and (mul[:, e] == idx).all())
    return FiniteRing(add, mul, zero, one, labels=labels, name=name)


def _check_two_sided_ideal(ring: FiniteRing, mask: int) -> None:
    members = indices_of(mask, ring.order)
    inside = bool_array(mask, ring.order)
    if members.size == 0 or not inside[ring.zero]:
        raise NotAnIdealError("subset does not contain zero")
    if not inside[ring.add[np.ix_(members, members)]].all():
        raise NotAnIdealError("subset is not closed under addition")
    if not inside[ring.mul[:, members]].all() or not inside[ring.mul[members, :]].all():
        raise NotAnIdealError("subset does not absorb ring multiplication on both sides")


def quotient_ring(ring: FiniteRing, ideal) -> tuple[FiniteRing, RingMap]:
    """Quotient by a two-sided ideal, with the projection map.

    Cosets are ordered by their least member index; the projection sends
    each element to the rank of its coset representative.
    """
    mask = ideal.members if hasattr(ideal, "members") else int(ideal)
    _check_two_sided_ideal(ring, mask)
    members = indices_of(mask, ring.order)
    rep_of = ring.add[:, members].min(axis=1)
    reps = np.unique(rep_of)
    rank = np.full(ring.order, -1, dtype=np.int64)
    rank[reps] = np.arange(reps.size)
    proj = rank[rep_of]

    q_add = proj[ring.add[np.ix_(reps, reps)]]
    q_mul = proj[ring.mul[np.ix_(reps, reps)]]
    labels = [ring.label(int(r)) for r in reps]
    size = int(members.size)
    qname = f"{ring.name}/<{size}>"
    quotient = FiniteRing(q_add, q_mul, zero=int(proj[ring.zero]), one=int(proj[ring.one]),
                          labels=labels, name=qname)
    return quotient, RingMap(ring, quotient, tuple(int(x) for x in proj))


def verify_ring_map(f: RingMap, require_bijective: bool = False) -> Verdict:
    """Exhaustively check that a map preserves +, * and the identity.

    The witness is ("add"|"mul", a, b) for a failed pair, ("one",) for a
    broken identity, or ("bijective",) when injectivity was demanded and the
    image is not a permutation.
    """
    src, tgt = f.source, f.target
    img = f.image_array()
    if int(img[src.one]) != tgt.one:
        return Verdict(False, ("one",))
    lhs = img[src.add]
    rhs = tgt.add[np.ix_(img, img)]
    if (lhs != rhs).any():
        a, b = map(int, np.argwhere(lhs != rhs)[0])
        return Verdict(False, ("add", a, b))
    lhs = img[src.mul]
    rhs = tgt.mul[np.ix_(img, img)]
    if (lhs != rhs).any():
        a, b = map(int, np.argwhere(lhs != rhs)[0])
        return Verdict(False, ("mul", a, b))
    if require_bijective:
        if src.order != tgt.order or np.unique(img).size != tgt.order:
            return Verdict(False, ("bijective",))
    return Verdict(True)
