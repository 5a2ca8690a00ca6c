"""Contexts: two rings coupled by a pair of bimodules and two pairings.

The data (R, V, W, S, V×W -> R, W×V -> S) determines a ring on formal 2×2
arrays — r and s on the diagonal, v and w off it — provided the pairings
are biadditive, linear over the ring actions, balanced, and mixed-
associative. Everything downstream lives here: building that ring,
splitting its ideals into four slots, the closure sets tying module slots
to corner ideals, prime/semiprime reports for slotted ideals and for the
ring itself, the slotted prime radical, and the quotient construction.

Index convention for the built ring: element (r, v, w, s) sits at
``((r*|V| + v)*|W| + w)*|S| + s``, so slot order is row-major.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import bool_array, full_mask, indices_of, mask_from_bool
from .errors import (
    CapacityError,
    CentralityError,
    InconsistencyError,
    MalformedTableError,
    NotAnIdealError,
    NotASubmoduleError,
    NotProperError,
    WellDefinednessError,
)
from .ideals import (
    DEFAULT_LATTICE_CAP,
    Ideal,
    check_ideal,
    enumerate_ideals,
    is_prime_ideal,
    is_prime_ring,
    is_semiprime_ideal,
    is_semiprime_ring,
    prime_radical,
    verify_ideal,
)
from .modules import (
    Bimodule,
    ModuleView,
    Submodule,
    enumerate_submodules,
    is_prime_submodule,
    quotient_module,
    ring_bimodule,
    validate_bimodule,
    verify_submodule,
    verify_view_submodule,
)
from .rings import FiniteRing, RingMap, quotient_ring, verify_ring_map
from .validation import ValidationReport, Verdict, Violation, as_table

__all__ = [
    "MoritaContext",
    "ContextElement",
    "IdealQuadruple",
    "RadicalQuadruple",
    "ClosureSets",
    "OneSidedDecomposition",
    "QuadruplePrimeReport",
    "QuadrupleSemiprimeReport",
    "ContextPrimeReport",
    "ContextSemiprimeReport",
    "QuotientContextResult",
    "DEFAULT_ORDER_CAP",
    "validate_context",
    "build_context_ring",
    "build_ks_context",
    "decompose_ideal",
    "quadruple_conditions",
    "quadruple_mask",
    "enumerate_context_ideals",
    "side_decomposition",
    "is_prime_onesided_ideal",
    "closure_sets",
    "check_prime_quadruple",
    "check_semiprime_quadruple",
    "context_prime_radical",
    "quotient_context",
    "verify_quotient_iso",
    "product_span_vw",
    "product_span_wv",
    "is_surjective_context",
    "is_prime_context",
    "is_semiprime_context",
]

DEFAULT_ORDER_CAP = 10_000


class MoritaContext:
    """A coupled system (first ring, two bimodules, second ring, pairings).

    ``prod_vw[v, w]`` lands in the first ring, ``prod_wv[w, v]`` in the
    second. Construction checks shapes, value ranges, and that the
    bimodules' acting rings are exactly the two corner rings; the algebraic
    pairing laws are the job of ``validate_context``.
    """

    __slots__ = ("ring_r", "ring_s", "mod_v", "mod_w", "prod_vw", "prod_wv", "name", "_cache")

    def __init__(self, ring_r: FiniteRing, ring_s: FiniteRing,
                 mod_v: Bimodule, mod_w: Bimodule,
                 prod_vw, prod_wv, name: str | None = None):
        if mod_v.left_ring is not ring_r or mod_v.right_ring is not ring_s:
            raise MalformedTableError(
                "first bimodule must carry a left action of the first ring "
                "and a right action of the second")
        if mod_w.left_ring is not ring_s or mod_w.right_ring is not ring_r:
            raise MalformedTableError(
                "second bimodule must carry a left action of the second ring "
                "and a right action of the first")
        self.ring_r = ring_r
        self.ring_s = ring_s
        self.mod_v = mod_v
        self.mod_w = mod_w
        self.prod_vw = as_table(prod_vw, mod_v.order, mod_w.order, "vw pairing",
                                limit=ring_r.order)
        self.prod_wv = as_table(prod_wv, mod_w.order, mod_v.order, "wv pairing",
                                limit=ring_s.order)
        self.name = name or f"ctx({ring_r.name},{mod_v.name},{mod_w.name},{ring_s.name})"
        self._cache: dict = {}

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return (self.ring_r.order, self.mod_v.order, self.mod_w.order, self.ring_s.order)

    @property
    def order(self) -> int:
        kr, mv, mw, ks = self.dims
        return kr * mv * mw * ks

    def encode(self, r: int, v: int, w: int, s: int) -> int:
        _, mv, mw, ks = self.dims
        return ((r * mv + v) * mw + w) * ks + s

    def decode(self, index: int) -> tuple[int, int, int, int]:
        _, mv, mw, ks = self.dims
        index, s = divmod(index, ks)
        index, w = divmod(index, mw)
        r, v = divmod(index, mv)
        return (r, v, w, s)

    def component_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Slot coordinates of every element index, as four parallel arrays."""
        if "components" not in self._cache:
            _, mv, mw, ks = self.dims
            idx = np.arange(self.order, dtype=np.int64)
            rest, s_of = np.divmod(idx, ks)
            rest, w_of = np.divmod(rest, mw)
            r_of, v_of = np.divmod(rest, mv)
            for arr in (r_of, v_of, w_of, s_of):
                arr.setflags(write=False)
            self._cache["components"] = (r_of, v_of, w_of, s_of)
        return self._cache["components"]

    def label(self, index: int) -> str:
        r, v, w, s = self.decode(index)
        return (f"({self.ring_r.label(r)}, {self.mod_v.label(v)}, "
                f"{self.mod_w.label(w)}, {self.ring_s.label(s)})")

    def element(self, r: int, v: int, w: int, s: int) -> ContextElement:
        return ContextElement(self, r, v, w, s)

    def element_at(self, index: int) -> ContextElement:
        return ContextElement(self, *self.decode(index))

    def __repr__(self) -> str:
        return f"<MoritaContext {self.name} dims={self.dims}>"


@dataclass(frozen=True)
class ContextElement:
    """One element of a context ring, in slot coordinates."""

    context: MoritaContext
    r: int
    v: int
    w: int
    s: int

    def __post_init__(self):
        kr, mv, mw, ks = self.context.dims
        if not (0 <= self.r < kr and 0 <= self.v < mv
                and 0 <= self.w < mw and 0 <= self.s < ks):
            raise MalformedTableError(
                f"slot coordinates ({self.r}, {self.v}, {self.w}, {self.s}) "
                f"out of range for dims {self.context.dims}")

    @property
    def index(self) -> int:
        return self.context.encode(self.r, self.v, self.w, self.s)

    @property
    def label(self) -> str:
        return self.context.label(self.index)

    def _check(self, other: ContextElement) -> None:
        if other.context is not self.context:
            raise ValueError("elements live in different contexts")

    def __add__(self, other: ContextElement) -> ContextElement:
        self._check(other)
        ring = build_context_ring(self.context)
        return self.context.element_at(int(ring.add[self.index, other.index]))

    def __mul__(self, other: ContextElement) -> ContextElement:
        self._check(other)
        ring = build_context_ring(self.context)
        return self.context.element_at(int(ring.mul[self.index, other.index]))

    def __neg__(self) -> ContextElement:
        ring = build_context_ring(self.context)
        return self.context.element_at(int(ring.neg[self.index]))


# -- validation ---------------------------------------------------------------


def validate_context(ctx: MoritaContext) -> ValidationReport:
    """Exhaustively check the pairing laws (and re-check both bimodules).

    Twelve laws: biadditivity in each argument of each pairing, linearity
    over the four ring actions, the two balance laws across the middle
    ring, and the two mixed associativity laws. Together with the bimodule
    axioms these make the 2×2-array multiplication associative, so no
    cubic check on the built ring is needed.
    """
    violations: list[Violation] = []
    for tag, mod in (("v", ctx.mod_v), ("w", ctx.mod_w)):
        sub = validate_bimodule(mod)
        violations.extend(Violation(f"{tag}:{v.law}", v.witness) for v in sub.violations)

    P, Q = ctx.prod_vw, ctx.prod_wv
    R, S = ctx.ring_r, ctx.ring_s
    V, W = ctx.mod_v, ctx.mod_w
    kr, mv, mw, ks = ctx.dims

    def check(law: str, lhs: np.ndarray, rhs: np.ndarray) -> None:
        diff = lhs != rhs
        if diff.any():
            violations.append(Violation(law, tuple(int(x) for x in np.argwhere(diff)[0])))

    # (v1+v2)w = v1w + v2w and the three siblings
    check("vw-additive-first", P[V.add], R.add[P[:, None, :], P[None, :, :]])
    check("vw-additive-second", P[:, W.add], R.add[P[:, :, None], P[:, None, :]])
    check("wv-additive-first", Q[W.add], S.add[Q[:, None, :], Q[None, :, :]])
    check("wv-additive-second", Q[:, V.add], S.add[Q[:, :, None], Q[:, None, :]])
    # (rv)w = r(vw), v(wr) = (vw)r, and the mirror pair for the second ring
    check("vw-left-linear", P[V.left_act], R.mul[:, P.ravel()].reshape(kr, mv, mw))
    check("vw-right-linear", P[:, W.right_act], R.mul[P.ravel(), :].reshape(mv, mw, kr))
    check("wv-left-linear", Q[W.left_act], S.mul[:, Q.ravel()].reshape(ks, mw, mv))
    check("wv-right-linear", Q[:, V.right_act], S.mul[Q.ravel(), :].reshape(mw, mv, ks))
    # (vs)w = v(sw) and (wr)v = w(rv)
    check("vw-balanced", P[V.right_act], P[:, W.left_act])
    check("wv-balanced", Q[W.right_act], Q[:, V.left_act])
    # (vw)v' = v(wv') and (wv)w' = w(vw')
    check("vwv-associative", V.left_act[P], V.right_act[:, Q])
    check("wvw-associative", W.left_act[Q], W.right_act[:, P])

    return ValidationReport(f"context {ctx.name}", tuple(violations))


# -- the context ring -----------------------------------------------------------


def build_context_ring(ctx: MoritaContext, cap: int = DEFAULT_ORDER_CAP) -> FiniteRing:
    """The ring of 2×2 slot arrays over the context (cached on the context).

    Addition is slotwise. Multiplication follows the array rule: the
    diagonal slots collect a ring product plus a pairing value, the off-
    diagonal slots collect the two one-sided actions. Zero and one are the
    diagonal embeddings of the corner identities.
    """
    n = ctx.order
    if n > cap:
        raise CapacityError(f"context ring of {ctx.name} has order {n}, over the cap {cap}", cap)
    if "ring" in ctx._cache:
        return ctx._cache["ring"]
    kr, mv, mw, ks = ctx.dims
    R, S, V, W = ctx.ring_r, ctx.ring_s, ctx.mod_v, ctx.mod_w
    P, Q = ctx.prod_vw, ctx.prod_wv
    r_of, v_of, w_of, s_of = ctx.component_arrays()

    add = np.empty((n, n), dtype=np.int32)
    mul = np.empty((n, n), dtype=np.int32)
    chunk = max(1, (1 << 21) // n)
    for lo in range(0, n, chunk):
        rows = slice(lo, min(lo + chunk, n))
        r1, v1 = r_of[rows][:, None], v_of[rows][:, None]
        w1, s1 = w_of[rows][:, None], s_of[rows][:, None]
        r2, v2, w2, s2 = r_of[None, :], v_of[None, :], w_of[None, :], s_of[None, :]

        add[rows] = ((R.add[r1, r2] * mv + V.add[v1, v2]) * mw
                     + W.add[w1, w2]) * ks + S.add[s1, s2]

        rr = R.add[R.mul[r1, r2], P[v1, w2]]
        vv = V.add[V.left_act[r1, v2], V.right_act[v1, s2]]
        ww = W.add[W.right_act[w1, r2], W.left_act[s1, w2]]
        ss = S.add[Q[w1, v2], S.mul[s1, s2]]
        mul[rows] = ((rr * mv + vv) * mw + ww) * ks + ss

    ring = FiniteRing(
        add, mul,
        zero=ctx.encode(R.zero, V.zero, W.zero, S.zero),
        one=ctx.encode(R.one, V.zero, W.zero, S.one),
        name=f"T({ctx.name})", label_fn=ctx.label,
    )
    ctx._cache["ring"] = ring
    return ring


def build_ks_context(ring: FiniteRing, s) -> MoritaContext:
    """The one-ring context with all four carriers equal and pairings s·x·y.

    ``s`` (an index or element of ``ring``) must be central; the witness in
    the centrality error is the element it fails to commute with. For small
    rings the built product table is re-derived from the scalar formula
    entry by entry as a self-check.
    """
    s_idx = s.index if hasattr(s, "index") else int(s)
    if not 0 <= s_idx < ring.order:
        raise MalformedTableError(f"scalar index {s_idx} out of range for {ring.name}")
    clash = ring.mul[s_idx] != ring.mul[:, s_idx]
    if clash.any():
        other = int(np.flatnonzero(clash)[0])
        raise CentralityError(
            f"scalar {ring.label(s_idx)} is not central in {ring.name}: "
            f"it does not commute with {ring.label(other)}", other)
    mod_v = ring_bimodule(ring)
    mod_w = ring_bimodule(ring)
    pair = ring.mul[ring.mul[s_idx], :]          # [x, y] = s*x*y
    ctx = MoritaContext(ring, ring, mod_v, mod_w, pair, pair,
                        name=f"ks({ring.name},{ring.label(s_idx)})")
    report = validate_context(ctx)
    if not report.ok:
        raise InconsistencyError(
            f"scaled context over {ring.name} failed validation, which central "
            "scalars never should: " + "; ".join(str(v) for v in report.violations))
    if ring.order <= 8:
        _verify_scaled_formula(ctx, ring, s_idx)
    return ctx


def _verify_scaled_formula(ctx: MoritaContext, ring: FiniteRing, s_idx: int) -> None:
    """Compare the built product table against a direct slotwise recompute."""
    built = build_context_ring(ctx)
    n = built.order
    _, mv, mw, ks = ctx.dims
    r_of, v_of, w_of, s_of = ctx.component_arrays()
    mul, srow = ring.mul, ring.mul[s_idx]
    chunk = max(1, (1 << 21) // n)
    for lo in range(0, n, chunk):
        rows = slice(lo, min(lo + chunk, n))
        r1, v1 = r_of[rows][:, None], v_of[rows][:, None]
        w1, s1 = w_of[rows][:, None], s_of[rows][:, None]
        r2, v2, w2, s2 = r_of[None, :], v_of[None, :], w_of[None, :], s_of[None, :]
        part_r = ring.add[mul[r1, r2], srow[mul[v1, w2]]]
        part_v = ring.add[mul[r1, v2], mul[v1, s2]]
        part_w = ring.add[mul[w1, r2], mul[s1, w2]]
        part_s = ring.add[srow[mul[w1, v2]], mul[s1, s2]]
        expected = ((part_r * mv + part_v) * mw + part_w) * ks + part_s
        bad = built.mul[rows] != expected
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise InconsistencyError(
                f"scaled context ring disagrees with the direct formula at "
                f"({built.label(lo + i)}) * ({built.label(j)})")


# -- product spans ------------------------------------------------------------


def product_span_vw(ctx: MoritaContext) -> int:
    """Additive span, in the first ring, of all first-pairing values."""
    if "span_vw" not in ctx._cache:
        ctx._cache["span_vw"] = ctx.ring_r.addgroup.span_mask(np.unique(ctx.prod_vw))
    return ctx._cache["span_vw"]


def product_span_wv(ctx: MoritaContext) -> int:
    """Additive span, in the second ring, of all second-pairing values."""
    if "span_wv" not in ctx._cache:
        ctx._cache["span_wv"] = ctx.ring_s.addgroup.span_mask(np.unique(ctx.prod_wv))
    return ctx._cache["span_wv"]


def is_surjective_context(ctx: MoritaContext) -> bool:
    """Do the pairing values span both corner rings additively?

    This is the hypothesis gating every converse direction: with full
    spans, corner-level facts lift back to the whole ring.
    """
    return (product_span_vw(ctx) == full_mask(ctx.ring_r.order)
            and product_span_wv(ctx) == full_mask(ctx.ring_s.order))


# -- two-sided ideals in slot form ----------------------------------------------


@dataclass(frozen=True)
class IdealQuadruple:
    """A two-sided ideal of a context ring, sliced into its four slots."""

    context: MoritaContext
    r_part: Ideal
    v_part: Submodule
    w_part: Submodule
    s_part: Ideal

    @property
    def masks(self) -> tuple[int, int, int, int]:
        return (self.r_part.members, self.v_part.members,
                self.w_part.members, self.s_part.members)

    @property
    def size(self) -> int:
        return (self.r_part.size * self.v_part.size
                * self.w_part.size * self.s_part.size)

    def is_proper(self) -> bool:
        return self.size < self.context.order

    def member_mask(self) -> int:
        """Mask of the corresponding subset of the context ring."""
        return quadruple_mask(self.context, *self.masks)

    def conditions(self) -> list[tuple[str, bool, tuple | None]]:
        return quadruple_conditions(self.context, *self.masks)

    def __str__(self) -> str:
        ctx = self.context
        return (f"(R={ctx.ring_r.format_subset(self.r_part.members)}, "
                f"V={ctx.mod_v.format_subset(self.v_part.members)}, "
                f"W={ctx.mod_w.format_subset(self.w_part.members)}, "
                f"S={ctx.ring_s.format_subset(self.s_part.members)})")


@dataclass(frozen=True)
class RadicalQuadruple(IdealQuadruple):
    """The prime radical of a context ring, in the same slot form."""


def quadruple_mask(ctx: MoritaContext, i_mask: int, v1_mask: int,
                   w1_mask: int, j_mask: int) -> int:
    """Members of the context ring whose four slots lie in the four sets."""
    kr, mv, mw, ks = ctx.dims
    r_of, v_of, w_of, s_of = ctx.component_arrays()
    keep = (bool_array(i_mask, kr)[r_of] & bool_array(v1_mask, mv)[v_of]
            & bool_array(w1_mask, mw)[w_of] & bool_array(j_mask, ks)[s_of])
    return mask_from_bool(keep)


def quadruple_conditions(ctx: MoritaContext, i_mask: int, v1_mask: int,
                         w1_mask: int, j_mask: int) -> list[tuple[str, bool, tuple | None]]:
    """The eight compatibility conditions a slot quadruple must satisfy.

    Returns (law, ok, witness) triples in a fixed order. A quadruple of
    closed slots forms an ideal of the context ring exactly when all eight
    hold; witnesses are (row element, column element) pairs in the carriers
    named by the law.
    """
    V, W = ctx.mod_v, ctx.mod_w
    P, Q = ctx.prod_vw, ctx.prod_wv
    kr, mv, mw, ks = ctx.dims
    in_i, in_j = bool_array(i_mask, kr), bool_array(j_mask, ks)
    in_v1, in_w1 = bool_array(v1_mask, mv), bool_array(w1_mask, mw)
    i_members, j_members = indices_of(i_mask, kr), indices_of(j_mask, ks)
    v1_members, w1_members = indices_of(v1_mask, mv), indices_of(w1_mask, mw)

    def entry(law: str, ok: np.ndarray, rows, cols) -> tuple[str, bool, tuple | None]:
        if ok.all():
            return (law, True, None)
        a, b = np.argwhere(~ok)[0]
        ra = int(rows[a]) if rows is not None else int(a)
        cb = int(cols[b]) if cols is not None else int(b)
        return (law, False, (ra, cb))

    return [
        entry("v_part*W<=r_part", in_i[P[v1_members, :]], v1_members, None),
        entry("w_part*V<=s_part", in_j[Q[w1_members, :]], w1_members, None),
        entry("r_part*V<=v_part", in_v1[V.left_act[i_members, :]], i_members, None),
        entry("s_part*W<=w_part", in_w1[W.left_act[j_members, :]], j_members, None),
        entry("V*w_part<=r_part", in_i[P[:, w1_members]], None, w1_members),
        entry("W*v_part<=s_part", in_j[Q[:, v1_members]], None, v1_members),
        entry("V*s_part<=v_part", in_v1[V.right_act[:, j_members]], None, j_members),
        entry("W*r_part<=w_part", in_w1[W.right_act[:, i_members]], None, i_members),
    ]


def _as_mask(subset) -> int:
    return subset.members if hasattr(subset, "members") else int(subset)


def decompose_ideal(ctx: MoritaContext, u) -> IdealQuadruple:
    """Slice a two-sided ideal of the context ring into its slot quadruple.

    The slots are read off along the four axes through zero; membership
    must then be exactly slotwise, every slot must be closed, and all
    eight compatibility conditions must hold. Any of those failing for a
    verified ideal signals a bug, not bad input.
    """
    mask = _as_mask(u)
    ring = build_context_ring(ctx)
    verify_ideal(ring, mask, "two")
    kr, mv, mw, ks = ctx.dims
    R, S, V, W = ctx.ring_r, ctx.ring_s, ctx.mod_v, ctx.mod_w
    in_u = bool_array(mask, ring.order)

    def axis(values, r, v, w, s) -> int:
        slots = ((r * mv + v) * mw + w) * ks + s
        return mask_from_bool(in_u[slots])

    lane = np.arange
    i_mask = axis(None, lane(kr), V.zero, W.zero, S.zero)
    v1_mask = axis(None, R.zero, lane(mv), W.zero, S.zero)
    w1_mask = axis(None, R.zero, V.zero, lane(mw), S.zero)
    j_mask = axis(None, R.zero, V.zero, W.zero, lane(ks))

    if quadruple_mask(ctx, i_mask, v1_mask, w1_mask, j_mask) != mask:
        raise InconsistencyError(
            f"ideal of {ring.name} is not determined by its four slots; this is a bug")
    try:
        quad = IdealQuadruple(
            ctx,
            verify_ideal(R, i_mask, "two"),
            verify_submodule(V, v1_mask, "bi"),
            verify_submodule(W, w1_mask, "bi"),
            verify_ideal(S, j_mask, "two"),
        )
    except (NotAnIdealError, NotASubmoduleError) as exc:
        raise InconsistencyError(f"slot of a decomposed ideal is not closed: {exc}") from exc
    failed = [law for law, ok, _ in quad.conditions() if not ok]
    if failed:
        raise InconsistencyError(
            "decomposed ideal violates slot compatibility: " + ", ".join(failed))
    return quad


def enumerate_context_ideals(ctx: MoritaContext, cap: int = DEFAULT_LATTICE_CAP,
                             cross_check: bool = True) -> list[IdealQuadruple]:
    """All two-sided ideals of the context ring, as slot quadruples.

    Candidates are ideals of the corner rings crossed with two-sided
    submodules of the carriers, filtered by the eight compatibility
    conditions (evaluated pairwise, since each condition couples exactly
    two slots). With ``cross_check`` the result is compared against direct
    enumeration on the built ring whenever that ring is small enough to
    build.
    """
    key = ("quadruples", cap, cross_check)
    if key in ctx._cache:
        return ctx._cache[key]
    R, S, V, W = ctx.ring_r, ctx.ring_s, ctx.mod_v, ctx.mod_w
    P, Q = ctx.prod_vw, ctx.prod_wv
    r_ideals = enumerate_ideals(R, "two", cap)
    s_ideals = enumerate_ideals(S, "two", cap)
    v_subs = enumerate_submodules(V, "bi", cap)
    w_subs = enumerate_submodules(W, "bi", cap)

    in_i = [bool_array(c.members, R.order) for c in r_ideals]
    in_j = [bool_array(c.members, S.order) for c in s_ideals]
    in_v = [bool_array(c.members, V.order) for c in v_subs]
    in_w = [bool_array(c.members, W.order) for c in w_subs]
    mem_i = [c.member_indices() for c in r_ideals]
    mem_j = [c.member_indices() for c in s_ideals]
    mem_v = [c.member_indices() for c in v_subs]
    mem_w = [c.member_indices() for c in w_subs]

    # Each of the eight conditions couples one corner ideal with one module
    # slot, so compatibility factors into four pairwise tables.
    ok_iv = np.array([[bool(in_i[a][P[mem_v[b], :]].all()
                            and in_v[b][V.left_act[mem_i[a], :]].all())
                       for b in range(len(v_subs))] for a in range(len(r_ideals))])
    ok_iw = np.array([[bool(in_i[a][P[:, mem_w[c]]].all()
                            and in_w[c][W.right_act[:, mem_i[a]]].all())
                       for c in range(len(w_subs))] for a in range(len(r_ideals))])
    ok_jv = np.array([[bool(in_j[d][Q[:, mem_v[b]]].all()
                            and in_v[b][V.right_act[:, mem_j[d]]].all())
                       for b in range(len(v_subs))] for d in range(len(s_ideals))])
    ok_jw = np.array([[bool(in_j[d][Q[mem_w[c], :]].all()
                            and in_w[c][W.left_act[mem_j[d], :]].all())
                       for c in range(len(w_subs))] for d in range(len(s_ideals))])

    found: list[IdealQuadruple] = []
    for a, i in enumerate(r_ideals):
        for b, v1 in enumerate(v_subs):
            if not ok_iv[a, b]:
                continue
            for c, w1 in enumerate(w_subs):
                if not ok_iw[a, c]:
                    continue
                for d, j in enumerate(s_ideals):
                    if ok_jv[d, b] and ok_jw[d, c]:
                        found.append(IdealQuadruple(ctx, i, v1, w1, j))
    found.sort(key=lambda q: (q.size,) + q.masks)

    if cross_check and ctx.order <= DEFAULT_ORDER_CAP:
        ring = build_context_ring(ctx)
        direct = {c.members for c in enumerate_ideals(ring, "two", cap)}
        ours = {q.member_mask() for q in found}
        if direct != ours:
            raise InconsistencyError(
                f"slot enumeration found {len(ours)} ideals of {ring.name}, "
                f"direct enumeration found {len(direct)}")
    ctx._cache[key] = found
    return found


# -- one-sided ideals and their block decompositions ------------------------------


@dataclass(frozen=True)
class OneSidedDecomposition:
    """A one-sided ideal of a context ring split into two coordinate blocks.

    Right ideals project onto pairs over (first ring, second module) and
    (first module, second ring); left ideals onto (first ring, first
    module) and (second module, second ring). The flags record what holds
    of the blocks: one-sided closure, the solo-matrix embeddings back into
    the ideal, the two cross-block pairing containments, and whether
    blockwise membership reproduces the ideal exactly.
    """

    context: MoritaContext
    side: str
    part1_view: ModuleView
    part2_view: ModuleView
    part1_mask: int
    part2_mask: int
    part1_closed: bool
    part2_closed: bool
    part1_embeds: bool
    part2_embeds: bool
    pairing_1_to_2: bool
    pairing_2_to_1: bool
    reconstructs: bool

    @property
    def all_hold(self) -> bool:
        return (self.part1_closed and self.part2_closed
                and self.part1_embeds and self.part2_embeds
                and self.pairing_1_to_2 and self.pairing_2_to_1
                and self.reconstructs)


def _pair_views(ctx: MoritaContext, side: str) -> tuple[ModuleView, ModuleView]:
    """One-sided module structures on the two coordinate blocks (cached)."""
    key = ("pair-views", side)
    if key in ctx._cache:
        return ctx._cache[key]
    R, S, V, W = ctx.ring_r, ctx.ring_s, ctx.mod_v, ctx.mod_w
    kr, mv, mw, ks = ctx.dims

    def block(left_order: int, right_order: int, left_add, right_add,
              left_label, right_label) -> tuple[np.ndarray, list[str], np.ndarray, np.ndarray]:
        idx = np.arange(left_order * right_order)
        a_of, b_of = idx // right_order, idx % right_order
        add = (left_add[a_of[:, None], a_of[None, :]] * right_order
               + right_add[b_of[:, None], b_of[None, :]])
        labels = [f"({left_label(int(a))}, {right_label(int(b))})"
                  for a, b in zip(a_of, b_of)]
        return add, labels, a_of, b_of

    if side == "right":
        add1, labels1, a1, b1 = block(kr, mw, R.add, W.add, R.label, W.label)
        act1 = (R.mul[a1, :] * mw + W.right_act[b1, :]).T
        view1 = ModuleView(R, "right", add1, act1, R.zero * mw + W.zero,
                           labels=labels1, name=f"{R.name}(+){W.name}")
        add2, labels2, a2, b2 = block(mv, ks, V.add, S.add, V.label, S.label)
        act2 = (V.right_act[a2, :] * ks + S.mul[b2, :]).T
        view2 = ModuleView(S, "right", add2, act2, V.zero * ks + S.zero,
                           labels=labels2, name=f"{V.name}(+){S.name}")
    elif side == "left":
        add1, labels1, a1, b1 = block(kr, mv, R.add, V.add, R.label, V.label)
        act1 = R.mul[:, a1] * mv + V.left_act[:, b1]
        view1 = ModuleView(R, "left", add1, act1, R.zero * mv + V.zero,
                           labels=labels1, name=f"{R.name}(+){V.name}")
        add2, labels2, a2, b2 = block(mw, ks, W.add, S.add, W.label, S.label)
        act2 = W.left_act[:, a2] * ks + S.mul[:, b2]
        view2 = ModuleView(S, "left", add2, act2, W.zero * ks + S.zero,
                           labels=labels2, name=f"{W.name}(+){S.name}")
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ctx._cache[key] = (view1, view2)
    return view1, view2


def side_decomposition(ctx: MoritaContext, u, side: str) -> OneSidedDecomposition:
    """Project a one-sided ideal onto its two coordinate blocks and audit them.

    Every flag in the result is computed, not assumed; for genuine
    one-sided ideals they all come out true, which is exactly what the
    structure checks assert downstream.
    """
    mask = _as_mask(u)
    ring = build_context_ring(ctx)
    verdict = check_ideal(ring, mask, side)
    if not verdict:
        raise NotAnIdealError(
            f"subset is not a {side}-sided ideal of {ring.name}; "
            f"first failure {verdict.witness}")
    kr, mv, mw, ks = ctx.dims
    R, S, V, W = ctx.ring_r, ctx.ring_s, ctx.mod_v, ctx.mod_w
    P, Q = ctx.prod_vw, ctx.prod_wv
    r_of, v_of, w_of, s_of = ctx.component_arrays()
    members = indices_of(mask, ring.order)
    in_u = bool_array(mask, ring.order)
    view1, view2 = _pair_views(ctx, side)

    if side == "right":
        p1_all, p2_all = r_of * mw + w_of, v_of * ks + s_of
    else:
        p1_all, p2_all = r_of * mv + v_of, w_of * ks + s_of
    in_p1 = np.zeros(view1.order, dtype=bool)
    in_p2 = np.zeros(view2.order, dtype=bool)
    in_p1[p1_all[members]] = True
    in_p2[p2_all[members]] = True
    part1_mask, part2_mask = mask_from_bool(in_p1), mask_from_bool(in_p2)

    def closed(view: ModuleView, m: int) -> bool:
        try:
            verify_view_submodule(view, m)
            return True
        except NotASubmoduleError:
            return False

    p1_members = indices_of(part1_mask, view1.order)
    p2_members = indices_of(part2_mask, view2.order)
    enc = ctx.encode
    if side == "right":
        a1, b1 = p1_members // mw, p1_members % mw
        a2, b2 = p2_members // ks, p2_members % ks
        solo1 = ((a1 * mv + V.zero) * mw + b1) * ks + S.zero      # (r, 0, w, 0)
        solo2 = ((R.zero * mv + a2) * mw + W.zero) * ks + b2      # (0, v, 0, s)
        # (r, w)·v = (rv, wv) must land in block 2; (v, s)·w = (vw, sw) in block 1
        pairing_1_to_2 = bool(in_p2[V.left_act[a1] * ks + Q[b1]].all())
        pairing_2_to_1 = bool(in_p1[P[a2] * mw + W.left_act[b2]].all())
    else:
        a1, b1 = p1_members // mv, p1_members % mv
        a2, b2 = p2_members // ks, p2_members % ks
        solo1 = ((a1 * mv + b1) * mw + W.zero) * ks + S.zero      # (r, v, 0, 0)
        solo2 = ((R.zero * mv + V.zero) * mw + a2) * ks + b2      # (0, 0, w, s)
        # w·(r, v) = (wr, wv) must land in block 2; v·(w, s) = (vw, vs) in block 1
        pairing_1_to_2 = bool(in_p2[W.right_act[:, a1].T * ks + Q[:, b1].T].all())
        pairing_2_to_1 = bool(in_p1[P[:, a2].T * mv + V.right_act[:, b2].T].all())

    return OneSidedDecomposition(
        context=ctx, side=side, part1_view=view1, part2_view=view2,
        part1_mask=part1_mask, part2_mask=part2_mask,
        part1_closed=closed(view1, part1_mask),
        part2_closed=closed(view2, part2_mask),
        part1_embeds=bool(in_u[solo1].all()),
        part2_embeds=bool(in_u[solo2].all()),
        pairing_1_to_2=pairing_1_to_2,
        pairing_2_to_1=pairing_2_to_1,
        reconstructs=bool(((in_p1[p1_all] & in_p2[p2_all]) == in_u).all()),
    )


def is_prime_onesided_ideal(ctx: MoritaContext, u, side: str) -> Verdict:
    """Elementwise primeness of a one-sided ideal of the context ring.

    The test is the same middle-quantified scan used for two-sided ideals
    — a·x·b inside for every x forces a or b inside — which only needs the
    target to be additively closed.
    """
    mask = _as_mask(u)
    ring = build_context_ring(ctx)
    verdict = check_ideal(ring, mask, side)
    if not verdict:
        raise NotAnIdealError(
            f"subset is not a {side}-sided ideal of {ring.name}; "
            f"first failure {verdict.witness}")
    return is_prime_ideal(Ideal(ring, mask, side))


# -- closure sets -----------------------------------------------------------------


@dataclass(frozen=True)
class ClosureSets:
    """The four sets of module elements a pair of corner ideals crushes.

    ``v_into_r`` collects first-module elements all of whose pairings land
    in the first-ring ideal; ``v_into_s`` those crushed from the other side
    into the second-ring ideal; likewise ``w_into_r`` / ``w_into_s`` for
    the second module. Each is always a two-sided submodule of its carrier.
    """

    v_into_r: int
    v_into_s: int
    w_into_r: int
    w_into_s: int

    @property
    def v_agree(self) -> bool:
        return self.v_into_r == self.v_into_s

    @property
    def w_agree(self) -> bool:
        return self.w_into_r == self.w_into_s


def closure_sets(ctx: MoritaContext, i, j) -> ClosureSets:
    """Membership scan for the four closure sets of a corner-ideal pair."""
    i_mask, j_mask = _as_mask(i), _as_mask(j)
    for ring, m, which in ((ctx.ring_r, i_mask, "first"), (ctx.ring_s, j_mask, "second")):
        verdict = check_ideal(ring, m, "two")
        if not verdict:
            raise NotAnIdealError(
                f"{which} argument is not a two-sided ideal of {ring.name}; "
                f"first failure {verdict.witness}")
    P, Q = ctx.prod_vw, ctx.prod_wv
    in_i = bool_array(i_mask, ctx.ring_r.order)
    in_j = bool_array(j_mask, ctx.ring_s.order)
    sets = ClosureSets(
        v_into_r=mask_from_bool(in_i[P].all(axis=1)),
        v_into_s=mask_from_bool(in_j[Q].all(axis=0)),
        w_into_r=mask_from_bool(in_i[P].all(axis=0)),
        w_into_s=mask_from_bool(in_j[Q].all(axis=1)),
    )
    for mod, m in ((ctx.mod_v, sets.v_into_r), (ctx.mod_v, sets.v_into_s),
                   (ctx.mod_w, sets.w_into_r), (ctx.mod_w, sets.w_into_s)):
        try:
            verify_submodule(mod, m, "bi")
        except NotASubmoduleError as exc:
            raise InconsistencyError(
                f"closure set {mod.format_subset(m)} of {mod.name} is not a "
                f"two-sided submodule; this is a bug") from exc
    return sets


# -- prime and semiprime slotted ideals ---------------------------------------------


def _corner_prime(ring: FiniteRing, mask: int) -> bool:
    """Elementwise corner primeness, with the whole ring passing vacuously.

    An improper corner leaves no elements outside to witness a failure, so
    the defining implication holds by default; treating it otherwise would
    break the slot descriptions on contexts whose pairings vanish.
    """
    if mask == full_mask(ring.order):
        return True
    return bool(is_prime_ideal(Ideal(ring, mask, "two")))


def _corner_semiprime(ring: FiniteRing, mask: int) -> bool:
    if mask == full_mask(ring.order):
        return True
    return bool(is_semiprime_ideal(Ideal(ring, mask, "two")))


@dataclass(frozen=True)
class QuadruplePrimeReport:
    """Primeness of a slotted ideal, against its corner-and-closure description.

    ``cond2`` is the slot-level description: both corners pass the
    elementwise primeness condition and both module slots equal their
    closure sets (which must also agree pairwise). ``forward_ok`` and
    ``converse_ok`` are the two implications between it and actual
    primeness in the context ring, the converse gated on surjectivity.
    """

    quadruple: IdealQuadruple
    is_prime: bool
    witness: tuple | None
    cond2: bool
    surjective: bool
    r_prime: bool
    s_prime: bool
    v_matches: bool
    w_matches: bool
    closures: ClosureSets

    @property
    def forward_ok(self) -> bool:
        return (not self.is_prime) or self.cond2

    @property
    def converse_ok(self) -> bool:
        return (not (self.cond2 and self.surjective)) or self.is_prime


@dataclass(frozen=True)
class QuadrupleSemiprimeReport:
    """Semiprimeness of a slotted ideal; the two descriptions must agree outright."""

    quadruple: IdealQuadruple
    is_semiprime: bool
    witness: int | None
    cond2: bool
    r_semiprime: bool
    s_semiprime: bool
    v_matches: bool
    w_matches: bool
    closures: ClosureSets

    @property
    def theorem_violation(self) -> bool:
        """True when the elementwise answer and the slot description split."""
        return self.is_semiprime != self.cond2


def _slot_description(ctx: MoritaContext, quad: IdealQuadruple) -> tuple[ClosureSets, bool, bool]:
    sets = closure_sets(ctx, quad.r_part, quad.s_part)
    _, v1_mask, w1_mask, _ = quad.masks
    v_matches = v1_mask == sets.v_into_r == sets.v_into_s
    w_matches = w1_mask == sets.w_into_r == sets.w_into_s
    return sets, v_matches, w_matches


def check_prime_quadruple(ctx: MoritaContext, quad: IdealQuadruple) -> QuadruplePrimeReport:
    """Compare elementwise primeness of a slotted ideal with its slot description."""
    ring = build_context_ring(ctx)
    t_mask = quad.member_mask()
    verify_ideal(ring, t_mask, "two")
    if t_mask == full_mask(ring.order):
        raise NotProperError("primeness is only defined for proper ideals")
    verdict = is_prime_ideal(Ideal(ring, t_mask, "two"))
    sets, v_matches, w_matches = _slot_description(ctx, quad)
    r_prime = _corner_prime(ctx.ring_r, quad.r_part.members)
    s_prime = _corner_prime(ctx.ring_s, quad.s_part.members)
    return QuadruplePrimeReport(
        quadruple=quad, is_prime=bool(verdict), witness=verdict.witness,
        cond2=r_prime and s_prime and v_matches and w_matches,
        surjective=is_surjective_context(ctx),
        r_prime=r_prime, s_prime=s_prime,
        v_matches=v_matches, w_matches=w_matches, closures=sets)


def check_semiprime_quadruple(ctx: MoritaContext, quad: IdealQuadruple) -> QuadrupleSemiprimeReport:
    """Compare elementwise semiprimeness of a slotted ideal with its slot description."""
    ring = build_context_ring(ctx)
    t_mask = quad.member_mask()
    verify_ideal(ring, t_mask, "two")
    if t_mask == full_mask(ring.order):
        raise NotProperError("semiprimeness is only defined for proper ideals")
    verdict = is_semiprime_ideal(Ideal(ring, t_mask, "two"))
    sets, v_matches, w_matches = _slot_description(ctx, quad)
    r_semiprime = _corner_semiprime(ctx.ring_r, quad.r_part.members)
    s_semiprime = _corner_semiprime(ctx.ring_s, quad.s_part.members)
    return QuadrupleSemiprimeReport(
        quadruple=quad, is_semiprime=bool(verdict), witness=verdict.witness,
        cond2=r_semiprime and s_semiprime and v_matches and w_matches,
        r_semiprime=r_semiprime, s_semiprime=s_semiprime,
        v_matches=v_matches, w_matches=w_matches, closures=sets)


# -- radical and quotient ----------------------------------------------------------


def context_prime_radical(ctx: MoritaContext, cap: int = DEFAULT_LATTICE_CAP,
                          cross_check: bool = True) -> RadicalQuadruple:
    """The prime radical of the context ring, computed slotwise.

    Corner slots are the corner radicals; module slots are the closure
    sets those radicals induce, whose two descriptions must coincide.
    With ``cross_check`` the result is compared against the intersection
    of primes on the built ring whenever it fits under the order cap.
    """
    key = ("radical", cap)
    if key in ctx._cache:
        return ctx._cache[key]
    rad_r = prime_radical(ctx.ring_r, cap)
    rad_s = prime_radical(ctx.ring_s, cap)
    sets = closure_sets(ctx, rad_r, rad_s)
    if not sets.v_agree or not sets.w_agree:
        raise InconsistencyError(
            f"the two descriptions of the radical's module slots disagree on {ctx.name}")
    result = RadicalQuadruple(
        ctx, rad_r,
        Submodule(ctx.mod_v, sets.v_into_r, "bi"),
        Submodule(ctx.mod_w, sets.w_into_r, "bi"),
        rad_s)
    if cross_check and ctx.order <= DEFAULT_ORDER_CAP:
        ring = build_context_ring(ctx)
        direct = prime_radical(ring, cap)
        if direct.members != result.member_mask():
            raise InconsistencyError(
                f"slotwise radical of {ring.name} disagrees with the "
                f"intersection of its prime ideals")
    ctx._cache[key] = result
    return result


@dataclass(frozen=True)
class QuotientContextResult:
    """A context quotiented by its prime radical, with all the projections."""

    context: MoritaContext
    radical: RadicalQuadruple
    proj_r: RingMap
    proj_s: RingMap
    proj_v: np.ndarray
    proj_w: np.ndarray


def _induced_pairing(pair: np.ndarray, proj_a: np.ndarray, proj_b: np.ndarray,
                     ring_proj: np.ndarray, what: str) -> np.ndarray:
    """Push a pairing down to cosets, checking it is constant on them."""
    full = ring_proj[pair]
    _, first_a = np.unique(proj_a, return_index=True)
    _, first_b = np.unique(proj_b, return_index=True)
    table = full[np.ix_(first_a, first_b)]
    expected = table[proj_a[:, None], proj_b[None, :]]
    if (full != expected).any():
        a, b = map(int, np.argwhere(full != expected)[0])
        raise WellDefinednessError(
            f"{what} pairing is not constant on cosets at ({a}, {b})")
    return table


def quotient_context(ctx: MoritaContext, cap: int = DEFAULT_LATTICE_CAP) -> QuotientContextResult:
    """Quotient every slot by the radical quadruple and reassemble a context.

    Corner rings are quotiented by their radicals, carriers by the radical's
    module slots (over the quotient rings), and the pairings are pushed to
    cosets with exhaustive well-definedness checks. The result is validated
    from scratch; a failure there signals a bug rather than bad input.
    """
    key = ("quotient", cap)
    if key in ctx._cache:
        return ctx._cache[key]
    radical = context_prime_radical(ctx, cap)
    ring_rq, proj_r = quotient_ring(ctx.ring_r, radical.r_part)
    ring_sq, proj_s = quotient_ring(ctx.ring_s, radical.s_part)
    mod_vq, proj_v = quotient_module(ctx.mod_v, radical.v_part.members,
                                     left=(ring_rq, proj_r), right=(ring_sq, proj_s))
    mod_wq, proj_w = quotient_module(ctx.mod_w, radical.w_part.members,
                                     left=(ring_sq, proj_s), right=(ring_rq, proj_r))
    pair_vw = _induced_pairing(ctx.prod_vw, proj_v, proj_w, proj_r.image_array(), "vw")
    pair_wv = _induced_pairing(ctx.prod_wv, proj_w, proj_v, proj_s.image_array(), "wv")
    quotient = MoritaContext(ring_rq, ring_sq, mod_vq, mod_wq, pair_vw, pair_wv,
                             name=f"{ctx.name}/rad")
    report = validate_context(quotient)
    if not report.ok:
        raise InconsistencyError(
            "quotient context failed validation: "
            + "; ".join(str(v) for v in report.violations))
    result = QuotientContextResult(quotient, radical, proj_r, proj_s, proj_v, proj_w)
    ctx._cache[key] = result
    return result


def verify_quotient_iso(ctx: MoritaContext, cap: int = DEFAULT_LATTICE_CAP) -> Verdict:
    """Check that modding the ring by its radical matches the quotient context.

    Builds both rings, forms the slotwise coset map between them, and
    verifies it is a ring isomorphism; the verdict's witness localizes any
    failure to an operation and a pair of cosets.
    """
    ring = build_context_ring(ctx)
    qres = quotient_context(ctx, cap)
    radical = qres.radical
    rad_ideal = verify_ideal(ring, radical.member_mask(), "two")
    ring_q, proj_t = quotient_ring(ring, rad_ideal)
    target = build_context_ring(qres.context)
    if ring_q.order != target.order:
        return Verdict(False, ("bijective",))
    _, first = np.unique(proj_t.image_array(), return_index=True)
    r_of, v_of, w_of, s_of = ctx.component_arrays()
    qdims = qres.context.dims
    pr, ps = qres.proj_r.image_array(), qres.proj_s.image_array()
    image = ((pr[r_of[first]] * qdims[1] + qres.proj_v[v_of[first]]) * qdims[2]
             + qres.proj_w[w_of[first]]) * qdims[3] + ps[s_of[first]]
    f = RingMap(ring_q, target, tuple(int(x) for x in image))
    return verify_ring_map(f, require_bijective=True)


# -- whole-ring prime and semiprime reports ------------------------------------------


def _prime_module(mod: Bimodule) -> bool:
    """Is zero a prime submodule on both one-sided views of the carrier?

    The one-point module fails by convention: a prime submodule must be
    proper, and its only submodule is the whole thing.
    """
    if mod.order == 1:
        return False
    zero_mask = 1 << mod.zero
    return (bool(is_prime_submodule(mod.left_view(), zero_mask))
            and bool(is_prime_submodule(mod.right_view(), zero_mask)))


@dataclass(frozen=True)
class ContextPrimeReport:
    """Primeness of the context ring next to its slot-level descriptions.

    The graded conditions: (1) the ring itself is prime; (2) both corners
    are prime rings and both carriers are prime modules on each side; (3)
    both corners are prime; (4) at least one corner is prime. Each implies
    the next, and surjectivity closes the loop from (4) back to (1).
    """

    t_prime: bool
    witness: tuple | None
    r_prime: bool
    s_prime: bool
    v_prime: bool
    w_prime: bool
    surjective: bool

    @property
    def cond1(self) -> bool:
        return self.t_prime

    @property
    def cond2(self) -> bool:
        return self.r_prime and self.s_prime and self.v_prime and self.w_prime

    @property
    def cond3(self) -> bool:
        return self.r_prime and self.s_prime

    @property
    def cond4(self) -> bool:
        return self.r_prime or self.s_prime

    @property
    def chain_ok(self) -> bool:
        steps = (self.cond1, self.cond2, self.cond3, self.cond4)
        return all((not a) or b for a, b in zip(steps, steps[1:]))

    @property
    def converse_ok(self) -> bool:
        return (not (self.cond4 and self.surjective)) or self.cond1


@dataclass(frozen=True)
class ContextSemiprimeReport:
    """Semiprimeness of the context ring next to its corner descriptions."""

    t_semiprime: bool
    witness: int | None
    r_semiprime: bool
    s_semiprime: bool
    surjective: bool

    @property
    def cond1(self) -> bool:
        return self.t_semiprime

    @property
    def cond2(self) -> bool:
        return self.r_semiprime and self.s_semiprime

    @property
    def cond3(self) -> bool:
        return self.r_semiprime or self.s_semiprime

    @property
    def chain_ok(self) -> bool:
        steps = (self.cond1, self.cond2, self.cond3)
        return all((not a) or b for a, b in zip(steps, steps[1:]))

    @property
    def converse_ok(self) -> bool:
        return (not (self.cond3 and self.surjective)) or self.cond1


def is_prime_context(ctx: MoritaContext, cap: int = DEFAULT_ORDER_CAP) -> ContextPrimeReport:
    """Zero-ideal primeness of the built ring, with all slot-level facts."""
    ring = build_context_ring(ctx, cap)
    verdict = is_prime_ring(ring)
    return ContextPrimeReport(
        t_prime=bool(verdict), witness=verdict.witness,
        r_prime=bool(is_prime_ring(ctx.ring_r)),
        s_prime=bool(is_prime_ring(ctx.ring_s)),
        v_prime=_prime_module(ctx.mod_v),
        w_prime=_prime_module(ctx.mod_w),
        surjective=is_surjective_context(ctx))


def is_semiprime_context(ctx: MoritaContext, cap: int = DEFAULT_ORDER_CAP) -> ContextSemiprimeReport:
    """Zero-ideal semiprimeness of the built ring, with corner facts.

    The ring-level answer goes through the radical cross-check, so a
    corrupted lattice cannot slip through as a quiet wrong boolean.
    """
    ring = build_context_ring(ctx, cap)
    verdict = is_semiprime_ring(ring)
    return ContextSemiprimeReport(
        t_semiprime=bool(verdict), witness=verdict.witness,
        r_semiprime=bool(is_semiprime_ring(ctx.ring_r)),
        s_semiprime=bool(is_semiprime_ring(ctx.ring_s)),
        surjective=is_surjective_context(ctx))
