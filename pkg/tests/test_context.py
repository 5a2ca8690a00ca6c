from __future__ import annotations

import itertools

import numpy as np
import pytest

from moritactx import (
    CapacityError,
    CentralityError,
    MalformedTableError,
    NotAnIdealError,
    build_context_ring,
    build_ks_context,
    check_prime_quadruple,
    check_semiprime_quadruple,
    closure_sets,
    context_prime_radical,
    decompose_ideal,
    enumerate_context_ideals,
    is_nilpotent_ideal,
    is_prime_context,
    is_prime_onesided_ideal,
    is_semiprime_context,
    is_surjective_context,
    enumerate_ideals,
    make_zn,
    product_span_vw,
    product_span_wv,
    quadruple_mask,
    quotient_context,
    side_decomposition,
    validate_context,
    validate_ring,
    verify_quotient_iso,
)
from moritactx.catalog import builtin_context

from naive import naive_context_product, naive_quadruple_ideals, members_of


def ctx_of(name):
    return builtin_context(name).context


# -- construction and multiplication -------------------------------------------


def test_full_context_ring_is_a_ring():
    ring = build_context_ring(ctx_of("full:2"))
    assert ring.order == 16
    assert validate_ring(ring.add, ring.mul).ok


def test_context_multiplication_matches_the_formula():
    ctx = ctx_of("full:3")
    ring = build_context_ring(ctx)
    quads = list(itertools.product(range(3), repeat=4))
    for x in quads[::7]:
        for y in quads[::5]:
            expected = naive_context_product(ctx, x, y)
            got = ctx.decode(ring.mul[ctx.encode(*x), ctx.encode(*y)])
            assert got == expected, (x, y)


def test_encode_decode_round_trip():
    ctx = ctx_of("tri:4,2")
    for index in range(ctx.order):
        assert ctx.encode(*ctx.decode(index)) == index


def test_identity_and_zero_slots():
    ctx = ctx_of("full:4")
    ring = build_context_ring(ctx)
    assert ctx.decode(ring.zero) == (0, 0, 0, 0)
    assert ctx.decode(ring.one) == (1, 0, 0, 1)


def test_element_arithmetic_in_scaled_context(z2):
    ctx = build_ks_context(z2, 1)
    e = ctx.element(1, 1, 1, 1)
    square = e * e
    assert (square.r, square.v, square.w, square.s) == (0, 0, 0, 0)


def test_context_element_range_check():
    ctx = ctx_of("full:2")
    with pytest.raises(MalformedTableError):
        ctx.element(2, 0, 0, 0)


def test_capacity_cap_is_enforced():
    with pytest.raises(CapacityError):
        build_context_ring(ctx_of("full:6"), cap=100)


def test_validation_catches_broken_pairings(z2):
    from moritactx import MoritaContext, ring_bimodule

    bad = np.array([[1, 1], [1, 0]])
    ctx = MoritaContext(z2, z2, ring_bimodule(z2), ring_bimodule(z2), bad, np.zeros((2, 2), int))
    report = validate_context(ctx)
    assert not report.ok
    assert any("vw" in v.law for v in report.violations)


# -- scaled contexts -------------------------------------------------------------


def test_scaled_context_with_nonzero_scalar_inserts_it(z6):
    ctx = build_ks_context(z6, 2)
    # pairing is v * (s * w): 3 . 5 -> 3*2*5 = 30 = 0
    assert ctx.prod_vw[3, 5] == 0
    assert ctx.prod_vw[1, 1] == 2


def test_scaled_context_requires_central_scalar():
    ring = build_context_ring(ctx_of("full:2"))  # noncommutative, order 16
    non_central = next(
        a for a in range(16)
        if any(ring.mul[a, b] != ring.mul[b, a] for b in range(16)))
    with pytest.raises(CentralityError):
        build_ks_context(ring, non_central)


def test_scaled_context_rejects_out_of_range(z4):
    with pytest.raises(MalformedTableError):
        build_ks_context(z4, 7)


def test_nilpotent_diagonal_in_k1_of_z2(z2):
    ctx = build_ks_context(z2, 1)
    ring = build_context_ring(ctx)
    e = ring.order - 1  # (1, 1, 1, 1) is the last index
    assert ring.mul[e, e] == ring.zero
    # a square-zero element, yet the ring stays semiprime (as matrix rings do)
    assert is_semiprime_context(ctx).t_semiprime


# -- spans and surjectivity -------------------------------------------------------


def test_full_contexts_are_surjective():
    assert is_surjective_context(ctx_of("full:5"))


def test_degenerate_pairings_span_nothing():
    ctx = ctx_of("paper:ex2.8")
    assert product_span_vw(ctx) == 0b000001   # {0} inside Z6
    assert product_span_wv(ctx) == 0b000001
    assert not is_surjective_context(ctx)


# -- quadruple enumeration ---------------------------------------------------------


@pytest.mark.parametrize("name,count", [
    ("full:2", 2), ("full:3", 2), ("full:4", 3), ("full:5", 2), ("full:6", 4),
    ("tri:4,2", 8), ("zero:2,2", 4), ("zero:2,4", 6),
    ("paper:ex2.4", 4), ("paper:ex2.8", 25), ("paper:ex2.12", 21), ("ks:6:0", 49),
])
def test_quadruple_counts(name, count):
    assert len(enumerate_context_ideals(ctx_of(name))) == count


@pytest.mark.parametrize("name", ["full:2", "zero:2,2", "tri:4,2", "paper:ex2.12"])
def test_quadruples_match_naive_enumeration(name):
    ctx = ctx_of(name)
    got = set()
    for quad in enumerate_context_ideals(ctx):
        got.add((
            tuple(members_of(quad.r_part.members, ctx.ring_r.order)),
            tuple(members_of(quad.v_part.members, ctx.mod_v.order)),
            tuple(members_of(quad.w_part.members, ctx.mod_w.order)),
            tuple(members_of(quad.s_part.members, ctx.ring_s.order)),
        ))
    assert got == naive_quadruple_ideals(ctx)


def test_quadruple_mask_is_slotwise_product():
    ctx = ctx_of("full:4")
    mask = quadruple_mask(ctx, 0b0101, 0b0101, 0b0101, 0b0101)
    assert bin(mask).count("1") == 2 * 2 * 2 * 2


# -- decomposition ------------------------------------------------------------------


@pytest.mark.parametrize("name", ["full:4", "paper:ex2.12", "tri:4,2", "zero:2,4"])
def test_decompose_round_trips_every_ideal(name):
    ctx = ctx_of(name)
    for quad in enumerate_context_ideals(ctx):
        again = decompose_ideal(ctx, quad.member_mask())
        assert again.masks == quad.masks


def test_decompose_rejects_non_ideals():
    ctx = ctx_of("full:4")
    with pytest.raises(NotAnIdealError):
        decompose_ideal(ctx, 0b1011)


@pytest.mark.parametrize("side", ["right", "left"])
def test_one_sided_blocks_on_triangular_context(side):
    ctx = ctx_of("tri:4,2")
    ring = build_context_ring(ctx)
    for ideal in enumerate_ideals(ring, side):
        dec = side_decomposition(ctx, ideal.members, side)
        assert dec.all_hold, (side, bin(ideal.members))


def test_block_shapes_of_the_z8_right_ideal():
    res = builtin_context("paper:ex2.4")
    dec = side_decomposition(res.context, res.ideals["U"].mask, "right")
    # first block: 4Z8 in the corner ring, everything in the module slot
    got = {divmod(i, 8) for i in members_of(dec.part1_mask, 16 * 4)}
    assert got == {(r, w) for r in (0, 4) for w in range(8)}
    assert not is_prime_onesided_ideal(res.context, res.ideals["U"].mask, "right").holds


# -- closure sets ---------------------------------------------------------------------


def test_closure_sets_on_degenerate_pairings():
    ctx = ctx_of("paper:ex2.8")
    sets = closure_sets(ctx, 0b001001, 0b010101)  # I = {0,3}, J = {0,2,4}
    assert sets.v_into_r == (1 << ctx.mod_v.order) - 1
    assert sets.v_into_s == (1 << ctx.mod_v.order) - 1
    assert sets.w_into_r == (1 << ctx.mod_w.order) - 1
    assert sets.w_into_s == (1 << ctx.mod_w.order) - 1
    assert sets.v_agree and sets.w_agree


def test_closure_sets_on_full_context(z6):
    ctx = ctx_of("full:6")
    sets = closure_sets(ctx, 0b010101, 0b010101)  # I = J = 2Z6
    assert sets.v_into_r == 0b010101
    assert sets.v_into_s == 0b010101
    assert sets.w_into_r == 0b010101
    assert sets.w_into_s == 0b010101


# -- prime and semiprime reports -----------------------------------------------------


def test_prime_report_on_structural_counterexample():
    res = builtin_context("paper:ex2.8")
    ctx = res.context
    quad = decompose_ideal(ctx, res.ideals["H"].mask)
    report = check_prime_quadruple(ctx, quad)
    assert report.cond2 and not report.is_prime and not report.surjective
    assert report.forward_ok and report.converse_ok


def test_semiprime_report_on_structural_counterexample():
    res = builtin_context("paper:ex2.12")
    ctx = res.context
    quad = decompose_ideal(ctx, res.ideals["H"].mask)
    report = check_semiprime_quadruple(ctx, quad)
    assert not report.is_semiprime and not report.cond2
    assert not report.theorem_violation
    assert report.witness == ctx.encode(0, 0, 0, 2)
    assert not report.s_semiprime


def test_slot_descriptions_hold_across_small_contexts():
    for name in ("full:4", "full:6", "tri:4,2", "zero:2,4"):
        ctx = ctx_of(name)
        for quad in enumerate_context_ideals(ctx):
            if not quad.is_proper():
                continue
            prime = check_prime_quadruple(ctx, quad)
            assert prime.forward_ok and prime.converse_ok, (name, quad.masks)
            semi = check_semiprime_quadruple(ctx, quad)
            assert not semi.theorem_violation, (name, quad.masks)


# -- radical and quotient -------------------------------------------------------------


def test_radical_of_full_z4_is_slotwise_two():
    radical = context_prime_radical(ctx_of("full:4"))
    assert radical.masks == (0b0101, 0b0101, 0b0101, 0b0101)


def test_radical_with_zero_pairings_ignores_the_dead_corner():
    radical = context_prime_radical(ctx_of("zero:2,4"))
    assert radical.masks == (0b01, 0b1, 0b1, 0b0101)


def test_radical_members_are_nilpotent():
    ctx = ctx_of("paper:ex2.12")
    ring = build_context_ring(ctx)
    radical = context_prime_radical(ctx)
    nil, _ = is_nilpotent_ideal(ring, radical.member_mask())
    assert nil


@pytest.mark.parametrize("name", ["full:4", "full:6", "tri:4,2", "zero:2,4",
                                  "paper:ex2.8", "paper:ex2.12"])
def test_quotient_context_is_isomorphic_to_ring_quotient(name):
    assert verify_quotient_iso(ctx_of(name)).holds


def test_quotient_context_dims():
    result = quotient_context(ctx_of("paper:ex2.12"))
    assert result.context.dims == (2, 1, 1, 2)
    assert result.context.order == 4


def test_prime_context_report_on_a_field():
    report = is_prime_context(ctx_of("full:5"))
    assert report.t_prime and report.surjective
    assert report.r_prime and report.s_prime and report.v_prime and report.w_prime
    assert report.chain_ok and report.converse_ok


def test_prime_corners_do_not_make_a_prime_context():
    report = is_prime_context(ctx_of("zero:2,2"))
    assert report.r_prime and report.s_prime
    assert not report.t_prime
    assert not report.surjective
    assert report.chain_ok and report.converse_ok


def test_semiprime_context_for_scaled_units():
    assert is_semiprime_context(ctx_of("ks:6:1")).t_semiprime
    assert not is_semiprime_context(ctx_of("ks:6:2")).t_semiprime
