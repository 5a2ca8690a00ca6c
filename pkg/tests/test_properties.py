from __future__ import annotations

from hypothesis import given, strategies as st

from moritactx import (
    build_ks_context,
    check_ideal,
    enumerate_context_ideals,
    enumerate_ideals,
    load_mctx,
    make_zn,
    parse_mctx,
    principal_ideal,
    quadruple_mask,
    serialize_document,
)
from moritactx.bitsets import indices_of, mask_from_indices
from moritactx.spans import AddGroup

from naive import naive_additive_span, naive_is_ideal, members_of

rings = st.integers(min_value=2, max_value=10).map(make_zn)


@given(st.integers(min_value=1, max_value=20),
       st.sets(st.integers(min_value=0, max_value=19)))
def test_bitset_round_trip(order, indices):
    indices = {i for i in indices if i < order}
    mask = mask_from_indices(indices)
    assert set(indices_of(mask, order).tolist()) == indices


@given(rings, st.sets(st.integers(min_value=0, max_value=9), max_size=4))
def test_additive_span_matches_naive(ring, seeds):
    seeds = sorted(i for i in seeds if i < ring.order)
    group = AddGroup(ring.add, ring.zero)
    mask = group.span_mask(seeds)
    expected = naive_additive_span(ring.add, ring.zero, seeds)
    assert frozenset(members_of(mask, ring.order)) == expected


@given(rings, st.sets(st.integers(min_value=0, max_value=9), max_size=5))
def test_span_is_a_subgroup_and_idempotent(ring, seeds):
    seeds = [i for i in seeds if i < ring.order]
    group = AddGroup(ring.add, ring.zero)
    mask = group.span_mask(seeds)
    assert group.is_subgroup(mask)
    assert group.span_mask(indices_of(mask, ring.order).tolist()) == mask


@given(rings, st.integers(min_value=0, max_value=(1 << 10) - 1))
def test_check_ideal_agrees_with_naive(ring, raw_mask):
    mask = raw_mask & ((1 << ring.order) - 1)
    members = members_of(mask, ring.order)
    for side in ("two", "left", "right"):
        assert check_ideal(ring, mask, side).holds == naive_is_ideal(ring, members, side)


@given(rings, st.integers(min_value=0, max_value=9))
def test_principal_ideal_contains_its_generator(ring, a):
    a = a % ring.order
    ideal = principal_ideal(ring, a)
    assert ideal.contains(a)
    assert ideal.members in {c.members for c in enumerate_ideals(ring)}


@given(st.integers(min_value=2, max_value=6), st.data())
def test_scaled_pairing_is_multiplication_through_s(n, data):
    ring = make_zn(n)
    s = data.draw(st.integers(min_value=0, max_value=n - 1))
    ctx = build_ks_context(ring, s)
    v = data.draw(st.integers(min_value=0, max_value=n - 1))
    w = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert ctx.prod_vw[v, w] == (v * s * w) % n
    assert ctx.prod_wv[w, v] == (w * s * v) % n


@given(st.integers(min_value=2, max_value=8), st.data())
def test_quadruple_mask_sizes_multiply(n, data):
    ring = make_zn(n)
    lattice = [c.members for c in enumerate_ideals(ring)]
    parts = [data.draw(st.sampled_from(lattice)) for _ in range(4)]
    ctx = load_mctx(f"base zn {n}\nproduct VW inherited\nproduct WV inherited\n").context
    mask = quadruple_mask(ctx, *parts)
    expected = 1
    for p in parts:
        expected *= bin(p).count("1")
    assert bin(mask).count("1") == expected


@given(st.integers(min_value=2, max_value=7),
       st.integers(min_value=2, max_value=5),
       st.booleans())
def test_generated_documents_round_trip(n, m, shared):
    lines = [f"context gen{n}x{m}", f"base zn {n}"]
    if shared:
        lines += ["product VW inherited", "product WV inherited"]
    else:
        lines += [f"S zn {m}", "V zero", "W zero"]
    doc = parse_mctx("\n".join(lines) + "\n")
    assert parse_mctx(serialize_document(doc)) == doc
    res = load_mctx(serialize_document(doc))
    assert res.context.order >= 4


@given(st.sampled_from(["full:2", "full:3", "zero:2,2", "tri:4,2"]))
def test_quadruple_members_reconstruct(name):
    from moritactx.catalog import builtin_context

    ctx = builtin_context(name).context
    for quad in enumerate_context_ideals(ctx):
        mask = quad.member_mask()
        assert bin(mask).count("1") == quad.size
        assert quadruple_mask(ctx, *quad.masks) == mask
