from __future__ import annotations

import pytest

from moritactx import (
    MalformedTableError,
    NotASubmoduleError,
    annihilator,
    cyclic_submodule,
    enumerate_submodules,
    is_prime_submodule,
    confirm_prime_submodule_witness,
    quotient_module,
    quotient_view,
    residue_bimodule,
    ring_bimodule,
    subset_bimodule,
    validate_bimodule,
    verify_submodule,
    zero_bimodule,
)
from moritactx.modules import enumerate_view_submodules, verify_view_submodule

from naive import naive_is_prime_submodule, naive_view_submodules


def test_ring_bimodule_satisfies_the_laws(z6):
    mod = ring_bimodule(z6)
    assert mod.order == 6
    assert validate_bimodule(mod).ok
    assert mod.ambient_ring is z6


def test_subset_bimodule_of_even_residues(z6):
    mod = subset_bimodule(z6, 0b010101)  # {0, 2, 4}
    assert mod.order == 3
    assert validate_bimodule(mod).ok
    assert [mod.label(i) for i in range(3)] == ["0", "2", "4"]


def test_subset_bimodule_rejections(z6):
    with pytest.raises(NotASubmoduleError):
        subset_bimodule(z6, 0b000110)  # no zero
    with pytest.raises(NotASubmoduleError):
        subset_bimodule(z6, 0b000011)  # {0,1} not additively closed


def test_residue_bimodule_reduces_labels(z6):
    mod = residue_bimodule(3, z6, z6)
    assert mod.order == 3
    assert validate_bimodule(mod).ok
    # the action is reduction mod 3: 4 . 2 = 8 = 2 (mod 3)
    assert mod.left_act[4, 2] == 2


def test_residue_bimodule_bad_divisor(z6):
    with pytest.raises(MalformedTableError):
        residue_bimodule(0, z6, z6)


def test_zero_bimodule_is_a_point(z4, z6):
    mod = zero_bimodule(z4, z6)
    assert mod.order == 1
    assert validate_bimodule(mod).ok
    assert mod.left_ring is z4 and mod.right_ring is z6


def test_views_expose_sides(z4):
    mod = ring_bimodule(z4)
    left, right = mod.left_view(), mod.right_view()
    assert left.side == "left" and right.side == "right"
    assert left.order == right.order == 4
    # both views act by ring multiplication here
    assert left.act[3, 2] == (3 * 2) % 4
    assert right.act[3, 2] == (2 * 3) % 4


def test_view_submodule_enumeration_matches_naive(z12):
    view = ring_bimodule(z12).left_view()
    got = {frozenset(i for i in range(12) if m >> i & 1)
           for m in enumerate_view_submodules(view)}
    assert got == naive_view_submodules(view)


def test_enumerate_submodules_bi(z6):
    mod = ring_bimodule(z6)
    subs = enumerate_submodules(mod, "bi")
    # submodules of Z6 over itself = ideals of Z6: {0}, 2Z6, 3Z6, Z6
    assert len(subs) == 4
    assert sorted(s.size for s in subs) == [1, 2, 3, 6]


def test_verify_submodule_roundtrip(z6):
    mod = ring_bimodule(z6)
    sub = verify_submodule(mod, 0b010101, "bi")
    assert sub.size == 3 and sub.is_proper()
    with pytest.raises(NotASubmoduleError):
        verify_submodule(mod, 0b000011, "bi")


def test_cyclic_submodule_of_two_in_z8(z8):
    view = ring_bimodule(z8).left_view()
    assert cyclic_submodule(view, 2) == 0b01010101  # {0,2,4,6}


def test_prime_submodule_agrees_with_naive_on_z8(z8):
    view = ring_bimodule(z8).left_view()
    for mask in enumerate_view_submodules(view):
        if mask == (1 << 8) - 1:
            continue
        members = [i for i in range(8) if mask >> i & 1]
        assert is_prime_submodule(view, mask).holds == naive_is_prime_submodule(view, members)


def test_prime_submodule_agrees_with_naive_on_right_views(z12):
    view = ring_bimodule(z12).right_view()
    for mask in enumerate_view_submodules(view):
        if mask == (1 << 12) - 1:
            continue
        members = [i for i in range(12) if mask >> i & 1]
        assert is_prime_submodule(view, mask).holds == naive_is_prime_submodule(view, members)


def test_prime_submodule_witness_confirms(z8):
    view = ring_bimodule(z8).left_view()
    verdict = is_prime_submodule(view, verify_view_submodule(view, 0b00010001))  # {0,4}
    assert not verdict.holds
    r, x = verdict.witness
    assert confirm_prime_submodule_witness(view, 0b00010001, r, x)


def test_annihilator_of_residue_carrier(z6):
    mod = residue_bimodule(3, z6, z6)
    ann = annihilator(mod.left_view())
    assert ann.members == 0b001001  # multiples of 3 kill Z3


def test_quotient_view_collapses_submodule(z8):
    view = ring_bimodule(z8).left_view()
    quot, proj = quotient_view(view, 0b00010001)  # mod out {0,4}
    assert quot.order == 4
    for x in range(8):
        assert proj[x] == proj[(x + 4) % 8]


def test_quotient_module_keeps_both_actions(z6):
    mod = ring_bimodule(z6)
    quot, proj = quotient_module(mod, 0b001001)  # collapse {0,3}
    assert quot.order == 3
    assert validate_bimodule(quot).ok
