"""Subsets of an indexed carrier as Python-int bitmasks.

Bit i set means element i is a member. Masks are hashable and compare
canonically, which makes them convenient lattice points; numpy bool arrays
are derived at the boundary for vectorized table lookups.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

__all__ = [
    "mask_from_indices",
    "mask_from_bool",
    "bool_array",
    "indices_of",
    "is_subset",
    "full_mask",
]


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def mask_from_bool(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bool_array(mask: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=size, bitorder="little").astype(bool)


def indices_of(mask: int, size: int) -> np.ndarray:
    return np.flatnonzero(bool_array(mask, size))


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def full_mask(size: int) -> int:
    return (1 << size) - 1
