"""Additive-subgroup closure kernels over a finite abelian group table.

The whole package leans on one observation: a finite abelian group of order
k is generated by at most log2(k) elements, and every product condition of
the form "x * S * y lands inside an additively closed set" only needs to be
checked on additive generators of S, because the products are biadditive.
The kernels here compute generating sequences and subgroup spans cheaply so
the ring- and module-level code can stay near-linear in the carrier size.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .bitsets import bool_array, indices_of, mask_from_bool

__all__ = ["AddGroup"]


class AddGroup:
    """A finite abelian group presented by a k x k addition table.

    Instances are lightweight views over a table owned by a ring or module;
    they cache a greedy generating sequence and provide span/join closure.
    """

    __slots__ = ("add", "zero", "order", "_generators")

    def __init__(self, add: np.ndarray, zero: int):
        self.add = add
        self.zero = int(zero)
        self.order = int(add.shape[0])
        self._generators: np.ndarray | None = None

    @property
    def generators(self) -> np.ndarray:
        """A greedy generating sequence (at most log2(order) entries)."""
        if self._generators is None:
            inside = np.zeros(self.order, dtype=bool)
            inside[self.zero] = True
            chunks = [np.array([self.zero], dtype=np.int64)]
            gens: list[int] = []
            for e in range(self.order):
                if not inside[e]:
                    gens.append(e)
                    self._extend(inside, chunks, (e,))
            self._generators = np.array(gens, dtype=np.int64)
        return self._generators

    def _extend(self, inside: np.ndarray, chunks: list[np.ndarray], gens: Iterable[int]) -> None:
        # Grows the subgroup marked in `inside` by each generator in turn,
        # adding whole cosets S, S+g, S+2g, ... until the shift re-enters S.
        add = self.add
        for g in gens:
            g = int(g)
            if inside[g]:
                continue
            base = chunks[0] if len(chunks) == 1 else np.concatenate(chunks)
            chunks[:] = [base]
            shift = g
            while not inside[shift]:
                coset = add[shift, base]
                inside[coset] = True
                chunks.append(coset)
                shift = int(add[shift, g])

    def span_mask(self, seeds: Iterable[int] | np.ndarray, base: int | None = None) -> int:
        """Bitmask of the subgroup generated by ``seeds`` on top of ``base``."""
        inside = np.zeros(self.order, dtype=bool)
        if base is not None:
            arr = bool_array(base, self.order)
            inside |= arr
            chunks = [np.flatnonzero(arr)]
        else:
            chunks = [np.array([self.zero], dtype=np.int64)]
        inside[self.zero] = True
        self._extend(inside, chunks, np.asarray(seeds, dtype=np.int64).ravel())
        return mask_from_bool(inside)

    def join_masks(self, a: int, b: int) -> int:
        """Subgroup generated by the union of two subgroup masks."""
        return self.span_mask(indices_of(b, self.order), base=a)

    def subgroup_generators(self, mask: int) -> np.ndarray:
        """Greedy generating sequence for an existing subgroup mask."""
        members = indices_of(mask, self.order)
        inside = np.zeros(self.order, dtype=bool)
        inside[self.zero] = True
        chunks = [np.array([self.zero], dtype=np.int64)]
        gens: list[int] = []
        for e in members:
            if not inside[e]:
                gens.append(int(e))
                self._extend(inside, chunks, (int(e),))
        return np.array(gens, dtype=np.int64)

    def is_subgroup(self, mask: int) -> bool:
        members = indices_of(mask, self.order)
        if members.size == 0 or not bool_array(mask, self.order)[self.zero]:
            return False
        table = self.add[np.ix_(members, members)]
        return bool(bool_array(mask, self.order)[table].all())
