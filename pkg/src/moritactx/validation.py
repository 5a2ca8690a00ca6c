"""Shared result types and raw-table normalization helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedTableError

__all__ = [
    "Violation",
    "ValidationReport",
    "Verdict",
    "as_table",
]


@dataclass(frozen=True)
class Violation:
    """One failed axiom with a minimal witness tuple (element indices)."""

    law: str
    witness: tuple

    def __str__(self) -> str:
        items = ", ".join(str(x) for x in self.witness)
        return f"{self.law} fails at ({items})"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive axiom check.

    ``ok`` is True when no violations were recorded. Each violation carries
    one witness; checks stop at the first witness per axiom.
    """

    subject: str
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        if self.ok:
            return [f"{self.subject}: ok"]
        out = [f"{self.subject}: {len(self.violations)} violation(s)"]
        out.extend(f"  {v}" for v in self.violations)
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus a witness for the failing (or falsifying) case.

    The witness layout is documented by whichever predicate produced the
    verdict; it is always a tuple of element indices, or None when the
    predicate holds.
    """

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def as_table(data, rows: int | None, cols: int | None, what: str, limit: int | None = None) -> np.ndarray:
    """Normalize raw table data to a read-only int32 array, checking shape and range.

    ``rows``/``cols`` may be None to accept whatever square-ish shape arrives;
    ``limit`` bounds the entries (defaults to ``cols`` when omitted).
    """
    try:
        arr = np.asarray(data, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedTableError(f"{what}: ragged or non-integer table") from exc
    if arr.ndim != 2:
        raise MalformedTableError(f"{what}: expected a 2-d table, got shape {arr.shape}")
    r, c = arr.shape
    if rows is not None and r != rows:
        raise MalformedTableError(f"{what}: expected {rows} rows, got {r}")
    if cols is not None and c != cols:
        raise MalformedTableError(f"{what}: expected {cols} columns, got {c}")
    hi = limit if limit is not None else c
    if arr.size and (arr.min() < 0 or arr.max() >= hi):
        bad = np.argwhere((arr < 0) | (arr >= hi))[0]
        raise MalformedTableError(
            f"{what}: entry {arr[bad[0], bad[1]]} at ({bad[0]}, {bad[1]}) outside 0..{hi - 1}"
        )
    out = arr.astype(np.int32)
    out.setflags(write=False)
    return out
