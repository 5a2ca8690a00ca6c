#!/usr/bin/env python3
"""Survey scaled contexts K_s(Z_n): primeness and semiprimeness for every s.

For each modulus the table shows, per scaling element, whether the scaled
context ring is prime/semiprime, next to the predicted answer (base ring
prime and s nonzero; base ring semiprime and s not a zero-divisor).
A trailing ``!`` would mark a disagreement — none is expected.
"""

from __future__ import annotations

import argparse
import sys

from moritactx import (
    build_context_ring,
    build_ks_context,
    is_prime_ring,
    is_semiprime_ring,
    make_zn,
)


def zero_divisors(ring) -> set[int]:
    out = set()
    for a in range(ring.order):
        for b in range(ring.order):
            if b != ring.zero and (ring.mul[a, b] == ring.zero or ring.mul[b, a] == ring.zero):
                out.add(a)
                break
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help="largest modulus (default 6)")
    args = parser.parse_args()

    mismatches = 0
    for n in range(2, args.max_n + 1):
        base = make_zn(n)
        base_prime = bool(is_prime_ring(base))
        base_semi = bool(is_semiprime_ring(base))
        divisors = zero_divisors(base)
        print(f"Z{n}  (prime: {base_prime}, semiprime: {base_semi})")
        for s in range(n):
            ring = build_context_ring(build_ks_context(base, s))
            got_prime = bool(is_prime_ring(ring))
            got_semi = bool(is_semiprime_ring(ring))
            want_prime = base_prime and s != base.zero
            want_semi = base_semi and s not in divisors
            bad = got_prime != want_prime or got_semi != want_semi
            mismatches += bad
            print(f"  s={s}: prime {got_prime!s:5s} (predicted {want_prime!s:5s})"
                  f"  semiprime {got_semi!s:5s} (predicted {want_semi!s:5s})"
                  f"{'  !' if bad else ''}")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
