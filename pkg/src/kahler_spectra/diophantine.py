"""Exceptional pairs: positive integers p <= n with p^2 - 2np + n(2n-1)/3 = 0.

On these pairs the a1 heat invariant carries no information.  Two independent
routes are provided: the linear recursion starting at (1, 3), and a direct scan
over n using the closed-form root ``p = n - sqrt(n(n+1)/3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator


@dataclass(frozen=True, order=True)
class ExceptionalPair:
    k: int
    p: int
    n: int

    def to_json(self) -> dict:
        return {"k": self.k, "p": str(self.p), "n": str(self.n)}


def quadratic_int(p: int, n: int) -> int:
    """Three times the quadratic, cleared of denominators."""
    return 3 * p * p - 6 * n * p + 2 * n * n - n


def quadratic_value(p: int, n: int) -> Fraction:
    return Fraction(quadratic_int(p, n), 3)


def is_degenerate(p: int, n: int) -> bool:
    return quadratic_int(p, n) == 0


def next_pair(p: int, n: int) -> tuple[int, int]:
    return 8 * n - 5 * p + 1, 19 * n - 12 * p + 3


def iter_pairs() -> Iterator[ExceptionalPair]:
    """Endless stream of exceptional pairs from the recursion."""
    p, n, k = 1, 3, 1
    while True:
        if quadratic_int(p, n) != 0 or not 0 < p <= n:
            raise AssertionError(
                f"recursion produced an invalid pair at k={k}: (p, n) = ({p}, {n})"
            )
        yield ExceptionalPair(k, p, n)
        p, n = next_pair(p, n)
        k += 1


def enumerate_recursive(count: int) -> list[ExceptionalPair]:
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    out = []
    for pair in iter_pairs():
        out.append(pair)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def pairs_up_to(max_n: int) -> list[ExceptionalPair]:
    """Recursion output restricted to ``n <= max_n``."""
    out = []
    for pair in iter_pairs():
        if pair.n > max_n:
            return out
        out.append(pair)
    raise AssertionError("unreachable")


def _scan(lo: int, hi: int) -> list[tuple[int, int]]:
    found = []
    for n in range(lo, hi + 1):
        # 3 | n(n+1) requires n = 0 or 2 (mod 3)
        if n % 3 == 1:
            continue
        m = n * (n + 1) // 3
        s = isqrt(m)
        if s * s == m:
            found.append((n - s, n))
    return found


def enumerate_bruteforce(max_n: int) -> list[ExceptionalPair]:
    """All exceptional pairs with ``n <= max_n``, by exact square testing per n.

    The quadratic's roots are ``n +/- sqrt(n(n+1)/3)``; the smaller root is the
    one with ``p <= n``, and it is an integer iff ``n(n+1)/3`` is a square.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    return [ExceptionalPair(k, p, n) for k, (p, n) in enumerate(_scan(1, max_n), start=1)]


def pair_index(p: int, n: int) -> int | None:
    """Index k of ``(p, n)`` in the recursion, or None if it is not a pair."""
    if not is_degenerate(p, n) or not 0 < p <= n:
        return None
    for pair in iter_pairs():
        if pair.n >= n:
            return pair.k if (pair.p, pair.n) == (p, n) else None
    return None
