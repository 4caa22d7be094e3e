"""Exact integer/rational helpers shared by every other module.

Rationals are plain :class:`fractions.Fraction` values: always reduced, with a
positive denominator and zero stored as ``0/1``, so structural equality is
exact equality.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def binom_ext(u: int, v: int) -> int:
    """Binomial coefficient extended to all integer pairs.

    ``C(u, 0) = 1`` for every ``u`` and ``C(u, v) = 0`` for ``v < 0``.  Outside
    the standard region (``0 < v`` and ``u < v``, including ``u < 0``) the
    value is 0, which keeps the function total.
    """
    if v < 0:
        return 0
    if v == 0:
        return 1
    if u < v:
        return 0
    if u <= _ROW_CACHE_LIMIT:
        return pascal_row(u)[v]
    return math.comb(u, v)


_ROW_CACHE_LIMIT = 4096


@lru_cache(maxsize=32)
def pascal_row(u: int) -> tuple[int, ...]:
    """``(C(u, 0), ..., C(u, u))``; cached because (p, n) sweeps reuse rows."""
    row = [1] * (u + 1)
    for v in range(1, u // 2 + 1):
        row[v] = row[u - v] = row[v - 1] * (u - v + 1) // v
    return tuple(row)


def as_rational(x: int | Fraction | str) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; anything else is a ``ValueError``."""
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: int | Fraction) -> str:
    """Serialize as ``"a/b"`` (reduced, ``b > 0``) or ``"a"`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def compare(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (a > b) - (a < b)
