"""Patodi coefficients and the heat invariants a0, a1, a2 on Kahler manifolds.

All quantities are exact rationals.  Curvature enters only through the three
integrals ``int s^2``, ``int |Ric_0|^2`` (traceless Ricci form) and
``int |B|^2`` (Bochner tensor), supplied by the caller.

``p`` is folded to ``min(p, 2n - p)`` before evaluation since the p-spectrum
and the (2n-p)-spectrum coincide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import binom_ext


@dataclass(frozen=True)
class PatodiCoefficients:
    lambda1: Fraction
    lambda2: Fraction
    lambda3: Fraction
    p: int
    n: int

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.lambda1, self.lambda2, self.lambda3)


@dataclass(frozen=True)
class CurvatureIntegrals:
    """Integrals of ``s_g^2``, ``|traceless Ric(omega)|^2`` and ``|B|^2``."""

    int_s2: Fraction
    int_ric2: Fraction = Fraction(0)
    int_B2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("int_s2", "int_ric2", "int_B2"):
            val = Fraction(getattr(self, name))
            if val < 0:
                raise ValueError(f"{name} is an integral of a squared norm, got {val}")
            object.__setattr__(self, name, val)


@dataclass(frozen=True)
class HeatInvariants:
    a0: Fraction
    a1: Fraction
    a2: Fraction
    p: int
    n: int


def _check_range(p: int, n: int, min_n: int = 2) -> None:
    if n < min_n:
        raise ValueError(f"complex dimension n must be >= {min_n}, got {n}")
    if not 0 <= p <= 2 * n:
        raise ValueError(f"form degree p must lie in [0, 2n] = [0, {2 * n}], got {p}")


def canonical_p(p: int, n: int) -> int:
    return min(p, 2 * n - p)


def raw_lambdas(p: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three Patodi weights evaluated literally at ``(p, n)`` (no folding)."""
    b0 = binom_ext(2 * n, p)
    b1 = binom_ext(2 * n - 2, p - 1)
    b2 = binom_ext(2 * n - 4, p - 2)
    # common denominator 360
    lam1 = Fraction(2 * b0 - 30 * b1 + 180 * b2, 360)
    lam2 = Fraction(-2 * b0 + 180 * b1 - 720 * b2, 360)
    lam3 = Fraction(5 * b0 - 60 * b1 + 180 * b2, 360)
    return lam1, lam2, lam3


def _lambdas(p: int, n: int) -> PatodiCoefficients:
    # n = 1 is allowed here for the classical surface case used by a1/a2
    _check_range(p, n, min_n=1)
    q = canonical_p(p, n)
    return PatodiCoefficients(*raw_lambdas(q, n), p=q, n=n)


def lambda_coefficients(p: int, n: int) -> PatodiCoefficients:
    """Patodi weights ``(lambda1, lambda2, lambda3)`` for ``n >= 2``, ``0 <= p <= 2n``."""
    _check_range(p, n)
    return _lambdas(p, n)


def lambda_ratios(p: Fraction, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """``lambda_i / C(2n, p)`` as exact rational functions of a rational ``p``.

    The binomials are read through the Gamma function, so
    ``C(2n-2, p-1)/C(2n, p) = p(2n-p) / (2n(2n-1))`` and similarly for the
    second ratio.  Valid for ``n >= 2`` and real ``p`` in ``[2, 2n-2]``; at
    integer ``p`` it agrees with :func:`raw_lambdas` divided by ``C(2n, p)``.
    """
    p = Fraction(p)
    if n < 2 or not 2 <= p <= 2 * n - 2:
        raise ValueError(f"need n >= 2 and 2 <= p <= 2n-2, got p={p}, n={n}")
    r1 = p * (2 * n - p) / (2 * n * (2 * n - 1))
    r2 = r1 * (p - 1) * (2 * n - p - 1) / ((2 * n - 2) * (2 * n - 3))
    lam1 = Fraction(1, 180) - r1 / 12 + r2 / 2
    lam2 = -Fraction(1, 180) + r1 / 2 - 2 * r2
    lam3 = Fraction(1, 72) - r1 / 6 + r2 / 2
    return lam1, lam2, lam3


def reduced_from_lambdas(lam1: Fraction, lam2: Fraction, lam3: Fraction, n: int) -> Fraction:
    m = (n + 1) * (n + 2)
    lam1, lam2, lam3 = Fraction(lam1), Fraction(lam2), Fraction(lam3)
    d = math.lcm(lam1.denominator, lam2.denominator, lam3.denominator)
    # one normalization instead of five
    num = (
        2 * (4 * n + 2) * lam1.numerator * (d // lam1.denominator)
        + m * lam2.numerator * (d // lam2.denominator)
        + 2 * m * lam3.numerator * (d // lam3.denominator)
    )
    return Fraction(num, 2 * d * m)


def a0(p: int, n: int, vol) -> Fraction:
    """Leading heat invariant ``C(2n, p) * Vol``."""
    vol = Fraction(vol)
    if vol <= 0:
        raise ValueError(f"volume must be positive, got {vol}")
    _check_range(p, n, min_n=1)
    return binom_ext(2 * n, p) * vol


def a1_coefficient(p: int, n: int) -> Fraction:
    """Rational factor multiplying ``int s_g dvol`` in ``a_{1,p}``."""
    _check_range(p, n, min_n=1)
    return _a1_unfolded(canonical_p(p, n), n)


def a2_general(p: int, n: int, integrals: CurvatureIntegrals) -> Fraction:
    lam = _lambdas(p, n)
    l1, l2, l3 = lam.as_tuple()
    s2_weight = Fraction(2, n * (n + 1)) * l1 + Fraction(1, 2 * n) * l2 + l3
    ric_weight = Fraction(16, n + 2) * l1 + 2 * l2
    return (
        s2_weight * integrals.int_s2
        + ric_weight * integrals.int_ric2
        + 4 * l1 * integrals.int_B2
    )


def a2_const_hsc(p: int, n: int, c, vol) -> Fraction:
    """``a_{2,p}`` of a metric with constant holomorphic sectional curvature ``c``.

    Constant HSC means Einstein with vanishing Bochner tensor and
    ``s_g = n(n+1)c``, so only the ``s^2`` term survives.
    """
    c, vol = Fraction(c), Fraction(vol)
    if vol <= 0:
        raise ValueError(f"volume must be positive, got {vol}")
    scal = n * (n + 1) * c
    return a2_general(p, n, CurvatureIntegrals(int_s2=scal * scal * vol))


def heat_invariants(p: int, n: int, c, vol) -> HeatInvariants:
    """a0, a1, a2 of a constant-HSC metric with the given volume."""
    c, vol = Fraction(c), Fraction(vol)
    return HeatInvariants(
        a0=a0(p, n, vol),
        a1=a1_coefficient(p, n) * n * (n + 1) * c * vol,
        a2=a2_const_hsc(p, n, c, vol),
        p=canonical_p(p, n),
        n=n,
    )


def reduced_a2_coefficient(p: int, n: int) -> Fraction:
    """Weight of ``int (s^2 - s_0^2)`` once the traceless-Ricci term is eliminated."""
    lam = lambda_coefficients(p, n)
    return reduced_from_lambdas(*lam.as_tuple(), n)


def numerical_condition(p: int, n: int) -> tuple[bool, Fraction, Fraction]:
    """``(holds, reduced_coeff, lambda1)`` where holds means both are > 0."""
    lam = lambda_coefficients(p, n)
    reduced = reduced_from_lambdas(*lam.as_tuple(), n)
    return (reduced > 0 and lam.lambda1 > 0), reduced, lam.lambda1


def duality_violations(max_n: int) -> list[tuple[int, int]]:
    """Cells ``(p, n)``, ``2 <= n <= max_n``, where the unfolded weights, a0 or
    the a1 factor differ between ``p`` and ``2n - p``."""
    bad = []
    for n in range(2, max_n + 1):
        for p in range(0, n + 1):
            q = 2 * n - p
            if raw_lambdas(p, n) != raw_lambdas(q, n):
                bad.append((p, n))
            elif binom_ext(2 * n, p) != binom_ext(2 * n, q):
                bad.append((p, n))
            elif _a1_unfolded(p, n) != _a1_unfolded(q, n):
                bad.append((p, n))
    return bad


def _a1_unfolded(p: int, n: int) -> Fraction:
    prefactor = Fraction(
        math.factorial(2 * n - 2), math.factorial(p) * math.factorial(2 * n - p)
    )
    return prefactor * (p * p - 2 * n * p + Fraction(n * (2 * n - 1), 3))


def reduction_violations(max_n: int) -> list[tuple[int, int]]:
    """Cells where eliminating the Ricci term with the factor ``(n-1)/(4n)``
    does not reproduce :func:`reduced_a2_coefficient`."""
    bad = []
    for n in range(2, max_n + 1):
        factor = Fraction(n - 1, 4 * n)
        w_s = (Fraction(2, n * (n + 1)), Fraction(1, 2 * n))
        w_r = Fraction(16, n + 2)
        for p in range(0, 2 * n + 1):
            l1, l2, l3 = raw_lambdas(canonical_p(p, n), n)
            chain = w_s[0] * l1 + w_s[1] * l2 + l3 + (w_r * l1 + 2 * l2) * factor
            if chain != reduced_a2_coefficient(p, n):
                bad.append((p, n))
    return bad
