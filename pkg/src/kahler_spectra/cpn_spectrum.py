"""Function-Laplacian spectrum of CP^n(c) and its small-time heat trace.

Level ``k`` has eigenvalue ``k(k+n)c`` with multiplicity
``C(n+k, k)^2 - C(n+k-1, k-1)^2``, where ``c`` is the holomorphic sectional
curvature.  For ``n = 1`` this is the round sphere of curvature ``c``.

The heat trace is summed to a cutoff chosen from a proven tail bound, then
``(4 pi t)^n Z(t)`` is fitted by a polynomial in ``t`` to estimate the
heat invariants ``a_0, a_1, ...``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact_arith import format_rational
from . import patodi

DEFAULT_DIGITS = 60
TAIL_EPS = mpmath.mpf("1e-40")


class HeatTraceError(RuntimeError):
    """Truncation tolerance could not be met, or the fit is ill-conditioned."""

    def __init__(self, message: str, achieved=None):
        super().__init__(message)
        self.achieved = achieved


def eigenvalue(k: int, n: int, c) -> Fraction:
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"holomorphic sectional curvature must be positive, got {c}")
    if k < 0 or n < 1:
        raise ValueError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    return k * (k + n) * c


def multiplicity(k: int, n: int) -> int:
    if k < 0 or n < 1:
        raise ValueError(f"need k >= 0 and n >= 1, got k={k}, n={n}")
    if k == 0:
        return 1
    return math.comb(n + k, k) ** 2 - math.comb(n + k - 1, k - 1) ** 2


def levels(n: int, c, count: int) -> list[tuple[int, Fraction, int]]:
    """First ``count`` spectrum levels as ``(k, eigenvalue, multiplicity)``."""
    return [(k, eigenvalue(k, n, c), multiplicity(k, n)) for k in range(count)]


def volume(n: int, c) -> mpmath.mpf:
    """Riemannian volume ``(4 pi / c)^n / n!`` of CP^n(c)."""
    c = Fraction(c)
    return (4 * mpmath.pi / _mpf(c)) ** n / math.factorial(n)


def _mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def _tail_bound(K: int, n: int, ct: mpmath.mpf) -> mpmath.mpf:
    """Upper bound on ``sum_{k > K} mult(k) exp(-k(k+n) ct)``.

    Uses ``mult(k) <= 2 (k+1)^(2n-1)``.  The bounding terms
    ``f(k) = 2 (k+1)^(2n-1) exp(-k(k+n) ct)`` have a ratio ``f(k+1)/f(k)``
    that decreases in ``k``, so once the ratio ``r`` at ``K+1`` is below 1
    the tail is at most ``f(K+1) / (1 - r)``.  Returns inf otherwise.
    """
    j = K + 1
    r = mpmath.mpf(j + 2) ** (2 * n - 1) / mpmath.mpf(j + 1) ** (2 * n - 1) * mpmath.exp(
        -ct * (2 * j + 1 + n)
    )
    if r >= 1:
        return mpmath.inf
    f = 2 * mpmath.mpf(j + 1) ** (2 * n - 1) * mpmath.exp(-ct * j * (j + n))
    return f / (1 - r)


def heat_trace(t, n: int, c, eps=TAIL_EPS, max_terms: int = 10**6):
    """``Z(t) = sum_k mult(k) exp(-eigenvalue(k) t)`` and its truncation bound.

    Evaluated at the ambient mpmath precision.  Returns ``(value, bound)``.
    """
    t = mpmath.mpf(t)
    if t <= 0:
        raise ValueError(f"t must be positive, got {t}")
    eps = mpmath.mpf(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    ct = _mpf(Fraction(c)) * t
    if ct <= 0:
        raise ValueError(f"holomorphic sectional curvature must be positive, got {c}")

    total = mpmath.mpf(1)
    bound = mpmath.inf
    for k in range(1, max_terms + 1):
        total += multiplicity(k, n) * mpmath.exp(-k * (k + n) * ct)
        if k % 8 == 0 or k == max_terms:
            bound = _tail_bound(k, n, ct)
            if bound < eps:
                return total, bound
    raise HeatTraceError(
        f"tail bound {mpmath.nstr(bound, 5)} above eps after {max_terms} terms", bound
    )


@dataclass
class HeatTraceFit:
    n: int
    c: Fraction
    fitted_a: list
    fit_residual: mpmath.mpf
    truncation_bound: mpmath.mpf
    t_grid: list
    digits: int

    @property
    def degree(self) -> int:
        return len(self.fitted_a) - 1

    def ratio(self, i: int) -> mpmath.mpf:
        return self.fitted_a[i] / self.fitted_a[0]


def geometric_grid(t_min, t_max, size: int) -> list:
    t_min, t_max = mpmath.mpf(t_min), mpmath.mpf(t_max)
    q = t_max / t_min
    return [t_min * q ** (mpmath.mpf(i) / (size - 1)) for i in range(size)]


def fit_asymptotics(
    n: int,
    c,
    degree: int = 4,
    t_min="1e-3",
    t_max="1e-2",
    grid_size: int = 24,
    digits: int = DEFAULT_DIGITS,
    max_rel_residual=mpmath.mpf("1e-6"),
) -> HeatTraceFit:
    """Least-squares estimate of ``a_0..a_degree`` from ``(4 pi t)^n Z(t)``."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError(f"holomorphic sectional curvature must be positive, got {c}")
    if grid_size < degree + 1:
        raise ValueError(f"grid_size {grid_size} too small for degree {degree}")
    with mpmath.workdps(digits):
        t_min, t_max = mpmath.mpf(t_min), mpmath.mpf(t_max)
        if not 0 < t_min < t_max:
            raise ValueError("need 0 < t_min < t_max")
        grid = geometric_grid(t_min, t_max, grid_size)
        ys, worst = [], mpmath.mpf(0)
        for t in grid:
            z, bound = heat_trace(t, n, c)
            scale = (4 * mpmath.pi * t) ** n
            ys.append(z * scale)
            worst = max(worst, bound)
        A = mpmath.matrix([[t**j for j in range(degree + 1)] for t in grid])
        sol, residual = mpmath.qr_solve(A, mpmath.matrix(ys))
        coeffs = [+sol[i] for i in range(degree + 1)]
        rel = residual / mpmath.norm(mpmath.matrix(ys))
        if rel > max_rel_residual:
            raise HeatTraceError(
                f"fit residual {mpmath.nstr(rel, 5)} (relative) exceeds "
                f"{mpmath.nstr(max_rel_residual, 3)}; shrink t_max or raise the degree",
                rel,
            )
    return HeatTraceFit(n, c, coeffs, residual, worst, grid, digits)


def predicted_ratio_coefficients(n: int) -> list[Fraction]:
    """Exact ``r_i`` with ``a_i / a_0 = r_i c^i`` for i = 0, 1, 2 on CP^n(c)."""
    scal = n * (n + 1)
    r1 = patodi.a1_coefficient(0, n) * scal
    r2 = patodi.a2_const_hsc(0, n, 1, 1)
    return [Fraction(1), r1, r2]


def fit_report(fit: HeatTraceFit) -> dict:
    """JSON-ready comparison of fitted coefficients against exact predictions."""
    with mpmath.workdps(fit.digits):
        digits = fit.digits
        out = {
            "n": fit.n,
            "c": format_rational(fit.c),
            "degree": fit.degree,
            "digits": digits,
            "t_min": mpmath.nstr(fit.t_grid[0], 15),
            "t_max": mpmath.nstr(fit.t_grid[-1], 15),
            "points": len(fit.t_grid),
            "fitted_a": [mpmath.nstr(a, digits) for a in fit.fitted_a],
            "fit_residual": mpmath.nstr(fit.fit_residual, 10),
            "truncation_bound": mpmath.nstr(fit.truncation_bound, 10),
        }
        vol = volume(fit.n, fit.c)
        vol_coeff = Fraction(4**fit.n, math.factorial(fit.n)) / fit.c**fit.n
        out["predicted_a0"] = {
            "exact": f"{format_rational(vol_coeff)}*pi^{fit.n}",
            "decimal": mpmath.nstr(vol, 30),
            "rel_error": mpmath.nstr(abs(fit.fitted_a[0] / vol - 1), 6),
        }
        ratios = {}
        for i, r in enumerate(predicted_ratio_coefficients(fit.n)):
            if i == 0 or i > fit.degree:
                continue
            exact = r * fit.c**i
            fitted = fit.ratio(i)
            ratios[f"a{i}/a0"] = {
                "exact": f"{format_rational(r)}*c^{i}",
                "value": format_rational(exact),
                "fitted": mpmath.nstr(fitted, 30),
                "rel_error": mpmath.nstr(abs(fitted / _mpf(exact) - 1), 6),
            }
        out["ratios"] = ratios
    return out
