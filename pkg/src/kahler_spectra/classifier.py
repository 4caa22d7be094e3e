"""Per-(p, n) rigidity verdicts, computed next to the published case list.

Two questions are answered for a pair ``(p, n)``:

* Q1: does equality of ``a_{i,p}`` (i = 0, 1, 2) with a constant-HSC-``c``
  manifold force a cohomologically Einstein Kahler manifold to have constant
  HSC ``c``?
* Q2: the same with the target fixed to ``CP^n(c)``, ``c > 0``.

The computed verdict follows the positivity criterion exactly.  The published
case list (``theorem1_case``) is reported alongside it, and every pair where
the two disagree gets a warning instead of being silently reconciled.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import diophantine, patodi
from .exact_arith import format_rational

FUJITA_CITATION = (
    "Fujita, volume characterization of CP^n among Fano Kahler-Einstein manifolds"
)


class Q1Verdict(str, Enum):
    RIGID_BY_LEMMA = "RigidByLemma"
    DEGENERATE_PAIR = "DegeneratePair"
    LAMBDA1_ZERO = "Lambda1Zero"
    CONDITION_FAILS = "ConditionFails"


class Q2Verdict(str, Enum):
    RIGID = "Rigid"
    RIGID_VIA_FUJITA = "RigidViaFujita"
    OPEN = "Open"


@dataclass(frozen=True)
class ClassificationResult:
    p: int
    n: int
    degenerate: bool
    lambdas: patodi.PatodiCoefficients
    reduced_coeff: Fraction
    numerical_ok: bool
    q1_verdict: Q1Verdict
    q2_verdict: Q2Verdict
    theorem1_case: int | None
    requires_cohomological_einstein: bool
    pair_index: int | None = None
    citation: str | None = None
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def q1_label(self) -> str:
        if self.q1_verdict is Q1Verdict.DEGENERATE_PAIR:
            return f"DegeneratePair({self.pair_index})"
        return self.q1_verdict.value

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "degenerate": self.degenerate,
            "lambdas": {
                "lambda1": format_rational(self.lambdas.lambda1),
                "lambda2": format_rational(self.lambdas.lambda2),
                "lambda3": format_rational(self.lambdas.lambda3),
            },
            "reduced_coeff": format_rational(self.reduced_coeff),
            "numerical_ok": self.numerical_ok,
            "q1_verdict": self.q1_label,
            "q2_verdict": self.q2_verdict.value,
            "theorem1_case": self.theorem1_case,
            "requires_cohomological_einstein": self.requires_cohomological_einstein,
            "citation": self.citation,
            "warnings": list(self.warnings),
        }


def theorem1_case(p: int, n: int) -> int | None:
    """Clause of the published rigidity theorem covering ``p <= n``, if any."""
    if p == 0 and n >= 1:
        return 1
    if p == 1 and n >= 6:
        return 2
    if p == 2 and n != 8:
        return 3
    if p >= 3 and not diophantine.is_degenerate(p, n):
        return 4
    return None


def classify(p: int, n: int) -> ClassificationResult:
    if n < 1:
        raise ValueError(f"complex dimension n must be >= 1, got {n}")
    if not 0 <= p <= 2 * n:
        raise ValueError(f"form degree p must lie in [0, 2n] = [0, {2 * n}], got {p}")
    p = patodi.canonical_p(p, n)

    warnings = []
    degenerate = diophantine.is_degenerate(p, n)
    k = diophantine.pair_index(p, n) if degenerate else None
    lam = patodi._lambdas(p, n)
    reduced = patodi.reduced_from_lambdas(*lam.as_tuple(), n)
    numerical_ok = reduced > 0 and lam.lambda1 > 0

    if degenerate:
        q1 = Q1Verdict.DEGENERATE_PAIR
    elif lam.lambda1 == 0:
        q1 = Q1Verdict.LAMBDA1_ZERO
    elif numerical_ok:
        q1 = Q1Verdict.RIGID_BY_LEMMA
    else:
        q1 = Q1Verdict.CONDITION_FAILS

    if n == 1 and p != 0:
        # the positivity lemma is stated for n >= 2 only
        q1 = Q1Verdict.CONDITION_FAILS
        warnings.append("n = 1: the positivity lemma assumes n >= 2; only p = 0 is covered")

    citation = None
    if (p, n) == (2, 8):
        q2 = Q2Verdict.RIGID_VIA_FUJITA
        citation = FUJITA_CITATION
    elif q1 is Q1Verdict.RIGID_BY_LEMMA:
        q2 = Q2Verdict.RIGID
    else:
        q2 = Q2Verdict.OPEN

    case = theorem1_case(p, n)
    if case is not None and q1 is not Q1Verdict.RIGID_BY_LEMMA:
        warnings.append(
            f"published case ({case}) claims (p={p}, n={n}) but the computed condition "
            f"fails: lambda1 = {format_rational(lam.lambda1)}, "
            f"reduced coefficient = {format_rational(reduced)}"
        )

    return ClassificationResult(
        p=p,
        n=n,
        degenerate=degenerate,
        lambdas=lam,
        reduced_coeff=reduced,
        numerical_ok=numerical_ok,
        q1_verdict=q1,
        q2_verdict=q2,
        theorem1_case=case,
        requires_cohomological_einstein=not (p > 0 and p % 2 == 0),
        pair_index=k,
        citation=citation,
        warnings=tuple(warnings),
    )


def claimed_lastlemma(p: int, n: int) -> bool:
    """Membership in the published solution set of the positivity condition."""
    if p == 0:
        return n >= 2
    if p == 1:
        return n >= 6
    if p == 2:
        return n >= 2 and n != 8
    return n >= p


@dataclass
class LastLemmaReport:
    max_n: int
    computed: set[tuple[int, int]]
    claimed: set[tuple[int, int]]
    boundary_rows: list[dict]

    @property
    def claimed_not_computed(self) -> list[tuple[int, int]]:
        return sorted(self.claimed - self.computed)

    @property
    def computed_not_claimed(self) -> list[tuple[int, int]]:
        return sorted(self.computed - self.claimed)

    @property
    def diff(self) -> list[tuple[int, int]]:
        return sorted(self.claimed ^ self.computed)

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "computed_size": len(self.computed),
            "claimed_size": len(self.claimed),
            "claimed_not_computed": [list(x) for x in self.claimed_not_computed],
            "computed_not_claimed": [list(x) for x in self.computed_not_claimed],
            "boundary_rows": self.boundary_rows,
        }


def verify_lastlemma(max_n: int) -> LastLemmaReport:
    """Exact solution set of the positivity condition for ``0 <= p <= n <= max_n``.

    Boundary rows list every ``p in {0, 1, 2}`` cell, which is where the
    published set has its exceptions.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be >= 2, got {max_n}")
    computed, claimed, rows = set(), set(), []
    for n in range(2, max_n + 1):
        for p in range(0, n + 1):
            holds, reduced, lam1 = patodi.numerical_condition(p, n)
            if holds:
                computed.add((p, n))
            if claimed_lastlemma(p, n):
                claimed.add((p, n))
            if p <= 2:
                rows.append({
                    "p": p,
                    "n": n,
                    "holds": holds,
                    "claimed": claimed_lastlemma(p, n),
                    "lambda1": format_rational(lam1),
                    "reduced_coeff": format_rational(reduced),
                })
    return LastLemmaReport(max_n, computed, claimed, rows)
