"""Exact and high-precision checks for spectral rigidity of Kahler manifolds."""
from .exact_arith import Rational, binom_ext, format_rational, parse_rational
from .patodi import (
    CurvatureIntegrals,
    HeatInvariants,
    PatodiCoefficients,
    a0,
    a1_coefficient,
    a2_const_hsc,
    a2_general,
    lambda_coefficients,
    numerical_condition,
    reduced_a2_coefficient,
)
from .diophantine import (
    ExceptionalPair,
    enumerate_bruteforce,
    enumerate_recursive,
    is_degenerate,
    quadratic_value,
)
from .classifier import ClassificationResult, Q1Verdict, Q2Verdict, classify, verify_lastlemma
from .cpn_spectrum import HeatTraceFit, eigenvalue, fit_asymptotics, heat_trace, multiplicity

__version__ = "0.1.0"
