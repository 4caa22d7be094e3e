# Patodi weights and the heat invariants of constant-HSC Kahler metrics.
from fractions import Fraction

from kahler_spectra import patodi
from kahler_spectra.exact_arith import format_rational as fmt

# The weights for a few (p, n).  (2, 8) is the one place lambda1 vanishes
# in the range 2 <= p <= 2n-2.
for p, n in [(0, 4), (1, 6), (1, 8), (2, 8), (3, 3), (5, 12)]:
    lam = patodi.lambda_coefficients(p, n)
    reduced = patodi.reduced_a2_coefficient(p, n)
    print(f"(p={p}, n={n}): lambda = ({fmt(lam.lambda1)}, {fmt(lam.lambda2)}, "
          f"{fmt(lam.lambda3)}), reduced = {fmt(reduced)}")

# a0, a1, a2 for CP^1(4), the round sphere of radius 1/2, with volume pi
# factored out: a1/a0 = s/6 and a2/a0 = s^2/60 with s = 8.
inv = patodi.heat_invariants(0, 1, 4, 1)
print("CP^1(4) per unit volume:", fmt(inv.a0), fmt(inv.a1), fmt(inv.a2))

# a2 on a non-Einstein metric: the Ricci and Bochner integrals contribute
# with weights 16/(n+2) lambda1 + 2 lambda2 and 4 lambda1.
ints = patodi.CurvatureIntegrals(int_s2=Fraction(100), int_ric2=Fraction(3), int_B2=Fraction(5))
print("a2 at (p=2, n=8) ignores |B|^2:",
      patodi.a2_general(2, 8, ints) == patodi.a2_general(2, 8, patodi.CurvatureIntegrals(100, 3, 0)))

# The weights extend to rational p; positivity survives on a fine grid.
worst = min(patodi.lambda_ratios(Fraction(a, 8), 10)[0] for a in range(16, 8 * 18 + 1))
print("min lambda1/C(2n,p) over p in [2, 18] step 1/8, n = 10:", worst)
