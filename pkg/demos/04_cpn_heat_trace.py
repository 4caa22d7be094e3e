# The function heat trace of CP^n(c) against its small-time expansion.
import mpmath

from kahler_spectra import cpn_spectrum as cpn

print("first levels of CP^3(4):", cpn.levels(3, 4, 4))

with mpmath.workdps(50):
    z, bound = cpn.heat_trace(mpmath.mpf("0.01"), 2, 4)
    print("Z(0.01) on CP^2(4) =", mpmath.nstr(z, 30), " tail <", mpmath.nstr(bound, 3))

# Fit (4 pi t)^n Z(t) = a0 + a1 t + ... on t in [1e-3, 1e-2] and compare with
# the exact predictions (volume, s/6, and the constant-HSC a2).
for n in (1, 2, 3):
    fit = cpn.fit_asymptotics(n, 4)
    rep = cpn.fit_report(fit)
    print(f"n={n}: a0 rel err {rep['predicted_a0']['rel_error']}")
    for key, r in rep["ratios"].items():
        print(f"   {key}: exact {r['value']:>8}  fitted {r['fitted'][:18]}  rel err {r['rel_error']}")
