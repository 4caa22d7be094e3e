# Rigidity verdicts for small (p, n), with the published case next to the
# computed one.
from kahler_spectra.classifier import classify, verify_lastlemma

print(f"{'p':>3} {'n':>3}  {'Q1':<18} {'Q2':<15} case  warnings")
for n in range(1, 11):
    for p in range(0, min(n, 3) + 1):
        r = classify(p, n)
        case = r.theorem1_case if r.theorem1_case is not None else "-"
        print(f"{p:>3} {n:>3}  {r.q1_label:<18} {r.q2_verdict.value:<15} {case!s:<5} {len(r.warnings)}")

print(classify(20, 48).q1_label, classify(2, 8).q2_verdict.value)

# Exhaustive comparison of the positivity set with the published one.
rep = verify_lastlemma(200)
print("claimed but not computed:", rep.claimed_not_computed)
print("computed but not claimed:", rep.computed_not_claimed)
for row in rep.boundary_rows:
    if row["p"] == 1 and row["n"] <= 9:
        print(row)
