# Exceptional pairs: where the a1 heat invariant is blind.
#
# a_{1,p} carries the factor p^2 - 2np + n(2n-1)/3.  Its positive integer
# zeros with p <= n come from a linear recursion started at (1, 3).
from fractions import Fraction

from kahler_spectra import diophantine as dio

pairs = dio.enumerate_recursive(8)
for pair in pairs:
    print(f"k={pair.k:<2d} p={pair.p:<14d} n={pair.n}")

# The same pairs fall out of a direct scan: p = n - sqrt(n(n+1)/3) must be
# an integer.  Both routes agree on the overlap.
scan = dio.enumerate_bruteforce(200_000)
print("scan up to 2e5 agrees with recursion:", scan == dio.pairs_up_to(200_000))

# Consecutive n grow by a factor tending to 7 + 4*sqrt(3) ~ 13.93.
for a, b in zip(pairs, pairs[1:]):
    print(f"n_{b.k}/n_{a.k} = {float(Fraction(b.n, a.n)):.12f}")

# p_k is even exactly for even k, which matters for the even-p results.
print("parities:", [(x.k, x.p % 2) for x in pairs])
