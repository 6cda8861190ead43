"""Census of maximal-length minimal zero-sum sequences (ml-mzss).

Enumerates every ml-mzss for a handful of groups, then collapses the lists
to one representative per automorphism orbit. Over C_n the census is exactly
the generator powers e^n, so the total is Euler's phi(n) and there is always
a single orbit.
"""

import math

from zerosum import count_ml_mzss, enumerate_ml_mzss, make_group

print("Full census for C_2 + C_4 (small enough to show every sequence):")
G = make_group([2, 4])
for S in enumerate_ml_mzss(G):
    print(f"  {S}")

print()
print(f"{'group':>8} {'total':>6} {'orbits':>7}  first representative")
for factors in ([2, 2], [2, 4], [3, 3], [2, 6], [4, 4], [3, 6], [2, 8]):
    report = count_ml_mzss(make_group(factors))
    rep = report.representatives[0]
    print(f"{str(report.group):>8} {report.total:>6} {report.orbits:>7}  {rep}")

print()
print("Cyclic groups: totals are phi(n), one orbit each.")
for n in range(2, 13):
    report = count_ml_mzss(make_group([n]))
    phi = sum(1 for e in range(1, n + 1) if math.gcd(e, n) == 1)
    print(f"  C_{n:<2}  total {report.total:>2}  phi(n) = {phi:>2}  orbits {report.orbits}")
