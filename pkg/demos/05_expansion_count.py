"""
How many ordinary patterns does a two-class POGP stand for?
===========================================================

expansion_count evaluates the binomial sum quoted for two incomparable
alphabets of sizes r1 >= r2.  Counting the expansion directly shows the sum
is exact only when r2 = 1; the direct count follows the Delannoy numbers.
"""
from math import comb

from pogp import expand, expansion_count, parse_pattern


def delannoy(m, n):
    return sum(comb(m, i) * comb(n, i) * 2**i for i in range(min(m, n) + 1))


for r1, r2 in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3)]:
    left = "".join(f"{i}'" for i in range(1, r1 + 1))
    right = "".join(f"{i}''" for i in range(1, r2 + 1))
    p = parse_pattern(f"{left}-{right}")
    print(f"r1={r1} r2={r2}  expand={len(expand(p)):3d}  delannoy={delannoy(r1, r2):3d}  binomial sum={expansion_count(r1, r2):3d}")
