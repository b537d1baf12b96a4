"""
Counting avoiders by brute force
================================

The oracle walks [k]^n depth first, dropping any prefix that already
contains the pattern.  It is slow on purpose and exact.
"""
from pogp import avoider_series, count_avoiders, equiv_check, mnd_distribution, parse_pattern
from pogp.oracle import BudgetExceeded

shuffle = parse_pattern("1'-2-1''", "shuffle")
for k in range(1, 4):
    print(k, avoider_series(shuffle, k, 8).counts)

# 1-1'2': the first letter is free, the rest must be non-increasing
multi = parse_pattern("1-1'2'")
print([count_avoiders(multi, 3, n) for n in range(6)])

# equivalence within a budget; swapping the blocks of a multi-pattern
verdict = equiv_check(parse_pattern("12-1'1'2'"), parse_pattern("112-1'2'"), K=3, N=6)
print(verdict.equivalent, verdict.per_k)

# 12 and 11 are not equivalent; the first disagreement is reported
print(equiv_check(parse_pattern("12"), parse_pattern("11"), K=3, N=4).counterexample)

print(mnd_distribution(parse_pattern("21"), 3, 5).histogram)

# results are exact or absent
try:
    count_avoiders(parse_pattern("1234"), 6, 12, cap=10_000)
except BudgetExceeded as exc:
    print("refused:", exc)
