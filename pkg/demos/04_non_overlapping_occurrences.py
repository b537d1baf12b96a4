"""
Distribution of non-overlapping occurrences
===========================================

For a hyphen-free pattern, the avoidance series alone determines the joint
distribution of word length and the maximum number of non-overlapping
occurrences.
"""
from pogp import gf_known, mnd_closed_form, mnd_distribution, mnd_gf, parse_pattern

k, N = 3, 8
for name in ["12", "122", "212", "123"]:
    Y = mnd_gf(gf_known(name, k, N), k, S=N)
    assert Y == mnd_closed_form(name, k, N, S=N)
    print(name)
    for n in range(N + 1):
        print(f"  n={n}", Y.histogram(n))

# spot check against enumeration
p = parse_pattern("212")
Y = mnd_gf(gf_known("212", k, 7), k, S=7)
assert Y.histogram(7) == mnd_distribution(p, k, 7).histogram

# setting y = 1 counts every word
print(Y.at_y(1).as_ints())
