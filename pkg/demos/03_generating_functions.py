"""
Generating functions as truncated series
========================================

Closed forms, recurrences in the alphabet size and the multi-pattern sum
are all evaluated as exact power series and compared with the oracle.
"""
from pogp import (
    avoider_series,
    descent_multipattern,
    eq1_recurrence,
    gf_eq1,
    gf_known,
    known_provider,
    multipattern,
    parse_pattern,
    prefix_decomposition,
    quasi_transform,
    resolve_provider,
    shuffle_general,
    shuffle_same,
    unit_provider,
)

N = 10

# 1'-2-1'' three ways
for k in range(1, 5):
    print(k, gf_eq1(k, N).as_ints())
    assert gf_eq1(k, N) == shuffle_same(unit_provider, k, N) == eq1_recurrence(k, N)

# registry closed forms
for name in ["12", "122", "212", "123", "1-1'2'"]:
    print(name, gf_known(name, 3, N).as_ints())

# quasi-avoiders of 12 over three letters
print(quasi_transform(gf_known("12", 3, N), 3).as_ints())

# two descents, unrelated to each other
a12 = known_provider("12")
two = multipattern([a12, a12], 3, 8)
assert two == descent_multipattern(3, 2, 8) == prefix_decomposition(a12, a12, 3, 8)
assert two.as_ints() == list(avoider_series(parse_pattern("12-1'2'"), 3, 8).counts)
print(two.as_ints())

# shuffle pattern 12-3-21 via the recurrence in k, and its mirror
a21 = known_provider("21")
print(shuffle_general(a12, a21, 4, N).as_ints())
assert shuffle_general(a12, a21, 4, N) == shuffle_general(a21, a12, 4, N)

# resolve_provider picks the formula for a parsed pattern
provide = resolve_provider(parse_pattern("2'1'-3-1''2''", "shuffle"))
print(provide(3, N).as_ints())
