"""
Patterns, occurrences and the trivial bijections
================================================

A POGP is written as hyphen-separated blocks.  Primes put letters into
separate comparability classes: 1' and 1'' below are unrelated to each
other, and in shuffle mode the unprimed 2 sits above both.
"""
from pogp import (
    avoids,
    classify,
    complement_word,
    expand,
    mnd,
    occurrences,
    parse_pattern,
    parse_word,
    quasi_avoids,
    reverse_word,
)

# 1-1'2': any letter, later followed by an adjacent rise, unrelated to it
p = parse_pattern("1-1'2'")
word = parse_word("113425")
for occ in occurrences(word, p):
    print(occ, "".join(str(word[i]) for i in occ))

# shuffle patterns need the order mode spelled out
shuffle = parse_pattern("1'-2-1''", "shuffle")
print(classify(shuffle))
print(len(occurrences(parse_word("31421"), shuffle)), "occurrences in 31421")

# a POGP is equivalent to avoiding a set of ordinary patterns
print(sorted(map(str, expand(parse_pattern("1'2'-3-1''", "shuffle")))))

# quasi-avoidance: one occurrence, at the very end
q = parse_pattern("1123")
for text in ["5112234", "5223411", "1123345"]:
    print(text, quasi_avoids(parse_word(text), q))

# maximum number of non-overlapping descents
descent = parse_pattern("21")
for text in ["33211", "13211143211"]:
    print(text, mnd(parse_word(text), descent))

# reverse and complement
w = parse_word("123331")
print(reverse_word(w), complement_word(w, 3))
print(avoids(parse_word("33211"), parse_pattern("12")))
