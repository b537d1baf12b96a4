"""Partially ordered generalized patterns (POGPs) over k-ary words.

A pattern is a list of hyphen-separated blocks of letters.  Every letter is
a :class:`Letter` ``(cls, rank)``: the class is the number of prime marks,
the rank is the written value.  Letters of one class are totally ordered by
rank; letters of different classes are related only through the pattern's
explicit strict order.

Text notation::

    pattern := block ("-" block)*
    block   := letter+
    letter  := (digit | "(" digits ")") "'"*

so ``"1'-2-1''"`` is the shuffle pattern with two incomparable 1s under a
dominating 2, and ``"(10)'"`` is rank 10 in class 1.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

Word = Sequence[int]

ORDER_MODES = ("incomparable", "shuffle", "explicit")


class PatternError(ValueError):
    """Raised for malformed pattern text or an invalid order relation."""


class Letter(NamedTuple):
    cls: int
    rank: int

    def __str__(self) -> str:
        digits = str(self.rank) if self.rank < 10 else f"({self.rank})"
        return digits + "'" * self.cls


@dataclass(frozen=True)
class Pogp:
    """A POGP: hyphen-separated blocks plus a transitively closed strict order.

    ``less`` holds every pair ``(p, q)`` with ``p < q``, including the
    within-class pairs implied by rank.
    """

    blocks: tuple[tuple[Letter, ...], ...]
    less: frozenset[tuple[Letter, Letter]]

    def __str__(self) -> str:
        return "-".join("".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"Pogp({str(self)!r})"

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(a for b in self.blocks for a in b)

    @property
    def symbols(self) -> tuple[Letter, ...]:
        """Distinct letters, sorted by (class, rank)."""
        return tuple(sorted(set(self.letters)))

    @property
    def hyphen_free(self) -> bool:
        return len(self.blocks) == 1

    def lt(self, p: Letter, q: Letter) -> bool:
        return (p, q) in self.less

    def comparable(self, p: Letter, q: Letter) -> bool:
        return (p, q) in self.less or (q, p) in self.less


# --------------------------------------------------------------------------
# Parsing and construction
# --------------------------------------------------------------------------

_LETTER = re.compile(r"(\d|\((\d+)\))('*)")


def _parse_letters(text: str) -> list[Letter]:
    out = []
    i = 0
    while i < len(text):
        m = _LETTER.match(text, i)
        if m is None:
            raise PatternError(f"unexpected character {text[i]!r} at offset {i} in {text!r}")
        rank = int(m.group(2) if m.group(2) is not None else m.group(1))
        if rank == 0:
            raise PatternError(f"rank 0 is not a letter (in {text!r})")
        out.append(Letter(len(m.group(3)), rank))
        i = m.end()
    return out


def parse_letter(text: str) -> Letter:
    letters = _parse_letters(text.strip())
    if len(letters) != 1:
        raise PatternError(f"expected a single letter, got {text!r}")
    return letters[0]


def _transitive_closure(pairs: set[tuple[Letter, Letter]]) -> set[tuple[Letter, Letter]]:
    succ: dict[Letter, set[Letter]] = {}
    for p, q in pairs:
        succ.setdefault(p, set()).add(q)
    closed = set()
    for start in succ:
        stack = list(succ[start])
        seen: set[Letter] = set()
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(succ.get(v, ()))
        closed.update((start, v) for v in seen)
    return closed


def _parse_relations(relations: str | Iterable[tuple[str | Letter, str | Letter]]) -> list[tuple[Letter, Letter]]:
    if isinstance(relations, str):
        out = []
        for item in filter(None, (s.strip() for s in relations.split(","))):
            parts = item.split("<")
            if len(parts) < 2:
                raise PatternError(f"relation {item!r} is not of the form a<b")
            chain = [parse_letter(s) for s in parts]
            out.extend(zip(chain, chain[1:]))
        return out
    return [
        (a if isinstance(a, Letter) else parse_letter(a), b if isinstance(b, Letter) else parse_letter(b))
        for a, b in relations
    ]


def make_pattern(
    blocks: Sequence[Sequence[Letter]],
    order: str = "incomparable",
    relations: str | Iterable[tuple[str | Letter, str | Letter]] = (),
) -> Pogp:
    """Build and validate a pattern from letter blocks.

    ``order`` selects how letters of different classes relate:
    ``incomparable`` (no cross-class pairs), ``shuffle`` (every class-0
    letter is greater than every letter of another class) or ``explicit``
    (cross-class pairs come from ``relations``, e.g. ``"1'<1, 1''<1"``).
    """
    if order not in ORDER_MODES:
        raise PatternError(f"unknown order mode {order!r}; expected one of {ORDER_MODES}")
    blocks = tuple(tuple(Letter(*a) for a in b) for b in blocks)
    if not blocks or any(len(b) == 0 for b in blocks):
        raise PatternError("patterns need at least one block and no empty blocks")

    ranks: dict[int, set[int]] = {}
    for a in (a for b in blocks for a in b):
        ranks.setdefault(a.cls, set()).add(a.rank)
    for c, used in ranks.items():
        lo = 1
        if order == "shuffle" and c == 0:
            # the dominating letters sit above the other classes' values
            lo = min(used)
        if used != set(range(lo, lo + len(used))):
            raise PatternError(
                f"class {c} uses ranks {sorted(used)}; they must be contiguous"
                + (" from 1" if lo == 1 else "")
                + (" (did you mean --order shuffle?)" if c == 0 and order != "shuffle" else "")
            )

    symbols = sorted({a for b in blocks for a in b})
    pairs = {(p, q) for p, q in combinations(symbols, 2) if p.cls == q.cls}
    if order == "shuffle":
        pairs |= {(q, p) for p in symbols if p.cls == 0 for q in symbols if q.cls != 0}
    elif order == "explicit":
        carrier = set(symbols)
        for p, q in _parse_relations(relations):
            if p not in carrier or q not in carrier:
                raise PatternError(f"relation {p}<{q} names a letter absent from the pattern")
            pairs.add((p, q))
    elif relations:
        raise PatternError("relations are only accepted with order='explicit'")

    closed = _transitive_closure(pairs)
    if any(p == q for p, q in closed):
        raise PatternError("order relation contains a cycle")
    return Pogp(blocks, frozenset(closed))


def parse_pattern(
    text: str,
    order: str = "incomparable",
    relations: str | Iterable[tuple[str | Letter, str | Letter]] = (),
) -> Pogp:
    """Parse pattern text such as ``"1-1'2'"`` or ``"1'-2-1''"``.

    >>> str(parse_pattern("1'-2-1''", "shuffle"))
    "1'-2-1''"
    """
    text = text.strip()
    if not text:
        raise PatternError("empty pattern")
    parts = text.split("-")
    if any(not p for p in parts):
        raise PatternError(f"empty block in {text!r}")
    return make_pattern([_parse_letters(p) for p in parts], order, relations)


def parse_word(text: str) -> tuple[int, ...]:
    """Digit string (``"113425"``) or comma-separated integers (``"10,2,3"``)."""
    text = text.strip()
    if "," in text:
        letters = tuple(int(s) for s in text.split(","))
    elif text and not text.isdigit():
        raise ValueError(f"not a word: {text!r}")
    else:
        letters = tuple(int(c) for c in text)
    if any(a < 1 for a in letters):
        raise ValueError(f"word letters must be positive: {text!r}")
    return letters


def format_word(word: Word) -> str:
    if all(1 <= a <= 9 for a in word):
        return "".join(map(str, word))
    return ",".join(map(str, word))


# --------------------------------------------------------------------------
# Matching
# --------------------------------------------------------------------------

_EQ, _LT, _GT = 0, 1, 2


class _Matcher:
    """Flattened pattern with the pairwise constraints each position must meet."""

    __slots__ = ("length", "starts", "constraints", "last_block_len")

    def __init__(self, p: Pogp):
        flat = p.letters
        self.length = len(flat)
        self.starts = []
        for b in p.blocks:
            self.starts.append(True)
            self.starts.extend([False] * (len(b) - 1))
        self.last_block_len = len(p.blocks[-1])
        self.constraints = []
        for j, q in enumerate(flat):
            cons = []
            for i in range(j):
                a = flat[i]
                if a == q:
                    cons.append((i, _EQ))
                elif (a, q) in p.less:
                    cons.append((i, _LT))
                elif (q, a) in p.less:
                    cons.append((i, _GT))
            self.constraints.append(tuple(cons))


_MATCHERS: dict[Pogp, _Matcher] = {}


def _matcher(p: Pogp) -> _Matcher:
    m = _MATCHERS.get(p)
    if m is None:
        if len(_MATCHERS) > 4096:
            _MATCHERS.clear()
        m = _MATCHERS[p] = _Matcher(p)
    return m


def _search(word: Word, m: _Matcher, anchored: bool = False):
    """Yield occurrence position tuples in lexicographic order.

    With ``anchored`` the last block must end at the last letter of ``word``.
    """
    n, L = len(word), m.length
    if L > n:
        return
    pos = [0] * L
    starts, constraints = m.starts, m.constraints
    fixed_last = n - m.last_block_len

    def fits(j: int, at: int) -> bool:
        c = word[at]
        for i, rel in constraints[j]:
            d = word[pos[i]]
            if rel == _EQ:
                if d != c:
                    return False
            elif rel == _LT:
                if not d < c:
                    return False
            elif not d > c:
                return False
        return True

    def rec(j: int):
        if j == L:
            yield tuple(pos)
            return
        if starts[j]:
            lo = pos[j - 1] + 1 if j else 0
            hi = n - (L - j)
            if anchored and L - j == m.last_block_len:
                lo = max(lo, fixed_last)
            candidates = range(lo, hi + 1)
        else:
            candidates = (pos[j - 1] + 1,)
        for at in candidates:
            if fits(j, at):
                pos[j] = at
                yield from rec(j + 1)

    yield from rec(0)


def occurrences(word: Word, p: Pogp) -> list[tuple[int, ...]]:
    """All occurrences of ``p`` in ``word`` as 0-based position tuples, sorted.

    >>> len(occurrences((1, 1, 3, 4, 2, 5), parse_pattern("1-1'2'")))
    7
    """
    return list(_search(word, _matcher(p)))


def contains(word: Word, p: Pogp) -> bool:
    return next(_search(word, _matcher(p)), None) is not None


def avoids(word: Word, p: Pogp) -> bool:
    return not contains(word, p)


def occurs_at_end(word: Word, p: Pogp) -> bool:
    """True if some occurrence of ``p`` uses the last letter of ``word``."""
    return next(_search(word, _matcher(p), anchored=True), None) is not None


def _require_hyphen_free(p: Pogp, what: str) -> None:
    if not p.hyphen_free:
        raise PatternError(f"{what} is defined for hyphen-free patterns only, got {p}")


def quasi_avoids(word: Word, p: Pogp) -> bool:
    """Exactly one occurrence of ``p``, and it is the ``len(p)`` rightmost letters."""
    _require_hyphen_free(p, "quasi-avoidance")
    found = list(_search(word, _matcher(p)))
    n = len(word)
    return len(found) == 1 and found[0][0] == n - len(p)


def mnd(word: Word, p: Pogp) -> int:
    """Maximum number of pairwise non-overlapping occurrences of ``p``.

    Occurrences of a hyphen-free pattern are intervals of equal length, so
    scanning them by start and keeping each one that clears the last kept
    interval is the earliest-end greedy, which is optimal.
    """
    _require_hyphen_free(p, "mnd")
    count, free_from = 0, 0
    for occ in _search(word, _matcher(p)):
        if occ[0] >= free_from:
            count += 1
            free_from = occ[-1] + 1
    return count


# --------------------------------------------------------------------------
# Trivial bijections
# --------------------------------------------------------------------------

def reverse_word(word: Word) -> tuple[int, ...]:
    return tuple(reversed(word))


def complement_word(word: Word, k: int) -> tuple[int, ...]:
    if any(not 1 <= a <= k for a in word):
        raise ValueError(f"word {format_word(word)} is not over [{k}]")
    return tuple(k + 1 - a for a in word)


def reverse_pattern(p: Pogp) -> Pogp:
    return Pogp(tuple(tuple(reversed(b)) for b in reversed(p.blocks)), p.less)


def complement_pattern(p: Pogp) -> Pogp:
    """Invert the order; ranks are mirrored inside each class to stay increasing."""
    ranks: dict[int, list[int]] = {}
    for a in p.symbols:
        ranks.setdefault(a.cls, []).append(a.rank)
    span = {c: min(r) + max(r) for c, r in ranks.items()}

    def flip(a: Letter) -> Letter:
        return Letter(a.cls, span[a.cls] - a.rank)

    blocks = tuple(tuple(flip(a) for a in b) for b in p.blocks)
    return Pogp(blocks, frozenset((flip(q), flip(p_)) for p_, q in p.less))


# --------------------------------------------------------------------------
# Structure
# --------------------------------------------------------------------------

def _valuations(symbols: Sequence[Letter], less: frozenset) -> Iterable[dict[Letter, int]]:
    """Order-preserving surjections onto {1..m}, built level by level.

    Each level is a nonempty set of currently minimal symbols, so every
    valuation is produced exactly once.
    """
    preds = {s: {p for p in symbols if (p, s) in less} for s in symbols}

    def rec(remaining: frozenset, level: int, assigned: dict):
        if not remaining:
            yield dict(assigned)
            return
        minimal = [s for s in symbols if s in remaining and not (preds[s] & remaining)]
        for size in range(1, len(minimal) + 1):
            for chosen in combinations(minimal, size):
                for s in chosen:
                    assigned[s] = level
                yield from rec(remaining - set(chosen), level + 1, assigned)
                for s in chosen:
                    del assigned[s]

    yield from rec(frozenset(symbols), 1, {})


def expand(p: Pogp) -> set[Pogp]:
    """Ordinary generalized patterns whose joint avoidance is avoidance of ``p``.

    >>> sorted(map(str, expand(parse_pattern("1'-2-1''", "shuffle"))))
    ['1-2-1', '1-3-2', '2-3-1']
    """
    out = set()
    for v in _valuations(p.symbols, p.less):
        blocks = [[Letter(0, v[a]) for a in b] for b in p.blocks]
        out.add(make_pattern(blocks))
    return out


def expansion_count(r1: int, r2: int) -> int:
    """Number of generalized patterns a two-class shuffle or multi-pattern expands to."""
    if r1 < 1 or r2 < 1:
        raise ValueError("class sizes must be positive")
    if r1 < r2:
        r1, r2 = r2, r1
    return sum(math.comb(r1, i) * math.comb(r2, i) * math.comb(r1 + r2 - i, r1) for i in range(r2 + 1))


def chain_height(p: Pogp) -> int:
    """Length of the longest strict chain of distinct letters."""
    syms = p.symbols
    height: dict[Letter, int] = {}
    # a linear extension: sort by number of predecessors (closure is transitive)
    for s in sorted(syms, key=lambda s: sum((q, s) in p.less for q in syms)):
        height[s] = 1 + max((height[q] for q in syms if (q, s) in p.less and q in height), default=0)
    return max(height.values())


@dataclass(frozen=True)
class PatternClass:
    kind: str  # plain | multi | shuffle | other
    block_count: int
    class_sizes: tuple[int, ...]


def _class_of_block(b: Sequence[Letter]) -> int | None:
    classes = {a.cls for a in b}
    return classes.pop() if len(classes) == 1 else None


def classify(p: Pogp) -> PatternClass:
    """Recognise plain, multi- and shuffle patterns.

    ``block_count`` is the number of hyphen-free parts ``s + 1`` (for shuffle
    patterns the dominating single letters are not counted) and
    ``class_sizes`` lists the alphabet size of each part in block order.
    """
    syms = p.symbols
    size = {c: len({a.rank for a in syms if a.cls == c}) for c in {a.cls for a in syms}}
    if len(size) == 1 and all(p.comparable(a, b) for a, b in combinations(syms, 2)):
        return PatternClass("plain", len(p.blocks), (size[syms[0].cls],))

    block_cls = [_class_of_block(b) for b in p.blocks]
    nb = len(p.blocks)

    def separated(classes: list[int]) -> bool:
        return len(set(classes)) == len(classes) and not any(
            p.comparable(a, b) for a in syms for b in syms if a.cls != b.cls and a.cls in classes and b.cls in classes
        )

    if None not in block_cls and nb >= 2 and separated(block_cls):
        return PatternClass("multi", nb, tuple(size[c] for c in block_cls))

    if None not in block_cls and nb >= 3 and nb % 2 == 1:
        parts = block_cls[0::2]
        tops = p.blocks[1::2]
        top_cls = {a.cls for b in tops for a in b}
        if all(len(b) == 1 for b in tops) and len(top_cls) == 1 and top_cls.isdisjoint(parts):
            dominating = all(
                p.lt(q, t[0]) for t in tops for q in syms if q.cls in parts
            )
            if dominating and separated(parts):
                return PatternClass("shuffle", len(parts), tuple(size[c] for c in parts))

    return PatternClass("other", nb, tuple(size[c] for c in sorted(size)))


def block_pattern(p: Pogp, i: int) -> Pogp:
    """Block ``i`` of ``p`` as a standalone hyphen-free pattern over class 0."""
    b = p.blocks[i]
    distinct = set(b)
    if any(not p.comparable(x, y) for x, y in combinations(distinct, 2)):
        raise PatternError(f"block {i} of {p} is not totally ordered")
    value = {a: 1 + sum(p.lt(q, a) for q in distinct) for a in distinct}
    return make_pattern([[Letter(0, value[a]) for a in b]])
