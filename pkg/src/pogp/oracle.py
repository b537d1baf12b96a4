"""Brute-force ground truth by exhaustive enumeration of [k]^n.

Every function here counts "word-steps" (prefixes or words visited) and
raises :class:`BudgetExceeded` once the cap is passed, so a result is
either exact or absent.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .pattern import Pogp, _matcher, _require_hyphen_free, _search, mnd, quasi_avoids

DEFAULT_CAP = 10**8


class BudgetExceeded(RuntimeError):
    """The enumeration would visit more word-steps than the cap allows."""


class _Budget:
    __slots__ = ("cap", "used")

    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def spend(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.cap:
            raise BudgetExceeded(f"enumeration cap of {self.cap} word-steps exceeded")


@dataclass(frozen=True)
class CountTable:
    pattern: Pogp
    k: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class MndTable:
    pattern: Pogp
    k: int
    n: int
    histogram: dict[int, int] = field(hash=False)


def _avoider_levels(p: Pogp, k: int, N: int, cap: int) -> list[int]:
    """Avoider counts for n = 0..N in one depth-first pass.

    A prefix containing ``p`` has no avoiding extension, so only occurrences
    ending at the newly appended letter need checking.
    """
    budget = _Budget(cap)
    m = _matcher(p)
    counts = [0] * (N + 1)
    word: list[int] = []

    def rec(depth: int) -> None:
        counts[depth] += 1
        if depth == N:
            return
        for a in range(1, k + 1):
            budget.spend()
            word.append(a)
            if next(_search(word, m, anchored=True), None) is None:
                rec(depth + 1)
            word.pop()

    rec(0)
    return counts


def avoider_series(p: Pogp, k: int, N: int, cap: int = DEFAULT_CAP) -> CountTable:
    """a_p(n; k) for n = 0..N."""
    if k < 0 or N < 0:
        raise ValueError("k and N must be nonnegative")
    return CountTable(p, k, tuple(_avoider_levels(p, k, N, cap)))


def count_avoiders(p: Pogp, k: int, n: int, cap: int = DEFAULT_CAP) -> int:
    return avoider_series(p, k, n, cap).counts[n]


def _words(k: int, n: int, cap: int):
    if k**n > cap:
        raise BudgetExceeded(f"{k}^{n} words exceed the enumeration cap of {cap}")
    return product(range(1, k + 1), repeat=n)


def count_quasi_avoiders(p: Pogp, k: int, n: int, cap: int = DEFAULT_CAP) -> int:
    _require_hyphen_free(p, "quasi-avoidance")
    return sum(1 for w in _words(k, n, cap) if quasi_avoids(w, p))


def quasi_series(p: Pogp, k: int, N: int, cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    budget = _Budget(cap)
    out = []
    for n in range(N + 1):
        budget.spend(k**n)
        out.append(count_quasi_avoiders(p, k, n, cap))
    return tuple(out)


def mnd_distribution(p: Pogp, k: int, n: int, cap: int = DEFAULT_CAP) -> MndTable:
    _require_hyphen_free(p, "mnd")
    hist = Counter(mnd(w, p) for w in _words(k, n, cap))
    return MndTable(p, k, n, dict(sorted(hist.items())))


@dataclass(frozen=True)
class Verdict:
    """Outcome of comparing avoider counts of two patterns.

    ``per_k`` records, for each alphabet size checked, whether the counts
    agreed for every n; ``counterexample`` is the first mismatch as
    ``(k, n, count_p, count_q)``.
    """

    equivalent: bool
    per_k: dict[int, bool] = field(hash=False)
    counterexample: tuple[int, int, int, int] | None = None


def equiv_check(p: Pogp, q: Pogp, K: int, N: int, cap: int = DEFAULT_CAP) -> Verdict:
    """Compare avoider counts of ``p`` and ``q`` for 1 <= k <= K, 0 <= n <= N."""
    per_k = {}
    first = None
    for k in range(1, K + 1):
        a = avoider_series(p, k, N, cap).counts
        b = avoider_series(q, k, N, cap).counts
        per_k[k] = a == b
        if first is None and a != b:
            n = next(i for i in range(N + 1) if a[i] != b[i])
            first = (k, n, a[n], b[n])
    return Verdict(first is None, per_k, first)
