"""Generating functions for POGP avoidance, evaluated as truncated series.

A *provider* is any callable ``provider(k, N) -> Series`` giving the
avoidance series of some pattern over a k-letter alphabet, truncated at
x^N.  Recurrences over k consume providers; every provider must return the
constant series 1 at ``k = 0``.
"""
from __future__ import annotations

import math
from functools import lru_cache, partial
from typing import Callable, Mapping, Sequence

from . import oracle
from .pattern import (
    Pogp,
    block_pattern,
    classify,
    complement_pattern,
    parse_pattern,
    reverse_pattern,
)
from .series import Series, YSeries

Provider = Callable[[int, int], Series]

DEFAULT_ORDER = 16
DEFAULT_MAX_Y = 8


def unit_provider(k: int, N: int) -> Series:
    """Avoidance series of the one-letter pattern: only the empty word avoids it."""
    return Series.one(N)


def _x(N: int) -> Series:
    return Series.x(N)


# --------------------------------------------------------------------------
# Closed forms
# --------------------------------------------------------------------------

def gf_eq1(k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of 1'-2-1'': 1/(1-x)^(2k-1) - sum_{j=1}^{k-1} x/(1-x)^(2j)."""
    if k < 1:
        raise ValueError("the closed form needs k >= 1")
    one_minus_x = 1 - _x(N)
    out = one_minus_x ** (1 - 2 * k)
    for j in range(1, k):
        out = out - _x(N) * one_minus_x ** (-2 * j)
    return out


def eq1_recurrence(k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of 1'-2-1'' from the integer recurrence in k.

    a(n;k) - 2a(n-1;k) + a(n-2;k) = a(n;k-1) for n >= 2, a(0;k) = 1,
    a(1;k) = k, started from the empty alphabet.
    """
    prev = [1] + [0] * N
    for kk in range(1, k + 1):
        cur = [1, kk][: N + 1]
        for n in range(2, N + 1):
            cur.append(2 * cur[n - 1] - cur[n - 2] + prev[n])
        prev = cur
    return Series(prev, N)


def _known_12(k: int, N: int) -> Series:
    return (1 - _x(N)) ** (-k)


def _known_122(k: int, N: int) -> Series:
    # x / ((1-x^2)^k - (1-x)): both sides vanish at x = 0, so cancel one x
    M = N + 1
    x = _x(M)
    denominator = (1 - x * x) ** k - (1 - x)
    return denominator.divide_by_x().inverse()


def _sum_212(k: int, N: int) -> Series:
    x = _x(N)
    total = Series.zero(N)
    for j in range(k):
        total = total + (1 + j * x * x).inverse()
    return total


def _known_212(k: int, N: int) -> Series:
    return (1 - _x(N) * _sum_212(k, N)).inverse()


def _a123(j: int) -> int:
    return (1, -1, 0)[j % 3]


def _denominator_123(k: int, N: int) -> Series:
    return Series([_a123(j) * math.comb(k, j) for j in range(min(k, N) + 1)], N)


def _known_123(k: int, N: int) -> Series:
    return _denominator_123(k, N).inverse()


def _known_1_12(k: int, N: int) -> Series:
    if k == 0:
        return Series.one(N)
    return Series([1] + [k * math.comb(n + k - 2, n - 1) for n in range(1, N + 1)])


KNOWN: dict[str, Callable[[int, int], Series]] = {
    "12": _known_12,
    "21": _known_12,
    "122": _known_122,
    "212": _known_212,
    "123": _known_123,
    "1-1'2'": _known_1_12,
}


def gf_known(name: str, k: int, N: int = DEFAULT_ORDER, registry: Mapping[str, Provider] | None = None) -> Series:
    """Avoidance series of a pattern with a quoted closed form."""
    registry = KNOWN if registry is None else registry
    if name not in registry:
        raise KeyError(f"no closed form registered for {name!r}; known: {sorted(registry)}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Series.one(N)
    return registry[name](k, N)


def known_provider(name: str, registry: Mapping[str, Provider] | None = None) -> Provider:
    if name not in (KNOWN if registry is None else registry):
        raise KeyError(name)
    return partial(gf_known, name, registry=registry)


def oracle_provider(p: Pogp, cap: int = oracle.DEFAULT_CAP) -> Provider:
    """Provider backed by exhaustive enumeration; only sensible for small k, N."""

    def provide(k: int, N: int) -> Series:
        return Series(oracle.avoider_series(p, k, N, cap).counts)

    return provide


# --------------------------------------------------------------------------
# Transforms and recurrences
# --------------------------------------------------------------------------

def quasi_transform(A: Series, k: int) -> Series:
    """Quasi-avoider series (kx - 1) A + 1 from the avoider series A."""
    return (k * _x(A.order) - 1) * A + 1


def shuffle_general(tau: Provider, nu: Provider, k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of tau-l-nu, l greater than every letter of tau and nu.

    Iterates A(k) = (A(k-1) - x T N) / ((1 - x T)(1 - x N)) with T, N the
    avoidance series of tau and nu over k-1 letters, from A(0) = 1.
    """
    x = _x(N)
    A = Series.one(N)
    for j in range(1, k + 1):
        T, V = tau(j - 1, N), nu(j - 1, N)
        A = (A - x * T * V) * ((1 - x * T) * (1 - x * V)).inverse()
    return A


def shuffle_same(tau: Provider, k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of tau-l-tau: A(k) = (A(k-1) - x T^2) / (1 - x T)^2."""
    x = _x(N)
    A = Series.one(N)
    for j in range(1, k + 1):
        T = tau(j - 1, N)
        A = (A - x * T * T) * ((1 - x * T) ** -2)
    return A


def multipattern(providers: Sequence[Provider], k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of the multi-pattern tau^1-...-tau^s.

    sum_j A_j prod_{i<j} ((kx - 1) A_i + 1).
    """
    if not providers:
        raise ValueError("a multi-pattern needs at least one block")
    total = Series.zero(N)
    prefix = Series.one(N)
    for provide in providers:
        A = provide(k, N)
        total = total + A * prefix
        prefix = prefix * quasi_transform(A, k)
    return total


def prefix_decomposition(tau0: Provider, phi: Provider, k: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of tau0-phi: A_tau0 + A_phi * quasi(A_tau0)."""
    A0 = tau0(k, N)
    return A0 + phi(k, N) * quasi_transform(A0, k)


def descent_multipattern(k: int, s: int, N: int = DEFAULT_ORDER) -> Series:
    """Avoiders of an s-block multi-pattern of 12s and 21s.

    (1 - (1 + (kx - 1)/(1 - x)^k)^s) / (1 - kx).
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    x = _x(N)
    inner = 1 + (k * x - 1) * (1 - x) ** (-k)
    return (1 - inner**s) * (1 - k * x).inverse()


def mnd_gf(A: Series, k: int, N: int | None = None, S: int = DEFAULT_MAX_Y) -> YSeries:
    """Joint distribution of length and max non-overlapping occurrences.

    ``A`` is the avoidance series of a hyphen-free pattern over k letters.
    The y^s slice is A ((kx - 1) A + 1)^s, the series of words with exactly s
    non-overlapping occurrences.
    """
    if N is not None:
        A = A.truncate(N)
    Q = quasi_transform(A, k)
    slices = [A]
    for _ in range(S):
        slices.append(slices[-1] * Q)
    return YSeries(slices)


def _bivariate_reciprocal(numerator: Series, d0: Series, d1: Series, S: int) -> YSeries:
    """Expand numerator / (d0 + y d1) in powers of y (d0 must be a unit)."""
    inv = d0.inverse()
    ratio = -d1 * inv
    term = numerator * inv
    slices = [term]
    for _ in range(S):
        term = term * ratio
        slices.append(term)
    return YSeries(slices)


def mnd_closed_form(name: str, k: int, N: int = DEFAULT_ORDER, S: int = DEFAULT_MAX_Y) -> YSeries:
    """The displayed bivariate rational forms for 12, 122, 212 and 123."""
    if name == "12":
        x = _x(N)
        base = (1 - x) ** k
        return _bivariate_reciprocal(Series.one(N), base, 1 - k * x - base, S)
    if name == "122":
        # numerator and both denominator parts are divisible by x
        x = _x(N + 1)
        sq = (1 - x * x) ** k
        d0 = (sq + x - 1).divide_by_x()
        d1 = (1 - k * x * x - sq).divide_by_x()
        return _bivariate_reciprocal(Series.one(N), d0, d1, S)
    if name == "212":
        x = _x(N)
        total = _sum_212(k, N)
        return _bivariate_reciprocal(Series.one(N), 1 - x * total, x * (total - k), S)
    if name == "123":
        x = _x(N)
        P = _denominator_123(k, N)
        return _bivariate_reciprocal(Series.one(N), P, 1 - k * x - P, S)
    raise KeyError(f"no displayed distribution for {name!r}")


# --------------------------------------------------------------------------
# Pattern -> provider
# --------------------------------------------------------------------------

def _images(p: Pogp) -> list[Pogp]:
    r = reverse_pattern(p)
    return [p, r, complement_pattern(p), complement_pattern(r)]


@lru_cache(maxsize=None)
def _known_patterns() -> dict[Pogp, str]:
    out = {parse_pattern(name): name for name in KNOWN}
    return out


def resolve_provider(p: Pogp, registry: Mapping[str, Provider] | None = None) -> Provider | None:
    """A formula-backed provider for ``p``, or None if no formula applies.

    Covers registry patterns and their reverse/complement images, the
    one-letter pattern, multi-patterns whose blocks resolve, and shuffle
    patterns tau-l-nu whose parts resolve.
    """
    if len(p) == 1:
        return unit_provider
    known = _known_patterns()
    for q in _images(p):
        if q in known:
            return known_provider(known[q], registry)

    cls = classify(p)
    if cls.kind == "multi":
        parts = [resolve_provider(block_pattern(p, i), registry) for i in range(len(p.blocks))]
        if None not in parts:
            return partial(multipattern, parts)
    elif cls.kind == "shuffle" and cls.block_count == 2:
        tau = resolve_provider(block_pattern(p, 0), registry)
        nu = resolve_provider(block_pattern(p, 2), registry)
        if tau is not None and nu is not None:
            return partial(shuffle_general, tau, nu)
    return None
