"""Formula-versus-oracle cross-checks.

Each check compares engine output against exhaustive enumeration (or
against a second formula) and stops at the first disagreement, reported as
a :class:`Mismatch`.  Formula-only agreement runs over ``k <= K``,
``n <= N``; anything that needs the oracle is clipped to
``k <= oracle_K``, ``n <= oracle_N``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from . import gf, oracle
from .gf import KNOWN, Provider
from .pattern import parse_pattern
from .series import Series

HYPHEN_FREE = ("12", "21", "122", "212", "123")

# tau/nu blocks for shuffle checks, written in classes 1 and 2
_SHUFFLE_PARTS = {"1": ("1'", "1''"), "12": ("1'2'", "1''2''"), "21": ("2'1'", "2''1''")}


@dataclass(frozen=True)
class Mismatch:
    formula: str
    k: int
    n: int
    expected: object
    got: object

    def __str__(self) -> str:
        return f"{self.formula}: k={self.k} n={self.n} expected {self.expected} got {self.got}"


@dataclass(frozen=True)
class CheckResult:
    name: str
    comparisons: int
    mismatch: Mismatch | None = None

    @property
    def passed(self) -> bool:
        return self.mismatch is None


@dataclass(frozen=True)
class Budget:
    K: int = 3
    N: int = 8
    oracle_K: int = 3
    oracle_N: int = 8
    cap: int = oracle.DEFAULT_CAP

    @property
    def ok(self) -> int:
        return min(self.K, self.oracle_K)

    @property
    def on(self) -> int:
        return min(self.N, self.oracle_N)


class _Stop(Exception):
    def __init__(self, mismatch: Mismatch):
        self.mismatch = mismatch


class _Tally:
    def __init__(self):
        self.count = 0

    def same(self, formula: str, k: int, expected, got) -> None:
        """Compare two coefficient sequences entry by entry."""
        expected, got = list(expected), list(got)
        for n, (e, g) in enumerate(zip(expected, got)):
            self.count += 1
            if e != g:
                raise _Stop(Mismatch(formula, k, n, e, g))
        if len(expected) != len(got):
            n = min(len(expected), len(got))
            raise _Stop(Mismatch(formula, k, n, len(expected), len(got)))


def _run(name: str, body: Callable[[_Tally], None]) -> CheckResult:
    tally = _Tally()
    try:
        body(tally)
    except _Stop as stop:
        return CheckResult(name, tally.count, stop.mismatch)
    return CheckResult(name, tally.count)


def _ints(s: Series) -> list:
    return [int(a) if a.denominator == 1 else a for a in s]


def _oracle(text: str, k: int, N: int, b: Budget, order: str = "incomparable") -> tuple[int, ...]:
    return oracle.avoider_series(parse_pattern(text, order), k, N, b.cap).counts


def check_eq1(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    def body(t: _Tally) -> None:
        for k in range(1, b.K + 1):
            closed = _ints(gf.gf_eq1(k, b.N))
            t.same("shuffle_same(1) vs closed form", k, closed, _ints(gf.shuffle_same(gf.unit_provider, k, b.N)))
            t.same("recurrence vs closed form", k, closed, _ints(gf.eq1_recurrence(k, b.N)))
        for k in range(1, b.ok + 1):
            t.same("closed form vs oracle", k, _oracle("1'-2-1''", k, b.on, b, "shuffle"), _ints(gf.gf_eq1(k, b.on)))

    return _run("eq1", body)


def check_registry(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    registry = KNOWN if registry is None else registry

    def body(t: _Tally) -> None:
        for name in sorted(registry):
            for k in range(1, b.ok + 1):
                got = _ints(gf.gf_known(name, k, b.on, registry))
                t.same(f"registry {name}", k, _oracle(name, k, b.on, b), got)

    return _run("registry", body)


def check_quasi(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    def body(t: _Tally) -> None:
        for name in HYPHEN_FREE:
            p = parse_pattern(name)
            for k in range(1, b.ok + 1):
                A = gf.gf_known(name, k, b.on, registry)
                expected = oracle.quasi_series(p, k, b.on, b.cap)
                t.same(f"quasi {name}", k, expected, _ints(gf.quasi_transform(A, k)))

    return _run("quasi", body)


def check_multi(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    a12 = gf.known_provider("12", registry)
    a21 = gf.known_provider("21", registry)

    def body(t: _Tally) -> None:
        for k in range(1, b.ok + 1):
            expected = _oracle("12-1'2'", k, b.on, b)
            t.same("multipattern[12,12]", k, expected, _ints(gf.multipattern([a12, a12], k, b.on)))
            t.same("descent_multipattern s=2", k, expected, _ints(gf.descent_multipattern(k, 2, b.on)))
            t.same("prefix_decomposition 12|12", k, expected, _ints(gf.prefix_decomposition(a12, a12, k, b.on)))
            expected = _oracle("21-1'2'-2''1''", k, b.on, b)
            t.same("multipattern[21,12,21]", k, expected, _ints(gf.multipattern([a21, a12, a21], k, b.on)))
            t.same("descent_multipattern s=3", k, expected, _ints(gf.descent_multipattern(k, 3, b.on)))
        for k in range(1, b.K + 1):
            for s in range(1, 4):
                t.same(
                    f"descent_multipattern s={s} vs multipattern",
                    k,
                    _ints(gf.multipattern([a12] * s, k, b.N)),
                    _ints(gf.descent_multipattern(k, s, b.N)),
                )

    return _run("multi", body)


def _shuffle_text(tau: str, nu: str) -> str:
    left, right = _SHUFFLE_PARTS[tau][0], _SHUFFLE_PARTS[nu][1]
    top = max(len(set(tau)), len(set(nu))) + 1
    return f"{left}-{top}-{right}"


def _part_provider(name: str, registry) -> Provider:
    return gf.unit_provider if name == "1" else gf.known_provider(name, registry)


def check_shuffle(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    names = tuple(_SHUFFLE_PARTS)
    on = min(b.on, 7)

    def body(t: _Tally) -> None:
        for tau in names:
            for nu in names:
                T, V = _part_provider(tau, registry), _part_provider(nu, registry)
                text = _shuffle_text(tau, nu)
                for k in range(1, b.ok + 1):
                    got = _ints(gf.shuffle_general(T, V, k, on))
                    t.same(f"shuffle {text}", k, _oracle(text, k, on, b, "shuffle"), got)
                for k in range(0, b.K + 1):
                    fwd = _ints(gf.shuffle_general(T, V, k, b.N))
                    t.same(f"shuffle symmetry {tau}/{nu}", k, fwd, _ints(gf.shuffle_general(V, T, k, b.N)))
                    if tau == nu:
                        t.same(f"shuffle_same {tau}", k, fwd, _ints(gf.shuffle_same(T, k, b.N)))

    return _run("shuffle", body)


def check_mnd(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    on = min(b.on, 7)

    def body(t: _Tally) -> None:
        for name in HYPHEN_FREE:
            p = parse_pattern(name)
            for k in range(1, b.ok + 1):
                Y = gf.mnd_gf(gf.gf_known(name, k, on, registry), k, S=on)
                for n in range(on + 1):
                    hist = oracle.mnd_distribution(p, k, n, b.cap).histogram
                    t.count += 1
                    if Y.histogram(n) != hist:
                        raise _Stop(Mismatch(f"mnd {name}", k, n, hist, Y.histogram(n)))
                t.same(f"mnd {name} at y=1", k, [k**n for n in range(on + 1)], _ints(Y.at_y(1)))
        for name in ("12", "122", "212", "123"):
            for k in range(1, b.K + 1):
                Y = gf.mnd_gf(gf.gf_known(name, k, b.N, registry), k, S=b.N)
                Z = gf.mnd_closed_form(name, k, b.N, S=b.N)
                for s in range(b.N + 1):
                    t.same(f"mnd {name} displayed form, y^{s}", k, _ints(Z.slice(s)), _ints(Y.slice(s)))

    return _run("mnd", body)


def check_telescoping(b: Budget, registry: Mapping[str, Provider] | None = None) -> CheckResult:
    def body(t: _Tally) -> None:
        for name in HYPHEN_FREE:
            A = gf.known_provider(name, registry)
            for k in range(1, b.K + 1):
                a = A(k, b.N)
                Q = gf.quasi_transform(a, k)
                for s in range(1, 4):
                    diff = gf.multipattern([A] * (s + 1), k, b.N) - gf.multipattern([A] * s, k, b.N)
                    t.same(f"telescoping {name} s={s}", k, _ints(a * Q**s), _ints(diff))

    return _run("telescoping", body)


CHECKS: dict[str, Callable[..., CheckResult]] = {
    "eq1": check_eq1,
    "registry": check_registry,
    "quasi": check_quasi,
    "multi": check_multi,
    "shuffle": check_shuffle,
    "mnd": check_mnd,
    "telescoping": check_telescoping,
}


def run_all(
    budget: Budget | None = None,
    only: list[str] | None = None,
    registry: Mapping[str, Provider] | None = None,
) -> list[CheckResult]:
    budget = budget or Budget()
    names = only or list(CHECKS)
    unknown = set(names) - set(CHECKS)
    if unknown:
        raise KeyError(f"unknown checks {sorted(unknown)}; choose from {sorted(CHECKS)}")
    return [CHECKS[name](budget, registry) for name in names]
