"""Truncated formal power series with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class Series:
    """Power series in x known modulo x^(order+1).

    Instances are immutable.  Arithmetic between two series requires the
    same truncation order; ints and Fractions act as constants.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Number], order: int | None = None):
        c = [Fraction(a) for a in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be nonnegative")
            c = (c + [Fraction(0)] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self._c = tuple(c)

    # construction ---------------------------------------------------------

    @classmethod
    def const(cls, a: Number, order: int) -> "Series":
        return cls([a], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, a: Number, power: int, order: int) -> "Series":
        return cls([0] * power + [a], order)

    # access ---------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, n: int) -> Fraction:
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._c)

    def as_ints(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        if not self.is_integral():
            bad = next(n for n, a in enumerate(self._c) if a.denominator != 1)
            raise ValueError(f"coefficient of x^{bad} is {self._c[bad]}, not an integer")
        return [int(a) for a in self._c]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to x^{self.order} up to x^{order}")
        return Series(self._c[: order + 1])

    def divide_by_x(self, power: int = 1) -> "Series":
        """Exact division by x^power; the order drops by ``power``."""
        if any(self._c[:power]):
            raise ZeroDivisionError(f"series is not divisible by x^{power}")
        if power > self.order:
            raise ValueError("nothing left after division")
        return Series(self._c[power:])

    def __repr__(self) -> str:
        terms = ", ".join(str(a) for a in self._c)
        return f"Series([{terms}])"

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other.order != self.order:
                raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Series.const(other, self.order)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._c == other._c
        if isinstance(other, (list, tuple)):
            return list(self._c) == [Fraction(a) for a in other]
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __neg__(self) -> "Series":
        return Series(-a for a in self._c)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Series(a + b for a, b in zip(self._c, other._c))

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Series(a - b for a, b in zip(self._c, other._c))

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series(a * other for a in self._c)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self.order
        a, b = self._c, other._c
        nz = [i for i in range(N + 1) if a[i]]
        out = [Fraction(0)] * (N + 1)
        for i in nz:
            ai = a[i]
            for j in range(N + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return Series(out)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        a = self._c
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        N = self.order
        inv0 = 1 / a[0]
        out = [inv0] + [Fraction(0)] * N
        for n in range(1, N + 1):
            s = sum((a[i] * out[n - i] for i in range(1, n + 1) if a[i]), Fraction(0))
            out[n] = -s * inv0
        return Series(out)

    def __truediv__(self, other) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series(a / other for a in self._c)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Series":
        return Series.const(other, self.order) * self.inverse()

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Series.one(self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


# functional spellings --------------------------------------------------------

def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_sub(a: Series, b: Series) -> Series:
    return a - b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inv(a: Series) -> Series:
    return a.inverse()


def series_pow(a: Series, e: int) -> Series:
    return a**e


def series_scale(a: Series, c: Number) -> Series:
    return a * c


class YSeries:
    """Series in x whose coefficients are polynomials in y of degree <= max_y.

    ``coeffs[n][s]`` is the coefficient of y^s x^n.
    """

    __slots__ = ("_c",)

    def __init__(self, slices: Sequence[Series]):
        if not slices:
            raise ValueError("need at least the y^0 slice")
        order = slices[0].order
        if any(s.order != order for s in slices):
            raise ValueError("slices must share a truncation order")
        self._c = tuple(tuple(s[n] for s in slices) for n in range(order + 1))

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def max_y(self) -> int:
        return len(self._c[0]) - 1

    @property
    def coeffs(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._c

    def coefficient(self, n: int, s: int) -> Fraction:
        if s > self.max_y:
            return Fraction(0)
        return self._c[n][s]

    def slice(self, s: int) -> Series:
        """The coefficient of y^s, as a series in x."""
        return Series(self.coefficient(n, s) for n in range(self.order + 1))

    def at_y(self, y: Number) -> Series:
        y = Fraction(y)
        return Series(sum((c * y**s for s, c in enumerate(row)), Fraction(0)) for row in self._c)

    def histogram(self, n: int) -> dict[int, int]:
        """Nonzero y-coefficients at x^n, as ints."""
        out = {}
        for s, c in enumerate(self._c[n]):
            if c:
                if c.denominator != 1:
                    raise ValueError(f"coefficient of y^{s} x^{n} is {c}, not an integer")
                out[s] = int(c)
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, YSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"YSeries(order={self.order}, max_y={self.max_y})"
