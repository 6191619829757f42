"""Scalar fields: the rationals and small prime fields.

Elements of Q are plain :class:`fractions.Fraction` values.  Elements of
GF(p) are :class:`GFElement` instances.  The two never mix implicitly:
``Fraction(1, 2) + GF(3)(1)`` raises ``TypeError``; use ``field(x)`` to
convert explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Integral


class GFElement:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise TypeError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, Integral) and not isinstance(other, bool):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(self.value * v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return self * GFElement(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return GFElement(v, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GFElement(pow(self.value, k, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        v = self._other(other) if not isinstance(other, Fraction) else NotImplemented
        if v is NotImplemented:
            return NotImplemented
        return self.value == v % self.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF{self.p}({self.value})"

    def __str__(self):
        return str(self.value)


class RationalField:
    name = "q"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, GFElement):
            raise TypeError("GF(p) values do not convert to rationals")
        if isinstance(x, float):
            raise TypeError("floating point values are not accepted; pass a string or Fraction")
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def random(self, rng, bound: int = 3, denominators: int = 1) -> Fraction:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, denominators)
        return Fraction(num, den)

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"gf{p}"
        self.characteristic = p
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def __call__(self, x) -> GFElement:
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError(f"cannot convert GF({x.p}) value to GF({self.p})")
            return x
        if isinstance(x, float):
            raise TypeError("floating point values are not accepted")
        if isinstance(x, Integral):
            return GFElement(int(x), self.p)
        q = Fraction(x)
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"{q} has no image in GF({self.p})")
        return GFElement(q.numerator, self.p) * GFElement(q.denominator, self.p).inverse()

    def contains(self, x) -> bool:
        return isinstance(x, GFElement) and x.p == self.p

    def elements(self):
        return [GFElement(v, self.p) for v in range(self.p)]

    def random(self, rng, **_) -> GFElement:
        return GFElement(rng.randrange(self.p), self.p)

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_by_name(name: str):
    """``"q"`` -> QQ, ``"gf3"`` -> GF(3)."""
    name = name.strip().lower()
    if name in ("q", "qq", "rational", "rationals"):
        return QQ
    if name.startswith("gf"):
        return GF(int(name[2:]))
    raise ValueError(f"unknown field {name!r}")


def field_of_scalar(x):
    if isinstance(x, GFElement):
        return GF(x.p)
    return QQ


def parse_scalar(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal into an exact rational."""
    text = text.strip()
    if not text or any(c in text for c in ".eE"):
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)
