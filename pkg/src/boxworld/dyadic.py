"""Exact dyadic rationals: numbers of the form numerator / 2**exponent.

Every probability and tensor entry in the theory is dyadic, so closing the
arithmetic over this set keeps all comparisons exact.  Values are kept in
lowest terms: whenever the exponent is positive the numerator is odd.
Division is only defined by (dyadic) powers of two.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import NonDyadicDivisionError

_IntLike = Union[int, "Dyadic"]


class Dyadic:
    """Immutable exact rational with a power-of-two denominator."""

    __slots__ = ("numerator", "exponent")

    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0):
        if not isinstance(numerator, int) or not isinstance(exponent, int):
            raise TypeError("Dyadic takes integer numerator and exponent")
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        else:
            while exponent > 0 and numerator % 2 == 0:
                numerator //= 2
                exponent -= 1
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic values are immutable")

    @property
    def denominator(self) -> int:
        return 1 << self.exponent

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Dyadic":
        d = f.denominator
        k = d.bit_length() - 1
        if d != 1 << k:
            raise NonDyadicDivisionError(f"{f} has a non-power-of-two denominator")
        return cls(f.numerator, k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse "3/4", "-1/2" or a bare integer string."""
        return cls.from_fraction(Fraction(text.strip()))

    def _coerce(self, other) -> "Dyadic":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int):
            return Dyadic(other)
        return NotImplemented

    def __add__(self, other: _IntLike) -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        k = max(self.exponent, o.exponent)
        num = (self.numerator << (k - self.exponent)) + (o.numerator << (k - o.exponent))
        return Dyadic(num, k)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other: _IntLike) -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: _IntLike) -> "Dyadic":
        return (-self) + other

    def __mul__(self, other: _IntLike) -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dyadic(self.numerator * o.numerator, self.exponent + o.exponent)

    __rmul__ = __mul__

    def is_power_of_two(self) -> bool:
        n = abs(self.numerator)
        return n != 0 and (n & (n - 1)) == 0

    def __truediv__(self, other: _IntLike) -> "Dyadic":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.numerator == 0:
            raise ZeroDivisionError("dyadic division by zero")
        if not o.is_power_of_two():
            raise NonDyadicDivisionError(f"cannot divide dyadic by {o}")
        sign = -1 if o.numerator < 0 else 1
        k = abs(o.numerator).bit_length() - 1  # |o| = 2**(k - o.exponent)
        return Dyadic(sign * self.numerator, self.exponent + k - o.exponent)

    def _cmp_key(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return None
        k = max(self.exponent, o.exponent)
        return (self.numerator << (k - self.exponent), o.numerator << (k - o.exponent))

    def __eq__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] == key[1]

    def __lt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] < key[1]

    def __le__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] <= key[1]

    def __gt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] > key[1]

    def __ge__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        return key[0] >= key[1]

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __bool__(self) -> bool:
        return self.numerator != 0

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)
QUARTER = Dyadic(1, 2)


def dy(value: Union[int, str, Fraction, Dyadic]) -> Dyadic:
    """Coerce an int, fraction string, or Fraction to a Dyadic."""
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, int):
        return Dyadic(value)
    if isinstance(value, str):
        return Dyadic.parse(value)
    if isinstance(value, Fraction):
        return Dyadic.from_fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a dyadic rational")
