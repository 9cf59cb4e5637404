"""Coefficient fields: the rationals (gmpy2 ``mpq``) and prime fields ``F_p``.

Elements of ``QQ`` are ``mpq`` values; elements of ``FF(p)`` are plain Python
ints in ``range(p)``.  Both are immutable, so polynomials can share them freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from gmpy2 import mpq, mpz

_mpq_type = type(mpq(0))
_mpz_type = type(mpz(0))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """A coefficient field.  ``characteristic == 0`` means the rationals."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not is_prime(characteristic):
            raise ValueError(f"characteristic {characteristic} is not prime")
        object.__setattr__(self, "characteristic", int(characteristic))

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"FF({self.characteristic})"

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"FF {self.characteristic}"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def zero(self):
        return mpq(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.characteristic == 0 else 1

    def __call__(self, value):
        """Convert ``value`` (int, Fraction, mpq, or ``"p/q"`` text) into the field."""
        p = self.characteristic
        if p == 0:
            if isinstance(value, _mpq_type):
                return value
            if isinstance(value, str):
                return mpq(value.strip())
            if isinstance(value, Fraction):
                return mpq(value.numerator, value.denominator)
            return mpq(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, _mpz_type)):
            return int(value) % p
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, (Fraction, _mpq_type)):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes in characteristic {p}")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot convert {value!r} into {self!r}")

    def inv(self, a):
        if self.characteristic == 0:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def to_text(self, a) -> str:
        """Exact text form; rationals serialize as ``"p/q"``."""
        return str(a)


QQ = Field(0)


@lru_cache(maxsize=None)
def FF(p: int) -> Field:
    return Field(p)
