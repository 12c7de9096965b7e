"""Exact scalar fields: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`Fp` instances carrying their modulus, so mixing two
different fields raises :class:`FieldMismatch` instead of silently coercing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering


class FieldMismatch(TypeError):
    """Raised when scalars from two different fields are combined."""


class FieldSpecError(ValueError):
    """Invalid field description (composite modulus, char 2 without opt-in, bad string)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@total_ordering
class Fp:
    """Residue class modulo a prime ``p``; ``value`` is always in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _coerce(self, other) -> int | None:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} and F_{other.p} scalars cannot be combined")
            return other.value
        if isinstance(other, bool):
            return None
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            raise FieldMismatch(f"cannot combine F_{self.p} scalar with a rational")
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(self.value * v, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Fp:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Fp(v, self.p).inverse()

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Fp(v, self.p) * self.inverse()

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        try:
            v = self._coerce(other)
        except FieldMismatch:
            return False
        if v is None:
            return NotImplemented
        return self.value == v

    def __lt__(self, other):
        # Only used for deterministic sorting, not as a field order.
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value < v

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


_FP_RE = re.compile(r"^\s*(-?\d+)\s*mod\s*(\d+)\s*$")


@dataclass(frozen=True)
class Field:
    """A field specification: ``Field()`` is Q, ``Field(p)`` is F_p.

    Use :meth:`prime` or :meth:`parse` rather than the raw constructor so that
    primality and the characteristic-2 opt-in are enforced.
    """

    p: int | None = None

    @classmethod
    def rational(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int, allow_char_2: bool = False) -> Field:
        if not is_prime(p):
            raise FieldSpecError(f"{p} is not prime")
        if p == 2 and not allow_char_2:
            raise FieldSpecError("characteristic 2 requires allow_char_2=True")
        return cls(p)

    @classmethod
    def parse(cls, text: str, allow_char_2: bool = False) -> Field:
        """Parse ``"rational"`` or ``"fp:<p>"``."""
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls.rational()
        m = re.fullmatch(r"fp:(\d+)", text)
        if not m:
            raise FieldSpecError(f"unknown field {text!r}; expected 'rational' or 'fp:<p>'")
        return cls.prime(int(m.group(1)), allow_char_2=allow_char_2)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce ``x`` (int, Fraction, Fp, or exact string) into this field."""
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.p is None:
            if isinstance(x, Fp):
                raise FieldMismatch("F_p scalar given where a rational was expected")
            if isinstance(x, float):
                raise TypeError("floats are not exact scalars")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"F_{x.p} scalar given where F_{self.p} was expected")
            return x
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        if isinstance(x, int):
            return Fp(x, self.p)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    def contains(self, x) -> bool:
        if self.p is None:
            return isinstance(x, Fraction)
        return isinstance(x, Fp) and x.p == self.p

    def parse_scalar(self, text: str):
        m = _FP_RE.match(text)
        if m:
            if self.p is None or int(m.group(2)) != self.p:
                raise FieldMismatch(f"{text!r} does not belong to {self}")
            return Fp(int(m.group(1)), self.p)
        return self(Fraction(text.strip()))

    def format(self, x) -> str:
        return str(self(x))

    def elements(self):
        """All elements of a prime field, in order 0, 1, ..., p-1."""
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return [Fp(v, self.p) for v in range(self.p)]

    def __str__(self):
        return "rational" if self.p is None else f"fp:{self.p}"


QQ = Field.rational()


def _check_same(x, y):
    if isinstance(x, Fp) or isinstance(y, Fp):
        px = x.p if isinstance(x, Fp) else None
        py = y.p if isinstance(y, Fp) else None
        if px != py:
            raise FieldMismatch(f"scalars from different fields: {x!r}, {y!r}")


def scalar_arith(op: str, x, y=None):
    """Apply ``op`` in {add, sub, mul, div, neg, inv} to exact scalars."""
    if op == "neg":
        return -x
    if op == "inv":
        if not x:
            raise ZeroDivisionError("0 has no inverse")
        return x.inverse() if isinstance(x, Fp) else 1 / x
    if y is None:
        raise TypeError(f"{op} needs two operands")
    _check_same(x, y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")
