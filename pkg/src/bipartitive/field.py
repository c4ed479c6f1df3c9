"""Exact scalars: rationals (``fractions.Fraction``) and residues modulo a prime.

Rationals are the default field. The prime fields exist mainly so property
tests can run rank computations without coefficient growth.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "Field",
    "RATIONALS",
    "PrimeField",
    "Mod",
    "Scalar",
    "make_rational",
    "field_arith",
    "parse_field",
    "format_rational",
    "parse_rational",
]


def _is_prime(p: int) -> bool:
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


class Mod:
    """A residue modulo a prime. Build these through :class:`PrimeField`."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        self.residue = residue % modulus
        self.modulus = modulus

    def _coerce(self, other) -> int:
        if isinstance(other, Mod):
            if other.modulus != self.modulus:
                raise TypeError(
                    f"cannot mix GF({self.modulus}) and GF({other.modulus}) scalars"
                )
            return other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise TypeError(f"cannot mix GF({self.modulus}) with {type(other).__name__}")

    def __add__(self, other):
        return Mod(self.residue + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Mod(self.residue - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return Mod(self._coerce(other) - self.residue, self.modulus)

    def __mul__(self, other):
        return Mod(self.residue * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.residue, self.modulus)

    def inverse(self) -> "Mod":
        if self.residue == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.modulus})")
        return Mod(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * Mod(self._coerce(other), self.modulus).inverse()

    def __rtruediv__(self, other):
        return Mod(self._coerce(other), self.modulus) * self.inverse()

    def __bool__(self) -> bool:
        return self.residue != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Mod):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __repr__(self) -> str:
        return f"Mod({self.residue}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.residue)


Scalar = Union[Fraction, Mod]


class Field:
    """Base for the two supported fields; converts raw values into scalars."""

    name: str

    def __call__(self, value) -> Scalar:
        raise NotImplementedError

    def parse(self, text) -> Scalar:
        raise NotImplementedError

    def format(self, x: Scalar):
        raise NotImplementedError

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def owns(self, x) -> bool:
        raise NotImplementedError


class RationalField(Field):
    name = "q"

    def __call__(self, value) -> Fraction:
        if isinstance(value, Mod):
            raise TypeError("a prime-field residue is not a rational")
        if isinstance(value, float):
            raise TypeError("floating point values are not exact; pass int or Fraction")
        return Fraction(value)

    def parse(self, text) -> Fraction:
        return parse_rational(text)

    def format(self, x: Fraction):
        return format_rational(x)

    def owns(self, x) -> bool:
        return isinstance(x, Fraction)

    def __repr__(self) -> str:
        return "RATIONALS"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("q")


RATIONALS = RationalField()


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.name = f"gf:{p}"

    def __call__(self, value) -> Mod:
        if isinstance(value, Mod):
            if value.modulus != self.p:
                raise TypeError(f"residue mod {value.modulus} is not in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Mod(value.numerator, self.p) / value.denominator
        if isinstance(value, int) and not isinstance(value, bool):
            return Mod(value, self.p)
        raise TypeError(f"cannot convert {value!r} into GF({self.p})")

    def parse(self, text) -> Mod:
        return self(parse_rational(text))

    def format(self, x: Mod) -> int:
        return x.residue

    def owns(self, x) -> bool:
        return isinstance(x, Mod) and x.modulus == self.p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("gf", self.p))


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(name: str) -> Field:
    """Parse ``"q"`` or ``"gf:p"``."""
    if name == "q":
        return RATIONALS
    m = re.fullmatch(r"gf:(\d+)", name)
    if not m:
        raise ValueError(f"unknown field {name!r}; expected 'q' or 'gf:p'")
    return prime_field(int(m.group(1)))


def make_rational(p: int, q: int) -> Fraction:
    if q == 0:
        raise ZeroDivisionError(f"zero denominator in {p}/0")
    return Fraction(p, q)


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?")


def parse_rational(text) -> Fraction:
    """Accept an int, or a string ``"a"`` / ``"a/b"``."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.fullmatch(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction):
    """Integers come out as ints, everything else as a ``"p/q"`` string."""
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


_UNARY = {"neg", "inv"}


def field_arith(op: str, x: Scalar, y: Scalar | None = None) -> Scalar:
    """Apply one of add/sub/mul/div/neg/inv to field scalars of the same field."""
    if op in _UNARY:
        if y is not None:
            raise TypeError(f"{op} takes a single operand")
        if op == "neg":
            return -x
        if isinstance(x, Mod):
            return x.inverse()
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / x
    if y is None:
        raise TypeError(f"{op} takes two operands")
    if type(x) is not type(y):
        raise TypeError(f"mixed field scalars: {type(x).__name__} and {type(y).__name__}")
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
