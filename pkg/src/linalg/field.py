"""Coefficient fields: arbitrary-precision rationals or a prime field."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import galois

from ..utils.errors import InputError

Scalar = Union[int, Fraction]

PRIME_LIMIT = 2 ** 31
FAST_MODE_PRIME = 1000003


@dataclass(frozen=True)
class FieldSpec:
    """
    A coefficient field.

    Rational elements are `Fraction` instances; prime-field elements are ints in [0, p).
    """

    kind: str = "rat"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rat":
            if self.p is not None:
                raise InputError("The rational field takes no modulus")
        elif self.kind == "fp":
            if self.p is None or not 2 <= self.p < PRIME_LIMIT or not galois.is_prime(self.p):
                raise InputError(f"fp:{self.p} is not a prime below 2^31")
        else:
            raise InputError(f"Unknown field kind: {self.kind}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        Parse a field flag.

        Args:
            text: "rat", "fp:<p>", or "fp" for the prime 1000003

        Returns:
            The field

        Raises:
            InputError: If the text is not a field flag or p is not prime
        """
        text = text.strip()
        if text == "rat":
            return cls("rat")
        if text == "fp":
            return cls("fp", FAST_MODE_PRIME)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise InputError(f"Invalid prime in field flag: {text}")
            return cls("fp", p)
        raise InputError(f"Invalid field flag: {text!r}; expected 'rat', 'fp' or 'fp:<p>'")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rat")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("fp", p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "fp"

    @property
    def label(self) -> str:
        return "rat" if self.kind == "rat" else f"fp:{self.p}"

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.kind == "rat" else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.kind == "rat" else 1

    def coerce(self, value) -> Scalar:
        """Convert an int, Fraction or "p/q" string into a field element."""
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise InputError(f"Invalid field entry: {value!r}")
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "rat":
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InputError(f"Entry {value} has a denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise InputError(f"Invalid field entry: {value!r}")

    def reduce(self, value: Scalar) -> Scalar:
        return value if self.kind == "rat" else value % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.kind == "rat" else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.kind == "rat" else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.kind == "rat" else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.kind == "rat" else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "rat":
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def to_json(self, value: Scalar):
        """Rationals as "p/q" strings, prime-field elements as ints."""
        if self.kind == "rat":
            return str(value)
        return int(value)

    def to_signed_int(self, value: Scalar) -> int:
        """Integer representative, symmetric around zero for the prime field."""
        if self.kind == "rat":
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return value if value <= self.p // 2 else value - self.p


RATIONALS = FieldSpec("rat")
