"""Coefficient fields (rationals and prime fields) and weight vectors.

Elements are plain Python values: Fraction over the rationals, ints in
[0, p) over a prime field. The field objects only coerce, invert and
compare; everything stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Element = Union[Fraction, int]


def _is_prime(n: int) -> bool:
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


class RationalField:
    """The field of rational numbers; elements are Fraction."""

    characteristic = 0
    label = "q"

    def coerce(self, x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The prime field F_p; elements are ints reduced into [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime too large (must fit in 31 bits)")
        self.p = p
        self.characteristic = p
        self.label = f"fp:{p}"

    def coerce(self, x) -> int:
        if isinstance(x, str):
            x = int(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def inv(self, x: int) -> int:
        return pow(x % self.p, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def parse_field(spec: str) -> Field:
    """Parse a field label: "q" or "fp:<prime>"."""
    spec = spec.strip().lower()
    if spec == "q":
        return RationalField()
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"bad field spec {spec!r} (expected 'q' or 'fp:<prime>')")


@dataclass(frozen=True)
class WeightVector:
    """Vertex-indexed vector of field elements."""

    field: Field
    entries: tuple[Element, ...]

    @classmethod
    def from_values(cls, values: Sequence, field: Field) -> "WeightVector":
        return cls(field, tuple(field.coerce(x) for x in values))

    @classmethod
    def parse(cls, text: str, field: Field, count: int | None = None) -> "WeightVector":
        """Parse a comma-separated vector; rationals accept "a/b" entries."""
        parts = [p.strip() for p in text.split(",")]
        if count is not None and len(parts) != count:
            raise ValueError(f"expected {count} weights, got {len(parts)}")
        return cls.from_values(parts, field)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def is_sincere(self) -> bool:
        return all(x != 0 for x in self.entries)

    def zero_vector_like(self) -> "WeightVector":
        return WeightVector(self.field, tuple(self.field.zero() for _ in self.entries))


def is_sincere(v: WeightVector) -> bool:
    """True iff every entry of v is nonzero in its field."""
    return v.is_sincere
