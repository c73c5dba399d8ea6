"""Truncated formal power series in t with square integer-matrix coefficients.

A series carries its truncation order explicitly: coefficients for t^0
through t^order are exact. Mixed-order arithmetic truncates to the
smaller order. Coefficients are arbitrary-precision integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence, Union

from . import matrices
from .errors import (
    AdamsDegreeNotPositive,
    NonInvertibleConstantTerm,
    NonzeroConstantTerm,
    SizeMismatch,
)
from .matrices import Matrix


@dataclass(frozen=True)
class MatrixPowerSeries:
    size: int
    coeffs: tuple[Matrix, ...]  # index = degree; exact through t^order

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        for c in self.coeffs:
            if len(c) != self.size:
                raise SizeMismatch("coefficient size differs from series size")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Matrix:
        if not 0 <= n <= self.order:
            raise IndexError(f"degree {n} outside truncation 0..{self.order}")
        return self.coeffs[n]

    @staticmethod
    def from_polynomial(size: int, terms: Mapping[int, Union[Matrix, int]],
                        order: int) -> "MatrixPowerSeries":
        """Series of a polynomial; integer values stand for scalar * identity."""
        coeffs = [matrices.zero(size) for _ in range(order + 1)]
        for deg, value in terms.items():
            if deg < 0:
                raise ValueError("polynomial degrees must be nonnegative")
            if isinstance(value, int):
                value = matrices.scale(value, matrices.identity(size))
            if deg <= order:
                coeffs[deg] = matrices.add(coeffs[deg], value)
        return MatrixPowerSeries(size, tuple(coeffs))

    @staticmethod
    def one(size: int, order: int) -> "MatrixPowerSeries":
        return MatrixPowerSeries.from_polynomial(size, {0: 1}, order)

    def _common(self, other: "MatrixPowerSeries") -> int:
        if self.size != other.size:
            raise SizeMismatch("series sizes differ")
        return min(self.order, other.order)

    def __add__(self, other: "MatrixPowerSeries") -> "MatrixPowerSeries":
        n = self._common(other)
        return MatrixPowerSeries(self.size, tuple(
            matrices.add(self.coeffs[k], other.coeffs[k]) for k in range(n + 1)))

    def __sub__(self, other: "MatrixPowerSeries") -> "MatrixPowerSeries":
        n = self._common(other)
        return MatrixPowerSeries(self.size, tuple(
            matrices.sub(self.coeffs[k], other.coeffs[k]) for k in range(n + 1)))

    def __neg__(self) -> "MatrixPowerSeries":
        return MatrixPowerSeries(self.size, tuple(matrices.neg(c) for c in self.coeffs))

    def __mul__(self, other: "MatrixPowerSeries") -> "MatrixPowerSeries":
        n = self._common(other)
        out = []
        for k in range(n + 1):
            acc = matrices.zero(self.size)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if not (matrices.is_zero(a) or matrices.is_zero(b)):
                    acc = matrices.add(acc, matrices.mul(a, b))
            out.append(acc)
        return MatrixPowerSeries(self.size, tuple(out))

    def shift(self, m: int) -> "MatrixPowerSeries":
        """Multiply by t^m; the result stays exact through t^(order+m)."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        zero = matrices.zero(self.size)
        return MatrixPowerSeries(self.size, (zero,) * m + self.coeffs)

    def truncate(self, order: int) -> "MatrixPowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return MatrixPowerSeries(self.size, self.coeffs[: order + 1])

    def invert(self) -> "MatrixPowerSeries":
        """Two-sided inverse; requires a constant term invertible over Z."""
        c0_inv = matrices.inverse_over_integers(self.coeffs[0])
        if c0_inv is None:
            raise NonInvertibleConstantTerm(
                "constant coefficient is not invertible over the integers")
        out = [c0_inv]
        for n in range(1, self.order + 1):
            acc = matrices.zero(self.size)
            for k in range(1, n + 1):
                if not matrices.is_zero(self.coeffs[k]):
                    acc = matrices.add(acc, matrices.mul(self.coeffs[k], out[n - k]))
            out.append(matrices.neg(matrices.mul(c0_inv, acc)))
        return MatrixPowerSeries(self.size, tuple(out))

    def is_zero(self) -> bool:
        return all(matrices.is_zero(c) for c in self.coeffs)

    def agrees_with(self, other: "MatrixPowerSeries", through: int | None = None) -> bool:
        """Coefficientwise equality up to the common (or given) order."""
        if self.size != other.size:
            return False
        n = min(self.order, other.order)
        if through is not None:
            if through > n:
                raise ValueError(f"degree {through} beyond common truncation {n}")
            n = through
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def total_dimension(self) -> int:
        """Sum of all entries of all coefficients up to the truncation."""
        return sum(matrices.total(c) for c in self.coeffs)

    def to_jsonable(self) -> dict:
        return {
            "r": self.size,
            "truncation": self.order,
            "coefficients": [[list(row) for row in c] for c in self.coeffs],
        }

    @classmethod
    def from_jsonable(cls, obj: dict) -> "MatrixPowerSeries":
        coeffs = tuple(matrices.from_rows(c) for c in obj["coefficients"])
        series = cls(int(obj["r"]), coeffs)
        if series.order != int(obj["truncation"]):
            raise ValueError("truncation field disagrees with coefficient count")
        return series


class GeneratorSummand(NamedTuple):
    """One free generator bimodule: dimension matrix and its two degrees."""

    matrix: Matrix
    cohomological_degree: int
    adams_degree: int


def generator_series(summands: Sequence[GeneratorSummand | tuple], size: int,
                     order: int) -> MatrixPowerSeries:
    """Signed generator series: sum of (-1)^codeg * matrix * t^adams."""
    terms = MatrixPowerSeries.from_polynomial(size, {}, order)
    for summand in summands:
        mat, codeg, adams = summand
        if adams < 1:
            raise AdamsDegreeNotPositive(f"Adams degree {adams} < 1")
        sign = -1 if codeg % 2 else 1
        signed = matrices.scale(sign, mat)
        terms = terms + MatrixPowerSeries.from_polynomial(size, {adams: signed}, order)
    return terms


def tensor_algebra_series(h: MatrixPowerSeries) -> MatrixPowerSeries:
    """Series of the tensor algebra on a bimodule with series h: 1/(1 - h)."""
    if not matrices.is_zero(h.coeff(0)):
        raise NonzeroConstantTerm("generator series must have zero constant term")
    return (MatrixPowerSeries.one(h.size, h.order) - h).invert()
