"""Small exact integer matrices stored as tuples of tuples.

All arithmetic is over arbitrary-precision Python ints; matrices are
immutable and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SizeMismatch

Matrix = tuple[tuple[int, ...], ...]


def from_rows(rows: Sequence[Sequence[int]]) -> Matrix:
    """Build a square matrix, validating shape and integrality."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise SizeMismatch("matrix is not square")
    return m


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def size(a: Matrix) -> int:
    return len(a)


def _check_sizes(a: Matrix, b: Matrix) -> None:
    if len(a) != len(b):
        raise SizeMismatch(f"matrix sizes differ: {len(a)} vs {len(b)}")


def add(a: Matrix, b: Matrix) -> Matrix:
    _check_sizes(a, b)
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    _check_sizes(a, b)
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def mul(a: Matrix, b: Matrix) -> Matrix:
    _check_sizes(a, b)
    n = len(a)
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def is_identity(a: Matrix) -> bool:
    return a == identity(len(a))


def is_permutation(a: Matrix) -> bool:
    """True iff every row and every column has exactly one 1 and the rest 0."""
    n = len(a)
    if any(x not in (0, 1) for row in a for x in row):
        return False
    if any(sum(row) != 1 for row in a):
        return False
    return all(sum(a[i][j] for i in range(n)) == 1 for j in range(n))


def permutation_matrix(images: Sequence[int]) -> Matrix:
    """Matrix P with P[i][j] = 1 iff images[i] == j+1 (1-based images)."""
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {images}")
    return tuple(
        tuple(1 if images[i] == j + 1 else 0 for j in range(n)) for i in range(n)
    )


def total(a: Matrix) -> int:
    """Sum of all entries."""
    return sum(x for row in a for x in row)


def inverse_over_integers(a: Matrix) -> Matrix | None:
    """Exact inverse if it has integer entries, else None.

    Gauss-Jordan over Fraction; an integer inverse exists iff det(a) = +-1.
    """
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    out = [[x for x in row[n:]] for row in work]
    if any(x.denominator != 1 for row in out for x in row):
        return None
    return tuple(tuple(int(x) for x in row) for row in out)
