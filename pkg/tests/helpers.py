"""Shared test fixtures: the quiver grid, fields, independent rank oracle."""

from fractions import Fraction
from itertools import product

from qhseries import (
    QQ,
    PrimeField,
    Quiver,
    WeightVector,
    dynkin_quiver,
    is_regular,
    parse_quiver,
    root_data,
)


def kronecker() -> Quiver:
    return parse_quiver("vertices 2\narrow a 1 2\narrow b 1 2\n")


def triangle() -> Quiver:
    """Acyclic orientation of the extended Dynkin triangle (A~2)."""
    return parse_quiver("vertices 3\narrow a 1 2\narrow b 2 3\narrow c 1 3\n")


def kron3() -> Quiver:
    return parse_quiver("vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n")


FIELDS = (QQ, PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7))

# The acceptance grid: name -> (builder, is A-type)
GRID = {
    "A1": (lambda: dynkin_quiver("A1"), True),
    "A2": (lambda: dynkin_quiver("A2"), True),
    "A3": (lambda: dynkin_quiver("A3"), True),
    "D4": (lambda: dynkin_quiver("D4"), False),
    "kronecker": (kronecker, False),
    "triangle": (triangle, False),
    "kron3": (kron3, False),
}
DYNKIN_GRID = ("A1", "A2", "A3", "D4")
NON_DYNKIN_GRID = ("kronecker", "triangle", "kron3")

ALL_CANONICAL_TYPES = (
    ["A" + str(n) for n in range(1, 9)]
    + ["D" + str(n) for n in range(4, 9)]
    + ["E6", "E7", "E8"]
)


def find_regular(q: Quiver, field) -> WeightVector | None:
    """Some regular weight vector over `field`, or None if none exists.

    Over Q any strictly positive vector works (positive roots have
    nonnegative entries). Over F_p the whole space is searched, so a None
    answer is a proof of nonexistence.
    """
    rd = root_data(q)
    if isinstance(field, PrimeField):
        for values in product(range(1, field.p), repeat=q.vertex_count):
            v = WeightVector.from_values(values, field)
            if is_regular(q, v, rd):
                return v
        return None
    return WeightVector.from_values((1,) * q.vertex_count, field)


def dense_rank(rows, ncols, modulus=0) -> int:
    """Plain dense Gaussian elimination, independent of qhseries.rank.

    Over Q uses Fraction arithmetic; over F_p modular arithmetic.
    """
    if modulus:
        mat = [[v % modulus for v in row] for row in rows]
    else:
        mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        if modulus:
            inv = pow(mat[rank][col], -1, modulus)
            mat[rank] = [(x * inv) % modulus for x in mat[rank]]
        else:
            lead = mat[rank][col]
            mat[rank] = [x / lead for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                if modulus:
                    mat[i] = [(x - f * y) % modulus for x, y in zip(mat[i], mat[rank])]
                else:
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def densify(rows, ncols):
    """Sparse (cols, vals) rows to dense lists."""
    out = []
    for cols, vals in rows:
        dense = [0] * ncols
        for c, v in zip(cols, vals):
            dense[c] = v
        out.append(dense)
    return out
