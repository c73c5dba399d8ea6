"""Brute-force graded dimensions of presented quotients, degree by degree.

For each Adams degree n the free algebra k[z...]Qbar_n has a monomial
basis z^e * path, split into blocks by (source, target). The degree-n
slice of the relation ideal is spanned by all products m * r * m' of a
relation with flanking monomials of complementary degree; the quotient
dimension of a block is the monomial count minus the exact rank of those
products. Rows are enumerated without deduplication (rank absorbs the
redundancy) and ranks are computed by the shared sparse elimination,
fraction-free over Q and modular over F_p.

Degrees and blocks are independent work units evaluated in a fixed order,
so outputs are deterministic; all inputs are immutable.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, lcm

from . import matrices
from .errors import DegreeOverflow, NotAPermutationResidue
from .matrices import Matrix
from .presentation import GradedPresentation
from .rank import sparse_rank
from .series import MatrixPowerSeries

DEFAULT_MONOMIAL_CAP = 200_000
_CAP_ENV = "QH_MONOMIAL_CAP"


def resolve_monomial_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(_CAP_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"{_CAP_ENV} must be positive")
        return value
    return DEFAULT_MONOMIAL_CAP


class _PathTables:
    """Composable paths of the double quiver, by length and block."""

    def __init__(self, double_arrows, r: int, max_len: int):
        self.double_arrows = double_arrows
        out = [[] for _ in range(r + 1)]
        for k, a in enumerate(double_arrows):
            out[a.tail].append(k)
        self.by_block = [{(v, v): [()] for v in range(1, r + 1)}]
        for _ in range(max_len):
            prev = self.by_block[-1]
            nxt: dict[tuple[int, int], list[tuple[int, ...]]] = {}
            for (s, t) in sorted(prev):
                for path in prev[(s, t)]:
                    for k in out[t]:
                        nxt.setdefault((s, double_arrows[k].head), []).append(path + (k,))
            self.by_block.append(nxt)

    def block(self, length: int, s: int, t: int) -> list[tuple[int, ...]]:
        return self.by_block[length].get((s, t), [])

    def ending_at(self, length: int, t: int):
        """(source, path) pairs for all length-`length` paths into t."""
        for (s, t2) in sorted(self.by_block[length]):
            if t2 == t:
                for path in self.by_block[length][(s, t2)]:
                    yield s, path

    def starting_at(self, length: int, s: int):
        """(target, path) pairs for all length-`length` paths out of s."""
        for (s2, t) in sorted(self.by_block[length]):
            if s2 == s:
                for path in self.by_block[length][(s2, t)]:
                    yield t, path


def _central_exponents(degrees: tuple[int, ...], weight: int):
    """All exponent tuples e with sum(e_i * degrees_i) == weight."""
    if not degrees:
        if weight == 0:
            yield ()
        return
    head, rest = degrees[0], degrees[1:]
    for e in range(weight // head + 1):
        for tail in _central_exponents(rest, weight - e * head):
            yield (e,) + tail


def _integer_relations(pres: GradedPresentation):
    """Relations as primitive integer coefficient vectors.

    Scaling a relation by a nonzero field scalar does not change the ideal,
    so over Q the denominators are cleared; over F_p coefficients are
    already ints in [0, p).
    """
    out = []
    for rel in pres.relations:
        coeffs = [t.coeff for t in rel.terms]
        if isinstance(coeffs[0], Fraction):
            scale = lcm(*(c.denominator for c in coeffs)) if len(coeffs) > 1 else coeffs[0].denominator
            ints = [int(c * scale) for c in coeffs]
            content = 0
            for c in ints:
                content = gcd(content, c)
            ints = [c // content for c in ints]
        else:
            ints = [int(c) for c in coeffs]
        out.append((rel, ints))
    return out


def _degree_columns(pres: GradedPresentation, tables: _PathTables, n: int):
    """Per-block column index for degree n: key (central exps, path)."""
    cdegs = pres.central_degrees
    columns: dict[tuple[int, int], dict] = {}
    for plen in range(n + 1):
        weight = n - plen
        exps_list = list(_central_exponents(cdegs, weight))
        if not exps_list:
            continue
        for (s, t) in sorted(tables.by_block[plen]):
            index = columns.setdefault((s, t), {})
            for exps in exps_list:
                for path in tables.by_block[plen][(s, t)]:
                    index[(exps, path)] = len(index)
    return columns


def _degree_rows(pres, tables, int_relations, columns, n: int):
    """Relation-slice rows m * r * m' for degree n, grouped by block."""
    cdegs = pres.central_degrees
    rows: dict[tuple[int, int], list] = {}
    for rel, ints in int_relations:
        budget = n - rel.adams_degree
        if budget < 0:
            continue
        for weight in range(budget + 1):
            for extra in _central_exponents(cdegs, weight):
                for a in range(budget - weight + 1):
                    b = budget - weight - a
                    for psrc, p in tables.ending_at(a, rel.source):
                        for qtgt, q in tables.starting_at(b, rel.target):
                            index = columns[(psrc, qtgt)]
                            entries = []
                            for term, c in zip(rel.terms, ints):
                                exps = tuple(x + y for x, y in zip(term.central, extra))
                                col = index[(exps, p + term.arrows + q)]
                                entries.append((col, c))
                            entries.sort()
                            rows.setdefault((psrc, qtgt), []).append(
                                (tuple(c for c, _ in entries),
                                 tuple(v for _, v in entries)))
    return rows


def graded_quotient_dims(pres: GradedPresentation, max_degree: int,
                         monomial_cap: int | None = None,
                         backend: str | None = None) -> list[Matrix]:
    """Dimension matrices of the quotient in Adams degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max degree must be nonnegative")
    cap = resolve_monomial_cap(monomial_cap)
    r = pres.quiver.vertex_count
    tables = _PathTables(pres.double_arrows, r, max_degree)
    int_relations = _integer_relations(pres)
    modulus = pres.field.characteristic
    out = []
    for n in range(max_degree + 1):
        columns = _degree_columns(pres, tables, n)
        count = sum(len(ix) for ix in columns.values())
        if count > cap:
            raise DegreeOverflow(
                f"degree {n}: {count} monomials exceed the cap of {cap}")
        rows = _degree_rows(pres, tables, int_relations, columns, n)
        dims = [[0] * r for _ in range(r)]
        for (s, t), index in sorted(columns.items()):
            block_rows = rows.get((s, t), [])
            rank = sparse_rank(block_rows, len(index), modulus, backend=backend)
            dims[s - 1][t - 1] = len(index) - rank
        out.append(matrices.from_rows(dims))
    return out


def oracle_series(pres: GradedPresentation, max_degree: int,
                  monomial_cap: int | None = None,
                  backend: str | None = None) -> MatrixPowerSeries:
    coeffs = graded_quotient_dims(pres, max_degree, monomial_cap, backend)
    return MatrixPowerSeries(pres.quiver.vertex_count, tuple(coeffs))


def infer_nakayama(oracle_coeffs, c: Matrix, h: int) -> Matrix:
    """Recover P from oracle data via h_Pi * (1 - Ct + t^2) = 1 + P t^h.

    Checks the product is exactly the identity plus a permutation matrix
    at degree h (through the available truncation) and returns it.
    """
    coeffs = tuple(oracle_coeffs)
    if len(coeffs) - 1 < h:
        raise ValueError(f"need oracle data through degree {h}, have {len(coeffs) - 1}")
    size = len(c)
    series = MatrixPowerSeries(size, coeffs)
    poly = MatrixPowerSeries.from_polynomial(
        size, {0: 1, 1: matrices.neg(c), 2: 1}, series.order)
    product = series * poly
    if not matrices.is_identity(product.coeff(0)):
        raise NotAPermutationResidue("constant term of the residue is not 1")
    for n in range(1, product.order + 1):
        coeff = product.coeff(n)
        if n == h:
            if not matrices.is_permutation(coeff):
                raise NotAPermutationResidue(
                    f"degree-{h} residue is not a permutation matrix: {coeff}")
        elif not matrices.is_zero(coeff):
            raise NotAPermutationResidue(f"unexpected nonzero residue at degree {n}")
    return product.coeff(h)
