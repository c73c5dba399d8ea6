"""Closed-form truncated Hilbert series of the six algebras.

Path algebra, preprojective algebra (non-Dynkin and Dynkin branches),
derived preprojective algebra, quiver Heisenberg algebra, derived quiver
Heisenberg algebra, plus the exact-sequence residual identity tying the
Dynkin series together. Matrix fractions are never formed: numerator
polynomials multiply inverted denominator polynomials, and all factors
involved commute (the tests assert this rather than assume it).
"""

from __future__ import annotations

from . import matrices
from .classify import classify, is_regular, nakayama_matrix, root_data
from .errors import MissingWeight, NotRegular, SizeMismatch
from .fields import WeightVector
from .matrices import Matrix
from .quiver import Quiver, arrow_matrix, double_and_adjacency
from .series import GeneratorSummand, MatrixPowerSeries, generator_series, tensor_algebra_series

ALGEBRA_KINDS = ("path", "preproj", "dpreproj", "qha", "dqha")


def default_truncation(q: Quiver) -> int | None:
    """max(2h, 12) on Dynkin input; None otherwise (caller must choose)."""
    if classify(q).is_dynkin:
        return max(2 * root_data(q).coxeter_number, 12)
    return None


def _resolve_order(q: Quiver, order: int | None) -> int:
    if order is not None:
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        return order
    default = default_truncation(q)
    if default is None:
        raise ValueError("truncation order is required for non-Dynkin quivers")
    return default


def _mesh_denominator(c: Matrix, order: int) -> MatrixPowerSeries:
    """1 - Ct + t^2."""
    return MatrixPowerSeries.from_polynomial(
        len(c), {0: 1, 1: matrices.neg(c), 2: 1}, order)


def _one_minus_t2(size: int, order: int) -> MatrixPowerSeries:
    return MatrixPowerSeries.from_polynomial(size, {0: 1, 2: -1}, order)


def path_algebra_series(q: Quiver, order: int) -> MatrixPowerSeries:
    """1/(1 - [V]t); the t^n coefficient counts paths of length n."""
    v = arrow_matrix(q)
    vt = MatrixPowerSeries.from_polynomial(q.vertex_count, {1: v}, order)
    return tensor_algebra_series(vt)


def preprojective_series(q: Quiver, order: int | None = None,
                         nakayama_override: Matrix | None = None) -> MatrixPowerSeries:
    """Series of the preprojective algebra.

    Non-Dynkin: 1/(1 - Ct + t^2). Dynkin: (1 + P t^h)/(1 - Ct + t^2) with
    h the Coxeter number and P the Nakayama permutation matrix.
    `nakayama_override` substitutes a different P (test hook).
    """
    cls = classify(q)
    order = _resolve_order(q, order)
    _, _, c = double_and_adjacency(q)
    inv = _mesh_denominator(c, order).invert()
    if not cls.is_dynkin:
        return inv
    h = root_data(q).coxeter_number
    p = nakayama_override if nakayama_override is not None else nakayama_matrix(q).matrix
    numerator = MatrixPowerSeries.from_polynomial(q.vertex_count, {0: 1, h: p}, order)
    return numerator * inv


def derived_preprojective_generators(q: Quiver) -> list[GeneratorSummand]:
    """V(-1) + V*(-1) + A[1](-2): arrows, reversed arrows, loops s_i."""
    v = arrow_matrix(q)
    eye = matrices.identity(q.vertex_count)
    return [
        GeneratorSummand(v, 0, 1),
        GeneratorSummand(matrices.transpose(v), 0, 1),
        GeneratorSummand(eye, -1, 2),
    ]


def derived_preprojective_series(q: Quiver, order: int) -> MatrixPowerSeries:
    """Tensor-algebra series over the three generator bimodules: 1/(1-Ct+t^2)."""
    gens = generator_series(derived_preprojective_generators(q), q.vertex_count, order)
    return tensor_algebra_series(gens)


def derived_qha_generators(q: Quiver) -> list[GeneratorSummand]:
    """Five summands giving Ct - Ct^3 + t^4.

    The loop generators t_i sit in cohomological degree -2 (their
    differential has degree -1), hence the + sign on t^4.
    """
    v = arrow_matrix(q)
    vt = matrices.transpose(v)
    eye = matrices.identity(q.vertex_count)
    return [
        GeneratorSummand(v, 0, 1),
        GeneratorSummand(vt, 0, 1),
        GeneratorSummand(vt, -1, 3),
        GeneratorSummand(v, -1, 3),
        GeneratorSummand(eye, -2, 4),
    ]


def derived_qha_series(q: Quiver, order: int) -> MatrixPowerSeries:
    """1/(1 - Ct + Ct^3 - t^4) = 1/((1 - Ct + t^2)(1 - t^2))."""
    gens = generator_series(derived_qha_generators(q), q.vertex_count, order)
    return tensor_algebra_series(gens)


def qha_series(q: Quiver, v: WeightVector | None = None,
               order: int | None = None) -> MatrixPowerSeries:
    """Series of the quiver Heisenberg algebra.

    Non-Dynkin: 1/((1 - Ct + t^2)(1 - t^2)) for every weight vector (the
    vector does not enter the formula). Dynkin: requires v regular in its
    field, and multiplies the numerator (1 - t^{2h}).
    """
    cls = classify(q)
    order = _resolve_order(q, order)
    if v is not None and len(v.entries) != q.vertex_count:
        raise ValueError("weight vector length does not match vertex count")
    _, _, c = double_and_adjacency(q)
    denominator = _mesh_denominator(c, order) * _one_minus_t2(q.vertex_count, order)
    inv = denominator.invert()
    if not cls.is_dynkin:
        return inv
    if v is None:
        raise MissingWeight("Dynkin quiver Heisenberg series needs a weight vector")
    rd = root_data(q)
    if not is_regular(q, v, rd):
        raise NotRegular("weight vector not regular: closed form does not apply")
    h = rd.coxeter_number
    numerator = MatrixPowerSeries.from_polynomial(
        q.vertex_count, {0: 1, 2 * h: -1}, order)
    return numerator * inv


def exact_sequence_residual(h_pi: MatrixPowerSeries, h_lambda: MatrixPowerSeries,
                            p: Matrix, h: int) -> MatrixPowerSeries:
    """h_pi - h_lambda + t^2 h_lambda - t^h P h_pi; zero certifies consistency."""
    if h_pi.size != h_lambda.size or len(p) != h_pi.size:
        raise SizeMismatch("series/matrix sizes differ")
    p_series = MatrixPowerSeries.from_polynomial(h_pi.size, {0: p}, h_pi.order)
    return h_pi - h_lambda + h_lambda.shift(2) - (p_series * h_pi).shift(h)
