"""Graded presentations of path-algebra quotients.

A presentation is the double quiver, an optional list of central
generators (the Heisenberg z, Adams degree 2), and a list of relations.
Relations are formal sums of terms coefficient * central-monomial * path,
with all terms of one relation sharing a source vertex, a target vertex,
and an Adams degree. Paths compose left to right: in `alpha beta`, alpha
is traversed first, so the mesh relation at vertex i is a sum of length-2
loops based at i.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InhomogeneousRelation, MissingWeight, NotSincere
from .fields import QQ, Field, WeightVector
from .quiver import Arrow, Quiver, double_and_adjacency


@dataclass(frozen=True)
class NcTerm:
    coeff: object  # element of the presentation field
    source: int  # 1-based start vertex (meaningful even for the empty path)
    arrows: tuple[int, ...]  # indices into the double arrow list
    central: tuple[int, ...]  # exponent per central generator


@dataclass(frozen=True)
class NcElement:
    """Canonicalized formal sum: terms sorted, like monomials merged."""

    terms: tuple[NcTerm, ...]
    source: int
    target: int
    adams_degree: int


class PresentationKind(Enum):
    PREPROJECTIVE = "preproj"
    QHA_Z = "qha-z"
    QHA_ETA = "qha-eta"


def _path_target(double_arrows: tuple[Arrow, ...], source: int,
                 arrows: tuple[int, ...]) -> int:
    at = source
    for k in arrows:
        a = double_arrows[k]
        if a.tail != at:
            raise ValueError(f"path not composable at arrow {a.name!r}")
        at = a.head
    return at


def make_element(field: Field, double_arrows: tuple[Arrow, ...],
                 central_degrees: tuple[int, ...],
                 terms) -> NcElement | None:
    """Merge and validate terms; returns None for the zero element.

    `terms` is an iterable of (coeff, source, arrows, central) tuples.
    """
    merged: dict[tuple, object] = {}
    block_degree = None
    for coeff, source, arrows, central in terms:
        arrows = tuple(arrows)
        central = tuple(central)
        if len(central) != len(central_degrees):
            raise ValueError("central exponent length mismatch")
        target = _path_target(double_arrows, source, arrows)
        degree = len(arrows) + sum(e * d for e, d in zip(central, central_degrees))
        if block_degree is None:
            block_degree = (source, target, degree)
        elif block_degree[:2] != (source, target):
            raise ValueError("relation terms must share source and target")
        elif block_degree[2] != degree:
            raise InhomogeneousRelation(
                f"terms of Adams degrees {block_degree[2]} and {degree} mixed")
        key = (source, arrows, central)
        merged[key] = field.coerce(merged.get(key, field.zero()) + field.coerce(coeff))
    cleaned = sorted(
        (k for k, c in merged.items() if c != 0), key=lambda k: (k[2], k[1]))
    if not cleaned:
        return None
    out = tuple(NcTerm(merged[k], k[0], k[1], k[2]) for k in cleaned)
    return NcElement(out, *block_degree)


@dataclass(frozen=True)
class GradedPresentation:
    quiver: Quiver
    double_arrows: tuple[Arrow, ...]
    central: tuple[tuple[str, int], ...]  # (name, Adams degree)
    relations: tuple[NcElement, ...]
    field: Field

    @property
    def central_degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.central)


def mesh_terms(q: Quiver, vertex: int, scale=1):
    """Terms of the mesh relation at `vertex` (as plain tuples).

    Outgoing arrows contribute +a a*, incoming ones -a* a; the star of the
    k-th arrow sits at index k + len(arrows) in the double arrow list.
    """
    m = len(q.arrows)
    terms = []
    for k, a in enumerate(q.arrows):
        if a.tail == vertex:
            terms.append((scale, vertex, (k, k + m), ()))
        if a.head == vertex:
            terms.append((-scale, vertex, (k + m, k), ()))
    return terms


def build_presentation(kind: PresentationKind, q: Quiver,
                       field: Field | None = None,
                       v: WeightVector | None = None) -> GradedPresentation:
    """Mesh relations, z-presentation, or eta-presentation of the QHA.

    The z-presentation imposes rho_i - v_i z e_i with z central of Adams
    degree 2; the eta-presentation (sincere v only) imposes the degree-3
    commutators a (sum v_i^-1 rho_i) - (sum v_i^-1 rho_i) a over all
    double arrows a.
    """
    kind = PresentationKind(kind)
    double_arrows, _, _ = double_and_adjacency(q)
    if kind is PresentationKind.PREPROJECTIVE:
        field = field if field is not None else QQ
        central: tuple[tuple[str, int], ...] = ()
        raw_relations = [mesh_terms(q, i) for i in q.vertices]
    else:
        if v is None:
            raise MissingWeight(f"{kind.value} presentation needs a weight vector")
        if len(v.entries) != q.vertex_count:
            raise ValueError("weight vector length does not match vertex count")
        if field is not None and field != v.field:
            raise ValueError("field argument disagrees with the weight vector's field")
        field = v.field
        if kind is PresentationKind.QHA_Z:
            central = (("z", 2),)
            raw_relations = []
            for i in q.vertices:
                terms = [(c, s, a, (0,)) for c, s, a, _ in mesh_terms(q, i)]
                terms.append((-v.entries[i - 1], i, (), (1,)))
                raw_relations.append(terms)
        else:  # QHA_ETA
            if not v.is_sincere:
                raise NotSincere("eta presentation needs a sincere weight vector")
            central = ()
            inv = [field.inv(x) for x in v.entries]
            raw_relations = []
            for k, a in enumerate(double_arrows):
                terms = []
                for c, _, arrows, _ in mesh_terms(q, a.head, scale=inv[a.head - 1]):
                    terms.append((c, a.tail, (k,) + arrows, ()))
                for c, _, arrows, _ in mesh_terms(q, a.tail, scale=-inv[a.tail - 1]):
                    terms.append((c, a.tail, arrows + (k,), ()))
                raw_relations.append(terms)
    central_degrees = tuple(d for _, d in central)
    relations = []
    for raw in raw_relations:
        element = make_element(field, double_arrows, central_degrees, raw)
        if element is not None:
            relations.append(element)
    return GradedPresentation(q, double_arrows, central, tuple(relations), field)
