from fractions import Fraction

import pytest

from helpers import kronecker
from qhseries import (
    QQ,
    InhomogeneousRelation,
    MissingWeight,
    NotSincere,
    PresentationKind,
    PrimeField,
    WeightVector,
    build_presentation,
    double_and_adjacency,
    dynkin_quiver,
)
from qhseries.presentation import make_element, mesh_terms


def terms_as_tuples(element):
    return [(t.coeff, t.source, t.arrows, t.central) for t in element.terms]


def test_mesh_relations_a2():
    # rho_1 = a a*, rho_2 = -a* a (left-to-right composition, star = index+1)
    pres = build_presentation(PresentationKind.PREPROJECTIVE, dynkin_quiver("A2"))
    assert len(pres.relations) == 2
    r1, r2 = pres.relations
    assert terms_as_tuples(r1) == [(Fraction(1), 1, (0, 1), ())]
    assert (r1.source, r1.target, r1.adams_degree) == (1, 1, 2)
    assert terms_as_tuples(r2) == [(Fraction(-1), 2, (1, 0), ())]
    assert (r2.source, r2.target, r2.adams_degree) == (2, 2, 2)


def test_mesh_relations_are_supported_at_their_vertex():
    # e_i rho_i e_i = rho_i: every term of the mesh relation at i loops at i
    for q in (dynkin_quiver("D4"), kronecker()):
        pres = build_presentation(PresentationKind.PREPROJECTIVE, q)
        for rel in pres.relations:
            assert rel.source == rel.target
            assert rel.adams_degree == 2


def test_preprojective_a1_has_no_relations():
    pres = build_presentation(PresentationKind.PREPROJECTIVE, dynkin_quiver("A1"))
    assert pres.relations == ()


def test_qha_z_relations_a2():
    v = WeightVector.from_values((1, 1), QQ)
    pres = build_presentation(PresentationKind.QHA_Z, dynkin_quiver("A2"), v=v)
    assert pres.central == (("z", 2),)
    r1, r2 = pres.relations
    assert terms_as_tuples(r1) == [
        (Fraction(1), 1, (0, 1), (0,)),
        (Fraction(-1), 1, (), (1,)),
    ]
    assert terms_as_tuples(r2) == [
        (Fraction(-1), 2, (1, 0), (0,)),
        (Fraction(-1), 2, (), (1,)),
    ]


def test_qha_z_requires_weight():
    with pytest.raises(MissingWeight):
        build_presentation(PresentationKind.QHA_Z, dynkin_quiver("A2"))


def test_qha_eta_requires_sincere_weight():
    v = WeightVector.from_values((1, 0), QQ)
    with pytest.raises(NotSincere):
        build_presentation(PresentationKind.QHA_ETA, dynkin_quiver("A2"), v=v)


def test_qha_eta_relations_a2_merge_overlapping_terms():
    # eta_a = a rho_2 - rho_1 a = -2 a a* a when v = (1, 1)
    v = WeightVector.from_values((1, 1), QQ)
    pres = build_presentation(PresentationKind.QHA_ETA, dynkin_quiver("A2"), v=v)
    assert len(pres.relations) == 2
    ra, rstar = pres.relations
    assert terms_as_tuples(ra) == [(Fraction(-2), 1, (0, 1, 0), ())]
    assert ra.adams_degree == 3
    assert terms_as_tuples(rstar) == [(Fraction(2), 2, (1, 0, 1), ())]


def test_qha_eta_relations_vanish_mod_two():
    # over F_2 with v = (1,1) the A2 commutator relations collapse to zero
    v = WeightVector.from_values((1, 1), PrimeField(2))
    pres = build_presentation(PresentationKind.QHA_ETA, dynkin_quiver("A2"), v=v)
    assert pres.relations == ()


def test_make_element_rejects_inhomogeneous_terms():
    q = dynkin_quiver("A2")
    double_arrows, _, _ = double_and_adjacency(q)
    with pytest.raises(InhomogeneousRelation):
        make_element(QQ, double_arrows, (), [
            (1, 1, (0, 1), ()),
            (1, 1, (0, 1, 0, 1), ()),
        ])


def test_make_element_rejects_noncomposable_paths():
    q = dynkin_quiver("A2")
    double_arrows, _, _ = double_and_adjacency(q)
    with pytest.raises(ValueError):
        make_element(QQ, double_arrows, (), [(1, 1, (1,), ())])  # a* starts at 2


def test_make_element_rejects_mixed_blocks():
    q = dynkin_quiver("A2")
    double_arrows, _, _ = double_and_adjacency(q)
    with pytest.raises(ValueError):
        make_element(QQ, double_arrows, (), [
            (1, 1, (0, 1), ()),
            (1, 2, (1, 0), ()),
        ])


def test_make_element_returns_none_for_zero():
    q = dynkin_quiver("A2")
    double_arrows, _, _ = double_and_adjacency(q)
    assert make_element(QQ, double_arrows, (), [
        (1, 1, (0, 1), ()),
        (-1, 1, (0, 1), ()),
    ]) is None


def test_mesh_terms_total_splits_into_per_vertex():
    # grouping the terms of rho = sum rho_i by (source, target) recovers
    # exactly the per-vertex relations
    q = kronecker()
    total = []
    for i in q.vertices:
        total.extend(mesh_terms(q, i))
    blocks = {}
    for coeff, source, arrows, central in total:
        blocks.setdefault(source, []).append((coeff, source, arrows, central))
    for i in q.vertices:
        assert blocks[i] == mesh_terms(q, i)
