from fractions import Fraction

import pytest

from qhseries import QQ, PrimeField, RationalField, WeightVector, parse_field


def test_parse_field_labels():
    assert isinstance(parse_field("q"), RationalField)
    f7 = parse_field("fp:7")
    assert isinstance(f7, PrimeField) and f7.p == 7
    assert parse_field("Q") == QQ


@pytest.mark.parametrize("spec", ["fp:4", "fp:1", "fp:x", "r", "", "fp:"])
def test_parse_field_rejects_bad_specs(spec):
    with pytest.raises(ValueError):
        parse_field(spec)


def test_prime_field_arithmetic():
    f5 = PrimeField(5)
    assert f5.coerce(-3) == 2
    assert f5.coerce(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    assert f5.inv(2) == 3
    assert f5.label == "fp:5"


def test_weight_vector_parsing_over_q():
    v = WeightVector.parse("1/2, -3", QQ, 2)
    assert v.entries == (Fraction(1, 2), Fraction(-3))
    assert v.is_sincere


def test_weight_vector_parsing_over_fp():
    v = WeightVector.parse("4,2", PrimeField(2), 2)
    assert v.entries == (0, 0)
    assert not v.is_sincere


def test_weight_vector_length_check():
    with pytest.raises(ValueError):
        WeightVector.parse("1,2,3", QQ, 2)
