"""Tests for class-function arithmetic and table queries"""

from fractions import Fraction

import pytest

from app.characters.model import CharacterTable, ClassFunction, CombineOp
from app.characters.service import (
    classify,
    combine,
    conjugation_classes,
    coordinates,
    degree_sum,
    expand,
    faithful_characters,
    inner_product,
    regular_character,
    value_extremes,
)
from app.exceptions import ValueExtremesError


def test_orthonormality_of_s5(s5: CharacterTable):
    for row in s5.chars:
        for other in s5.chars:
            expected = 1 if row is other else 0
            assert inner_product(s5, row.values, other.values) == expected


def test_inner_product_length_mismatch(s5: CharacterTable):
    with pytest.raises(ValueError):
        inner_product(s5, s5.char("4a"), ClassFunction.of([1, 1]))


@pytest.mark.parametrize(
    "values,check,hat,tilde",
    [
        ([4, 0, 1, -1, 2, 0, -1], 1, 2, 1),
        ([6, -2, 0, 1, 0, 0, 0], 2, 1, 2),
        ([120, 0, 0, 0, 0, 0, 0], 0, 0, None),
        ([2, -1], 1, -1, 1),
        ([2, -2, 0], 2, 0, 2),
    ],
)
def test_value_extremes(values: list[int], check: int, hat: int, tilde: int | None):
    extremes = value_extremes(ClassFunction.of(values))

    assert extremes.check == check
    assert extremes.hat == hat
    assert extremes.tilde == tilde


@pytest.mark.parametrize("values", [[3, 3, 3], [-1, 1], [0, 2, 1]])
def test_value_extremes_undefined(values: list[int]):
    with pytest.raises(ValueExtremesError):
        value_extremes(ClassFunction.of(values))


def test_combine(s5: CharacterTable):
    chi = s5.char("6a")

    assert combine(CombineOp.SHIFT, chi, 2).as_ints() == (8, 0, 2, 3, 2, 2, 2)
    assert combine(CombineOp.SCALE, chi, 2).as_ints() == (12, -4, 0, 2, 0, 0, 0)
    assert combine(CombineOp.MULTIPLY, chi, chi).as_ints() == (36, 4, 0, 1, 0, 0, 0)
    assert combine(CombineOp.ADD, chi, s5.unital()).as_ints() == (7, -1, 1, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        combine(CombineOp.ADD, chi, 2)
    with pytest.raises(ValueError):
        combine(CombineOp.SHIFT, chi, chi)


def test_coordinates_round_trip(s5: CharacterTable):
    """Expanding the coordinates of a class function gives it back"""
    phi = s5.perm("30")
    x = coordinates(s5, phi)

    assert expand(s5, x) == phi
    assert all(c.denominator == 1 and c >= 0 for c in x)


def test_regular_character_coordinates(a5: CharacterTable):
    regular = regular_character(a5)

    assert coordinates(a5, regular) == (1, 4, 5, 3)
    assert regular == a5.perm("60")


def test_classify(s5: CharacterTable):
    flags = classify(s5, s5.perm("5"))
    assert flags.is_character
    assert flags.is_nonnegative
    assert flags.is_faithful
    assert flags.abs_constituents == 2

    half = classify(s5, s5.char("4a") * Fraction(1, 2))
    assert not half.is_character
    assert not half.is_nonnegative

    sign = classify(s5, s5.char("1b"))
    assert sign.is_character
    assert not sign.is_faithful


@pytest.mark.parametrize(
    "name,expected",
    [
        ("c2", ["1b"]),
        ("c4", ["2"]),
        ("s3", ["2"]),
        ("a5", ["4", "5", "6"]),
        ("s5", ["4a", "4b", "5a", "5b", "6a"]),
        ("q8", ["2"]),
    ],
)
def test_faithful_characters(tables: dict[str, CharacterTable], name: str, expected: list[str]):
    assert faithful_characters(tables[name]) == expected


@pytest.mark.parametrize(
    "name,expected",
    [
        ("c3", ["1A"]),
        ("c4", ["1A", "2A"]),
        ("s5", ["1A", "2A", "2B"]),
    ],
)
def test_conjugation_classes(tables: dict[str, CharacterTable], name: str, expected: list[str]):
    assert conjugation_classes(tables[name]) == expected


@pytest.mark.parametrize("name", ["c2", "c3", "c4", "c5", "s3", "a4", "a5", "s5", "a6", "q8"])
def test_degree_sum_of_complete_tables(tables: dict[str, CharacterTable], name: str):
    assert degree_sum(tables[name]) == tables[name].group_order


@pytest.mark.parametrize(
    "label,k,expected",
    [
        ("6A", 2, "3A"),
        ("6A", 3, "2B"),
        ("6A", 5, "6A"),
        ("6A", 6, "1A"),
        ("4A", 2, "2A"),
        ("4A", 3, "4A"),
        ("4A", 4, "1A"),
        ("5A", 2, "5A"),
        ("1A", 7, "1A"),
    ],
)
def test_power_class(s5: CharacterTable, label: str, k: int, expected: str):
    index = s5.power_class(s5.class_index(label), k)
    assert s5.classes[index].label == expected


def test_permutation_characters_vanish_somewhere(tables: dict[str, CharacterTable]):
    """A transitive action of degree above 1 has a fixed-point-free element"""
    for table in tables.values():
        for row in table.perm_chars:
            if row.values.degree > 1:
                assert 0 in row.values.values, f"{table.group_name} {row.label}"
