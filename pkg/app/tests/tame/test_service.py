"""Tests for tame conductor exponents and the exponent bracket"""

from fractions import Fraction

import pytest

from app.characters.model import CharacterTable, ClassFunction
from app.characters.service import faithful_characters, regular_character
from app.exceptions import BracketError
from app.tame.model import ExponentMode
from app.tame.service import c_hat, c_tame, exponent_bracket, tame_rows, tame_table

S5_TAME = {
    "1b": (0, 0, 0, 0, 1, 1, 1),
    "4a": (0, 2, 2, 4, 1, 3, 3),
    "4b": (0, 2, 2, 4, 3, 3, 3),
    "5a": (0, 2, 4, 4, 2, 4, 4),
    "5b": (0, 2, 4, 4, 3, 3, 5),
    "6a": (0, 4, 4, 4, 3, 5, 5),
    "120": (0, 60, 80, 96, 60, 90, 100),
}


@pytest.mark.parametrize("label,expected", list(S5_TAME.items()))
def test_s5_tame_table(s5: CharacterTable, label: str, expected: tuple[int, ...]):
    rows = {row.label: row for row in tame_table(s5)}

    assert rows[label].c_tame == expected


def test_tame_table_order(s5: CharacterTable):
    labels = [row.label for row in tame_table(s5)]

    assert labels == ["1a", "1b", "4a", "4b", "5a", "5b", "6a", "2", "5", "6", "10", "12", "30", "60", "120"]


def test_c_hat_and_c_tame_by_label_and_index(s5: CharacterTable):
    chi = s5.char("6a")

    assert c_hat(s5, chi, "2A") == 8
    assert c_hat(s5, chi, 1) == 8
    assert c_tame(s5, chi, "6A") == 5
    assert c_tame(s5, chi, 6) == 5
    assert c_tame(s5, chi, "1A") == 0


def test_c_tame_is_nonnegative(tables: dict[str, CharacterTable]):
    for table in tables.values():
        for row in (*table.chars, *table.perm_chars):
            for entry in tame_rows(table, row.values):
                assert 0 <= entry.c_tame <= entry.c_hat


def test_c_tame_of_fractional_function(a5: CharacterTable):
    half = ClassFunction.of([Fraction(1, 2), 0, 0, 0])

    assert c_tame(a5, half, "5A") == Fraction(2, 5)


def test_class_index_out_of_range(s5: CharacterTable):
    with pytest.raises(KeyError):
        c_tame(s5, s5.char("4a"), 7)
    with pytest.raises(KeyError):
        c_hat(s5, s5.char("4a"), "9Z")


@pytest.mark.parametrize(
    "label,beta,argmin",
    [
        ("4a", Fraction(1, 2), ("2B",)),
        ("6a", Fraction(5, 6), ("5A",)),
    ],
)
def test_bracket_against_regular_character(s5: CharacterTable, label: str, beta: Fraction, argmin: tuple[str, ...]):
    bracket = exponent_bracket(s5, s5.char(label), regular_character(s5))

    assert bracket.alp == beta
    assert bracket.walp == beta
    assert bracket.equal
    assert bracket.argmin == argmin


def test_bracket_a5(a5: CharacterTable):
    bracket = exponent_bracket(a5, a5.char("4"), regular_character(a5))

    assert bracket.alpha == Fraction(1, 20)
    assert bracket.alp == Fraction(3, 4)
    assert bracket.argmin == ("3A",)


def test_tame_wild_widens_bracket(tables: dict[str, CharacterTable]):
    """On C4 the tame exponent strictly improves on the naive one"""
    c4 = tables["c4"]
    bracket = exponent_bracket(c4, c4.char("2"), regular_character(c4))

    assert bracket.walp == 1
    assert bracket.alp == Fraction(4, 3)
    assert not bracket.equal
    assert bracket.exponent(ExponentMode.ALPHA_HAT) == 1
    assert bracket.exponent(ExponentMode.ALPHA_TW) == Fraction(4, 3)


def test_bracket_skips_vanishing_denominators(s5: CharacterTable):
    """phi = 1 + sign is constant on even classes; only odd classes constrain"""
    bracket = exponent_bracket(s5, s5.char("4a"), s5.perm("2"))

    assert bracket.hat_argmin == ("2B",)
    assert bracket.alpha_hat == 1
    assert bracket.walp == Fraction(1, 2)


@pytest.mark.parametrize(
    "phi",
    [
        [1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, 0, 0, 0, 0],
        [1, 2, 1, 1, 1, 1, 1],
    ],
)
def test_bracket_errors(s5: CharacterTable, phi: list[int]):
    with pytest.raises(BracketError):
        exponent_bracket(s5, s5.char("4a"), ClassFunction.of(phi))


def test_bracket_negative_over_zero(s5: CharacterTable):
    chi = ClassFunction.of([1, 2, 1, 1, 1, 1, 1])

    with pytest.raises(BracketError):
        exponent_bracket(s5, chi, s5.perm("2"))


def test_prime_order_relation(tables: dict[str, CharacterTable]):
    """For tau of prime order p, (p - 1) c_hat = p c_tame"""
    for table in tables.values():
        for i, conj in enumerate(table.classes):
            if conj.element_order not in (2, 3, 5):
                continue
            for row in table.chars:
                assert (conj.element_order - 1) * c_hat(table, row.values, i) == conj.element_order * c_tame(table, row.values, i)


def test_walp_never_exceeds_alp(tables: dict[str, CharacterTable]):
    for table in tables.values():
        regular = regular_character(table)
        for label in faithful_characters(table):
            bracket = exponent_bracket(table, table.char(label), regular)
            assert bracket.walp <= bracket.alp, f"{table.group_name} {label}"


def test_c_tame_is_additive(tables: dict[str, CharacterTable]):
    for table in tables.values():
        functions = [row.values for row in (*table.chars, *table.perm_chars)]
        for i in range(table.class_count):
            for f in functions:
                for g in functions:
                    assert c_tame(table, f + g, i) == c_tame(table, f, i) + c_tame(table, g, i)
                assert c_tame(table, f * 3, i) == 3 * c_tame(table, f, i)


def test_c_tame_of_regular_character(tables: dict[str, CharacterTable]):
    """c_tau(regular) = |G| (1 - 1/order(tau))"""
    for table in tables.values():
        regular = regular_character(table)
        for i, conj in enumerate(table.classes):
            assert c_tame(table, regular, i) == table.group_order * (1 - Fraction(1, conj.element_order))
