"""Tests for the perm-basis solve, conductors and initial segments"""

import math
from fractions import Fraction
from pathlib import Path

import pytest

from app.characters.model import CharacterTable
from app.characters.parser import load_table
from app.config import get_settings
from app.exceptions import ConductorError, SpanError
from app.tame.model import ExponentMode
from app.tame.service import c_tame
from app.transfer.model import FactoredInteger, FieldRecord, PermBasisSolution, SegmentEntry
from app.transfer.parser import load_field_list
from app.transfer.service import (
    compare_root_conductors,
    conductor_from_resolvents,
    extract_segment,
    solve_in_perm_basis,
    transfer_exponent,
)

FIELD_DIR = Path(__file__).parents[1] / "data" / "fields"
TABLE_DIR = Path(__file__).parents[1] / "data" / "tables"
S5_BASIS = ("1", "2", "5", "6", "10", "12", "30")

S5_INVERSIONS = {
    "1b": {"1": -1, "2": 1},
    "4a": {"1": -1, "5": 1},
    "4b": {"1": 1, "2": -1, "5": -1, "10": 1},
    "5a": {"1": 1, "2": -1, "6": -1, "12": 1},
    "5b": {"1": -1, "6": 1},
    "6a": {"2": 2, "5": -2, "6": 1, "12": -2, "30": 1},
}


@pytest.fixture(scope="module")
def sample():
    return load_field_list(get_settings().DATA_DIR / "s5_tame_sample.gfl")


@pytest.mark.parametrize("label,expected", list(S5_INVERSIONS.items()))
def test_solve_in_perm_basis(s5: CharacterTable, label: str, expected: dict[str, int]):
    sol = solve_in_perm_basis(s5, label, S5_BASIS)

    assert sol.nonzero() == expected
    assert sol.scale == 1
    assert sol.degree == s5.char(label).degree


def test_dependent_basis_fixes_free_coefficients(a5: CharacterTable):
    sol = solve_in_perm_basis(a5, "4", ("1", "5", "6", "10", "12"))

    assert sol.nonzero() == {"1": -1, "5": 1}
    assert sol.coefficients["12"] == 0


def test_solve_outside_span(s5: CharacterTable):
    with pytest.raises(SpanError):
        solve_in_perm_basis(s5, "4a", ("1", "2"))


def test_solve_unknown_label(s5: CharacterTable):
    with pytest.raises(KeyError):
        solve_in_perm_basis(s5, "4a", ("1", "7"))


@pytest.mark.parametrize("label", list(S5_INVERSIONS))
def test_tame_conductors_match_tame_exponents(s5: CharacterTable, sample, label: str):
    """With tame inertia generated by a 6A element the conductor exponent is c_6A(chi)"""
    sol = solve_in_perm_basis(s5, label, S5_BASIS)
    expected = int(c_tame(s5, s5.char(label), "6A"))

    for rec, p in zip(sample.records, (2, 3, 5), strict=True):
        assert conductor_from_resolvents(sol, rec) == FactoredInteger(factors={p: expected})


def test_conductor_missing_resolvent(s5: CharacterTable):
    sol = solve_in_perm_basis(s5, "4a", S5_BASIS)
    rec = FieldRecord(rank=1, galois_rd=2.0, resolvent_discs={"2": FactoredInteger.of(2)})

    with pytest.raises(ConductorError, match="no resolvent"):
        conductor_from_resolvents(sol, rec)


@pytest.mark.parametrize("coefficient", [Fraction(1, 2), Fraction(-1)])
def test_conductor_invalid_exponent(coefficient: Fraction):
    sol = PermBasisSolution(char_label="x", degree=1, coefficients={"2": coefficient})
    rec = FieldRecord(rank=1, galois_rd=2.0, resolvent_discs={"2": FactoredInteger.of(3)})

    with pytest.raises(ConductorError, match="not a nonnegative integer"):
        conductor_from_resolvents(sol, rec)


@pytest.mark.parametrize(
    "label,beta",
    [
        ("4a", Fraction(1, 2)),
        ("4b", Fraction(3, 4)),
        ("5a", Fraction(4, 5)),
        ("5b", Fraction(4, 5)),
        ("6a", Fraction(5, 6)),
    ],
)
def test_transfer_exponent_s5(s5: CharacterTable, label: str, beta: Fraction):
    exponent = transfer_exponent(s5, label)

    assert exponent.beta == beta
    assert exponent.mode == ExponentMode.ALPHA_TW


def test_transfer_exponent_tame_wild_raises_beta(tables: dict[str, CharacterTable]):
    exponent = transfer_exponent(tables["c4"], "2")

    assert exponent.beta == Fraction(4, 3)
    assert exponent.walp == 1
    assert not exponent.equal


def test_transfer_exponent_of_q8_spin_character(tables: dict[str, CharacterTable]):
    exponent = transfer_exponent(tables["q8"], "2")

    assert exponent.mode == ExponentMode.ALPHA_TW
    assert exponent.beta == Fraction(4, 3)
    assert exponent.walp == 1
    assert not exponent.equal


def test_transfer_exponent_without_tame_wild():
    exponent = transfer_exponent(load_table(TABLE_DIR / "c4_without_tw.gct"), "2")

    assert exponent.mode == ExponentMode.ALPHA_HAT
    assert exponent.beta == exponent.walp == 1
    assert exponent.alp == Fraction(4, 3)


def _entry(rank: int, degree: int, factors: dict[int, int]) -> SegmentEntry:
    conductor = FactoredInteger(factors=factors)
    return SegmentEntry(rank=rank, degree=degree, conductor=conductor, root_conductor=math.exp(conductor.log() / degree))


def test_compare_root_conductors():
    assert compare_root_conductors(_entry(1, 6, {2: 5}), _entry(2, 6, {3: 5})) == -1
    assert compare_root_conductors(_entry(2, 4, {2: 2}), _entry(1, 2, {2: 1})) == 1
    assert compare_root_conductors(_entry(1, 4, {2: 2}), _entry(2, 2, {2: 1})) == -1
    assert compare_root_conductors(_entry(3, 4, {5: 4}), _entry(1, 4, {2: 7})) == 1


def test_extract_segment(s5: CharacterTable, sample):
    sol = solve_in_perm_basis(s5, "6a", S5_BASIS)
    result = extract_segment(s5, sol, sample.records, 85.0)

    assert result.cutoff == pytest.approx(40.53676663, abs=1e-6)
    assert [entry.rank for entry in result.entries] == [1, 2, 3]
    assert [str(entry.conductor) for entry in result.entries] == ["2^5", "3^5", "5^5"]
    assert result.delta1 == pytest.approx(2 ** (5 / 6))
    assert result.delta1_certified
    assert result.certified


def test_extract_segment_small_bound(s5: CharacterTable, sample):
    sol = solve_in_perm_basis(s5, "6a", S5_BASIS)
    result = extract_segment(s5, sol, sample.records, 2.2)

    assert [entry.rank for entry in result.entries] == [1]
    assert result.delta1_certified


def test_extract_segment_orders_by_root_conductor(s5: CharacterTable, sample):
    sol = solve_in_perm_basis(s5, "4a", S5_BASIS)
    result = extract_segment(s5, sol, tuple(reversed(sample.records)), 85.0)

    assert [entry.rank for entry in result.entries] == [1, 2, 3]
    assert result.delta1 == pytest.approx(2 ** (3 / 4))


@pytest.mark.parametrize("label", ["4a", "6a"])
def test_extract_segment_is_monotone_in_bound(s5: CharacterTable, sample, label: str):
    sol = solve_in_perm_basis(s5, label, S5_BASIS)
    segments = [extract_segment(s5, sol, sample.records, bound) for bound in (1.5, 2.2, 3.0, 5.0, 85.0)]
    ranks = [[entry.rank for entry in segment.entries] for segment in segments]

    for smaller, larger in zip(ranks, ranks[1:]):
        assert larger[: len(smaller)] == smaller
    assert [segment.cutoff for segment in segments] == sorted(segment.cutoff for segment in segments)
    assert ranks[0] == []
    assert ranks[-1] == [1, 2, 3]


def test_excluded_record_withdraws_certificate(s5: CharacterTable):
    fields = load_field_list(FIELD_DIR / "s5_with_bad_record.gfl")
    sol = solve_in_perm_basis(s5, "6a", S5_BASIS)
    result = extract_segment(s5, sol, fields.records, 85.0)

    assert result.excluded == [3]
    assert not result.certified
    assert not result.delta1_certified
    assert [entry.rank for entry in result.entries] == [1, 2]


def test_extract_segment_empty_list(s5: CharacterTable):
    sol = solve_in_perm_basis(s5, "6a", S5_BASIS)
    result = extract_segment(s5, sol, (), 85.0)

    assert result.entries == []
    assert result.delta1 is None
    assert not result.delta1_certified
    assert result.certified


def test_extract_segment_rejects_bad_bound(s5: CharacterTable, sample):
    sol = solve_in_perm_basis(s5, "6a", S5_BASIS)

    with pytest.raises(ValueError):
        extract_segment(s5, sol, sample.records, 0.0)
