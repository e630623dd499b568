"""Tests for exact vertex enumeration"""

from fractions import Fraction
from pathlib import Path

import pytest

from app.auxiliary.model import MethodTag
from app.auxiliary.vertices import constraint_system, enumerate_vertices, solve_rational, vertex_candidates
from app.characters.model import CharacterTable
from app.characters.parser import load_table
from app.exceptions import AuxConstructionError, VertexCapExceeded

TABLE_DIR = Path(__file__).parents[1] / "data" / "tables"


def test_solve_rational():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]

    assert solve_rational(m, [Fraction(3), Fraction(5)]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_rational([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], [Fraction(2), Fraction(3)]) == [3, 2]
    assert solve_rational([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(1)]) is None


def test_constraint_system_shape(s5: CharacterTable):
    rows, offsets = constraint_system(s5)

    assert len(rows) == len(offsets) == 12
    assert all(len(row) == 6 for row in rows)
    assert offsets[:6] == [0] * 6
    assert offsets[6:] == [1] * 6


@pytest.mark.parametrize(
    "name,count",
    [
        ("c2", 2),
        ("s3", 4),
        ("a4", 4),
        ("a5", 8),
        ("s5", 40),
        ("a6", 28),
    ],
)
def test_vertex_counts(tables: dict[str, CharacterTable], name: str, count: int):
    assert len(enumerate_vertices(tables[name])) == count


def test_a4_vertices(tables: dict[str, CharacterTable]):
    vertices = enumerate_vertices(tables["a4"])

    assert {v.x for v in vertices} == {(0, 0), (1, 0), (0, 1), (1, 3)}


def test_vertices_are_feasible(s5: CharacterTable):
    for vertex in enumerate_vertices(s5):
        assert vertex.y[0] >= 1
        assert all(v >= 0 for v in vertex.y)
        assert all(x >= 0 for x in vertex.x)
        assert len(vertex.tight_set) >= len(vertex.x)


def test_regular_character_is_a_vertex(a5: CharacterTable):
    assert (4, 5, 3) in {vertex.x for vertex in enumerate_vertices(a5)}


def test_vertex_candidates_are_integral(a5: CharacterTable):
    candidates = vertex_candidates(a5, enumerate_vertices(a5))

    assert [c.source for c in candidates] == [f"v{i}" for i in range(1, 9)]
    assert all(c.method_tag == MethodTag.VERTEX and c.phi.is_integral() for c in candidates)
    assert any(c.phi.as_ints() == (60, 0, 0, 0) for c in candidates)


def test_vertex_cap(s5: CharacterTable):
    with pytest.raises(VertexCapExceeded):
        enumerate_vertices(s5, cap=100)
    assert len(enumerate_vertices(s5, cap=924)) == 40


def test_incomplete_table_is_rejected():
    table = load_table(TABLE_DIR / "incomplete_s3.gct")

    with pytest.raises(AuxConstructionError):
        enumerate_vertices(table)
