"""
Exact vertex enumeration of the polytope of normalized nonnegative class functions
"""

import math
from fractions import Fraction
from itertools import combinations

import logfire
from loguru import logger
from sympy import Matrix, Rational

from app.auxiliary.model import AuxCandidate, MethodTag, Vertex
from app.characters.model import CharacterTable
from app.characters.service import degree_sum, expand
from app.config import get_settings
from app.exceptions import AuxConstructionError, VertexCapExceeded
from app.utils.counter import subset_counter


def solve_rational(m: list[list[Fraction]], t: list[Fraction]) -> list[Fraction] | None:
    """
    Solve the square system m x = t exactly over the rationals

    Returns:
        The unique solution, or None when m is singular
    """
    a = Matrix([[Rational(v.numerator, v.denominator) for v in row] for row in m])
    if a.rank() < len(m):
        return None
    x = a.LUsolve(Matrix([Rational(v.numerator, v.denominator) for v in t]))
    return [Fraction(int(v.p), int(v.q)) for v in x]


def constraint_system(table: CharacterTable) -> tuple[list[list[Fraction]], list[Fraction]]:
    """
    The 2k-2 inequalities a . x + b >= 0 over x = (x_2, ..., x_k)

    Rows 0..k-2 are x_i >= 0; rows k-1..2k-3 are y_j = 1 + sum_i x_i chi_i(C_j) >= 0 for the
    non-identity classes.
    """
    k = table.class_count
    rows: list[list[Fraction]] = []
    offsets: list[Fraction] = []
    for i in range(k - 1):
        rows.append([Fraction(int(i == c)) for c in range(k - 1)])
        offsets.append(Fraction(0))
    for j in range(1, k):
        rows.append([table.chars[i].values[j] for i in range(1, k)])
        offsets.append(table.chars[0].values[j])
    return rows, offsets


def enumerate_vertices(table: CharacterTable, cap: int | None = None) -> list[Vertex]:
    """
    Enumerate all vertices of the polytope x_1 = 1, x_i >= 0, y_j >= 0

    Every (k-1)-subset of the constraint hyperplanes is solved exactly; feasible solutions are
    kept once each, in subset order.

    Args:
        table: Complete character table
        cap: Maximum number of subset solves, VERTEX_CAP by default

    Returns:
        Vertices with exact coordinates, class values and active constraints

    Raises:
        AuxConstructionError: If the table is incomplete
        VertexCapExceeded: If C(2k-2, k-1) exceeds the cap
    """
    cap = get_settings().VERTEX_CAP if cap is None else cap
    k = table.class_count
    if len(table.chars) != k or degree_sum(table) != table.group_order:
        raise AuxConstructionError(f"{table.group_name}: vertex enumeration needs a complete character table")
    work = math.comb(2 * k - 2, k - 1)
    if work > cap:
        raise VertexCapExceeded(work, cap)
    if k == 1:
        return [Vertex(x=(), y=(Fraction(1),), tight_set=())]

    rows, offsets = constraint_system(table)
    seen: set[tuple[Fraction, ...]] = set()
    vertices: list[Vertex] = []
    with logfire.span("enumerate vertices of {group}", group=table.group_name, subsets=work):
        for subset in combinations(range(2 * k - 2), k - 1):
            x = solve_rational([rows[i] for i in subset], [-offsets[i] for i in subset])
            if x is None:
                subset_counter.add(1, {"outcome": "singular"})
                continue
            slacks = [sum((a * v for a, v in zip(row, x, strict=True)), offset) for row, offset in zip(rows, offsets, strict=True)]
            if any(s < 0 for s in slacks):
                subset_counter.add(1, {"outcome": "infeasible"})
                continue
            key = tuple(x)
            if key in seen:
                subset_counter.add(1, {"outcome": "duplicate"})
                continue
            seen.add(key)
            subset_counter.add(1, {"outcome": "vertex"})
            phi = expand(table, (Fraction(1), *x))
            vertices.append(Vertex(x=key, y=phi.values, tight_set=tuple(i for i, s in enumerate(slacks) if s == 0)))
        logfire.info("{group} has {count} vertices", group=table.group_name, count=len(vertices))
    logger.info(f"{table.group_name}: {len(vertices)} vertices from {work} subset solves")
    return vertices


def vertex_candidates(table: CharacterTable, vertices: list[Vertex]) -> list[AuxCandidate]:
    """Integral auxiliary candidates from vertices, denominators cleared"""
    return [
        AuxCandidate(phi=expand(table, (Fraction(1), *vertex.x)).cleared(), method_tag=MethodTag.VERTEX, source=f"v{index}")
        for index, vertex in enumerate(vertices, start=1)
    ]
