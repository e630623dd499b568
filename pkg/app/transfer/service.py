import functools
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import logfire
from loguru import logger
from sympy import Matrix, Rational

from app.characters.model import CharacterTable, ClassFunction
from app.characters.service import regular_character
from app.config import get_settings
from app.exceptions import ConductorError, SpanError
from app.tame.model import ExponentMode
from app.tame.service import exponent_bracket
from app.transfer.model import (
    UNITAL_LABEL,
    FactoredInteger,
    FieldRecord,
    PermBasisSolution,
    SegmentEntry,
    SegmentResult,
    TransferExponent,
)
from app.utils.counter import conductor_counter


def _basis_function(table: CharacterTable, label: str) -> ClassFunction:
    return table.unital() if label == UNITAL_LABEL else table.perm(label)


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def solve_in_perm_basis(table: CharacterTable, char_label: str, basis: Sequence[str]) -> PermBasisSolution:
    """
    Express a character as a rational combination of permutation characters

    Args:
        table: Character table holding the permutation characters
        char_label: Character to express
        basis: Permutation-character labels; "1" stands for the unital character

    Returns:
        PermBasisSolution with the sum verified exactly; free parameters of an
        underdetermined system are set to zero

    Raises:
        KeyError: If a basis label is not in the table
        SpanError: If the character is outside the rational span of the basis
    """
    chi = table.char(char_label)
    columns = [_basis_function(table, label) for label in basis]
    a = Matrix([[Rational(col[j].numerator, col[j].denominator) for col in columns] for j in range(table.class_count)])
    b = Matrix([Rational(v.numerator, v.denominator) for v in chi.values])
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError as e:
        raise SpanError(f"{table.group_name}: {char_label} is not in the span of {', '.join(basis)}") from e
    if params.shape[0]:
        logger.debug(f"{table.group_name}: basis {', '.join(basis)} is dependent, fixing {params.shape[0]} free coefficients to 0")
        solution = solution.subs({p: 0 for p in params})

    coefficients = {label: _fraction(solution[i]) for i, label in enumerate(basis)}
    total = ClassFunction.of([0] * table.class_count)
    for label, k in coefficients.items():
        total = total + _basis_function(table, label) * k
    if total != chi:
        raise SpanError(f"{table.group_name}: solution for {char_label} does not reproduce its values")
    return PermBasisSolution(
        char_label=char_label,
        degree=int(chi.degree),
        coefficients=coefficients,
        scale=math.lcm(*(k.denominator for k in coefficients.values())),
    )


def conductor_from_resolvents(sol: PermBasisSolution, rec: FieldRecord) -> FactoredInteger:
    """
    Conductor of the character from resolvent discriminants, prime by prime

    Args:
        sol: Character as a combination of permutation characters
        rec: Field record supplying every label with nonzero coefficient

    Returns:
        Conductor with nonnegative integral exponents

    Raises:
        ConductorError: If a resolvent is missing or an exponent is fractional or negative
    """
    exponents: dict[int, Fraction] = {}
    for label, k in sol.nonzero().items():
        if label == UNITAL_LABEL:
            continue
        disc = rec.resolvent_discs.get(label)
        if disc is None:
            conductor_counter.add(1, {"status": "missing"})
            raise ConductorError(f"field {rec.rank}: no resolvent discriminant for {label}")
        for p, e in disc.factors.items():
            exponents[p] = exponents.get(p, Fraction(0)) + k * e

    factors: dict[int, int] = {}
    for p, e in exponents.items():
        if e.denominator != 1 or e < 0:
            conductor_counter.add(1, {"status": "invalid"})
            raise ConductorError(f"field {rec.rank}: conductor exponent {e} at {p} for {sol.char_label} is not a nonnegative integer")
        factors[p] = int(e)
    conductor_counter.add(1, {"status": "ok"})
    return FactoredInteger(factors=factors)


def transfer_exponent(table: CharacterTable, char_label: str) -> TransferExponent:
    """
    Exponent beta relating the root conductor of chi to the Galois root discriminant

    beta is walp(chi, regular character), or alp when the table has the tame-wild property.
    """
    bracket = exponent_bracket(table, table.char(char_label), regular_character(table))
    mode = ExponentMode.ALPHA_TW if table.tame_wild else ExponentMode.ALPHA_HAT
    return TransferExponent(beta=bracket.exponent(mode), mode=mode, walp=bracket.walp, alp=bracket.alp, equal=bracket.equal)


def compare_root_conductors(a: SegmentEntry, b: SegmentEntry) -> int:
    """Order by root conductor, exactly, via D_a^(n_b) against D_b^(n_a); ties by rank"""
    left, right = a.conductor.value**b.degree, b.conductor.value**a.degree
    if left != right:
        return -1 if left < right else 1
    return (a.rank > b.rank) - (a.rank < b.rank)


def _entry(sol: PermBasisSolution, rec: FieldRecord) -> SegmentEntry:
    conductor = conductor_from_resolvents(sol, rec)
    return SegmentEntry(rank=rec.rank, degree=sol.degree, conductor=conductor, root_conductor=math.exp(conductor.log() / sol.degree))


def extract_segment(table: CharacterTable, sol: PermBasisSolution, fields: Sequence[FieldRecord], bound: float) -> SegmentResult:
    """
    Complete initial segment of L-functions for chi from a field list complete up to `bound`

    Every entry with root conductor at most bound^beta is certified to be present. Records
    whose conductor cannot be computed are excluded and withdraw the certificate.

    Args:
        table: Character table
        sol: Character in the permutation basis used by the field list
        fields: Field records, complete up to Galois root discriminant `bound`
        bound: Galois root discriminant bound B

    Returns:
        SegmentResult; delta1 is the least root conductor, certified only when the segment is
        non-empty and no record was excluded
    """
    if bound <= 0:
        raise ValueError(f"bound must be positive, got {bound}")
    exponent = transfer_exponent(table, sol.char_label)
    cutoff = bound ** float(exponent.beta)
    log_cutoff = float(exponent.beta) * math.log(bound)

    def compute(rec: FieldRecord) -> SegmentEntry | None:
        try:
            return _entry(sol, rec)
        except ConductorError as e:
            logger.warning(f"{table.group_name} {sol.char_label}: excluding field {rec.rank}: {e}")
            return None

    with logfire.span("extract segment for {group} {char}", group=table.group_name, char=sol.char_label, records=len(fields)):
        with ThreadPoolExecutor(max_workers=get_settings().ARTIN_FLOOR_THREADS) as executor:
            computed = list(executor.map(compute, fields))

        excluded = [rec.rank for rec, entry in zip(fields, computed, strict=True) if entry is None]
        entries = sorted((entry for entry in computed if entry is not None), key=functools.cmp_to_key(compare_root_conductors))
        segment = [entry for entry in entries if entry.conductor.log() / entry.degree <= log_cutoff]
        beyond = [rec.rank for rec in fields if rec.galois_rd > bound]
        if beyond:
            logger.warning(f"{table.group_name}: {len(beyond)} records exceed the completeness bound {bound}")

        certified = not excluded
        delta1 = entries[0].root_conductor if entries else None
        result = SegmentResult(
            char_label=sol.char_label,
            bound=bound,
            exponent=exponent,
            cutoff=cutoff,
            entries=segment,
            delta1=delta1,
            delta1_certified=bool(segment) and certified,
            certified=certified,
            excluded=excluded,
        )
        logfire.info("{char}: {size} entries below cutoff {cutoff}", char=sol.char_label, size=len(segment), cutoff=cutoff)
    logger.info(f"{table.group_name} {sol.char_label}: cutoff {cutoff:.4f}, {len(segment)} entries, {len(excluded)} excluded")
    return result
