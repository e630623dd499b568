import math
from fractions import Fraction

from app.asymptotics.model import FloorResult, Hypothesis, SequenceProfile
from app.characters.model import CharacterTable, ClassFunction
from app.characters.service import inner_product, value_extremes
from app.kernel.service import big_m


def profile(table: CharacterTable, chi: str | ClassFunction) -> SequenceProfile:
    """
    Profile of a character: check and hat over the degree, and its constituent count

    Args:
        table: Character table
        chi: Character label or class function

    Raises:
        ValueError: If the character is constant
    """
    if isinstance(chi, str):
        chi = table.char(chi)
    extremes = value_extremes(chi)
    norm = inner_product(table, chi, chi)
    return SequenceProfile(
        n=int(chi.degree),
        check_ratio=extremes.check / chi.degree,
        hat_ratio=extremes.hat / chi.degree,
        constituents=int(norm),
        group_order=table.group_order,
    )


def floor_for_profile(p: SequenceProfile, *, totally_real: bool = False) -> FloorResult:
    """
    Lower bound for the least root conductor of a type with the given profile

    Case A uses the linear auxiliary character,
    M(1/check_ratio + 1, r, (chi, chi))^(1 + check_ratio), with r = 0 in general and r equal to
    the first argument when complex conjugation is trivial. Case B uses the Galois auxiliary
    character, M(|G|, r, (chi, chi))^(1 - hat_ratio), with r = 0 or |G|.

    Args:
        p: Sequence profile
        totally_real: Restrict to types with trivial complex conjugation

    Returns:
        FloorResult holding the larger of the computable cases

    Raises:
        ValueError: If neither case applies (zero check ratio and no group order)
    """
    case_a = case_b = None
    if p.check_ratio > 0:
        n_a = 1 / p.check_ratio + 1
        m = big_m(n_a, n_a if totally_real else 0, p.constituents)
        case_a = math.exp(float(1 + p.check_ratio) * m.log_value)
    if p.group_order is not None:
        m = big_m(p.group_order, p.group_order if totally_real else 0, p.constituents)
        case_b = math.exp(float(1 - p.hat_ratio) * m.log_value)
    if case_a is not None and (case_b is None or case_a >= case_b):
        return FloorResult(value=case_a, hypothesis=Hypothesis.CHECK, case_a=case_a, case_b=case_b, totally_real=totally_real)
    if case_b is None:
        raise ValueError("floor needs a positive check ratio or a group order")
    return FloorResult(value=case_b, hypothesis=Hypothesis.HAT, case_a=case_a, case_b=case_b, totally_real=totally_real)


def sequence_profile(n: int, check: int, hat: int, constituents: int = 1, group_order: int | None = None) -> SequenceProfile:
    """Profile from raw extreme values, for sequences whose tables are not at hand"""
    return SequenceProfile(n=n, check_ratio=Fraction(check, n), hat_ratio=Fraction(hat, n), constituents=constituents, group_order=group_order)
