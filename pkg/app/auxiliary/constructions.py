"""
Auxiliary character constructions phi_L, phi_S, phi_Q and phi_G
"""

from loguru import logger

from app.auxiliary.model import METHOD_TAGS, AuxCandidate, AuxMethod
from app.characters.model import CharacterTable, ClassFunction
from app.characters.service import regular_character, value_extremes
from app.exceptions import AuxConstructionError


def _quadratic(chi: ClassFunction) -> ClassFunction:
    tilde = value_extremes(chi).tilde
    if tilde is None:
        raise AuxConstructionError("quadratic construction needs a negative character value")
    if any(-tilde < v < 0 for v in chi.values):
        raise AuxConstructionError(f"character values meet the open interval ({-tilde}, 0)")
    return chi * (chi + tilde)


def build_aux(table: CharacterTable, chi: ClassFunction, method: AuxMethod) -> AuxCandidate:
    """
    Build a closed-form auxiliary character for chi

    linear: chi + check; square: chi^2; quadratic: chi (chi + tilde); galois: the regular character.

    Args:
        table: Character table chi belongs to
        chi: Rational, faithful, nonconstant character
        method: Construction

    Returns:
        AuxCandidate tagged with the construction

    Raises:
        AuxConstructionError: If the construction is undefined or yields a negative value
    """
    if len(chi) != table.class_count:
        raise AuxConstructionError(f"character has {len(chi)} values, {table.group_name} has {table.class_count} classes")
    try:
        match method:
            case AuxMethod.LINEAR:
                phi = chi + value_extremes(chi).check
            case AuxMethod.SQUARE:
                phi = chi * chi
            case AuxMethod.QUADRATIC:
                phi = _quadratic(chi)
            case AuxMethod.GALOIS:
                phi = regular_character(table)
    except ValueError as e:
        if isinstance(e, AuxConstructionError):
            raise
        raise AuxConstructionError(f"{method.value} construction failed: {e}") from e

    if any(v < 0 for v in phi.values) or phi.degree == 0:
        logger.error(f"{table.group_name}: {method.value} construction gave {phi.values}")
        raise AuxConstructionError(f"{method.value} construction is not a nonnegative nonzero class function")
    return AuxCandidate(phi=phi, method_tag=METHOD_TAGS[method], source=method.value)
