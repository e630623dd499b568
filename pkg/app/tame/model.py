"""
Pydantic models for tame ramification quantities
"""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict


class ExponentMode(str, Enum):
    """Which end of the exponent bracket is used"""

    ALPHA_HAT = "alpha_hat"
    ALPHA_TW = "alpha_tw"


class TameRow(BaseModel):
    """Tame quantities of one class function at one class"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    class_label: str
    c_hat: Fraction
    c_tame: Fraction


class TameTableRow(BaseModel):
    """All tame quantities of one labelled character"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    entries: tuple[TameRow, ...]

    @property
    def c_tame(self) -> tuple[Fraction, ...]:
        return tuple(entry.c_tame for entry in self.entries)


class ExponentBracket(BaseModel):
    """The exponent bracket [walp, alp] of a pair (chi, phi)"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha_hat: Fraction
    alpha: Fraction
    walp: Fraction
    alp: Fraction
    equal: bool
    hat_argmin: tuple[str, ...] = ()
    argmin: tuple[str, ...] = ()

    def exponent(self, mode: ExponentMode) -> Fraction:
        return self.alp if mode == ExponentMode.ALPHA_TW else self.walp
