from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Hypothesis(str, Enum):
    """Which large-degree hypothesis a floor is computed through"""

    CHECK = "A"
    HAT = "B"


class SequenceProfile(BaseModel):
    """Extreme-value ratios of one member of a sequence of types"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(gt=0, description="Degree chi(e)")
    check_ratio: Fraction = Field(description="check(chi)/n, minus the least value over the degree")
    hat_ratio: Fraction = Field(description="hat(chi)/n, the largest non-identity value over the degree")
    constituents: int = Field(ge=1, description="(chi, chi)")
    group_order: int | None = Field(default=None, gt=0)

    @field_validator("check_ratio")
    @classmethod
    def _check_range(cls, value: Fraction) -> Fraction:
        if not 0 <= value <= 1:
            raise ValueError(f"check ratio must lie in [0, 1], got {value}")
        return value

    @field_validator("hat_ratio")
    @classmethod
    def _hat_range(cls, value: Fraction) -> Fraction:
        if not -1 <= value <= 1:
            raise ValueError(f"hat ratio must lie in [-1, 1], got {value}")
        return value


class FloorResult(BaseModel):
    """Finite-degree floor for a profile and the hypothesis that produced it"""

    model_config = ConfigDict(frozen=True)

    value: float
    hypothesis: Hypothesis
    case_a: float | None = None
    case_b: float | None = None
    totally_real: bool = False
