from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from app.auxiliary.model import MethodTag
from app.tame.model import ExponentMode


class Rounding(str, Enum):
    """Presentation rounding of bound cells"""

    FLOOR = "floor"
    NEAREST = "nearest"


class OutputFormat(str, Enum):
    TSV = "tsv"
    ALIGNED = "aligned"


class ReportRow(BaseModel):
    """One row of the per-character summary of a group"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    char_label: str
    degree: int
    constituents: int = Field(1, description="(chi, chi), the number of conjugate constituents, shown as a superscript when above 1")
    check: Fraction
    hat: Fraction
    bound: float = Field(description="Least root conductor lower bound")
    tag: str
    conj_label: str
    beta: Fraction
    beta_mode: ExponentMode
    tw_raised_beta: bool = False
    cutoff: float | None = Field(default=None, description="B^beta when a Galois root discriminant bound is given")
    delta1: float | None = None
    delta1_certified: bool = False
    segment_size: int | None = None


class RunConfig(BaseModel):
    """Validated command-line options of one run"""

    model_config = ConfigDict(frozen=True)

    subcommand: str
    inputs: list[str] = Field(default_factory=list, description="Positional GCT/GFL paths or bundled table names")
    char_label: str | None = None
    conj_label: str | None = None
    methods: list[MethodTag] | None = None
    vertex_cap: int | None = Field(default=None, ge=0)
    tol: float | None = Field(default=None, gt=0)
    output_format: OutputFormat = OutputFormat.TSV
    rounding: Rounding = Rounding.FLOOR
