"""
Pydantic models for auxiliary characters and bound search results
"""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from app.characters.model import ClassFunction, GaloisTypeQuery
from app.tame.model import ExponentMode


class AuxMethod(str, Enum):
    """Closed-form auxiliary constructions"""

    LINEAR = "linear"
    SQUARE = "square"
    QUADRATIC = "quadratic"
    GALOIS = "galois"


class MethodTag(str, Enum):
    """Method tag of a candidate, in tie-break order"""

    LINEAR = "l"
    SQUARE = "s"
    QUADRATIC = "q"
    GALOIS = "g"
    PERMUTATION = "p"
    VERTEX = "v"

    @property
    def rank(self) -> int:
        return list(MethodTag).index(self)


METHOD_TAGS = {
    AuxMethod.LINEAR: MethodTag.LINEAR,
    AuxMethod.SQUARE: MethodTag.SQUARE,
    AuxMethod.QUADRATIC: MethodTag.QUADRATIC,
    AuxMethod.GALOIS: MethodTag.GALOIS,
}


class AuxCandidate(BaseModel):
    """Nonnegative nonzero class function used as auxiliary character"""

    model_config = ConfigDict(frozen=True)

    phi: ClassFunction
    method_tag: MethodTag
    source: str


class Vertex(BaseModel):
    """Vertex of the normalized polytope of nonnegative class functions"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    tight_set: tuple[int, ...]


class CandidateEvaluation(BaseModel):
    """One audited (candidate, conjugation class) evaluation"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    conj_label: str
    source: str
    method_tag: MethodTag
    n: Fraction
    r: Fraction
    u: Fraction
    exponent: Fraction
    value: float
    walp_value: float


class BoundReport(BaseModel):
    """Result of the bound search for one Galois type"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    query: GaloisTypeQuery
    value: float = Field(gt=0)
    best: AuxCandidate
    conj_label: str
    exponent_used: Fraction
    exponent_mode: ExponentMode
    improved_by_tw: bool = False
    per_conjugation: dict[str, float]
    achievers: tuple[str, ...] = ()
    all_evaluated: list[CandidateEvaluation] = Field(default_factory=list)

    @property
    def tag(self) -> str:
        """Method tag, upper case when the tame-wild exponent raised the bound"""
        tag = self.best.method_tag.value
        return tag.upper() if self.improved_by_tw else tag
