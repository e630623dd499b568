import math
from fractions import Fraction
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import factorint, isprime

from app.tame.model import ExponentMode

UNITAL_LABEL = "1"


class FactoredInteger(BaseModel):
    """Rational number kept as its prime factorization"""

    model_config = ConfigDict(frozen=True)

    factors: dict[int, int] = Field(default_factory=dict, description="Prime to exponent, zero exponents dropped")

    @field_validator("factors")
    @classmethod
    def _canonical(cls, factors: dict[int, int]) -> dict[int, int]:
        for p in factors:
            if not isprime(p):
                raise ValueError(f"{p} is not a prime")
        return {p: e for p, e in sorted(factors.items()) if e != 0}

    @classmethod
    def of(cls, n: int) -> Self:
        if n < 1:
            raise ValueError(f"only positive integers can be factored, got {n}")
        return cls(factors={int(p): int(e) for p, e in factorint(n).items()})

    @classmethod
    def parse(cls, token: str) -> Self:
        """Parse `1` or `p^e,p^e,...`"""
        if token == "1":
            return cls()
        factors: dict[int, int] = {}
        for part in token.split(","):
            base, sep, exponent = part.partition("^")
            p, e = int(base), int(exponent) if sep else 1
            if p in factors:
                raise ValueError(f"prime {p} repeated in {token}")
            factors[p] = e
        return cls(factors=factors)

    @property
    def is_integer(self) -> bool:
        return all(e > 0 for e in self.factors.values())

    @property
    def value(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return math.prod(p**e for p, e in self.factors.items())

    def log(self) -> float:
        return sum(e * math.log(p) for p, e in self.factors.items())

    def exponent(self, p: int) -> int:
        return self.factors.get(p, 0)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e != 1 else str(p) for p, e in self.factors.items())


class PermBasisSolution(BaseModel):
    """Expression of a character as a rational combination of permutation characters"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    char_label: str
    degree: int = Field(gt=0, description="Value of the character at the identity")
    coefficients: dict[str, Fraction] = Field(description="Basis label to coefficient; label '1' is the unital character")
    scale: int = Field(1, gt=0, description="Least common denominator of the coefficients")

    def nonzero(self) -> dict[str, Fraction]:
        return {label: k for label, k in self.coefficients.items() if k != 0}


class FieldRecord(BaseModel):
    """One Galois field from a field list, with its resolvent discriminants"""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(ge=1, description="Position in the list ordered by Galois root discriminant")
    galois_rd: float = Field(gt=0, description="Root discriminant of the Galois closure")
    resolvent_discs: dict[str, FactoredInteger]

    @field_validator("resolvent_discs")
    @classmethod
    def _positive(cls, discs: dict[str, FactoredInteger]) -> dict[str, FactoredInteger]:
        for label, disc in discs.items():
            if not disc.is_integer:
                raise ValueError(f"resolvent discriminant {label} = {disc} is not a positive integer")
        return discs


class FieldList(BaseModel):
    """Parsed GFL file"""

    model_config = ConfigDict(frozen=True)

    uses: tuple[str, ...]
    records: tuple[FieldRecord, ...]


class SegmentEntry(BaseModel):
    """An Artin L-function in an initial segment"""

    model_config = ConfigDict(frozen=True)

    rank: int
    degree: int = Field(gt=0)
    conductor: FactoredInteger
    root_conductor: float


class TransferExponent(BaseModel):
    """Exponent beta with delta_chi >= delta_G^beta"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    beta: Fraction
    mode: ExponentMode
    walp: Fraction
    alp: Fraction
    equal: bool


class SegmentResult(BaseModel):
    """Initial segment of L-functions of one type, with its certificate"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    char_label: str
    bound: float = Field(gt=0, description="Galois root discriminant up to which the field list is complete")
    exponent: TransferExponent
    cutoff: float
    entries: list[SegmentEntry] = Field(default_factory=list, description="Entries with root conductor <= cutoff, ascending")
    delta1: float | None = None
    delta1_certified: bool = False
    certified: bool = True
    excluded: list[int] = Field(default_factory=list, description="Ranks of records whose conductor could not be computed")
