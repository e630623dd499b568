"""
Pydantic models for rational character tables
"""

import math
from collections.abc import Iterable
from enum import Enum
from fractions import Fraction
from typing import Self

from pydantic import BaseModel, ConfigDict, Field
from sympy import factorint

Number = int | Fraction


class ClassFunction(BaseModel):
    """Rational-valued function on power-conjugacy classes, index-aligned to a table's class order"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Number]) -> Self:
        return cls(values=tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> Fraction:
        return self.values[index]

    @property
    def degree(self) -> Fraction:
        """Value at the identity class"""
        return self.values[0]

    def _check_length(self, other: "ClassFunction") -> None:
        if len(other) != len(self):
            raise ValueError(f"Class function length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "ClassFunction | Number") -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check_length(other)
            return ClassFunction(values=tuple(a + b for a, b in zip(self.values, other.values, strict=True)))
        return ClassFunction(values=tuple(a + other for a in self.values))

    def __sub__(self, other: "ClassFunction | Number") -> "ClassFunction":
        return self + (other * -1 if isinstance(other, ClassFunction) else -other)

    def __mul__(self, other: "ClassFunction | Number") -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check_length(other)
            return ClassFunction(values=tuple(a * b for a, b in zip(self.values, other.values, strict=True)))
        return ClassFunction(values=tuple(a * other for a in self.values))

    def __rmul__(self, other: Number) -> "ClassFunction":
        return self * other

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def cleared(self) -> "ClassFunction":
        """Smallest positive integer multiple with integral values"""
        lcm = 1
        for v in self.values:
            lcm = math.lcm(lcm, v.denominator)
        return self * lcm

    def as_ints(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.values)


class ConjClass(BaseModel):
    """Power-conjugacy class of a finite group"""

    model_config = ConfigDict(frozen=True)

    label: str
    element_order: int = Field(gt=0)
    size: int = Field(gt=0)
    power_map: dict[int, str] = Field(default_factory=dict)


class LabeledCharacter(BaseModel):
    """Named integer-valued row of a character table"""

    model_config = ConfigDict(frozen=True)

    label: str
    values: ClassFunction


class CharacterTable(BaseModel):
    """Rational character table of a finite group"""

    model_config = ConfigDict(frozen=True)

    group_name: str
    group_order: int = Field(gt=0)
    tame_wild: bool = False
    complete: bool = True
    classes: tuple[ConjClass, ...]
    chars: tuple[LabeledCharacter, ...]
    perm_chars: tuple[LabeledCharacter, ...] = ()

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_index(self, label: str) -> int:
        for i, conj in enumerate(self.classes):
            if conj.label == label:
                return i
        raise KeyError(f"Unknown class '{label}' in {self.group_name}")

    def char(self, label: str) -> ClassFunction:
        for row in self.chars:
            if row.label == label:
                return row.values
        raise KeyError(f"Unknown character '{label}' in {self.group_name}")

    def perm(self, label: str) -> ClassFunction:
        for row in self.perm_chars:
            if row.label == label:
                return row.values
        raise KeyError(f"Unknown permutation character '{label}' in {self.group_name}")

    def unital(self) -> ClassFunction:
        return ClassFunction.of([1] * self.class_count)

    def power_class(self, index: int, k: int) -> int:
        """
        Index of the class containing tau^k for tau in class `index`

        Composite powers are resolved by iterating the stored prime power maps. A prime
        that does not divide the current element order keeps the power-conjugacy class.
        """
        order = self.classes[index].element_order
        k %= order
        if k == 0:
            return 0
        current = index
        for prime, exponent in factorint(k).items():
            for _ in range(exponent):
                conj = self.classes[current]
                if conj.element_order % prime:
                    break
                current = self.class_index(conj.power_map[prime])
        return current


class GaloisTypeQuery(BaseModel):
    """A Galois type (G, c, chi) for which bounds are computed"""

    model_config = ConfigDict(frozen=True)

    table: CharacterTable
    char_label: str
    conj_label: str | None = None

    @property
    def chi(self) -> ClassFunction:
        return self.table.char(self.char_label)


class CombineOp(str, Enum):
    """Pointwise operations on class functions"""

    ADD = "add"
    MULTIPLY = "multiply"
    SCALE = "scale"
    SHIFT = "shift"


class ValueExtremes(BaseModel):
    """The quantities check, hat and tilde read off a class function's value set"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    check: Fraction
    hat: Fraction
    tilde: Fraction | None = None


class ClassFlags(BaseModel):
    """Classification of a class function against a table"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    is_character: bool
    is_nonnegative: bool
    is_faithful: bool
    abs_constituents: int | None = None
