"""
Exceptions raised by the artin-floor services
"""


class ArtinFloorError(ValueError):
    """Base class for all data and computation errors"""


class TableFormatError(ArtinFloorError):
    """Syntax error in a GCT character-table file"""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class TableValidationError(ArtinFloorError):
    """A parsed character table violates one of its invariants"""


class QuadratureError(ArtinFloorError):
    """Adaptive quadrature did not converge within its recursion budget"""


class BracketError(ArtinFloorError):
    """Exponent bracket is undefined for the given pair of class functions"""


class AuxConstructionError(ArtinFloorError):
    """An auxiliary character construction produced an invalid class function"""


class VertexCapExceeded(ArtinFloorError):
    """Polytope enumeration would exceed the configured subset-solve cap"""

    def __init__(self, work: int, cap: int):
        self.work = work
        self.cap = cap
        super().__init__(f"vertex enumeration needs {work} subset solves, cap is {cap}")


class SpanError(ArtinFloorError):
    """A character is not in the rational span of the chosen permutation characters"""


class ConductorError(ArtinFloorError):
    """Resolvent data yields a non-integral or negative conductor exponent"""


class FieldListFormatError(ArtinFloorError):
    """Syntax error in a GFL field-list file"""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValueExtremesError(ArtinFloorError):
    """check, hat or tilde cannot be read off a class function's value set"""
