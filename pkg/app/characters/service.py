from fractions import Fraction

from loguru import logger
from sympy import primefactors

from app.characters.model import (
    CharacterTable,
    ClassFlags,
    ClassFunction,
    CombineOp,
    Number,
    ValueExtremes,
)
from app.exceptions import TableValidationError, ValueExtremesError


def _check_length(table: CharacterTable, *functions: ClassFunction) -> None:
    for f in functions:
        if len(f) != table.class_count:
            raise ValueError(f"Class function of length {len(f)} does not match {table.class_count} classes of {table.group_name}")


def inner_product(table: CharacterTable, f: ClassFunction, g: ClassFunction) -> Fraction:
    """
    Inner product (1/|G|) sum_j |C_j| f(C_j) g(C_j)

    Args:
        table: Character table supplying class sizes
        f: First class function
        g: Second class function

    Returns:
        Exact rational inner product

    Raises:
        ValueError: If either function does not match the table's class count
    """
    _check_length(table, f, g)
    total = sum((conj.size * a * b for conj, a, b in zip(table.classes, f.values, g.values, strict=True)), Fraction(0))
    return total / table.group_order


def value_extremes(f: ClassFunction) -> ValueExtremes:
    """
    Read check, hat and tilde from the value set of f

    check is minus the least value, hat the largest value strictly below f(e), and
    tilde minus the greatest negative value (absent when f has no negative value).

    Raises:
        ValueExtremesError: If f is constant or no value lies below f(e)
    """
    values = set(f.values)
    if len(values) < 2:
        raise ValueExtremesError("Value extremes are undefined for a constant class function")
    below_identity = [v for v in values if v < f.degree]
    if not below_identity:
        raise ValueExtremesError(f"hat is undefined: no value lies below f(e) = {f.degree}")
    negatives = [v for v in values if v < 0]
    return ValueExtremes(
        check=-min(values),
        hat=max(below_identity),
        tilde=-max(negatives) if negatives else None,
    )


def combine(op: CombineOp, f: ClassFunction, other: ClassFunction | Number) -> ClassFunction:
    """Pointwise add, multiply, scale or shift"""
    match op:
        case CombineOp.ADD | CombineOp.MULTIPLY:
            if not isinstance(other, ClassFunction):
                raise ValueError(f"{op.value} needs a class function operand")
            return f + other if op == CombineOp.ADD else f * other
        case CombineOp.SCALE | CombineOp.SHIFT:
            if isinstance(other, ClassFunction):
                raise ValueError(f"{op.value} needs a scalar operand")
            return f * other if op == CombineOp.SCALE else f + other
    raise ValueError(f"Unknown operation {op}")


def coordinates(table: CharacterTable, f: ClassFunction) -> tuple[Fraction, ...]:
    """Coordinates x_i = (f, chi_i)/(chi_i, chi_i) in the rationally irreducible basis"""
    return tuple(inner_product(table, f, row.values) / inner_product(table, row.values, row.values) for row in table.chars)


def expand(table: CharacterTable, x: tuple[Fraction, ...]) -> ClassFunction:
    """Class function sum_i x_i chi_i"""
    result = ClassFunction.of([0] * table.class_count)
    for coefficient, row in zip(x, table.chars, strict=True):
        result = result + row.values * coefficient
    return result


def is_faithful(table: CharacterTable, f: ClassFunction) -> bool:
    """True when f takes its identity value only on the identity class"""
    _check_length(table, f)
    return all(v != f.degree for v in f.values[1:])


def classify(table: CharacterTable, f: ClassFunction) -> ClassFlags:
    """
    Classify a class function against a table

    Args:
        table: Character table
        f: Class function to classify

    Returns:
        ClassFlags with character, nonnegativity and faithfulness flags
    """
    _check_length(table, f)
    x = coordinates(table, f)
    in_span = expand(table, x) == f
    is_character = in_span and all(c >= 0 and c.denominator == 1 for c in x)
    norm = inner_product(table, f, f)
    return ClassFlags(
        is_character=is_character,
        is_nonnegative=all(v >= 0 for v in f.values),
        is_faithful=is_faithful(table, f),
        abs_constituents=int(norm) if norm.denominator == 1 else None,
    )


def regular_character(table: CharacterTable) -> ClassFunction:
    """Value |G| at the identity and 0 elsewhere"""
    return ClassFunction.of([table.group_order] + [0] * (table.class_count - 1))


def conjugation_classes(table: CharacterTable) -> list[str]:
    """Labels of the classes that can hold complex conjugation (element order 1 or 2)"""
    return [conj.label for conj in table.classes if conj.element_order <= 2]


def faithful_characters(table: CharacterTable) -> list[str]:
    """Labels of the faithful rational irreducible characters"""
    return [row.label for row in table.chars if is_faithful(table, row.values)]


def degree_sum(table: CharacterTable) -> Fraction:
    """Sum of chi(e)^2/(chi, chi); equals |G| exactly when the table is complete"""
    return sum((row.values.degree**2 / inner_product(table, row.values, row.values) for row in table.chars), Fraction(0))


def validate_table(table: CharacterTable) -> None:
    """
    Verify every CharacterTable invariant

    Args:
        table: Parsed table

    Raises:
        TableValidationError: On the first violated invariant
    """
    problems = list(table_problems(table))
    if problems:
        for problem in problems:
            logger.error(f"{table.group_name}: {problem}")
        raise TableValidationError(f"{table.group_name}: {problems[0]}")


def table_problems(table: CharacterTable) -> list[str]:
    """Collect all invariant violations of a table, in a stable order"""
    problems: list[str] = []
    classes = table.classes
    if not classes:
        return ["table has no classes"]

    identity = classes[0]
    if identity.element_order != 1 or identity.size != 1 or identity.power_map:
        problems.append(f"first class {identity.label} is not the identity class")
    if sum(conj.size for conj in classes) != table.group_order:
        problems.append(f"class sizes sum to {sum(conj.size for conj in classes)}, not {table.group_order}")

    labels = {conj.label for conj in classes}
    orders = {conj.label: conj.element_order for conj in classes}
    for conj in classes:
        if table.group_order % conj.element_order:
            problems.append(f"element order {conj.element_order} of {conj.label} does not divide {table.group_order}")
        for prime in primefactors(conj.element_order):
            target = conj.power_map.get(prime)
            if target is None:
                problems.append(f"missing power map {conj.label}^{prime}")
            elif target not in labels:
                problems.append(f"power map {conj.label}^{prime} targets unknown class {target}")
            elif orders[target] != conj.element_order // prime:
                problems.append(f"power map {conj.label}^{prime} -> {target} has element order {orders[target]}, expected {conj.element_order // prime}")
        for prime in conj.power_map:
            if conj.element_order % prime:
                problems.append(f"power map {conj.label}^{prime} given for a prime not dividing {conj.element_order}")

    if not table.chars or any(v != 1 for v in table.chars[0].values.values):
        problems.append("first character is not the unital character")

    for row in (*table.chars, *table.perm_chars):
        if len(row.values) != table.class_count:
            problems.append(f"character {row.label} has {len(row.values)} values for {table.class_count} classes")
    if problems:
        return problems

    for i, row in enumerate(table.chars):
        for other in table.chars[i:]:
            product = inner_product(table, row.values, other.values)
            if product.denominator != 1 or product < 0:
                problems.append(f"({row.label}, {other.label}) = {product} is not a nonnegative integer")
            elif other is row and product == 0:
                problems.append(f"({row.label}, {row.label}) is zero")
            elif other is not row and product != 0:
                problems.append(f"({row.label}, {other.label}) = {product}, expected 0")
    if table.chars and inner_product(table, table.chars[0].values, table.chars[0].values) != 1:
        problems.append("unital character does not have norm 1")

    for row in table.perm_chars:
        if any(v < 0 for v in row.values.values):
            problems.append(f"permutation character {row.label} has a negative value")
        elif row.values.degree <= 0:
            problems.append(f"permutation character {row.label} has nonpositive degree")
        elif inner_product(table, row.values, table.unital()) < 1:
            problems.append(f"permutation character {row.label} does not contain the unital character")

    if table.complete and degree_sum(table) != table.group_order:
        problems.append(f"table is declared complete but the degree sum is {degree_sum(table)}, not {table.group_order}")
    return problems
