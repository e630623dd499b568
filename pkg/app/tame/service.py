from fractions import Fraction

from loguru import logger
from sympy import divisors, totient

from app.characters.model import CharacterTable, ClassFunction
from app.exceptions import BracketError
from app.tame.model import ExponentBracket, TameRow, TameTableRow


def _class_index(table: CharacterTable, conj: str | int) -> int:
    if isinstance(conj, int):
        if not 0 <= conj < table.class_count:
            raise KeyError(f"Class index {conj} out of range for {table.group_name}")
        return conj
    return table.class_index(conj)


def c_hat(table: CharacterTable, f: ClassFunction, conj: str | int) -> Fraction:
    """psi(e) - psi(tau)"""
    return f.degree - f[_class_index(table, conj)]


def c_tame(table: CharacterTable, f: ClassFunction, conj: str | int) -> Fraction:
    """
    Tame conductor exponent psi(e) - (1/order) sum_{k | order} totient(order/k) psi(tau^k)

    Args:
        table: Character table with power maps
        f: Class function psi
        conj: Class label or index of tau

    Returns:
        Exact rational c_tau(psi)

    Raises:
        KeyError: If the class or one of the power maps it needs is missing
    """
    index = _class_index(table, conj)
    order = table.classes[index].element_order
    total = sum((int(totient(order // k)) * f[table.power_class(index, k)] for k in divisors(order)), Fraction(0))
    return f.degree - total / order


def tame_rows(table: CharacterTable, f: ClassFunction) -> tuple[TameRow, ...]:
    return tuple(TameRow(class_label=conj.label, c_hat=c_hat(table, f, i), c_tame=c_tame(table, f, i)) for i, conj in enumerate(table.classes))


def tame_table(table: CharacterTable) -> list[TameTableRow]:
    """Tame rows for every character and permutation character of the table, in file order"""
    return [TameTableRow(label=row.label, entries=tame_rows(table, row.values)) for row in (*table.chars, *table.perm_chars)]


def _ratio_min(labels: list[str], numerators: list[Fraction], denominators: list[Fraction], what: str) -> tuple[Fraction, tuple[str, ...]]:
    best: Fraction | None = None
    argmin: list[str] = []
    for label, num, den in zip(labels, numerators, denominators, strict=True):
        if den < 0:
            raise BracketError(f"{what}: denominator {den} at class {label} is negative")
        if den == 0:
            if num < 0:
                raise BracketError(f"{what}: negative numerator over zero denominator at class {label}")
            # 0/0 is skipped, a positive numerator over zero cannot constrain this class
            continue
        ratio = num / den
        if best is None or ratio < best:
            best, argmin = ratio, [label]
        elif ratio == best:
            argmin.append(label)
    if best is None:
        raise BracketError(f"{what}: every ratio is undefined")
    return best, tuple(argmin)


def exponent_bracket(table: CharacterTable, chi: ClassFunction, phi: ClassFunction) -> ExponentBracket:
    """
    Exponent bracket of (chi, phi)

    alpha_hat and alpha are the minima over tau != e of c_hat(chi)/c_hat(phi) and
    c_tame(chi)/c_tame(phi); walp and alp rescale them by phi(e)/chi(e).

    Args:
        table: Character table
        chi: Nonconstant class function
        phi: Nonnegative, nonzero class function

    Returns:
        ExponentBracket with all argmin classes listed

    Raises:
        BracketError: If every ratio is undefined (phi constant) or a ratio is negative infinite
    """
    if chi.degree == 0 or phi.degree == 0:
        raise BracketError("exponent bracket needs chi(e) != 0 and phi(e) != 0")
    labels = [conj.label for conj in table.classes[1:]]
    indices = range(1, table.class_count)
    alpha_hat, hat_argmin = _ratio_min(labels, [c_hat(table, chi, i) for i in indices], [c_hat(table, phi, i) for i in indices], "alpha_hat")
    alpha, argmin = _ratio_min(labels, [c_tame(table, chi, i) for i in indices], [c_tame(table, phi, i) for i in indices], "alpha")
    scale = phi.degree / chi.degree
    walp, alp = alpha_hat * scale, alpha * scale
    if walp > alp:
        logger.warning(f"{table.group_name}: walp {walp} exceeds alp {alp}")
    return ExponentBracket(
        alpha_hat=alpha_hat,
        alpha=alpha,
        walp=walp,
        alp=alp,
        equal=walp == alp,
        hat_argmin=hat_argmin,
        argmin=argmin,
    )
