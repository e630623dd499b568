"""
Per-character summary tables of bounds, transfer exponents and initial segments
"""

from decimal import ROUND_FLOOR, ROUND_HALF_UP, Decimal
from fractions import Fraction

from loguru import logger

from app.auxiliary.bounds import search_bound
from app.auxiliary.model import MethodTag
from app.characters.model import CharacterTable
from app.characters.service import faithful_characters, inner_product, value_extremes
from app.exceptions import SpanError
from app.report.model import OutputFormat, ReportRow, Rounding
from app.tame.model import ExponentMode
from app.transfer.model import UNITAL_LABEL, FieldList
from app.transfer.service import extract_segment, solve_in_perm_basis, transfer_exponent

COLUMNS = ("char", "degree", "interval", "bound", "tag", "conj", "beta", "beta_exact", "B^beta", "delta1", "segment")


def round_value(value: float, rounding: Rounding, digits: int = 2) -> Decimal:
    """Round to `digits` decimals; floor keeps printed bounds valid"""
    quantum = Decimal(1).scaleb(-digits)
    return Decimal(repr(value)).quantize(quantum, rounding=ROUND_FLOOR if rounding == Rounding.FLOOR else ROUND_HALF_UP)


def format_value(value: float | None, rounding: Rounding, digits: int = 2) -> str:
    return "-" if value is None else str(round_value(value, rounding, digits))


def build_report(
    table: CharacterTable,
    bound: float | None = None,
    field_list: FieldList | None = None,
    *,
    vertex_cap: int | None = None,
    methods: list[MethodTag] | None = None,
) -> list[ReportRow]:
    """
    One row per faithful rational irreducible character

    Args:
        table: Character table
        bound: Galois root discriminant bound B for the B^beta column
        field_list: Field list complete up to B, for the delta1 and segment columns
        vertex_cap: Cap for vertex enumeration
        methods: Restrict the auxiliary candidates to these tags

    Returns:
        Report rows in table order
    """
    if field_list is not None and bound is None:
        raise ValueError("a field list needs the bound B it is complete up to")
    rows = []
    for label in faithful_characters(table):
        chi = table.char(label)
        extremes = value_extremes(chi)
        result = search_bound(table, label, vertex_cap=vertex_cap, methods=methods)
        exponent = transfer_exponent(table, label)
        cutoff = bound ** float(exponent.beta) if bound is not None else None

        delta1, certified, size = None, False, None
        if field_list is not None and bound is not None:
            try:
                sol = solve_in_perm_basis(table, label, (UNITAL_LABEL, *field_list.uses))
            except SpanError as e:
                logger.warning(f"{table.group_name} {label}: no segment: {e}")
            else:
                segment = extract_segment(table, sol, field_list.records, bound)
                delta1, certified, size = segment.delta1, segment.delta1_certified, len(segment.entries)
                if delta1 is not None and delta1 < result.value:
                    logger.warning(f"{table.group_name} {label}: delta1 {delta1:.6f} is below the lower bound {result.value:.6f}")

        rows.append(
            ReportRow(
                char_label=label,
                degree=int(chi.degree),
                constituents=int(inner_product(table, chi, chi)),
                check=extremes.check,
                hat=extremes.hat,
                bound=result.value,
                tag=result.tag,
                conj_label=result.conj_label,
                beta=exponent.beta,
                beta_mode=exponent.mode,
                tw_raised_beta=exponent.mode == ExponentMode.ALPHA_TW and not exponent.equal,
                cutoff=cutoff,
                delta1=delta1,
                delta1_certified=certified,
                segment_size=size,
            )
        )
    return rows


def _degree_cell(row: ReportRow) -> str:
    """
    Degree of one absolutely irreducible constituent, superscripted by the number of
    conjugate constituents when chi is a sum of several, so C4's rational 2 prints as 1^2
    """
    if row.constituents == 1:
        return str(row.degree)
    return f"{Fraction(row.degree, row.constituents)}^{row.constituents}"


def row_cells(row: ReportRow, rounding: Rounding) -> list[str]:
    degree = _degree_cell(row)
    delta1 = format_value(row.delta1, rounding)
    if row.delta1 is not None and not row.delta1_certified:
        delta1 += "?"
    return [
        row.char_label,
        degree,
        f"[{-row.check},{row.hat}]",
        format_value(row.bound, rounding),
        row.tag,
        row.conj_label,
        format_value(float(row.beta), Rounding.NEAREST) + ("*" if row.tw_raised_beta else ""),
        str(row.beta),
        format_value(row.cutoff, rounding),
        delta1,
        "-" if row.segment_size is None else str(row.segment_size),
    ]


def render_report(rows: list[ReportRow], output_format: OutputFormat = OutputFormat.TSV, rounding: Rounding = Rounding.FLOOR) -> str:
    """Render rows as TSV or as a space-aligned table"""
    table = [list(COLUMNS), *(row_cells(row, rounding) for row in rows)]
    if output_format == OutputFormat.TSV:
        return "\n".join("\t".join(cells) for cells in table) + "\n"
    widths = [max(len(line[i]) for line in table) for i in range(len(COLUMNS))]
    return "\n".join("  ".join(cell.ljust(width) for cell, width in zip(line, widths, strict=True)).rstrip() for line in table) + "\n"
