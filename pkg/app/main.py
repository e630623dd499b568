"""
Command-line entry point for artin-floor
"""

import argparse
import math
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction

from loguru import logger

from app.asymptotics.service import floor_for_profile, profile
from app.auxiliary.bounds import search_bound
from app.auxiliary.model import MethodTag
from app.auxiliary.vertices import enumerate_vertices
from app.characters.parser import load_table, resolve_table_path
from app.characters.service import degree_sum
from app.config import get_settings
from app.exceptions import ArtinFloorError, TableValidationError
from app.kernel.service import asymptotic_floor, big_m
from app.logfire_init import init_logfire
from app.report.model import OutputFormat, Rounding, RunConfig
from app.report.service import build_report, format_value, render_report
from app.tame.service import tame_table
from app.transfer.model import FieldList
from app.transfer.parser import load_field_list
from app.transfer.service import extract_segment, solve_in_perm_basis, transfer_exponent


def _tsv(*cells: object) -> str:
    return "\t".join(str(cell) for cell in cells)


def _methods(value: str) -> list[MethodTag]:
    try:
        return [MethodTag(tag.strip().lower()) for tag in value.split(",") if tag.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"methods must be drawn from {','.join(t.value for t in MethodTag)}") from e


def _labels(value: str) -> list[str]:
    return [label.strip() for label in value.split(",") if label.strip()]


def _field_list(path: str, bound: float | None) -> FieldList:
    if bound is None:
        raise ArtinFloorError("a field list needs --bound")
    return load_field_list(path)


def cmd_validate(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    total = degree_sum(table)
    completeness = "complete" if total == table.group_order else f"incomplete (degree sum {total} of {table.group_order})"
    return _tsv(table.group_name, "ok", f"{table.class_count} classes", f"{len(table.chars)} characters", f"{len(table.perm_chars)} permutation characters", completeness)


def cmd_kernel(config: RunConfig, args: argparse.Namespace) -> str:
    result = big_m(args.n, args.r, args.u, config.tol, profile=args.profile)
    lines = [_tsv("M", f"{result.value:.9f}"), _tsv("log_M", f"{result.log_value:.12f}"), _tsv("argmax_z", f"{result.argmax_z:.6f}")]
    if result.cap_reached:
        lines.append(_tsv("cap_reached", "yes"))
    for z, value in result.profile or []:
        lines.append(_tsv(f"{z:.6f}", f"{value:.12f}"))
    return "\n".join(lines)


def cmd_tame(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    labels = [conj.label for conj in table.classes]
    values = {row.label: row.values for row in (*table.chars, *table.perm_chars)}
    lines = [_tsv("char", *labels, *(f"c_{label}" for label in labels))]
    for row in tame_table(table):
        lines.append(_tsv(row.label, *values[row.label].values, *row.c_tame))
    return "\n".join(lines)


def cmd_vertices(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    vertices = enumerate_vertices(table, config.vertex_cap)
    lines = [_tsv("count", len(vertices))]
    for index, vertex in enumerate(vertices, start=1):
        lines.append(_tsv(f"v{index}", ",".join(str(x) for x in vertex.x), ",".join(str(y) for y in vertex.y)))
    return "\n".join(lines)


def cmd_bound(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    report = search_bound(table, args.char, vertex_cap=config.vertex_cap, conj_label=config.conj_label, methods=config.methods, debug=args.debug)
    lines = [
        _tsv("bound", f"{report.value:.9f}", format_value(report.value, config.rounding)),
        _tsv("tag", report.tag),
        _tsv("source", report.best.source),
        _tsv("conj", report.conj_label),
        _tsv("exponent", report.exponent_used, report.exponent_mode.value),
        _tsv("achievers", ",".join(report.achievers)),
    ]
    lines.extend(_tsv(f"c={label}", f"{value:.9f}") for label, value in report.per_conjugation.items())
    return "\n".join(lines)


def cmd_beta(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    exponent = transfer_exponent(table, args.char)
    return "\n".join(
        [
            _tsv("beta", exponent.beta, format_value(float(exponent.beta), Rounding.NEAREST)),
            _tsv("walp", exponent.walp),
            _tsv("alp", exponent.alp),
            _tsv("mode", exponent.mode.value),
        ]
    )


def cmd_solve(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    sol = solve_in_perm_basis(table, args.char, args.basis)
    return "\n".join(_tsv(label, k) for label, k in sol.coefficients.items())


def cmd_transfer(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    field_list = _field_list(config.inputs[1], args.bound)
    sol = solve_in_perm_basis(table, args.char, ("1", *field_list.uses))
    segment = extract_segment(table, sol, field_list.records, args.bound)
    delta1 = format_value(segment.delta1, config.rounding)
    if segment.delta1 is not None and not segment.delta1_certified:
        delta1 += "?"
    lines = [
        _tsv("beta", segment.exponent.beta, segment.exponent.mode.value),
        _tsv("cutoff", format_value(segment.cutoff, config.rounding)),
        _tsv("delta1", delta1),
        _tsv("certified", "yes" if segment.certified else "no"),
    ]
    if segment.excluded:
        lines.append(_tsv("excluded", ",".join(str(rank) for rank in segment.excluded)))
    lines.extend(_tsv(entry.rank, entry.conductor, f"{entry.root_conductor:.6f}") for entry in segment.entries)
    return "\n".join(lines)


def cmd_floor(config: RunConfig, args: argparse.Namespace) -> str:
    if config.inputs:
        table = load_table(resolve_table_path(config.inputs[0]))
        if args.char is None:
            raise ArtinFloorError("floor on a table needs --char")
        result = floor_for_profile(profile(table, args.char), totally_real=args.totally_real)
        lines = [_tsv("floor", f"{result.value:.9f}", result.hypothesis.value)]
        lines.extend(_tsv(name, "-" if value is None else f"{value:.9f}") for name, value in (("A", result.case_a), ("B", result.case_b)))
        return "\n".join(lines)
    eps = Fraction(1) if args.totally_real else Fraction(args.eps)
    value = asymptotic_floor(eps)
    return "\n".join([_tsv("floor", f"{value:.9f}"), _tsv("sqrt", f"{math.sqrt(value):.9f}")])


def cmd_report(config: RunConfig, args: argparse.Namespace) -> str:
    table = load_table(resolve_table_path(config.inputs[0]))
    field_list = _field_list(config.inputs[1], args.bound) if len(config.inputs) > 1 else None
    rows = build_report(table, args.bound, field_list, vertex_cap=config.vertex_cap, methods=config.methods)
    return render_report(rows, config.output_format, config.rounding).rstrip("\n")


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace], str]] = {
    "validate": cmd_validate,
    "kernel": cmd_kernel,
    "tame": cmd_tame,
    "vertices": cmd_vertices,
    "bound": cmd_bound,
    "beta": cmd_beta,
    "solve": cmd_solve,
    "transfer": cmd_transfer,
    "floor": cmd_floor,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artin-floor", description="Lower bounds for root conductors of Artin L-functions")
    parser.add_argument("--tol", type=float, default=None, help="Quadrature tolerance (default: QUAD_TOL)")
    parser.add_argument("--rounding", choices=[r.value for r in Rounding], default=Rounding.FLOOR.value, help="Rounding of bound cells (default: floor)")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    validate = subparsers.add_parser("validate", help="Validate a character table")
    validate.add_argument("table", help="GCT file or bundled table name")

    kernel = subparsers.add_parser("kernel", help="Evaluate M(n, r, u)")
    kernel.add_argument("--n", type=Fraction, required=True, help="Degree")
    kernel.add_argument("--r", type=Fraction, required=True, help="Signature")
    kernel.add_argument("--u", type=Fraction, default=Fraction(1), help="Multiplicity of the unital character (default: 1)")
    kernel.add_argument("--profile", action="store_true", help="Print the sampled scan")

    tame = subparsers.add_parser("tame", help="Print the tame table")
    tame.add_argument("table", help="GCT file or bundled table name")

    vertices = subparsers.add_parser("vertices", help="Enumerate polytope vertices")
    vertices.add_argument("table", help="GCT file or bundled table name")
    vertices.add_argument("--cap", type=int, default=None, help="Subset-solve cap (default: VERTEX_CAP)")

    bound = subparsers.add_parser("bound", help="Search the best auxiliary bound")
    bound.add_argument("table", help="GCT file or bundled table name")
    bound.add_argument("--char", required=True, help="Character label")
    bound.add_argument("--conj", default=None, help="Restrict complex conjugation to this class")
    bound.add_argument("--methods", type=_methods, default=None, help="Comma-separated method tags from l,s,q,g,p,v")
    bound.add_argument("--cap", type=int, default=None, help="Subset-solve cap (default: VERTEX_CAP)")
    bound.add_argument("--debug", action="store_true", help="Cross-check closed-form constructions")

    beta = subparsers.add_parser("beta", help="Transfer exponent of a character")
    beta.add_argument("table", help="GCT file or bundled table name")
    beta.add_argument("--char", required=True, help="Character label")

    solve = subparsers.add_parser("solve", help="Express a character in permutation characters")
    solve.add_argument("table", help="GCT file or bundled table name")
    solve.add_argument("--char", required=True, help="Character label")
    solve.add_argument("--basis", type=_labels, required=True, help="Comma-separated permutation-character labels, 1 for the unital character")

    transfer = subparsers.add_parser("transfer", help="Initial segment from a field list")
    transfer.add_argument("table", help="GCT file or bundled table name")
    transfer.add_argument("fields", help="GFL field list")
    transfer.add_argument("--char", required=True, help="Character label")
    transfer.add_argument("--bound", type=float, required=True, help="Galois root discriminant bound the list is complete up to")

    floor = subparsers.add_parser("floor", help="Asymptotic floors")
    floor.add_argument("table", nargs="?", default=None, help="GCT file or bundled table name, for a profile floor")
    floor.add_argument("--char", default=None, help="Character label, with a table")
    floor.add_argument("--eps", type=Fraction, default=Fraction(0), help="Fraction of real places (default: 0)")
    floor.add_argument("--totally-real", action="store_true", help="Trivial complex conjugation")

    report = subparsers.add_parser("report", help="Per-character summary table")
    report.add_argument("table", help="GCT file or bundled table name")
    report.add_argument("fields", nargs="?", default=None, help="GFL field list complete up to --bound")
    report.add_argument("--bound", type=float, default=None, help="Galois root discriminant bound B")
    report.add_argument("--methods", type=_methods, default=None, help="Comma-separated method tags from l,s,q,g,p,v")
    report.add_argument("--cap", type=int, default=None, help="Subset-solve cap (default: VERTEX_CAP)")
    report.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.TSV.value, help="Output format (default: tsv)")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    inputs = [path for path in (getattr(args, "table", None), getattr(args, "fields", None)) if path is not None]
    return RunConfig(
        subcommand=args.subcommand,
        inputs=inputs,
        char_label=getattr(args, "char", None),
        conj_label=getattr(args, "conj", None),
        methods=getattr(args, "methods", None),
        vertex_cap=getattr(args, "cap", None),
        tol=args.tol,
        output_format=OutputFormat(getattr(args, "format", OutputFormat.TSV.value)),
        rounding=Rounding(args.rounding),
    )


def run(argv: Sequence[str] | None = None) -> int:
    """
    Run one subcommand

    Returns:
        0 on success, 1 when a character table fails validation, 2 on any other data,
        file or usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    settings = get_settings()
    default_tol = settings.QUAD_TOL
    try:
        config = _config(args)
        if config.tol is not None:
            settings.QUAD_TOL = config.tol
        output = COMMANDS[config.subcommand](config, args)
    except TableValidationError as e:
        logger.error(f"{args.subcommand}: {e}")
        return 1
    except (ValueError, OSError, KeyError) as e:
        logger.error(f"{args.subcommand}: {e}")
        return 2
    finally:
        # --tol applies to this run only
        settings.QUAD_TOL = default_tol
    print(output)
    return 0


def main() -> None:
    init_logfire()
    sys.exit(run())


if __name__ == "__main__":
    main()
