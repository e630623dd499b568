"""
Parser for GCT character-table files
"""

from pathlib import Path
from typing import Any

from loguru import logger
from sympy import isprime

from app.characters.model import CharacterTable, ClassFunction, ConjClass, LabeledCharacter
from app.characters.service import validate_table
from app.config import get_settings
from app.exceptions import TableFormatError

HEADER_KEYWORDS = ("GROUP", "ORDER", "TW", "COMPLETE")


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise TableFormatError(f"{what} must be an integer, got '{token}'", line) from e


def _flag(token: str, line: int, what: str) -> bool:
    if token not in ("0", "1"):
        raise TableFormatError(f"{what} must be 0 or 1, got '{token}'", line)
    return token == "1"


def parse_table(text: str) -> CharacterTable:
    """
    Parse a GCT character-table file

    Args:
        text: File contents

    Returns:
        CharacterTable with all invariants verified; class and character order preserved

    Raises:
        TableFormatError: On a syntax error, with the offending line number
        TableValidationError: If the parsed table violates an invariant
    """
    header: dict[str, str] = {}
    classes: list[dict[str, Any]] = []
    powers: dict[str, dict[int, str]] = {}
    rows: dict[str, list[tuple[str, list[int]]]] = {"CHAR": [], "PERM": []}

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if keyword in HEADER_KEYWORDS:
            if len(args) != 1:
                raise TableFormatError(f"{keyword} takes exactly one argument", number)
            if keyword in header:
                raise TableFormatError(f"duplicate {keyword}", number)
            header[keyword] = args[0]
            if keyword == "ORDER":
                _int(args[0], number, "ORDER")
            elif keyword in ("TW", "COMPLETE"):
                _flag(args[0], number, keyword)
        elif keyword == "CLASS":
            if len(args) != 3:
                raise TableFormatError("CLASS needs <label> <element-order> <size>", number)
            if any(c["label"] == args[0] for c in classes):
                raise TableFormatError(f"duplicate class label {args[0]}", number)
            if rows["CHAR"] or rows["PERM"]:
                raise TableFormatError("CLASS lines must precede CHAR and PERM lines", number)
            classes.append({"label": args[0], "element_order": _int(args[1], number, "element order"), "size": _int(args[2], number, "class size")})
        elif keyword == "POWER":
            if len(args) != 3:
                raise TableFormatError("POWER needs <class-label> <prime> <class-label>", number)
            prime = _int(args[1], number, "prime")
            if not isprime(prime):
                raise TableFormatError(f"POWER {args[0]} needs a prime, got {prime}", number)
            if prime in powers.get(args[0], {}):
                raise TableFormatError(f"duplicate POWER {args[0]} {prime}", number)
            powers.setdefault(args[0], {})[prime] = args[2]
        elif keyword in rows:
            if len(args) < 2:
                raise TableFormatError(f"{keyword} needs a label and values", number)
            if any(label == args[0] for label, _ in rows[keyword]):
                raise TableFormatError(f"duplicate {keyword} label {args[0]}", number)
            values = [_int(token, number, f"{keyword} {args[0]} value") for token in args[1:]]
            if len(values) != len(classes):
                raise TableFormatError(f"{keyword} {args[0]} has {len(values)} values, expected {len(classes)}", number)
            rows[keyword].append((args[0], values))
        else:
            raise TableFormatError(f"unknown keyword '{keyword}'", number)

    for keyword in ("GROUP", "ORDER"):
        if keyword not in header:
            raise TableFormatError(f"missing {keyword} line")
    if not classes:
        raise TableFormatError("no CLASS lines")
    known = {c["label"] for c in classes}
    for label in powers:
        if label not in known:
            raise TableFormatError(f"POWER refers to unknown class {label}")

    table = CharacterTable(
        group_name=header["GROUP"],
        group_order=int(header["ORDER"]),
        tame_wild=header.get("TW", "0") == "1",
        complete=header.get("COMPLETE", "1") == "1",
        classes=tuple(ConjClass(power_map=powers.get(c["label"], {}), **c) for c in classes),
        chars=tuple(LabeledCharacter(label=label, values=ClassFunction.of(values)) for label, values in rows["CHAR"]),
        perm_chars=tuple(LabeledCharacter(label=label, values=ClassFunction.of(values)) for label, values in rows["PERM"]),
    )
    validate_table(table)
    logger.debug(f"Parsed {table.group_name}: {table.class_count} classes, {len(table.chars)} characters, {len(table.perm_chars)} permutation characters")
    return table


def load_table(path: str | Path) -> CharacterTable:
    """Read and parse a GCT file from disk"""
    return parse_table(Path(path).read_text(encoding="utf-8"))


def resolve_table_path(name: str) -> Path:
    """
    Resolve a table argument to a file

    Accepts a path to an existing file or the name of a bundled table ("s5", "S5", "s5.gct").
    """
    path = Path(name)
    if path.exists():
        return path
    stem = path.name.lower().removesuffix(".gct")
    bundled = get_settings().DATA_DIR / f"{stem}.gct"
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"No such character table: {name}")


def load_bundled(name: str) -> CharacterTable:
    """Load one of the bundled tables by group name"""
    return load_table(resolve_table_path(name))
