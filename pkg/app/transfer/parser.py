"""
Parser for GFL field-list files
"""

from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from app.exceptions import FieldListFormatError
from app.transfer.model import FactoredInteger, FieldList, FieldRecord


def _factored(token: str, line: int) -> FactoredInteger:
    try:
        return FactoredInteger.parse(token)
    except (ValueError, ValidationError) as e:
        raise FieldListFormatError(f"bad discriminant '{token}': {e}", line) from e


def parse_field_list(text: str) -> FieldList:
    """
    Parse a GFL field list

    Args:
        text: File contents

    Returns:
        FieldList with records in file order

    Raises:
        FieldListFormatError: On a syntax error, with the offending line number
    """
    uses: tuple[str, ...] | None = None
    records: list[FieldRecord] = []
    ranks: set[int] = set()

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, args = tokens[0], tokens[1:]

        if keyword == "USES":
            if uses is not None:
                raise FieldListFormatError("duplicate USES line", number)
            if not args or len(set(args)) != len(args):
                raise FieldListFormatError("USES needs distinct permutation-character labels", number)
            uses = tuple(args)
        elif keyword == "FIELD":
            if uses is None:
                raise FieldListFormatError("FIELD before USES", number)
            if len(args) != 2 + len(uses):
                raise FieldListFormatError(f"FIELD needs <rank> <galois-rd> and {len(uses)} discriminants", number)
            try:
                rank, galois_rd = int(args[0]), float(args[1])
            except ValueError as e:
                raise FieldListFormatError(f"bad rank or root discriminant: {e}", number) from e
            if rank in ranks:
                raise FieldListFormatError(f"duplicate rank {rank}", number)
            discs = {label: _factored(token, number) for label, token in zip(uses, args[2:], strict=True)}
            try:
                records.append(FieldRecord(rank=rank, galois_rd=galois_rd, resolvent_discs=discs))
            except ValidationError as e:
                raise FieldListFormatError(str(e), number) from e
            ranks.add(rank)
        else:
            raise FieldListFormatError(f"unknown keyword '{keyword}'", number)

    if uses is None:
        raise FieldListFormatError("missing USES line")
    logger.debug(f"Parsed field list: {len(records)} records over {' '.join(uses)}")
    return FieldList(uses=uses, records=tuple(records))


def load_field_list(path: str | Path) -> FieldList:
    """Read and parse a GFL file from disk"""
    return parse_field_list(Path(path).read_text(encoding="utf-8"))
