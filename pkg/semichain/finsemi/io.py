"""
Reading and writing Cayley tables.

Text format: the first line holds n, the next n lines hold n whitespace
separated 0-based indices, and optional trailing `# label` lines name the
elements in order. JSON format: `{"size": n, "table": [[...]], "labels": [...]}`.
"""

import json
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ValidationError, model_validator

from ..utils.errors import TableValidationError
from .table import CayleyTable, validate_table


class CayleyTableModel(BaseModel):
    """
    JSON shape of a table. Only the structure is checked here;
    `validate_table` checks ranges and associativity.
    """

    size: int
    table: List[List[int]]
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def check_shape(self) -> "CayleyTableModel":
        if self.size < 1:
            raise ValueError(f"size must be at least 1, got {self.size}")
        if len(self.table) != self.size or any(len(row) != self.size for row in self.table):
            raise ValueError(f"table must have {self.size} rows of {self.size} entries")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(f"expected {self.size} labels, got {len(self.labels)}")
        return self

    def to_table(self) -> CayleyTable:
        flat = [entry for row in self.table for entry in row]
        return validate_table(self.size, flat, self.labels)

    @classmethod
    def from_table(cls, S: CayleyTable) -> "CayleyTableModel":
        return cls(
            size=S.size,
            table=S.product.tolist(),
            labels=list(S.labels) if S.labels is not None else None,
        )


def _parse_text(text: str) -> CayleyTable:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise TableValidationError("empty table source")

    try:
        size = int(lines[0])
    except ValueError as e:
        raise TableValidationError(f"first line must be the table size, got `{lines[0]}`") from e

    rows = lines[1 : size + 1]
    if len(rows) != size:
        raise TableValidationError(f"expected {size} table rows, got {len(rows)}")
    try:
        flat = [int(token) for row in rows for token in row.split()]
    except ValueError as e:
        raise TableValidationError("table rows must hold integers only") from e
    for index, row in enumerate(rows):
        if len(row.split()) != size:
            raise TableValidationError(f"row {index} must hold {size} entries")

    trailing = lines[size + 1 :]
    labels = None
    if trailing:
        if not all(line.startswith("#") for line in trailing):
            raise TableValidationError("only `# label` lines may follow the table")
        labels = [line[1:].strip() for line in trailing]
    return validate_table(size, flat, labels)


def loads_table(text: str) -> CayleyTable:
    """
    Parse a table from either the text or the JSON format.

    Raises:
        TableValidationError: malformed input; NonAssociative carries the
            witness triple in its message.
    """
    if text.lstrip().startswith("{"):
        try:
            model = CayleyTableModel.model_validate_json(text)
        except ValidationError as e:
            raise TableValidationError(f"invalid JSON table: {e}") from e
        return model.to_table()
    return _parse_text(text)


def load_table(path: Union[str, Path]) -> CayleyTable:
    table = loads_table(Path(path).read_text(encoding="utf-8"))
    table.name = Path(path).stem
    return table


def dumps_table(S: CayleyTable, fmt: str = "json") -> str:
    """
    Render a table as JSON (default) or in the text format.
    """
    if fmt == "json":
        return json.dumps(CayleyTableModel.from_table(S).model_dump(exclude_none=True))
    if fmt == "text":
        lines = [str(S.size)]
        lines.extend(" ".join(str(v) for v in row) for row in S.rows)
        if S.labels is not None:
            lines.extend(f"# {label}" for label in S.labels)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format `{fmt}`; use json or text")
