"""
output module
The envelope every command returns, its JSON and TSV renderings and export
to a file.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, Field

from .logging import get_logger

logger = get_logger(__name__)


class OutputEnvelope(BaseModel):
    """
    The outcome of one command.

    `diagnostics` are structured notes (e.g. cells where a recomputed table
    differs from print); they never change the exit status unless the
    command runs in strict mode.
    """

    command: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    diagnostics: List[Dict[str, Any]] = Field(default_factory=list)
    timing_millis: int = Field(default=0, ge=0)
    exec_info: List[Dict[str, Any]] = Field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2)

    def to_tsv(self) -> str:
        """
        Tab separated rendering: a table report prints its own rows, a
        flat result prints one `key<TAB>value` line per field.
        """
        result = self.result
        if isinstance(result, dict) and "columns" in result and "rows" in result:
            lines = ["\t".join(result["columns"])]
            lines.extend("\t".join(row) for row in result["rows"])
        elif isinstance(result, dict):
            lines = [f"{key}\t{_flat(value)}" for key, value in result.items()]
        else:
            lines = [_flat(result)]
        for note in self.diagnostics:
            lines.append("# " + "\t".join(f"{key}={value}" for key, value in note.items()))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "tsv":
            return self.to_tsv()
        raise ValueError(f"format must be 'json' or 'tsv', got '{fmt}'")


def _flat(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def export_envelope(
    envelope: OutputEnvelope, filename: Union[str, Path], fmt: str = "json"
) -> None:
    """
    Write an envelope to a file.

    :param envelope: the command outcome
    :param filename: Name of the file to write
    :param fmt: "json" or "tsv"
    """
    Path(filename).write_text(envelope.render(fmt), encoding="utf-8")
    logger.info(f"Envelope exported to {filename}")
