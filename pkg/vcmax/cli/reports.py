"""
Rendering of command results as JSON or TSV.

JSON output is one object carrying ``"schema": 1``. Family-valued results
embed the family mirror (``ground``/``members``) so any command can read them
back. TSV output flattens reports to ``key<TAB>value`` lines and prints
families as .sfam text with the extra fields as '#' comments.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..errors import InputError
from ..sets.io import format_sfam
from ..sets.models import SetFamily

SCHEMA_VERSION = 1


@dataclass
class CommandResult:
    payload: Dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    family: Optional[SetFamily] = None
    text: Optional[str] = None
    # one-line stderr summary when passed is False
    failure: Optional[str] = None


def _json_ready(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_json_ready(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


def render_json(command: str, result: CommandResult) -> str:
    body: Dict[str, Any] = {"schema": SCHEMA_VERSION, "command": command}
    body.update(result.payload)
    if result.family is not None:
        body.update(result.family.to_dict())
    return json.dumps(_json_ready(body), indent=2, ensure_ascii=False) + "\n"


def _flatten(prefix: str, value: Any, rows: List[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, rows)
        return
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            rows.append(f"{prefix}\t{','.join('' if v is None else str(v) for v in value)}")
        else:
            for i, v in enumerate(value):
                _flatten(f"{prefix}.{i}", v, rows)
        return
    if isinstance(value, bool):
        value = "true" if value else "false"
    rows.append(f"{prefix}\t{'' if value is None else value}")


def render_tsv(command: str, result: CommandResult) -> str:
    if result.text is not None:
        return result.text
    rows: List[str] = []
    _flatten("", {"schema": SCHEMA_VERSION, "command": command, **_json_ready(result.payload)}, rows)
    if result.family is None:
        return "\n".join(rows) + "\n"
    comments = "".join(f"# {row.replace(chr(9), ': ', 1)}\n" for row in rows)
    return comments + format_sfam(result.family)


def render(command: str, result: CommandResult, output_format: str) -> str:
    if output_format == "json":
        return render_json(command, result)
    if output_format == "tsv":
        return render_tsv(command, result)
    raise InputError(f"unknown output format {output_format!r}")
