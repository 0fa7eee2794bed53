"""
Text format for forbidden-label tables.

One entry per line: ``a,b,c : a,c`` (subset, then its label; the label may be
empty). Optional directives ``@ground <labels...>`` and ``@d <int>`` make a
table file self-contained. '#' starts a comment.
"""

import json
from typing import Optional

from ..errors import InputError, ParseError
from ..sets.models import OrderedGround
from .models import ForbiddenLabelTable


def _split_labels(text: str):
    return tuple(part.strip() for part in text.split(",") if part.strip())


def parse_label_table(text: str, ground: Optional[OrderedGround] = None,
                      d: Optional[int] = None) -> ForbiddenLabelTable:
    """Parse a table; ``ground``/``d`` fill in for missing directives."""
    entries = {}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@ground"):
            try:
                ground = OrderedGround(tuple(line[len("@ground"):].split()))
            except InputError as e:
                raise ParseError(str(e), lineno) from e
            continue
        if line.startswith("@d"):
            try:
                d = int(line[len("@d"):].strip())
            except ValueError:
                raise ParseError(f"malformed directive {line!r}", lineno) from None
            continue
        if line.count(":") != 1:
            raise ParseError(f"expected 'subset : label', got {line!r}", lineno)
        left, right = line.split(":")
        key = _split_labels(left)
        if not key:
            raise ParseError("empty subset", lineno)
        if frozenset(key) in seen:
            raise ParseError(f"duplicate entry for {{{','.join(key)}}}", lineno)
        seen.add(frozenset(key))
        entries[key] = _split_labels(right)

    if ground is None:
        raise InputError("label table has no @ground directive and no ground was given")
    if d is None:
        if not entries:
            raise InputError("cannot infer d from an empty label table; add '@d <int>'")
        d = len(next(iter(entries))) - 1
    return ForbiddenLabelTable(ground, d, entries)


def format_label_table(table: ForbiddenLabelTable) -> str:
    lines = [f"@ground {' '.join(table.ground.labels)}", f"@d {table.d}"]
    for key, label in table.items():
        lines.append(f"{','.join(key)} : {','.join(label)}".rstrip())
    return "\n".join(lines) + "\n"


def parse_label_table_json(text: str) -> ForbiddenLabelTable:
    """Read the JSON mirror emitted by ``ForbiddenLabelTable.to_dict``."""
    try:
        data = json.loads(text)
        ground = OrderedGround.from_iterable(data["ground"])
        entries = {tuple(e["subset"]): tuple(e["label"]) for e in data["entries"]}
        d = int(data["d"])
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from e
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"label table JSON needs 'ground', 'd' and 'entries': {e}") from e
    return ForbiddenLabelTable(ground, d, entries)


def load_label_table(text: str) -> ForbiddenLabelTable:
    if text.lstrip().startswith("{"):
        return parse_label_table_json(text)
    return parse_label_table(text)
