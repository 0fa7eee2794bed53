"""
Text formats for set families: .sfam and its JSON mirror.

.sfam: '#' starts a comment; the first data line lists the ground labels in
order; every further data line is one membership word.
"""

import json
from pathlib import Path
from typing import Union

from ..errors import InputError, ParseError
from .models import OrderedGround, SetFamily


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_sfam(text: str) -> SetFamily:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("missing ground line")
    lineno, header = lines[0]
    try:
        ground = OrderedGround(tuple(header.split()))
    except InputError as e:
        raise ParseError(str(e), lineno) from e
    members = []
    seen = set()
    for lineno, word in lines[1:]:
        if len(word) != ground.n or any(ch not in "01" for ch in word):
            raise ParseError(f"malformed word {word!r} (expected {ground.n} binary digits)", lineno)
        mask = ground.mask_from_word(word)
        if mask in seen:
            raise ParseError(f"duplicate member {word}", lineno)
        seen.add(mask)
        members.append(mask)
    return SetFamily(ground, tuple(members))


def format_sfam(family: SetFamily) -> str:
    lines = [" ".join(family.ground.labels)] + family.words()
    return "\n".join(lines) + "\n"


def parse_family_json(text: str) -> SetFamily:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from e
    if not isinstance(data, dict):
        raise ParseError("family JSON must be an object")
    return SetFamily.from_dict(data)


def parse_family(text: str) -> SetFamily:
    """Parse either format; JSON is recognized by a leading '{'."""
    if text.lstrip().startswith("{"):
        return parse_family_json(text)
    return parse_sfam(text)


def load_family(source: Union[str, Path]) -> SetFamily:
    """Load a family from a path."""
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    return parse_family(text)
