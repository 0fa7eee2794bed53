"""
Text grammar for convex unions.

Comma-separated components ``{p}``, ``(l,r)``, ``[l,r]``, ``(l,r]``, ``[l,r)``
with rational endpoints (``p/q``, integers, decimals) or ``-inf``/``+inf``.
``empty`` (or a blank string) is the empty set.
"""

import re
from fractions import Fraction
from typing import Optional

from ..errors import InputError, ParseError
from .models import Component, ConvexUnion

_COMPONENT = re.compile(
    r"\s*(?:\{\s*(?P<pt>[^{}\s,]+)\s*\}"
    r"|(?P<lb>[\[(])\s*(?P<l>[^,\s]+)\s*,\s*(?P<r>[^\])\s]+)\s*(?P<rb>[\])]))\s*"
)
_EMPTY = {"", "empty", "∅", "{}"}


def _endpoint(text: str, side: str) -> Optional[Fraction]:
    lowered = text.lower()
    if lowered in ("-inf", "-∞"):
        if side != "left":
            raise ParseError("-inf can only be a left endpoint")
        return None
    if lowered in ("+inf", "inf", "+∞", "∞"):
        if side != "right":
            raise ParseError("+inf can only be a right endpoint")
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {text!r}") from None


def parse_convex_union(text: str) -> ConvexUnion:
    text = text.strip()
    if text in _EMPTY:
        return ConvexUnion.empty()
    comps = []
    pos = 0
    while True:
        match = _COMPONENT.match(text, pos)
        if not match:
            raise ParseError(f"cannot parse a component at {text[pos:]!r}")
        if match.group("pt") is not None:
            value = _endpoint(match.group("pt"), "left")
            if value is None:
                raise ParseError("a singleton must be finite")
            comp = Component.point(value)
        else:
            left = _endpoint(match.group("l"), "left")
            right = _endpoint(match.group("r"), "right")
            left_closed = match.group("lb") == "["
            right_closed = match.group("rb") == "]"
            if (left is None and left_closed) or (right is None and right_closed):
                raise ParseError("infinite endpoints must be open")
            try:
                comp = Component(left, right, left_closed, right_closed)
            except InputError as e:
                raise ParseError(str(e)) from e
        comps.append(comp)
        pos = match.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise ParseError(f"expected ',' at {text[pos:]!r}")
        pos += 1
    try:
        return ConvexUnion(tuple(comps))
    except InputError as e:
        raise ParseError(str(e)) from e


def _format_value(value: Optional[Fraction], side: str) -> str:
    if value is None:
        return "-inf" if side == "left" else "+inf"
    return str(value)


def format_convex_union(union: ConvexUnion) -> str:
    if not union.components:
        return "empty"
    parts = []
    for c in union.components:
        if c.is_singleton:
            parts.append(f"{{{c.left}}}")
            continue
        parts.append("{}{},{}{}".format(
            "[" if c.left_closed else "(",
            _format_value(c.left, "left"),
            _format_value(c.right, "right"),
            "]" if c.right_closed else ")",
        ))
    return ",".join(parts)
