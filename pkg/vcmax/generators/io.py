"""
Text formats for point samples and polynomial specifications.

PointSample: first data line is the dimension m, then one point per line as
m rationals separated by whitespace or commas.
PolySpec: one exponent tuple per line; the first line is the fixed term u_0
(it may be marked with a leading '*').
"""

import re
from fractions import Fraction

from ..errors import InputError, ParseError
from .models import PointSample, PolySpec

_SEP = re.compile(r"[\s,()]+")


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _fields(line: str):
    return [f for f in _SEP.split(line) if f]


def parse_point_sample(text: str) -> PointSample:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("missing dimension line")
    lineno, head = lines[0]
    try:
        m = int(head)
    except ValueError:
        raise ParseError(f"dimension must be an integer, got {head!r}", lineno) from None
    points = []
    for lineno, line in lines[1:]:
        fields = _fields(line)
        if len(fields) != m:
            raise ParseError(f"expected {m} coordinates, got {len(fields)}", lineno)
        try:
            points.append(tuple(Fraction(f) for f in fields))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed rational in {line!r}", lineno) from None
    try:
        return PointSample(m, tuple(points))
    except InputError as e:
        raise ParseError(str(e)) from e


def format_point_sample(sample: PointSample) -> str:
    lines = [str(sample.dimension)]
    lines += [" ".join(str(v) for v in p) for p in sample.points]
    return "\n".join(lines) + "\n"


def parse_poly_spec(text: str) -> PolySpec:
    monomials = []
    for lineno, line in _data_lines(text):
        line = line.lstrip("*").strip()
        try:
            monomials.append(tuple(int(f) for f in _fields(line)))
        except ValueError:
            raise ParseError(f"malformed exponent tuple {line!r}", lineno) from None
    try:
        return PolySpec(tuple(monomials))
    except InputError as e:
        raise ParseError(str(e)) from e
