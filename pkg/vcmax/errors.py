"""
Error hierarchy for vcmax.
Every error carries the process exit code the CLI maps it to.
"""

import re
import traceback
from typing import Iterable, Optional, Sequence


class VCMaxError(Exception):
    """Base class for all vcmax errors."""
    exit_code = 2


class InputError(VCMaxError, ValueError):
    """Malformed or inconsistent input (unknown labels, bad words, bad parameters)."""
    exit_code = 2


class ParseError(InputError):
    """A text format could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeCapError(InputError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int, hint: Optional[str] = None):
        self.size = size
        self.cap = cap
        message = f"{what}: size {size} exceeds cap {cap} (raise it with VCMAX_CAP or --cap)"
        if hint:
            message += f"; {hint}"
        super().__init__(message)


class PreconditionError(VCMaxError):
    """An operation requires a d-maximum input and did not get one."""
    exit_code = 2


class NotMaximumError(VCMaxError):
    """A family is not d-maximum on the named subset."""
    exit_code = 1

    def __init__(self, subset: Sequence[str], missing: int):
        self.subset = tuple(subset)
        self.missing = missing
        super().__init__(
            f"not maximum on {{{', '.join(self.subset)}}}: "
            f"{missing} traces missing (expected exactly 1)"
        )


class ConsistencyError(VCMaxError):
    """Two independent computations of the same quantity disagree."""
    exit_code = 1


def error_text(e: Exception) -> str:
    return str(e)


def format_error(e: Exception, with_traceback: bool = False, end_entries: int = 4) -> str:
    """Render an error as a one-line message, optionally with a trimmed traceback.

    Args:
        e: the exception to render
        with_traceback: include the last ``end_entries`` stack frames
        end_entries: number of trailing "File" entries kept

    Returns:
        The formatted message.
    """
    name = type(e).__name__
    message = f"{name}: {error_text(e)}" if error_text(e) else name
    if not with_traceback:
        return message

    lines = "".join(traceback.format_exception(type(e), e, e.__traceback__)).split("\n")
    file_indices = [i for i, line in enumerate(lines) if line.strip().startswith("File ")]
    if len(file_indices) > end_entries:
        skipped = len(file_indices) - end_entries
        lines = [f">>>  {skipped} stack lines skipped <<<"] + lines[file_indices[skipped]:]
    body = "\n".join(line for line in lines if not re.match(r"[\w\.]+Error:\s*", line))
    return f"{body.rstrip()}\n\n{message}"


def exit_code_for(e: BaseException) -> int:
    """Exit status for an exception escaping a CLI command."""
    if isinstance(e, VCMaxError):
        return e.exit_code
    return 2


def truncate_list(items: Iterable[str], limit: int = 5) -> str:
    items = list(items)
    shown = ", ".join(items[:limit])
    if len(items) > limit:
        shown += f", ... ({len(items) - limit} more)"
    return shown
