"""
Logging for vcmax.
Console output goes to stderr so stdout only carries reports.
"""

import logging
import sys
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)-8s [%(name)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
DEFAULT_LEVEL = "INFO"


class StderrHandler(logging.StreamHandler):
    """A stream handler bound to whatever ``sys.stderr`` is at emit time."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


_console_handler: Optional[StderrHandler] = None
_file_handler: Optional[logging.Handler] = None


def _install_console(numeric: int) -> logging.Logger:
    global _console_handler
    root = logging.getLogger("vcmax")
    root.setLevel(numeric)
    root.propagate = False
    if _console_handler is None:
        _console_handler = StderrHandler()
        _console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        root.addHandler(_console_handler)
    _console_handler.setLevel(numeric)
    return root


def configure_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """Configure the vcmax logger with a stderr handler and an optional file handler.

    Level and file default to the loaded configuration, so a bad configuration
    surfaces here as an InputError. Calling it again updates levels without
    stacking handlers.
    """
    global _file_handler
    from .config import get_config

    settings = get_config().logging
    level_name = (level or settings.level).upper()
    numeric = getattr(logging, level_name, logging.INFO)
    log_file = log_file or settings.log_file
    root = _install_console(numeric)

    if log_file and _file_handler is None:
        _file_handler = logging.FileHandler(log_file, encoding="utf-8")
        _file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        root.addHandler(_file_handler)
    if _file_handler is not None:
        _file_handler.setLevel(numeric)


def get_logger(name: str) -> logging.Logger:
    """Return a module logger under the vcmax hierarchy.

    The first call attaches the stderr handler at the default level; the
    configuration is only read by ``configure_logging``.
    """
    if _console_handler is None:
        _install_console(getattr(logging, DEFAULT_LEVEL))
    return logging.getLogger(name)
