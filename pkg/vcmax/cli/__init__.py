"""
Command-line interface: argument parsing, dispatch and report rendering.
"""

from .main import RunConfig, RunOutcome, build_parser, main, run
from .reports import CommandResult, render

__all__ = ['RunConfig', 'RunOutcome', 'CommandResult', 'build_parser', 'main', 'run', 'render']
