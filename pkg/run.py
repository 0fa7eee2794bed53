#!/usr/bin/env python3
"""
vcmax - maximum VC classes on finite set systems
CLI entry point; see `python3 run.py --help` for the commands
"""

import sys

from vcmax.cli import main

if __name__ == "__main__":
    sys.exit(main())
