#!/usr/bin/env python3
"""
SchemeMate - Main Application

This is the main entry point of the command-line tool for building,
verifying and closing coherent configurations and Jordan schemes.

Features:
- WFDF rank-five Jordan schemes and switched schemes from cyclotomic covers
- Exact coherent / Jordan verification with intersection tensors
- Coherent (WL) and Jordan closures, properness test
- Byte-identical JSON / text outputs for shell pipelines

Run this file with a verb:
    python main.py build wfdf --d 2 --out w45.json
    python main.py verify --kind jc w45.json
"""

from __future__ import annotations

import sys

from src.cli import run


def main() -> int:
    """Run the command line and return its exit code."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
