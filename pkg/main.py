#!/usr/bin/env python3
"""
Argumentation Semantics Solver
==============================

Enumerates cogent and weakly admissible extensions of abstract
argumentation frameworks and checks how the two semantics relate.

This script serves as the entry point for the application.
"""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / 'src'))

from python_af_semantics.cli import run_cli  # noqa: E402


if __name__ == '__main__':
    sys.exit(run_cli())
