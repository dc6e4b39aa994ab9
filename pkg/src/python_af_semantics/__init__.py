"""Cogent and weakly admissible semantics for argumentation frameworks."""
from __future__ import annotations

__version__ = '0.1.0'
