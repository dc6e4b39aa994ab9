"""Reading and writing frameworks and extension sets."""
from __future__ import annotations

from python_af_semantics.formats.parsers import FrameworkSyntaxError
from python_af_semantics.formats.parsers import MissingSeparatorError
from python_af_semantics.formats.parsers import parse_apx
from python_af_semantics.formats.parsers import parse_tgf
from python_af_semantics.formats.render import render_af
from python_af_semantics.formats.render import render_extensions
from python_af_semantics.formats.render import render_tgf
from python_af_semantics.formats.render import RenderFormat

__all__ = [
    'FrameworkSyntaxError',
    'MissingSeparatorError',
    'parse_apx',
    'parse_tgf',
    'render_af',
    'render_extensions',
    'render_tgf',
    'RenderFormat',
]
