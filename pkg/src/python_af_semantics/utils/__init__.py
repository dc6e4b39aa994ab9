"""Utility functions for the argumentation solver."""
from __future__ import annotations

from python_af_semantics.utils.config import get_size_limit
from python_af_semantics.utils.config import load_config
from python_af_semantics.utils.file_utils import detect_input_format
from python_af_semantics.utils.file_utils import ensure_dir
from python_af_semantics.utils.file_utils import load_framework
from python_af_semantics.utils.file_utils import read_text
from python_af_semantics.utils.file_utils import save_report

__all__ = [
    'detect_input_format',
    'ensure_dir',
    'get_size_limit',
    'load_config',
    'load_framework',
    'read_text',
    'save_report',
]
