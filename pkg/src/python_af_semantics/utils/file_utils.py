"""File utility functions for reading frameworks and saving reports."""
from __future__ import annotations

import logging
import sys
from pathlib import Path

from python_af_semantics.formats.parsers import FrameworkSyntaxError
from python_af_semantics.formats.parsers import parse_apx
from python_af_semantics.formats.parsers import parse_tgf
from python_af_semantics.models.framework import Framework

logger = logging.getLogger(__name__)

STDIN = '-'
INPUT_FORMATS = ('apx', 'tgf')
_PARSERS = {'apx': parse_apx, 'tgf': parse_tgf}


def ensure_dir(directory: str | Path) -> Path:
    """
    Ensure that a directory exists, creating it if necessary.

    Args:
        directory: Path to the directory.

    Returns:
        Path object for the directory.
    """
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    return path


def detect_input_format(source: str, override: str | None = None) -> str:
    """
    Pick the parser for an input.

    Args:
        source: File path, or ``-`` for stdin.
        override: Explicit format; wins over the file extension.

    Returns:
        ``'apx'`` or ``'tgf'``. Stdin and unknown extensions default to APX.
    """
    if override:
        return override
    suffix = Path(source).suffix.lower().lstrip('.')
    if source != STDIN and suffix in INPUT_FORMATS:
        return suffix
    return 'apx'


def read_text(source: str) -> str:
    """Read a whole file as UTF-8, or stdin for ``-``."""
    if source == STDIN:
        return sys.stdin.read()
    return Path(source).read_bytes().decode('utf-8')


def load_framework(source: str, input_format: str | None = None) -> Framework:
    """
    Read and parse a framework file.

    Args:
        source: File path, or ``-`` for stdin.
        input_format: ``'apx'`` or ``'tgf'``; detected from the extension
            when omitted.

    Returns:
        The parsed framework.

    Raises:
        FrameworkSyntaxError: If the input is not valid UTF-8.
    """
    fmt = detect_input_format(source, input_format)
    logger.info(f'Loading {fmt.upper()} framework from {source}')
    try:
        text = read_text(source)
    except UnicodeDecodeError as e:
        raise _encoding_error(e) from e
    return _PARSERS[fmt](text)


def _encoding_error(error: UnicodeDecodeError) -> FrameworkSyntaxError:
    raw = bytes(error.object)
    line_number = raw[:error.start].count(b'\n') + 1
    line = raw.split(b'\n')[line_number - 1]
    return FrameworkSyntaxError(
        line_number,
        line.decode('utf-8', errors='replace'),
        'not valid UTF-8',
    )


def save_report(text: str, output_path: str | Path) -> str:
    """
    Write a rendered report to a file, creating parent directories.

    Args:
        text: Rendered report.
        output_path: Destination file.

    Returns:
        Path to the saved file.
    """
    path = Path(output_path)
    ensure_dir(path.parent)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text if text.endswith('\n') else f'{text}\n')
    return str(path)
