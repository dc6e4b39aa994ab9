"""Parsers for the APX and TGF framework formats."""
from __future__ import annotations

import logging
import re

from python_af_semantics.models.framework import build_framework
from python_af_semantics.models.framework import DuplicateLabelError
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import FrameworkError
from python_af_semantics.models.framework import UnknownLabelError

logger = logging.getLogger(__name__)

_NAME = r'[A-Za-z0-9_]+'
_NAME_RE = re.compile(_NAME)
_APX_ARG = re.compile(rf'^arg\s*\(\s*({_NAME})\s*\)\s*\.$')
_APX_ATT = re.compile(rf'^att\s*\(\s*({_NAME})\s*,\s*({_NAME})\s*\)\s*\.$')


class FrameworkSyntaxError(FrameworkError):
    """Raised for a line the grammar does not accept."""

    def __init__(self, line_number: int, text: str, reason: str = ''):
        self.line_number = line_number
        self.text = text
        detail = f': {reason}' if reason else ''
        super().__init__(
            f'Syntax error on line {line_number}{detail}: {text!r}',
        )


class MissingSeparatorError(FrameworkSyntaxError):
    """Raised when TGF input has no '#' line between nodes and edges."""

    def __init__(self, line_count: int):
        super().__init__(
            line_count, '', "missing '#' separator between nodes and edges",
        )


def parse_apx(text: str) -> Framework:
    """
    Parse ``arg(NAME).`` / ``att(NAME,NAME).`` lines.

    Blank lines and lines starting with ``%`` are skipped. Arguments may be
    declared after the attacks that use them.

    Raises:
        FrameworkSyntaxError: On a line matching neither statement.
        DuplicateLabelError: If an argument is declared twice.
        UnknownLabelError: If an attack names an undeclared argument.
    """
    labels: list[str] = []
    attacks: list[tuple[str, str]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('%'):
            continue
        match = _APX_ARG.match(line)
        if match:
            labels.append(match.group(1))
            continue
        match = _APX_ATT.match(line)
        if match:
            attacks.append((match.group(1), match.group(2)))
            continue
        raise FrameworkSyntaxError(line_number, raw)

    framework = build_framework(labels, attacks)
    logger.debug(
        'Parsed APX framework: %d arguments, %d attacks',
        framework.arg_count, len(framework.attacks),
    )
    return framework


def parse_tgf(text: str) -> Framework:
    """
    Parse Trivial Graph Format: ``ID [LABEL]`` node lines, a ``#`` line,
    then ``SRC DST`` edge lines referring to node IDs.

    A node without a label is labelled by its ID. Blank lines are skipped.
    IDs and labels use the same characters as APX names.

    Raises:
        MissingSeparatorError: If no ``#`` line is present.
        FrameworkSyntaxError: On a malformed node or edge line.
        DuplicateLabelError: If a node ID or label repeats.
        UnknownLabelError: If an edge names an undeclared node ID.
    """
    lines = text.splitlines()
    separator = next(
        (i for i, line in enumerate(lines) if line.strip() == '#'), None,
    )
    if separator is None:
        raise MissingSeparatorError(len(lines))

    node_labels: dict[str, str] = {}
    for line_number, raw in enumerate(lines[:separator], start=1):
        parts = raw.strip().split(maxsplit=1)
        if not parts:
            continue
        if not all(_NAME_RE.fullmatch(part) for part in parts):
            raise FrameworkSyntaxError(
                line_number, raw, 'node IDs and labels must match [A-Za-z0-9_]+',
            )
        node_id, label = parts[0], parts[-1]
        if node_id in node_labels:
            raise DuplicateLabelError(node_id)
        node_labels[node_id] = label

    edges: list[tuple[str, str]] = []
    for line_number, raw in enumerate(
        lines[separator + 1:], start=separator + 2,
    ):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise FrameworkSyntaxError(
                line_number, raw, 'edges need exactly a source and a target',
            )
        for node_id in parts:
            if node_id not in node_labels:
                raise UnknownLabelError(node_id)
        edges.append((node_labels[parts[0]], node_labels[parts[1]]))

    framework = build_framework(list(node_labels.values()), edges)
    logger.debug(
        'Parsed TGF framework: %d arguments, %d attacks',
        framework.arg_count, len(framework.attacks),
    )
    return framework
