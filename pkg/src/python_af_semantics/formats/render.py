"""Deterministic text and JSON renderings of frameworks and extensions."""
from __future__ import annotations

import json
from enum import Enum
from typing import Any

from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework


class RenderFormat(str, Enum):
    """Output formats for frameworks, extensions and reports."""

    TEXT = 'text'
    JSON = 'json'

    def __str__(self) -> str:
        return self.value


def to_json(data: Any) -> str:
    """Compact UTF-8 JSON without trailing whitespace."""
    return json.dumps(data, ensure_ascii=False, separators=(',', ':'))


def framework_to_dict(framework: Framework) -> dict[str, Any]:
    labels = framework.labels
    return {
        'arguments': list(labels),
        'attacks': [
            [labels[attacker], labels[target]]
            for attacker, target in framework.sorted_attacks()
        ],
    }


def render_apx(framework: Framework) -> str:
    lines = [f'arg({label}).' for label in framework.labels]
    lines += [
        f'att({framework.labels[attacker]},{framework.labels[target]}).'
        for attacker, target in framework.sorted_attacks()
    ]
    return ''.join(f'{line}\n' for line in lines)


def render_tgf(framework: Framework) -> str:
    lines = list(framework.labels) + ['#']
    lines += [
        f'{framework.labels[attacker]} {framework.labels[target]}'
        for attacker, target in framework.sorted_attacks()
    ]
    return ''.join(f'{line}\n' for line in lines)


def render_af(
    framework: Framework,
    fmt: RenderFormat | str = RenderFormat.TEXT,
) -> str:
    """Render a framework as APX text or as JSON."""
    if RenderFormat(fmt) is RenderFormat.JSON:
        return to_json(framework_to_dict(framework))
    return render_apx(framework)


def extensions_to_lists(
    sets: ExtensionSet, framework: Framework,
) -> list[list[str]]:
    return [list(labels) for labels in sets.labels(framework)]


def format_extension(labels: tuple[str, ...] | list[str]) -> str:
    return '{' + ','.join(labels) + '}'


def render_extensions(
    sets: ExtensionSet,
    framework: Framework,
    fmt: RenderFormat | str = RenderFormat.TEXT,
) -> str:
    """
    Render extensions in canonical order.

    Text puts one brace-wrapped extension per line; JSON is a list of
    label lists.
    """
    if RenderFormat(fmt) is RenderFormat.JSON:
        return to_json(extensions_to_lists(sets, framework))
    return ''.join(
        f'{format_extension(labels)}\n' for labels in sets.labels(framework)
    )
