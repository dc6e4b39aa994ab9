"""Structured outcomes of claim checks and semantics comparisons."""
from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Iterable

from python_af_semantics.formats.render import format_extension
from python_af_semantics.formats.render import framework_to_dict
from python_af_semantics.formats.render import render_apx
from python_af_semantics.formats.render import RenderFormat
from python_af_semantics.formats.render import to_json
from python_af_semantics.models.framework import ArgSet
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework

# Claim names used in violation witnesses.
CLAIM_INCLUSION = 'cogent-implies-weakly-admissible'
CLAIM_LEMMA = 'weak-attacker-is-strictly-more-cogent'
CLAIM_ADMISSIBLE_COGENT = 'admissible-implies-cogent'
CLAIM_COGENT_CONFLICT_FREE = 'cogent-implies-conflict-free'
CLAIM_ORACLE_COGENT = 'oracle-agrees-on-cogent'
CLAIM_ORACLE_WEAK = 'oracle-agrees-on-weakly-admissible'


@dataclass(frozen=True)
class Violation:
    """
    A witness falsifying a claim.

    Holds the framework as APX text and the sets as label tuples, so the
    claim can be re-checked from the witness alone.
    """

    claim: str
    framework: str
    extension: tuple[str, ...]
    challenger: tuple[str, ...] | None = None
    source: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            'claim': self.claim,
            'framework': self.framework,
            'extension': list(self.extension),
        }
        if self.challenger is not None:
            data['challenger'] = list(self.challenger)
        if self.source:
            data['source'] = self.source
        return data

    def describe(self) -> str:
        text = f'{self.claim}: {format_extension(self.extension)}'
        if self.challenger is not None:
            text += f' vs {format_extension(self.challenger)}'
        framework = ' '.join(self.framework.split())
        return f'{text} in [{framework}]'


@dataclass
class Report:
    """
    Outcome of checks on one framework, or on a whole sweep.

    ``framework`` is None for sweep reports; ``source`` then describes the
    sweep (sizes, master seed), otherwise it may hold the generator config.
    """

    framework: Framework | None = None
    source: dict[str, Any] = field(default_factory=dict)
    semantics: dict[str, ExtensionSet] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add_violation(
        self,
        claim: str,
        extension: ArgSet,
        challenger: ArgSet | None = None,
    ) -> Violation:
        framework = self.framework
        violation = Violation(
            claim=claim,
            framework=render_apx(framework),
            extension=extension.labels(framework),
            challenger=(
                challenger.labels(framework) if challenger is not None
                else None
            ),
            source=dict(self.source) or None,
        )
        self.violations.append(violation)
        return violation

    @classmethod
    def combine(cls, parts: Iterable[Report]) -> Report:
        """Merge reports about the same framework."""
        parts = list(parts)
        combined = cls(
            framework=parts[0].framework if parts else None,
            source=dict(parts[0].source) if parts else {},
        )
        for part in parts:
            combined.semantics.update(part.semantics)
            combined.violations.extend(part.violations)
            combined.summary.update(part.summary)
        return combined

    @classmethod
    def aggregate(
        cls, reports: Iterable[Report], source: dict[str, Any],
    ) -> Report:
        """
        Merge per-framework reports in the given order.

        Numeric counters are summed and flags counted.
        """
        total = cls(source=dict(source))
        frameworks = 0
        for report in reports:
            frameworks += 1
            total.violations.extend(report.violations)
            for key, value in report.summary.items():
                total.summary[key] = total.summary.get(key, 0) + int(value)
        total.summary = {'frameworks': frameworks, **total.summary}
        total.summary['violations'] = len(total.violations)
        return total

    def to_dict(self) -> dict[str, Any]:
        framework: dict[str, Any] = {}
        if self.framework is not None:
            framework.update(framework_to_dict(self.framework))
        if self.source:
            framework['source'] = self.source
        return {
            'framework': framework,
            'semantics': {
                name: [list(labels) for labels in sets.labels(self.framework)]
                for name, sets in self.semantics.items()
            },
            'violations': [v.to_dict() for v in self.violations],
            'summary': self.summary,
        }


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def render_report(
    report: Report, fmt: RenderFormat | str = RenderFormat.TEXT,
) -> str:
    """Render a report as compact JSON or as line-oriented text."""
    if RenderFormat(fmt) is RenderFormat.JSON:
        return to_json(report.to_dict())

    lines = []
    for name, sets in report.semantics.items():
        rendered = ' '.join(
            format_extension(labels) for labels in sets.labels(report.framework)
        )
        lines.append(f'{name}: {rendered}'.rstrip())
    for key, value in report.summary.items():
        lines.append(f'{key}: {_format_value(value)}')
    for violation in report.violations:
        lines.append(f'VIOLATION {violation.describe()}')
    return ''.join(f'{line}\n' for line in lines)
