"""Checks of the cogency/weak-admissibility relationship and sweeps."""
from __future__ import annotations

from python_af_semantics.harness.checks import check_defense_lemma
from python_af_semantics.harness.checks import check_framework
from python_af_semantics.harness.checks import check_inclusion_theorem
from python_af_semantics.harness.checks import check_oracle_agreement
from python_af_semantics.harness.checks import compare_semantics
from python_af_semantics.harness.checks import find_strictness_witnesses
from python_af_semantics.harness.report import render_report
from python_af_semantics.harness.report import Report
from python_af_semantics.harness.report import Violation
from python_af_semantics.harness.sweep import exhaustive_sweep
from python_af_semantics.harness.sweep import random_sweep
from python_af_semantics.harness.sweep import run_sweep
from python_af_semantics.harness.sweep import SweepConfig

__all__ = [
    'check_defense_lemma',
    'check_framework',
    'check_inclusion_theorem',
    'check_oracle_agreement',
    'compare_semantics',
    'exhaustive_sweep',
    'find_strictness_witnesses',
    'random_sweep',
    'render_report',
    'Report',
    'run_sweep',
    'SweepConfig',
    'Violation',
]
