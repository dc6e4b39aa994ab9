"""Checks relating cogent and weakly admissible extensions."""
from __future__ import annotations

import logging
from typing import Any

from python_af_semantics.harness.report import CLAIM_ADMISSIBLE_COGENT
from python_af_semantics.harness.report import CLAIM_COGENT_CONFLICT_FREE
from python_af_semantics.harness.report import CLAIM_INCLUSION
from python_af_semantics.harness.report import CLAIM_LEMMA
from python_af_semantics.harness.report import CLAIM_ORACLE_COGENT
from python_af_semantics.harness.report import CLAIM_ORACLE_WEAK
from python_af_semantics.harness.report import Report
from python_af_semantics.models.framework import attacks_set
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import is_conflict_free
from python_af_semantics.models.framework import range_closure
from python_af_semantics.semantics.engine import check_size
from python_af_semantics.semantics.engine import enumerate_admissible
from python_af_semantics.semantics.engine import enumerate_cogent
from python_af_semantics.semantics.engine import enumerate_conflict_free
from python_af_semantics.semantics.engine import enumerate_weakly_admissible
from python_af_semantics.semantics.engine import gt_cog
from python_af_semantics.semantics.engine import is_cogent
from python_af_semantics.semantics.engine import is_weakly_admissible
from python_af_semantics.semantics.engine import maximal_by_inclusion
from python_af_semantics.semantics.engine import MemoTable
from python_af_semantics.semantics.oracle import oracle_is_cogent
from python_af_semantics.semantics.oracle import oracle_is_weakly_admissible
from python_af_semantics.utils.config import load_config

logger = logging.getLogger(__name__)


def check_inclusion_theorem(
    framework: Framework,
    max_args: int | None = None,
    memo: MemoTable | None = None,
    source: dict[str, Any] | None = None,
) -> Report:
    """
    Check that every cogent set is weakly admissible.

    Each cogent set missing from the weakly admissible sets becomes a
    witness; none should ever be found.
    """
    cogent = enumerate_cogent(framework, max_args)
    weak = enumerate_weakly_admissible(framework, max_args, memo)
    report = Report(
        framework=framework,
        source=dict(source or {}),
        semantics={'cogent': cogent, 'weak-admissible': weak},
    )
    for extension in cogent.difference(weak):
        report.add_violation(CLAIM_INCLUSION, extension)

    report.summary = {
        'cogent_sets': len(cogent),
        'weak_admissible_sets': len(weak),
        'strictness_witnesses': len(weak.difference(cogent)),
        'inclusion_violations': len(report.violations),
    }
    return report


def find_strictness_witnesses(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    """Weakly admissible sets that are not cogent."""
    weak = enumerate_weakly_admissible(framework, max_args)
    return weak.difference(enumerate_cogent(framework, max_args))


def check_defense_lemma(
    framework: Framework,
    max_args: int | None = None,
    memo: MemoTable | None = None,
    source: dict[str, Any] | None = None,
) -> Report:
    """
    Check that a weakly admissible set of the reduct F^E attacking E is
    strictly more cogent than E, for every conflict-free E.
    """
    check_size(framework, max_args, 'weak-admissible')
    memo = memo if memo is not None else MemoTable(framework)
    report = Report(framework=framework, source=dict(source or {}))

    instances = 0
    for extension in enumerate_conflict_free(framework, max_args):
        _, oplus = range_closure(framework, extension)
        # F^E is the subframework induced by the arguments outside E⊕.
        region = framework.full_mask & ~oplus.bits
        for challenger in memo.extensions(region):
            if not attacks_set(framework, challenger, extension):
                continue
            instances += 1
            if not gt_cog(framework, challenger, extension):
                report.add_violation(CLAIM_LEMMA, extension, challenger)

    report.summary = {
        'lemma_instances': instances,
        'lemma_violations': len(report.violations),
    }
    return report


def check_oracle_agreement(
    framework: Framework,
    max_args: int | None = None,
    oracle_max_args: int | None = None,
    source: dict[str, Any] | None = None,
) -> Report:
    """Compare engine and oracle verdicts on every subset."""
    config = load_config()
    max_args = max_args if max_args is not None else config['max_args']
    if oracle_max_args is None:
        oracle_max_args = config['oracle_max_args']
    report = Report(framework=framework, source=dict(source or {}))
    memo = MemoTable(framework)
    for subset in framework.subsets():
        if is_cogent(framework, subset, max_args) != oracle_is_cogent(
            framework, subset, oracle_max_args,
        ):
            report.add_violation(CLAIM_ORACLE_COGENT, subset)
        if is_weakly_admissible(
            framework, subset, memo,
        ) != oracle_is_weakly_admissible(framework, subset, oracle_max_args):
            report.add_violation(CLAIM_ORACLE_WEAK, subset)

    report.summary = {
        'oracle_subsets': 1 << framework.arg_count,
        'oracle_violations': len(report.violations),
    }
    return report


def compare_semantics(
    framework: Framework, max_args: int | None = None,
) -> Report:
    """
    Compare admissible, cogent and weakly admissible sets side by side.

    Also records witnesses against the chain admissible ⊆ cogent ⊆ weakly
    admissible and against conflict-freeness of cogent sets.
    """
    admissible = enumerate_admissible(framework, max_args)
    cogent = enumerate_cogent(framework, max_args)
    weak = enumerate_weakly_admissible(framework, max_args)
    maximal_cogent = maximal_by_inclusion(cogent)
    maximal_weak = maximal_by_inclusion(weak)

    report = Report(
        framework=framework,
        semantics={
            'admissible': admissible,
            'cogent': cogent,
            'weak-admissible': weak,
            'maximal-admissible': maximal_by_inclusion(admissible),
            'maximal-cogent': maximal_cogent,
            'maximal-weak-admissible': maximal_weak,
        },
    )
    for extension in admissible.difference(cogent):
        report.add_violation(CLAIM_ADMISSIBLE_COGENT, extension)
    for extension in cogent:
        if not is_conflict_free(framework, extension):
            report.add_violation(CLAIM_COGENT_CONFLICT_FREE, extension)
    for extension in cogent.difference(weak):
        report.add_violation(CLAIM_INCLUSION, extension)

    report.summary = {
        'admissible_sets': len(admissible),
        'cogent_sets': len(cogent),
        'weak_admissible_sets': len(weak),
        'strictness_witnesses': len(weak.difference(cogent)),
        'maximal_agreement': maximal_cogent == maximal_weak,
    }
    return report


def check_framework(
    framework: Framework,
    source: dict[str, Any] | None = None,
    with_oracle: bool = False,
    max_args: int | None = None,
    oracle_max_args: int | None = None,
) -> Report:
    """
    Run the inclusion and lemma checks (and optionally the oracle) on one
    framework, sharing a single memo table.
    """
    memo = MemoTable(framework)
    parts = [
        check_inclusion_theorem(framework, max_args, memo, source),
        check_defense_lemma(framework, max_args, memo, source),
    ]
    if with_oracle:
        if oracle_max_args is None:
            oracle_max_args = load_config()['oracle_max_args']
        if framework.arg_count <= oracle_max_args:
            parts.append(
                check_oracle_agreement(
                    framework, max_args, oracle_max_args, source,
                ),
            )
    report = Report.combine(parts)
    for violation in report.violations:
        logger.error('Claim violated: %s', violation.describe())
    return report
