"""
Reference implementations written straight from the definitions.

Nothing here is shared with the engine except the framework primitives:
no subset tables, no memo table, no fast paths. Everything is exponential
and meant only for small frameworks and for cross-checking the engine.
"""
from __future__ import annotations

from typing import Iterator

from python_af_semantics.models.framework import ArgSet
from python_af_semantics.models.framework import attackers_of
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import is_admissible
from python_af_semantics.models.framework import is_conflict_free
from python_af_semantics.models.framework import reduct
from python_af_semantics.models.framework import restrict
from python_af_semantics.models.framework import SizeLimitExceededError
from python_af_semantics.utils.config import load_config


def _check_size(framework: Framework, max_args: int | None) -> None:
    limit = (
        max_args if max_args is not None
        else load_config()['oracle_max_args']
    )
    if framework.arg_count > limit:
        raise SizeLimitExceededError(framework.arg_count, limit, 'oracle')


def _all_subsets(framework: Framework) -> Iterator[ArgSet]:
    for bits in range(1 << framework.arg_count):
        yield ArgSet(bits, framework.arg_count)


def oracle_geq_cog(
    framework: Framework, extension: ArgSet, other: ArgSet,
) -> bool:
    return is_admissible(restrict(framework, extension | other), extension)


def oracle_gt_cog(
    framework: Framework, extension: ArgSet, other: ArgSet,
) -> bool:
    return oracle_geq_cog(framework, extension, other) and not (
        oracle_geq_cog(framework, other, extension)
    )


def oracle_is_cogent(
    framework: Framework,
    extension: ArgSet,
    max_args: int | None = None,
) -> bool:
    _check_size(framework, max_args)
    return not any(
        oracle_gt_cog(framework, challenger, extension)
        for challenger in _all_subsets(framework)
    )


def _weakly_admissible(framework: Framework, extension: ArgSet) -> bool:
    if not is_conflict_free(framework, extension):
        return False
    attackers = attackers_of(framework, extension)
    if not attackers:
        return True
    sub = reduct(framework, extension)
    survivors = set(sub.labels)
    for attacker in attackers:
        label = framework.labels[attacker]
        if label in survivors and _in_some_weak_set(
            sub, sub.index_of(label),
        ):
            return False
    return True


def _in_some_weak_set(framework: Framework, index: int) -> bool:
    return any(
        index in candidate and _weakly_admissible(framework, candidate)
        for candidate in _all_subsets(framework)
    )


def oracle_is_weakly_admissible(
    framework: Framework,
    extension: ArgSet,
    max_args: int | None = None,
) -> bool:
    _check_size(framework, max_args)
    framework.check_set(extension)
    return _weakly_admissible(framework, extension)


def oracle_enumerate_cogent(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    return ExtensionSet.of(
        (
            candidate for candidate in _all_subsets(framework)
            if oracle_is_cogent(framework, candidate, max_args)
        ),
        framework.arg_count,
    )


def oracle_enumerate_weakly_admissible(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    return ExtensionSet.of(
        (
            candidate for candidate in _all_subsets(framework)
            if oracle_is_weakly_admissible(framework, candidate, max_args)
        ),
        framework.arg_count,
    )
