"""Extension enumeration, the cogency order and weak admissibility."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np
from python_af_semantics.models.framework import ArgSet
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import FrameworkError
from python_af_semantics.models.framework import SizeLimitExceededError
from python_af_semantics.models.framework import union_of_masks
from python_af_semantics.semantics.tables import subset_tables
from python_af_semantics.semantics.tables import SubsetTables
from python_af_semantics.utils.config import load_config

logger = logging.getLogger(__name__)


class Semantics(str, Enum):
    """Semantics the solver can enumerate."""

    CONFLICT_FREE = 'conflict-free'
    ADMISSIBLE = 'admissible'
    COGENT = 'cogent'
    WEAK_ADMISSIBLE = 'weak-admissible'

    def __str__(self) -> str:
        return self.value


def check_size(
    framework: Framework,
    max_args: int | None = None,
    semantics: Semantics | str | None = None,
) -> None:
    """
    Refuse frameworks larger than the configured ceiling.

    Raises:
        SizeLimitExceededError: If ``framework`` has too many arguments.
    """
    limit = max_args if max_args is not None else load_config()['max_args']
    if framework.arg_count > limit:
        raise SizeLimitExceededError(
            framework.arg_count, limit,
            str(semantics) if semantics else None,
        )


def _submasks(region: int) -> Iterator[int]:
    sub = region
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & region


def enumerate_conflict_free(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    check_size(framework, max_args, Semantics.CONFLICT_FREE)
    tables = subset_tables(framework)
    return ExtensionSet.from_bits(
        tables.conflict_free_bits.tolist(), framework.arg_count,
    )


def enumerate_admissible(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    check_size(framework, max_args, Semantics.ADMISSIBLE)
    tables = subset_tables(framework)
    return ExtensionSet.from_bits(
        tables.admissible_bits().tolist(), framework.arg_count,
    )


def geq_cog(framework: Framework, extension: ArgSet, other: ArgSet) -> bool:
    """
    Whether ``extension`` is at least as cogent as ``other``.

    That is, ``extension`` is admissible in the framework restricted to
    ``extension | other``. In the restriction ``extension`` keeps every
    attack into the scope and loses every attacker outside it, so the test
    reduces to bit arithmetic on the unrestricted framework.
    """
    framework.check_set(extension)
    framework.check_set(other)
    scope = extension.bits | other.bits
    plus = union_of_masks(framework.successors, extension.bits)
    if plus & extension.bits:
        return False
    attackers = union_of_masks(framework.predecessors, extension.bits)
    return attackers & scope & ~plus == 0


def gt_cog(framework: Framework, extension: ArgSet, other: ArgSet) -> bool:
    return geq_cog(framework, extension, other) and not geq_cog(
        framework, other, extension,
    )


def _stronger_challengers(
    tables: SubsetTables,
    bits: int,
    skip_conflicting: bool,
) -> np.ndarray:
    """Boolean mask (over ``candidates``) of sets strictly more cogent."""
    if skip_conflicting:
        # A conflicting set is never admissible in any restriction.
        candidates = tables.conflict_free_bits
        candidate_ok = np.ones(len(candidates), dtype=bool)
    else:
        candidates = tables.subsets
        candidate_ok = tables.conflict_free
    index = candidates.astype(np.intp)
    scope = candidates | np.uint64(bits)

    # challenger >=cog extension
    undefended = tables.attackers[index] & scope & ~tables.targets[index]
    challenger_wins = candidate_ok & (undefended == 0)

    # not extension >=cog challenger
    own_targets = int(tables.targets[bits])
    if own_targets & bits:
        return challenger_wins
    open_attackers = int(tables.attackers[bits]) & ~own_targets
    extension_loses = (scope & np.uint64(open_attackers)) != 0
    return challenger_wins & extension_loses


def is_cogent(
    framework: Framework,
    extension: ArgSet,
    max_args: int | None = None,
    skip_conflicting: bool = True,
) -> bool:
    """
    Whether no subset of the arguments is strictly more cogent.

    Challengers range over every subset; with ``skip_conflicting`` the
    conflicting ones are left out, which never changes the answer.
    """
    framework.check_set(extension)
    check_size(framework, max_args, Semantics.COGENT)
    tables = subset_tables(framework)
    return not _stronger_challengers(
        tables, extension.bits, skip_conflicting,
    ).any()


def enumerate_cogent(
    framework: Framework, max_args: int | None = None,
) -> ExtensionSet:
    check_size(framework, max_args, Semantics.COGENT)
    tables = subset_tables(framework)
    # The empty set is strictly more cogent than any conflicting set.
    cogent = [
        bits
        for bits in tables.conflict_free_bits.tolist()
        if not _stronger_challengers(tables, bits, True).any()
    ]
    logger.debug(
        'Found %d cogent sets among %d conflict-free sets',
        len(cogent), len(tables.conflict_free_bits),
    )
    return ExtensionSet.from_bits(cogent, framework.arg_count)


@dataclass(frozen=True)
class MemoEntry:
    """Weakly admissible sets of one induced subframework."""

    extensions: tuple[int, ...]
    union: int


class MemoTable:
    """
    Weakly admissible sets per induced subframework of a root framework.

    Keys are bit-vectors over the root's arguments. Every reduct, and every
    reduct of a reduct, is the subframework induced by such a key, so one
    table serves a whole call tree. Not thread-safe.
    """

    def __init__(self, framework: Framework):
        self.framework = framework
        self.hits = 0
        self._entries: dict[int, MemoEntry] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, region: object) -> bool:
        return region in self._entries

    def regions(self) -> list[int]:
        """Cached region keys, in insertion order."""
        return list(self._entries)

    def entry(self, region: int) -> MemoEntry:
        """Weakly admissible sets of the subframework induced by ``region``."""
        cached = self._entries.get(region)
        if cached is not None:
            self.hits += 1
            return cached

        found = [
            candidate
            for candidate in _submasks(region)
            if self.is_weak_in(region, candidate)
        ]
        found.sort(key=lambda bits: (bits.bit_count(), bits))
        union = 0
        for bits in found:
            union |= bits
        entry = MemoEntry(tuple(found), union)
        self._entries[region] = entry
        return entry

    def is_weak_in(self, region: int, candidate: int) -> bool:
        """Whether ``candidate`` is weakly admissible inside ``region``."""
        successors = self.framework.successors
        targets = union_of_masks(successors, candidate) & region
        if targets & candidate:
            return False
        attackers = union_of_masks(
            self.framework.predecessors, candidate,
        ) & region
        if not attackers:
            return True
        # Non-empty candidate, so the reduct is strictly smaller.
        remaining = region & ~(candidate | targets)
        return attackers & self.entry(remaining).union == 0

    def extensions(self, region: int) -> ExtensionSet:
        """The entry for ``region`` as sets indexed against the root."""
        return ExtensionSet.from_bits(
            self.entry(region).extensions, self.framework.arg_count,
        )


def _memo_for(framework: Framework, memo: MemoTable | None) -> MemoTable:
    if memo is None:
        return MemoTable(framework)
    if memo.framework != framework:
        raise FrameworkError('MemoTable belongs to a different framework')
    return memo


def is_weakly_admissible(
    framework: Framework,
    extension: ArgSet,
    memo: MemoTable | None = None,
) -> bool:
    """
    Conflict-free, and no attacker lies in a weakly admissible set of the
    reduct by ``extension``.
    """
    framework.check_set(extension)
    memo = _memo_for(framework, memo)
    return memo.is_weak_in(framework.full_mask, extension.bits)


def enumerate_weakly_admissible(
    framework: Framework,
    max_args: int | None = None,
    memo: MemoTable | None = None,
) -> ExtensionSet:
    check_size(framework, max_args, Semantics.WEAK_ADMISSIBLE)
    memo = _memo_for(framework, memo)
    extensions = memo.extensions(framework.full_mask)
    logger.debug(
        'Weak admissibility: %d sets, %d memo entries, %d hits',
        len(extensions), len(memo), memo.hits,
    )
    return extensions


def weak_union(
    framework: Framework,
    max_args: int | None = None,
    memo: MemoTable | None = None,
) -> ArgSet:
    """Union of all weakly admissible sets."""
    check_size(framework, max_args, Semantics.WEAK_ADMISSIBLE)
    memo = _memo_for(framework, memo)
    return ArgSet(memo.entry(framework.full_mask).union, framework.arg_count)


def maximal_by_inclusion(sets: ExtensionSet) -> ExtensionSet:
    """The members not strictly contained in another member."""
    members = [member.bits for member in sets]
    maximal = [
        bits
        for bits in members
        if not any(
            other != bits and bits & ~other == 0 for other in members
        )
    ]
    return ExtensionSet.from_bits(maximal, sets.width)


def enumerate_extensions(
    framework: Framework,
    semantics: Semantics | str,
    max_args: int | None = None,
) -> ExtensionSet:
    """Enumerate the extensions of ``framework`` under ``semantics``."""
    semantics = Semantics(semantics)
    enumerators = {
        Semantics.CONFLICT_FREE: enumerate_conflict_free,
        Semantics.ADMISSIBLE: enumerate_admissible,
        Semantics.COGENT: enumerate_cogent,
        Semantics.WEAK_ADMISSIBLE: enumerate_weakly_admissible,
    }
    return enumerators[semantics](framework, max_args=max_args)
