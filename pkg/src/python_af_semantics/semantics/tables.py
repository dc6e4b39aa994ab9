"""Per-subset attack tables shared by the enumerators."""
from __future__ import annotations

import functools
import logging

import numpy as np
from python_af_semantics.models.framework import Framework

logger = logging.getLogger(__name__)


class SubsetTables:
    """
    Attack summaries for all 2^n subsets of a framework, indexed by bits.

    ``attackers[m]`` is the set attacking ``m``, ``targets[m]`` the set
    ``m`` attacks, and ``conflict_free[m]`` whether ``m`` is conflict-free.
    """

    def __init__(self, framework: Framework):
        n = framework.arg_count
        size = 1 << n
        attackers = np.zeros(size, dtype=np.uint64)
        targets = np.zeros(size, dtype=np.uint64)

        # Subsets with highest bit i are the subsets below 2^i plus argument i.
        for i in range(n):
            low, high = 1 << i, 2 << i
            attackers[low:high] = attackers[:low] | np.uint64(
                framework.predecessors[i],
            )
            targets[low:high] = targets[:low] | np.uint64(
                framework.successors[i],
            )

        self.arg_count = n
        self.subsets = np.arange(size, dtype=np.uint64)
        self.attackers = attackers
        self.targets = targets
        self.conflict_free = (targets & self.subsets) == 0
        logger.debug('Built subset tables for %d arguments', n)

    @functools.cached_property
    def conflict_free_bits(self) -> np.ndarray:
        """Bit-vectors of the conflict-free subsets, ascending."""
        return np.flatnonzero(self.conflict_free).astype(np.uint64)

    def admissible_bits(self) -> np.ndarray:
        undefended = self.attackers & ~self.targets
        return np.flatnonzero(self.conflict_free & (undefended == 0))


@functools.lru_cache(maxsize=32)
def subset_tables(framework: Framework) -> SubsetTables:
    return SubsetTables(framework)
