"""Semantics engine and the definition-literal oracle."""
from __future__ import annotations

from python_af_semantics.semantics.engine import enumerate_admissible
from python_af_semantics.semantics.engine import enumerate_cogent
from python_af_semantics.semantics.engine import enumerate_conflict_free
from python_af_semantics.semantics.engine import enumerate_extensions
from python_af_semantics.semantics.engine import enumerate_weakly_admissible
from python_af_semantics.semantics.engine import geq_cog
from python_af_semantics.semantics.engine import gt_cog
from python_af_semantics.semantics.engine import is_cogent
from python_af_semantics.semantics.engine import is_weakly_admissible
from python_af_semantics.semantics.engine import maximal_by_inclusion
from python_af_semantics.semantics.engine import MemoTable
from python_af_semantics.semantics.engine import Semantics
from python_af_semantics.semantics.engine import weak_union
from python_af_semantics.semantics.oracle import oracle_enumerate_cogent
from python_af_semantics.semantics.oracle import oracle_enumerate_weakly_admissible
from python_af_semantics.semantics.oracle import oracle_is_cogent
from python_af_semantics.semantics.oracle import oracle_is_weakly_admissible

__all__ = [
    'enumerate_admissible',
    'enumerate_cogent',
    'enumerate_conflict_free',
    'enumerate_extensions',
    'enumerate_weakly_admissible',
    'geq_cog',
    'gt_cog',
    'is_cogent',
    'is_weakly_admissible',
    'maximal_by_inclusion',
    'MemoTable',
    'oracle_enumerate_cogent',
    'oracle_enumerate_weakly_admissible',
    'oracle_is_cogent',
    'oracle_is_weakly_admissible',
    'Semantics',
    'weak_union',
]
