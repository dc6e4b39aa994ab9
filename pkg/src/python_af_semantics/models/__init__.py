"""Models module containing the framework data structures."""
from __future__ import annotations

from python_af_semantics.models.framework import ArgSet
from python_af_semantics.models.framework import attackers_of
from python_af_semantics.models.framework import attacks_set
from python_af_semantics.models.framework import build_framework
from python_af_semantics.models.framework import DuplicateLabelError
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import FrameworkError
from python_af_semantics.models.framework import is_admissible
from python_af_semantics.models.framework import is_conflict_free
from python_af_semantics.models.framework import lift
from python_af_semantics.models.framework import range_closure
from python_af_semantics.models.framework import reduct
from python_af_semantics.models.framework import restrict
from python_af_semantics.models.framework import SizeLimitExceededError
from python_af_semantics.models.framework import targets_of
from python_af_semantics.models.framework import UnknownLabelError

__all__ = [
    'ArgSet',
    'attackers_of',
    'attacks_set',
    'build_framework',
    'DuplicateLabelError',
    'ExtensionSet',
    'Framework',
    'FrameworkError',
    'is_admissible',
    'is_conflict_free',
    'lift',
    'range_closure',
    'reduct',
    'restrict',
    'SizeLimitExceededError',
    'targets_of',
    'UnknownLabelError',
]
