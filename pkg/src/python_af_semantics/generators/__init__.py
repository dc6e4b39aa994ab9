"""Generators module for producing test frameworks."""
from __future__ import annotations

from python_af_semantics.generators.random_af import derive_configs
from python_af_semantics.generators.random_af import enumerate_all_afs
from python_af_semantics.generators.random_af import GenConfig
from python_af_semantics.generators.random_af import InvalidConfigError
from python_af_semantics.generators.random_af import make_config
from python_af_semantics.generators.random_af import random_af

__all__ = [
    'derive_configs',
    'enumerate_all_afs',
    'GenConfig',
    'InvalidConfigError',
    'make_config',
    'random_af',
]
