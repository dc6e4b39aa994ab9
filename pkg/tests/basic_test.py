"""
Basic test file to verify module importing and test discovery.
"""
from __future__ import annotations

from pathlib import Path

import src.python_af_semantics
from src.python_af_semantics.models.framework import build_framework
from src.python_af_semantics.semantics.engine import Semantics


def test_module_imports():
    """Test that the module can be imported successfully."""
    assert src.python_af_semantics is not None
    assert src.python_af_semantics.__version__


def test_framework_creation():
    """Test basic framework creation."""
    framework = build_framework(['a', 'b'], [('a', 'b')])
    assert framework is not None
    assert framework.arg_count == 2
    assert framework.labels == ('a', 'b')


def test_semantics_names():
    assert [str(s) for s in Semantics] == [
        'conflict-free', 'admissible', 'cogent', 'weak-admissible',
    ]


def test_project_structure():
    """Verify the project structure exists as expected."""
    src_dir = Path('src/python_af_semantics')
    assert src_dir.exists(), 'Source directory not found'
    assert (src_dir / '__init__.py').exists(), 'Package __init__.py not found'

    # Check for key subdirectories
    for package in (
        'models', 'semantics', 'formats', 'generators', 'harness', 'utils',
    ):
        assert (src_dir / package).exists(), f'{package} directory not found'
