from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

src_path = Path(__file__).parent.parent / 'src'
sys.path.insert(0, str(src_path.absolute()))

from python_af_semantics.models.framework import build_framework  # noqa: E402


def pytest_addoption(parser):
    """Add command-line options for testing."""
    parser.addoption(
        '--sweep-scale',
        action='store',
        default='1.0',
        help='Fraction of the random sweep sizes to run (default: 1.0)',
    )


@pytest.fixture(scope='session')
def sweep_scale(request):
    return float(request.config.getoption('--sweep-scale'))


@pytest.fixture
def f1():
    """A self-attacking argument that also attacks b."""
    return build_framework(['a', 'b'], [('a', 'a'), ('a', 'b')])


@pytest.fixture
def f2():
    """a attacks b, b attacks c."""
    return build_framework(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])


@pytest.fixture
def f3():
    """An odd cycle a, b, c with b attacking d."""
    return build_framework(
        ['a', 'b', 'c', 'd'],
        [('a', 'b'), ('b', 'c'), ('c', 'a'), ('b', 'd')],
    )


@pytest.fixture(autouse=True)
def env_setup():
    old_env = os.environ.copy()
    for key in list(os.environ):
        if key.startswith('AF_'):
            del os.environ[key]

    yield

    # Restore original environment
    os.environ.clear()
    os.environ.update(old_env)
