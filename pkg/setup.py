from __future__ import annotations

from setuptools import find_packages
from setuptools import setup

setup(
    name='python_af_semantics',
    version='0.1.0',
    packages=find_packages(where='src'),
    package_dir={'': 'src'},
    install_requires=[
        'click',
        'tqdm',
        'python-dotenv',
        'pydantic',
        'numpy',
    ],
    tests_require=[
        'pytest',
        'pytest-cov',
        'pytest-mock',
    ],
    entry_points={
        'console_scripts': [
            'af-semantics=python_af_semantics.cli:cli',
        ],
    },
)
