"""Configuration utilities for the argumentation solver."""
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

CONFIG_FILE = 'af_semantics.json'

# Semantics whose CLI default limit differs from the global ceiling.
_SEMANTICS_LIMIT_KEYS = {
    'cogent': 'cogent_max_args',
    'weak-admissible': 'weak_max_args',
}


def load_config() -> dict[str, Any]:
    """
    Load configuration from environment variables and config files.

    Priority order:
    1. af_semantics.json in the working directory
    2. Environment (after loading .env.local, or else .env)
    3. Default values

    Returns:
        Dict containing configuration values.
    """
    env_local = Path('.env.local')
    env_file = Path('.env')

    if env_local.exists():
        load_dotenv(dotenv_path=env_local)
    elif env_file.exists():
        load_dotenv(dotenv_path=env_file)

    config = {
        # Size ceilings
        'max_args': int(os.getenv('AF_MAX_ARGS', '20')),
        'oracle_max_args': int(os.getenv('AF_ORACLE_MAX_ARGS', '8')),
        'cogent_max_args': int(os.getenv('AF_COGENT_MAX_ARGS', '14')),
        'weak_max_args': int(os.getenv('AF_WEAK_MAX_ARGS', '12')),

        # Sweeps
        'max_workers': int(os.getenv('AF_MAX_WORKERS', '1')),
        'default_seed': int(os.getenv('AF_DEFAULT_SEED', '0')),

        'log_level': os.getenv('AF_LOG_LEVEL', 'WARNING').upper(),
    }

    config_file = Path(CONFIG_FILE)
    if config_file.exists():
        with open(config_file) as f:
            config.update(json.load(f))

    return config


def get_size_limit(
    semantics: str | None = None,
    config: dict[str, Any] | None = None,
) -> int:
    """
    Get the argument-count limit for a semantics.

    Args:
        semantics: Semantics name as used on the command line. Semantics
            without a dedicated limit use the global ``max_args``.
        config: Already loaded configuration, loaded on demand if omitted.

    Returns:
        The largest framework size the semantics may be asked to enumerate.
    """
    config = config if config is not None else load_config()
    key = _SEMANTICS_LIMIT_KEYS.get(semantics or '', 'max_args')
    return min(int(config[key]), int(config['max_args']))
