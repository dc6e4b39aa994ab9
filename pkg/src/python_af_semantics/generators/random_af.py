"""Seeded random frameworks and exhaustive enumeration of small ones."""
from __future__ import annotations

import logging
from typing import Iterator
from typing import Sequence

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import SizeLimitExceededError
from python_af_semantics.utils.config import load_config

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ARGS = 4
SEED_MAX = 2**64 - 1


class InvalidConfigError(ValueError):
    """Exception raised for unusable generator settings."""

    pass


class GenConfig(BaseModel):
    """Settings for one random framework."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    n: int = Field(ge=0)
    p: float = Field(ge=0.0, le=1.0)
    seed: int = Field(ge=0, le=SEED_MAX)
    allow_self_attacks: bool = False


def make_config(**settings) -> GenConfig:
    """
    Validate generator settings.

    Raises:
        InvalidConfigError: If a setting is missing or out of range.
    """
    try:
        return GenConfig(**settings)
    except ValidationError as e:
        raise InvalidConfigError(f'Invalid generator config: {e}') from e


def argument_labels(n: int) -> tuple[str, ...]:
    return tuple(f'a{i}' for i in range(n))


def random_af(cfg: GenConfig, max_args: int | None = None) -> Framework:
    """
    Generate a random framework with arguments ``a0 .. a(n-1)``.

    The PCG64 bit generator seeded with ``cfg.seed`` yields one raw 64-bit
    word per ordered pair ``(i, j)`` in row-major order (diagonal words are
    drawn even when self-attacks are off). The pair is an attack iff the
    word's top 53 bits, read as a fraction of 2^53, are below ``cfg.p``.
    Only the raw PCG64 stream is used, so output does not depend on the
    platform or on numpy's distribution code.

    Raises:
        InvalidConfigError: If ``cfg.n`` exceeds the configured maximum.
    """
    limit = max_args if max_args is not None else load_config()['max_args']
    if cfg.n > limit:
        raise InvalidConfigError(
            f'n={cfg.n} exceeds the configured maximum of {limit} arguments',
        )

    n = cfg.n
    if n == 0:
        return Framework(labels=(), attacks=frozenset())
    words = np.random.PCG64(cfg.seed).random_raw(n * n)
    fractions = (words >> np.uint64(11)).astype(np.float64) * 2.0**-53
    chosen = (fractions < cfg.p).reshape(n, n)
    if not cfg.allow_self_attacks:
        np.fill_diagonal(chosen, False)

    attacks = frozenset(
        (int(i), int(j)) for i, j in np.argwhere(chosen)
    )
    logger.debug(
        'Generated framework n=%d p=%s seed=%d with %d attacks',
        n, cfg.p, cfg.seed, len(attacks),
    )
    return Framework(labels=argument_labels(n), attacks=attacks)


def enumerate_all_afs(n: int) -> Iterator[Framework]:
    """
    Yield every labelled framework on ``n`` arguments exactly once.

    Frameworks follow the relation bitmask order ``0 .. 2^(n*n) - 1``,
    where bit ``i * n + j`` stands for the attack ``(i, j)``.

    Raises:
        SizeLimitExceededError: If ``n`` is above 4.
    """
    if n > EXHAUSTIVE_MAX_ARGS:
        raise SizeLimitExceededError(
            n, EXHAUSTIVE_MAX_ARGS, 'exhaustive enumeration',
        )
    if n < 0:
        raise InvalidConfigError('n must be non-negative')

    labels = argument_labels(n)
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for relation in range(1 << (n * n)):
        attacks = frozenset(
            pair for k, pair in enumerate(pairs) if relation >> k & 1
        )
        yield Framework(labels=labels, attacks=attacks)


def derive_configs(
    count: int,
    min_n: int,
    max_n: int,
    probabilities: Sequence[float],
    seed: int,
    allow_self_attacks: bool = True,
) -> list[GenConfig]:
    """
    Derive ``count`` generator configs from one master seed.

    Three raw PCG64 words per framework pick the size, the probability and
    the framework's own seed, so a sweep is replayable from its master seed
    and each framework from its recorded config.

    Raises:
        InvalidConfigError: On an empty size range or probability list.
    """
    if count < 0 or min_n > max_n or min_n < 0 or not probabilities:
        raise InvalidConfigError(
            f'Cannot derive {count} configs for n in [{min_n}, {max_n}] '
            f'with probabilities {list(probabilities)}',
        )
    make_config(n=max_n, p=0.0, seed=seed)
    if count == 0:
        return []

    words = np.random.PCG64(seed).random_raw(3 * count).tolist()
    span = max_n - min_n + 1
    configs = []
    for k in range(count):
        size_word, p_word, seed_word = words[3 * k:3 * k + 3]
        configs.append(
            make_config(
                n=min_n + size_word % span,
                p=probabilities[p_word % len(probabilities)],
                seed=seed_word,
                allow_self_attacks=allow_self_attacks,
            ),
        )
    return configs
