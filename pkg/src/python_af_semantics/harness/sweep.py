"""Exhaustive and randomized sweeps of the claim checks."""
from __future__ import annotations

import concurrent.futures
import logging
from typing import Any
from typing import Sequence

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator
from python_af_semantics.generators.random_af import derive_configs
from python_af_semantics.generators.random_af import enumerate_all_afs
from python_af_semantics.generators.random_af import EXHAUSTIVE_MAX_ARGS
from python_af_semantics.generators.random_af import random_af
from python_af_semantics.generators.random_af import SEED_MAX
from python_af_semantics.harness.checks import check_framework
from python_af_semantics.harness.report import Report
from python_af_semantics.models.framework import Framework
from python_af_semantics.utils.config import load_config
from tqdm import tqdm

logger = logging.getLogger(__name__)

Job = tuple[Framework, dict[str, Any]]


class SweepConfig(BaseModel):
    """Which frameworks a ``check`` run covers and how it runs."""

    model_config = ConfigDict(frozen=True, extra='forbid')

    exhaustive_n: int | None = Field(
        default=None, ge=0, le=EXHAUSTIVE_MAX_ARGS,
    )
    random_count: int = Field(default=0, ge=0)
    min_n: int = Field(default=1, ge=0)
    max_n: int = Field(default=7, ge=0)
    probabilities: tuple[float, ...] = (0.2, 0.5)
    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    allow_self_attacks: bool = True
    with_oracle: bool = False
    max_workers: int = Field(default=1, ge=1)

    @model_validator(mode='after')
    def _check_ranges(self) -> SweepConfig:
        if self.random_count and self.min_n > self.max_n:
            raise ValueError(
                f'min_n ({self.min_n}) is larger than max_n ({self.max_n})',
            )
        if not self.probabilities or any(
            not 0.0 <= p <= 1.0 for p in self.probabilities
        ):
            raise ValueError('probabilities must lie in [0, 1]')
        return self


def _run_jobs(
    jobs: Sequence[Job],
    description: str,
    with_oracle: bool,
    max_workers: int,
    show_progress: bool,
) -> list[Report]:
    config = load_config()
    max_args = config['max_args']
    oracle_max_args = config['oracle_max_args']
    progress = tqdm(
        total=len(jobs), desc=description, disable=not show_progress,
    )

    if max_workers <= 1:
        reports = []
        for framework, source in jobs:
            reports.append(
                check_framework(
                    framework, source, with_oracle, max_args, oracle_max_args,
                ),
            )
            progress.update(1)
        progress.close()
        return reports

    with concurrent.futures.ProcessPoolExecutor(
        max_workers=max_workers,
    ) as executor:
        futures = [
            executor.submit(
                check_framework,
                framework, source, with_oracle, max_args, oracle_max_args,
            )
            for framework, source in jobs
        ]
        for _ in concurrent.futures.as_completed(futures):
            progress.update(1)
        progress.close()

        # Framework order, not completion order.
        return [future.result() for future in futures]


def exhaustive_jobs(n: int) -> list[Job]:
    return [
        (framework, {'exhaustive_n': n, 'relation': relation})
        for relation, framework in enumerate(enumerate_all_afs(n))
    ]


def random_jobs(config: SweepConfig) -> list[Job]:
    configs = derive_configs(
        config.random_count,
        config.min_n,
        config.max_n,
        config.probabilities,
        config.seed,
        config.allow_self_attacks,
    )
    max_args = load_config()['max_args']
    return [
        (
            random_af(cfg, max_args),
            {'sweep_seed': config.seed, **cfg.model_dump()},
        )
        for cfg in configs
    ]


def run_sweep(config: SweepConfig, show_progress: bool = False) -> Report:
    """
    Check the inclusion theorem and the defense lemma over a sweep.

    Covers the frameworks with exactly ``exhaustive_n`` arguments and/or
    ``random_count`` seeded random frameworks. Reports are merged in
    framework order, so output only depends on the config.
    """
    jobs: list[Job] = []
    source: dict[str, Any] = {}
    if config.exhaustive_n is not None:
        jobs += exhaustive_jobs(config.exhaustive_n)
        source['exhaustive_n'] = config.exhaustive_n
    if config.random_count:
        jobs += random_jobs(config)
        source['random'] = {
            'count': config.random_count,
            'min_n': config.min_n,
            'max_n': config.max_n,
            'probabilities': list(config.probabilities),
            'seed': config.seed,
            'allow_self_attacks': config.allow_self_attacks,
        }
    source['oracle'] = config.with_oracle

    logger.info('Starting sweep over %d frameworks', len(jobs))
    reports = _run_jobs(
        jobs, 'Checking frameworks', config.with_oracle,
        config.max_workers, show_progress,
    )
    report = Report.aggregate(reports, source)
    if report.ok:
        logger.info('Sweep finished: %s', report.summary)
    else:
        logger.warning(
            'Sweep finished with %d violations', len(report.violations),
        )
    return report


def exhaustive_sweep(n: int, **settings) -> Report:
    return run_sweep(SweepConfig(exhaustive_n=n, **settings))


def random_sweep(
    count: int,
    min_n: int,
    max_n: int,
    probabilities: Sequence[float],
    seed: int,
    **settings,
) -> Report:
    return run_sweep(
        SweepConfig(
            random_count=count,
            min_n=min_n,
            max_n=max_n,
            probabilities=tuple(probabilities),
            seed=seed,
            **settings,
        ),
    )
