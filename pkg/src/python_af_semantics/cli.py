"""Command-line interface for the argumentation solver."""
from __future__ import annotations

import logging
import sys
from typing import Literal
from typing import NoReturn

import click
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from python_af_semantics.formats.render import render_apx
from python_af_semantics.formats.render import render_extensions
from python_af_semantics.formats.render import render_tgf
from python_af_semantics.formats.render import RenderFormat
from python_af_semantics.generators.random_af import InvalidConfigError
from python_af_semantics.generators.random_af import make_config
from python_af_semantics.generators.random_af import random_af
from python_af_semantics.generators.random_af import SEED_MAX
from python_af_semantics.harness.checks import compare_semantics
from python_af_semantics.harness.report import render_report
from python_af_semantics.harness.sweep import run_sweep
from python_af_semantics.harness.sweep import SweepConfig
from python_af_semantics.models.framework import FrameworkError
from python_af_semantics.semantics.engine import enumerate_extensions
from python_af_semantics.semantics.engine import maximal_by_inclusion
from python_af_semantics.semantics.engine import Semantics
from python_af_semantics.utils.config import get_size_limit
from python_af_semantics.utils.config import load_config
from python_af_semantics.utils.file_utils import INPUT_FORMATS
from python_af_semantics.utils.file_utils import load_framework
from python_af_semantics.utils.file_utils import save_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

FORMAT_CHOICE = click.Choice([f.value for f in RenderFormat])


class CliConfig(BaseModel):
    """Validated settings of one invocation."""

    model_config = ConfigDict(frozen=True)

    command: Literal['solve', 'compare', 'gen', 'check']
    source: str | None = None
    output_format: str = 'text'
    input_format: str | None = None
    max_args: int | None = Field(default=None, ge=0)
    seed: int | None = Field(default=None, ge=0, le=SEED_MAX)


def _fail(error: Exception) -> NoReturn:
    click.echo(f'Error: {error}', err=True)
    logger.debug('Command failed', exc_info=True)
    sys.exit(EXIT_USAGE)


def _settings(**values) -> CliConfig:
    try:
        return CliConfig(**values)
    except ValidationError as e:
        _fail(e)


def _emit(text: str) -> None:
    if text:
        click.echo(text, nl=not text.endswith('\n'))


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Log debug output.')
def cli(verbose: bool):
    """Cogent and weakly admissible extensions of argumentation frameworks."""
    level = 'DEBUG' if verbose else load_config()['log_level']
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


@cli.command()
@click.option(
    '--semantics',
    type=click.Choice([s.value for s in Semantics]),
    required=True,
    help='Semantics to enumerate.',
)
@click.option(
    '--maximal', is_flag=True, help='Keep only the ⊆-maximal extensions.',
)
@click.option(
    '--format', 'output_format', type=FORMAT_CHOICE, default='text',
    help='Output format.',
)
@click.option(
    '--input-format', type=click.Choice(INPUT_FORMATS),
    help='Input format (defaults to the file extension, else apx).',
)
@click.option(
    '--max-args', type=int,
    help='Largest framework to accept for this semantics.',
)
@click.argument('source', metavar='FILE|-')
def solve(
    semantics: str,
    maximal: bool,
    output_format: str,
    input_format: str | None,
    max_args: int | None,
    source: str,
):
    """Enumerate the extensions of a framework."""
    settings = _settings(
        command='solve', source=source, output_format=output_format,
        input_format=input_format, max_args=max_args,
    )
    limit = settings.max_args
    if limit is None:
        limit = get_size_limit(semantics)

    try:
        framework = load_framework(source, input_format)
        extensions = enumerate_extensions(framework, semantics, limit)
    except (FrameworkError, OSError) as e:
        _fail(e)

    if maximal:
        extensions = maximal_by_inclusion(extensions)
    _emit(render_extensions(extensions, framework, output_format))


@cli.command()
@click.option(
    '--format', 'output_format', type=FORMAT_CHOICE, default='text',
    help='Output format.',
)
@click.option(
    '--input-format', type=click.Choice(INPUT_FORMATS),
    help='Input format (defaults to the file extension, else apx).',
)
@click.option(
    '--max-args', type=int,
    help='Largest framework to accept.',
)
@click.argument('source', metavar='FILE|-')
def compare(
    output_format: str,
    input_format: str | None,
    max_args: int | None,
    source: str,
):
    """Compare admissible, cogent and weakly admissible extensions."""
    settings = _settings(
        command='compare', source=source, output_format=output_format,
        input_format=input_format, max_args=max_args,
    )
    limit = settings.max_args
    if limit is None:
        config = load_config()
        limit = min(
            get_size_limit('cogent', config),
            get_size_limit('weak-admissible', config),
        )

    try:
        framework = load_framework(source, input_format)
        report = compare_semantics(framework, limit)
    except (FrameworkError, OSError) as e:
        _fail(e)

    _emit(render_report(report, output_format))
    if not report.ok:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Argument count.')
@click.option('--p', 'p', type=float, required=True, help='Attack probability.')
@click.option('--seed', type=int, help='64-bit generator seed.')
@click.option(
    '--self-attacks', is_flag=True, help='Allow arguments to attack themselves.',
)
@click.option(
    '--format', 'output_format', type=click.Choice(INPUT_FORMATS),
    default='apx', help='Framework format to write.',
)
def gen(
    n: int,
    p: float,
    seed: int | None,
    self_attacks: bool,
    output_format: str,
):
    """Generate a seeded random framework."""
    config = load_config()
    settings = _settings(command='gen', seed=seed, output_format=output_format)
    try:
        cfg = make_config(
            n=n,
            p=p,
            seed=settings.seed if seed is not None else config['default_seed'],
            allow_self_attacks=self_attacks,
        )
        framework = random_af(cfg, config['max_args'])
    except InvalidConfigError as e:
        _fail(e)

    render = render_tgf if output_format == 'tgf' else render_apx
    _emit(render(framework))


@cli.command()
@click.option(
    '--exhaustive-n', type=int,
    help='Check every framework with exactly this many arguments (0-4).',
)
@click.option(
    '--random', 'random_count', type=int, default=0,
    help='Number of seeded random frameworks to check.',
)
@click.option('--min-n', type=int, default=1, help='Smallest random size.')
@click.option('--max-n', type=int, default=7, help='Largest random size.')
@click.option(
    '--p', 'probabilities', type=float, multiple=True,
    help='Attack probability for random frameworks (repeatable).',
)
@click.option('--seed', type=int, help='Master seed of the random sweep.')
@click.option(
    '--self-attacks/--no-self-attacks', default=True,
    help='Allow self-attacks in random frameworks.',
)
@click.option(
    '--oracle', is_flag=True,
    help='Also compare the engine with the reference oracle.',
)
@click.option('--workers', type=int, help='Worker processes.')
@click.option(
    '--format', 'output_format', type=FORMAT_CHOICE, default='text',
    help='Output format.',
)
@click.option(
    '--output', type=click.Path(dir_okay=False),
    help='Also save the report to this file.',
)
@click.option('--progress', is_flag=True, help='Show a progress bar.')
def check(
    exhaustive_n: int | None,
    random_count: int,
    min_n: int,
    max_n: int,
    probabilities: tuple[float, ...],
    seed: int | None,
    self_attacks: bool,
    oracle: bool,
    workers: int | None,
    output_format: str,
    output: str | None,
    progress: bool,
):
    """Sweep the inclusion theorem and defense lemma over many frameworks."""
    config = load_config()
    if exhaustive_n is None and not random_count:
        exhaustive_n = 3

    try:
        sweep = SweepConfig(
            exhaustive_n=exhaustive_n,
            random_count=random_count,
            min_n=min_n,
            max_n=max_n,
            probabilities=probabilities or (0.2, 0.5),
            seed=seed if seed is not None else config['default_seed'],
            allow_self_attacks=self_attacks,
            with_oracle=oracle,
            max_workers=workers or config['max_workers'],
        )
        report = run_sweep(sweep, show_progress=progress)
    except (ValidationError, InvalidConfigError, FrameworkError) as e:
        _fail(e)

    rendered = render_report(report, output_format)
    if output:
        try:
            path = save_report(rendered, output)
        except OSError as e:
            _fail(e)
        logger.info(f'Report saved to {path}')
    _emit(rendered)
    if not report.ok:
        sys.exit(EXIT_VIOLATION)


def run_cli(argv: list[str] | None = None) -> int:
    """Run the CLI on ``argv`` and return its exit code."""
    try:
        cli.main(args=argv, prog_name='af-semantics')
    except SystemExit as e:
        if e.code is None:
            return EXIT_OK
        return e.code if isinstance(e.code, int) else EXIT_VIOLATION
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(run_cli())
