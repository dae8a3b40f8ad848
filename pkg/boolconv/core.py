"""boolconv CLI - convergences and sequential topologies on finite Boolean algebras."""

import os
import sys
from contextlib import contextmanager

import click

from boolconv import __version__
from boolconv.modules.algebra import Algebra, iter_bits
from boolconv.modules.console import (
    console,
    print_error,
    print_evaluation,
    print_header,
    print_info,
    print_report,
    print_step,
    print_success,
    print_topology,
    print_warning,
    setup_logging,
)
from boolconv.modules.convergence import parse_convergence
from boolconv.modules.corpus import generate_corpus
from boolconv.modules.errors import (
    BoolconvError,
    InvariantViolation,
    PreconditionError,
    ResourceCapError,
    StructuralError,
)
from boolconv.modules.export import (
    dumps,
    read_topology_json,
    specialization_dot,
    topology_payload,
    write_text,
)
from boolconv.modules.forcing import forcing_report
from boolconv.modules.i18n import get_language, set_language, t
from boolconv.modules.sequences import lim_inf_sup, parse_sequence, tail_support
from boolconv.modules.settings import (
    DEFAULT_MAX_ATOMS,
    DEFAULT_SAMPLES,
    DEFAULT_SELECTOR_SAMPLES,
    MAX_ATOMS_BRUTE_FORCE,
    SEED_ENV_VAR,
    config_int,
    default_seed,
    get_config_file,
    read_config,
    write_config,
)
from boolconv.modules.suites import SUITES, SuiteConfig, run_suite
from boolconv.modules.topology import generate_sequential_topology
from boolconv.modules.validation import ValidationError, validate_atoms

LANGUAGES = ['en', 'pt']
EXIT_FAIL = 1
EXIT_USAGE = 2


class LanguageOption(click.Option):
    """Option que troca o idioma antes de executar o comando."""

    def __init__(self, *args, help_key=None, **kwargs):
        self.help_key = help_key
        super().__init__(*args, **kwargs)

    def handle_parse_result(self, ctx, opts, args):
        # Only override if user explicitly passed --lang
        if 'lang' in opts and opts['lang'] is not None:
            set_language(opts['lang'])
        return super().handle_parse_result(ctx, opts, args)

    def get_help_record(self, ctx):
        if self.help_key:
            self.help = t(self.help_key)
        return super().get_help_record(ctx)


class TranslatedGroup(click.Group):
    """Grupo do Click com textos de ajuda traduzidos."""

    def __init__(self, *args, help_key=None, **kwargs):
        self.help_key = help_key
        super().__init__(*args, **kwargs)

    def get_short_help_str(self, limit=150):
        if self.help_key:
            return t(self.help_key)[:limit]
        return super().get_short_help_str(limit)

    def format_help(self, ctx, formatter):
        if self.help_key:
            self.help = t(self.help_key)
        super().format_help(ctx, formatter)


class TranslatedCommand(click.Command):
    """Comando do Click com help traduzido."""

    def __init__(self, *args, help_key=None, help_long_key=None, **kwargs):
        self.help_key = help_key
        self.help_long_key = help_long_key
        super().__init__(*args, **kwargs)

    def get_short_help_str(self, limit=150):
        if self.help_key:
            return t(self.help_key)[:limit]
        return super().get_short_help_str(limit)

    def format_help(self, ctx, formatter):
        if self.help_key:
            help_text = t(self.help_key)
            if self.help_long_key:
                help_text += "\n\n" + t(self.help_long_key)
            self.help = help_text
        super().format_help(ctx, formatter)


class TranslatedOption(click.Option):
    """Opção do Click com help traduzido."""

    def __init__(self, *args, help_key=None, **kwargs):
        self.help_key = help_key
        super().__init__(*args, **kwargs)

    def get_help_record(self, ctx):
        if self.help_key:
            self.help = t(self.help_key)
        return super().get_help_record(ctx)


@click.group(cls=TranslatedGroup, help_key='help_main')
@click.option(
    '--lang', '-L',
    type=click.Choice(LANGUAGES, case_sensitive=False),
    default=None,
    cls=LanguageOption,
    is_eager=True,
    help_key='help_lang',
)
@click.version_option(version=__version__, prog_name='boolconv')
@click.pass_context
def cli(ctx, lang):
    """boolconv - convergências e topologias sequenciais em álgebras de Boole finitas."""
    ctx.ensure_object(dict)
    ctx.obj['lang'] = lang if lang else get_language()


# =============================================================================
# Common options decorator
# =============================================================================

def common_options(f):
    """Decorator que adiciona as opções comuns em todos os comandos."""
    f = click.option('-v', '--verbose', is_flag=True,
                     cls=TranslatedOption, help_key='help_verbose')(f)
    f = click.option('--out', '-o', type=click.Path(dir_okay=False), default=None,
                     cls=TranslatedOption, help_key='help_out')(f)
    return f


def atoms_option(f):
    return click.option('--atoms', '-n', type=int, required=True,
                        cls=TranslatedOption, help_key='help_atoms')(f)


def corpus_options(f):
    """Opções que definem o corpus (limites, seed e amostras)."""
    f = click.option('--prefix-bound', type=int, default=None,
                     cls=TranslatedOption, help_key='help_prefix_bound')(f)
    f = click.option('--cycle-bound', type=int, default=None,
                     cls=TranslatedOption, help_key='help_cycle_bound')(f)
    f = click.option('--seed', type=int, default=None,
                     cls=TranslatedOption, help_key='help_seed')(f)
    f = click.option('--samples', type=int, default=None,
                     cls=TranslatedOption, help_key='help_samples')(f)
    return f


def print_validation_errors(errors):
    console.print()
    console.print(f"[bold red]{t('validation_errors_header')}:[/bold red]")
    for error in errors:
        print_error(error)
    console.print()


def validate_and_exit_on_error(atoms):
    """Valida o número de átomos e sai com erro de uso se algo estiver errado."""
    valid, error = validate_atoms(atoms)
    if not valid:
        print_validation_errors([error])
        sys.exit(EXIT_USAGE)


@contextmanager
def handle_errors():
    """Traduz as exceções do pacote em mensagens e códigos de saída."""
    try:
        yield
    except ValidationError as error:
        print_validation_errors(error.errors)
        sys.exit(error.exit_code)
    except ResourceCapError as error:
        print_error(t('error_resource_cap', error=error))
        sys.exit(error.exit_code)
    except (StructuralError, PreconditionError) as error:
        key = 'error_parse' if isinstance(error, StructuralError) else 'error_precondition'
        print_error(t(key, error=error))
        sys.exit(EXIT_USAGE)
    except InvariantViolation as error:
        print_error(t('error_invariant', error=error))
        sys.exit(error.exit_code)
    except BoolconvError as error:
        print_error(str(error))
        sys.exit(error.exit_code)


def emit(text, out):
    """Escreve no arquivo pedido ou no terminal."""
    if out:
        write_text(text, out)
        print_success(t('report_written', path=out))
    else:
        click.echo(text, nl=False)


def load_convergence(text):
    return parse_convergence(text, topology_loader=read_topology_json)


# =============================================================================
# eval
# =============================================================================

@cli.command('eval', cls=TranslatedCommand, help_key='help_eval', help_long_key='help_eval_long')
@atoms_option
@click.option('--seq', '-s', 'seq_text', required=True, cls=TranslatedOption, help_key='help_seq')
@click.option('--conv', '-c', 'conv_text', default='s', show_default=True,
              cls=TranslatedOption, help_key='help_conv')
@click.option('--format', '-f', 'fmt', type=click.Choice(['table', 'json']), default='table',
              cls=TranslatedOption, help_key='help_format')
@click.option('--forcing', is_flag=True, cls=TranslatedOption, help_key='help_forcing')
@common_options
def eval_command(atoms, seq_text, conv_text, fmt, forcing, out, verbose):
    """Avalia uma convergência numa sequência."""
    setup_logging(verbose)
    validate_and_exit_on_error(atoms)

    with handle_errors():
        algebra = Algebra(atoms)
        x = parse_sequence(algebra, seq_text)
        c = load_convergence(conv_text)
        liminf, limsup = lim_inf_sup(x)
        payload = {
            "atoms": atoms,
            "sequence": x.literal(),
            "convergence": c.name,
            "tail_support": tail_support(x).to_json(),
            "liminf": liminf.word,
            "limsup": limsup.word,
            "limits": c(x).to_json(),
        }
        if forcing:
            payload["forcing"] = forcing_report(x)

    if fmt == 'json' or out:
        emit(dumps(payload), out)
    else:
        print_header(t('eval_header', conv=c.name, atoms=atoms))
        print_evaluation(payload)


# =============================================================================
# topology
# =============================================================================

@cli.command('topology', cls=TranslatedCommand, help_key='help_topology', help_long_key='help_topology_long')
@atoms_option
@click.option('--conv', '-c', 'conv_text', default='ls', show_default=True,
              cls=TranslatedOption, help_key='help_conv')
@click.option('--format', '-f', 'fmt', type=click.Choice(['table', 'json', 'dot']), default='table',
              cls=TranslatedOption, help_key='help_format')
@common_options
def topology_command(atoms, conv_text, fmt, out, verbose):
    """Gera a topologia sequencial O_λ."""
    setup_logging(verbose)
    validate_and_exit_on_error(atoms)

    with handle_errors():
        algebra = Algebra(atoms)
        c = load_convergence(conv_text)
        if verbose:
            print_step(t('generating_topology'))
        topology = generate_sequential_topology(c, algebra)
        payload = topology_payload(topology)
        payload["convergence"] = c.name

    if fmt == 'dot':
        emit(specialization_dot(topology), out)
    elif fmt == 'json' or out:
        emit(dumps(payload), out)
    else:
        print_header(t('topology_header', conv=c.name, atoms=atoms))
        closures = {a: list(iter_bits(cl)) for a, cl in enumerate(topology.point_closures)}
        print_topology(payload, closures if verbose else None)


# =============================================================================
# verify
# =============================================================================

@cli.command('verify', cls=TranslatedCommand, help_key='help_verify', help_long_key='help_verify_long')
@click.option('--max-atoms', '--atoms', '-n', 'max_atoms', type=int, default=None,
              cls=TranslatedOption, help_key='help_max_atoms')
@click.option('--suite', 'suites', multiple=True, type=click.Choice(list(SUITES)),
              cls=TranslatedOption, help_key='help_suite')
@click.option('--selector-samples', type=int, default=DEFAULT_SELECTOR_SAMPLES,
              cls=TranslatedOption, help_key='help_selector_samples')
@click.option('--format', '-f', 'fmt', type=click.Choice(['table', 'json']), default='table',
              cls=TranslatedOption, help_key='help_format')
@click.option('--timing', is_flag=True, cls=TranslatedOption, help_key='help_timing')
@corpus_options
@common_options
def verify_command(max_atoms, suites, selector_samples, fmt, timing,
                   prefix_bound, cycle_bound, seed, samples, out, verbose):
    """Roda as suítes de propriedades."""
    setup_logging(verbose)

    config = SuiteConfig(
        max_atoms=max_atoms if max_atoms is not None else config_int('max_atoms', DEFAULT_MAX_ATOMS),
        prefix_bound=prefix_bound,
        cycle_bound=cycle_bound,
        seed=seed if seed is not None else default_seed(),
        samples=samples if samples is not None else config_int('samples', DEFAULT_SAMPLES),
        selector_samples=selector_samples,
        suites=tuple(suites) or None,
    )

    def progress(name, atoms):
        if verbose:
            print_step(t('suite_running', suite=name, atoms=atoms))

    with handle_errors():
        if fmt == 'table':
            print_header(t('verify_header'), f"seed={config.seed}")
            if 'maximality' in config.selected() and config.max_atoms > MAX_ATOMS_BRUTE_FORCE:
                print_warning(t('maximality_clamped', cap=MAX_ATOMS_BRUTE_FORCE))
        report = run_suite(config, progress)

    if out:
        write_text(dumps(report.to_json(include_timing=timing)), out)
    if fmt == 'json':
        click.echo(dumps(report.to_json(include_timing=timing)), nl=False)
    else:
        print_report(report, show_passing=verbose)
        if out:
            print_info(t('report_written', path=out))

    sys.exit(0 if report.passed else EXIT_FAIL)


# =============================================================================
# corpus
# =============================================================================

@cli.command('corpus', cls=TranslatedCommand, help_key='help_corpus')
@atoms_option
@click.option('--format', '-f', 'fmt', type=click.Choice(['table', 'json']), default='table',
              cls=TranslatedOption, help_key='help_format')
@corpus_options
@common_options
def corpus_command(atoms, fmt, prefix_bound, cycle_bound, seed, samples, out, verbose):
    """Lista o corpus de um número de átomos."""
    setup_logging(verbose)
    validate_and_exit_on_error(atoms)

    with handle_errors():
        config = SuiteConfig(
            max_atoms=atoms,
            prefix_bound=prefix_bound,
            cycle_bound=cycle_bound,
            seed=seed if seed is not None else default_seed(),
            samples=samples if samples is not None else DEFAULT_SAMPLES,
        )
        config.validate()
        corpus = generate_corpus(Algebra(atoms), prefix_bound, cycle_bound,
                                 seed=config.seed, samples=config.samples)

    if fmt == 'json' or out:
        emit(dumps({"atoms": atoms, "sequences": [x.literal() for x in corpus]}), out)
    else:
        print_header(t('corpus_header', atoms=atoms))
        for x in corpus:
            console.print(f"  {x.literal()}")
        print_info(t('corpus_count', count=len(corpus)))


# =============================================================================
# Config Command
# =============================================================================

@cli.command(cls=TranslatedCommand, help_key='help_config')
@click.option(
    '--lang', '-l',
    type=click.Choice(LANGUAGES, case_sensitive=False),
    cls=TranslatedOption, help_key='help_config_lang'
)
@click.option('--max-atoms', type=int, default=None,
              cls=TranslatedOption, help_key='help_config_max_atoms')
@click.option('--samples', type=int, default=None,
              cls=TranslatedOption, help_key='help_config_samples')
@click.option('--show', '-s', is_flag=True,
              cls=TranslatedOption, help_key='help_config_show')
def config(lang, max_atoms, samples, show):
    """Configura as opções do boolconv."""
    config_file = get_config_file()

    if show:
        console.print(f"\n[bold cyan]{t('config_current')}[/bold cyan]")
        console.print(f"  Config file: [dim]{config_file}[/dim]")

        values = read_config()
        if values:
            for key, value in sorted(values.items()):
                console.print(f"    [green]{key}={value}[/green]")
        else:
            console.print(f"  [dim]{t('config_no_settings')}[/dim]")

        console.print("\n  Environment:")
        for name in ('BOOLCONV_LANG', SEED_ENV_VAR):
            console.print(f"    {name}: {os.environ.get(name, '[dim]not set[/dim]')}")

        console.print(f"\n  [bold]Active language:[/bold] [green]{get_language()}[/green]")
        return

    updates = {'lang': lang, 'max_atoms': max_atoms, 'samples': samples}
    if any(value is not None for value in updates.values()):
        errors = []
        if max_atoms is not None:
            valid, error = validate_atoms(max_atoms)
            if not valid:
                errors.append(error)
        if samples is not None and samples < 1:
            errors.append(t('validation_samples_positive', name='samples', value=samples))
        if errors:
            print_validation_errors(errors)
            sys.exit(EXIT_USAGE)

        path = write_config(updates)
        if lang:
            set_language(lang)
        print_success(t('config_saved', path=path))
    else:
        # No options provided, show help
        ctx = click.get_current_context()
        click.echo(ctx.get_help())


def main():
    """Ponto de entrada do CLI."""
    cli()


if __name__ == '__main__':
    main()
