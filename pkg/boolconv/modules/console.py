"""Funções de output colorido pro terminal."""

import logging
import sys
from typing import Dict, Optional

from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table
from rich.text import Text
from rich.traceback import install as install_traceback

from boolconv.modules.i18n import t

# Global console
console = Console()


def _supports_emoji():
    """Verifica se o terminal aguenta emojis."""
    try:
        "\U0001f680".encode(sys.stdout.encoding or 'utf-8')
        return True
    except (UnicodeEncodeError, LookupError):
        return False


EMOJI_SUPPORT = _supports_emoji()

# Icons with fallback
ICONS = {
    'rocket': '\U0001f680' if EMOJI_SUPPORT else '[>]',
    'check': '✅' if EMOJI_SUPPORT else '[OK]',
    'error': '❌' if EMOJI_SUPPORT else '[X]',
    'warning': '⚠️' if EMOJI_SUPPORT else '[!]',
    'info': 'ℹ️' if EMOJI_SUPPORT else '[i]',
    'star': '✨' if EMOJI_SUPPORT else '[*]',
    'gear': '⚙️' if EMOJI_SUPPORT else '[*]',
}


def setup_logging(verbose: bool = False):
    """Liga o logging do pacote no console do rich; -v mostra o debug."""
    handler = RichHandler(console=Console(stderr=True), show_path=False, show_time=verbose)
    root = logging.getLogger('boolconv')
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
    root.propagate = False
    if verbose:
        install_traceback(console=Console(stderr=True))


def print_header(title: str, subtitle: str = None):
    """Imprime o cabeçalho bonito."""
    text = Text()
    text.append(f"{ICONS['rocket']} ", style="bold yellow")
    text.append(title, style="bold cyan")

    panel = Panel(
        text,
        subtitle=f"[dim]{subtitle}[/dim]" if subtitle else None,
        box=box.ROUNDED,
        border_style="cyan",
        padding=(0, 2),
    )
    console.print(panel)


def print_success(message: str):
    """Mostra mensagem de sucesso."""
    console.print(f"{ICONS['check']} [bold green]{message}[/bold green]")


def print_error(message: str):
    """Mostra erro."""
    console.print(f"{ICONS['error']} [bold red]{message}[/bold red]")


def print_warning(message: str):
    """Mostra aviso."""
    console.print(f"{ICONS['warning']} [yellow]{message}[/yellow]")


def print_info(message: str):
    """Mostra info."""
    console.print(f"{ICONS['info']} [dim]{message}[/dim]")


def print_step(message: str):
    """Mostra um passo do processo."""
    console.print(f"  [cyan]{ICONS['gear']}[/cyan] {message}")


def _key_value_table(border: str) -> Table:
    table = Table(show_header=False, box=box.ROUNDED, border_style=border, padding=(0, 2))
    table.add_column("Key", style="bold cyan")
    table.add_column("Value", style="white")
    return table


def print_evaluation(payload: Dict):
    """Mostra o resultado de um eval."""
    table = _key_value_table("cyan")
    table.add_row(t('sequence'), payload["sequence"])
    table.add_row(t('convergence'), payload["convergence"])
    table.add_row(t('tail_support'), str(payload["tail_support"]))
    table.add_row(t('liminf'), str(payload["liminf"]))
    table.add_row(t('limsup'), str(payload["limsup"]))
    table.add_row(t('limits'), f"[bold green]{payload['limits']}[/bold green]")
    forcing = payload.get("forcing")
    if forcing:
        table.add_row("b_0..b_4", str(forcing["b"]))
        table.add_row("a_x, b_x", f"{forcing['ax']}, {forcing['bx']}")
    console.print(table)


def print_topology(payload: Dict, closures: Optional[Dict[int, list]] = None):
    """Mostra os fechados e abertos de uma topologia."""
    table = _key_value_table("green")
    table.add_row(t('closed_sets'), str(len(payload["closed_sets"])))
    for family in payload["closed_sets"]:
        table.add_row("", str(family))
    table.add_row(t('open_sets'), str(len(payload["open_sets"])))
    if closures:
        for point, closure in sorted(closures.items()):
            table.add_row(f"{t('point_closure')} {point}", str(closure))
    console.print(table)


def print_report(report, show_passing: bool = False):
    """Tabela das verificações; por padrão só as que falharam."""
    counts = report.counts()
    rows = report.checks if show_passing else report.failures

    if rows:
        table = Table(show_header=True, box=box.ROUNDED, border_style="cyan")
        table.add_column(t('column_suite'), style="cyan")
        table.add_column(t('column_atoms'), justify="right")
        table.add_column(t('column_check'))
        table.add_column(t('column_status'))
        table.add_column(t('column_detail'), style="dim")
        for check in rows:
            status = (f"[green]{t('status_pass')}[/green]" if check.verdict.ok
                      else f"[bold red]{t('status_fail')}[/bold red]")
            detail = check.verdict.detail
            if check.verdict.witness is not None:
                detail = f"{check.verdict.witness} {detail}".strip()
            table.add_row(check.suite, str(check.atoms), check.name, status, detail)
        console.print(table)

    for note in report.notes:
        print_info(note)

    if report.passed:
        print_success(t('verify_passed', checks=counts["checks"]))
    else:
        print_error(t('verify_failed', failed=counts["failed"], checks=counts["checks"]))
