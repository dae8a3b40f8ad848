"""Internationalization module for boolconv."""

import os

from boolconv.modules.settings import read_config

# Default language
_current_lang = 'en'

# Translations
TRANSLATIONS = {
    'en': {
        # Headers
        'eval_header': 'Evaluating {conv} on {atoms} atom(s)',
        'topology_header': 'Sequential topology O_{conv} on {atoms} atom(s)',
        'verify_header': 'Verifying property suites',
        'corpus_header': 'Corpus on {atoms} atom(s)',

        # Steps
        'suite_running': 'Running {suite} on {atoms} atom(s)...',
        'generating_topology': 'Generating the sequential topology...',

        # Success messages
        'verify_passed': 'All {checks} checks passed',
        'report_written': 'Report written to {path}',
        'maximality_clamped': 'Maximality runs up to {cap} atoms only',
        'config_saved': 'Configuration saved to {path}',
        'corpus_count': '{count} canonical sequences',

        # Error messages
        'verify_failed': '{failed} of {checks} checks failed',
        'error_parse': 'Could not parse input: {error}',
        'error_precondition': 'Precondition not met: {error}',
        'error_resource_cap': 'Resource cap exceeded: {error}',
        'error_invariant': 'Internal consistency check failed: {error}',

        # Validation messages
        'validation_atoms_positive': 'Atom count must be at least 1, got {atoms}',
        'validation_atoms_cap': '{atoms} atoms exceeds MAX_ATOMS_TOPOLOGY = {cap}',
        'validation_samples_positive': '{name} must be at least 1, got {value}',
        'validation_prefix_bound': 'Prefix bound must be 0 or more, got {value}',
        'validation_cycle_bound': 'Cycle bound must be 1 or more, got {value}',
        'validation_seed_range': 'Seed must be an unsigned 64-bit integer, got {seed}',
        'validation_suite_unknown': 'Unknown suite(s): {suites}. Known suites: {known}',
        'validation_brute_force_cap': 'The maximality suite enumerates every topology; '
                                      '{atoms} atoms exceeds MAX_ATOMS_BRUTE_FORCE = {cap}',
        'validation_errors_header': 'Validation errors',

        # Tables
        'column_suite': 'Suite',
        'column_atoms': 'Atoms',
        'column_check': 'Check',
        'column_status': 'Status',
        'column_detail': 'Detail',
        'status_pass': 'pass',
        'status_fail': 'fail',
        'sequence': 'Sequence',
        'convergence': 'Convergence',
        'limits': 'Limits',
        'liminf': 'liminf',
        'limsup': 'limsup',
        'tail_support': 'Tail support',
        'closed_sets': 'Closed sets',
        'open_sets': 'Open sets',
        'point_closure': 'Closure of the point',
        'notes': 'Notes',
        'config_current': 'Current configuration',
        'config_no_settings': 'No settings saved yet',

        # CLI Help texts
        'help_main': 'boolconv - convergences and sequential topologies on finite Boolean algebras.\n\n'
                     'Commands that compute take: --atoms, --out, -v/--verbose',
        'help_lang': 'Language (en=English, pt=Portuguese). Uses global config if not specified.',
        'help_verbose': 'Verbose mode',
        'help_atoms': 'Number of atoms of the algebra (1 to 4)',
        'help_seq': 'Sequence literal such as "[1,2]|[3]" (prefix|cycle)',
        'help_conv': 'Convergence: s, ls, li, l0..l4, star:<c>, bar:<c>, meet:<c>,<c> or lim:<file>',
        'help_format': 'Output format',
        'help_out': 'Write the output to this file instead of the terminal',
        'help_forcing': 'Also print the forcing values of the sequence',
        'help_suite': 'Suite to run (repeatable; default: all)',
        'help_max_atoms': 'Largest atom count to verify (default: config or 3)',
        'help_seed': 'Seed for the random corpora (default: BOOLCONV_SEED or 8675309)',
        'help_samples': 'Random draws for corpora that are too large to enumerate',
        'help_selector_samples': 'Random selectors per sequence in the sampling oracle',
        'help_prefix_bound': 'Largest prefix length of the corpus',
        'help_cycle_bound': 'Largest cycle length of the corpus',
        'help_timing': 'Include per-suite timings in the JSON report',

        # Commands
        'help_eval': 'Evaluate a convergence on one sequence',
        'help_eval_long': 'Print the limits of SEQ under CONV, with liminf, limsup and tail support.',
        'help_topology': 'Generate the sequential topology of a convergence',
        'help_topology_long': 'Compute O_λ from the fixed points of the sequential closure and print '
                              'its closed sets, as a table, JSON or the DOT specialization graph.',
        'help_verify': 'Run the property suites',
        'help_verify_long': 'Run the selected suites for every atom count up to --max-atoms. '
                            'Exit code 0 when every check passes, 1 when some check fails.',
        'help_corpus': 'List the corpus used for an atom count',
        'help_config': 'Configure global settings',
        'help_config_lang': 'Set default language (en, pt)',
        'help_config_show': 'Show current configuration',
        'help_config_max_atoms': 'Set the default --max-atoms of verify',
        'help_config_samples': 'Set the default --samples of verify',
    },

    'pt': {
        # Headers
        'eval_header': 'Avaliando {conv} com {atoms} átomo(s)',
        'topology_header': 'Topologia sequencial O_{conv} com {atoms} átomo(s)',
        'verify_header': 'Verificando as suítes de propriedades',
        'corpus_header': 'Corpus com {atoms} átomo(s)',

        # Steps
        'suite_running': 'Rodando {suite} com {atoms} átomo(s)...',
        'generating_topology': 'Gerando a topologia sequencial...',

        # Success messages
        'verify_passed': 'Todas as {checks} verificações passaram',
        'report_written': 'Relatório salvo em {path}',
        'maximality_clamped': 'A maximalidade roda só até {cap} átomos',
        'config_saved': 'Configuração salva em {path}',
        'corpus_count': '{count} sequências canônicas',

        # Error messages
        'verify_failed': '{failed} de {checks} verificações falharam',
        'error_parse': 'Não foi possível interpretar a entrada: {error}',
        'error_precondition': 'Pré-condição não satisfeita: {error}',
        'error_resource_cap': 'Limite de recursos excedido: {error}',
        'error_invariant': 'Falha numa verificação interna de consistência: {error}',

        # Validation messages
        'validation_atoms_positive': 'O número de átomos precisa ser pelo menos 1, recebido {atoms}',
        'validation_atoms_cap': '{atoms} átomos excede MAX_ATOMS_TOPOLOGY = {cap}',
        'validation_samples_positive': '{name} precisa ser pelo menos 1, recebido {value}',
        'validation_prefix_bound': 'O limite do prefixo precisa ser 0 ou mais, recebido {value}',
        'validation_cycle_bound': 'O limite do ciclo precisa ser 1 ou mais, recebido {value}',
        'validation_seed_range': 'A seed precisa ser um inteiro sem sinal de 64 bits, recebido {seed}',
        'validation_suite_unknown': 'Suíte(s) desconhecida(s): {suites}. Suítes conhecidas: {known}',
        'validation_brute_force_cap': 'A suíte de maximalidade enumera todas as topologias; '
                                      '{atoms} átomos excede MAX_ATOMS_BRUTE_FORCE = {cap}',
        'validation_errors_header': 'Erros de validação',

        # Tables
        'column_suite': 'Suíte',
        'column_atoms': 'Átomos',
        'column_check': 'Verificação',
        'column_status': 'Status',
        'column_detail': 'Detalhe',
        'status_pass': 'ok',
        'status_fail': 'falhou',
        'sequence': 'Sequência',
        'convergence': 'Convergência',
        'limits': 'Limites',
        'liminf': 'liminf',
        'limsup': 'limsup',
        'tail_support': 'Suporte da cauda',
        'closed_sets': 'Fechados',
        'open_sets': 'Abertos',
        'point_closure': 'Fecho do ponto',
        'notes': 'Notas',
        'config_current': 'Configuração atual',
        'config_no_settings': 'Nenhuma configuração salva ainda',

        # CLI Help texts
        'help_main': 'boolconv - convergências e topologias sequenciais em álgebras de Boole finitas.\n\n'
                     'Os comandos de cálculo aceitam: --atoms, --out, -v/--verbose',
        'help_lang': 'Idioma (en=Inglês, pt=Português). Usa config global se não especificado.',
        'help_verbose': 'Modo verboso',
        'help_atoms': 'Número de átomos da álgebra (1 a 4)',
        'help_seq': 'Literal de sequência como "[1,2]|[3]" (prefixo|ciclo)',
        'help_conv': 'Convergência: s, ls, li, l0..l4, star:<c>, bar:<c>, meet:<c>,<c> ou lim:<arquivo>',
        'help_format': 'Formato de saída',
        'help_out': 'Grava a saída neste arquivo em vez do terminal',
        'help_forcing': 'Mostra também os valores de forcing da sequência',
        'help_suite': 'Suíte a rodar (pode repetir; padrão: todas)',
        'help_max_atoms': 'Maior número de átomos a verificar (padrão: config ou 3)',
        'help_seed': 'Seed dos corpora aleatórios (padrão: BOOLCONV_SEED ou 8675309)',
        'help_samples': 'Sorteios para corpora grandes demais para enumerar',
        'help_selector_samples': 'Seletores aleatórios por sequência no oráculo de amostragem',
        'help_prefix_bound': 'Maior comprimento de prefixo do corpus',
        'help_cycle_bound': 'Maior comprimento de ciclo do corpus',
        'help_timing': 'Inclui os tempos de cada suíte no relatório JSON',

        # Commands
        'help_eval': 'Avalia uma convergência numa sequência',
        'help_eval_long': 'Mostra os limites de SEQ segundo CONV, com liminf, limsup e suporte da cauda.',
        'help_topology': 'Gera a topologia sequencial de uma convergência',
        'help_topology_long': 'Calcula O_λ pelos pontos fixos do fecho sequencial e mostra os fechados, '
                              'como tabela, JSON ou o grafo de especialização em DOT.',
        'help_verify': 'Roda as suítes de propriedades',
        'help_verify_long': 'Roda as suítes escolhidas para cada número de átomos até --max-atoms. '
                            'Código de saída 0 quando tudo passa, 1 quando alguma verificação falha.',
        'help_corpus': 'Lista o corpus usado para um número de átomos',
        'help_config': 'Configura opções globais',
        'help_config_lang': 'Define o idioma padrão (en, pt)',
        'help_config_show': 'Mostra a configuração atual',
        'help_config_max_atoms': 'Define o --max-atoms padrão do verify',
        'help_config_samples': 'Define o --samples padrão do verify',
    },
}


def set_language(lang: str):
    """Set the current language."""
    global _current_lang
    if lang in TRANSLATIONS:
        _current_lang = lang
    else:
        _current_lang = 'en'


def get_language() -> str:
    """Get the current language."""
    return _current_lang


def t(key: str, **kwargs) -> str:
    """Get translated string by key.

    Args:
        key: Translation key
        **kwargs: Format arguments for the string

    Returns:
        Translated string, or the key if not found
    """
    lang_dict = TRANSLATIONS.get(_current_lang, TRANSLATIONS['en'])
    text = lang_dict.get(key, TRANSLATIONS['en'].get(key, key))

    if kwargs:
        try:
            text = text.format(**kwargs)
        except KeyError:
            pass

    return text


def load_language_from_env():
    """Load language from BOOLCONV_LANG environment variable."""
    lang = os.environ.get('BOOLCONV_LANG', 'en').lower()
    set_language(lang)


def load_language_from_config():
    """Load language from config file if exists."""
    lang = read_config().get('lang')
    if lang:
        set_language(lang.lower())
        return

    # Fallback to environment variable
    load_language_from_env()


# Initialize language on module load
load_language_from_config()
