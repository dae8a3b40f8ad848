"""Testes do arquivo de configuração e da seed."""

from boolconv.modules.settings import (
    DEFAULT_SEED,
    config_int,
    corpus_bounds,
    default_seed,
    get_config_file,
    read_config,
    write_config,
)


def test_config_file_lives_in_home(isolated_home):
    assert get_config_file() == isolated_home / '.boolconv' / 'config'


def test_missing_config_is_empty():
    assert read_config() == {}


def test_write_merges_values():
    write_config({'lang': 'pt'})
    path = write_config({'max_atoms': 2, 'samples': None})
    assert path.read_text(encoding='utf-8') == 'lang=pt\nmax_atoms=2\n'
    assert read_config() == {'lang': 'pt', 'max_atoms': '2'}


def test_unknown_keys_and_comments_are_skipped(tmp_path):
    path = tmp_path / 'config'
    path.write_text('# comment\nlang = pt\ncolor=red\nnonsense\n', encoding='utf-8')
    assert read_config(path) == {'lang': 'pt'}


def test_config_int(tmp_path):
    path = tmp_path / 'config'
    path.write_text('samples=40\nmax_atoms=many\n', encoding='utf-8')
    assert config_int('samples', 500, path) == 40
    assert config_int('max_atoms', 3, path) == 3
    assert config_int('lang', 7, path) == 7


def test_default_seed(monkeypatch):
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv('BOOLCONV_SEED', '0x10')
    assert default_seed() == 16
    monkeypatch.setenv('BOOLCONV_SEED', 'abc')
    assert default_seed() == DEFAULT_SEED


def test_corpus_bounds():
    assert corpus_bounds(2) == (2, 4)
    assert corpus_bounds(4) == (0, 2)
    assert corpus_bounds(3, prefix_bound=0) == (0, 3)
