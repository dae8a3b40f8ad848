"""Fixtures compartilhadas dos testes."""

import pytest
from click.testing import CliRunner
from hypothesis import HealthCheck, settings

from boolconv.modules.algebra import Algebra
from boolconv.modules.corpus import generate_corpus
from boolconv.modules.i18n import set_language

settings.register_profile(
    "boolconv",
    derandomize=True,
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("boolconv")


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Cada teste usa um HOME vazio e o idioma padrão."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("BOOLCONV_LANG", raising=False)
    monkeypatch.delenv("BOOLCONV_SEED", raising=False)
    set_language("en")
    yield tmp_path
    set_language("en")


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def a1():
    return Algebra(1)


@pytest.fixture
def a2():
    return Algebra(2)


@pytest.fixture
def a3():
    return Algebra(3)


@pytest.fixture
def small_corpus(a2):
    return generate_corpus(a2, 1, 3)

