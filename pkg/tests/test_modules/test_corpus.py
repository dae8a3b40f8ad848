"""Tests for boolconv.modules.corpus."""

import random

from boolconv.modules.algebra import Algebra
from boolconv.modules.corpus import (
    dominating_pairs,
    exhaustive_corpus,
    generate_corpus,
    pair_key,
    random_omega_set,
    random_selectors,
    raw_sequence_count,
    selector_pairs,
)
from boolconv.modules.sequences import EPSequence


def test_raw_count(a1):
    assert raw_sequence_count(a1, 1, 2) == 18


def test_exhaustive_corpus_is_canonical(a1):
    corpus = exhaustive_corpus(a1, 1, 2)
    assert [x.literal() for x in corpus] == [
        "[]|[0]", "[]|[1]",
        "[]|[0,1]", "[]|[1,0]", "[0]|[1]", "[1]|[0]",
        "[0]|[0,1]", "[1]|[1,0]",
    ]


def test_constants_only(a2):
    corpus = generate_corpus(a2, 0, 1)
    assert corpus == [EPSequence.constant(a2, w) for w in range(4)]


def test_default_bounds_are_exhaustive(a1):
    corpus = generate_corpus(a1)
    assert len(corpus) == len(set(corpus))
    assert EPSequence(a1, (0, 1), (0, 1, 1)) in corpus


def test_random_corpus_is_seeded():
    algebra = Algebra(4)
    first = generate_corpus(algebra, 3, 4, seed=7, samples=50)
    again = generate_corpus(algebra, 3, 4, seed=7, samples=50)
    other = generate_corpus(algebra, 3, 4, seed=8, samples=50)
    assert first == again
    assert first != other
    assert first == sorted(first, key=EPSequence.sort_key)


def test_random_omega_sets_are_infinite():
    rng = random.Random(1)
    assert all(random_omega_set(rng).is_infinite for _ in range(100))
    assert random_selectors(3, 5) == random_selectors(3, 5)


def test_selector_pairs(a1):
    corpus = exhaustive_corpus(a1, 1, 2)
    pairs = selector_pairs(corpus, seed=5, count=10)
    assert len(pairs) == 10
    assert all(x in corpus and a.is_infinite for x, a in pairs)
    assert selector_pairs([], seed=5, count=10) == []


def test_selector_pairs_are_shortest_first(a2):
    pairs = selector_pairs(exhaustive_corpus(a2, 1, 2), seed=9, count=25)
    assert pairs == sorted(pairs, key=pair_key)
    lengths = [x.length for x, _ in pairs]
    assert lengths == sorted(lengths)


def test_dominating_pairs(a2):
    corpus = exhaustive_corpus(a2, 1, 2)
    pairs = dominating_pairs(corpus, seed=4, count=30)
    assert len(pairs) == 30
    assert all(x in corpus and x.le_pointwise(y) for x, y in pairs)
    assert pairs == dominating_pairs(corpus, seed=4, count=30)
    assert dominating_pairs([], seed=4, count=3) == []
