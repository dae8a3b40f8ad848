"""Corpora of eventually periodic sequences and selectors.

A corpus is exhaustive (every canonical sequence within the prefix and
cycle bounds) when the raw count is at most ``EXHAUSTIVE_LIMIT``, otherwise
a seeded random sample. Corpora are sorted shortest-first, so the first
failing member of a check is a minimal witness.
"""

import itertools
import logging
import random
from typing import List, Optional, Tuple

from boolconv.modules.algebra import Algebra
from boolconv.modules.omega import OmegaSet
from boolconv.modules.sequences import EPSequence, sequences_sorted
from boolconv.modules.settings import DEFAULT_SAMPLES, corpus_bounds, default_seed

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 10 ** 6


def raw_sequence_count(algebra: Algebra, prefix_bound: int, cycle_bound: int) -> int:
    size = algebra.size
    prefixes = sum(size ** p for p in range(prefix_bound + 1))
    cycles = sum(size ** c for c in range(1, cycle_bound + 1))
    return prefixes * cycles


def exhaustive_corpus(algebra: Algebra, prefix_bound: int, cycle_bound: int) -> List[EPSequence]:
    """Every canonical sequence with |prefix| ≤ prefix_bound and |cycle| ≤ cycle_bound."""
    words = range(algebra.size)
    prefixes = [p for length in range(prefix_bound + 1) for p in itertools.product(words, repeat=length)]
    found = set()
    for length in range(1, cycle_bound + 1):
        for cycle in itertools.product(words, repeat=length):
            for prefix in prefixes:
                found.add(EPSequence(algebra, prefix, cycle))
    return sequences_sorted(list(found))


def random_sequence(rng: random.Random, algebra: Algebra, prefix_bound: int, cycle_bound: int) -> EPSequence:
    """Uniform prefix length in 0..prefix_bound, cycle length in 1..cycle_bound, uniform elements."""
    prefix = tuple(rng.randrange(algebra.size) for _ in range(rng.randint(0, prefix_bound)))
    cycle = tuple(rng.randrange(algebra.size) for _ in range(rng.randint(1, max(cycle_bound, 1))))
    return EPSequence(algebra, prefix, cycle)


def random_omega_set(rng: random.Random, prefix_bound: int = 3, cycle_bound: int = 4) -> OmegaSet:
    """A random infinite eventually periodic subset of ω."""
    prefix = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, prefix_bound)))
    length = rng.randint(1, max(cycle_bound, 1))
    cycle = [rng.randint(0, 1) for _ in range(length)]
    cycle[rng.randrange(length)] = 1
    return OmegaSet(prefix, tuple(cycle))


def generate_corpus(algebra: Algebra, prefix_bound: Optional[int] = None, cycle_bound: Optional[int] = None,
                    seed: Optional[int] = None, samples: int = DEFAULT_SAMPLES) -> List[EPSequence]:
    """The corpus for an algebra; deterministic in its arguments."""
    prefix_bound, cycle_bound = corpus_bounds(algebra.atoms, prefix_bound, cycle_bound)
    raw = raw_sequence_count(algebra, prefix_bound, cycle_bound)
    if raw <= EXHAUSTIVE_LIMIT:
        corpus = exhaustive_corpus(algebra, prefix_bound, cycle_bound)
        logger.debug("exhaustive corpus over %s: %d sequences (%d raw)", algebra, len(corpus), raw)
        return corpus
    rng = random.Random(default_seed() if seed is None else seed)
    found = {random_sequence(rng, algebra, prefix_bound, cycle_bound) for _ in range(samples)}
    corpus = sequences_sorted(list(found))
    logger.debug("random corpus over %s: %d sequences from %d draws", algebra, len(corpus), samples)
    return corpus


def pair_key(pair: Tuple[EPSequence, OmegaSet]):
    """Shortest sequence first, then the shortest selector."""
    x, a = pair
    return x.sort_key() + (len(a.prefix) + len(a.cycle), a.prefix, a.cycle)


def selector_pairs(corpus: List[EPSequence], seed: int, count: int) -> List[Tuple[EPSequence, OmegaSet]]:
    """count seeded (x, A) pairs with x from the corpus and A infinite, ordered by pair_key."""
    if not corpus:
        return []
    rng = random.Random(seed)
    return sorted(((rng.choice(corpus), random_omega_set(rng)) for _ in range(count)), key=pair_key)


def random_selectors(seed: int, count: int) -> List[OmegaSet]:
    rng = random.Random(seed)
    return [random_omega_set(rng) for _ in range(count)]


def dominating_pairs(corpus: List[EPSequence], seed: int, count: int,
                     prefix_bound: int = 3, cycle_bound: int = 4) -> List[Tuple[EPSequence, EPSequence]]:
    """count seeded (x, x ∨ r) pairs, r random with its own prefix and cycle lengths."""
    if not corpus:
        return []
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        x = rng.choice(corpus)
        r = random_sequence(rng, x.algebra, prefix_bound, cycle_bound)
        pairs.append((x, x.join_with(r)))
    return pairs
