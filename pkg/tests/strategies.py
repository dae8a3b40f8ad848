"""Hypothesis strategies for sequences and subsets of ω."""

from hypothesis import strategies as st

from boolconv.modules.algebra import Algebra
from boolconv.modules.omega import OmegaSet
from boolconv.modules.sequences import EPSequence


@st.composite
def sequences(draw, atoms=2, max_prefix=3, max_cycle=4):
    """Random eventually periodic sequence over P(atoms)."""
    algebra = Algebra(atoms)
    words = st.integers(min_value=0, max_value=algebra.size - 1)
    prefix = draw(st.lists(words, max_size=max_prefix))
    cycle = draw(st.lists(words, min_size=1, max_size=max_cycle))
    return EPSequence(algebra, tuple(prefix), tuple(cycle))


@st.composite
def infinite_omega_sets(draw, max_prefix=3, max_cycle=4):
    """Random infinite eventually periodic subset of ω."""
    bits = st.integers(min_value=0, max_value=1)
    prefix = draw(st.lists(bits, max_size=max_prefix))
    cycle = draw(st.lists(bits, min_size=1, max_size=max_cycle))
    cycle[draw(st.integers(min_value=0, max_value=len(cycle) - 1))] = 1
    return OmegaSet(tuple(prefix), tuple(cycle))
