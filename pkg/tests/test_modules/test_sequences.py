"""Tests for boolconv.modules.sequences."""

import pytest
from hypothesis import given

from boolconv.modules.errors import PreconditionError, StructuralError
from boolconv.modules.omega import EVENS, OmegaSet
from boolconv.modules.sequences import (
    EPSequence,
    compose_by_indexing,
    compose_with_enumeration,
    is_liminf_stable,
    is_limsup_stable,
    lim_inf_sup,
    lim_inf_sup_by_truncation,
    parse_sequence,
    realizable_supports,
    tail_support,
    witness_subsequence,
)
from tests.strategies import infinite_omega_sets, sequences


class TestCanonicalForm:
    def test_trailing_prefix_is_absorbed(self, a2):
        assert EPSequence(a2, (3,), (3,)) == EPSequence.constant(a2, 3)

    def test_cycle_reduced_to_period(self, a2):
        x = EPSequence(a2, (), (1, 2, 1, 2))
        assert x.cycle == (1, 2)

    def test_rotation_on_absorption(self, a2):
        x = EPSequence(a2, (0, 2), (1, 2))
        assert x.prefix == (0,)
        assert x.cycle == (2, 1)
        assert x.terms(5) == [0, 2, 1, 2, 1]

    def test_word_outside_carrier(self, a1):
        with pytest.raises(StructuralError):
            EPSequence(a1, (), (2,))


class TestParse:
    def test_literal(self, a2):
        x = parse_sequence(a2, " [1, 2] | [3] ")
        assert x.prefix == (1, 2)
        assert x.cycle == (3,)
        assert x.literal() == "[1,2]|[3]"

    def test_empty_prefix(self, a2):
        assert parse_sequence(a2, "[]|[0,1]") == EPSequence(a2, (), (0, 1))

    @pytest.mark.parametrize("text", ["", "[1]", "[1]|[]", "[a]|[1]", "1|2", "[1]|[9]"])
    def test_rejects_malformed(self, a2, text):
        with pytest.raises(StructuralError):
            parse_sequence(a2, text)

    def test_json(self, a2):
        x = EPSequence(a2, (1,), (0, 3))
        assert EPSequence.from_json(x.to_json()) == x


class TestLimits:
    def test_liminf_limsup(self, a2):
        liminf, limsup = lim_inf_sup(parse_sequence(a2, "[3]|[1,2]"))
        assert (liminf.word, limsup.word) == (0, 3)

    def test_tail_support_ignores_prefix(self, a2):
        assert tail_support(parse_sequence(a2, "[3,3]|[1]")).words() == (1,)

    def test_complement_and_meet(self, a2):
        x = parse_sequence(a2, "[0]|[1,3]")
        assert x.complement() == EPSequence(a2, (3,), (2, 0))
        assert x.meet_with(a2.element(2)) == EPSequence(a2, (0,), (0, 2))

    def test_join_with_aligns_prefix_and_cycle(self, a2):
        x = EPSequence(a2, (2,), (0, 1))
        r = EPSequence(a2, (), (2, 0, 0))
        y = x.join_with(r)
        assert y.terms(14) == [a | b for a, b in zip(x.terms(14), r.terms(14))]
        assert x.le_pointwise(y)
        assert not y.le_pointwise(x)

    def test_join_with_other_algebra(self, a1, a2):
        with pytest.raises(StructuralError):
            EPSequence.constant(a1, 1).join_with(EPSequence.constant(a2, 1))

    @given(sequences(), sequences())
    def test_join_dominates(self, x, r):
        y = x.join_with(r)
        assert x.le_pointwise(y)
        assert r.le_pointwise(y)

    @given(sequences())
    def test_truncation_agrees(self, x):
        assert lim_inf_sup_by_truncation(x) == lim_inf_sup(x)

    @given(sequences(atoms=3, max_prefix=2, max_cycle=3))
    def test_liminf_below_limsup(self, x):
        liminf, limsup = lim_inf_sup(x)
        assert liminf <= limsup


class TestSubsequences:
    def test_compose_with_evens(self, a2):
        x = parse_sequence(a2, "[]|[0,1,2,3]")
        assert compose_with_enumeration(x, EVENS) == parse_sequence(a2, "[]|[0,2]")

    def test_compose_with_finite_set(self, a2):
        with pytest.raises(PreconditionError):
            compose_with_enumeration(EPSequence.constant(a2, 1), OmegaSet((1,), (0,)))

    @given(sequences(), infinite_omega_sets())
    def test_compose_matches_indexing(self, x, a):
        composed = compose_with_enumeration(x, a)
        assert composed.terms(32) == compose_by_indexing(x, a, 32)

    @given(sequences(), infinite_omega_sets())
    def test_compose_shrinks_tail_support(self, x, a):
        assert tail_support(compose_with_enumeration(x, a)).issubset(tail_support(x))

    def test_witness_subsequence(self, a2):
        x = parse_sequence(a2, "[3]|[0,1,2]")
        support = a2.element_set([0, 2])
        y = witness_subsequence(x, support)
        assert tail_support(y) == support

    def test_witness_outside_support(self, a2):
        x = parse_sequence(a2, "[3]|[0,1]")
        with pytest.raises(PreconditionError):
            witness_subsequence(x, a2.element_set([3]))
        with pytest.raises(PreconditionError):
            witness_subsequence(x, a2.empty())

    def test_realizable_supports(self, a2):
        x = parse_sequence(a2, "[]|[1,2]")
        assert [s.words() for s in realizable_supports(x)] == [(1,), (2,), (1, 2)]

    def test_stability(self, a2):
        assert is_limsup_stable(EPSequence.constant(a2, 2))
        assert is_liminf_stable(EPSequence(a2, (0, 1), (3,)))
        assert not is_limsup_stable(parse_sequence(a2, "[]|[1,3]"))
        assert not is_liminf_stable(parse_sequence(a2, "[]|[1,3]"))
