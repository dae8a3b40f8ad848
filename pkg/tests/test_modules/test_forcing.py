"""Tests for boolconv.modules.forcing."""

import pytest
from hypothesis import given

from boolconv.modules.errors import PreconditionError
from boolconv.modules.forcing import (
    ForcingName,
    Statement,
    atom_trace,
    ax_bx,
    b_values,
    boolean_value,
    forcing_report,
    infinite_subsets_of,
    intersection_infinite_value,
    null_limsup_equivalence,
)
from boolconv.modules.omega import EVENS, ODDS, OmegaSet
from boolconv.modules.sequences import EPSequence, lim_inf_sup, parse_sequence
from tests.strategies import infinite_omega_sets, sequences


def test_atom_trace(a2):
    x = parse_sequence(a2, "[1]|[0,3]")
    assert atom_trace(x, a2.element(1)) == EVENS
    assert atom_trace(x, a2.element(2)).members(7) == [2, 4, 6]


def test_atom_trace_needs_an_atom(a2):
    x = EPSequence.constant(a2, 3)
    with pytest.raises(PreconditionError):
        atom_trace(x, a2.element(3))


def test_name_traces(a2):
    traces = ForcingName(parse_sequence(a2, "[]|[3]")).traces()
    assert [t.atom.word for t in traces] == [1, 2]
    assert all(t.trace == OmegaSet.full() for t in traces)


def test_boolean_values(a2):
    x = parse_sequence(a2, "[0]|[1,3]")
    assert boolean_value(x, Statement.INFINITE).word == 3
    assert boolean_value(x, Statement.COFINITE).word == 1
    assert [b.word for b in b_values(x)] == [1, 3, 3, 3, 3]


@given(sequences())
def test_b_values_match_limits(x):
    liminf, limsup = lim_inf_sup(x)
    values = b_values(x)
    assert values[0] == liminf
    assert all(b == limsup for b in values[1:])


@given(sequences())
def test_ax_bx_are_liminf_limsup(x):
    assert ax_bx(x) == lim_inf_sup(x)


@given(sequences(), infinite_omega_sets())
def test_intersection_value_below_limsup(x, a):
    assert intersection_infinite_value(x, a) <= lim_inf_sup(x)[1]


def test_infinite_subsets_are_constant(a2):
    x = parse_sequence(a2, "[3]|[1,2]")
    for b in infinite_subsets_of(x, OmegaSet.full()):
        assert b.is_infinite
        assert len({x.term(n) for n in b.members(40) if n >= 1}) == 1


def test_null_limsup(a2):
    selectors = [EVENS, ODDS, OmegaSet.full()]
    assert all(null_limsup_equivalence(parse_sequence(a2, "[3]|[0]"), selectors).values())
    assert not any(null_limsup_equivalence(parse_sequence(a2, "[]|[0,1]"), selectors).values())


def test_forcing_report(a2):
    report = forcing_report(parse_sequence(a2, "[]|[1,2]"))
    assert report["b"] == [0, 3, 3, 3, 3]
    assert (report["ax"], report["bx"]) == (0, 3)
    assert report["traces"]["1"] == EVENS.to_json()
