"""Tests for boolconv.modules.omega."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolconv.modules.errors import PreconditionError, StructuralError
from boolconv.modules.omega import (
    EVENS,
    ODDS,
    OmegaKind,
    OmegaSet,
    canonical_form,
    canonicalize_omega_set,
    classify_omega_set,
    minimal_period,
)
from tests.strategies import infinite_omega_sets


def test_minimal_period():
    assert minimal_period((1, 0, 1, 0)) == (1, 0)
    assert minimal_period((1, 1, 0)) == (1, 1, 0)


def test_canonical_form_absorbs_prefix():
    assert OmegaSet((0, 1), (0, 1)) == OmegaSet((), (0, 1))
    assert canonical_form((2, 3), (3,)) == ((2,), (3,))


def test_empty_cycle_is_structural_error():
    with pytest.raises(StructuralError):
        OmegaSet((1,), ())


def test_bits_must_be_binary():
    with pytest.raises(StructuralError):
        OmegaSet((), (2,))


def test_evens_and_odds():
    assert EVENS.nth(3) == 6
    assert ODDS.members(7) == [1, 3, 5]
    assert str(EVENS) == "(10)ω"
    assert EVENS | ODDS == OmegaSet.full()
    assert (EVENS & ODDS) == OmegaSet.empty()


def test_residue():
    assert OmegaSet.residue(3, 1).members(10) == [1, 4, 7]
    assert OmegaSet.residue(2, 0, start=3).members(10) == [4, 6, 8]
    with pytest.raises(PreconditionError):
        OmegaSet.residue(0, 0)


def test_classification():
    assert OmegaSet((1, 1), (0,)).classify() == OmegaKind.FINITE
    assert OmegaSet((0,), (1,)).classify() == OmegaKind.COFINITE
    assert EVENS.classify() == OmegaKind.INFINITE_COINFINITE


def test_module_level_entry_points():
    assert canonicalize_omega_set((0, 1), (0, 1)) == OmegaSet((), (0, 1))
    assert classify_omega_set(EVENS) == OmegaKind.INFINITE_COINFINITE
    assert classify_omega_set(canonicalize_omega_set((1,), (0,))) == OmegaKind.FINITE
    assert classify_omega_set(canonicalize_omega_set((0,), (1, 1))) == OmegaKind.COFINITE


def test_nth_of_finite_set():
    with pytest.raises(PreconditionError):
        OmegaSet((1,), (0,)).nth(0)


def test_almost_subset_and_splitting():
    assert OmegaSet((1, 1, 1), (0, 1)).almost_subset(EVENS)
    assert not OmegaSet((1, 1, 1), (1, 0)).almost_subset(EVENS)
    assert not ODDS.almost_subset(EVENS)
    assert EVENS.splits(OmegaSet.full())
    assert not EVENS.splits(ODDS)


def test_json():
    a = OmegaSet((0, 1), (1, 1, 0))
    assert OmegaSet.from_json(a.to_json()) == a


@given(infinite_omega_sets())
def test_nth_enumerates_members_in_order(a):
    listed = list(a.enumerate(12))
    assert listed == sorted(listed)
    assert all(n in a for n in listed)
    assert a.members(listed[-1] + 1) == listed


@given(infinite_omega_sets(), infinite_omega_sets(), st.integers(min_value=0, max_value=40))
def test_set_operations_pointwise(a, b, n):
    assert (n in (a & b)) == (n in a and n in b)
    assert (n in (a | b)) == (n in a or n in b)
    assert (n in (a - b)) == (n in a and n not in b)
    assert (n in a.complement()) == (n not in a)
