"""Tests for boolconv.modules.cube."""

from boolconv.modules.convergence import LambdaLS, LambdaS
from boolconv.modules.cube import (
    aleksandrov_coordinate_limits,
    aleksandrov_cube,
    cantor_coordinate_limits,
    cantor_cube,
    check_cube_models,
    cylinder,
    limsup_criterion_limits,
)
from boolconv.modules.sequences import parse_sequence
from boolconv.modules.topology import generate_sequential_topology


def test_cylinder(a2):
    # words with atom 0 set: 1 and 3
    assert cylinder(a2, 0, 1) == 0b1010
    assert cylinder(a2, 0, 0) == 0b0101


def test_cantor_cube_is_discrete(a2):
    assert cantor_cube(a2).is_discrete
    assert cantor_cube(a2) == generate_sequential_topology(LambdaS(), a2)


def test_aleksandrov_cube_is_o_ls(a3):
    assert aleksandrov_cube(a3) == generate_sequential_topology(LambdaLS(), a3)


def test_coordinatewise_limits(a2):
    x = parse_sequence(a2, "[3]|[1,3]")
    assert cantor_coordinate_limits(x).words() == ()
    assert aleksandrov_coordinate_limits(x).words() == (3,)
    assert limsup_criterion_limits(x).words() == (3,)
    y = parse_sequence(a2, "[0,2]|[1]")
    assert cantor_coordinate_limits(y).words() == (1,)
    assert aleksandrov_coordinate_limits(y).words() == (1, 3)


def test_all_models_agree(a2, small_corpus):
    checks = check_cube_models(a2, small_corpus)
    assert len(checks) == 9
    failed = [name for name, verdict in checks.items() if not verdict]
    assert failed == []
