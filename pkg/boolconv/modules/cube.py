"""Product topologies on P(κ) for finite κ, the atom count of the algebra.

Identifying X ⊂ κ with its characteristic function, the Cantor cube is the
product of discrete two-point spaces and the Aleksandrov cube the product
of two-point spaces with open sets ∅, {0}, {0, 1}. Both are built from
their product subbases.
"""

import logging
from typing import Dict, Iterable, List

from boolconv.modules.algebra import Algebra, ElementSet, join_words
from boolconv.modules.convergence import (
    LambdaLS,
    LambdaS,
    LimOf,
    Verdict,
    convergence_equal,
    first_failure,
)
from boolconv.modules.sequences import EPSequence, lim_inf_sup
from boolconv.modules.topology import FiniteTopology, generate_sequential_topology, topology_from_subbasis

logger = logging.getLogger(__name__)


def cylinder(algebra: Algebra, coordinate: int, value: int) -> int:
    """Mask of {X : X(coordinate) = value}."""
    bit = 1 << coordinate
    return join_words(1 << w for w in range(algebra.size) if bool(w & bit) == bool(value))


def aleksandrov_cube(algebra: Algebra) -> FiniteTopology:
    subbasis = [cylinder(algebra, alpha, 0) for alpha in range(algebra.atoms)]
    return topology_from_subbasis(algebra, subbasis)


def cantor_cube(algebra: Algebra) -> FiniteTopology:
    subbasis = [cylinder(algebra, alpha, value)
                for alpha in range(algebra.atoms) for value in (0, 1)]
    return topology_from_subbasis(algebra, subbasis)


def cantor_coordinate_limits(x: EPSequence) -> ElementSet:
    """{X : ∀α ∃k ∀n≥k x_n(α) = X(α)}."""
    algebra = x.algebra
    found = []
    for candidate in range(algebra.size):
        if all(all(bool(w >> alpha & 1) == bool(candidate >> alpha & 1) for w in x.cycle)
               for alpha in range(algebra.atoms)):
            found.append(candidate)
    return algebra.element_set(found)


def aleksandrov_coordinate_limits(x: EPSequence) -> ElementSet:
    """{X : ∀α X(α) = 1 or eventually x_n(α) = 0}."""
    algebra = x.algebra
    found = []
    for candidate in range(algebra.size):
        if all(candidate >> alpha & 1 or not any(w >> alpha & 1 for w in x.cycle)
               for alpha in range(algebra.atoms)):
            found.append(candidate)
    return algebra.element_set(found)


def limsup_criterion_limits(x: EPSequence) -> ElementSet:
    """{X : limsup X_n ⊂ X}."""
    limsup = lim_inf_sup(x)[1].word
    return x.algebra.element_set(w for w in range(x.algebra.size) if limsup & w == limsup)


def _agree(corpus: List[EPSequence], left, right, label: str) -> Verdict:
    def problem(x: EPSequence):
        a, b = left(x), right(x)
        return None if a == b else f"{label}: {a.to_json()} != {b.to_json()}"

    return first_failure(corpus, problem)


def check_cube_models(algebra: Algebra, corpus: Iterable[EPSequence]) -> Dict[str, Verdict]:
    """Every cube-model check, keyed by name."""
    corpus = list(corpus)
    cantor = cantor_cube(algebra)
    aleksandrov = aleksandrov_cube(algebra)

    def stable_limits(x: EPSequence) -> ElementSet:
        liminf, limsup = lim_inf_sup(x)
        return algebra.element_set([liminf] if liminf == limsup else [])

    checks = {
        'cantor-is-discrete': Verdict(cantor.is_discrete, None, '' if cantor.is_discrete else
                                      f"{len(cantor.closed_sets)} closed sets"),
        'cantor-lim-is-lambda-s': convergence_equal(LimOf(cantor, label='cantor'), LambdaS(), corpus),
        'cantor-coordinatewise': _agree(corpus, cantor_coordinate_limits, cantor.lim,
                                        "coordinatewise limits vs cantor lim"),
        'cantor-liminf-limsup': _agree(corpus, cantor_coordinate_limits, stable_limits,
                                       "coordinatewise limits vs liminf = limsup"),
        'cantor-is-o-lambda-s': Verdict(cantor == generate_sequential_topology(LambdaS(), algebra)),
        'aleksandrov-lim-is-lambda-ls': convergence_equal(LimOf(aleksandrov, label='aleksandrov'),
                                                          LambdaLS(), corpus),
        'aleksandrov-coordinatewise': _agree(corpus, aleksandrov_coordinate_limits, aleksandrov.lim,
                                             "coordinatewise limits vs aleksandrov lim"),
        'aleksandrov-limsup-criterion': _agree(corpus, limsup_criterion_limits, aleksandrov.lim,
                                               "limsup criterion vs aleksandrov lim"),
        'aleksandrov-is-o-lambda-ls': Verdict(aleksandrov == generate_sequential_topology(LambdaLS(), algebra)),
    }
    logger.debug("cube checks on %s over %d sequences", algebra, len(corpus))
    return checks
