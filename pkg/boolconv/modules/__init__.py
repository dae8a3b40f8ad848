"""Módulos do boolconv."""

from boolconv.modules.algebra import Algebra, Element, ElementSet
from boolconv.modules.convergence import (
    Bar,
    LambdaI,
    LambdaLI,
    LambdaLS,
    LambdaS,
    LimOf,
    Meet,
    Star,
    Verdict,
    parse_convergence,
)
from boolconv.modules.omega import OmegaSet
from boolconv.modules.sequences import EPSequence, parse_sequence
from boolconv.modules.topology import FiniteTopology, generate_sequential_topology

__all__ = [
    'Algebra',
    'Element',
    'ElementSet',
    'EPSequence',
    'OmegaSet',
    'parse_sequence',
    'LambdaS',
    'LambdaLS',
    'LambdaLI',
    'LambdaI',
    'Star',
    'Bar',
    'Meet',
    'LimOf',
    'Verdict',
    'parse_convergence',
    'FiniteTopology',
    'generate_sequential_topology',
]
