"""Boolean values of statements about the name τ_x over atomic algebras.

Below an atom the generic filter is principal, so τ_x evaluates to the
trace {n : atom ≤ x_n}. The Boolean value of a statement about τ_x is the
join of the atoms whose trace satisfies it. Atomic forcing adds no subsets
of ω, so every set of the extension is old and the "old set" quantifiers of
b_1, b_2 and b_3 are met by the trace itself.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from boolconv.modules.algebra import Element, ElementSet, join_words, meet_words
from boolconv.modules.errors import InvariantViolation, PreconditionError
from boolconv.modules.omega import OmegaKind, OmegaSet, lcm
from boolconv.modules.sequences import (
    EPSequence,
    compose_with_enumeration,
    lim_inf_sup,
    selector_for,
    tail_support,
    witness_subsequence,
)

logger = logging.getLogger(__name__)


class Statement(str, enum.Enum):
    INFINITE = 'infinite'
    COFINITE = 'cofinite'
    OLD_INFINITE = 'old-infinite'
    CONTAINS_OLD_INFINITE = 'contains-old-infinite'
    INFINITE_NON_SPLITTING = 'infinite-non-splitting'


@dataclass(frozen=True)
class AtomTrace:
    atom: Element
    trace: OmegaSet


def atom_trace(x: EPSequence, a: Element) -> OmegaSet:
    """{n : a ≤ x_n} for an atom a."""
    if a.algebra != x.algebra:
        raise PreconditionError(f"{a!r} does not belong to {x.algebra}")
    if not a.is_atom:
        raise PreconditionError(f"{a!r} is not an atom")
    bit = a.word
    return OmegaSet(tuple(int(bool(w & bit)) for w in x.prefix),
                    tuple(int(bool(w & bit)) for w in x.cycle))


def _old_infinite_sets(trace: OmegaSet) -> Tuple[OmegaSet, ...]:
    return tuple(s for s in (trace, trace.complement(), OmegaSet.full()) if s.is_infinite)


def _satisfies(trace: OmegaSet, statement: Statement) -> bool:
    if statement == Statement.COFINITE:
        return trace.classify() == OmegaKind.COFINITE
    if statement in (Statement.INFINITE, Statement.OLD_INFINITE):
        return trace.is_infinite
    if statement == Statement.CONTAINS_OLD_INFINITE:
        # The trace is old, so it is its own witness.
        return any(s.almost_subset(trace) for s in _old_infinite_sets(trace))
    if statement == Statement.INFINITE_NON_SPLITTING:
        return trace.is_infinite and any(not trace.splits(s) for s in _old_infinite_sets(trace))
    raise PreconditionError(f"unknown statement {statement!r}")


@dataclass(frozen=True)
class ForcingName:
    """The name τ_x = {⟨n, x_n⟩ : n ∈ ω}."""

    sequence: EPSequence

    def traces(self) -> Tuple[AtomTrace, ...]:
        x = self.sequence
        return tuple(AtomTrace(a, atom_trace(x, a)) for a in x.algebra.atom_elements())

    def value(self, statement: Statement) -> Element:
        algebra = self.sequence.algebra
        word = join_words(t.atom.word for t in self.traces() if _satisfies(t.trace, statement))
        return Element(algebra, word)


def boolean_value(x: EPSequence, statement: Statement) -> Element:
    """‖φ(τ_x)‖; the infinite and cofinite values are checked against limsup and liminf."""
    value = ForcingName(x).value(Statement(statement))
    liminf, limsup = lim_inf_sup(x)
    if statement == Statement.INFINITE and value != limsup:
        raise InvariantViolation(f"‖τ_x is infinite‖ = {value!r} but limsup = {limsup!r} for {x}")
    if statement == Statement.COFINITE and value != liminf:
        raise InvariantViolation(f"‖τ_x is cofinite‖ = {value!r} but liminf = {liminf!r} for {x}")
    return value


def b_values(x: EPSequence) -> Tuple[Element, Element, Element, Element, Element]:
    """(b_0, ..., b_4); over atomic algebras b_1 = b_2 = b_3 = b_4."""
    name = ForcingName(x)
    b0 = boolean_value(x, Statement.COFINITE)
    b4 = boolean_value(x, Statement.INFINITE)
    b1 = name.value(Statement.OLD_INFINITE)
    b2 = name.value(Statement.CONTAINS_OLD_INFINITE)
    b3 = name.value(Statement.INFINITE_NON_SPLITTING)
    for index, value in ((1, b1), (2, b2), (3, b3)):
        if value != b4:
            raise InvariantViolation(f"b_{index} = {value!r} differs from b_4 = {b4!r} for {x}")
    return b0, b1, b2, b3, b4


# =============================================================================
# a_x AND b_x
# =============================================================================

def _ax_bx_by_selectors(x: EPSequence) -> Tuple[int, int]:
    """⋀_A ⋁_{B⊂A} ⋀_{n∈B} x_n and ⋁_A ⋀_{B⊂A} ⋁_{n∈B} x_n, A and B as selectors."""
    algebra = x.algebra
    support = tail_support(x)
    a_x, b_x = algebra.top_word, 0
    for outer in support.nonempty_subsets():
        a = selector_for(x, outer)
        inner_join, inner_meet = 0, algebra.top_word
        for inner in outer.nonempty_subsets():
            b = selector_for(x, inner) & a
            z = compose_with_enumeration(x, b)
            terms = z.prefix + z.cycle
            inner_join |= meet_words(algebra, terms)
            inner_meet &= join_words(terms)
        a_x &= inner_join
        b_x |= inner_meet
    return a_x, b_x


def _bx_by_subsequences(x: EPSequence) -> int:
    """⋁_{y≺x} ⋀_{z≺y} ⋁_m z_m with explicit witness subsequences."""
    algebra = x.algebra
    result = 0
    for outer in tail_support(x).nonempty_subsets():
        y = witness_subsequence(x, outer)
        lowest = algebra.top_word
        for inner in outer.nonempty_subsets():
            z = witness_subsequence(y, inner)
            lowest &= join_words(z.prefix + z.cycle)
        result |= lowest
    return result


def ax_bx(x: EPSequence) -> Tuple[Element, Element]:
    """(a_x, b_x), checked against liminf and limsup and against each other."""
    algebra = x.algebra
    a_x, b_x = _ax_bx_by_selectors(x)
    b_x_nested = _bx_by_subsequences(x)
    if b_x != b_x_nested:
        raise InvariantViolation(f"b_x by selectors {b_x} != b_x by subsequences {b_x_nested} for {x}")
    liminf, limsup = lim_inf_sup(x)
    chain = [liminf.word, a_x, b_x, limsup.word]
    if any(low & high != low for low, high in zip(chain, chain[1:])):
        raise InvariantViolation(f"liminf <= a_x <= b_x <= limsup fails for {x}: {chain}")
    if a_x != liminf.word or b_x != limsup.word:
        raise InvariantViolation(f"a_x, b_x = {a_x}, {b_x} but liminf, limsup = {liminf.word}, "
                                 f"{limsup.word} for {x}")
    return Element(algebra, a_x), Element(algebra, b_x)


# =============================================================================
# INTERSECTIONS WITH OLD SETS
# =============================================================================

def intersection_infinite_value_by_atoms(x: EPSequence, a: OmegaSet) -> Element:
    """Join of the atoms whose trace meets A in an infinite set."""
    a.require_infinite()
    name = ForcingName(x)
    word = join_words(t.atom.word for t in name.traces() if (t.trace & a).is_infinite)
    return Element(x.algebra, word)


def intersection_infinite_value(x: EPSequence, a: OmegaSet) -> Element:
    """‖|τ_x ∩ A| = ω‖ = limsup x∘f_A."""
    a.require_infinite()
    by_composition = lim_inf_sup(compose_with_enumeration(x, a))[1]
    by_atoms = intersection_infinite_value_by_atoms(x, a)
    if by_composition != by_atoms:
        raise InvariantViolation(f"‖|τ_x ∩ A| = ω‖ for {x}, A={a}: composition gives "
                                 f"{by_composition!r}, atoms give {by_atoms!r}")
    return by_composition


def infinite_subsets_of(x: EPSequence, a: OmegaSet) -> List[OmegaSet]:
    """Infinite B ⊂ A on which x is eventually constant.

    Past the joint prefix both x and A repeat with period L, so the members
    of A in each residue class mod L form such a B.
    """
    a.require_infinite()
    start = max(len(x.prefix), len(a.prefix))
    period = lcm(len(x.cycle), len(a.cycle))
    found = []
    for remainder in range(period):
        if start + remainder in a:
            found.append(a & OmegaSet.residue(period, start + remainder, start))
    return found


def null_limsup_equivalence(x: EPSequence, sample_sets: Iterable[OmegaSet]) -> Dict[str, bool]:
    """Evaluate the three equivalent "limsup can be pushed to 0" conditions.

    - ``subsequences``: ∀y≺x ∃z≺y limsup z = 0, by the subset reduction;
    - ``selectors``: ∀f ∃g limsup x∘f∘g = 0, over the sampled ranges f[ω];
    - ``old_sets``: ∀A ∃B ⊂ A ‖|τ_x ∩ B| = ω‖ = 0, over the same samples.

    The samples are extended by one selector per tail value so that a false
    condition always has a sampled counterexample. Raises InvariantViolation
    when the three verdicts differ.
    """
    algebra = x.algebra
    support = tail_support(x)
    by_subsets = all(
        any(join_words(inner.words()) == 0 for inner in outer.nonempty_subsets())
        for outer in support.nonempty_subsets()
    )

    samples = [s for s in sample_sets if s.is_infinite]
    samples += [selector_for(x, ElementSet(algebra, 1 << w)) for w in support.words()]

    def composed_null(a: OmegaSet) -> bool:
        return any(lim_inf_sup(compose_with_enumeration(x, b))[1].word == 0
                   for b in infinite_subsets_of(x, a))

    def atoms_null(a: OmegaSet) -> bool:
        return any(intersection_infinite_value_by_atoms(x, b).word == 0
                   for b in infinite_subsets_of(x, a))

    by_selectors = all(composed_null(a) for a in samples)
    by_old_sets = all(atoms_null(a) for a in samples)
    verdicts = {
        'subsequences': by_subsets,
        'selectors': by_selectors,
        'old_sets': by_old_sets,
    }
    if len(set(verdicts.values())) != 1:
        raise InvariantViolation(f"null-limsup conditions disagree for {x}: {verdicts}")
    logger.debug("null limsup conditions for %s over %d sets: %s", x, len(samples), by_subsets)
    return verdicts


def forcing_report(x: EPSequence) -> Dict:
    """Per-sequence JSON payload of every Boolean value computed here."""
    liminf, limsup = lim_inf_sup(x)
    a_x, b_x = ax_bx(x)
    return {
        "b": [b.word for b in b_values(x)],
        "ax": a_x.word,
        "bx": b_x.word,
        "liminf": liminf.word,
        "limsup": limsup.word,
        "traces": {str(t.atom.word): t.trace.to_json() for t in ForcingName(x).traces()},
    }
