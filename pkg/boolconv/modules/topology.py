"""Finite topologies on an algebra carrier and the sequential topologies O_λ.

Every finite topology is Alexandrov: it is fixed by the closure of each
point, and the smallest open set around a point is the set of points whose
closure contains it. Limits of sequences therefore only need the tail
support: a is a limit of x iff the minimal neighbourhood of a contains
every value that occurs infinitely often.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from boolconv.modules.algebra import Algebra, ElementSet, iter_bits, join_words, popcount, submasks
from boolconv.modules.convergence import (
    PASS,
    Convergence,
    LambdaLI,
    LambdaLS,
    LimOf,
    Star,
    Verdict,
    convergence_equal,
    evaluate_support,
    first_failure,
    require_l1_l2,
)
from boolconv.modules.errors import InvariantViolation, PreconditionError, ResourceCapError, StructuralError
from boolconv.modules.sequences import EPSequence, lim_inf_sup, tail_support
from boolconv.modules.settings import (
    MAX_ATOMS_BRUTE_FORCE,
    MAX_ATOMS_OPEN_SET_FORM,
    MAX_ATOMS_TOPOLOGY,
)

logger = logging.getLogger(__name__)


def require_atoms(algebra: Algebra, cap: int, cap_name: str, what: str) -> None:
    if algebra.atoms > cap:
        raise ResourceCapError(what, cap_name, cap, algebra.atoms)


# =============================================================================
# FINITE TOPOLOGY
# =============================================================================

@dataclass(frozen=True)
class FiniteTopology:
    """A topology on the carrier of an algebra, given by its closed sets."""

    algebra: Algebra
    closed_sets: FrozenSet[int]

    def __post_init__(self):
        closed = frozenset(self.closed_sets)
        object.__setattr__(self, 'closed_sets', closed)
        carrier = self.algebra.carrier_mask
        for mask in closed:
            if isinstance(mask, bool) or not isinstance(mask, int) or not 0 <= mask <= carrier:
                raise StructuralError(f"{mask!r} is not a subset of the carrier of {self.algebra}")
        if 0 not in closed or carrier not in closed:
            raise StructuralError("a topology must contain the empty set and the carrier")
        points = self.point_closures
        for mask in closed:
            if join_words(points[a] for a in iter_bits(mask)) != mask:
                raise StructuralError(f"the family is not closed under intersection at "
                                      f"{ElementSet(self.algebra, mask)!r}")
            for cl in points:
                if mask | cl not in closed:
                    raise StructuralError(f"the family is not closed under union at "
                                          f"{ElementSet(self.algebra, mask | cl)!r}")

    @classmethod
    def discrete(cls, algebra: Algebra) -> 'FiniteTopology':
        return cls(algebra, frozenset(range(algebra.carrier_mask + 1)))

    @classmethod
    def indiscrete(cls, algebra: Algebra) -> 'FiniteTopology':
        return cls(algebra, frozenset({0, algebra.carrier_mask}))

    @classmethod
    def from_open_sets(cls, algebra: Algebra, open_sets: Iterable[int]) -> 'FiniteTopology':
        carrier = algebra.carrier_mask
        return cls(algebra, frozenset(carrier ^ o for o in open_sets))

    @cached_property
    def point_closures(self) -> Tuple[int, ...]:
        """point_closures[a] is the closure of {a}."""
        table = []
        carrier = self.algebra.carrier_mask
        for a in range(self.algebra.size):
            cl = carrier
            for mask in self.closed_sets:
                if mask >> a & 1:
                    cl &= mask
            table.append(cl)
        return tuple(table)

    @cached_property
    def neighborhood_masks(self) -> Tuple[int, ...]:
        """neighborhood_masks[a] is the minimal open set containing a."""
        closures = self.point_closures
        return tuple(
            join_words(1 << b for b in range(self.algebra.size) if closures[b] >> a & 1)
            for a in range(self.algebra.size)
        )

    def minimal_open_neighborhood(self, a: int) -> ElementSet:
        return ElementSet(self.algebra, self.neighborhood_masks[a])

    def closure(self, s: ElementSet) -> ElementSet:
        """The least closed superset of s."""
        if s.algebra != self.algebra:
            raise StructuralError(f"{s!r} does not belong to {self.algebra}")
        return ElementSet(self.algebra, join_words(self.point_closures[a] for a in iter_bits(s.mask)))

    def open_sets(self) -> FrozenSet[int]:
        carrier = self.algebra.carrier_mask
        return frozenset(carrier ^ f for f in self.closed_sets)

    def is_open(self, mask: int) -> bool:
        return self.algebra.carrier_mask ^ mask in self.closed_sets

    def lim(self, x: EPSequence) -> ElementSet:
        """Points every neighbourhood of which contains all but finitely many terms of x."""
        if x.algebra != self.algebra:
            raise StructuralError(f"{x} is over {x.algebra}, the topology over {self.algebra}")
        support = tail_support(x).mask
        mask = join_words(1 << a for a, nbhd in enumerate(self.neighborhood_masks)
                          if nbhd & support == support)
        return ElementSet(self.algebra, mask)

    def is_subtopology_of(self, other: 'FiniteTopology') -> bool:
        """Every open set of self is open in other."""
        return self.closed_sets <= other.closed_sets

    @property
    def is_discrete(self) -> bool:
        return len(self.closed_sets) == 1 << self.algebra.size

    def sorted_closed_sets(self) -> List[List[int]]:
        families = [list(iter_bits(mask)) for mask in self.closed_sets]
        return sorted(families, key=lambda words: (len(words), words))

    def to_json(self) -> Dict:
        return {"algebra": self.algebra.to_json(), "closed_sets": self.sorted_closed_sets()}

    @classmethod
    def from_json(cls, data) -> 'FiniteTopology':
        if not isinstance(data, dict) or "closed_sets" not in data or "algebra" not in data:
            raise StructuralError("topology JSON needs algebra and closed_sets")
        algebra = Algebra.from_json(data["algebra"])
        return cls(algebra, frozenset(ElementSet.from_json(algebra, f).mask for f in data["closed_sets"]))

    def __repr__(self):
        return f"FiniteTopology({self.algebra}, {len(self.closed_sets)} closed sets)"


def lim_of_topology(t: FiniteTopology, x: EPSequence) -> ElementSet:
    return t.lim(x)


def topology_from_subbasis(algebra: Algebra, subbasis: Iterable[int]) -> FiniteTopology:
    """The coarsest topology in which every member of subbasis is open."""
    carrier = algebra.carrier_mask
    basis = {carrier}
    for member in subbasis:
        basis |= {b & member for b in basis}
    opens = {0}
    for b in sorted(basis):
        opens |= {o | b for o in opens}
    return FiniteTopology.from_open_sets(algebra, opens)


def specialization_graph(t: FiniteTopology) -> nx.DiGraph:
    """Edge a → b iff a lies in the closure of {b}, loops left out."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(t.algebra.size))
    for b, cl in enumerate(t.point_closures):
        graph.add_edges_from((a, b) for a in iter_bits(cl) if a != b)
    return graph


def is_preorder_graph(graph: nx.DiGraph) -> bool:
    """The edge relation plus loops is reflexive and transitive."""
    closure = nx.transitive_closure(graph, reflexive=False)
    return all(graph.has_edge(u, v) for u, v in closure.edges if u != v)


# =============================================================================
# SEQUENTIAL CLOSURE
# =============================================================================

def sequential_closure_step(c: Convergence, a: ElementSet) -> ElementSet:
    """u_λ(A): every limit of every sequence with values in A."""
    algebra = a.algebra
    mask = 0
    for sub in submasks(a.mask):
        mask |= evaluate_support(c, algebra, sub)
    return ElementSet(algebra, mask)


@lru_cache(maxsize=None)
def closure_table(c: Convergence, algebra: Algebra) -> Tuple[int, ...]:
    """u_λ(F) for every F ⊂ carrier, indexed by the mask of F.

    u(F) = λ(F) ∪ ⋃_{a∈F} u(F ∖ {a}), where λ(F) are the limits of the
    sequences with tail support exactly F.
    """
    require_atoms(algebra, MAX_ATOMS_TOPOLOGY, 'MAX_ATOMS_TOPOLOGY', 'sequential closure table')
    table = [0] * (algebra.carrier_mask + 1)
    for mask in range(1, algebra.carrier_mask + 1):
        value = evaluate_support(c, algebra, mask)
        for a in iter_bits(mask):
            value |= table[mask & ~(1 << a)]
        table[mask] = value
    logger.debug("closure table of %s over %s: %d entries", c.name, algebra, len(table))
    return tuple(table)


@dataclass(frozen=True)
class ClosureResult:
    closure: ElementSet
    steps: int


def closure_fixpoint(c: Convergence, a: ElementSet) -> ClosureResult:
    """Iterate A ↦ A ∪ u_λ(A) until nothing changes; steps counts applications of u_λ."""
    current = a
    steps = 0
    limit = a.algebra.size + 1
    while True:
        steps += 1
        following = current | sequential_closure_step(c, current)
        if following == current:
            break
        if steps > limit:
            raise InvariantViolation(f"closure of {a!r} under {c.name} did not stabilize in {limit} steps")
        current = following
    logger.debug("closure of %r under %s: %d steps", a, c.name, steps)
    return ClosureResult(current, steps)


def open_set_form(c: Convergence, algebra: Algebra) -> FrozenSet[int]:
    """Open sets O with: O ∩ λ(x) ≠ ∅ ⇒ x is eventually in O, for every x."""
    require_atoms(algebra, MAX_ATOMS_OPEN_SET_FORM, 'MAX_ATOMS_OPEN_SET_FORM', 'open-set form of O_λ')
    limits = [(s, evaluate_support(c, algebra, s)) for s in range(1, algebra.carrier_mask + 1)]
    opens = set()
    for o in range(algebra.carrier_mask + 1):
        if all(not lim & o or s & o == s for s, lim in limits):
            opens.add(o)
    return frozenset(opens)


@lru_cache(maxsize=None)
def generate_sequential_topology(c: Convergence, algebra: Algebra) -> FiniteTopology:
    """O_λ from the fixed points of u_λ; c must satisfy (L1) and (L2)."""
    require_atoms(algebra, MAX_ATOMS_TOPOLOGY, 'MAX_ATOMS_TOPOLOGY', 'sequential topology')
    require_l1_l2(c, algebra)
    table = closure_table(c, algebra)
    closed = frozenset(mask for mask, value in enumerate(table) if value == mask)
    if algebra.atoms <= MAX_ATOMS_OPEN_SET_FORM:
        carrier = algebra.carrier_mask
        from_opens = frozenset(carrier ^ o for o in open_set_form(c, algebra))
        if from_opens != closed:
            raise InvariantViolation(f"O_{c.name} on {algebra}: {len(closed)} closed sets from u_λ, "
                                     f"{len(from_opens)} from the open-set form")
    logger.debug("O_%s on %s has %d closed sets", c.name, algebra, len(closed))
    return FiniteTopology(algebra, closed)


# =============================================================================
# CLASSIFIERS
# =============================================================================

def is_topological_convergence(c: Convergence, corpus: Iterable[EPSequence], algebra: Algebra) -> Verdict:
    """c = lim of O_c on the corpus."""
    t = generate_sequential_topology(c, algebra)
    return convergence_equal(c, LimOf(t, label=f'O_{c.name}'), corpus)


def is_weakly_topological(c: Convergence, corpus: Iterable[EPSequence], algebra: Algebra) -> Verdict:
    """c* = lim of O_c on the corpus."""
    t = generate_sequential_topology(c, algebra)
    return convergence_equal(Star(c), LimOf(t, label=f'O_{c.name}'), corpus)


def up_sets(algebra: Algebra) -> FrozenSet[int]:
    return frozenset(m for m in range(algebra.carrier_mask + 1) if algebra.up_closure_mask(m) == m)


def down_sets(algebra: Algebra) -> FrozenSet[int]:
    return frozenset(m for m in range(algebra.carrier_mask + 1) if algebra.down_closure_mask(m) == m)


def _keeps_monotone_limits(algebra: Algebra, mask: int, flavor: str) -> bool:
    """Every monotone sequence in the set has its limit there.

    Decreasing sequences (increasing for li) stop at their last value; the
    two-valued ones [a]|[b] with b below a cover every such limit.
    """
    members = list(iter_bits(mask))
    for a in members:
        for b in members:
            ordered = b & a == b if flavor == 'ls' else a & b == a
            if ordered:
                x = EPSequence(algebra, (a,), (b,))
                liminf, limsup = lim_inf_sup(x)
                limit = liminf if flavor == 'ls' else limsup
                if not mask >> limit.word & 1:
                    return False
    return True


def characteristic_family(algebra: Algebra, flavor: str) -> FrozenSet[int]:
    """Up-sets containing infima of decreasing members (ls), or the dual (li)."""
    if flavor not in ('ls', 'li'):
        raise PreconditionError(f"flavor must be 'ls' or 'li', got {flavor!r}")
    candidates = up_sets(algebra) if flavor == 'ls' else down_sets(algebra)
    return frozenset(m for m in candidates if _keeps_monotone_limits(algebra, m, flavor))


def _family_difference(algebra: Algebra, got: FrozenSet[int], expected: FrozenSet[int],
                       label: str) -> Verdict:
    missing = sorted(expected - got)
    extra = sorted(got - expected)
    if not missing and not extra:
        return PASS
    if missing:
        return Verdict(False, ElementSet(algebra, missing[0]), f"{label}: closed set missing")
    return Verdict(False, ElementSet(algebra, extra[0]), f"{label}: unexpected closed set")


def check_closed_set_characterization(t: FiniteTopology, flavor: str) -> Verdict:
    """The closed sets of t are exactly the characteristic family of the flavor."""
    expected = characteristic_family(t.algebra, flavor)
    return _family_difference(t.algebra, t.closed_sets, expected, f"closed sets of O_{flavor}")


def dual_homeomorphism_check(algebra: Algebra) -> Verdict:
    """b ↦ b' maps the closed sets of O_ls onto those of O_li and back."""
    ls = generate_sequential_topology(LambdaLS(), algebra).closed_sets
    li = generate_sequential_topology(LambdaLI(), algebra).closed_sets
    image_ls = frozenset(algebra.complement_mask(m) for m in ls)
    image_li = frozenset(algebra.complement_mask(m) for m in li)
    forward = _family_difference(algebra, image_ls, li, "complements of O_ls closed sets")
    if not forward:
        return forward
    return _family_difference(algebra, image_li, ls, "complements of O_li closed sets")


def condition_stable_subsequences(algebra: Algebra, supports: Optional[Iterable[int]] = None) -> Verdict:
    """Every tail support S has a nonempty T ⊂ S whose subsets all share the join of T.

    Singletons are tried first; they always work.
    """
    if supports is None:
        supports = range(1, algebra.carrier_mask + 1)

    def stable(t: int) -> bool:
        top = join_words(iter_bits(t))
        return all(join_words(iter_bits(u)) == top for u in submasks(t))

    for s in supports:
        singletons = [1 << a for a in iter_bits(s)]
        others = (t for t in submasks(s) if popcount(t) > 1)
        if not any(stable(t) for t in itertools.chain(singletons, others)):
            return Verdict(False, EPSequence.from_support(algebra, ElementSet(algebra, s)),
                           "no limsup-stable subsequence")
    return PASS


def zero_witness_equivalence(corpus: Iterable[EPSequence], algebra: Algebra) -> Verdict:
    """lim_{O_ls} ≠ λ_ls on the corpus iff some x has 0 ∈ lim_{O_ls}(x) ∖ λ_ls(x)."""
    corpus = list(corpus)
    t = generate_sequential_topology(LambdaLS(), algebra)
    differs = not convergence_equal(LambdaLS(), LimOf(t), corpus)
    zero = first_failure(corpus, lambda x: 'zero witness' if (
        0 in t.lim(x) and 0 not in LambdaLS()(x)) else None)
    zero_found = not zero.ok
    if differs == zero_found:
        return PASS
    return Verdict(False, zero.witness, f"lim differs: {differs}, zero witness found: {zero_found}")


def is_continuous(source: FiniteTopology, target: FiniteTopology, fn) -> Verdict:
    """Preimages under fn (on element words) of closed sets are closed."""
    size = source.algebra.size
    for closed in sorted(target.closed_sets):
        preimage = join_words(1 << w for w in range(size) if closed >> fn(w) & 1)
        if preimage not in source.closed_sets:
            return Verdict(False, ElementSet(target.algebra, closed), "preimage is not closed")
    return PASS


def monotone_lim_check(t: FiniteTopology, pairs: Iterable[Tuple[EPSequence, EPSequence]]) -> Verdict:
    """x_n ≤ y_n for all n gives lim(y) ⊂ lim(x); pairs are checked shortest x first."""
    ordered = sorted(pairs, key=lambda pair: pair[0].sort_key() + pair[1].sort_key())
    for x, y in ordered:
        if not x.le_pointwise(y):
            raise PreconditionError(f"{x} is not below {y} termwise")
        if not t.lim(y).issubset(t.lim(x)):
            return Verdict(False, x, f"lim of {y} is not inside lim of x")
    return PASS


def stable_range_closure(x: EPSequence, flavor: str) -> Tuple[ElementSet, ElementSet]:
    """(closure of the range of x in O_flavor, (lim x)↑ ∪ ⋃ x_n↑ or the dual)."""
    algebra = x.algebra
    liminf, limsup = lim_inf_sup(x)
    if flavor == 'ls':
        c, tables, anchor = LambdaLS(), algebra.up_masks, limsup.word
    elif flavor == 'li':
        c, tables, anchor = LambdaLI(), algebra.down_masks, liminf.word
    else:
        raise PreconditionError(f"flavor must be 'ls' or 'li', got {flavor!r}")
    closure = closure_fixpoint(c, x.values()).closure
    formula = tables[anchor] | join_words(tables[w] for w in x.values().words())
    return closure, ElementSet(algebra, formula)


# =============================================================================
# BRUTE FORCE OVER ALL TOPOLOGIES
# =============================================================================

@lru_cache(maxsize=None)
def all_topologies(algebra: Algebra) -> Tuple[FiniteTopology, ...]:
    """Every topology on the carrier, by closure of candidate families under ∪ and ∩."""
    require_atoms(algebra, MAX_ATOMS_BRUTE_FORCE, 'MAX_ATOMS_BRUTE_FORCE', 'topology enumeration')
    carrier = algebra.carrier_mask
    inner = [m for m in range(1, carrier)]
    found = []
    for choice in range(1 << len(inner)):
        family = {0, carrier}
        family.update(m for i, m in enumerate(inner) if choice >> i & 1)
        if all(a | b in family and a & b in family for a in family for b in family):
            found.append(FiniteTopology(algebra, frozenset(family)))
    logger.debug("%d topologies on the %d-point carrier", len(found), algebra.size)
    return tuple(found)


def support_representatives(corpus: Iterable[EPSequence]) -> List[EPSequence]:
    """The shortest corpus member for each tail support."""
    chosen: Dict[int, EPSequence] = {}
    for x in sorted(corpus, key=EPSequence.sort_key):
        chosen.setdefault(tail_support(x).mask, x)
    return [chosen[k] for k in sorted(chosen)]


@dataclass(frozen=True)
class MaximalityReport:
    verdict: Verdict
    topology_count: int
    dominating_count: int

    def to_json(self) -> Dict:
        return {
            **self.verdict.to_json(),
            "topologies": self.topology_count,
            "dominating": self.dominating_count,
        }


def maximality_brute_force(c: Convergence, algebra: Algebra, corpus: Iterable[EPSequence]) -> MaximalityReport:
    """O_c is the largest topology t with c ≤ lim_t, and lim_{O_c} ≤ lim_t for each such t."""
    topologies = all_topologies(algebra)
    generated = generate_sequential_topology(c, algebra)
    sample = support_representatives(corpus)
    limit_of_generated = LimOf(generated)

    def dominates(t: FiniteTopology) -> bool:
        return all(c(x).issubset(t.lim(x)) for x in sample)

    if not dominates(generated):
        return MaximalityReport(Verdict(False, None, f"{c.name} is not below lim of O_{c.name}"),
                                len(topologies), 0)
    count = 0
    for t in topologies:
        if not dominates(t):
            continue
        count += 1
        if not t.is_subtopology_of(generated):
            return MaximalityReport(Verdict(False, None, f"{t!r} dominates {c.name} but is not "
                                            f"contained in O_{c.name}"), len(topologies), count)
        for x in sample:
            if not limit_of_generated(x).issubset(t.lim(x)):
                return MaximalityReport(Verdict(False, x, "lim of O_λ is not minimal"),
                                        len(topologies), count)
    return MaximalityReport(PASS, len(topologies), count)
