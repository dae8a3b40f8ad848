"""Property suites over exhaustive and seeded corpora.

Each suite is a generator of named checks for one algebra. ``run_suite``
runs the selected suites for every atom count up to ``max_atoms`` and
collects the verdicts into a ``SuiteReport`` whose canonical payload is
identical across runs with the same configuration.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

from boolconv.modules.algebra import Algebra, ElementSet, submasks
from boolconv.modules.convergence import (
    PASS,
    Bar,
    Convergence,
    LambdaI,
    LambdaLI,
    LambdaLS,
    LambdaS,
    LimOf,
    Meet,
    Star,
    Verdict,
    check_axioms,
    convergence_equal,
    convergence_le,
    evaluate_support,
    first_failure,
    tail_support_determinism,
)
from boolconv.modules.corpus import (
    dominating_pairs,
    generate_corpus,
    pair_key,
    random_selectors,
    selector_pairs,
)
from boolconv.modules.cube import check_cube_models
from boolconv.modules.errors import InvariantViolation, PreconditionError, StructuralError
from boolconv.modules.forcing import (
    Statement,
    ax_bx,
    b_values,
    boolean_value,
    intersection_infinite_value,
    null_limsup_equivalence,
)
from boolconv.modules.omega import OmegaSet
from boolconv.modules.sequences import (
    EPSequence,
    compose_by_indexing,
    compose_with_enumeration,
    is_liminf_stable,
    is_limsup_stable,
    lim_inf_sup,
    lim_inf_sup_by_truncation,
    stabilization_bound,
    tail_support,
    witness_subsequence,
)
from boolconv.modules.settings import (
    DEFAULT_MAX_ATOMS,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_SELECTOR_SAMPLES,
    MAX_ATOMS_BRUTE_FORCE,
    MAX_ATOMS_OPEN_SET_FORM,
)
from boolconv.modules.topology import (
    FiniteTopology,
    check_closed_set_characterization,
    closure_table,
    condition_stable_subsequences,
    down_sets,
    dual_homeomorphism_check,
    generate_sequential_topology,
    is_continuous,
    is_preorder_graph,
    is_topological_convergence,
    is_weakly_topological,
    maximality_brute_force,
    monotone_lim_check,
    open_set_form,
    sequential_closure_step,
    specialization_graph,
    stable_range_closure,
    up_sets,
    zero_witness_equivalence,
)
from boolconv.modules.validation import ValidationError, run_all_validations

logger = logging.getLogger(__name__)

COMPOSE_ORACLE_TERMS = 64
NULL_LIMSUP_SELECTORS = 10

FORCING_NOTE = (
    "Forcing values are computed per atom from traces. Atomic algebras add no subsets of ω, "
    "so the old-set quantifiers of b_1, b_2 and b_3 are satisfied by the trace itself and "
    "b_1 = b_2 = b_3 = b_4 at this scale."
)

CheckOutcome = Union[Verdict, Tuple[Verdict, Dict]]


# =============================================================================
# CONFIGURATION AND REPORTS
# =============================================================================

@dataclass(frozen=True)
class SuiteConfig:
    """One validated run of the property suites."""

    max_atoms: int = DEFAULT_MAX_ATOMS
    prefix_bound: Optional[int] = None
    cycle_bound: Optional[int] = None
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    selector_samples: int = DEFAULT_SELECTOR_SAMPLES
    suites: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.suites is not None:
            object.__setattr__(self, 'suites', tuple(self.suites))

    def selected(self) -> Tuple[str, ...]:
        if self.suites is None:
            return tuple(SUITES)
        return tuple(name for name in SUITES if name in self.suites)

    def validate(self) -> None:
        errors = run_all_validations(
            max_atoms=self.max_atoms,
            prefix_bound=self.prefix_bound,
            cycle_bound=self.cycle_bound,
            seed=self.seed,
            samples=self.samples,
            selector_samples=self.selector_samples,
            suites=self.suites,
            known_suites=SUITES,
        )
        if errors:
            raise ValidationError(errors)

    def atom_counts(self, suite: str) -> range:
        top = self.max_atoms
        if suite == 'maximality':
            top = min(top, MAX_ATOMS_BRUTE_FORCE)
        return range(1, top + 1)

    def to_json(self) -> Dict:
        return {
            "max_atoms": self.max_atoms,
            "prefix_bound": self.prefix_bound,
            "cycle_bound": self.cycle_bound,
            "seed": self.seed,
            "samples": self.samples,
            "selector_samples": self.selector_samples,
            "suites": list(self.selected()),
        }


@dataclass(frozen=True)
class CheckResult:
    suite: str
    atoms: int
    name: str
    verdict: Verdict
    info: Dict = field(default_factory=dict)

    @property
    def key(self) -> Tuple[str, int, str]:
        return self.suite, self.atoms, self.name

    def to_json(self) -> Dict:
        payload = {
            "suite": self.suite,
            "atoms": self.atoms,
            "name": self.name,
            "status": "pass" if self.verdict.ok else "fail",
        }
        payload.update({k: v for k, v in self.verdict.to_json().items() if k != "ok"})
        if self.info:
            payload["info"] = dict(self.info)
        return payload


@dataclass(frozen=True)
class SuiteReport:
    config: SuiteConfig
    checks: Tuple[CheckResult, ...] = ()
    timings: Dict[str, float] = field(default_factory=dict, compare=False)
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.verdict.ok for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.verdict.ok]

    def counts(self) -> Dict[str, int]:
        failed = len(self.failures)
        return {"checks": len(self.checks), "passed": len(self.checks) - failed, "failed": failed}

    def canonical_payload(self) -> Dict:
        """Everything but the timings."""
        return {
            "config": self.config.to_json(),
            "summary": {**self.counts(), "status": "pass" if self.passed else "fail"},
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.key)],
            "notes": list(self.notes),
        }

    def to_json(self, include_timing: bool = True) -> Dict:
        payload = self.canonical_payload()
        if include_timing:
            payload = {"report": payload, "timing": {k: round(v, 3) for k, v in sorted(self.timings.items())}}
        return payload


# =============================================================================
# PER-ALGEBRA CONTEXT
# =============================================================================

class SuiteContext:
    """Corpora and generated topologies shared by the suites of one algebra."""

    def __init__(self, algebra: Algebra, config: SuiteConfig):
        self.algebra = algebra
        self.config = config
        self._topologies: Dict[Convergence, FiniteTopology] = {}

    def _rng_seed(self, salt: int) -> int:
        return (self.config.seed * 1000003 + self.algebra.atoms * 101 + salt) & 0xFFFFFFFFFFFFFFFF

    @cached_property
    def corpus(self) -> List[EPSequence]:
        return generate_corpus(self.algebra, self.config.prefix_bound, self.config.cycle_bound,
                               seed=self._rng_seed(1), samples=self.config.samples)

    @cached_property
    def pairs(self) -> List[Tuple[EPSequence, OmegaSet]]:
        return selector_pairs(self.corpus, self._rng_seed(2), self.config.samples)

    @cached_property
    def dominated(self) -> List[Tuple[EPSequence, EPSequence]]:
        """Seeded (x, y) with x_n ≤ y_n termwise."""
        return dominating_pairs(self.corpus, self._rng_seed(5), self.config.samples)

    @cached_property
    def selectors(self) -> List[OmegaSet]:
        return random_selectors(self._rng_seed(3), self.config.selector_samples)

    @cached_property
    def sampled(self) -> List[EPSequence]:
        """A seeded subset of the corpus for the costlier checks."""
        if len(self.corpus) <= self.config.samples:
            return list(self.corpus)
        rng = random.Random(self._rng_seed(4))
        picked = rng.sample(range(len(self.corpus)), self.config.samples)
        return [self.corpus[i] for i in sorted(picked)]

    def topology(self, c: Convergence) -> FiniteTopology:
        if c not in self._topologies:
            self._topologies[c] = generate_sequential_topology(c, self.algebra)
        return self._topologies[c]


SuiteFunction = Callable[[SuiteContext], Iterator[Tuple[str, Callable[[], CheckOutcome]]]]
SUITES: Dict[str, SuiteFunction] = {}


def suite(name: str):
    """Registra uma suite pelo nome."""
    def decorator(fn: SuiteFunction) -> SuiteFunction:
        SUITES[name] = fn
        return fn
    return decorator


def scan(items, predicate, wrap=None, key=None) -> Verdict:
    """First item for which predicate returns a problem, smallest by key when one is given."""
    for item in (sorted(items, key=key) if key else items):
        problem = predicate(item)
        if problem is not None:
            return Verdict(False, wrap(item) if wrap else None, problem)
    return PASS


def all_of(*verdicts: Verdict) -> Verdict:
    for verdict in verdicts:
        if not verdict.ok:
            return verdict
    return PASS


def _guarded(check: Callable[[], CheckOutcome]) -> Tuple[Verdict, Dict]:
    try:
        outcome = check()
    except (InvariantViolation, PreconditionError, StructuralError) as error:
        return Verdict(False, None, f"{type(error).__name__}: {error}"), {}
    if isinstance(outcome, tuple):
        return outcome
    return outcome, {}


# =============================================================================
# SUITES
# =============================================================================

@suite('algebra')
def algebra_suite(ctx: SuiteContext):
    algebra = ctx.algebra
    masks = range(algebra.carrier_mask + 1)

    def de_morgan():
        def problem(mask):
            s = ElementSet(algebra, mask)
            if ~algebra.big_join(s) == algebra.big_meet(s.complements()):
                return None
            return "complement of the join differs from the meet of the complements"
        return scan(masks, problem, lambda m: ElementSet(algebra, m))

    def closure_operators():
        if algebra.atoms > 3:
            return PASS, {"skipped": "more than 3 atoms"}

        def problem(mask):
            for op in (algebra.up_closure_mask, algebra.down_closure_mask):
                image = op(mask)
                if image & mask != mask or op(image) != image:
                    return f"{op.__name__} is not extensive and idempotent"
                for sub in submasks(mask):
                    if op(sub) & image != op(sub):
                        return f"{op.__name__} is not monotone"
            return None
        return scan(masks, problem, lambda m: ElementSet(algebra, m))

    def complement_anti_isomorphism():
        elements = list(algebra.elements())

        def problem(a):
            for b in elements:
                if (a <= b) != (~b <= ~a):
                    return f"order reversal fails for {a!r}, {b!r}"
            return None
        return scan(elements, problem, lambda a: algebra.element_set([a]))

    yield 'de-morgan', de_morgan
    yield 'closure-operators', closure_operators
    yield 'complement-anti-isomorphism', complement_anti_isomorphism


@suite('sequences')
def sequences_suite(ctx: SuiteContext):
    corpus = ctx.corpus

    def truncation_oracle():
        return first_failure(corpus, lambda x: None if lim_inf_sup(x) == lim_inf_sup_by_truncation(x)
                             else "liminf/limsup differ from the truncation oracle")

    def compose_oracle():
        def problem(pair):
            x, a = pair
            count = max(COMPOSE_ORACLE_TERMS, stabilization_bound(x, a))
            composed = compose_with_enumeration(x, a)
            if composed.terms(count) == compose_by_indexing(x, a, count):
                return None
            return f"composition with {a} disagrees with direct indexing"
        return scan(ctx.pairs, problem, lambda pair: pair[0], key=pair_key)

    def compose_identity():
        return first_failure(corpus, lambda x: None if compose_with_enumeration(x, OmegaSet.full()) == x
                             else "composition with ω changes the sequence")

    def reachable_supports():
        def by_selector(pair):
            x, a = pair
            reached = tail_support(compose_with_enumeration(x, a))
            if reached.mask and reached.issubset(tail_support(x)):
                return None
            return f"selector {a} reaches {reached.to_json()}"

        def by_witness(x):
            for sub in tail_support(x).nonempty_subsets():
                if tail_support(witness_subsequence(x, sub)) != sub:
                    return f"witness for {sub.to_json()} has another tail support"
            return None
        return all_of(scan(ctx.pairs, by_selector, lambda pair: pair[0], key=pair_key),
                      first_failure(corpus, by_witness))

    def antitone_limits():
        def ordered(x, y):
            (lo_x, hi_x), (lo_y, hi_y) = lim_inf_sup(x), lim_inf_sup(y)
            return lo_x <= lo_y and hi_y <= hi_x

        def by_witness(x):
            for sub in tail_support(x).nonempty_subsets():
                if not ordered(x, witness_subsequence(x, sub)):
                    return f"limits of the subsequence on {sub.to_json()} are not inside those of x"
            return None

        def by_selector(pair):
            x, a = pair
            return None if ordered(x, compose_with_enumeration(x, a)) else f"limits escape under {a}"
        return all_of(first_failure(corpus, by_witness),
                      scan(ctx.pairs, by_selector, lambda pair: pair[0], key=pair_key))

    def stability():
        # both classifiers cross-check the subset form against the size form
        def problem(x):
            is_limsup_stable(x)
            is_liminf_stable(x)
            return None
        return first_failure(corpus, problem)

    def canonical_classification():
        def problem(a):
            raw = OmegaSet(a.prefix + a.cycle, a.cycle + a.cycle)
            return None if raw == a and raw.classify() == a.classify() else "canonical form is not unique"
        return scan(ctx.selectors, problem)

    yield 'truncation-oracle', truncation_oracle
    yield 'compose-oracle', compose_oracle
    yield 'compose-identity', compose_identity
    yield 'reachable-supports', reachable_supports
    yield 'antitone-limits', antitone_limits
    yield 'stability', stability
    yield 'canonical-classification', canonical_classification


L1_L2_CONVERGENCES = (LambdaS(), LambdaLS(), LambdaLI())


@suite('convergence')
def convergence_suite(ctx: SuiteContext):
    corpus = ctx.corpus
    algebra = ctx.algebra
    s, ls, li = L1_L2_CONVERGENCES

    determined = [s, ls, li] + [LambdaI(i) for i in range(5)] + [Meet(ls, li), Star(s), Star(ls), Star(li)]
    for c in determined:
        yield f'tail-determinism-{c.name}', (lambda c=c: tail_support_determinism(c, corpus))

    def selector_oracle():
        def problem(x):
            limits = {c: c(x) for c in L1_L2_CONVERGENCES}
            for a in ctx.selectors:
                y = compose_with_enumeration(x, a)
                support = tail_support(y)
                if not support.issubset(tail_support(x)):
                    return f"selector {a} leaves the tail support"
                for c in L1_L2_CONVERGENCES:
                    seen = c(y)
                    if seen.mask != evaluate_support(c, algebra, support.mask):
                        return f"{c.name} on the subsequence by {a} is not determined by its support"
                    if not limits[c].issubset(seen):
                        return f"{c.name} loses limits on the subsequence by {a}"
            return None
        return first_failure(ctx.sampled, problem)

    def axioms_s():
        report = check_axioms(s, corpus, algebra)
        return all_of(report.l1, report.l2, report.l3, report.hausdorff), report.to_json()

    def axioms_ls():
        report = check_axioms(ls, corpus, algebra)
        expected = EPSequence.constant(algebra, 0)
        if report.hausdorff.ok or report.hausdorff.witness != expected:
            return Verdict(False, report.hausdorff.witness, "λ_ls should fail Hausdorff at ⟨0⟩")
        return all_of(report.l1, report.l2, report.l3), report.to_json()

    def axioms_li():
        report = check_axioms(li, corpus, algebra)
        if report.hausdorff.ok:
            return Verdict(False, None, "λ_li should not be Hausdorff")
        return all_of(report.l1, report.l2, report.l3), report.to_json()

    def not_le(c1, c2):
        verdict = convergence_le(c1, c2, corpus)
        if verdict.ok:
            return Verdict(False, None, f"{c1.name} ≤ {c2.name} should fail")
        return PASS, {"witness": verdict.witness.to_json()}

    yield 'selector-oracle', selector_oracle
    yield 'axioms-s', axioms_s
    yield 'axioms-ls', axioms_ls
    yield 'axioms-li', axioms_li
    yield 'meet-ls-li-is-s', lambda: convergence_equal(Meet(ls, li), s, corpus)
    yield 's-le-ls', lambda: convergence_le(s, ls, corpus)
    yield 's-le-li', lambda: convergence_le(s, li, corpus)
    yield 'ls-not-le-s', lambda: not_le(ls, s)
    for c in L1_L2_CONVERGENCES:
        yield f'reflexive-{c.name}', (lambda c=c: convergence_le(c, c, corpus))


@suite('star')
def star_suite(ctx: SuiteContext):
    corpus = ctx.corpus
    algebra = ctx.algebra
    s, ls, li = L1_L2_CONVERGENCES

    def star_s_hausdorff_and_lim():
        report = check_axioms(Star(s), corpus, algebra, include_l3=False)
        return all_of(report.hausdorff,
                      convergence_equal(Star(s), LimOf(ctx.topology(s), label='O_s'), corpus))

    yield 'star-of-meet', lambda: convergence_equal(Star(Meet(ls, li)), Meet(Star(ls), Star(li)), corpus)
    yield 'star-s-hausdorff-lim', star_s_hausdorff_and_lim
    for c in L1_L2_CONVERGENCES:
        yield f'idempotent-{c.name}', (lambda c=c: convergence_equal(Star(Star(c)), Star(c), corpus))
        yield f'above-{c.name}', (lambda c=c: convergence_le(c, Star(c), corpus))
        yield f'below-lim-{c.name}', (lambda c=c: convergence_le(
            Star(c), LimOf(ctx.topology(c), label=f'O_{c.name}'), corpus))
        yield f'l3-{c.name}', (lambda c=c: check_axioms(Star(c), corpus, algebra).l3)


@suite('diagram')
def diagram_suite(ctx: SuiteContext):
    corpus = ctx.corpus
    algebra = ctx.algebra
    ls = LambdaLS()
    lambdas = [LambdaI(i) for i in range(5)]

    yield 'l0-is-s', lambda: convergence_equal(lambdas[0], LambdaS(), corpus)
    yield 'l0-le-l1', lambda: convergence_le(lambdas[0], lambdas[1], corpus)
    for i in (1, 2, 3):
        yield f'l{i}-is-l{i + 1}', (lambda i=i: convergence_equal(lambdas[i], lambdas[i + 1], corpus))
    for i in (1, 2, 3, 4):
        yield f'bar-l{i}-is-ls', (lambda i=i: convergence_equal(Bar(lambdas[i]), ls, corpus))
        yield f'star-bar-l{i}-is-ls', (lambda i=i: convergence_equal(Star(Bar(lambdas[i])), ls, corpus))

    def same_topology():
        if algebra.atoms > MAX_ATOMS_OPEN_SET_FORM:
            return PASS, {"skipped": "open-set form is capped"}
        expected = ctx.topology(ls).open_sets()
        for c in lambdas[1:]:
            if open_set_form(c, algebra) != expected:
                return Verdict(False, None, f"O_{c.name} differs from O_ls")
        if open_set_form(lambdas[0], algebra) != ctx.topology(LambdaS()).open_sets():
            return Verdict(False, None, "O_l0 differs from O_s")
        return PASS

    yield 'generated-topologies', same_topology
    yield 'bar-l1-topological', lambda: is_topological_convergence(Bar(lambdas[1]), corpus, algebra)


@suite('topology')
def topology_suite(ctx: SuiteContext):
    corpus = ctx.corpus
    algebra = ctx.algebra
    s, ls, li = L1_L2_CONVERGENCES
    generated = {c.name: ctx.topology(c) for c in L1_L2_CONVERGENCES}

    def closure_kernel():
        if algebra.atoms > MAX_ATOMS_OPEN_SET_FORM:
            return PASS, {"skipped": "direct closure step is capped"}
        for c in L1_L2_CONVERGENCES:
            table = closure_table(c, algebra)
            for mask in range(algebra.carrier_mask + 1):
                direct = sequential_closure_step(c, ElementSet(algebra, mask)).mask
                if table[mask] != direct:
                    return Verdict(False, ElementSet(algebra, mask), f"closure table of {c.name} differs")
        return PASS

    def s_closure_identity():
        table = closure_table(s, algebra)
        return scan(range(algebra.carrier_mask + 1), lambda m: None if table[m] == m else "u_s(A) != A",
                    lambda m: ElementSet(algebra, m))

    for c in L1_L2_CONVERGENCES:
        yield f'topological-{c.name}', (lambda c=c: is_topological_convergence(c, corpus, algebra))
        yield f'weakly-topological-{c.name}', (lambda c=c: is_weakly_topological(c, corpus, algebra))

    def lim_of_generated():
        for name, t in generated.items():
            if generate_sequential_topology(LimOf(t), algebra) != t:
                return Verdict(False, None, f"O of lim O_{name} is not O_{name}")
            verdict = is_topological_convergence(LimOf(t, label=f'O_{name}'), corpus, algebra)
            if not verdict:
                return verdict
        return PASS

    def lim_antitone():
        for t1 in generated.values():
            for t2 in generated.values():
                if t1.is_subtopology_of(t2):
                    verdict = convergence_le(LimOf(t2), LimOf(t1), corpus)
                    if not verdict:
                        return verdict
        return PASS

    def equal_lims_equal_topologies():
        for n1, t1 in generated.items():
            for n2, t2 in generated.items():
                if convergence_equal(LimOf(t1), LimOf(t2), corpus) and t1 != t2:
                    return Verdict(False, None, f"O_{n1} and O_{n2} share lim but differ")
        return PASS

    def coarser_than_s():
        if generated['ls'].is_subtopology_of(generated['s']) and generated['li'].is_subtopology_of(generated['s']):
            return PASS
        return Verdict(False, None, "O_ls or O_li is not contained in O_s")

    def antitone_generation():
        candidates = list(L1_L2_CONVERGENCES) + [Meet(ls, li)]
        for c1 in candidates:
            for c2 in candidates:
                if convergence_le(c1, c2, corpus) and not ctx.topology(c2).is_subtopology_of(ctx.topology(c1)):
                    return Verdict(False, None, f"{c1.name} ≤ {c2.name} but O_{c2.name} ⊄ O_{c1.name}")
        return PASS

    def sequential_spaces():
        for name, t in generated.items():
            table = closure_table(LimOf(t), algebra)
            if frozenset(m for m, v in enumerate(table) if v == m) != t.closed_sets:
                return Verdict(False, None, f"O_{name} is not the fixed-point family of its own closure")
        return PASS

    def meet_maps_continuous():
        if algebra.atoms > MAX_ATOMS_OPEN_SET_FORM:
            return PASS, {"skipped": "more than 3 atoms"}
        t = generated['ls']
        for a in range(algebra.size):
            verdict = is_continuous(t, t, lambda w, a=a: w & a)
            if not verdict:
                return Verdict(False, verdict.witness, f"x ↦ x ∧ {a} is not continuous")
        return PASS

    def monotone_lim():
        constants = [(x, x.map_words(lambda w, c=c: w | c)) for x in corpus for c in range(algebra.size)]
        verdict = monotone_lim_check(generated['ls'], constants + ctx.dominated)
        return verdict, {"pairs": len(ctx.dominated)}

    def stable_closure(flavor: str):
        stable = is_limsup_stable if flavor == 'ls' else is_liminf_stable

        def problem(x):
            if not stable(x):
                return None
            closure, formula = stable_range_closure(x, flavor)
            return None if closure == formula else f"closure {closure.to_json()} != {formula.to_json()}"
        return first_failure(corpus, problem)

    def specialization_preorders():
        for name, t in generated.items():
            if not is_preorder_graph(specialization_graph(t)):
                return Verdict(False, None, f"specialization relation of O_{name} is not a preorder")
        return PASS

    def complement_duality():
        t_ls, t_li = generated['ls'], generated['li']

        def problem(x):
            mirrored = t_ls.lim(x.complement()).complements()
            return None if t_li.lim(x) == mirrored else "lim_li(x) is not the complement image of lim_ls(x')"
        return first_failure(corpus, problem)

    def hbar():
        return all_of(condition_stable_subsequences(algebra), is_weakly_topological(ls, corpus, algebra))

    yield 'closure-kernel', closure_kernel
    yield 's-closure-identity', s_closure_identity
    yield 'lim-of-generated', lim_of_generated
    yield 'lim-antitone', lim_antitone
    yield 'equal-lims-equal-topologies', equal_lims_equal_topologies
    yield 'coarser-than-s', coarser_than_s
    yield 'antitone-generation', antitone_generation
    yield 'sequential-spaces', sequential_spaces
    yield 'zero-witness', lambda: zero_witness_equivalence(corpus, algebra)
    yield 'meet-maps-continuous', meet_maps_continuous
    yield 'monotone-lim', monotone_lim
    yield 'stable-closure-ls', lambda: stable_closure('ls')
    yield 'stable-closure-li', lambda: stable_closure('li')
    yield 'specialization-preorders', specialization_preorders
    yield 'complement-duality', complement_duality
    yield 'stable-subsequences', hbar


@suite('closed-sets')
def closed_sets_suite(ctx: SuiteContext):
    algebra = ctx.algebra

    def family(flavor: str):
        c = LambdaLS() if flavor == 'ls' else LambdaLI()
        t = ctx.topology(c)
        expected = up_sets(algebra) if flavor == 'ls' else down_sets(algebra)
        verdict = check_closed_set_characterization(t, flavor)
        if verdict and t.closed_sets != expected:
            verdict = Verdict(False, None, f"O_{flavor} closed sets are not the {flavor} monotone sets")
        return verdict, {"closed_sets": len(t.closed_sets)}

    yield 'ls-characterization', lambda: family('ls')
    yield 'li-characterization', lambda: family('li')
    yield 'dual-homeomorphism', lambda: dual_homeomorphism_check(algebra)


@suite('maximality')
def maximality_suite(ctx: SuiteContext):
    for c in L1_L2_CONVERGENCES:
        def check(c=c):
            report = maximality_brute_force(c, ctx.algebra, ctx.corpus)
            return report.verdict, {"topologies": report.topology_count, "dominating": report.dominating_count}
        yield f'maximal-{c.name}', check


@suite('cube')
def cube_suite(ctx: SuiteContext):
    results = {}

    def run(name):
        if not results:
            results.update(check_cube_models(ctx.algebra, ctx.corpus))
        return results[name]

    names = ('cantor-is-discrete', 'cantor-lim-is-lambda-s', 'cantor-coordinatewise', 'cantor-liminf-limsup',
             'cantor-is-o-lambda-s', 'aleksandrov-lim-is-lambda-ls', 'aleksandrov-coordinatewise',
             'aleksandrov-limsup-criterion', 'aleksandrov-is-o-lambda-ls')
    for name in names:
        yield name, (lambda name=name: run(name))


@suite('forcing')
def forcing_suite(ctx: SuiteContext):
    corpus = ctx.corpus
    algebra = ctx.algebra

    def boolean_values():
        def problem(x):
            liminf, limsup = lim_inf_sup(x)
            if boolean_value(x, Statement.INFINITE) != limsup or boolean_value(x, Statement.COFINITE) != liminf:
                return "Boolean values differ from limsup/liminf"
            if b_values(x)[0] != liminf:
                return "b_0 is not liminf"
            return None
        return first_failure(corpus, problem)

    def lambda_i_definition():
        def problem(x):
            liminf, limsup = lim_inf_sup(x)
            top_only = algebra.element_set([limsup])
            expected = [top_only if liminf == limsup else algebra.empty()] + [top_only] * 4
            for i in range(5):
                if LambdaI(i)(x) != expected[i]:
                    return f"λ_{i} disagrees with its definition"
            return None
        return first_failure(corpus, problem)

    def ax_bx_values():
        def problem(x):
            a_x, b_x = ax_bx(x)
            return None if a_x <= b_x else "a_x is not below b_x"
        return first_failure(corpus, problem)

    def lim_o_s_by_ax_bx():
        t = ctx.topology(LambdaS())

        def problem(x):
            a_x, b_x = ax_bx(x)
            expected = algebra.element_set([a_x] if a_x == b_x else [])
            return None if t.lim(x) == expected else "lim of O_s is not {a_x} when a_x = b_x"
        return first_failure(corpus, problem)

    def intersection_paths():
        def problem(pair):
            x, a = pair
            value = intersection_infinite_value(x, a)
            return None if value <= lim_inf_sup(x)[1] else f"value on {a} exceeds limsup"
        return scan(ctx.pairs, problem, lambda pair: pair[0], key=pair_key)

    def null_limsup():
        selectors = ctx.selectors[:NULL_LIMSUP_SELECTORS]

        def problem(x):
            verdicts = null_limsup_equivalence(x, selectors)
            expected = tail_support(x).mask == 1
            return None if verdicts['subsequences'] == expected else "limsup pushed to 0 on a nonzero tail"
        return first_failure(ctx.sampled, problem)

    yield 'boolean-values', boolean_values
    yield 'lambda-i-definition', lambda_i_definition
    yield 'ax-bx', ax_bx_values
    yield 'lim-o-s-by-ax-bx', lim_o_s_by_ax_bx
    yield 'intersection-paths', intersection_paths
    yield 'null-limsup', null_limsup


# =============================================================================
# RUNNER
# =============================================================================

def run_suite(config: SuiteConfig, progress: Optional[Callable[[str, int], None]] = None) -> SuiteReport:
    """Run the selected suites; caps are validated before any work."""
    config.validate()
    contexts: Dict[int, SuiteContext] = {}
    results: List[CheckResult] = []
    timings: Dict[str, float] = {}
    notes = []

    for name in config.selected():
        started = time.perf_counter()
        for atoms in config.atom_counts(name):
            if progress:
                progress(name, atoms)
            ctx = contexts.setdefault(atoms, SuiteContext(Algebra(atoms), config))
            for check_name, check in SUITES[name](ctx):
                verdict, info = _guarded(check)
                results.append(CheckResult(name, atoms, check_name, verdict, info))
                if not verdict.ok:
                    logger.info("FAIL %s/%d/%s: %s", name, atoms, check_name, verdict.detail)
        timings[name] = time.perf_counter() - started
        if name in ('forcing', 'diagram') and FORCING_NOTE not in notes:
            notes.append(FORCING_NOTE)

    results.sort(key=lambda c: c.key)
    return SuiteReport(config, tuple(results), timings, tuple(notes))
