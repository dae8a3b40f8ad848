"""Convergences on a finite algebra and the checks that compare them.

A convergence maps each sequence to the set of its limits. Every
convergence here depends only on the tail support of the sequence, which
is what lets ``evaluate_support`` cache by support and lets the subsequence
quantifiers run over subsets of that support.
"""

import abc
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Any, Callable, Dict, Iterable, List, Optional

from boolconv.modules.algebra import Algebra, ElementSet, iter_bits, popcount, submasks
from boolconv.modules.errors import PreconditionError, StructuralError
from boolconv.modules.forcing import b_values
from boolconv.modules.sequences import (
    EPSequence,
    lim_inf_sup,
    sequences_sorted,
    tail_support,
    witness_subsequence,
)

if TYPE_CHECKING:  # pragma: no cover
    from boolconv.modules.topology import FiniteTopology

logger = logging.getLogger(__name__)

# Tail supports up to this size are used when checking (L1) and (L2) before
# a star closure is taken.
PRECONDITION_SUPPORT_SIZE = 3


class Convergence(abc.ABC):
    """A map from eventually periodic sequences to sets of limits."""

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """CLI name of the convergence."""

    @abc.abstractmethod
    def limits_mask(self, x: EPSequence) -> int:
        """Characteristic mask of the limits of x."""

    def __call__(self, x: EPSequence) -> ElementSet:
        return eval_convergence(self, x)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class LambdaS(Convergence):
    """{v} when liminf = limsup = v, else ∅."""

    @property
    def name(self) -> str:
        return 's'

    def limits_mask(self, x: EPSequence) -> int:
        liminf, limsup = lim_inf_sup(x)
        return 1 << liminf.word if liminf == limsup else 0


@dataclass(frozen=True)
class LambdaLS(Convergence):
    """(limsup x)↑."""

    @property
    def name(self) -> str:
        return 'ls'

    def limits_mask(self, x: EPSequence) -> int:
        return x.algebra.up_masks[lim_inf_sup(x)[1].word]


@dataclass(frozen=True)
class LambdaLI(Convergence):
    """(liminf x)↓."""

    @property
    def name(self) -> str:
        return 'li'

    def limits_mask(self, x: EPSequence) -> int:
        return x.algebra.down_masks[lim_inf_sup(x)[0].word]


@dataclass(frozen=True)
class LambdaI(Convergence):
    """{b_4(x)} when b_index(x) = b_4(x), else ∅."""

    index: int

    def __post_init__(self):
        if self.index not in range(5):
            raise StructuralError(f"λ_i is defined for i = 0..4, got {self.index!r}")

    @property
    def name(self) -> str:
        return f'l{self.index}'

    def limits_mask(self, x: EPSequence) -> int:
        values = b_values(x)
        return 1 << values[4].word if values[self.index] == values[4] else 0


@dataclass(frozen=True)
class Star(Convergence):
    """The closure of inner under (L3)."""

    inner: Convergence

    @property
    def name(self) -> str:
        return f'star:{self.inner.name}'

    def limits_mask(self, x: EPSequence) -> int:
        return star_convergence(self.inner, x).mask


@dataclass(frozen=True)
class Bar(Convergence):
    """The closure of inner under (L2): the union of inner over all supersequences."""

    inner: Convergence

    @property
    def name(self) -> str:
        return f'bar:{self.inner.name}'

    def limits_mask(self, x: EPSequence) -> int:
        return _bar_mask(self.inner, x.algebra, tail_support(x).mask)


@dataclass(frozen=True)
class Meet(Convergence):
    """Pointwise intersection."""

    left: Convergence
    right: Convergence

    @property
    def name(self) -> str:
        return f'meet:{self.left.name},{self.right.name}'

    def limits_mask(self, x: EPSequence) -> int:
        return self.left.limits_mask(x) & self.right.limits_mask(x)


@dataclass(frozen=True)
class LimOf(Convergence):
    """lim of a stored finite topology."""

    topology: 'FiniteTopology'
    label: str = field(default='topology', compare=False)

    @property
    def name(self) -> str:
        return f'lim:{self.label}'

    def limits_mask(self, x: EPSequence) -> int:
        return self.topology.lim(x).mask


BUILTIN_NAMES = ('s', 'ls', 'li', 'l0', 'l1', 'l2', 'l3', 'l4')


def builtin_convergences() -> List[Convergence]:
    return [LambdaS(), LambdaLS(), LambdaLI()] + [LambdaI(i) for i in range(5)]


# =============================================================================
# EVALUATION
# =============================================================================

def eval_convergence(c: Convergence, x: EPSequence) -> ElementSet:
    """The limits of x under c."""
    if isinstance(c, LimOf) and c.topology.algebra != x.algebra:
        raise StructuralError(f"{x} is over {x.algebra}, the topology over {c.topology.algebra}")
    return ElementSet(x.algebra, c.limits_mask(x))


@lru_cache(maxsize=None)
def evaluate_support(c: Convergence, algebra: Algebra, support: int) -> int:
    """Limits mask of any sequence whose tail support is the given mask."""
    if not support:
        raise PreconditionError("a tail support must be nonempty")
    return c.limits_mask(EPSequence.from_support(algebra, ElementSet(algebra, support)))


@lru_cache(maxsize=None)
def _bar_mask(inner: Convergence, algebra: Algebra, support: int) -> int:
    """Union of inner over every support containing the given one."""
    result = evaluate_support(inner, algebra, support)
    for extra in submasks(algebra.carrier_mask & ~support):
        result |= evaluate_support(inner, algebra, support | extra)
    return result


@lru_cache(maxsize=None)
def _star_mask(c: Convergence, algebra: Algebra, support: int) -> int:
    """⋂_{f} ⋃_{g} λ(x∘f∘g), quantifiers reduced to nested subsets of the tail support."""
    below: Dict[int, int] = {}
    # submasks arrive in ascending order, so every U ∖ {a} is already known
    for sub in submasks(support):
        mask = evaluate_support(c, algebra, sub)
        for word in iter_bits(sub):
            smaller = sub & ~(1 << word)
            if smaller:
                mask |= below[smaller]
        below[sub] = mask
    result = algebra.carrier_mask
    for mask in below.values():
        result &= mask
    return result


def star_convergence(c: Convergence, x: EPSequence) -> ElementSet:
    """λ*(x); c must satisfy (L1) and (L2)."""
    require_l1_l2(c, x.algebra)
    return ElementSet(x.algebra, _star_mask(c, x.algebra, tail_support(x).mask))


def support_witnesses(algebra: Algebra, max_size: Optional[int] = None) -> List[EPSequence]:
    """One purely periodic sequence per nonempty tail support, smallest supports first."""
    supports = [m for m in range(1, algebra.carrier_mask + 1)
                if max_size is None or popcount(m) <= max_size]
    supports.sort(key=lambda m: (popcount(m), m))
    return [EPSequence.from_support(algebra, ElementSet(algebra, m)) for m in supports]


@lru_cache(maxsize=None)
def _satisfies_l1_l2(c: Convergence, algebra: Algebra) -> bool:
    size = None if algebra.atoms <= 3 else PRECONDITION_SUPPORT_SIZE
    corpus = support_witnesses(algebra, size)
    report = check_axioms(c, corpus, algebra, include_l3=False)
    return report.l1.ok and report.l2.ok


def require_l1_l2(c: Convergence, algebra: Algebra) -> None:
    if not _satisfies_l1_l2(c, algebra):
        raise PreconditionError(f"{c.name} does not satisfy (L1) and (L2) on {algebra}; "
                                f"its star closure is undefined")


# =============================================================================
# COMPARISONS AND AXIOMS
# =============================================================================

@dataclass(frozen=True)
class Verdict:
    """Outcome of a corpus-wide check with the first counterexample found."""

    ok: bool
    witness: Optional[Any] = None
    detail: str = ''

    def __bool__(self):
        return self.ok

    def to_json(self) -> Dict:
        payload: Dict = {"ok": self.ok}
        if self.witness is not None:
            payload["witness"] = self.witness.to_json()
        if self.detail:
            payload["detail"] = self.detail
        return payload


PASS = Verdict(True)


def first_failure(corpus: Iterable[EPSequence], predicate: Callable[[EPSequence], Optional[str]]) -> Verdict:
    """Run predicate over the corpus shortest-first; a non-None result is a failure."""
    for x in sequences_sorted(list(corpus)):
        problem = predicate(x)
        if problem is not None:
            return Verdict(False, x, problem)
    return PASS


def convergence_le(c1: Convergence, c2: Convergence, corpus: Iterable[EPSequence]) -> Verdict:
    """c1 ≤ c2: c1(x) ⊂ c2(x) for every corpus member."""
    def problem(x: EPSequence) -> Optional[str]:
        left, right = c1(x), c2(x)
        if left.issubset(right):
            return None
        return f"{c1.name}(x)={left.to_json()} is not contained in {c2.name}(x)={right.to_json()}"

    return first_failure(corpus, problem)


def convergence_equal(c1: Convergence, c2: Convergence, corpus: Iterable[EPSequence]) -> Verdict:
    def problem(x: EPSequence) -> Optional[str]:
        left, right = c1(x), c2(x)
        if left == right:
            return None
        return f"{c1.name}(x)={left.to_json()} but {c2.name}(x)={right.to_json()}"

    return first_failure(corpus, problem)


@dataclass(frozen=True)
class AxiomReport:
    l1: Verdict
    l2: Verdict
    l3: Verdict
    hausdorff: Verdict

    def to_json(self) -> Dict:
        return {
            "L1": self.l1.to_json(),
            "L2": self.l2.to_json(),
            "L3": self.l3.to_json(),
            "hausdorff": self.hausdorff.to_json(),
        }


def check_axioms(c: Convergence, corpus: Iterable[EPSequence], algebra: Algebra,
                 include_l3: bool = True) -> AxiomReport:
    """(L1), (L2), (L3) and the Hausdorff property of c over the corpus."""
    corpus = sequences_sorted([x for x in corpus if x.algebra == algebra])
    constants = [EPSequence.constant(algebra, w) for w in range(algebra.size)]

    def l1(x: EPSequence) -> Optional[str]:
        word = x.cycle[0]
        return None if word in c(x) else f"{word} is not a limit of its constant sequence"

    def l2(x: EPSequence) -> Optional[str]:
        limits = c(x)
        for sub in tail_support(x).nonempty_subsets():
            y = witness_subsequence(x, sub)
            if not limits.issubset(c(y)):
                return f"limits {limits.to_json()} are lost on the subsequence {y}"
        return None

    def l3(x: EPSequence) -> Optional[str]:
        extra = _star_mask(c, algebra, tail_support(x).mask) & ~c.limits_mask(x)
        if not extra:
            return None
        return f"{ElementSet(algebra, extra).to_json()} are subsequential limits but not limits"

    def hausdorff(x: EPSequence) -> Optional[str]:
        limits = c(x)
        return None if len(limits) <= 1 else f"{limits.to_json()} has more than one limit"

    report = AxiomReport(
        l1=first_failure(constants, l1),
        l2=first_failure(corpus, l2),
        l3=first_failure(corpus, l3) if include_l3 else PASS,
        hausdorff=first_failure(constants + corpus, hausdorff),
    )
    logger.debug("axioms of %s over %d sequences: %s", c.name, len(corpus), report)
    return report


def tail_support_determinism(c: Convergence, corpus: Iterable[EPSequence]) -> Verdict:
    """c(x) depends only on the tail support of x."""
    def problem(x: EPSequence) -> Optional[str]:
        direct = c.limits_mask(x)
        by_support = evaluate_support(c, x.algebra, tail_support(x).mask)
        if direct == by_support:
            return None
        return f"{c.name} differs from the periodic sequence with the same tail support"

    return first_failure(corpus, problem)


# =============================================================================
# PARSING
# =============================================================================

def parse_convergence(text: str,
                      topology_loader: Optional[Callable[[str], 'FiniteTopology']] = None) -> Convergence:
    """Parse ``s | ls | li | l0..l4 | star:<c> | bar:<c> | meet:<c>,<c> | lim:<file>``."""
    source = (text or '').strip()
    c, rest = _parse(source, topology_loader)
    if rest.strip():
        raise StructuralError(f"unexpected text {rest!r} after convergence in {source!r}")
    return c


def _parse(text: str, loader) -> tuple:
    for prefix, wrapper in (('star:', Star), ('bar:', Bar)):
        if text.startswith(prefix):
            inner, rest = _parse(text[len(prefix):], loader)
            return wrapper(inner), rest
    if text.startswith('meet:'):
        left, rest = _parse(text[len('meet:'):], loader)
        if not rest.startswith(','):
            raise StructuralError(f"meet needs two convergences separated by a comma: {text!r}")
        right, rest = _parse(rest[1:], loader)
        return Meet(left, right), rest
    if text.startswith('lim:'):
        path, sep, rest = text[len('lim:'):].partition(',')
        if not path:
            raise StructuralError("lim: needs a topology file")
        if loader is None:
            raise StructuralError("lim: convergences need a topology loader")
        return LimOf(loader(path), label=path), sep + rest
    head, sep, rest = text.partition(',')
    name = head.strip()
    simple = {'s': LambdaS(), 'ls': LambdaLS(), 'li': LambdaLI()}
    if name in simple:
        return simple[name], sep + rest
    if len(name) == 2 and name[0] == 'l' and name[1] in '01234':
        return LambdaI(int(name[1])), sep + rest
    raise StructuralError(f"unknown convergence {name!r}; expected one of "
                          f"{', '.join(BUILTIN_NAMES)}, star:, bar:, meet:, lim:")
