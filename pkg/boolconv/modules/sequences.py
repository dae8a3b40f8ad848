"""Eventually periodic sequences over a finite algebra.

Every sequence is a finite prefix followed by a nonempty cycle of element
words, kept in canonical form so that the cycle holds exactly the values
that occur infinitely often (the tail support). Quantifiers over all
subsequences reduce to quantifiers over nonempty subsets of the tail
support: composing with any infinite selector gives a nonempty subset, and
``witness_subsequence`` realizes every nonempty subset.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from boolconv.modules.algebra import Algebra, Element, ElementSet, join_words, meet_words
from boolconv.modules.errors import InvariantViolation, PreconditionError, StructuralError
from boolconv.modules.omega import OmegaSet, canonical_form, lcm, periodic_term

SEQUENCE_LITERAL = re.compile(r'^\s*\[([^\]]*)\]\s*\|\s*\[([^\]]*)\]\s*$')


@dataclass(frozen=True)
class EPSequence:
    """An eventually periodic sequence ``prefix + cycle + cycle + ...``."""

    algebra: Algebra
    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self):
        for word in tuple(self.prefix) + tuple(self.cycle):
            if isinstance(word, bool) or not isinstance(word, int) or not 0 <= word < self.algebra.size:
                raise StructuralError(f"{word!r} is not an element word of {self.algebra}")
        prefix, cycle = canonical_form(tuple(self.prefix), tuple(self.cycle))
        object.__setattr__(self, 'prefix', prefix)
        object.__setattr__(self, 'cycle', cycle)

    @classmethod
    def constant(cls, algebra: Algebra, word: int) -> 'EPSequence':
        """The constant sequence ⟨a⟩."""
        return cls(algebra, (), (word,))

    @classmethod
    def from_support(cls, algebra: Algebra, support: ElementSet) -> 'EPSequence':
        """The purely periodic sequence cycling through support in ascending order."""
        if support.algebra != algebra:
            raise StructuralError(f"{support!r} does not belong to {algebra}")
        if not support.mask:
            raise PreconditionError("a tail support must be nonempty")
        return cls(algebra, (), support.words())

    def term(self, n: int) -> int:
        return periodic_term(self.prefix, self.cycle, n)

    def element(self, n: int) -> Element:
        return Element(self.algebra, self.term(n))

    def terms(self, count: int) -> List[int]:
        return [self.term(n) for n in range(count)]

    @property
    def length(self) -> int:
        return len(self.prefix) + len(self.cycle)

    def sort_key(self):
        """Shortest first, then lexicographic: the order witnesses are reported in."""
        return (self.length, len(self.prefix), self.prefix, self.cycle)

    def values(self) -> ElementSet:
        """The range {x_n : n ∈ ω}."""
        return self.algebra.element_set(self.prefix + self.cycle)

    def map_words(self, fn) -> 'EPSequence':
        return EPSequence(self.algebra, tuple(fn(w) for w in self.prefix),
                          tuple(fn(w) for w in self.cycle))

    def join_with(self, other: 'EPSequence') -> 'EPSequence':
        """⟨x_n ∨ y_n⟩, aligned on the longer prefix and the lcm of the cycles."""
        if other.algebra != self.algebra:
            raise StructuralError(f"{other} is over {other.algebra}, not {self.algebra}")
        start = max(len(self.prefix), len(other.prefix))
        period = lcm(len(self.cycle), len(other.cycle))
        words = [self.term(n) | other.term(n) for n in range(start + period)]
        return EPSequence(self.algebra, tuple(words[:start]), tuple(words[start:]))

    def le_pointwise(self, other: 'EPSequence') -> bool:
        """x_n ≤ y_n for every n."""
        if other.algebra != self.algebra:
            return False
        span = max(len(self.prefix), len(other.prefix)) + lcm(len(self.cycle), len(other.cycle))
        return all(self.term(n) & ~other.term(n) == 0 for n in range(span))

    def complement(self) -> 'EPSequence':
        """⟨x_n'⟩."""
        top = self.algebra.top_word
        return self.map_words(lambda w: top ^ w)

    def meet_with(self, a: Element) -> 'EPSequence':
        """⟨x_n ∧ a⟩."""
        if a.algebra != self.algebra:
            raise StructuralError(f"{a!r} does not belong to {self.algebra}")
        return self.map_words(lambda w: w & a.word)

    # -- serialization --------------------------------------------------------

    def literal(self) -> str:
        head = ','.join(str(w) for w in self.prefix)
        body = ','.join(str(w) for w in self.cycle)
        return f"[{head}]|[{body}]"

    def to_json(self) -> Dict:
        return {
            "algebra": self.algebra.to_json(),
            "prefix": list(self.prefix),
            "cycle": list(self.cycle),
        }

    @classmethod
    def from_json(cls, data) -> 'EPSequence':
        if not isinstance(data, dict) or "cycle" not in data or "algebra" not in data:
            raise StructuralError(f"sequence JSON needs algebra and cycle, got {data!r}")
        algebra = Algebra.from_json(data["algebra"])
        return cls(algebra, tuple(data.get("prefix", ())), tuple(data["cycle"]))

    def __str__(self):
        return self.literal()


def parse_sequence(algebra: Algebra, text: str) -> EPSequence:
    """Parse the literal syntax ``[p1,p2]|[c1,c2]`` (integer element words)."""
    match = SEQUENCE_LITERAL.match(text or '')
    if not match:
        raise StructuralError(f"sequence literal must look like [p1,p2]|[c1,c2], got {text!r}")

    def words(part: str) -> Tuple[int, ...]:
        items = [item.strip() for item in part.split(',') if item.strip()]
        try:
            return tuple(int(item, 0) for item in items)
        except ValueError:
            raise StructuralError(f"invalid element word in {text!r}") from None

    return EPSequence(algebra, words(match.group(1)), words(match.group(2)))


# =============================================================================
# LIMITS
# =============================================================================

def tail_support(x: EPSequence) -> ElementSet:
    """The values occurring infinitely often."""
    return x.algebra.element_set(x.cycle)


def lim_inf_sup(x: EPSequence) -> Tuple[Element, Element]:
    """(liminf x, limsup x) as meet and join of the tail support."""
    support = tail_support(x)
    return x.algebra.big_meet(support), x.algebra.big_join(support)


def lim_inf_sup_by_truncation(x: EPSequence) -> Tuple[Element, Element]:
    """(⋁_k ⋀_{n≥k} x_n, ⋀_k ⋁_{n≥k} x_n) over k = 0 .. |prefix| + |cycle|.

    The partial tails are constant from k = |prefix| on, so the range is enough.
    """
    algebra = x.algebra
    lower, upper = 0, algebra.top_word
    for k in range(x.length + 1):
        if k <= len(x.prefix):
            tail = x.prefix[k:] + x.cycle
        else:
            tail = x.cycle
        lower |= meet_words(algebra, tail)
        upper &= join_words(tail)
    return Element(algebra, lower), Element(algebra, upper)


# =============================================================================
# SUBSEQUENCES
# =============================================================================

def stabilization_bound(x: EPSequence, a: OmegaSet) -> int:
    """Terms after which x composed with the enumeration of a is surely periodic."""
    start = max(len(x.prefix), len(a.prefix))
    return start + 2 * lcm(len(x.cycle), len(a.cycle))


def compose_with_enumeration(x: EPSequence, a: OmegaSet) -> EPSequence:
    """x ∘ f_A for an infinite A.

    Past max(|prefix(x)|, |prefix(A)|) both x and the membership of A repeat
    with period L = lcm(|cycle(x)|, |cycle(A)|), so the members of A in one
    such window give the cycle of the composition.
    """
    a.require_infinite()
    start = max(len(x.prefix), len(a.prefix))
    period = lcm(len(x.cycle), len(a.cycle))
    head = tuple(x.term(n) for n in range(start) if n in a)
    body = tuple(x.term(n) for n in range(start, start + period) if n in a)
    return EPSequence(x.algebra, head, body)


def compose_by_indexing(x: EPSequence, a: OmegaSet, count: int) -> List[int]:
    """First count terms of x ∘ f_A by direct indexing."""
    return [x.term(n) for n in a.enumerate(count)]


def selector_for(x: EPSequence, support: ElementSet) -> OmegaSet:
    """Positions in the cycle region whose value lies in support."""
    return OmegaSet((0,) * len(x.prefix), tuple(int(w in support) for w in x.cycle))


def witness_subsequence(x: EPSequence, support: ElementSet) -> EPSequence:
    """An explicit subsequence of x whose tail support is exactly support."""
    if support.algebra != x.algebra:
        raise StructuralError(f"{support!r} does not belong to {x.algebra}")
    if not support.mask:
        raise PreconditionError("the requested tail support is empty")
    if not support.issubset(tail_support(x)):
        raise PreconditionError(f"{support!r} is not contained in the tail support of {x}")
    return compose_with_enumeration(x, selector_for(x, support))


def realizable_supports(x: EPSequence) -> Iterable[ElementSet]:
    """Tail supports of the subsequences of x: the nonempty subsets of its own."""
    return tail_support(x).nonempty_subsets()


def is_limsup_stable(x: EPSequence) -> bool:
    """Every subsequence has the same limsup."""
    algebra = x.algebra
    support = tail_support(x)
    limsup = join_words(support.words())
    by_subsets = all(join_words(sub.words()) == limsup for sub in support.nonempty_subsets())
    by_size = len(support) == 1
    if by_subsets != by_size:
        raise InvariantViolation(f"limsup stability of {x} over {algebra}: subsets say "
                                 f"{by_subsets}, support size says {by_size}")
    return by_subsets


def is_liminf_stable(x: EPSequence) -> bool:
    """Every subsequence has the same liminf."""
    algebra = x.algebra
    support = tail_support(x)
    liminf = meet_words(algebra, support.words())
    by_subsets = all(meet_words(algebra, sub.words()) == liminf for sub in support.nonempty_subsets())
    by_size = len(support) == 1
    if by_subsets != by_size:
        raise InvariantViolation(f"liminf stability of {x} over {algebra}: subsets say "
                                 f"{by_subsets}, support size says {by_size}")
    return by_subsets


def sequences_sorted(items: Sequence[EPSequence]) -> List[EPSequence]:
    return sorted(items, key=EPSequence.sort_key)
