"""Eventually periodic subsets of ω.

An ``OmegaSet`` is a bit prefix followed by a nonempty bit cycle repeated
forever. Selectors f ∈ ω^↑ω are only ever handled through their range,
an infinite ``OmegaSet``; its increasing enumeration is ``OmegaSet.nth``.
"""

import enum
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterator, List, Sequence, Tuple, TypeVar

from boolconv.modules.errors import PreconditionError, StructuralError

T = TypeVar('T')


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def minimal_period(cycle: Sequence[T]) -> Tuple[T, ...]:
    """Shortest word whose repetition gives cycle."""
    length = len(cycle)
    for period in range(1, length + 1):
        if length % period:
            continue
        if all(cycle[i] == cycle[i % period] for i in range(length)):
            return tuple(cycle[:period])
    return tuple(cycle)


def canonical_form(prefix: Sequence[T], cycle: Sequence[T]) -> Tuple[Tuple[T, ...], Tuple[T, ...]]:
    """Unique (prefix, cycle) pair denoting the same infinite word.

    The cycle is reduced to its minimal period, then trailing prefix letters
    equal to the last cycle letter are absorbed by rotating the cycle.
    """
    if len(cycle) == 0:
        raise StructuralError("the cycle of an eventually periodic word must be nonempty")
    body = list(minimal_period(cycle))
    head = list(prefix)
    while head and head[-1] == body[-1]:
        head.pop()
        body = [body[-1]] + body[:-1]
    return tuple(head), tuple(body)


def periodic_term(prefix: Sequence[T], cycle: Sequence[T], n: int) -> T:
    if n < 0:
        raise PreconditionError(f"index must be a natural number, got {n}")
    if n < len(prefix):
        return prefix[n]
    return cycle[(n - len(prefix)) % len(cycle)]


class OmegaKind(str, enum.Enum):
    FINITE = 'finite'
    COFINITE = 'cofinite'
    INFINITE_COINFINITE = 'infinite-coinfinite'


@dataclass(frozen=True)
class OmegaSet:
    """An eventually periodic subset of ω, always stored canonically."""

    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self):
        for bits in (self.prefix, self.cycle):
            if any(bit not in (0, 1) or isinstance(bit, bool) for bit in bits):
                raise StructuralError(f"omega-set bits must be 0 or 1, got {bits!r}")
        prefix, cycle = canonical_form(tuple(self.prefix), tuple(self.cycle))
        object.__setattr__(self, 'prefix', prefix)
        object.__setattr__(self, 'cycle', cycle)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def full(cls) -> 'OmegaSet':
        return cls((), (1,))

    @classmethod
    def empty(cls) -> 'OmegaSet':
        return cls((), (0,))

    @classmethod
    def residue(cls, modulus: int, remainder: int, start: int = 0) -> 'OmegaSet':
        """{n >= start : n ≡ remainder (mod modulus)}."""
        if modulus < 1:
            raise PreconditionError(f"modulus must be positive, got {modulus}")
        prefix = (0,) * start
        cycle = tuple(int((start + i) % modulus == remainder % modulus) for i in range(modulus))
        return cls(prefix, cycle)

    # -- queries --------------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        return periodic_term(self.prefix, self.cycle, n) == 1

    def classify(self) -> OmegaKind:
        if not any(self.cycle):
            return OmegaKind.FINITE
        if all(self.cycle):
            return OmegaKind.COFINITE
        return OmegaKind.INFINITE_COINFINITE

    @property
    def is_infinite(self) -> bool:
        return self.classify() != OmegaKind.FINITE

    @property
    def ones_per_cycle(self) -> int:
        return sum(self.cycle)

    def members(self, limit: int) -> List[int]:
        """Members below limit, ascending."""
        return [n for n in range(limit) if n in self]

    def nth(self, k: int) -> int:
        """f_A(k): the k-th member (from 0) of an infinite set."""
        self.require_infinite()
        head = [n for n in range(len(self.prefix)) if self.prefix[n]]
        if k < len(head):
            return head[k]
        k -= len(head)
        offsets = [i for i, bit in enumerate(self.cycle) if bit]
        laps, index = divmod(k, len(offsets))
        return len(self.prefix) + laps * len(self.cycle) + offsets[index]

    def enumerate(self, count: int) -> Iterator[int]:
        for k in range(count):
            yield self.nth(k)

    def require_infinite(self) -> None:
        if not self.is_infinite:
            raise PreconditionError(f"{self} is finite; an infinite subset of ω is required")

    # -- set algebra ----------------------------------------------------------

    def _combine(self, other: 'OmegaSet', op) -> 'OmegaSet':
        start = max(len(self.prefix), len(other.prefix))
        period = lcm(len(self.cycle), len(other.cycle))
        prefix = [op(n in self, n in other) for n in range(start)]
        cycle = [op(n in self, n in other) for n in range(start, start + period)]
        return OmegaSet(tuple(int(b) for b in prefix), tuple(int(b) for b in cycle))

    def __and__(self, other: 'OmegaSet') -> 'OmegaSet':
        return self._combine(other, lambda a, b: a and b)

    def __or__(self, other: 'OmegaSet') -> 'OmegaSet':
        return self._combine(other, lambda a, b: a or b)

    def __sub__(self, other: 'OmegaSet') -> 'OmegaSet':
        return self._combine(other, lambda a, b: a and not b)

    def complement(self) -> 'OmegaSet':
        return OmegaSet(tuple(1 - b for b in self.prefix), tuple(1 - b for b in self.cycle))

    def almost_subset(self, other: 'OmegaSet') -> bool:
        """A ⊂* B: A ∖ B is finite."""
        return not (self - other).is_infinite

    def splits(self, other: 'OmegaSet') -> bool:
        """self splits other: other ∩ self and other ∖ self are both infinite."""
        return (other & self).is_infinite and (other - self).is_infinite

    # -- serialization --------------------------------------------------------

    def to_json(self) -> Dict[str, List[int]]:
        return {"prefix": list(self.prefix), "cycle": list(self.cycle)}

    @classmethod
    def from_json(cls, data) -> 'OmegaSet':
        if not isinstance(data, dict) or "cycle" not in data:
            raise StructuralError(f"omega-set JSON needs a cycle, got {data!r}")
        return cls(tuple(data.get("prefix", ())), tuple(data["cycle"]))

    def __str__(self):
        head = ''.join(str(b) for b in self.prefix)
        body = ''.join(str(b) for b in self.cycle)
        return f"{head}({body})ω"


def canonicalize_omega_set(prefix: Sequence[int], cycle: Sequence[int]) -> OmegaSet:
    """Canonical OmegaSet for a raw prefix/cycle pair."""
    return OmegaSet(tuple(prefix), tuple(cycle))


def classify_omega_set(a: OmegaSet) -> OmegaKind:
    return a.classify()


EVENS = OmegaSet((), (1, 0))
ODDS = OmegaSet((0,), (1, 0))
