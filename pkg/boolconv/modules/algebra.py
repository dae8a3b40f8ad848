"""Finite atomic Boolean algebras P(atoms) with elements as atom-flag words.

An algebra with ``n`` atoms has the carrier ``0 .. 2**n - 1``; the word ``w``
stands for the set of atoms whose bit is set in ``w``. Subsets of the carrier
(``ElementSet``) are stored as ``2**n``-bit characteristic masks, so every
family of subsets is a set of plain integers.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, Tuple, Union

from boolconv.modules.errors import StructuralError


# =============================================================================
# BIT HELPERS
# =============================================================================

def popcount(mask: int) -> int:
    return bin(mask).count('1')


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def submasks(mask: int, include_empty: bool = False) -> Iterator[int]:
    """Submasks of mask in ascending numeric order."""
    sub = 0
    if include_empty:
        yield 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


# =============================================================================
# ALGEBRA
# =============================================================================

@dataclass(frozen=True)
class Algebra:
    """The power-set algebra of a finite set of atoms."""

    atoms: int

    def __post_init__(self):
        if not isinstance(self.atoms, int) or isinstance(self.atoms, bool) or self.atoms < 1:
            raise StructuralError(f"atom count must be a positive integer, got {self.atoms!r}")

    @property
    def size(self) -> int:
        """Number of elements of the carrier."""
        return 1 << self.atoms

    @property
    def top_word(self) -> int:
        return self.size - 1

    @property
    def carrier_mask(self) -> int:
        return (1 << self.size) - 1

    @property
    def bottom(self) -> 'Element':
        return Element(self, 0)

    @property
    def top(self) -> 'Element':
        return Element(self, self.top_word)

    def element(self, word: int) -> 'Element':
        return Element(self, word)

    def elements(self) -> Iterator['Element']:
        for word in range(self.size):
            yield Element(self, word)

    def atom_elements(self) -> Tuple['Element', ...]:
        return tuple(Element(self, 1 << i) for i in range(self.atoms))

    def element_set(self, items: Iterable[Union['Element', int]] = ()) -> 'ElementSet':
        mask = 0
        for item in items:
            mask |= 1 << self._word_of(item)
        return ElementSet(self, mask)

    def carrier(self) -> 'ElementSet':
        return ElementSet(self, self.carrier_mask)

    def empty(self) -> 'ElementSet':
        return ElementSet(self, 0)

    def _word_of(self, item: Union['Element', int]) -> int:
        if isinstance(item, Element):
            self._own(item)
            return item.word
        if isinstance(item, bool) or not isinstance(item, int) or not 0 <= item < self.size:
            raise StructuralError(f"{item!r} is not an element word of {self}")
        return item

    def _own(self, value) -> None:
        if value.algebra != self:
            raise StructuralError(f"{value!r} belongs to {value.algebra}, not {self}")

    # -- lattice operations ---------------------------------------------------

    def meet(self, a: 'Element', b: 'Element') -> 'Element':
        self._own(a)
        self._own(b)
        return Element(self, a.word & b.word)

    def join(self, a: 'Element', b: 'Element') -> 'Element':
        self._own(a)
        self._own(b)
        return Element(self, a.word | b.word)

    def complement(self, a: 'Element') -> 'Element':
        self._own(a)
        return Element(self, self.top_word ^ a.word)

    def le(self, a: 'Element', b: 'Element') -> bool:
        self._own(a)
        self._own(b)
        return a.word & b.word == a.word

    def big_meet(self, s: 'ElementSet') -> 'Element':
        """Meet of a set; the empty meet is the top."""
        self._own(s)
        return Element(self, meet_words(self, s.words()))

    def big_join(self, s: 'ElementSet') -> 'Element':
        """Join of a set; the empty join is the bottom."""
        self._own(s)
        return Element(self, join_words(s.words()))

    def atoms_below(self, a: 'Element') -> 'ElementSet':
        self._own(a)
        return self.element_set(1 << i for i in iter_bits(a.word))

    # -- closures -------------------------------------------------------------

    @cached_property
    def up_masks(self) -> Tuple[int, ...]:
        """up_masks[w] is the characteristic mask of w↑."""
        table = []
        for word in range(self.size):
            mask = 0
            for other in range(self.size):
                if word & other == word:
                    mask |= 1 << other
            table.append(mask)
        return tuple(table)

    @cached_property
    def down_masks(self) -> Tuple[int, ...]:
        """down_masks[w] is the characteristic mask of w↓."""
        table = []
        for word in range(self.size):
            mask = 0
            for other in range(self.size):
                if word & other == other:
                    mask |= 1 << other
            table.append(mask)
        return tuple(table)

    def up_closure_mask(self, mask: int) -> int:
        result = 0
        ups = self.up_masks
        for word in iter_bits(mask):
            result |= ups[word]
        return result

    def down_closure_mask(self, mask: int) -> int:
        result = 0
        downs = self.down_masks
        for word in iter_bits(mask):
            result |= downs[word]
        return result

    def up_closure(self, s: 'ElementSet') -> 'ElementSet':
        """{b : a <= b for some a in s}."""
        self._own(s)
        return ElementSet(self, self.up_closure_mask(s.mask))

    def down_closure(self, s: 'ElementSet') -> 'ElementSet':
        """{b : b <= a for some a in s}."""
        self._own(s)
        return ElementSet(self, self.down_closure_mask(s.mask))

    def complement_mask(self, mask: int) -> int:
        """Characteristic mask of {a' : a in mask}."""
        result = 0
        top = self.top_word
        for word in iter_bits(mask):
            result |= 1 << (top ^ word)
        return result

    # -- presentation ---------------------------------------------------------

    def label(self, word: int) -> str:
        return format(word, f'0{self.atoms}b')

    def to_json(self) -> Dict[str, int]:
        return {"atoms": self.atoms}

    @classmethod
    def from_json(cls, data) -> 'Algebra':
        if not isinstance(data, dict) or "atoms" not in data:
            raise StructuralError(f"algebra JSON must look like {{\"atoms\": n}}, got {data!r}")
        return cls(data["atoms"])

    def __str__(self):
        return f"P({self.atoms})"


def meet_words(algebra: Algebra, words: Iterable[int]) -> int:
    result = algebra.top_word
    for word in words:
        result &= word
    return result


def join_words(words: Iterable[int]) -> int:
    result = 0
    for word in words:
        result |= word
    return result


# =============================================================================
# ELEMENTS AND ELEMENT SETS
# =============================================================================

@dataclass(frozen=True)
class Element:
    """An element of a finite algebra; <= is the lattice order."""

    algebra: Algebra
    word: int

    def __post_init__(self):
        if isinstance(self.word, bool) or not isinstance(self.word, int):
            raise StructuralError(f"element word must be an integer, got {self.word!r}")
        if not 0 <= self.word < self.algebra.size:
            raise StructuralError(f"word {self.word} is outside the carrier of {self.algebra}")

    def __and__(self, other: 'Element') -> 'Element':
        return self.algebra.meet(self, other)

    def __or__(self, other: 'Element') -> 'Element':
        return self.algebra.join(self, other)

    def __invert__(self) -> 'Element':
        return self.algebra.complement(self)

    def __le__(self, other: 'Element') -> bool:
        return self.algebra.le(self, other)

    def __lt__(self, other: 'Element') -> bool:
        return self.algebra.le(self, other) and self.word != other.word

    def __ge__(self, other: 'Element') -> bool:
        return self.algebra.le(other, self)

    def __gt__(self, other: 'Element') -> bool:
        return self.algebra.le(other, self) and self.word != other.word

    def __int__(self) -> int:
        return self.word

    @property
    def is_atom(self) -> bool:
        return popcount(self.word) == 1

    def __repr__(self):
        return f"Element({self.algebra.label(self.word)})"


@dataclass(frozen=True)
class ElementSet:
    """A subset of the carrier of an algebra."""

    algebra: Algebra
    mask: int

    def __post_init__(self):
        if isinstance(self.mask, bool) or not isinstance(self.mask, int):
            raise StructuralError(f"element set mask must be an integer, got {self.mask!r}")
        if not 0 <= self.mask <= self.algebra.carrier_mask:
            raise StructuralError(f"mask {self.mask:#x} is not a subset of the carrier of {self.algebra}")

    def words(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __iter__(self) -> Iterator[Element]:
        for word in iter_bits(self.mask):
            yield Element(self.algebra, word)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, item) -> bool:
        if isinstance(item, Element):
            if item.algebra != self.algebra:
                raise StructuralError(f"{item!r} belongs to {item.algebra}, not {self.algebra}")
            word = item.word
        else:
            word = item
        return bool(self.mask >> word & 1)

    def _same(self, other: 'ElementSet') -> None:
        if not isinstance(other, ElementSet) or other.algebra != self.algebra:
            raise StructuralError(f"cannot combine element sets of {self.algebra} and {other!r}")

    def __or__(self, other: 'ElementSet') -> 'ElementSet':
        self._same(other)
        return ElementSet(self.algebra, self.mask | other.mask)

    def __and__(self, other: 'ElementSet') -> 'ElementSet':
        self._same(other)
        return ElementSet(self.algebra, self.mask & other.mask)

    def __sub__(self, other: 'ElementSet') -> 'ElementSet':
        self._same(other)
        return ElementSet(self.algebra, self.mask & ~other.mask)

    def issubset(self, other: 'ElementSet') -> bool:
        self._same(other)
        return self.mask & other.mask == self.mask

    def nonempty_subsets(self) -> Iterator['ElementSet']:
        for sub in submasks(self.mask):
            yield ElementSet(self.algebra, sub)

    def complements(self) -> 'ElementSet':
        """{a' : a in self}."""
        return ElementSet(self.algebra, self.algebra.complement_mask(self.mask))

    def to_json(self):
        return list(self.words())

    @classmethod
    def from_json(cls, algebra: Algebra, data) -> 'ElementSet':
        if not isinstance(data, list):
            raise StructuralError(f"element set JSON must be an array, got {data!r}")
        return algebra.element_set(data)

    def __repr__(self):
        labels = ', '.join(self.algebra.label(w) for w in self.words())
        return f"ElementSet({{{labels}}})"
