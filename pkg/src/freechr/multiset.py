"""
Immutable finite multisets, the carrier of program states.

A :class:`Multiset` keeps its occurrences in canonical (sorted) order, so an
occurrence index is simply a position in :attr:`Multiset.elements`. Because
the value never changes, indices stay valid for as long as the multiset is
alive; every operation returns a fresh multiset.
"""
from collections import Counter
from typing import Any, Callable, Generic, Hashable, Iterable, Iterator, Mapping, Sequence, TypeVar

from freechr.errors import MalformedMatchError

C = TypeVar("C", bound=Hashable)


def _identity(x):
    return x


class Multiset(Generic[C]):
    """A finite multiset over hashable, totally ordered values.

    ``key`` supplies the total order used for canonicalization; it defaults
    to the natural order of the elements.
    """

    __slots__ = ("_elements", "_key", "_hash")

    def __init__(self, elements: Iterable[C] = (), key: Callable[[C], Any] = _identity):
        self._key = key
        self._elements = tuple(sorted(elements, key=key))
        self._hash = None

    @classmethod
    def from_counts(cls, counts: Mapping[C, int], key: Callable[[C], Any] = _identity) -> "Multiset[C]":
        if any(n < 0 for n in counts.values()):
            raise ValueError("counts must be non-negative")
        return cls((x for x, n in counts.items() for _ in range(n)), key=key)

    @property
    def elements(self) -> tuple:
        """Occurrences in canonical order; position ``i`` is occurrence index ``i``."""
        return self._elements

    @property
    def key(self) -> Callable[[C], Any]:
        return self._key

    def counts(self) -> Counter:
        return Counter(self._elements)

    def count(self, value: C) -> int:
        return self._elements.count(value)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[C]:
        return iter(self._elements)

    def __getitem__(self, index: int) -> C:
        return self._elements[index]

    def __contains__(self, value) -> bool:
        return value in self._elements

    def canonical_form(self) -> tuple:
        """A hashable key that is identical exactly for equal multisets."""
        return self._elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        if self._key is other._key:
            return self._elements == other._elements
        return Counter(self._elements) == Counter(other._elements)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(Counter(self._elements).items()))
        return self._hash

    def __lt__(self, other: "Multiset[C]") -> bool:
        # Ordering of states, used only to print them deterministically.
        return [self._key(x) for x in self._elements] < [other._key(x) for x in other._elements]

    def union(self, other: Iterable[C]) -> "Multiset[C]":
        return Multiset(self._elements + tuple(other), key=self._key)

    __add__ = union

    def remove_occurrences(self, indices: Sequence[int]) -> "Multiset[C]":
        """Delete the occurrences at ``indices`` (pairwise distinct, in range)."""
        doomed = set()
        for i in indices:
            if not isinstance(i, int) or not 0 <= i < len(self._elements):
                raise MalformedMatchError(f"occurrence index {i!r} out of range for a multiset of size {len(self)}")
            if i in doomed:
                raise MalformedMatchError(f"occurrence index {i} selected twice")
            doomed.add(i)
        return Multiset((x for i, x in enumerate(self._elements) if i not in doomed), key=self._key)

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self._elements) + "}"

    def __repr__(self) -> str:
        return f"Multiset({list(self._elements)!r})"


def union(a: Multiset[C], b: Multiset[C]) -> Multiset[C]:
    return a.union(b)


def remove_occurrences(s: Multiset[C], indices: Sequence[int]) -> Multiset[C]:
    return s.remove_occurrences(indices)


def canonical_form(s: Multiset[C]) -> tuple:
    return s.canonical_form()
