"""Structured element names.

Every vertex, edge, arc and incidence is an :class:`Atom`. Constructions
that build new elements (ordered pairs, endpoint triples, subsets, tagged
copies) name them with composite atoms, so two routes to the same
construction produce literally equal objects.

Atoms are totally ordered: first by constructor rank
(``Leaf < Pair < Triple < Subset < Tag``), then lexicographically by
components.
"""
from __future__ import annotations

from typing import Any, Iterable, Iterator


class Atom:
    __slots__ = ("key", "_hash")
    rank = -1

    def _init_key(self, key: tuple) -> None:
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("atoms are immutable")

    def __eq__(self, other):
        if not isinstance(other, Atom):
            return NotImplemented
        return self._hash == other._hash and self.key == other.key

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __lt__(self, other: Atom) -> bool:
        return self.key < other.key

    def __le__(self, other: Atom) -> bool:
        return self.key <= other.key

    def __gt__(self, other: Atom) -> bool:
        return self.key > other.key

    def __ge__(self, other: Atom) -> bool:
        return self.key >= other.key

    def __reduce__(self):
        return (type(self), self._args())

    def _args(self) -> tuple:
        raise NotImplementedError


class Leaf(Atom):
    __slots__ = ("name",)
    rank = 0

    def __init__(self, name: Any):
        object.__setattr__(self, "name", str(name))
        self._init_key((0, self.name))

    def _args(self):
        return (self.name,)

    def __repr__(self):
        return self.name


class Pair(Atom):
    __slots__ = ("first", "second")
    rank = 1

    def __init__(self, first: Any, second: Any):
        first, second = atom(first), atom(second)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        self._init_key((1, first.key, second.key))

    def _args(self):
        return (self.first, self.second)

    def __iter__(self) -> Iterator[Atom]:
        yield self.first
        yield self.second

    def __repr__(self):
        return f"({self.first!r},{self.second!r})"


class Triple(Atom):
    __slots__ = ("first", "second", "third")
    rank = 2

    def __init__(self, first: Any, second: Any, third: Any):
        first, second, third = atom(first), atom(second), atom(third)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        object.__setattr__(self, "third", third)
        self._init_key((2, first.key, second.key, third.key))

    def _args(self):
        return (self.first, self.second, self.third)

    def __iter__(self) -> Iterator[Atom]:
        yield self.first
        yield self.second
        yield self.third

    def __repr__(self):
        return f"({self.first!r},{self.second!r},{self.third!r})"


class Subset(Atom):
    """A finite set of atoms used as an element in its own right.

    ``items`` is sorted and duplicate-free; ``members`` is the same data as
    a frozenset for membership and inclusion tests.
    """

    __slots__ = ("items", "members")
    rank = 3

    def __init__(self, items: Iterable[Any] = ()):
        members = frozenset(atom(x) for x in items)
        ordered = tuple(sorted(members))
        object.__setattr__(self, "items", ordered)
        object.__setattr__(self, "members", members)
        self._init_key((3, tuple(x.key for x in ordered)))

    def _args(self):
        return (self.items,)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, x) -> bool:
        return x in self.members

    def issubset(self, other: Subset) -> bool:
        return self.members <= other.members

    def __repr__(self):
        return "{" + ",".join(repr(x) for x in self.items) + "}"


class Tag(Atom):
    __slots__ = ("index", "value")
    rank = 4

    def __init__(self, index: int, value: Any):
        value = atom(value)
        object.__setattr__(self, "index", int(index))
        object.__setattr__(self, "value", value)
        self._init_key((4, self.index, value.key))

    def _args(self):
        return (self.index, self.value)

    def __repr__(self):
        return f"<{self.index}:{self.value!r}>"


def atom(x: Any) -> Atom:
    """Coerce a Python value to an atom.

    Strings and ints become leaves, 2- and 3-tuples become pairs and
    triples, sets and frozensets become subsets. Atoms pass through.
    """
    if isinstance(x, Atom):
        return x
    if isinstance(x, (str, int)) and not isinstance(x, bool):
        return Leaf(x)
    if isinstance(x, tuple):
        if len(x) == 2:
            return Pair(*x)
        if len(x) == 3:
            return Triple(*x)
    if isinstance(x, (set, frozenset)):
        return Subset(x)
    raise TypeError(f"cannot make an atom from {x!r}")
