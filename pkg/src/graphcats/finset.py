"""Finite sets, functions and quasi-orders.

Only the handful of constructions the graph categories are built from live
here: power sets, images, products, the tagged coproduct, kernel pairs,
dual and subset orders, and the lax-square test on set-valued maps.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Iterator, Mapping

from .atoms import Atom, Pair, Subset, Tag, atom
from .errors import DomainError, KindError, SizeError


@dataclass(frozen=True)
class Caps:
    """Size limits; everything in this package is exponential."""

    power_set: int = 12
    vertices: int = 6
    edges: int = 6
    incidences: int = 12
    product: int = 144


DEFAULT_CAPS = Caps()


class FinSet:
    """Sorted, duplicate-free, immutable set of atoms."""

    __slots__ = ("elements", "_members", "_hash")

    def __init__(self, elements: Iterable[Any] = ()):
        members = frozenset(atom(x) for x in elements)
        object.__setattr__(self, "_members", members)
        object.__setattr__(self, "elements", tuple(sorted(members)))
        object.__setattr__(self, "_hash", hash(self.elements))

    @classmethod
    def of(cls, *xs: Any) -> FinSet:
        return cls(xs)

    def __setattr__(self, name, value):
        raise AttributeError("FinSet is immutable")

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __eq__(self, other):
        if not isinstance(other, FinSet):
            return NotImplemented
        return self._hash == other._hash and self.elements == other.elements

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FinSet{" + ", ".join(map(repr, self.elements)) + "}"

    @property
    def members(self) -> frozenset:
        return self._members

    def issubset(self, other: FinSet | Iterable[Atom]) -> bool:
        other = other.members if isinstance(other, FinSet) else frozenset(other)
        return self._members <= other

    def union(self, other: Iterable[Any]) -> FinSet:
        return FinSet(self._members.union(atom(x) for x in other))

    def filter(self, pred) -> FinSet:
        return FinSet(x for x in self.elements if pred(x))


class FinFunction:
    """Total function between finite sets.

    Raises :class:`DomainError` on construction if the mapping misses a
    domain element or leaves the codomain.
    """

    __slots__ = ("domain", "codomain", "mapping")

    def __init__(self, domain: FinSet, codomain: FinSet, mapping: Mapping[Any, Any]):
        table = {atom(k): atom(v) for k, v in mapping.items()}
        if table.keys() != domain.members:
            missing = [x for x in domain if x not in table]
            if missing:
                raise DomainError(f"function undefined on {missing}")
            extra = sorted(k for k in table if k not in domain)
            raise DomainError(f"function defined outside its domain on {extra}")
        if not codomain.members.issuperset(table.values()):
            stray = sorted({v for v in table.values() if v not in codomain})
            raise DomainError(f"values {stray} lie outside the codomain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "mapping", table)

    def __setattr__(self, name, value):
        raise AttributeError("FinFunction is immutable")

    @classmethod
    def trusted(cls, domain: FinSet, codomain: FinSet, table: dict) -> FinFunction:
        """Skip validation; ``table`` must already be a total atom-to-atom map."""
        f = object.__new__(cls)
        object.__setattr__(f, "domain", domain)
        object.__setattr__(f, "codomain", codomain)
        object.__setattr__(f, "mapping", table)
        return f

    @classmethod
    def identity(cls, s: FinSet) -> FinFunction:
        return cls(s, s, {x: x for x in s})

    @classmethod
    def inclusion(cls, s: FinSet, t: FinSet) -> FinFunction:
        return cls(s, t, {x: x for x in s})

    def __call__(self, x: Any) -> Atom:
        return self[x]

    def __getitem__(self, x: Any) -> Atom:
        try:
            return self.mapping[atom(x)]
        except KeyError:
            raise DomainError(f"{x!r} is not in the domain") from None

    def __eq__(self, other):
        if not isinstance(other, FinFunction):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.mapping == other.mapping
        )

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{k!r}->{self.mapping[k]!r}" for k in self.domain)
        return f"FinFunction({body})"

    def after(self, other: FinFunction) -> FinFunction:
        """``self ∘ other``."""
        if other.codomain != self.domain:
            raise KindError("functions are not composable")
        return FinFunction.trusted(
            other.domain, self.codomain, {x: self.mapping[y] for x, y in other.mapping.items()}
        )

    def corestrict(self, codomain: FinSet) -> FinFunction:
        return FinFunction(self.domain, codomain, self.mapping)

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.domain) == len(self.codomain)


@dataclass(frozen=True)
class QuasiOrder:
    """A reflexive, transitive relation stored extensionally as pairs."""

    carrier: FinSet
    leq: frozenset

    def __post_init__(self):
        problems = quasi_order_violations(self.carrier, self.leq)
        if problems:
            raise DomainError("; ".join(problems))

    def le(self, x: Atom, y: Atom) -> bool:
        return (x, y) in self.leq

    def is_antisymmetric(self) -> bool:
        return all(x == y or (y, x) not in self.leq for x, y in self.leq)


def quasi_order_violations(carrier: FinSet, leq: Iterable[tuple]) -> list[str]:
    leq = frozenset(leq)
    problems = []
    for x, y in leq:
        if x not in carrier or y not in carrier:
            problems.append(f"pair ({x!r},{y!r}) leaves the carrier")
    for x in carrier:
        if (x, x) not in leq:
            problems.append(f"not reflexive at {x!r}")
    above: dict[Atom, set] = {}
    for x, y in leq:
        above.setdefault(x, set()).add(y)
    for x, y in leq:
        for z in above.get(y, ()):
            if (x, z) not in leq:
                problems.append(f"not transitive at {x!r} <= {y!r} <= {z!r}")
    return problems


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeError(f"{what}: size {n} exceeds cap {cap}")


def subsets(s: Iterable[Atom]) -> Iterator[Subset]:
    """All subsets of ``s``, smallest first. No cap; callers check."""
    items = sorted(s)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            yield Subset(combo)


def power_set(s: FinSet, cap: int | None = None) -> FinSet:
    _check_cap(len(s), DEFAULT_CAPS.power_set if cap is None else cap, "power set")
    return FinSet(subsets(s))


def image(f: FinFunction | Mapping, a: Iterable[Any]) -> FinSet:
    table = f.mapping if isinstance(f, FinFunction) else f
    out = []
    for x in a:
        x = atom(x)
        if x not in table:
            raise DomainError(f"{x!r} is not in the domain")
        out.append(table[x])
    return FinSet(out)


def subset_image(f: FinFunction | Mapping, a: Iterable[Atom]) -> Subset:
    """Image of ``a`` as a :class:`Subset` atom (the power-set functor)."""
    return Subset(image(f, a))


def product(s: FinSet, t: FinSet, cap: int | None = None) -> FinSet:
    _check_cap(len(s) * len(t), DEFAULT_CAPS.product if cap is None else cap, "product")
    return FinSet(Pair(x, y) for x in s for y in t)


@lru_cache(maxsize=512)
def tagged_coproduct(s: FinSet, t: FinSet) -> tuple[FinSet, FinFunction, FinFunction]:
    carrier = FinSet([Tag(0, x) for x in s] + [Tag(1, y) for y in t])
    inj0 = FinFunction(s, carrier, {x: Tag(0, x) for x in s})
    inj1 = FinFunction(t, carrier, {y: Tag(1, y) for y in t})
    return carrier, inj0, inj1


def copair(carrier: FinSet, left: FinFunction, right: FinFunction) -> FinFunction:
    """The unique map out of a tagged coproduct restricting to ``left`` and ``right``."""
    if left.codomain != right.codomain:
        raise KindError("copairing needs a common codomain")
    table = {}
    for z in carrier:
        if not isinstance(z, Tag) or z.index not in (0, 1):
            raise DomainError(f"{z!r} is not a coproduct element")
        table[z] = (left if z.index == 0 else right)[z.value]
    return FinFunction(carrier, left.codomain, table)


def kernel_pair(f: FinFunction) -> tuple[FinSet, FinFunction, FinFunction]:
    fibres: dict[Atom, list[Atom]] = {}
    for x in f.domain:
        fibres.setdefault(f.mapping[x], []).append(x)
    carrier = FinSet(Pair(i, j) for fibre in fibres.values() for i in fibre for j in fibre)
    p0 = FinFunction(carrier, f.domain, {z: z.first for z in carrier})
    p1 = FinFunction(carrier, f.domain, {z: z.second for z in carrier})
    return carrier, p0, p1


def pullback_mediator(f: FinFunction, u0: FinFunction, u1: FinFunction) -> FinFunction:
    """Unique ``u`` into the kernel pair of ``f`` with ``p0∘u = u0`` and ``p1∘u = u1``."""
    if u0.domain != u1.domain or u0.codomain != f.domain or u1.codomain != f.domain:
        raise KindError("mediator legs do not fit the kernel pair")
    carrier, _, _ = kernel_pair(f)
    table = {}
    for z in u0.domain:
        a, b = u0.mapping[z], u1.mapping[z]
        if f.mapping[a] != f.mapping[b]:
            raise DomainError(f"legs are not equalized by f at {z!r}")
        table[z] = Pair(a, b)
    return FinFunction(u0.domain, carrier, table)


def discrete_order(s: FinSet) -> QuasiOrder:
    """The trivial order; the free quasi-order on a set."""
    return QuasiOrder(s, frozenset((x, x) for x in s))


def dual_order(p: QuasiOrder) -> QuasiOrder:
    return QuasiOrder(p.carrier, frozenset((y, x) for x, y in p.leq))


def subset_order(s: FinSet, cap: int | None = None) -> QuasiOrder:
    carrier = power_set(s, cap)
    leq = frozenset((a, b) for a in carrier for b in carrier if a.issubset(b))
    return QuasiOrder(carrier, leq)


def is_monotone(f: FinFunction, p: QuasiOrder, q: QuasiOrder) -> bool:
    if f.domain != p.carrier or not f.codomain.issubset(q.carrier):
        raise KindError("function does not match the order carriers")
    return all((f.mapping[x], f.mapping[y]) in q.leq for x, y in p.leq)


def pointwise_le(phi: FinFunction, psi: FinFunction, q: QuasiOrder) -> bool:
    """Whether the (unique) 2-cell ``phi => psi`` exists in QOrd."""
    if phi.domain != psi.domain:
        raise KindError("2-cell between maps with different domains")
    return all((phi.mapping[x], psi.mapping[x]) in q.leq for x in phi.domain)


def _subset_values(eps: FinFunction) -> FinSet:
    """Union of the subsets an edge map can point to."""
    seen = set()
    for v in eps.mapping.values():
        if not isinstance(v, Subset):
            raise KindError(f"{v!r} is not a subset")
        seen.update(v.members)
    return FinSet(seen)


def lax_square_holds(g: FinFunction, f: FinFunction, eps: FinFunction, eps2: FinFunction) -> bool:
    """Whether ``(g, f)`` is a 1-cell of the lax comma category.

    ``eps: Y -> P(X)``, ``eps2: Y' -> P(X')``, ``g: Y -> Y'``, ``f: X -> X'``.
    The square is read in the dual subset order on ``P(X')``: a 2-cell from
    ``eps2 ∘ g`` to ``P(f) ∘ eps`` must exist pointwise.
    """
    if g.domain != eps.domain or g.codomain != eps2.domain:
        raise KindError("edge map does not match the incidence maps")
    if not _subset_values(eps).issubset(f.domain) or not _subset_values(eps2).issubset(f.codomain):
        raise KindError("vertex map does not match the incidence maps")
    order = dual_order(subset_order(f.codomain))
    upper = eps2.after(g).corestrict(order.carrier)
    pushed = FinFunction(eps.domain, order.carrier, {e: subset_image(f, a) for e, a in eps.mapping.items()})
    return pointwise_le(upper, pushed, order)


def square_commutes(g: FinFunction, f: FinFunction, eps: FinFunction, eps2: FinFunction) -> bool:
    """Strict version of :func:`lax_square_holds`: ``P(f) ∘ eps = eps2 ∘ g``."""
    if g.domain != eps.domain or g.codomain != eps2.domain:
        raise KindError("edge map does not match the incidence maps")
    return all(subset_image(f, eps.mapping[e]) == eps2.mapping[g.mapping[e]] for e in eps.domain)
