"""Exhaustive enumeration of homomorphisms between finite structures.

Every morphism kind is compiled into a small constraint problem: one
variable per domain vertex, edge (or arc) and incidence, each ranging over
the matching codomain set, plus one constraint per domain element whose
law has to hold.  Vertices are assigned first, highest degree first, then
edges, then incidences.  A constraint is tested as soon as its last
variable is assigned.

The search is complete or it raises :class:`SizeError`; it never samples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .atoms import Atom, Pair
from .errors import KindError, SizeError
from .finset import DEFAULT_CAPS, Caps, FinFunction, subset_image
from .structures import (
    KIND_NAMES,
    MORPHISM_KINDS,
    GraphObject,
    Morphism,
    edge_set,
    size,
)

MODES = ("enumerate", "count", "exists")

Var = tuple  # ("v" | "e" | "i", atom)


@dataclass(frozen=True)
class HomQuery:
    kind: str
    source: GraphObject
    target: GraphObject
    mode: str = "enumerate"
    caps: Caps = field(default=DEFAULT_CAPS)

    def __post_init__(self):
        if self.kind not in MORPHISM_KINDS:
            raise KindError(f"unknown morphism kind {self.kind!r}")
        otype = MORPHISM_KINDS[self.kind][0]
        for end in (self.source, self.target):
            if not isinstance(end, otype):
                raise KindError(f"{self.kind} homs need {KIND_NAMES[otype]} objects, got {type(end).__name__}")
        if self.mode not in MODES:
            raise KindError(f"unknown mode {self.mode!r}")
        if min(self.caps.vertices, self.caps.edges, self.caps.incidences) <= 0:
            raise SizeError("caps must be positive")


@dataclass
class _Constraint:
    vars: tuple
    test: Callable[[dict], bool]


def _check_caps(q: HomQuery) -> None:
    for name, x in (("source", q.source), ("target", q.target)):
        v, e, i = size(x)
        for what, n, cap in (("vertices", v, q.caps.vertices), ("edges", e, q.caps.edges), ("incidences", i, q.caps.incidences)):
            if n > cap:
                raise SizeError(f"{name} has {n} {what}, cap is {cap}")


# ------------------------------------------------------------ compilation

def _constraints(kind: str, dom, cod) -> list[_Constraint]:
    out: list[_Constraint] = []
    add = lambda vs, t: out.append(_Constraint(tuple(vs), t))

    if kind == "quiver":
        ends = {Pair(cod.src[a], cod.tgt[a]) for a in cod.arcs}
        for e in dom.arcs:
            s, t = ("v", dom.src[e]), ("v", dom.tgt[e])
            add({s, t}, lambda a, s=s, t=t: Pair(a[s], a[t]) in ends)
            add([s, t, ("e", e)], lambda a, s=s, t=t, e=e: cod.src[a[("e", e)]] == a[s] and cod.tgt[a[("e", e)]] == a[t])
    elif kind == "digraph":
        for p in dom.arcs:
            s, t = ("v", p.first), ("v", p.second)
            add({s, t}, lambda a, s=s, t=t: Pair(a[s], a[t]) in cod.arcs)
    elif kind in ("strict-ssh", "weak-ssh"):
        strict = kind == "strict-ssh"
        cod_sets = [cod.eps[b] for b in cod.edges]
        values = set(cod_sets)
        for e in dom.edges:
            ends = dom.eps[e]
            vs = [("v", v) for v in ends]

            def pushed(a, ends=ends):
                return subset_image({v: a[("v", v)] for v in ends}, ends)

            if strict:
                add(vs, lambda a, p=pushed: p(a) in values)
                add(vs + [("e", e)], lambda a, p=pushed, e=e: p(a) == cod.eps[a[("e", e)]])
            else:
                add(vs, lambda a, p=pushed: any(p(a).issubset(b) for b in cod_sets))
                add(vs + [("e", e)], lambda a, p=pushed, e=e: p(a).issubset(cod.eps[a[("e", e)]]))
    elif kind == "ssys":
        for b in dom.edges:
            vs = [("v", v) for v in b]
            add(vs, lambda a, b=b: subset_image({v: a[("v", v)] for v in b}, b) in cod.edges)
    elif kind == "inc-hyp":
        flags = {Pair(cod.port[j], cod.attach[j]) for j in cod.incidences}
        for i in dom.incidences:
            v, e, n = ("v", dom.port[i]), ("e", dom.attach[i]), ("i", i)
            add([v, e], lambda a, v=v, e=e: Pair(a[v], a[e]) in flags)
            add([v, e, n], lambda a, v=v, e=e, n=n: cod.port[a[n]] == a[v] and cod.attach[a[n]] == a[e])
    elif kind == "istr":
        for p in dom.incidences:
            v, e = ("v", p.first), ("e", p.second)
            add([v, e], lambda a, v=v, e=e: Pair(a[v], a[e]) in cod.incidences)
    else:  # pragma: no cover - guarded by HomQuery
        raise KindError(kind)
    return out


def _variables(kind: str, dom, cod, constraints) -> list[tuple[Var, list[Atom]]]:
    comps = MORPHISM_KINDS[kind][1]
    degree: dict[Var, int] = {}
    for c in constraints:
        for v in c.vars:
            degree[v] = degree.get(v, 0) + 1
    verts = sorted(dom.vertices, key=lambda x: (-degree.get(("v", x), 0), x))
    out = [(("v", x), list(cod.vertices)) for x in verts]
    if "edge" in comps:
        out += [(("e", x), list(edge_set(cod))) for x in edge_set(dom)]
    if "incidence" in comps:
        out += [(("i", x), list(cod.incidences)) for x in dom.incidences]
    return out


class _Search:
    def __init__(self, q: HomQuery):
        self.q = q
        cons = _constraints(q.kind, q.source, q.target)
        self.vars = _variables(q.kind, q.source, q.target, cons)
        pos = {v: k for k, (v, _) in enumerate(self.vars)}
        self.ground = [c for c in cons if not c.vars]
        # constraints keyed by the position of their last variable
        self.due: list[list[_Constraint]] = [[] for _ in self.vars]
        for c in cons:
            if c.vars:
                self.due[max(pos[v] for v in c.vars)].append(c)
        # from this position on, every variable is constrained only by earlier ones
        self.free_from = len(self.vars)
        for k in range(len(self.vars) - 1, -1, -1):
            later = {v for v, _ in self.vars[k:]}
            if any(len(later.intersection(c.vars)) > 1 for c in cons):
                break
            self.free_from = k

    def _ok(self, k: int, a: dict) -> bool:
        return all(c.test(a) for c in self.due[k])

    def assignments(self) -> Iterator[dict]:
        if not all(c.test({}) for c in self.ground):
            return
        a: dict = {}
        n = len(self.vars)

        def go(k):
            if k == n:
                yield dict(a)
                return
            var, dom = self.vars[k]
            for y in dom:
                a[var] = y
                if self._ok(k, a):
                    yield from go(k + 1)
            a.pop(var, None)

        yield from go(0)

    def count(self) -> int:
        if not all(c.test({}) for c in self.ground):
            return 0
        a: dict = {}
        n, free = len(self.vars), self.free_from

        def tail():
            total = 1
            for k in range(free, n):
                var, dom = self.vars[k]
                hits = 0
                for y in dom:
                    a[var] = y
                    if self._ok(k, a):
                        hits += 1
                a.pop(var, None)
                if not hits:
                    return 0
                total *= hits
            return total

        def go(k):
            if k == free:
                return tail()
            var, dom = self.vars[k]
            total = 0
            for y in dom:
                a[var] = y
                if self._ok(k, a):
                    total += go(k + 1)
            a.pop(var, None)
            return total

        return go(0)

    def to_morphism(self, a: dict) -> Morphism:
        q = self.q
        comps = {"v": {}, "e": {}, "i": {}}
        for (tag, x), y in a.items():
            comps[tag][x] = y
        names = MORPHISM_KINDS[q.kind][1]
        # every value was drawn from the matching codomain set
        v = FinFunction.trusted(q.source.vertices, q.target.vertices, comps["v"])
        e = FinFunction.trusted(edge_set(q.source), edge_set(q.target), comps["e"]) if "edge" in names else None
        i = FinFunction.trusted(q.source.incidences, q.target.incidences, comps["i"]) if "incidence" in names else None
        return Morphism(q.kind, q.source, q.target, v, e, i)


def iter_homs(q: HomQuery) -> Iterator[Morphism]:
    """Lazily yield the hom-set in the same order as :func:`enumerate_homs`."""
    _check_caps(q)
    s = _Search(q)
    for a in s.assignments():
        yield s.to_morphism(a)


def enumerate_homs(q: HomQuery) -> list[Morphism]:
    return list(iter_homs(q))


def count_homs(q: HomQuery) -> int:
    _check_caps(q)
    return _Search(q).count()


def exists_hom(q: HomQuery) -> bool:
    return next(iter_homs(q), None) is not None


def run(q: HomQuery):
    """Dispatch on ``q.mode``."""
    if q.mode == "count":
        return count_homs(q)
    if q.mode == "exists":
        return exists_hom(q)
    return enumerate_homs(q)


def homs(kind: str, source, target, caps: Caps = DEFAULT_CAPS) -> list[Morphism]:
    return enumerate_homs(HomQuery(kind, source, target, caps=caps))


def count(kind: str, source, target, caps: Caps = DEFAULT_CAPS) -> int:
    return count_homs(HomQuery(kind, source, target, "count", caps))
