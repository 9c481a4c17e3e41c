"""Seeded random objects and morphisms for every category.

Morphisms are built forwards from their domain: pick a vertex map into a
fresh vertex set, then make sure every edge (arc, incidence) has somewhere
lawful to go, reusing a matching target element when one already exists
and adding a fresh one otherwise.  A few unrelated target elements are
added on top so the codomain is not just the image.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..atoms import Leaf, Pair, Subset
from ..errors import KindError
from ..finset import FinSet, subset_image
from ..functors import CATEGORIES
from ..structures import (
    Digraph,
    IncidenceHypergraph,
    IncidenceStructure,
    Morphism,
    Quiver,
    SetSystem,
    SetSystemHypergraph,
)


@dataclass(frozen=True)
class Bounds:
    vertices: int = 4
    edges: int = 4
    arity: int = 3      # largest endpoint set of a generated hyperedge
    incidences: int = 8


DEFAULT_BOUNDS = Bounds()

_ARITY = {"M": (1, 2), "Gra": (1, 2)}


def _names(prefix: str, n: int) -> list[Leaf]:
    return [Leaf(f"{prefix}{k}") for k in range(n)]


class InstanceGenerator:
    """Deterministic stream of instances of one category."""

    def __init__(self, category: str, bounds: Bounds = DEFAULT_BOUNDS, seed: int = 0):
        if category not in CATEGORIES:
            raise KindError(f"unknown category {category!r}")
        self.category = category
        self.bounds = bounds
        self.seed = seed
        self.rng = random.Random(f"{category}:{seed}")
        self._fresh = 0

    # -------------------------------------------------------------- helpers

    def _fresh_name(self, prefix: str) -> Leaf:
        self._fresh += 1
        return Leaf(f"{prefix}{self._fresh}")

    def _arity_range(self) -> tuple[int, int]:
        return _ARITY.get(self.category, (0, self.bounds.arity))

    def _random_subset(self, pool, lo: int, hi: int) -> Subset:
        pool = list(pool)
        hi = min(hi, len(pool))
        if hi < lo:
            return None
        k = self.rng.randint(lo, hi)
        return Subset(self.rng.sample(pool, k))

    # -------------------------------------------------------------- objects

    def object(self):
        rng, b, cat = self.rng, self.bounds, self.category
        n = rng.randint(0, b.vertices) if rng.random() < 0.1 else rng.randint(1, b.vertices)
        verts = _names("v", n)
        m = rng.randint(0, b.edges)
        if cat == "Q":
            arcs = {} if not verts else {a: (rng.choice(verts), rng.choice(verts)) for a in _names("a", m)}
            return Quiver.build(verts, arcs)
        if cat in ("Digra", "SDigra"):
            pairs = [(v, w) for v in verts for w in verts]
            chosen = set(rng.sample(pairs, min(m, len(pairs))))
            if cat == "SDigra":
                chosen |= {(w, v) for v, w in chosen}
            return Digraph.build(verts, chosen)
        if cat in ("H", "H+", "M"):
            lo, hi = self._arity_range()
            edges = {}
            for e in _names("e", m):
                s = self._random_subset(verts, lo, hi)
                if s is not None:
                    edges[e] = s
            return SetSystemHypergraph.build(verts, edges)
        if cat in ("SSys", "Gra"):
            lo, hi = self._arity_range()
            fam = set()
            for _ in range(m):
                s = self._random_subset(verts, lo, hi)
                if s is not None:
                    fam.add(s)
            return SetSystem.build(verts, fam)
        if cat == "R":
            edges = _names("e", m)
            k = rng.randint(0, b.incidences) if verts and edges else 0
            incs = {i: (rng.choice(verts), rng.choice(edges)) for i in _names("i", k)}
            return IncidenceHypergraph.build(verts, edges, incs)
        if cat == "IStr":
            edges = _names("e", m)
            flags = [(v, e) for v in verts for e in edges]
            k = rng.randint(0, min(b.incidences, len(flags)))
            return IncidenceStructure.build(verts, edges, rng.sample(flags, k))
        raise KindError(cat)  # pragma: no cover

    def objects(self, n: int):
        return [self.object() for _ in range(n)]

    # ------------------------------------------------------------ morphisms

    def _vertex_map(self, verts: FinSet) -> tuple[dict, list]:
        rng = self.rng
        if not verts:
            return {}, _names("w", rng.randint(0, 1))
        k = rng.randint(1, max(1, self.bounds.vertices))
        targets = [self._fresh_name("w") for _ in range(k)]
        f = {v: rng.choice(targets) for v in verts}
        return f, targets

    def _extras(self) -> int:
        return self.rng.choice((0, 0, 1, 2))

    def morphism_from(self, x) -> Morphism:
        """A random morphism of this category with domain ``x``."""
        rng, cat = self.rng, self.category
        kind = CATEGORIES[cat].morphism_kind
        f, W = self._vertex_map(x.vertices)

        if cat == "Q":
            arcs, table = {}, {}
            for e in x.arcs:
                ends = (f[x.src[e]], f[x.tgt[e]])
                same = [a for a, t in arcs.items() if t == ends]
                if same and rng.random() < 0.5:
                    table[e] = rng.choice(same)
                else:
                    table[e] = self._fresh_name("b")
                    arcs[table[e]] = ends
            if W:
                for _ in range(self._extras()):
                    arcs[self._fresh_name("b")] = (rng.choice(W), rng.choice(W))
            y = Quiver.build(W, arcs)
            return Morphism.build(kind, x, y, f, table)

        if cat in ("Digra", "SDigra"):
            arcs = {Pair(f[a.first], f[a.second]) for a in x.arcs}
            if W:
                for _ in range(self._extras()):
                    arcs.add(Pair(rng.choice(W), rng.choice(W)))
            if cat == "SDigra":
                arcs |= {Pair(a.second, a.first) for a in arcs}
            return Morphism.build(kind, x, Digraph(FinSet(W), FinSet(arcs)), f)

        if cat in ("H", "H+", "M"):
            weak = cat == "H+"
            lo, hi = self._arity_range()
            eps, table = {}, {}
            for e in x.edges:
                pushed = subset_image(f, x.eps[e])
                if weak:
                    fits = [b for b, s in eps.items() if pushed.issubset(s)]
                else:
                    fits = [b for b, s in eps.items() if s == pushed]
                if fits and rng.random() < 0.5:
                    table[e] = rng.choice(fits)
                    continue
                target = pushed
                if weak and rng.random() < 0.5:
                    extra = self._random_subset(W, 0, 2) or Subset()
                    target = Subset(pushed.items + extra.items)
                table[e] = self._fresh_name("b")
                eps[table[e]] = target
            for _ in range(self._extras()):
                s = self._random_subset(W, lo, hi)
                if s is not None:
                    eps[self._fresh_name("b")] = s
            return Morphism.build(kind, x, SetSystemHypergraph.build(W, eps), f, table)

        if cat in ("SSys", "Gra"):
            lo, hi = self._arity_range()
            fam = {subset_image(f, a) for a in x.edges}
            for _ in range(self._extras()):
                s = self._random_subset(W, lo, hi)
                if s is not None:
                    fam.add(s)
            return Morphism.build(kind, x, SetSystem(FinSet(W), FinSet(fam)), f)

        if cat in ("R", "IStr"):
            E = [self._fresh_name("c") for _ in range(rng.randint(1, max(1, self.bounds.edges)))] if x.edges else []
            if not x.edges and rng.random() < 0.5:
                E = [self._fresh_name("c")]
            g = {e: rng.choice(E) for e in x.edges}
            if cat == "IStr":
                incs = {Pair(f[p.first], g[p.second]) for p in x.incidences}
                flags = [Pair(v, e) for v in W for e in E]
                for _ in range(self._extras()):
                    if flags:
                        incs.add(rng.choice(flags))
                y = IncidenceStructure(FinSet(W), FinSet(E), FinSet(incs))
                return Morphism.build(kind, x, y, f, g)
            incs, table = {}, {}
            for i in x.incidences:
                flag = (f[x.port[i]], g[x.attach[i]])
                same = [j for j, t in incs.items() if t == flag]
                if same and rng.random() < 0.5:
                    table[i] = rng.choice(same)
                else:
                    table[i] = self._fresh_name("j")
                    incs[table[i]] = flag
            if W and E:
                for _ in range(self._extras()):
                    incs[self._fresh_name("j")] = (rng.choice(W), rng.choice(E))
            y = IncidenceHypergraph.build(W, E, incs)
            return Morphism.build(kind, x, y, f, g, table)

        raise KindError(cat)  # pragma: no cover

    def morphism(self) -> Morphism:
        return self.morphism_from(self.object())

    def composable_pair(self) -> tuple[Morphism, Morphism]:
        """``(m1, m2)`` with ``m2 ∘ m1`` defined."""
        m1 = self.morphism()
        return m1, self.morphism_from(m1.codomain)


def check_generated(cat: str, x) -> list[str]:
    """Problems with a generated object or morphism (should always be empty)."""
    c = CATEGORIES[cat]
    if isinstance(x, Morphism):
        try:
            c.require_morphism(x)
        except KindError as e:
            return [str(e)]
        return []
    return c.object_problems(x)


def random_function_table(rng: random.Random, domain, codomain) -> dict | None:
    """Uniform random map as a dict, or ``None`` if none exists."""
    codomain = list(codomain)
    if domain and not codomain:
        return None
    return {x: rng.choice(codomain) for x in domain}
