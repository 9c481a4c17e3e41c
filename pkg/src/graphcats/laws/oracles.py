"""Direct formulas, written independently of the functor pipelines.

These are what the composites are checked against: each formula says in
one step what a long chain of functors is supposed to compute.  The
cartesian hom scan at the bottom is the brute-force reference for the
backtracking search.
"""
from __future__ import annotations

from itertools import product

from ..atoms import Pair, Subset
from ..finset import FinSet
from ..structures import (
    MORPHISM_KINDS,
    IncidenceStructure,
    Morphism,
    SetSystem,
    SetSystemHypergraph,
    check_morphism,
    edge_set,
)


def _small_subsets(a: Subset) -> list[Subset]:
    xs = a.items
    return [Subset([v]) for v in xs] + [Subset([v, w]) for i, v in enumerate(xs) for w in xs[i + 1:]]


# ---------------------------------------------------------------- R

def clique_graph(g: SetSystemHypergraph) -> SetSystem:
    """Every 1- and 2-element subset of some edge's endpoints."""
    edges = set()
    for e in g.edges:
        edges.update(_small_subsets(g.eps[e]))
    return SetSystem(g.vertices, FinSet(edges))


def clique_graph_mor(m: Morphism) -> Morphism:
    return Morphism.build("ssys", clique_graph(m.domain), clique_graph(m.codomain), m.vertex.mapping)


# ---------------------------------------------------------------- Λ

def intersection_graph(g: SetSystemHypergraph) -> SetSystem:
    """Vertices are edges; ``{e}`` if ``e`` has an endpoint, ``{e, f}`` if they share one."""
    edges = set()
    for e in g.edges:
        for f in g.edges:
            if g.eps[e].members & g.eps[f].members:
                edges.add(Subset([e, f]))
    return SetSystem(g.edges, FinSet(edges))


def intersection_graph_mor(m: Morphism) -> Morphism:
    dom, cod = intersection_graph(m.domain), intersection_graph(m.codomain)
    return Morphism.build("ssys", dom, cod, m.edge.mapping)


# ---------------------------------------------------------------- □⊤ and □‡

def transpose(s: IncidenceStructure) -> IncidenceStructure:
    return IncidenceStructure(s.edges, s.vertices, FinSet(Pair(p.second, p.first) for p in s.incidences))


def transpose_mor(m: Morphism) -> Morphism:
    return Morphism.build("istr", transpose(m.domain), transpose(m.codomain), m.edge.mapping, m.vertex.mapping)


def dual_hypergraph(g: SetSystemHypergraph) -> SetSystemHypergraph:
    """Vertices and edges swap; vertex ``v`` becomes the edge of all edges containing it."""
    eps = {v: Subset(e for e in g.edges if v in g.eps[e]) for v in g.vertices}
    return SetSystemHypergraph(g.edges, g.vertices, eps)


def dual_hypergraph_mor(m: Morphism) -> Morphism:
    dom, cod = dual_hypergraph(m.domain), dual_hypergraph(m.codomain)
    return Morphism.build("weak-ssh", dom, cod, m.edge.mapping, m.vertex.mapping)


# ---------------------------------------------------------------- helpers

def drop_singletons(s: SetSystem) -> SetSystem:
    return SetSystem(s.vertices, s.edges.filter(lambda a: len(a) != 1))


# ---------------------------------------------------------------- brute force

def _all_maps(domain, codomain):
    domain, codomain = list(domain), list(codomain)
    for images in product(codomain, repeat=len(domain)):
        yield dict(zip(domain, images))


def full_scan(kind: str, source, target) -> list[Morphism]:
    """Every morphism of ``kind``, by testing the whole cartesian product."""
    comps = MORPHISM_KINDS[kind][1]
    found = []
    edges = list(_all_maps(edge_set(source), edge_set(target))) if "edge" in comps else [None]
    incs = list(_all_maps(source.incidences, target.incidences)) if "incidence" in comps else [None]
    for f in _all_maps(source.vertices, target.vertices):
        for g in edges:
            for h in incs:
                m = Morphism.build(kind, source, target, f, g, h)
                if check_morphism(m):
                    found.append(m)
    return found


def full_scan_count(kind: str, source, target) -> int:
    return len(full_scan(kind, source, target))
