"""Functors between the graph categories.

Each functor is registered under a stable string name (used by CLI
pipelines) together with its source and target category. Calling a
:class:`Functor` on an object or a morphism checks membership in the source
category first.

Composite functors (``simp_M``, ``emb_M``, ``clique_factored``,
``dual_top``, ``dual_ddag``, ``intersect_factored``) are evaluated by
actually running their factors in sequence. The classical ``gamma``,
``linegraph`` and ``classical_dual`` are object maps only: none of them
extends to a functor, so they refuse morphisms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .atoms import Pair, Subset, Triple
from .errors import KindError, PredicateError, SizeError, UnsupportedOperation
from .finset import (
    DEFAULT_CAPS,
    FinFunction,
    FinSet,
    copair,
    kernel_pair,
    pullback_mediator,
    subset_image,
    subsets,
    tagged_coproduct,
)
from .structures import (
    KIND_NAMES,
    Digraph,
    GraphObject,
    IncidenceHypergraph,
    IncidenceStructure,
    Morphism,
    Quiver,
    SetSystem,
    SetSystemHypergraph,
    morphism_violations,
    violations,
)


@dataclass(frozen=True)
class Category:
    name: str
    otype: type
    predicate: Optional[str]
    morphism_kind: str

    def object_problems(self, x) -> list[str]:
        if not isinstance(x, self.otype):
            return [f"{self.name} needs a {KIND_NAMES[self.otype]}, got {type(x).__name__}"]
        return violations(x, self.predicate)

    def require_object(self, x) -> None:
        problems = self.object_problems(x)
        if problems:
            err = PredicateError if isinstance(x, self.otype) else KindError
            raise err(f"not an object of {self.name}: " + "; ".join(problems[:3]))

    def require_morphism(self, m: Morphism) -> None:
        if m.kind != self.morphism_kind:
            raise KindError(f"{self.name} morphisms are {self.morphism_kind}, got {m.kind}")
        self.require_object(m.domain)
        self.require_object(m.codomain)
        bad = morphism_violations(m)
        if bad:
            raise KindError(f"not a valid {m.kind} morphism at " + ", ".join(bad[:3]))

    def contains(self, x) -> bool:
        if isinstance(x, Morphism):
            try:
                self.require_morphism(x)
            except KindError:
                return False
            return True
        return not self.object_problems(x)


CATEGORIES = {
    c.name: c
    for c in [
        Category("Q", Quiver, None, "quiver"),
        Category("Digra", Digraph, None, "digraph"),
        Category("SDigra", Digraph, "symmetric", "digraph"),
        Category("H", SetSystemHypergraph, None, "strict-ssh"),
        Category("H+", SetSystemHypergraph, None, "weak-ssh"),
        Category("M", SetSystemHypergraph, "multigraph", "strict-ssh"),
        Category("SSys", SetSystem, None, "ssys"),
        Category("Gra", SetSystem, "simple-graph", "ssys"),
        Category("R", IncidenceHypergraph, None, "inc-hyp"),
        Category("IStr", IncidenceStructure, None, "istr"),
    ]
}

# full subcategory -> ambient category (objects and morphisms included as-is)
FULL_SUBCATEGORIES = {"SDigra": "Digra", "M": "H", "Gra": "SSys"}


def category_of_kind(kind: str) -> str:
    """Default category for a declared structure kind."""
    return {
        "quiver": "Q",
        "digraph": "Digra",
        "symmetric-digraph": "SDigra",
        "set-system": "SSys",
        "simple-graph": "Gra",
        "ssh": "H",
        "multigraph": "M",
        "inc-hyp": "R",
        "istr": "IStr",
    }[kind]


def fits(produced: str, wanted: str) -> bool:
    """Whether output of category ``produced`` may feed a functor on ``wanted``."""
    return produced == wanted or FULL_SUBCATEGORIES.get(produced) == wanted


@dataclass(frozen=True)
class Functor:
    name: str
    symbol: str
    source: str
    target: str
    on_object: Callable[[GraphObject], GraphObject]
    on_morphism: Optional[Callable[[Morphism], Morphism]]

    @property
    def acts_on_morphisms(self) -> bool:
        return self.on_morphism is not None

    def __call__(self, x):
        src = CATEGORIES[self.source]
        if isinstance(x, Morphism):
            if self.on_morphism is None:
                raise UnsupportedOperation(f"{self.name} ({self.symbol}) has no morphism action")
            src.require_morphism(x)
            return self.on_morphism(x)
        src.require_object(x)
        return self.on_object(x)

    def fmap(self, m: Morphism) -> Morphism:
        """Morphism action without the membership checks (for inputs known valid)."""
        if self.on_morphism is None:
            raise UnsupportedOperation(f"{self.name} ({self.symbol}) has no morphism action")
        return self.on_morphism(m)


FUNCTORS: dict[str, Functor] = {}


def _register(name, symbol, source, target, on_object, on_morphism=None):
    FUNCTORS[name] = Functor(name, symbol, source, target, on_object, on_morphism)


def apply(name: str, x):
    try:
        f = FUNCTORS[name]
    except KeyError:
        raise KindError(f"unknown functor {name!r}") from None
    return f(x)


def _hom(kind, dom, cod, vertex, edge=None, incidence=None) -> Morphism:
    return Morphism.build(kind, dom, cod, vertex, edge, incidence)


def _memo(fn):
    """Remember recent images by object identity.

    Objects are immutable, and the cache holds a reference to each key so
    an id cannot be recycled while its entry is alive.
    """
    cache: dict = {}

    def wrapped(x, *args):
        key = (id(x), args)
        hit = cache.get(key)
        if hit is not None and hit[0] is x:
            return hit[1]
        out = fn(x, *args)
        if len(cache) >= 512:
            cache.clear()
        cache[key] = (x, out)
        return out

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    wrapped.__wrapped__ = fn
    return wrapped


# ------------------------------------------------------------ quivers/digraphs

@_memo
def simp_q(q: Quiver) -> Digraph:
    return Digraph(q.vertices, FinSet(Pair(q.src[e], q.tgt[e]) for e in q.arcs))


def _simp_q_mor(m: Morphism) -> Morphism:
    return _hom("digraph", simp_q(m.domain), simp_q(m.codomain), m.vertex.mapping)


@_memo
def emb_q(d: Digraph) -> Quiver:
    return Quiver(d.vertices, d.arcs, {a: a.first for a in d.arcs}, {a: a.second for a in d.arcs})


def _emb_q_mor(m: Morphism) -> Morphism:
    f = m.vertex.mapping
    arcs = {a: Pair(f[a.first], f[a.second]) for a in m.domain.arcs}
    return _hom("quiver", emb_q(m.domain), emb_q(m.codomain), f, arcs)


_register("simp_Q", "S_Q", "Q", "Digra", simp_q, _simp_q_mor)
_register("emb_Q", "N_Q", "Digra", "Q", emb_q, _emb_q_mor)


# ------------------------------------------------------- hypergraphs/set systems

@_memo
def simp_h(g: SetSystemHypergraph) -> SetSystem:
    return SetSystem(g.vertices, FinSet(g.eps[e] for e in g.edges))


def _simp_h_mor(m: Morphism) -> Morphism:
    return _hom("ssys", simp_h(m.domain), simp_h(m.codomain), m.vertex.mapping)


@_memo
def emb_h(s: SetSystem) -> SetSystemHypergraph:
    return SetSystemHypergraph(s.vertices, s.edges, {a: a for a in s.edges})


def _emb_h_mor(m: Morphism) -> Morphism:
    f = m.vertex.mapping
    edges = {a: subset_image(f, a) for a in m.domain.edges}
    return _hom("strict-ssh", emb_h(m.domain), emb_h(m.codomain), f, edges)


_register("simp_H", "S_H", "H", "SSys", simp_h, _simp_h_mor)
_register("emb_H", "N_H", "SSys", "H", emb_h, _emb_h_mor)


# ------------------------------------------------------------------ deletion

def _traditional(a: Subset) -> bool:
    return 1 <= len(a) <= 2


@_memo
def del_m(g: SetSystemHypergraph) -> SetSystemHypergraph:
    kept = g.edges.filter(lambda e: _traditional(g.eps[e]))
    return SetSystemHypergraph(g.vertices, kept, {e: g.eps[e] for e in kept})


def _del_m_mor(m: Morphism) -> Morphism:
    dom, cod = del_m(m.domain), del_m(m.codomain)
    return _hom("strict-ssh", dom, cod, m.vertex.mapping, {e: m.edge.mapping[e] for e in dom.edges})


@_memo
def del_s(s: SetSystem) -> SetSystem:
    return SetSystem(s.vertices, s.edges.filter(_traditional))


def _del_s_mor(m: Morphism) -> Morphism:
    return _hom("ssys", del_s(m.domain), del_s(m.codomain), m.vertex.mapping)


def _same(x):
    return x


def _weaken(m: Morphism) -> Morphism:
    return m.with_kind("weak-ssh")


_register("del_M", "del", "H", "M", del_m, _del_m_mor)
_register("del_S", "del_S", "SSys", "Gra", del_s, _del_s_mor)
_register("incl_M", "N_H", "M", "H", _same, _same)
_register("incl_Gra", "N_SSys", "Gra", "SSys", _same, _same)
_register("incl_SD", "N_Digra", "SDigra", "Digra", _same, _same)
_register("incl_weak", "N_H+", "H", "H+", _same, _weaken)


# ------------------------------------------------------- underlying multigraph

@_memo
def under_u(q: Quiver) -> SetSystemHypergraph:
    return SetSystemHypergraph(q.vertices, q.arcs, {e: Subset((q.src[e], q.tgt[e])) for e in q.arcs})


def _under_u_mor(m: Morphism) -> Morphism:
    return _hom("strict-ssh", under_u(m.domain), under_u(m.codomain), m.vertex.mapping, m.edge.mapping)


@_memo
def assoc_d(g: SetSystemHypergraph) -> Quiver:
    arcs = []
    for e in g.edges:
        ends = g.eps[e].items
        if len(ends) == 1:
            arcs.append(Triple(e, ends[0], ends[0]))
        elif len(ends) == 2:
            v, w = ends
            arcs += [Triple(e, v, w), Triple(e, w, v)]
    arcs = FinSet(arcs)
    return Quiver(g.vertices, arcs, {a: a.second for a in arcs}, {a: a.third for a in arcs})


def _assoc_d_mor(m: Morphism) -> Morphism:
    f, g = m.vertex.mapping, m.edge.mapping
    dom = assoc_d(m.domain)
    arcs = {a: Triple(g[a.first], f[a.second], f[a.third]) for a in dom.arcs}
    return _hom("quiver", dom, assoc_d(m.codomain), f, arcs)


_register("under_U", "U", "Q", "M", under_u, _under_u_mor)
_register("assoc_D", "D", "M", "Q", assoc_d, _assoc_d_mor)


# ---------------------------------------------------------- symmetric digraphs

@_memo
def sym_closure(d: Digraph) -> Digraph:
    return Digraph(d.vertices, d.arcs.union(Pair(a.second, a.first) for a in d.arcs))


@_memo
def sym_interior(d: Digraph) -> Digraph:
    return Digraph(d.vertices, d.arcs.filter(lambda a: Pair(a.second, a.first) in d.arcs))


def _digraph_mor(obj_map):
    def act(m: Morphism) -> Morphism:
        return _hom("digraph", obj_map(m.domain), obj_map(m.codomain), m.vertex.mapping)

    return act


@_memo
def z_gra(g: SetSystem) -> Digraph:
    arcs = []
    for a in g.edges:
        ends = a.items
        arcs += [Pair(v, w) for v in ends for w in ends if len(ends) == 1 or v != w]
    return Digraph(g.vertices, FinSet(arcs))


@_memo
def z_gra_inv(d: Digraph) -> SetSystem:
    return SetSystem(d.vertices, FinSet(Subset((a.first, a.second)) for a in d.arcs))


def _z_gra_inv_mor(m: Morphism) -> Morphism:
    return _hom("ssys", z_gra_inv(m.domain), z_gra_inv(m.codomain), m.vertex.mapping)


_register("sym_closure", "N<>_Digra", "Digra", "SDigra", sym_closure, _digraph_mor(sym_closure))
_register("sym_interior", "N*_Digra", "Digra", "SDigra", sym_interior, _digraph_mor(sym_interior))
_register("z_gra", "Z_Gra", "Gra", "SDigra", z_gra, _digraph_mor(z_gra))
_register("z_gra_inv", "Z_Gra^-1", "SDigra", "Gra", z_gra_inv, _z_gra_inv_mor)


# ---------------------------------------------------------- incidence side

@_memo
def emb_r(s: IncidenceStructure) -> IncidenceHypergraph:
    return IncidenceHypergraph(
        s.vertices, s.edges, s.incidences,
        {p: p.first for p in s.incidences},
        {p: p.second for p in s.incidences},
    )


def _emb_r_mor(m: Morphism) -> Morphism:
    f, g = m.vertex.mapping, m.edge.mapping
    incs = {p: Pair(f[p.first], g[p.second]) for p in m.domain.incidences}
    return _hom("inc-hyp", emb_r(m.domain), emb_r(m.codomain), f, g, incs)


@_memo
def simp_r(h: IncidenceHypergraph) -> IncidenceStructure:
    return IncidenceStructure(h.vertices, h.edges, FinSet(Pair(h.port[i], h.attach[i]) for i in h.incidences))


def _simp_r_mor(m: Morphism) -> Morphism:
    return _hom("istr", simp_r(m.domain), simp_r(m.codomain), m.vertex.mapping, m.edge.mapping)


@_memo
def weak_of(g: SetSystemHypergraph) -> IncidenceStructure:
    return IncidenceStructure(g.vertices, g.edges, FinSet(Pair(v, e) for e in g.edges for v in g.eps[e]))


def _weak_of_mor(m: Morphism) -> Morphism:
    return _hom("istr", weak_of(m.domain), weak_of(m.codomain), m.vertex.mapping, m.edge.mapping)


@_memo
def weak_from(s: IncidenceStructure) -> SetSystemHypergraph:
    ends: dict = {e: [] for e in s.edges}
    for p in s.incidences:
        ends[p.second].append(p.first)
    return SetSystemHypergraph(s.vertices, s.edges, {e: Subset(vs) for e, vs in ends.items()})


def _weak_from_mor(m: Morphism) -> Morphism:
    return _hom("weak-ssh", weak_from(m.domain), weak_from(m.codomain), m.vertex.mapping, m.edge.mapping)


_register("emb_R", "N_R", "IStr", "R", emb_r, _emb_r_mor)
_register("simp_R", "S_R", "R", "IStr", simp_r, _simp_r_mor)
_register("weak_of", "C", "H+", "IStr", weak_of, _weak_of_mor)
_register("weak_from", "D", "IStr", "H+", weak_from, _weak_from_mor)


# ---------------------------------------------------- simplicial replacement

@_memo
def simplicial_repl(g: SetSystemHypergraph, cap: int | None = None) -> SetSystemHypergraph:
    cap = DEFAULT_CAPS.power_set if cap is None else cap
    eps = {}
    for e in g.edges:
        if len(g.eps[e]) > cap:
            raise SizeError(f"edge {e!r} has {len(g.eps[e])} endpoints, power-set cap is {cap}")
        for a in subsets(g.eps[e]):
            eps[Pair(e, a)] = a
    return SetSystemHypergraph(g.vertices, FinSet(eps), eps)


def _simplicial_repl_mor(m: Morphism) -> Morphism:
    f, g = m.vertex.mapping, m.edge.mapping
    dom = simplicial_repl(m.domain)
    edges = {p: Pair(g[p.first], subset_image(f, p.second)) for p in dom.edges}
    return _hom("strict-ssh", dom, simplicial_repl(m.codomain), f, edges)


_register("simplicial_repl", "N*_H+", "H+", "H", simplicial_repl, _simplicial_repl_mor)


# ------------------------------------------------------- classical operations

@_memo
def gamma(g: SetSystemHypergraph) -> SetSystem:
    edges = set()
    for e in g.edges:
        ends = g.eps[e].items
        edges.update(Subset((v, w)) for v in ends for w in ends if v != w)
    return SetSystem(g.vertices, FinSet(edges))


@_memo
def linegraph(g: SetSystemHypergraph) -> SetSystem:
    edges = [
        Subset((e, f))
        for e in g.edges
        for f in g.edges
        if e != f and g.eps[e].members & g.eps[f].members
    ]
    return SetSystem(g.edges, FinSet(edges))


@_memo
def classical_dual(g: SetSystemHypergraph) -> SetSystemHypergraph:
    ends: dict = {v: [] for v in g.vertices}
    for e in g.edges:
        for v in g.eps[e]:
            ends[v].append(e)
    return SetSystemHypergraph(g.edges, g.vertices, {v: Subset(es) for v, es in ends.items()})


_register("gamma", "Gamma", "H", "Gra", gamma)
_register("linegraph", "L", "H", "Gra", linegraph)
_register("classical_dual", "d", "H", "H", classical_dual)


# ------------------------------------------------------ clique replacement

@_memo
def assoc_inc(q: Quiver) -> IncidenceHypergraph:
    carrier, _, _ = tagged_coproduct(q.arcs, q.arcs)
    port = copair(carrier, q.src_map(), q.tgt_map())
    ident = FinFunction.identity(q.arcs)
    attach = copair(carrier, ident, ident)
    return IncidenceHypergraph(q.vertices, q.arcs, carrier, port.mapping, attach.mapping)


def _assoc_inc_mor(m: Morphism) -> Morphism:
    dom, cod = assoc_inc(m.domain), assoc_inc(m.codomain)
    _, inj0, inj1 = tagged_coproduct(m.codomain.arcs, m.codomain.arcs)
    incs = copair(dom.incidences, inj0.after(m.edge), inj1.after(m.edge))
    return _hom("inc-hyp", dom, cod, m.vertex.mapping, m.edge.mapping, incs.mapping)


@_memo
def clique_quiver(h: IncidenceHypergraph) -> Quiver:
    arcs, p0, p1 = kernel_pair(h.attach_map())
    return Quiver(
        h.vertices, arcs,
        {a: h.port[p0.mapping[a]] for a in arcs},
        {a: h.port[p1.mapping[a]] for a in arcs},
    )


def _clique_quiver_mor(m: Morphism) -> Morphism:
    dom, cod = clique_quiver(m.domain), clique_quiver(m.codomain)
    _, p0, p1 = kernel_pair(m.domain.attach_map())
    arcs = pullback_mediator(m.codomain.attach_map(), m.incidence.after(p0), m.incidence.after(p1))
    return _hom("quiver", dom, cod, m.vertex.mapping, arcs.mapping)


@_memo
def simplicial_closure(g: SetSystem, cap: int | None = None) -> SetSystemHypergraph:
    cap = DEFAULT_CAPS.power_set if cap is None else cap
    if len(g.vertices) > cap:
        raise SizeError(f"{len(g.vertices)} vertices exceed the power-set cap {cap}")
    cliques = [
        a for a in subsets(g.vertices)
        if all(Subset((v, w)) in g.edges for v in a for w in a)
    ]
    return SetSystemHypergraph(g.vertices, FinSet(cliques), {a: a for a in cliques})


def _simplicial_closure_mor(m: Morphism) -> Morphism:
    f = m.vertex.mapping
    dom = simplicial_closure(m.domain)
    edges = {a: subset_image(f, a) for a in dom.edges}
    return _hom("strict-ssh", dom, simplicial_closure(m.codomain), f, edges)


_register("assoc_inc", "U^", "Q", "R", assoc_inc, _assoc_inc_mor)
_register("clique_quiver", "R->", "R", "Q", clique_quiver, _clique_quiver_mor)
_register("simplicial_closure", "R*", "Gra", "H", simplicial_closure, _simplicial_closure_mor)


# ---------------------------------------------------------------- duality

@_memo
def dual_sharp(h: IncidenceHypergraph) -> IncidenceHypergraph:
    return IncidenceHypergraph(h.edges, h.vertices, h.incidences, h.attach, h.port)


def _dual_sharp_mor(m: Morphism) -> Morphism:
    return _hom(
        "inc-hyp", dual_sharp(m.domain), dual_sharp(m.codomain),
        m.edge.mapping, m.vertex.mapping, m.incidence.mapping,
    )


_register("dual_sharp", "#", "R", "R", dual_sharp, _dual_sharp_mor)


# --------------------------------------------------------------- composites

def composite(*names: str) -> Functor:
    """The functor running ``names`` left to right (first name applied first)."""
    stages = [FUNCTORS[n] for n in names]
    for a, b in zip(stages, stages[1:]):
        if not fits(a.target, b.source):
            raise KindError(f"{a.name} lands in {a.target} but {b.name} needs {b.source}")

    def on_object(x):
        for s in stages:
            x = s(x)
        return x

    on_morphism = None
    if all(s.acts_on_morphisms for s in stages):
        on_morphism = on_object
    return Functor(
        "∘".join(reversed(names)), "∘".join(s.symbol for s in reversed(stages)),
        stages[0].source, stages[-1].target, on_object, on_morphism,
    )


def _register_composite(name, symbol, *names):
    c = composite(*names)
    _register(name, symbol, c.source, c.target, c.on_object, c.on_morphism)


_register_composite("simp_M", "S_M", "incl_M", "simp_H", "del_S")
_register_composite("emb_M", "N_M", "incl_Gra", "emb_H", "del_M")
_register_composite("clique_factored", "R", "incl_weak", "simplicial_repl", "del_M", "simp_M")
_register_composite("dual_top", "T", "emb_R", "dual_sharp", "simp_R")
_register_composite("dual_ddag", "++", "weak_of", "dual_top", "weak_from")
_register_composite(
    "intersect_factored", "Lambda",
    "incl_weak", "dual_ddag", "simplicial_repl", "del_M", "simp_M",
)

simp_m = FUNCTORS["simp_M"]
emb_m = FUNCTORS["emb_M"]
clique_factored = FUNCTORS["clique_factored"]
dual_top = FUNCTORS["dual_top"]
dual_ddag = FUNCTORS["dual_ddag"]
intersect_factored = FUNCTORS["intersect_factored"]

MORPHISM_FUNCTORS = [n for n, f in FUNCTORS.items() if f.acts_on_morphisms]
