"""Units, counits and factorization formulas of the adjunctions.

For an adjunction ``F ⊣ G`` presented by a unit ``η``, ``factor(x, y, m)``
takes ``m: x -> G(y)`` to the unique ``F(x) -> y`` with ``G(m̂) ∘ η_x = m``.
For one presented by a counit ``ε``, it takes ``m: F(x) -> y`` to the
unique ``x -> G(y)`` with ``ε_y ∘ F(m̂) = m``.

All factor formulas here are written out directly; the law harness checks
them against the triangle equation and against exhaustive hom enumeration.
"""
from __future__ import annotations

from .atoms import Pair, Triple
from .finset import copair, kernel_pair, pullback_mediator, subset_image, tagged_coproduct
from .functors import (
    assoc_d,
    assoc_inc,
    clique_quiver,
    del_m,
    del_s,
    emb_m,
    emb_q,
    emb_r,
    emb_h,
    simp_h,
    simp_m,
    simp_q,
    simp_r,
    simplicial_closure,
    simplicial_repl,
    sym_closure,
    sym_interior,
    under_u,
    FUNCTORS,
)
from .structures import Morphism


def _hom(kind, dom, cod, vertex, edge=None, incidence=None) -> Morphism:
    return Morphism.build(kind, dom, cod, vertex, edge, incidence)


def _ident(s):
    return {x: x for x in s}


# ---------------------------------------------------------------- units

def unit_simp_q(q):
    """``q -> N_Q S_Q(q)``: each arc goes to its endpoint pair."""
    return _hom("quiver", q, emb_q(simp_q(q)), _ident(q.vertices), {e: Pair(q.src[e], q.tgt[e]) for e in q.arcs})


def unit_simp_h(g):
    """``g -> N_H S_H(g)``: each edge goes to its endpoint set."""
    return _hom("strict-ssh", g, emb_h(simp_h(g)), _ident(g.vertices), dict(g.eps))


def unit_simp_m(g):
    """The multigraph simplification unit μ."""
    return _hom("strict-ssh", g, emb_m(simp_m(g)), _ident(g.vertices), dict(g.eps))


def unit_sym_closure(d):
    """κ: the arc inclusion into the symmetric closure."""
    return _hom("digraph", d, sym_closure(d), _ident(d.vertices))


def unit_simp_r(h):
    return _hom(
        "inc-hyp", h, emb_r(simp_r(h)), _ident(h.vertices), _ident(h.edges),
        {i: Pair(h.port[i], h.attach[i]) for i in h.incidences},
    )


# ---------------------------------------------------------------- counits

def counit_del_m(g):
    """Edge inclusion ``del(g) -> g``."""
    sub = del_m(g)
    return _hom("strict-ssh", sub, g, _ident(g.vertices), _ident(sub.edges))


def counit_del_s(s):
    """``j_s``: the inclusion ``del_S(s) -> s``."""
    return _hom("ssys", del_s(s), s, _ident(s.vertices))


def counit_assoc_d(g):
    """``U D(g) -> g``: the arc ``(e, v, w)`` goes back to ``e``."""
    q = assoc_d(g)
    return _hom("strict-ssh", under_u(q), g, _ident(g.vertices), {a: a.first for a in q.arcs})


def counit_sym_interior(d):
    """ν: the arc inclusion of the symmetric interior."""
    return _hom("digraph", sym_interior(d), d, _ident(d.vertices))


def counit_simplicial_repl(g):
    """θ: ``(e, A) -> e`` as a weak homomorphism."""
    rep = simplicial_repl(g)
    return _hom("weak-ssh", rep, g, _ident(g.vertices), {p: p.first for p in rep.edges})


def counit_clique_quiver(h):
    """θ̌: ``U^ R->(h) -> h``."""
    q = clique_quiver(h)
    top = assoc_inc(q)
    _, p0, p1 = kernel_pair(h.attach_map())
    incs = copair(top.incidences, p0, p1)
    edges = {a: h.attach[p0.mapping[a]] for a in q.arcs}
    return _hom("inc-hyp", top, h, _ident(h.vertices), edges, incs.mapping)


def counit_simplicial_closure(g):
    """θ: ``R R*(g) -> g``, identity on vertices."""
    top = FUNCTORS["clique_factored"](simplicial_closure(g))
    return _hom("ssys", top, g, _ident(g.vertices))


# ---------------------------------------------------------------- factors

def factor_simp_q(x, y, m):
    return _hom("digraph", simp_q(x), y, m.vertex.mapping)


def factor_simp_h(x, y, m):
    return _hom("ssys", simp_h(x), y, m.vertex.mapping)


def factor_simp_m(x, y, m):
    return _hom("ssys", simp_m(x), y, m.vertex.mapping)


def factor_sym_closure(x, y, m):
    return _hom("digraph", sym_closure(x), y, m.vertex.mapping)


def factor_simp_r(x, y, m):
    return _hom("istr", simp_r(x), y, m.vertex.mapping, m.edge.mapping)


def factor_del_m(x, y, m):
    """Corestriction of ``m: x -> y`` to ``del(y)``."""
    return _hom("strict-ssh", x, del_m(y), m.vertex.mapping, m.edge.mapping)


def factor_del_s(x, y, m):
    return _hom("ssys", x, del_s(y), m.vertex.mapping)


def factor_assoc_d(x, y, m):
    """Arc ``e`` goes to ``(m(e), m(σe), m(τe))``."""
    f, g = m.vertex.mapping, m.edge.mapping
    arcs = {e: Triple(g[e], f[x.src[e]], f[x.tgt[e]]) for e in x.arcs}
    return _hom("quiver", x, assoc_d(y), f, arcs)


def factor_sym_interior(x, y, m):
    return _hom("digraph", x, sym_interior(y), m.vertex.mapping)


def factor_simplicial_repl(x, y, m):
    """Edge ``e`` goes to ``(m(e), image of its endpoints)``."""
    f, g = m.vertex.mapping, m.edge.mapping
    edges = {e: Pair(g[e], subset_image(f, x.eps[e])) for e in x.edges}
    return _hom("strict-ssh", x, simplicial_repl(y), f, edges)


def factor_clique_quiver(x, y, m):
    """Arc ``e`` goes to the pair of images of its two tagged incidences."""
    _, inj0, inj1 = tagged_coproduct(x.arcs, x.arcs)
    arcs = pullback_mediator(y.attach_map(), m.incidence.after(inj0), m.incidence.after(inj1))
    return _hom("quiver", x, clique_quiver(y), m.vertex.mapping, arcs.mapping)


def factor_simplicial_closure(x, y, m):
    """Edge ``e`` goes to the image of its endpoint set."""
    f = m.vertex.mapping
    edges = {e: subset_image(f, x.eps[e]) for e in x.edges}
    return _hom("strict-ssh", x, simplicial_closure(y), f, edges)
