"""Executable checks, one family per kind of law.

Every check returns a :class:`CheckReport` instead of raising when the law
fails; exceptions are kept for misuse (wrong category, missing morphism
action, caps).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from ..atoms import Pair, Subset, Triple
from ..errors import GraphCatError, KindError, SizeError, UnsupportedOperation
from ..finset import Caps, FinFunction, lax_square_holds
from ..functors import CATEGORIES, FUNCTORS, composite
from ..homsearch import HomQuery, count_homs, enumerate_homs, iter_homs
from ..structures import (
    Morphism,
    SetSystemHypergraph,
    canonical_encode,
    check_morphism,
    compose,
    identity,
    is_isomorphism,
    morphism_to_json,
    object_to_json,
)
from . import oracles
from .adjunctions import ADJUNCTIONS, Adjunction
from .generators import DEFAULT_BOUNDS, Bounds, InstanceGenerator, random_function_table

# derived objects (simplicial replacement, closures, kernel pairs) outgrow
# the input caps quickly, so hom-sets the harness enumerates get more room
HARNESS_CAPS = Caps(power_set=12, vertices=16, edges=160, incidences=320, product=4096)


@dataclass
class CheckReport:
    law: str
    passed: bool
    cases: int = 0
    detail: str = ""
    instance: Any = None
    counts: tuple | None = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        bits = [f"{status} {self.law}", f"cases={self.cases}"]
        if self.counts is not None:
            bits.append("counts=(" + ", ".join(map(str, self.counts)) + ")")
        if self.detail:
            bits.append(self.detail)
        return "  ".join(bits)

    def to_json(self) -> dict:
        out = {"law": self.law, "passed": self.passed, "cases": self.cases, "detail": self.detail}
        if self.counts is not None:
            out["counts"] = list(self.counts)
        if self.instance is not None:
            out["instance"] = _describe(self.instance)
        return out


def _describe(x):
    if isinstance(x, Morphism):
        return morphism_to_json(x)
    if isinstance(x, tuple):
        return [_describe(y) for y in x]
    try:
        return object_to_json(x)
    except Exception:
        return repr(x)


def same(a, b) -> bool:
    """On-the-nose equality by canonical encoding."""
    return canonical_encode(a) == canonical_encode(b)


def _fail(law, cases, detail, instance=None, **kw) -> CheckReport:
    return CheckReport(law, False, cases, detail, instance, **kw)


# ------------------------------------------------------------- functoriality

def check_functoriality(name: str, gen: InstanceGenerator | None = None, cases: int = 100, seed: int = 0) -> CheckReport:
    f = FUNCTORS[name]
    law = f"FUNC({name})"
    if not f.acts_on_morphisms:
        raise UnsupportedOperation(f"{name} has no morphism action")
    if gen is None:
        gen = InstanceGenerator(f.source, seed=seed)
    if gen.category != f.source:
        raise KindError(f"{name} needs instances of {f.source}, generator makes {gen.category}")
    src_kind = CATEGORIES[f.source].morphism_kind
    target = CATEGORIES[f.target]
    tgt_kind = target.morphism_kind
    for k in range(cases):
        m1, m2 = gen.composable_pair()
        x = m1.domain
        for m in (m1, m2):
            if not target.contains(f(m)):
                return _fail(law, k + 1, f"image is not a morphism of {f.target}", m)
        if not same(f(identity(x, src_kind)), identity(f(x), tgt_kind)):
            return _fail(law, k + 1, "identity not preserved", x)
        if not same(f(compose(m2, m1)), compose(f(m2), f(m1))):
            return _fail(law, k + 1, "composition not preserved", (m1, m2))
    return CheckReport(law, True, cases)


# --------------------------------------------------------------- adjunctions

def _hom_query(kind, a, b, mode="enumerate") -> HomQuery:
    return HomQuery(kind, a, b, mode, HARNESS_CAPS)


def _natural(adj: Adjunction, x, y) -> Morphism:
    return adj.natural(x) if adj.style == "unit" else adj.natural(y)


def _triangle(adj: Adjunction, nat: Morphism, mh: Morphism) -> Morphism:
    """What ``mh`` transposes back to, given the (co)unit component ``nat``."""
    if adj.style == "unit":
        return compose(adj.G.fmap(mh), nat)
    return compose(nat, adj.F.fmap(mh))


def _same_maps(a: Morphism, b: Morphism) -> bool:
    """Equal kind and component tables; endpoints are assumed equal."""
    if a.kind != b.kind:
        return False
    ca, cb = a.components(), b.components()
    return ca.keys() == cb.keys() and all(ca[n].mapping == cb[n].mapping for n in ca)


def _same_obj(a, b) -> bool:
    return a is b or same(a, b)


def _map_key(m: Morphism) -> tuple:
    return tuple((n, tuple(sorted(c.mapping.items()))) for n, c in m.components().items())


def _input_shape(adj: Adjunction, x, y) -> tuple:
    if adj.style == "unit":
        return x, adj.G(y)
    return adj.F(x), y


def _output_shape(adj: Adjunction, x, y) -> tuple:
    if adj.style == "unit":
        return adj.F(x), y
    return x, adj.G(y)


def check_universal_property(name: str, x, y, m: Morphism, unique: bool = True) -> CheckReport:
    """Factor ``m`` through the (co)unit and check existence, equation, uniqueness.

    ``x`` lives in the left adjoint's source and ``y`` in the right
    adjoint's; ``m`` is ``x -> G y`` for unit-style entries and ``F x -> y``
    for counit-style ones.
    """
    adj = ADJUNCTIONS[name]
    law = f"ADJ({name})"
    src, tgt = _input_shape(adj, x, y)
    if m.kind != adj.input_kind() or not same(m.domain, src) or not same(m.codomain, tgt):
        raise KindError(f"{law}: morphism does not have the shape {adj.input_side()}")
    if not check_morphism(m):
        raise KindError(f"{law}: input is not a valid morphism")
    try:
        mh = adj.factor(x, y, m)
    except GraphCatError as e:
        return _fail(law, 1, f"factor formula failed: {e}", m)
    out_src, out_tgt = _output_shape(adj, x, y)
    if mh.kind != adj.output_kind() or not same(mh.domain, out_src) or not same(mh.codomain, out_tgt):
        return _fail(law, 1, "factor has the wrong shape", mh)
    if not check_morphism(mh):
        return _fail(law, 1, "factor is not a valid morphism", mh)
    nat = _natural(adj, x, y)
    if not same(_triangle(adj, nat, mh), m):
        return _fail(law, 1, "triangle equation fails", (m, mh))
    if not unique:
        return CheckReport(law, True, 1)
    hits = 0
    total = 0
    for k in iter_homs(_hom_query(adj.output_kind(), out_src, out_tgt)):
        total += 1
        if _same_maps(_triangle(adj, nat, k), m):
            hits += 1
    if hits != 1:
        return _fail(law, 1, f"{hits} morphisms satisfy the equation", m, counts=(hits, total))
    return CheckReport(law, True, 1, counts=(hits, total))


def check_hom_bijection(name: str, x, y) -> CheckReport:
    """Both hom-sets enumerated; the factor map must be a bijection between them."""
    adj = ADJUNCTIONS[name]
    law = f"ADJ({name})"
    src, tgt = _input_shape(adj, x, y)
    out_src, out_tgt = _output_shape(adj, x, y)
    n_out = count_homs(_hom_query(adj.output_kind(), out_src, out_tgt, "count"))
    seen = set()
    n_in = 0
    for m in iter_homs(_hom_query(adj.input_kind(), src, tgt)):
        n_in += 1
        mh = adj.factor(x, y, m)
        if mh.kind != adj.output_kind() or not check_morphism(mh) or not _same_obj(mh.codomain, out_tgt):
            return _fail(law, 1, "transpose is not a morphism of the other hom-set", (x, y, m))
        seen.add(_map_key(mh))
    if len(seen) != n_in:
        return _fail(law, 1, "transpose is not injective", (x, y), counts=(n_in, n_out))
    if n_in != n_out:
        return _fail(law, 1, "hom-set sizes differ", (x, y), counts=(n_in, n_out))
    return CheckReport(law, True, 1, counts=(n_in, n_out))


def sample_case(name: str, rng: random.Random, gx: InstanceGenerator, gy: InstanceGenerator):
    """Objects ``x, y`` with a nonempty input hom-set.

    ``y`` is the codomain of a random morphism out of ``F x``, so ``F x -> y``
    (and hence ``x -> G y``) is never empty.
    """
    adj = ADJUNCTIONS[name]
    x = gx.object()
    return x, gy.morphism_from(adj.F(x)).codomain


def pick_morphism(name: str, rng: random.Random, x, y) -> Morphism:
    """Uniform choice from the enumerated hom-set ``factor`` reads.

    Drawing from the enumeration keeps the sample independent of the
    (co)unit and factor formula under test.
    """
    adj = ADJUNCTIONS[name]
    src, tgt = _input_shape(adj, x, y)
    return rng.choice(enumerate_homs(_hom_query(adj.input_kind(), src, tgt)))


def sample_object_pair(name: str, rng: random.Random, gx: InstanceGenerator, gy: InstanceGenerator):
    adj = ADJUNCTIONS[name]
    x = gx.object()
    if rng.random() < 0.5:
        return x, gy.object()
    return x, gy.morphism_from(adj.F(x)).codomain


def _hom_sizes(adj: Adjunction, x, y) -> tuple[int, int]:
    src, tgt = _input_shape(adj, x, y)
    out_src, out_tgt = _output_shape(adj, x, y)
    return (
        count_homs(_hom_query(adj.input_kind(), src, tgt, "count")),
        count_homs(_hom_query(adj.output_kind(), out_src, out_tgt, "count")),
    )


def _generators(adj: Adjunction, seed: int, bounds: Bounds):
    return InstanceGenerator(adj.x_category, bounds, seed), InstanceGenerator(adj.y_category, bounds, seed + 7919)


# largest hom-set the adjunction suite enumerates element by element; bigger
# samples are redrawn (and the redraws reported) rather than truncated
ENUMERATION_BUDGET = 20000


def check_adjunction(
    name: str,
    cases: int = 100,
    pairs: int = 50,
    seed: int = 0,
    bounds: Bounds = DEFAULT_BOUNDS,
    budget: int = ENUMERATION_BUDGET,
) -> CheckReport:
    """The universal property on ``cases`` morphisms and the hom bijection on ``pairs`` object pairs."""
    adj = ADJUNCTIONS[name]
    law = f"ADJ({name})"
    rng = random.Random(f"{name}:{seed}")
    gx, gy = _generators(adj, seed, bounds)
    redrawn = 0

    def draw(sampler):
        nonlocal redrawn
        while True:
            x, y = sampler()
            if max(_hom_sizes(adj, x, y)) <= budget:
                return x, y
            redrawn += 1
            if redrawn > 50 * (cases + pairs):
                raise SizeError(f"{law}: generator keeps exceeding the enumeration budget")

    done = 0
    for _ in range(cases):
        x, y = draw(lambda: sample_case(name, rng, gx, gy))
        m = pick_morphism(name, rng, x, y)
        done += 1
        r = check_universal_property(name, x, y, m)
        if not r:
            r.cases = done
            return r
    nonempty = 0
    for _ in range(pairs):
        x, y = draw(lambda: sample_object_pair(name, rng, gx, gy))
        done += 1
        r = check_hom_bijection(name, x, y)
        if not r:
            r.cases = done
            return r
        nonempty += r.counts[0] > 0
    detail = f"nonempty hom-sets {nonempty}/{pairs}, redrawn {redrawn}"
    return CheckReport(law, True, done, detail)


# ---------------------------------------------------------------- equalities

EQUALITIES = {
    "EQ1": ("M", ("simp_M", "incl_Gra"), ("incl_M", "simp_H")),
    "EQ2": ("Gra", ("incl_Gra", "emb_H"), ("emb_M", "incl_M")),
    "EQ3": ("Q", ("under_U", "simp_M", "z_gra"), ("simp_Q", "sym_closure")),
    "EQ4": ("M", ("simp_M", "z_gra", "incl_SD"), ("assoc_D", "simp_Q")),
    "HEX": ("Q", ("assoc_inc", "simp_R"), ("under_U", "incl_M", "incl_weak", "weak_of")),
    "ALT-R": (
        "H",
        ("clique_factored",),
        ("incl_weak", "weak_of", "emb_R", "clique_quiver", "simp_Q", "sym_closure", "z_gra_inv"),
    ),
}


def _sides(stages_l, stages_r):
    return composite(*stages_l), composite(*stages_r)


def check_equality(law: str, x) -> CheckReport:
    """Both composites on ``x`` (object or morphism), compared byte for byte."""
    if law not in EQUALITIES:
        raise KindError(f"{law} is not an equality law")
    cat, ls, rs = EQUALITIES[law]
    if not CATEGORIES[cat].contains(x):
        raise KindError(f"{law} is stated on {cat}; input is not in it")
    lhs, rhs = _sides(ls, rs)
    a, b = lhs(x), rhs(x)
    if not same(a, b):
        return _fail(law, 1, "the two sides differ", (x, a, b))
    return CheckReport(law, True, 1)


def run_equality(law: str, cases: int = 100, seed: int = 0, bounds: Bounds = DEFAULT_BOUNDS) -> CheckReport:
    cat = EQUALITIES[law][0]
    gen = InstanceGenerator(cat, bounds, seed)
    for k in range(cases):
        for z in (gen.object(), gen.morphism()):
            r = check_equality(law, z)
            if not r:
                r.cases = k + 1
                return r
    return CheckReport(law, True, cases, "objects and morphisms")


# --------------------------------------------------------- natural isomorphisms

def _iso1_witness(x, a, b):
    return Morphism.build("strict-ssh", a, b, {v: v for v in a.vertices}, {e: e for e in a.edges})


def _iso2_witness(x, a, b):
    return Morphism.build("quiver", a, b, {v: v for v in a.vertices}, {t: Pair(t.second, t.third) for t in a.arcs})


def _iso3_witness(x, a, b):
    arcs = {}
    for p in a.arcs:
        (v, e), (w, _) = p.first, p.second
        arcs[p] = Triple(Pair(e, Subset([v, w])), v, w)
    return Morphism.build("quiver", a, b, {v: v for v in a.vertices}, arcs)


ISOMORPHISMS = {
    "ISO1": ("SSys", ("del_S", "emb_M"), ("emb_H", "del_M"), _iso1_witness),
    "ISO2": ("Gra", ("emb_M", "assoc_D"), ("z_gra", "incl_SD", "emb_Q"), _iso2_witness),
    "ISO3": ("H+", ("weak_of", "emb_R", "clique_quiver"), ("simplicial_repl", "del_M", "assoc_D"), _iso3_witness),
}


def iso_witness(law: str, x) -> Morphism:
    cat, ls, rs, build = ISOMORPHISMS[law]
    lhs, rhs = _sides(ls, rs)
    return build(x, lhs(x), rhs(x))


def check_natural_iso(law: str, m) -> CheckReport:
    """Witness is an isomorphism at both ends of ``m`` and the square commutes.

    An object may be passed instead of a morphism; then only the witness
    at that object is checked.
    """
    if law not in ISOMORPHISMS:
        raise KindError(f"{law} is not a natural isomorphism law")
    cat, ls, rs, build = ISOMORPHISMS[law]
    if not CATEGORIES[cat].contains(m):
        raise KindError(f"{law} is stated on {cat}; input is not in it")
    lhs, rhs = _sides(ls, rs)
    ends = [m.domain, m.codomain] if isinstance(m, Morphism) else [m]
    wit = []
    for x in ends:
        try:
            w = build(x, lhs(x), rhs(x))
        except GraphCatError as e:
            return _fail(law, 1, f"witness cannot be built: {e}", x)
        if not is_isomorphism(w):
            return _fail(law, 1, "witness is not an isomorphism", w)
        wit.append(w)
    if isinstance(m, Morphism):
        wx, wy = wit
        if not same(compose(wy, lhs(m)), compose(rhs(m), wx)):
            return _fail(law, 1, "naturality square does not commute", m)
    return CheckReport(law, True, 1)


def run_natural_iso(law: str, cases: int = 100, seed: int = 0, bounds: Bounds = DEFAULT_BOUNDS) -> CheckReport:
    gen = InstanceGenerator(ISOMORPHISMS[law][0], bounds, seed)
    for k in range(cases):
        r = check_natural_iso(law, gen.morphism())
        if not r:
            r.cases = k + 1
            return r
    return CheckReport(law, True, cases, "witness bijective and natural")


# ------------------------------------------------------------ action formulas

ACTIONS = {
    "ACT-R": ("H", "clique_factored", oracles.clique_graph, oracles.clique_graph_mor),
    "ACT-LAMBDA": ("H", "intersect_factored", oracles.intersection_graph, oracles.intersection_graph_mor),
    "ACT-TOP": ("IStr", "dual_top", oracles.transpose, oracles.transpose_mor),
    "ACT-DDAG": ("H+", "dual_ddag", oracles.dual_hypergraph, oracles.dual_hypergraph_mor),
}

# object-only classical maps and the functor they approximate
CLASSICAL = {"ACT-R": ("gamma", "clique_factored"), "ACT-LAMBDA": ("linegraph", "intersect_factored")}


def check_action_agreement(law: str, x) -> CheckReport:
    """Composite functor against its one-step formula, on an object or morphism.

    For R and Λ the classical clique graph and line graph are also compared
    with the factored functor minus its 1-element edges.
    """
    if law not in ACTIONS:
        raise KindError(f"{law} is not an action law")
    cat, fname, obj_formula, mor_formula = ACTIONS[law]
    f = FUNCTORS[fname]
    expected = mor_formula(x) if isinstance(x, Morphism) else obj_formula(x)
    got = f(x)
    if not same(got, expected):
        return _fail(law, 1, "composite and direct formula differ", (x, got, expected))
    if law in CLASSICAL:
        objs = [x.domain, x.codomain] if isinstance(x, Morphism) else [x]
        classical, factored = (FUNCTORS[n] for n in CLASSICAL[law])
        for z in objs:
            if not same(classical(z), oracles.drop_singletons(factored(z))):
                return _fail(law, 1, f"{classical.name} is not {factored.name} minus 1-edges", z)
    return CheckReport(law, True, 1)


def run_action(law: str, cases: int = 200, seed: int = 0, bounds: Bounds = DEFAULT_BOUNDS) -> CheckReport:
    gen = InstanceGenerator(ACTIONS[law][0], bounds, seed)
    for k in range(cases):
        for z in (gen.object(), gen.morphism()):
            r = check_action_agreement(law, z)
            if not r:
                r.cases = k + 1
                return r
    return CheckReport(law, True, cases, "objects and morphisms")


# ---------------------------------------------------------------- involutions

INVOLUTIONS = {"INV-SHARP": ("R", "dual_sharp"), "INV-TOP": ("IStr", "dual_top"), "INV-DDAG": ("H+", "dual_ddag")}


def check_involution(law: str, x) -> CheckReport:
    cat, fname = INVOLUTIONS[law]
    f = FUNCTORS[fname]
    if not same(f(f(x)), x):
        return _fail(law, 1, f"{fname} applied twice is not the identity", x)
    return CheckReport(law, True, 1)


def run_involution(law: str, cases: int = 200, seed: int = 0, bounds: Bounds = DEFAULT_BOUNDS) -> CheckReport:
    gen = InstanceGenerator(INVOLUTIONS[law][0], bounds, seed)
    for k in range(cases):
        for z in (gen.object(), gen.morphism()):
            r = check_involution(law, z)
            if not r:
                r.cases = k + 1
                return r
    return CheckReport(law, True, cases, "objects and morphisms")


# ----------------------------------------------------------------- lax comma

def lax_agrees(g: SetSystemHypergraph, h: SetSystemHypergraph, vmap: dict, emap: dict) -> tuple[bool, bool]:
    """``(lax square holds, weak law holds)`` for a candidate pair of maps."""
    f = FinFunction(g.vertices, h.vertices, vmap)
    e = FinFunction(g.edges, h.edges, emap)
    lax = lax_square_holds(e, f, g.eps_map(), h.eps_map())
    weak = check_morphism(Morphism("weak-ssh", g, h, f, e))
    return lax, weak


def check_lax_equivalence(gen: InstanceGenerator | None = None, cases: int = 200, seed: int = 0) -> CheckReport:
    """Lax squares are exactly weak homomorphisms; C and D are mutually inverse."""
    law = "LAX"
    if gen is None:
        gen = InstanceGenerator("H+", seed=seed)
    rng = random.Random(f"lax:{seed}")
    tally = {"lax": 0, "strict": 0, "non": 0}
    done = 0
    while done < cases:
        if rng.random() < 0.5:
            m = gen.morphism()
            g, h = m.domain, m.codomain
            vmap, emap = dict(m.vertex.mapping), dict(m.edge.mapping)
            # perturb sometimes so near-misses are covered too
            if rng.random() < 0.3 and g.vertices:
                vmap[rng.choice(list(g.vertices))] = rng.choice(list(h.vertices))
        else:
            g, h = gen.object(), gen.object()
            vmap = random_function_table(rng, g.vertices, h.vertices)
            emap = random_function_table(rng, g.edges, h.edges)
            if vmap is None or emap is None:
                continue
        done += 1
        lax, weak = lax_agrees(g, h, vmap, emap)
        if lax != weak:
            return _fail(law, done, f"lax={lax} but weak={weak}", (g, h))
        if weak:
            strict = check_morphism(Morphism.build("strict-ssh", g, h, vmap, emap))
            tally["strict" if strict else "lax"] += 1
        else:
            tally["non"] += 1
    C, D = FUNCTORS["weak_of"], FUNCTORS["weak_from"]
    istr = InstanceGenerator("IStr", gen.bounds, gen.seed)
    for k in range(cases):
        for z in (gen.object(), gen.morphism()):
            if not same(D(C(z)), z):
                return _fail(law, cases + k + 1, "D∘C is not the identity", z)
        for z in (istr.object(), istr.morphism()):
            if not same(C(D(z)), z):
                return _fail(law, cases + k + 1, "C∘D is not the identity", z)
    detail = f"strict {tally['strict']}, weak-only {tally['lax']}, non-morphisms {tally['non']}"
    return CheckReport(law, True, cases, detail)


# ------------------------------------------------------------- counterexamples

COUNTEREXAMPLES = {
    "CX-GAMMA": ("G3", "H2", "gamma", "ssys"),
    "CX-LINE": ("GL", "HL", "linegraph", "ssys"),
    "CX-DUAL": ("Gd", "Hd", "classical_dual", "strict-ssh"),
    "CX-WEAK": ("WEAK_SRC", "WEAK_TGT", None, None),
}


def counterexample_counts(name: str, method: str = "search") -> tuple[int, int]:
    """The two hom-set sizes the counterexample is about.

    ``method="scan"`` uses the cartesian-product oracle instead of the
    backtracking search.
    """
    from ..fixtures import FIXTURES

    a_name, b_name, fname, kind2 = COUNTEREXAMPLES[name]
    a, b = FIXTURES[a_name], FIXTURES[b_name]
    if method == "scan":
        counter = oracles.full_scan_count
    else:
        counter = lambda k, s, t: count_homs(HomQuery(k, s, t, "count"))
    if fname is None:
        return counter("weak-ssh", a, b), counter("strict-ssh", a, b)
    f = FUNCTORS[fname]
    return counter("strict-ssh", a, b), counter(kind2, f(a), f(b))


def run_counterexample(name: str) -> CheckReport:
    key = name.upper()
    if key not in COUNTEREXAMPLES:
        raise KindError(f"unknown counterexample {name!r}")
    counts = counterexample_counts(key)
    scanned = counterexample_counts(key, "scan")
    if counts != scanned:
        return _fail(key, 1, f"search and full scan disagree: {counts} vs {scanned}", counts=counts)
    ok = counts[0] >= 1 and counts[1] == 0
    if ok:
        detail = "source hom-set nonempty, image hom-set empty"
        if key == "CX-WEAK":
            detail = "weak hom exists, no strict hom"
        return CheckReport(key, True, 1, detail, counts=counts)
    return _fail(key, 1, "expected a nonempty source hom-set and an empty image hom-set", counts=counts)
