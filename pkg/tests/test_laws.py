"""Law harness tests.

Each check family is run on real inputs, and again on a deliberately
broken formula to make sure the check can fail.
"""
import dataclasses
import random

import pytest

from graphcats.errors import KindError, UnsupportedOperation
from graphcats.fixtures import G3, GL, H2, PHI_GAMMA, WEAK_SRC, WEAK_TGT
from graphcats.functors import FUNCTORS, MORPHISM_FUNCTORS
from graphcats.laws import oracles
from graphcats.laws.adjunctions import ADJUNCTIONS, get
from graphcats.laws.checks import (
    ACTIONS,
    COUNTEREXAMPLES,
    EQUALITIES,
    ISOMORPHISMS,
    CheckReport,
    check_action_agreement,
    check_adjunction,
    check_equality,
    check_functoriality,
    check_hom_bijection,
    check_involution,
    check_lax_equivalence,
    check_natural_iso,
    check_universal_property,
    counterexample_counts,
    lax_agrees,
    pick_morphism,
    run_action,
    run_counterexample,
    run_equality,
    run_involution,
    run_natural_iso,
    sample_case,
)
from graphcats.laws.generators import Bounds, InstanceGenerator, check_generated
from graphcats.laws.suite import SUITES, law_names, run_suite
from graphcats.structures import Digraph, Morphism, SetSystem, check_morphism


# ---------------------------------------------------------------- generators

@pytest.mark.parametrize("cat", ["Q", "Digra", "SDigra", "H", "H+", "M", "SSys", "Gra", "R", "IStr"])
def test_generator_output_is_in_category(cat):
    gen = InstanceGenerator(cat, seed=2)
    for _ in range(40):
        assert check_generated(cat, gen.object()) == []
        m1, m2 = gen.composable_pair()
        assert m1.codomain == m2.domain
        assert check_generated(cat, m1) == [] and check_generated(cat, m2) == []


def test_generator_is_seeded():
    a = [InstanceGenerator("H", seed=4).object() for _ in range(2)]
    assert a[0] == a[1]
    b = InstanceGenerator("H", seed=4)
    c = InstanceGenerator("H", seed=5)
    assert [b.object() for _ in range(5)] != [c.object() for _ in range(5)]


def test_generator_respects_bounds():
    bounds = Bounds(vertices=2, edges=1, arity=2, incidences=2)
    gen = InstanceGenerator("H", bounds, seed=0)
    for x in gen.objects(50):
        assert len(x.vertices) <= 2 and len(x.edges) <= 1
        assert all(len(x.eps[e]) <= 2 for e in x.edges)


def test_unknown_category():
    with pytest.raises(KindError):
        InstanceGenerator("Top")


# ---------------------------------------------------------------- functoriality

@pytest.mark.parametrize("name", MORPHISM_FUNCTORS)
def test_functoriality(name):
    r = check_functoriality(name, cases=20, seed=1)
    assert r.passed, r.line()


@pytest.mark.parametrize("name", ["gamma", "linegraph", "classical_dual"])
def test_functoriality_refuses_object_only_maps(name):
    with pytest.raises(UnsupportedOperation):
        check_functoriality(name)


def test_functoriality_catches_naive_gamma(monkeypatch):
    # gamma with "the same vertex map" as morphism action is not a functor
    def naive(m):
        g = FUNCTORS["gamma"]
        return Morphism("ssys", g(m.domain), g(m.codomain), m.vertex)

    fake = dataclasses.replace(FUNCTORS["gamma"], on_morphism=naive)
    monkeypatch.setitem(FUNCTORS, "gamma", fake)
    r = check_functoriality("gamma", cases=200, seed=0)
    assert not r.passed
    assert "not a morphism" in r.detail


def test_functoriality_catches_broken_composition(monkeypatch):
    orig = FUNCTORS["simp_H"]

    def skewed(m):
        out = orig.on_morphism(m)
        return out if m.domain == m.codomain else _swap_two(out)

    monkeypatch.setitem(FUNCTORS, "simp_H", dataclasses.replace(orig, on_morphism=skewed))
    r = check_functoriality("simp_H", cases=200, seed=0)
    assert not r.passed


def _swap_two(m):
    """Swap the images of two vertices when that keeps a valid morphism."""
    verts = list(m.domain.vertices)
    table = dict(m.vertex.mapping)
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if table[a] != table[b]:
                swapped = dict(table)
                swapped[a], swapped[b] = table[b], table[a]
                cand = Morphism.build(m.kind, m.domain, m.codomain, swapped)
                if check_morphism(cand):
                    return cand
    return m


# ---------------------------------------------------------------- adjunctions

def test_twelve_adjunctions():
    assert len(ADJUNCTIONS) == 12
    for adj in ADJUNCTIONS.values():
        assert adj.style in ("unit", "counit")
        assert adj.F.source == adj.x_category
        assert adj.G.source == adj.y_category
    with pytest.raises(KindError):
        get("nope")


@pytest.mark.parametrize("name", sorted(ADJUNCTIONS))
def test_universal_property_small(name):
    rng = random.Random(name)
    adj = ADJUNCTIONS[name]
    small = Bounds(vertices=3, edges=2, arity=2, incidences=3)
    gx = InstanceGenerator(adj.x_category, small, 1)
    gy = InstanceGenerator(adj.y_category, small, 2)
    for _ in range(5):
        x, y = sample_case(name, rng, gx, gy)
        m = pick_morphism(name, rng, x, y)
        r = check_universal_property(name, x, y, m)
        assert r.passed, r.line()
        assert r.counts[0] == 1
        b = check_hom_bijection(name, x, y)
        assert b.passed, b.line()


def test_universal_property_for_mod_two_map():
    # del_M(H2) keeps the 2-edge, so φ corestricts
    r = check_universal_property("inclM⊣delM", FUNCTORS["del_M"](G3), H2,
                                 _restrict_to_del(G3, H2))
    assert r.passed


def _restrict_to_del(g, h):
    d = FUNCTORS["del_M"](g)
    return Morphism.build("strict-ssh", d, h, {v: PHI_GAMMA.vertex[v] for v in d.vertices}, {})


def test_universal_property_rejects_wrong_shape():
    with pytest.raises(KindError):
        check_universal_property("simpH⊣embH", G3, SetSystem.build([0], []), PHI_GAMMA)


def test_adjunction_check_catches_broken_factor(monkeypatch):
    name = "simpH⊣embH"
    adj = ADJUNCTIONS[name]

    def collapse(x, y, m):
        good = adj.factor(x, y, m)
        verts = list(y.vertices)
        table = {v: verts[0] for v in good.domain.vertices}
        cand = Morphism.build("ssys", good.domain, y, table)
        return cand if check_morphism(cand) else good

    monkeypatch.setitem(ADJUNCTIONS, name, dataclasses.replace(adj, factor=collapse))
    r = check_adjunction(name, cases=50, pairs=10, seed=0)
    assert not r.passed
    assert "triangle" in r.detail or "transpose" in r.detail


def test_adjunction_check_catches_broken_counit(monkeypatch):
    name = "inclWeak⊣simplicialRepl"
    adj = ADJUNCTIONS[name]

    def theta_to_first_edge(g):
        good = adj.natural(g)
        first = next(iter(g.edges), None)
        if first is None:
            return good
        table = {p: first for p in good.domain.edges}
        return Morphism.build("weak-ssh", good.domain, g, good.vertex.mapping, table)

    monkeypatch.setitem(ADJUNCTIONS, name, dataclasses.replace(adj, natural=theta_to_first_edge))
    r = check_adjunction(name, cases=50, pairs=0, seed=0)
    assert not r.passed


def test_hom_bijection_catches_non_injective_factor(monkeypatch):
    name = "symClosure⊣inclSD"
    adj = ADJUNCTIONS[name]
    x = Digraph.build(["a", "b"], [])
    y = Digraph.build(["p", "q"], [])

    def const(x_, y_, m):
        p = next(iter(y_.vertices))
        return Morphism.build("digraph", FUNCTORS["sym_closure"](x_), y_, {v: p for v in x_.vertices})

    monkeypatch.setitem(ADJUNCTIONS, name, dataclasses.replace(adj, factor=const))
    r = check_hom_bijection(name, x, y)
    assert not r.passed and "injective" in r.detail


def test_adjunction_report_detail():
    r = check_adjunction("simpQ⊣embQ", cases=10, pairs=10, seed=3)
    assert r.passed and r.cases == 20
    assert "nonempty hom-sets" in r.detail


# ---------------------------------------------------------------- equalities

@pytest.mark.parametrize("law", sorted(EQUALITIES))
def test_equalities_hold(law):
    r = run_equality(law, cases=20, seed=2)
    assert r.passed, r.line()


def test_equality_catches_wrong_side(monkeypatch):
    cat, ls, rs = EQUALITIES["EQ3"]
    monkeypatch.setitem(EQUALITIES, "EQ3", (cat, ls, ("simp_Q", "sym_interior")))
    assert not run_equality("EQ3", cases=50, seed=0).passed


def test_equality_requires_category():
    with pytest.raises(KindError):
        check_equality("EQ1", G3)
    with pytest.raises(KindError):
        check_equality("EQ9", G3)


# ---------------------------------------------------------------- natural isomorphisms

@pytest.mark.parametrize("law", sorted(ISOMORPHISMS))
def test_natural_isos_hold(law):
    r = run_natural_iso(law, cases=20, seed=2)
    assert r.passed, r.line()


def test_natural_iso_on_an_object():
    assert check_natural_iso("ISO3", G3).passed


def test_natural_iso_catches_bad_witness(monkeypatch):
    cat, ls, rs, build = ISOMORPHISMS["ISO1"]

    def shuffled(x, a, b):
        verts = list(a.vertices)
        if len(verts) < 2:
            return build(x, a, b)
        table = {v: verts[(k + 1) % len(verts)] for k, v in enumerate(verts)}
        return Morphism.build("strict-ssh", a, b, table, {e: e for e in a.edges})

    monkeypatch.setitem(ISOMORPHISMS, "ISO1", (cat, ls, rs, shuffled))
    assert not run_natural_iso("ISO1", cases=50, seed=0).passed


# ---------------------------------------------------------------- actions and involutions

@pytest.mark.parametrize("law", sorted(ACTIONS))
def test_actions_hold(law):
    r = run_action(law, cases=30, seed=2)
    assert r.passed, r.line()


def test_action_catches_missing_singletons(monkeypatch):
    cat, fname, _, mor = ACTIONS["ACT-R"]
    wrong = lambda g: oracles.drop_singletons(oracles.clique_graph(g))
    monkeypatch.setitem(ACTIONS, "ACT-R", (cat, fname, wrong, mor))
    assert not check_action_agreement("ACT-R", G3).passed


def test_action_on_gl():
    assert check_action_agreement("ACT-LAMBDA", GL).passed


@pytest.mark.parametrize("law", ["INV-SHARP", "INV-TOP", "INV-DDAG"])
def test_involutions_hold(law):
    r = run_involution(law, cases=30, seed=2)
    assert r.passed, r.line()


def test_involution_catches_non_involution(monkeypatch):
    # drop empty edges after transposing; the true transpose keeps them
    orig = FUNCTORS["dual_ddag"]
    broken = lambda g: FUNCTORS["del_M"].on_object(orig.on_object(g))
    monkeypatch.setitem(FUNCTORS, "dual_ddag", dataclasses.replace(orig, on_object=broken))
    assert not check_involution("INV-DDAG", G3).passed


# ---------------------------------------------------------------- lax comma

def test_lax_examples():
    v = {next(iter(WEAK_SRC.vertices)): next(iter(WEAK_TGT.vertices))}
    e = {next(iter(WEAK_SRC.edges)): next(iter(WEAK_TGT.edges))}
    assert lax_agrees(WEAK_SRC, WEAK_TGT, v, e) == (True, True)
    back = {next(iter(WEAK_TGT.edges)): next(iter(WEAK_SRC.edges))}
    assert lax_agrees(WEAK_TGT, WEAK_SRC, {k: x for x, k in v.items()}, back) == (False, False)


def test_lax_equivalence():
    r = check_lax_equivalence(cases=60, seed=1)
    assert r.passed, r.line()
    assert "weak-only" in r.detail


# ---------------------------------------------------------------- counterexamples

@pytest.mark.parametrize("name,counts", [
    ("CX-GAMMA", (6, 0)),
    ("CX-LINE", (2, 0)),
    ("CX-DUAL", (8, 0)),
    ("CX-WEAK", (1, 0)),
])
def test_counterexamples(name, counts):
    assert counterexample_counts(name) == counts
    assert counterexample_counts(name, "scan") == counts
    r = run_counterexample(name.lower())
    assert r.passed and r.counts == counts


def test_counterexample_fails_when_nothing_breaks(monkeypatch):
    monkeypatch.setitem(COUNTEREXAMPLES, "CX-TRIVIAL", ("G3", "G3", "gamma", "ssys"))
    r = run_counterexample("CX-TRIVIAL")
    assert not r.passed and r.counts[1] > 0


def test_unknown_counterexample():
    with pytest.raises(KindError):
        run_counterexample("CX-NONE")


# ---------------------------------------------------------------- suites and reports

def test_suite_names():
    assert set(SUITES) == {"counterexamples", "functors", "adjunctions", "compatibility",
                           "hexagon", "alt-r", "actions", "involutions", "lax"}
    names = law_names()
    assert len(names) == len(set(names))
    assert "ADJ(simpQ⊣embQ)" in names and "FUNC(dual_sharp)" in names and "LAX" in names
    with pytest.raises(KindError):
        run_suite("everything")


def test_run_suite_sorted():
    reports = run_suite("counterexamples")
    assert [r.law for r in reports] == sorted(r.law for r in reports)
    assert all(reports)


def test_report_rendering():
    r = CheckReport("X", False, 3, "broken", instance=G3, counts=(1, 0))
    assert r.line().startswith("FAIL X")
    assert "counts=(1, 0)" in r.line()
    doc = r.to_json()
    assert doc["passed"] is False and doc["instance"]["kind"] == "ssh"
    assert not r
