"""Named groups of checks, as run by ``graphcats laws --suite NAME``."""
from __future__ import annotations

from typing import Callable, Optional

from ..errors import KindError
from ..functors import MORPHISM_FUNCTORS
from .adjunctions import ADJUNCTIONS
from .checks import (
    ACTIONS,
    COUNTEREXAMPLES,
    EQUALITIES,
    INVOLUTIONS,
    CheckReport,
    check_adjunction,
    check_functoriality,
    check_lax_equivalence,
    run_action,
    run_counterexample,
    run_equality,
    run_involution,
    run_natural_iso,
)


def _counterexamples(seed, cases):
    return [run_counterexample(c) for c in COUNTEREXAMPLES]


def _adjunctions(seed, cases):
    cases = cases or 100
    return [check_adjunction(a, cases=cases, pairs=max(1, cases // 2), seed=seed) for a in ADJUNCTIONS]


def _compatibility(seed, cases):
    cases = cases or 100
    out = [run_equality(l, cases, seed) for l in ("EQ1", "EQ2", "EQ3", "EQ4")]
    return out + [run_natural_iso(l, cases, seed) for l in ("ISO1", "ISO2")]


def _hexagon(seed, cases):
    cases = cases or 100
    return [run_equality("HEX", cases, seed), run_natural_iso("ISO3", cases, seed)]


def _alt_r(seed, cases):
    return [run_equality("ALT-R", cases or 100, seed)]


def _actions(seed, cases):
    return [run_action(l, cases or 200, seed) for l in ACTIONS]


def _involutions(seed, cases):
    return [run_involution(l, cases or 200, seed) for l in INVOLUTIONS]


def _lax(seed, cases):
    return [check_lax_equivalence(cases=cases or 200, seed=seed)]


def _functors(seed, cases):
    return [check_functoriality(f, cases=cases or 50, seed=seed) for f in MORPHISM_FUNCTORS]


SUITES: dict[str, Callable[[int, Optional[int]], list[CheckReport]]] = {
    "counterexamples": _counterexamples,
    "functors": _functors,
    "adjunctions": _adjunctions,
    "compatibility": _compatibility,
    "hexagon": _hexagon,
    "alt-r": _alt_r,
    "actions": _actions,
    "involutions": _involutions,
    "lax": _lax,
}


def run_suite(name: str, seed: int = 0, cases: int | None = None) -> list[CheckReport]:
    """Run one suite (or ``"all"``); reports come back sorted by law name."""
    if name == "all":
        reports = [r for fn in SUITES.values() for r in fn(seed, cases)]
    elif name in SUITES:
        reports = SUITES[name](seed, cases)
    else:
        raise KindError(f"unknown suite {name!r}; choose from {', '.join(['all', *SUITES])}")
    return sorted(reports, key=lambda r: r.law)


def law_names() -> list[str]:
    """Every law the harness knows, by name."""
    names = [f"FUNC({f})" for f in MORPHISM_FUNCTORS]
    names += [f"ADJ({a})" for a in ADJUNCTIONS]
    names += list(EQUALITIES) + ["ISO1", "ISO2", "ISO3"]
    names += list(INVOLUTIONS) + list(ACTIONS) + ["LAX"] + list(COUNTEREXAMPLES)
    return names
