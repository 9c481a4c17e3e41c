"""The twelve adjunctions, each with its (co)unit and factorization formula.

``style == "unit"``: the registered map is the unit ``η_x: x -> G F x``, and
``factor(x, y, m)`` sends ``m: x -> G y`` to ``F x -> y``.

``style == "counit"``: the registered map is the counit ``ε_y: F G y -> y``,
and ``factor(x, y, m)`` sends ``m: F x -> y`` to ``x -> G y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .. import adjoints as A
from ..errors import KindError
from ..functors import CATEGORIES, FUNCTORS


@dataclass(frozen=True)
class Adjunction:
    name: str
    left: str
    right: str
    style: str
    x_category: str     # source of the left adjoint
    y_category: str     # source of the right adjoint
    natural: Callable   # unit at x, or counit at y
    factor: Callable

    @property
    def F(self):
        return FUNCTORS[self.left]

    @property
    def G(self):
        return FUNCTORS[self.right]

    def input_side(self) -> str:
        """Which hom-set ``factor`` reads: ``"x->Gy"`` or ``"Fx->y"``."""
        return "x->Gy" if self.style == "unit" else "Fx->y"

    def input_kind(self) -> str:
        cat = self.x_category if self.style == "unit" else self.y_category
        return CATEGORIES[cat].morphism_kind

    def output_kind(self) -> str:
        cat = self.y_category if self.style == "unit" else self.x_category
        return CATEGORIES[cat].morphism_kind


ADJUNCTIONS = {
    a.name: a
    for a in [
        Adjunction("simpQ⊣embQ", "simp_Q", "emb_Q", "unit", "Q", "Digra", A.unit_simp_q, A.factor_simp_q),
        Adjunction("simpH⊣embH", "simp_H", "emb_H", "unit", "H", "SSys", A.unit_simp_h, A.factor_simp_h),
        Adjunction("inclM⊣delM", "incl_M", "del_M", "counit", "M", "H", A.counit_del_m, A.factor_del_m),
        Adjunction("inclGra⊣delS", "incl_Gra", "del_S", "counit", "Gra", "SSys", A.counit_del_s, A.factor_del_s),
        Adjunction("U⊣assocD", "under_U", "assoc_D", "counit", "Q", "M", A.counit_assoc_d, A.factor_assoc_d),
        Adjunction("simpM⊣embM", "simp_M", "emb_M", "unit", "M", "Gra", A.unit_simp_m, A.factor_simp_m),
        Adjunction("symClosure⊣inclSD", "sym_closure", "incl_SD", "unit", "Digra", "SDigra", A.unit_sym_closure, A.factor_sym_closure),
        Adjunction("inclSD⊣symInterior", "incl_SD", "sym_interior", "counit", "SDigra", "Digra", A.counit_sym_interior, A.factor_sym_interior),
        Adjunction("simpR⊣embR", "simp_R", "emb_R", "unit", "R", "IStr", A.unit_simp_r, A.factor_simp_r),
        Adjunction("inclWeak⊣simplicialRepl", "incl_weak", "simplicial_repl", "counit", "H", "H+", A.counit_simplicial_repl, A.factor_simplicial_repl),
        Adjunction("assocInc⊣cliqueQuiver", "assoc_inc", "clique_quiver", "counit", "Q", "R", A.counit_clique_quiver, A.factor_clique_quiver),
        Adjunction("cliqueFactored⊣simplicialClosure", "clique_factored", "simplicial_closure", "counit", "H", "Gra", A.counit_simplicial_closure, A.factor_simplicial_closure),
    ]
}


def get(name: str) -> Adjunction:
    try:
        return ADJUNCTIONS[name]
    except KeyError:
        raise KindError(f"unknown adjunction {name!r}") from None
