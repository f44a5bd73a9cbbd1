"""Necessary conditions for realizability as a right-angled hyperbolic polytope.

Every check here can only exclude an input.  An empty report means the
input is not excluded by the implemented criteria; it certifies nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bounds as _bounds
from .lattice import CuspPairingError, avg_incidence, count_subfaces, enumerate_faces, face_vector
from .polytope import CombinatorialPolytope

NONAKA_MIN_FACES = 12


@dataclass(frozen=True)
class NonakaCheck:
    facet_set: frozenset[int]  # empty when the polytope itself is 3-dimensional
    a2: int
    v_inf: int

    @property
    def applicable(self) -> bool:
        return self.v_inf <= 1

    @property
    def passed(self) -> bool:
        return not self.applicable or self.a2 >= NONAKA_MIN_FACES


@dataclass(frozen=True)
class NKCheck:
    k: int
    l: int
    average: Fraction
    bound: Fraction

    @property
    def passed(self) -> bool:
        return self.average < self.bound


@dataclass(frozen=True)
class Finding:
    rule: str
    detail: str

    def __str__(self):
        return f"[{self.rule}] {self.detail}"


def nonaka_checks(P: CombinatorialPolytope) -> list[NonakaCheck]:
    if P.dim < 3:
        raise ValueError("Nonaka's bound concerns 3-faces; need n >= 3")
    if P.dim == 3:
        return [NonakaCheck(frozenset(), face_vector(P).a[2], P.v_inf)]
    out = []
    for F in enumerate_faces(P, 3):
        ideal = sum(1 for vid in F.vertex_ids if P.vertex(vid).is_ideal)
        out.append(NonakaCheck(F.facet_set, count_subfaces(P, F, 2), ideal))
    return out


def nonaka_screen(P: CombinatorialPolytope) -> list[NonakaCheck]:
    """3-faces with at most one ideal vertex and fewer than 12 two-faces."""
    return [c for c in nonaka_checks(P) if not c.passed]


def nk_pairs(n: int, include_l0: bool = False) -> list[tuple[int, int]]:
    top = min((n + 1) // 2, n - 1)
    lo = 0 if include_l0 else 1
    return [(k, l) for k in range(1, top + 1) for l in range(lo, k)]


def nk_checks(P: CombinatorialPolytope, include_l0: bool = False) -> list[NKCheck]:
    out = []
    for k, l in nk_pairs(P.dim, include_l0):
        out.append(NKCheck(k, l, avg_incidence(P, k, l), _bounds.nk_bound(P.dim, k, l)))
    return out


def nk_screen(P: CombinatorialPolytope, include_l0: bool = False) -> list[tuple[int, int]]:
    # (1, 0) is off by default: its bound is exactly 2, which every edge attains
    return [(c.k, c.l) for c in nk_checks(P, include_l0) if not c.passed]


# rule identifiers
RULE_DIMENSION = "finite-volume-dimension"
RULE_COMPACT = "compact-dimension"
RULE_IDEAL_ONLY = "ideal-only-dimension"
RULE_PARITY = "finite-vertex-parity-3d"
RULE_NONAKA = "nonaka"
RULE_NK = "nikulin-khovanskii"
RULE_FACETS = "facet-count-minimum"
RULE_V_INF = "ideal-vertex-minimum"
RULE_V_FIN = "finite-vertex-minimum"
RULE_FACE_RULES_SKIPPED = "face-rules-skipped"


def _nu(table: _bounds.CascadeTable, m: int):
    if m in table.config.nu_bases:
        return table.config.nu_bases[m]
    try:
        return table.row(m).nu
    except IndexError:
        return None


def realizability_screen(P: CombinatorialPolytope, table: _bounds.CascadeTable | None = None) -> list[Finding]:
    table = table if table is not None else _bounds.default_table()
    n = P.dim
    v_fin, v_inf = P.v_fin, P.v_inf
    out: list[Finding] = []

    if n >= 13:
        out.append(Finding(RULE_DIMENSION, f"n={n}: finite-volume right-angled polytopes do not exist for n >= 13"))
    if n >= 5 and v_inf == 0:
        out.append(Finding(RULE_COMPACT, f"n={n} with no ideal vertex: compact right-angled polytopes do not exist for n >= 5"))
    if n >= 7 and v_fin == 0:
        out.append(Finding(RULE_IDEAL_ONLY, f"n={n} with no finite vertex: ideal right-angled polytopes do not exist for n >= 7"))
    if n == 3 and v_fin % 2:
        out.append(Finding(RULE_PARITY, f"v_fin={v_fin} is odd; 2E = 3 v_fin + 4 v_inf forces it even"))

    try:
        for c in nonaka_screen(P) if n >= 3 else []:
            where = "the polytope" if not c.facet_set else f"3-face {sorted(c.facet_set)}"
            out.append(Finding(RULE_NONAKA, f"{where}: v_inf={c.v_inf} <= 1 but a_2={c.a2} < {NONAKA_MIN_FACES}"))
        for c in nk_checks(P) if n >= 3 else []:
            if not c.passed:
                out.append(Finding(RULE_NK, f"a_{c.k}^{c.l} = {c.average} >= bound {c.bound}"))
    except CuspPairingError as exc:
        out.append(Finding(RULE_FACE_RULES_SKIPPED, f"face-based rules not evaluated: {exc}"))

    nu_prev = _nu(table, n - 1)
    if nu_prev is not None and P.facet_count < 1 + nu_prev:
        out.append(Finding(RULE_FACETS, f"{P.facet_count} facets < 1 + nu_{n - 1} = {1 + nu_prev}"))
    try:
        row = table.row(n)
    except IndexError:
        row = None
    if row is not None:
        if v_inf < row.v_inf_min:
            out.append(Finding(RULE_V_INF, f"v_inf={v_inf} < lower bound {row.v_inf_min} for n={n}"))
        if row.v_fin_min is not None and v_fin < row.v_fin_min:
            out.append(Finding(RULE_V_FIN, f"v_fin={v_fin} < lower bound {row.v_fin_min} for n={n}"))
    return out
