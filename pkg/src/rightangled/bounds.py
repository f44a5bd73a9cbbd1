"""Exact lower-bound cascades for ideal and finite vertex counts.

All arithmetic is on Python ints and ``Fraction``; nothing here touches
floating point.  The cascades run upward from dimension 5 (ideal vertices)
and 7 (finite vertices):

    a_min(n)  = 1 + nu(n-1)
    v_inf(n)  = ceil(a_min(n) * v_inf(n-1) / (2(n-1)))
    nu(n)     = max(5 - 2n + 2 nu(n-1), a_min(n) + v_inf(n))     ("max" rule)
    v_fin(n)  = ceil(a_min(n) * v_fin(n-1) / n)
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Optional

NU_RULES = ("max", "linear")
MAX_DIM = 12


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise ValueError(f"ceil_div needs a positive divisor, got {b}")
    if a < 0:
        raise ValueError(f"ceil_div needs a non-negative dividend, got {a}")
    return -(-a // b)


def nk_bound(n: int, k: int, l: int) -> Fraction:
    """Upper bound on the average number of l-faces in a k-face (strict)."""
    if n < 3:
        raise ValueError(f"bound defined for n >= 3, got n={n}")
    lo, hi = n // 2, (n + 1) // 2
    if not 0 <= l < k <= hi:
        raise ValueError(f"need 0 <= l < k <= ceil(n/2)={hi}, got k={k}, l={l}")
    return comb(n - l, n - k) * Fraction(comb(lo, l) + comb(hi, l), comb(lo, k) + comb(hi, k))


@dataclass(frozen=True)
class BoundsConfig:
    nu_bases: dict = field(default_factory=lambda: {3: 9, 4: 15, 5: 26})
    v5_base: int = 3
    vfin7_base: int = 4
    nu_update_rule: str = "max"
    max_dim: int = MAX_DIM

    def __post_init__(self):
        if not 5 <= self.max_dim <= MAX_DIM:
            raise ValueError(f"max_dim must lie in 5..{MAX_DIM}, got {self.max_dim}")
        if self.nu_update_rule not in NU_RULES:
            raise ValueError(f"nu_update_rule must be one of {NU_RULES}, got {self.nu_update_rule!r}")
        for key in (4, 5):
            if key not in self.nu_bases:
                raise ValueError(f"nu_bases must define nu_{key}")
        if any(v <= 0 for v in self.nu_bases.values()) or self.v5_base <= 0 or self.vfin7_base <= 0:
            raise ValueError("all bases must be positive")


@dataclass(frozen=True)
class DimensionRow:
    n: int
    nu: int
    a_min: int
    v_inf_min: int
    v_fin_min: Optional[int] = None


@dataclass(frozen=True)
class CascadeTable:
    rows: tuple[DimensionRow, ...]
    config: BoundsConfig

    def __post_init__(self):
        ns = [r.n for r in self.rows]
        if ns != list(range(5, 5 + len(ns))):
            raise ValueError(f"rows must be contiguous from n=5, got {ns}")

    def row(self, n: int) -> DimensionRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise IndexError(f"dimension {n} outside table range 5..{self.rows[-1].n}")

    def column(self, name: str) -> dict[int, int]:
        return {r.n: getattr(r, name) for r in self.rows if getattr(r, name) is not None}


def _next_nu(rule: str, n: int, prev_nu: int, a_min: int, v: int) -> int:
    linear = 5 - 2 * n + 2 * prev_nu
    if rule == "linear":
        return linear
    return max(linear, a_min + v)


def cascade_ideal(config: BoundsConfig | None = None) -> CascadeTable:
    config = config or BoundsConfig()
    nu, v = config.nu_bases[5], config.v5_base
    rows = [DimensionRow(5, nu, 1 + config.nu_bases[4], v)]
    for n in range(6, config.max_dim + 1):
        a_min = 1 + nu
        v = ceil_div(a_min * v, 2 * (n - 1))
        nu = _next_nu(config.nu_update_rule, n, nu, a_min, v)
        rows.append(DimensionRow(n, nu, a_min, v))
    return CascadeTable(tuple(rows), config)


def cascade_finite(config: BoundsConfig | None, ideal_table: CascadeTable) -> CascadeTable:
    """Fill ``v_fin_min`` for n >= 7 using the facet minima of ``ideal_table``."""
    config = config or ideal_table.config
    if config.max_dim < 7:
        raise ValueError(f"finite-vertex cascade starts at n=7; max_dim={config.max_dim}")
    if ideal_table.rows[-1].n < config.max_dim:
        raise ValueError("ideal table does not reach max_dim")
    rows = []
    vf = None
    for r in ideal_table.rows:
        if r.n > config.max_dim:
            break
        if r.n == 7:
            vf = config.vfin7_base
        elif r.n > 7:
            vf = ceil_div(r.a_min * vf, r.n)
        rows.append(replace(r, v_fin_min=vf))
    return CascadeTable(tuple(rows), config)


def default_table() -> CascadeTable:
    cfg = BoundsConfig()
    return cascade_finite(cfg, cascade_ideal(cfg))


def min_table_lookup(table: CascadeTable, n: int) -> tuple[int, int, Optional[int]]:
    r = table.row(n)
    return r.a_min, r.v_inf_min, r.v_fin_min


# Published values, kept as decimal strings.
PUBLISHED_VALUES = {
    "v_inf_min": {
        5: "3", 6: "9", 7: "35", 8: "205", 9: "3690", 10: "815695",
        11: "33430239957", 12: "50800381957715834354",
    },
    "a_min": {
        6: "27", 7: "46", 8: "82", 9: "288", 10: "3979", 11: "819675", 12: "33431059633",
    },
    "nu": {
        5: "26", 6: "45", 7: "81", 8: "287", 9: "3978", 10: "819674", 11: "33431059632",
    },
    "v_fin_min": {
        7: "4", 8: "41", 9: "1312", 10: "522045", 11: "38900657762", 12: "108374184117028860113",
    },
}


@dataclass(frozen=True)
class Discrepancy:
    n: int
    quantity: str
    published: int
    computed: Optional[int]

    def __str__(self):
        got = "missing" if self.computed is None else str(self.computed)
        return f"n={self.n} {self.quantity}: published {self.published}, computed {got}"


def verify_against_published(table_ideal: CascadeTable, table_finite: CascadeTable | None = None) -> list[Discrepancy]:
    """Compare computed rows against the published values.

    The computed value is authoritative; each mismatch is reported with both
    numbers.  Rows beyond the table's range count as missing.  Without a
    finite table the finite-vertex column is not compared.
    """
    diffs = []
    for quantity, published in PUBLISHED_VALUES.items():
        table = table_finite if quantity == "v_fin_min" else table_ideal
        if table is None:
            continue
        computed = table.column(quantity)
        for n, text in published.items():
            want = int(text)
            got = computed.get(n)
            if got != want:
                diffs.append(Discrepancy(n, quantity, want, got))
    diffs.sort(key=lambda d: (d.n, d.quantity))
    return diffs
