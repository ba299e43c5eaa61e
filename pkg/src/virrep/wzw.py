"""Simple Lie algebra data and Sugawara central charges c(G_k).

The loop-group net at level k extends the Virasoro net with

    c(G_k) = dim(G) k / (k + h_vee),      r <= c(G_k) <= dim(G),

h_vee the dual Coxeter number, r the rank.  The classification scan flags
each catalog entry by exact regime membership: apart from the rank-one
level-one case, every c(G_k) lands in (1+D) u [2, oo), and the c <= 25 slice
is where the maximal-non-compactness statement applies.  Flags are theorem
metadata; nothing beyond exact rational arithmetic happens here.

The dim / h_vee table is static; the test suite re-derives every entry from
scratch by root-system enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .discrete import classify_central_charge
from .scalars import format_rational

SERIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

_EXCEPTIONAL = {
    # series: (rank, dim, dual Coxeter number)
    "E6": (6, 78, 12),
    "E7": (7, 133, 18),
    "E8": (8, 248, 30),
    "F4": (4, 52, 9),
    "G2": (2, 14, 4),
}


@dataclass(frozen=True)
class SimpleLieAlgebra:
    series: str
    rank: int
    dim: int
    dual_coxeter: int

    def name(self) -> str:
        return f"{self.series}{self.rank}" if self.series in "ABCD" else self.series

    def to_json(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "dim": self.dim,
            "dual_coxeter": self.dual_coxeter,
        }


def simple_lie_data(series: str, rank: int) -> SimpleLieAlgebra:
    """Dimension and dual Coxeter number for a legal (series, rank)."""
    if series == "A":
        if rank < 1:
            raise ValueError("A series needs rank >= 1")
        return SimpleLieAlgebra("A", rank, rank * (rank + 2), rank + 1)
    if series == "B":
        if rank < 2:
            raise ValueError("B series needs rank >= 2")
        return SimpleLieAlgebra("B", rank, rank * (2 * rank + 1), 2 * rank - 1)
    if series == "C":
        if rank < 2:
            raise ValueError("C series needs rank >= 2")
        return SimpleLieAlgebra("C", rank, rank * (2 * rank + 1), rank + 1)
    if series == "D":
        if rank < 3:
            raise ValueError("D series needs rank >= 3")
        return SimpleLieAlgebra("D", rank, rank * (2 * rank - 1), 2 * rank - 2)
    if series in _EXCEPTIONAL:
        fixed_rank, dim, hv = _EXCEPTIONAL[series]
        if rank != fixed_rank:
            raise ValueError(f"{series} has rank {fixed_rank}, got {rank}")
        return SimpleLieAlgebra(series, rank, dim, hv)
    raise ValueError(f"unknown series {series!r}; expected one of {SERIES}")


def su(n: int) -> SimpleLieAlgebra:
    """The rank n-1 unitary-series algebra (n >= 2)."""
    if n < 2:
        raise ValueError("su(n) needs n >= 2")
    return simple_lie_data("A", n - 1)


def wzw_central_charge(g: SimpleLieAlgebra, k: int) -> Fraction:
    """Sugawara value dim(G) k / (k + h_vee) at positive integer level."""
    if k < 1:
        raise ValueError("level k must be a positive integer")
    return Fraction(g.dim * k, k + g.dual_coxeter)


def su_central_charge(n: int, k: int) -> Fraction:
    """Dedicated k(N^2-1)/(N+k) path for the unitary series (cross-check)."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    return Fraction(k * (n * n - 1), n + k)


def full_catalog(max_rank: int, max_level: int) -> list[tuple[SimpleLieAlgebra, int]]:
    """Every legal (algebra, level) with rank <= max_rank, level <= max_level."""
    algebras: list[SimpleLieAlgebra] = []
    for r in range(1, max_rank + 1):
        algebras.append(simple_lie_data("A", r))
    for r in range(2, max_rank + 1):
        algebras.append(simple_lie_data("B", r))
        algebras.append(simple_lie_data("C", r))
    for r in range(3, max_rank + 1):
        algebras.append(simple_lie_data("D", r))
    for series, (rank, _, _) in _EXCEPTIONAL.items():
        if rank <= max_rank:
            algebras.append(simple_lie_data(series, rank))
    return [(g, k) for g in algebras for k in range(1, max_level + 1)]


def scan_noncompact(catalog: list[tuple[SimpleLieAlgebra, int]]) -> dict:
    """Classify c(G_k) for each catalog entry.

    Per entry: the exact central charge, the rank bound r <= c <= dim, the
    regime membership c in (1+D) u [2, oo) (which fails only for the
    rank-one level-one entry), and the c <= 25 slice where the
    maximal-non-compactness statement applies.  Regime flags are metadata
    citing the corresponding classification theorems.
    """
    rows = []
    outside = []
    for g, k in catalog:
        c = wzw_central_charge(g, k)
        regime = classify_central_charge(c)
        in_lemma_regime = regime.in_D_plus_1 or regime.in_geq2
        row = {
            "series": g.series,
            "rank": g.rank,
            "level": k,
            "dim": g.dim,
            "dual_coxeter": g.dual_coxeter,
            "c": format_rational(c),
            "rank_bound_ok": g.rank <= c <= g.dim,
            "in_D_plus_1": regime.in_D_plus_1,
            "in_geq2": regime.in_geq2,
            "in_lemma_regime": in_lemma_regime,
            "c_leq_25": c <= 25,
            "max_noncompact_applicable": in_lemma_regime and c <= 25,
        }
        rows.append(row)
        if not in_lemma_regime:
            outside.append({"series": g.series, "rank": g.rank, "level": k})
    return {
        "entries": rows,
        "outside_lemma_regime": outside,
        "all_rank_bounds_hold": all(r["rank_bound_ok"] for r in rows),
        "flags_kind": "theorem-metadata",
    }
