"""The discrete series of unitary lowest-weight pairs below c = 1, and the
exact central-charge regime classifier.

For m >= 1 the central charge c(m) = 1 - 6/((m+2)(m+3)) climbs from 1/2
towards 1; D denotes the set of these values.  Each c(m) carries the finite
family of lowest weights

    h_{p,q}(m) = (((m+3)p - (m+2)q)^2 - 1) / (4(m+2)(m+3)),

with 1 <= q <= p <= m+1.  A pair (c, h) is allowed (can be unitary) iff
c >= 1 and h >= 0, or it is one of these discrete pairs.

The regime report records exact membership of c in D, 1+D and [2, oo), plus
the derived applicability flags of the known classification theorems for
those regimes.  The flags are metadata citing proved theorems; nothing
operator-algebraic (no statistical dimension, no index) is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .scalars import format_rational


def discrete_c(m: int) -> Fraction:
    """c(m) = 1 - 6/((m+2)(m+3)) for integer m >= 1."""
    if m < 1:
        raise ValueError(f"discrete series index m must be >= 1, got {m}")
    return 1 - Fraction(6, (m + 2) * (m + 3))


def discrete_h(m: int, p: int, q: int) -> Fraction:
    """h_{p,q}(m) for 1 <= q <= p <= m+1."""
    if m < 1:
        raise ValueError(f"discrete series index m must be >= 1, got {m}")
    if not 1 <= q <= p <= m + 1:
        raise ValueError(f"need 1 <= q <= p <= m+1, got (p, q) = ({p}, {q})")
    top = ((m + 3) * p - (m + 2) * q) ** 2 - 1
    return Fraction(top, 4 * (m + 2) * (m + 3))


@dataclass(frozen=True)
class DiscretePair:
    m: int
    p: int
    q: int
    c: Fraction
    h: Fraction

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "c": format_rational(self.c),
            "h": format_rational(self.h),
        }


def enumerate_discrete_pairs(m: int) -> list[DiscretePair]:
    """All (m+1)(m+2)/2 pairs at c(m), in lexicographic (p, q) order."""
    c = discrete_c(m)
    return [
        DiscretePair(m=m, p=p, q=q, c=c, h=discrete_h(m, p, q))
        for p in range(1, m + 2)
        for q in range(1, p + 1)
    ]


def discrete_membership(c: Fraction) -> int | None:
    """The witness m with c = c(m), or None.

    Solved exactly: c in D iff 6/(1-c) = (m+2)(m+3) for an integer m >= 1,
    i.e. 1 + 24/(1-c) is an odd perfect square (2m+5)^2.
    """
    c = Fraction(c)
    if not Fraction(1, 2) <= c < 1:
        return None
    ratio = 6 / (1 - c)  # = (m+2)(m+3), so m^2 + 5m + (6 - ratio) = 0
    if ratio.denominator != 1:
        return None
    disc = 1 + 4 * ratio.numerator
    s = isqrt(disc)
    if s * s != disc or (s - 5) % 2 != 0:
        return None
    m = (s - 5) // 2
    if m < 1 or discrete_c(m) != c:
        return None
    return m


@dataclass(frozen=True)
class RegimeReport:
    """Exact regime membership for a central charge, plus theorem flags.

    ``infdim_applicable``/``cmax_applicable`` mark whether c falls in the
    regimes (1+D) u [2, oo) resp. (1+D) u [2, 25] covered by the known
    infinite-dimension and no-compact-extension theorems.  They are recorded
    as theorem metadata, not as computed invariants.
    """

    c: Fraction
    in_D: bool
    witness_m: int | None
    in_D_plus_1: bool
    witness_m_plus_1: int | None
    in_geq2: bool
    allowed: bool
    h_threshold: Fraction
    infdim_applicable: bool
    cmax_applicable: bool

    def to_json(self) -> dict:
        return {
            "c": format_rational(self.c),
            "in_D": self.in_D,
            "witness_m": self.witness_m,
            "in_D_plus_1": self.in_D_plus_1,
            "witness_m_plus_1": self.witness_m_plus_1,
            "in_geq2": self.in_geq2,
            "allowed": self.allowed,
            "h_threshold": format_rational(self.h_threshold),
            "infdim_applicable": self.infdim_applicable,
            "cmax_applicable": self.cmax_applicable,
            "flags_kind": "theorem-metadata",
        }


def classify_central_charge(c) -> RegimeReport:
    c = Fraction(c)
    m = discrete_membership(c)
    m1 = discrete_membership(c - 1)
    in_geq2 = c >= 2
    return RegimeReport(
        c=c,
        in_D=m is not None,
        witness_m=m,
        in_D_plus_1=m1 is not None,
        witness_m_plus_1=m1,
        in_geq2=in_geq2,
        allowed=(m is not None) or c >= 1,
        h_threshold=(c - 1) / 24,
        infdim_applicable=(m1 is not None) or in_geq2,
        cmax_applicable=(m1 is not None) or (in_geq2 and c <= 25),
    )


def is_allowed_pair(c, h) -> bool:
    """True iff (c, h) can carry a unitary lowest-weight module.

    Either c >= 1 with h >= 0, or c = c(m) and h is one of the h_{p,q}(m).
    """
    c, h = Fraction(c), Fraction(h)
    if c >= 1:
        return h >= 0
    m = discrete_membership(c)
    if m is None:
        return False
    return any(pair.h == h for pair in enumerate_discrete_pairs(m))
