"""Integer partitions: the graded basis index for every lowest-weight module here.

A partition is a tuple of weakly decreasing positive ints.  The monomial
L_{-a1}...L_{-ak}|h> (or J_{-a1}...J_{-ak} on the vacuum) with a1 >= ... >= ak
is the canonical normal form, so partitions double as basis labels; their
enumeration order is part of the external contract (it fixes row/column
indices of emitted matrices).
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, each exactly once, in reverse lexicographic order.

    partitions_of(4) = [(4,), (3,1), (2,2), (2,1,1), (1,1,1,1)].
    """
    if n < 0:
        raise ValueError(f"cannot partition negative integer {n}")
    return _partitions_bounded(n, n)


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> list[Partition]:
    # partitions of n with all parts <= largest, reverse-lex order
    if n == 0:
        return [()]
    out: list[Partition] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n); returns 0 for n < 0 (convention used in subtraction formulas)."""
    if n < 0:
        return 0
    return _count_bounded(n, n)


@lru_cache(maxsize=None)
def _count_bounded(n: int, largest: int) -> int:
    if n == 0:
        return 1
    if largest == 0:
        return 0
    total = 0
    for first in range(min(n, largest), 0, -1):
        total += _count_bounded(n - first, first)
    return total


def level(mu: Partition) -> int:
    """Sum of parts; the L0-grading of the monomial labelled by mu."""
    return sum(mu)


def multiplicities(mu: Partition) -> dict[int, int]:
    """Map part-size -> multiplicity."""
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    return mult


def symmetry_factor(mu: Partition) -> int:
    """z_mu = prod over part-sizes k of k^{m_k} * m_k!.

    Equals the squared Fock norm <J_{-mu} vac, J_{-mu} vac>; the fock module
    recomputes that norm by commutators and the tests compare the two routes.
    """
    z = 1
    for k, m in multiplicities(mu).items():
        z *= k**m * factorial(m)
    return z


def as_partition(parts) -> Partition:
    """Validate and canonicalize an iterable of parts into a Partition."""
    tup = tuple(int(p) for p in parts)
    if any(p < 1 for p in tup):
        raise ValueError(f"partition parts must be positive: {tup}")
    if any(tup[i] < tup[i + 1] for i in range(len(tup) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {tup}")
    return tup
