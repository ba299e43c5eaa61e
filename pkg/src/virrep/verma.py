"""Verma modules M(c,h): straightening, Gram matrices, exact positivity.

The module with lowest weight h and central charge c has PBW basis
L_{-a1}...L_{-ak}|h> indexed by partitions (a1 >= ... >= ak >= 1).  A mode
L_n acts by recursive straightening: commute L_n rightward with

    [L_n, L_m] = (n - m) L_{n+m} + delta_{n+m,0} (n^3 - n)/12 * c,

kill positive modes on |h>, evaluate L_0|h> = h|h>, and re-sort surviving
negative modes into weakly decreasing order.  Everything is exact over Q;
the engine also accepts Gaussian-rational coefficients unchanged.

Gram entries <L_{-mu}h, L_{-lam}h> come from the adjoint rule (L_n)* = L_{-n}
with <h|h> = 1: move each bra mode across and read off the |h> coefficient.
Positivity of all the Gram matrices is the unitarity criterion this module
tests; it is decided by exact symmetric elimination, never numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import Partition, level, partitions_of
from .scalars import format_rational

GradedVector = dict  # Partition -> coefficient (Fraction or GaussianRational)


@dataclass(frozen=True)
class VermaParams:
    c: Fraction
    h: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "h", Fraction(self.h))


class VermaModule:
    """Mode actions on M(c,h) with per-monomial memoization.

    Instances cache straightening results and Gram matrices, so reuse one
    instance (or go through :func:`module_for`) when computing many inner
    products at the same (c, h).
    """

    def __init__(self, c, h):
        self.params = VermaParams(Fraction(c), Fraction(h))
        self._mono_cache: dict[tuple[int, Partition], GradedVector] = {}
        self._gram_cache: dict[int, "GramMatrix"] = {}

    @property
    def c(self) -> Fraction:
        return self.params.c

    @property
    def h(self) -> Fraction:
        return self.params.h

    def apply(self, n: int, vec: GradedVector) -> GradedVector:
        """Exact action of L_n on a combination of canonical monomials."""
        out: GradedVector = {}
        for mono, coeff in vec.items():
            if not coeff:
                continue
            for mono2, base in self._apply_mono(n, mono).items():
                acc = out.get(mono2, 0) + coeff * base
                if acc:
                    out[mono2] = acc
                else:
                    out.pop(mono2, None)
        return out

    def _apply_mono(self, n: int, mono: Partition) -> GradedVector:
        cached = self._mono_cache.get((n, mono))
        if cached is not None:
            return cached
        result = self._straighten(n, mono)
        self._mono_cache[(n, mono)] = result
        return result

    def _straighten(self, n: int, mono: Partition) -> GradedVector:
        if not mono:
            if n > 0:
                return {}
            if n == 0:
                return {(): self.h} if self.h else {}
            return {(-n,): Fraction(1)}
        m = mono[0]
        if -n >= m:
            # prepending keeps the monomial weakly decreasing: already canonical
            return {(-n,) + mono: Fraction(1)}
        rest = mono[1:]
        out: GradedVector = {}
        # L_n L_{-m} = L_{-m} L_n + (n + m) L_{n-m} + delta_{n,m} (n^3-n)c/12
        for mono2, coeff in self._apply_mono(n, rest).items():
            for mono3, base in self._apply_mono(-m, mono2).items():
                _accumulate(out, mono3, coeff * base)
        factor = Fraction(n + m)
        if factor:
            for mono2, coeff in self._apply_mono(n - m, rest).items():
                _accumulate(out, mono2, factor * coeff)
        if n == m:
            central = Fraction(n**3 - n, 12) * self.c
            if central:
                _accumulate(out, rest, central)
        return out

    def inner(self, mu: Partition, lam: Partition):
        """<L_{-mu}h, L_{-lam}h> via (L_{-m})* = L_m and <h|h> = 1."""
        vec: GradedVector = {lam: Fraction(1)}
        for m in mu:  # adjoint chain acts largest part first
            vec = self.apply(m, vec)
            if not vec:
                return Fraction(0)
        return vec.get((), Fraction(0))

    def gram(self, lvl: int) -> "GramMatrix":
        if lvl < 0:
            raise ValueError("level must be >= 0")
        cached = self._gram_cache.get(lvl)
        if cached is not None:
            return cached
        basis = partitions_of(lvl)
        entries = [[self.inner(mu, lam) for lam in basis] for mu in basis]
        for i in range(len(basis)):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise RuntimeError(
                        f"Gram matrix not symmetric at level {lvl}: "
                        f"({i},{j}) vs ({j},{i})"
                    )
        matrix = GramMatrix(level=lvl, basis=list(basis), entries=entries)
        self._gram_cache[lvl] = matrix
        return matrix


_MODULES: dict[tuple[Fraction, Fraction], VermaModule] = {}


def module_for(c, h) -> VermaModule:
    """Shared, cache-carrying module instance for the pair (c, h)."""
    key = (Fraction(c), Fraction(h))
    mod = _MODULES.get(key)
    if mod is None:
        mod = VermaModule(*key)
        _MODULES[key] = mod
    return mod


def _accumulate(out: GradedVector, mono: Partition, delta) -> None:
    acc = out.get(mono, 0) + delta
    if acc:
        out[mono] = acc
    else:
        out.pop(mono, None)


def verma_apply(n: int, vec: GradedVector, params: VermaParams) -> GradedVector:
    return module_for(params.c, params.h).apply(n, vec)


@dataclass
class GramMatrix:
    level: int
    basis: list[Partition]
    entries: list[list[Fraction]]

    @property
    def size(self) -> int:
        return len(self.basis)

    def determinant(self) -> Fraction:
        """Exact determinant by fraction-free elimination on a copy."""
        n = self.size
        a = [row[:] for row in self.entries]
        det = Fraction(1)
        for k in range(n):
            pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != k:
                a[k], a[pivot_row] = a[pivot_row], a[k]
                det = -det
            det *= a[k][k]
            inv = Fraction(1) / a[k][k]
            for i in range(k + 1, n):
                f = a[i][k] * inv
                if f:
                    for j in range(k, n):
                        a[i][j] -= f * a[k][j]
        return det

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "basis": [list(mu) for mu in self.basis],
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }


def gram_matrix(params: VermaParams, lvl: int) -> GramMatrix:
    return module_for(params.c, params.h).gram(lvl)


@dataclass
class PsdVerdict:
    psd: bool
    pivots: list[Fraction]
    rank: int
    # w with w^T M w < 0, and that value, when not psd
    witness: list[Fraction] | None = None
    witness_value: Fraction | None = None
    # kernel vectors discovered at zero pivots (psd case)
    null_vectors: list[list[Fraction]] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "psd": self.psd,
            "rank": self.rank,
            "pivots": [format_rational(p) for p in self.pivots],
            "null_vectors": [
                [format_rational(x) for x in w] for w in self.null_vectors
            ],
        }
        if self.witness is not None:
            out["witness"] = [format_rational(x) for x in self.witness]
            out["witness_value"] = format_rational(self.witness_value)
        return out


def is_positive_semidefinite(matrix: GramMatrix) -> PsdVerdict:
    """Exact symmetric Gaussian elimination with diagonal pivots.

    PSD iff every pivot is >= 0 and each zero pivot sits in an entirely zero
    row of the current (Schur-complement) matrix.  A zero diagonal with a
    nonzero off-diagonal entry is a 2x2 indefinite block; a negative pivot is
    a negative diagonal value of the reduced form.  Either way an explicit
    witness w with w^T M w < 0 is assembled by undoing the congruence.
    """
    a = [row[:] for row in matrix.entries]
    n = len(a)
    # rows of C track the congruence: current = C * M * C^T
    c_rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pivots: list[Fraction] = []
    nulls: list[list[Fraction]] = []
    for k in range(n):
        d = a[k][k]
        if d < 0:
            return PsdVerdict(
                psd=False,
                pivots=pivots,
                rank=sum(1 for p in pivots if p),
                witness=c_rows[k][:],
                witness_value=d,
            )
        if d == 0:
            j = next((jj for jj in range(k + 1, n) if a[k][jj] != 0), None)
            if j is None:
                pivots.append(Fraction(0))
                nulls.append(c_rows[k][:])
                continue
            # block [[0, b], [b, e]] with b != 0: value -1 at (x, 1) below
            b, e = a[k][j], a[j][j]
            x = -(e + 1) / (2 * b)
            witness = [x * ck + cj for ck, cj in zip(c_rows[k], c_rows[j])]
            return PsdVerdict(
                psd=False,
                pivots=pivots,
                rank=sum(1 for p in pivots if p),
                witness=witness,
                witness_value=Fraction(-1),
            )
        pivots.append(d)
        inv = Fraction(1) / d
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                for jj in range(n):
                    a[i][jj] -= f * a[k][jj]
                for jj in range(n):
                    a[jj][i] -= f * a[jj][k]
                c_rows[i] = [ci - f * ck for ci, ck in zip(c_rows[i], c_rows[k])]
    return PsdVerdict(
        psd=True,
        pivots=pivots,
        rank=sum(1 for p in pivots if p),
        null_vectors=nulls,
    )


def matrix_rank(entries: list[list[Fraction]]) -> int:
    """Rank over Q by ordinary row elimination (works for any matrix)."""
    a = [row[:] for row in entries]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    row = 0
    for col in range(cols):
        pivot = next((i for i in range(row, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = Fraction(1) / a[row][col]
        for i in range(row + 1, rows):
            f = a[i][col] * inv
            if f:
                for j in range(col, cols):
                    a[i][j] -= f * a[row][j]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


@dataclass
class LevelSummary:
    level: int
    size: int
    psd: bool
    rank: int
    null_count: int


@dataclass
class UnitarityReport:
    params: VermaParams
    max_level: int
    consistent: bool
    levels: list[LevelSummary]
    first_failure_level: int | None = None
    failure: PsdVerdict | None = None

    def to_json(self) -> dict:
        out = {
            "c": format_rational(self.params.c),
            "h": format_rational(self.params.h),
            "max_level": self.max_level,
            "verdict": (
                "consistent-with-unitary" if self.consistent else "not-unitary"
            ),
            "levels": [
                {
                    "level": s.level,
                    "size": s.size,
                    "psd": s.psd,
                    "rank": s.rank,
                    "null_count": s.null_count,
                }
                for s in self.levels
            ],
        }
        if not self.consistent:
            out["first_failure_level"] = self.first_failure_level
            out["failure"] = self.failure.to_json()
        return out


def unitarity_scan(params: VermaParams, max_level: int) -> UnitarityReport:
    """PSD-check the Gram matrix at every level <= max_level.

    Stops at the first indefinite level and reports the witness vector; a
    violation found is a successful negative verdict, not an error.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    mod = module_for(params.c, params.h)
    summaries: list[LevelSummary] = []
    for lvl in range(max_level + 1):
        matrix = mod.gram(lvl)
        verdict = is_positive_semidefinite(matrix)
        summaries.append(
            LevelSummary(
                level=lvl,
                size=matrix.size,
                psd=verdict.psd,
                rank=verdict.rank,
                null_count=len(verdict.null_vectors),
            )
        )
        if not verdict.psd:
            return UnitarityReport(
                params=params,
                max_level=max_level,
                consistent=False,
                levels=summaries,
                first_failure_level=lvl,
                failure=verdict,
            )
    return UnitarityReport(
        params=params, max_level=max_level, consistent=True, levels=summaries
    )


def irreducible_level_dims(params: VermaParams, max_level: int) -> list[int]:
    """Graded dimensions of the irreducible quotient: Gram ranks per level."""
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    mod = module_for(params.c, params.h)
    return [matrix_rank(mod.gram(lvl).entries) for lvl in range(max_level + 1)]
