"""Irreducible characters and greedy multiplicity extraction.

Verma characters are t^h p(t) by the PBW basis.  At c = 1 the irreducible
module with lowest weight j^2 (integer j >= 0) has character
(t^{j^2} - t^{(j+1)^2}) p(t); the construction cross-checks its coefficients
against exact Gram ranks.  Greedy lowest-term peeling decomposes a character
into family members: characters here have pairwise distinct leading
exponents, so each step is forced and failures are explicit.

The headline identity verified at character level: the theta-weighted free
module splits over the c = 1 family with odd multiplicities 2j + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import partition_count
from .qseries import QSeries, partition_generating, theta_series
from .scalars import format_rational
from .verma import VermaParams, irreducible_level_dims, matrix_rank, module_for


class NotDecomposableError(ValueError):
    """A negative coefficient appeared while peeling: not a non-negative
    combination of the family."""


class UnknownConstituentError(ValueError):
    """The remainder's lowest term matches no family member."""


class DegenerateGramError(ValueError):
    """A generic-character request hit a level with a null vector."""

    def __init__(self, c, h, level):
        self.level = level
        super().__init__(
            f"Gram matrix of (c, h) = ({c}, {h}) is degenerate at level {level}"
        )


@dataclass(frozen=True)
class CharacterFamily:
    """A central charge and the (h, character) members, sorted by h."""

    c: Fraction
    members: tuple[tuple[Fraction, QSeries], ...]

    @staticmethod
    def of(c, members) -> "CharacterFamily":
        ordered = tuple(sorted(((Fraction(h), chi) for h, chi in members)))
        return CharacterFamily(Fraction(c), ordered)

    def lookup(self, h: Fraction) -> QSeries | None:
        for hh, chi in self.members:
            if hh == h:
                return chi
        return None


def char_verma(c, h, order: int) -> QSeries:
    """t^h p(t): the Verma character (independent of c)."""
    del c  # graded dimensions are p(n) regardless of the central charge
    return partition_generating(order).shift(Fraction(h))


def char_irreducible_c1(j: int, order: int, validation_levels: int = 6) -> QSeries:
    """Irreducible character at (c, h) = (1, j^2): (t^{j^2} - t^{(j+1)^2}) p(t).

    Coefficients are p(n) - p(n - (2j+1)) at degree n above j^2; they are
    validated against the exact Gram-rank dimensions of the irreducible
    quotient through min(order, validation_levels).
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    step = 2 * j + 1
    coeffs = [Fraction(partition_count(n) - partition_count(n - step))
              for n in range(order + 1)]
    cap = min(order, validation_levels)
    if cap >= 0:
        dims = irreducible_level_dims(VermaParams(Fraction(1), Fraction(j * j)), cap)
        for n in range(cap + 1):
            if coeffs[n] != dims[n]:
                raise RuntimeError(
                    f"closed-form coefficient {coeffs[n]} at level {n} "
                    f"disagrees with Gram rank {dims[n]} for j={j}"
                )
    return QSeries(Fraction(j * j), coeffs)


def char_irreducible_generic(c, h, order: int) -> QSeries:
    """t^h p(t) where the module is irreducible as a Verma quotient.

    Requires the Gram matrix to have full rank p(n) for every n <= order;
    the first degenerate level is reported otherwise.  Rank checks are exact
    Gram computations, so keep ``order`` modest.
    """
    c, h = Fraction(c), Fraction(h)
    mod = module_for(c, h)
    for n in range(order + 1):
        matrix = mod.gram(n)
        if matrix_rank(matrix.entries) != matrix.size:
            raise DegenerateGramError(c, h, n)
    return char_verma(c, h, order)


def extract_multiplicities(
    chi: QSeries, family: CharacterFamily, order: int
) -> list[tuple[Fraction, Fraction]]:
    """Greedy lowest-term peeling of chi over the family, through ``order``.

    Repeatedly reads the lowest nonzero term a t^{h}, requires h to be a
    family lowest weight, subtracts a times that member, and records (h, a).
    Raises NotDecomposableError on a negative coefficient and
    UnknownConstituentError when the term matches nothing in the family.
    """
    if order > chi.order:
        raise ValueError(f"order {order} exceeds character truncation {chi.order}")
    remainder = list(chi.coeffs[: order + 1])
    base = chi.offset
    for h, member in family.members:
        delta = h - base
        if delta.denominator == 1 and 0 <= delta.numerator <= order:
            needed = order - delta.numerator
            if member.order < needed:
                raise ValueError(
                    f"family character at h={h} truncated at {member.order}, "
                    f"needs {needed}"
                )
    found: list[tuple[Fraction, Fraction]] = []
    while True:
        lead = next((n for n, a in enumerate(remainder) if a != 0), None)
        if lead is None:
            return found
        a = remainder[lead]
        if a < 0:
            raise NotDecomposableError(
                f"negative coefficient {a} at exponent {base + lead}: "
                "not decomposable in this family"
            )
        h = base + lead
        member = family.lookup(h)
        if member is None:
            raise UnknownConstituentError(
                f"lowest term t^{h} matches no family member: unknown constituent"
            )
        for k, b in enumerate(member.coeffs):
            n = lead + k
            if n > order:
                break
            remainder[n] -= a * b
        found.append((h, a))


def verify_su21_branching(jmax: int, order: int) -> dict:
    """Character-level check of the odd-multiplicity branching law.

    First confirms the telescoping identity
    sum_{j<=jmax} (2j+1)(t^{j^2} - t^{(j+1)^2}) = sum_{n in Z} t^{n^2}
    through ``order`` (valid only below (jmax+1)^2, hence the precondition),
    then multiplies by p(t) and re-extracts the multiplicities 2j + 1 by
    greedy peeling over the c = 1 irreducible family.
    """
    if jmax < 0:
        raise ValueError("jmax must be >= 0")
    if order >= (jmax + 1) ** 2:
        raise ValueError(
            f"order must stay below (jmax+1)^2 = {(jmax + 1) ** 2} "
            "for the truncated telescoping to be exact"
        )
    theta = theta_series(order)
    tele = QSeries.zero(order)
    for j in range(jmax + 1):
        term = QSeries.monomial(j * j, order)
        upper = (j + 1) ** 2
        if upper <= order:
            term = term - QSeries.monomial(upper, order)
        tele = tele + term.scale(2 * j + 1)
    telescoping_ok = tele == theta

    chi = theta * partition_generating(order)
    family = CharacterFamily.of(
        1, [(j * j, char_irreducible_c1(j, order)) for j in range(jmax + 1)]
    )
    mults = extract_multiplicities(chi, family, order)
    expected = [
        (Fraction(j * j), Fraction(2 * j + 1))
        for j in range(jmax + 1)
        if j * j <= order
    ]
    extraction_ok = mults == expected
    return {
        "identity": "su21-branching",
        "Jmax": jmax,
        "order": order,
        "telescoping": telescoping_ok,
        "pass": telescoping_ok and extraction_ok,
        "multiplicities": [_mult_entry(h, a) for h, a in mults],
    }


def _mult_entry(h: Fraction, a: Fraction):
    def as_num(x):
        return x.numerator if x.denominator == 1 else format_rational(x)

    return [as_num(h), as_num(a)]
