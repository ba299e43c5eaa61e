"""Truncated formal power series in t with a rational exponent offset.

A QSeries represents t^{offset} * sum_{n=0}^{order} coeffs[n] t^n with exact
rational coefficients.  Coefficients beyond ``order`` are *undefined*, not
zero: arithmetic propagates the minimum truncation order, so a coefficient is
only ever reported inside its window of validity.  Characters Tr t^{L0} live
here, with offset the lowest weight h.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import format_rational, parse_rational


class OffsetMismatchError(ValueError):
    """Offsets differ by a non-integer; the series are not alignable."""


class QSeries:
    __slots__ = ("offset", "coeffs", "order")

    def __init__(self, offset, coeffs, order: int | None = None):
        offset = Fraction(offset)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) != order + 1:
            raise ValueError(f"need {order + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int, offset=0) -> "QSeries":
        return QSeries(offset, (Fraction(0),) * (order + 1))

    @staticmethod
    def one(order: int) -> "QSeries":
        return QSeries(0, (Fraction(1),) + (Fraction(0),) * order)

    @staticmethod
    def monomial(exponent, order: int) -> "QSeries":
        """t^{exponent} as a series with the given truncation order."""
        return QSeries(exponent, (Fraction(1),) + (Fraction(0),) * order)

    # -- inspection --------------------------------------------------------

    def coefficient(self, degree: int) -> Fraction:
        """Coefficient of t^{offset + degree}; degree must be within order."""
        if not 0 <= degree <= self.order:
            raise IndexError(f"degree {degree} outside truncation order {self.order}")
        return self.coeffs[degree]

    def leading(self) -> tuple[Fraction, Fraction] | None:
        """(exponent, coefficient) of the lowest nonzero term, or None."""
        for n, c in enumerate(self.coeffs):
            if c != 0:
                return self.offset + n, c
        return None

    def shift(self, delta) -> "QSeries":
        """Multiply by t^{delta} (offset shift only)."""
        return QSeries(self.offset + Fraction(delta), self.coeffs)

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return QSeries(self.offset, tuple(-c for c in self.coeffs))

    def scale(self, a) -> "QSeries":
        a = Fraction(a)
        return QSeries(self.offset, tuple(a * c for c in self.coeffs))

    def _aligned(self, other: "QSeries"):
        """Common offset/order data for + and -.

        Requires the offsets to differ by an integer; refusing non-integer
        differences (instead of padding with zeros) keeps character
        bookkeeping honest.
        """
        delta = other.offset - self.offset
        if delta.denominator != 1:
            raise OffsetMismatchError(
                f"offsets {self.offset} and {other.offset} differ by a non-integer"
            )
        d = delta.numerator
        if d < 0:
            lo, hi, shift = other, self, -d
        else:
            lo, hi, shift = self, other, d
        # window of validity in absolute exponents, rebased to lo.offset
        order = min(lo.order, shift + hi.order)
        return lo, hi, shift, order

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        lo, hi, shift, order = self._aligned(other)
        coeffs = []
        for n in range(order + 1):
            c = lo.coeffs[n] if n <= lo.order else Fraction(0)
            if n >= shift and n - shift <= hi.order:
                c += hi.coeffs[n - shift]
            coeffs.append(c)
        return QSeries(lo.offset, coeffs)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        coeffs = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    coeffs[i + j] += a * b
        return QSeries(self.offset + other.offset, coeffs)

    def invert_unit(self) -> "QSeries":
        """Multiplicative inverse through ``order``; needs coeffs[0] != 0."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("leading coefficient is zero; series is not a unit")
        inv = [Fraction(1) / a0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += self.coeffs[k] * inv[n - k]
            inv.append(-acc / a0)
        return QSeries(-self.offset, inv)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.offset == other.offset
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.offset, self.order, self.coeffs))

    def agrees_through(self, other: "QSeries", order: int | None = None) -> bool:
        """Coefficientwise equality over the common window of validity.

        When ``order`` is given, both series must be valid through that many
        degrees above min(offset) and must agree there.
        """
        lo, hi, shift, common = self._aligned(other)
        if order is not None:
            if order > common:
                raise ValueError(
                    f"requested order {order} exceeds common validity window {common}"
                )
            common = order
        for n in range(common + 1):
            a = lo.coeffs[n] if n <= lo.order else Fraction(0)
            b = hi.coeffs[n - shift] if shift <= n and n - shift <= hi.order else Fraction(0)
            if a != b:
                return False
        return True

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "offset": format_rational(self.offset),
            "order": self.order,
            "coeffs": [format_rational(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> "QSeries":
        return QSeries(
            parse_rational(obj["offset"]),
            [parse_rational(c) for c in obj["coeffs"]],
            obj["order"],
        )

    def __repr__(self):
        head = ", ".join(format_rational(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 5 else ""
        return f"QSeries(t^{self.offset} * [{head}{tail}], order={self.order})"


def partition_generating(order: int) -> QSeries:
    """p(t) = prod_{n>=1} (1-t^n)^{-1} truncated at ``order``.

    Computed by inverting the finite product prod_{n<=order} (1-t^n); factors
    beyond ``order`` cannot touch the retained coefficients.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    return euler_product(order).invert_unit()


def euler_product(order: int) -> QSeries:
    """prod_{n=1}^{order} (1 - t^n) truncated at ``order``."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    acc = QSeries(0, coeffs)
    for n in range(1, order + 1):
        factor = [Fraction(0)] * (order + 1)
        factor[0] = Fraction(1)
        factor[n] = Fraction(-1)
        acc = acc * QSeries(0, factor)
    return acc


def theta_series(order: int) -> QSeries:
    """sum_{n in Z} t^{n^2} truncated: 1 + 2t + 2t^4 + 2t^9 + ...

    Character-level stand-in for the level-one SU(2) vacuum space graded by
    charge; feeds the branching verification.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    n = 1
    while n * n <= order:
        coeffs[n * n] = Fraction(2)
        n += 1
    return QSeries(0, coeffs)
