"""Charged Fock space of the Heisenberg modes and the deformed Virasoro
action on it.

Basis monomials J_{-m1}...J_{-mk} applied to the vacuum are labelled by
partitions, exactly as in the Verma case.  The current modes obey
[J_n, J_m] = n delta_{n+m,0} with the zero mode acting as the charge scalar
q.  On top of them sit the two-parameter Virasoro operators

    L_n = delta_{n,0} lam^2/2 + (1/2) sum_j :J_{-j} J_{j+n}: + i lam n J_n,

with central charge 1 + 12 lam^2 and vacuum energy (lam^2 + q^2)/2.  Normal
ordering puts the larger mode index to the right (annihilators act first),
which makes every term act exactly on a finite-level vector: on level ell
only j in [-ell, ell - n] can contribute, so the j-sum is finite and no
truncation ever happens.  Operators are never materialized as matrices.

Vectors are dicts Partition -> GaussianRational.  All checks here are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Partition, level, partitions_of
from .qseries import QSeries, partition_generating
from .scalars import GaussianRational, format_rational

FockVector = dict  # Partition -> GaussianRational

_I = GaussianRational(0, 1)


@dataclass(frozen=True)
class OscillatorParams:
    """Deformation (lam) and charge (q); both exact rationals."""

    lam: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "q", Fraction(self.q))

    @property
    def central_charge(self) -> Fraction:
        return 1 + 12 * self.lam * self.lam

    @property
    def lowest_weight(self) -> Fraction:
        return (self.lam * self.lam + self.q * self.q) / 2


def vacuum() -> FockVector:
    return {(): GaussianRational(1)}


def basis_vector(mu: Partition) -> FockVector:
    return {mu: GaussianRational(1)}


def _accumulate(out: FockVector, mono: Partition, delta) -> None:
    acc = out.get(mono, 0) + delta
    if acc:
        out[mono] = acc
    else:
        out.pop(mono, None)


def vectors_equal(u: FockVector, v: FockVector) -> bool:
    for key in u.keys() | v.keys():
        if u.get(key, 0) != v.get(key, 0):
            return False
    return True


def scale(vec: FockVector, a) -> FockVector:
    a = GaussianRational.promote(a)
    if a.is_zero():
        return {}
    return {mono: a * coeff for mono, coeff in vec.items()}

def add(u: FockVector, v: FockVector) -> FockVector:
    out = dict(u)
    for mono, coeff in v.items():
        _accumulate(out, mono, coeff)
    return out


def sub(u: FockVector, v: FockVector) -> FockVector:
    out = dict(u)
    for mono, coeff in v.items():
        _accumulate(out, mono, -coeff)
    return out


def vector_to_json(vec: FockVector) -> list[dict]:
    items = sorted(vec.items())
    return [
        {"partition": list(mono), "coeff": GaussianRational.promote(c).to_json()}
        for mono, c in items
    ]


def apply_current(n: int, q, vec: FockVector) -> FockVector:
    """Exact action of the charged current mode J_n (J_0 = q * identity)."""
    if n == 0:
        return scale(vec, Fraction(q))
    out: FockVector = {}
    if n < 0:
        part = -n
        for mono, coeff in vec.items():
            idx = next((i for i, p in enumerate(mono) if p <= part), len(mono))
            _accumulate(out, mono[:idx] + (part,) + mono[idx:], coeff)
        return out
    for mono, coeff in vec.items():
        mult = mono.count(n)
        if mult:
            idx = mono.index(n)
            _accumulate(out, mono[:idx] + mono[idx + 1 :], (n * mult) * coeff)
    return out


def fock_inner(u: FockVector, v: FockVector) -> GaussianRational:
    """Hermitian form with <vac|vac> = 1 and (J_n)* = J_{-n}.

    Conjugate-linear in the first slot.  Evaluated by moving the bra modes
    across as annihilators and reading the vacuum coefficient, so the
    symmetry-factor formula for monomial norms is *not* assumed here (the
    tests compare the two routes).
    """
    total = GaussianRational(0)
    for mu, a in u.items():
        vec = v
        for m in mu:  # adjoint chain, largest part first
            vec = apply_current(m, 0, vec)
            if not vec:
                break
        else:
            coeff = vec.get((), 0)
            if coeff:
                total = total + GaussianRational.promote(a).conjugate() * coeff
    return GaussianRational.promote(total)


def apply_virasoro(n: int, params: OscillatorParams, vec: FockVector) -> FockVector:
    """Exact action of the deformed Virasoro mode L_n on a finite vector."""
    lam, q = params.lam, params.q
    out: FockVector = {}
    half = Fraction(1, 2)
    for mono, coeff in vec.items():
        ell = level(mono)
        one_term = {mono: coeff}
        # quadratic piece: modes (-j, j+n); outside the window the
        # trailing annihilator exceeds the level and kills the term
        for j in range(-ell, ell - n + 1):
            lo, hi = sorted((-j, j + n))
            w = apply_current(lo, q, apply_current(hi, q, one_term))
            for mono2, c2 in w.items():
                _accumulate(out, mono2, half * c2)
        if n != 0:
            for mono2, c2 in apply_current(n, q, one_term).items():
                _accumulate(out, mono2, (_I * (lam * n)) * c2)
        else:
            _accumulate(out, mono, (lam * lam * half) * coeff)
    return out


class FourierPolynomial:
    """Finitely supported Fourier/Laurent data: mode index -> coefficient.

    For current smearing the coefficient of z^n multiplies J_n; for
    stress-energy smearing the mode-n coefficient multiplies L_n.  A real
    function has coeff(-n) = conj(coeff(n)).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        clean = {}
        for n, c in coeffs.items():
            c = GaussianRational.promote(c)
            if not c.is_zero():
                clean[int(n)] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FourierPolynomial is immutable")

    def coefficient(self, n: int) -> GaussianRational:
        return self.coeffs.get(n, GaussianRational(0))

    @property
    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def is_real(self) -> bool:
        return all(
            self.coefficient(-n) == c.conjugate() for n, c in self.coeffs.items()
        )

    def __add__(self, other: "FourierPolynomial") -> "FourierPolynomial":
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, GaussianRational(0)) + c
        return FourierPolynomial(out)

    def scaled(self, a) -> "FourierPolynomial":
        a = GaussianRational.promote(a)
        return FourierPolynomial({n: a * c for n, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FourierPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"FourierPolynomial({self.coeffs!r})"


def smear_virasoro(
    f: FourierPolynomial, params: OscillatorParams, vec: FockVector
) -> FockVector:
    """sum_n f_n L_n applied to vec (finite sum over the support of f)."""
    out: FockVector = {}
    for n, fn in f.coeffs.items():
        for mono, c in apply_virasoro(n, params, vec).items():
            _accumulate(out, mono, fn * c)
    return out


def smear_current(u: FourierPolynomial, q, vec: FockVector) -> FockVector:
    """sum_n u_n J_n applied to vec, with the charge shift on the zero mode."""
    out: FockVector = {}
    for n, un in u.coeffs.items():
        for mono, c in apply_current(n, q, vec).items():
            _accumulate(out, mono, un * c)
    return out


def weyl_cocycle(u: FourierPolynomial, v: FourierPolynomial) -> GaussianRational:
    """sigma(u, v) = (1/2) sum_n n u_n v_{-n}.

    This is the mode-level exponent of the Weyl multiplier; it is bilinear,
    antisymmetric, and satisfies [J(u), J(v)] = 2 sigma(u, v) * identity.
    """
    total = GaussianRational(0)
    for n, un in u.coeffs.items():
        vn = v.coefficient(-n)
        if not vn.is_zero():
            total = total + Fraction(n, 2) * un * vn
    return total


def bmt_phase(u: FourierPolynomial, q) -> GaussianRational:
    """Charge-q phase datum q * u_0: the zero-mode shift J(u) -> J(u) + q u_0."""
    return GaussianRational.promote(Fraction(q)) * u.coefficient(0)


# ---------------------------------------------------------------------------
# verification reports


def _bracket_window(max_level: int, *modes: int):
    """Levels whose bracket check stays inside max_level at every stage."""
    raise_by = sum(max(0, -n) for n in modes)
    return range(0, max(-1, max_level - raise_by) + 1)


def verify_virasoro_bracket(
    n: int, m: int, params: OscillatorParams, max_level: int
) -> dict:
    """Check [L_n, L_m] = (n-m) L_{n+m} + delta_{n+m,0} (n^3-n)/12 c exactly.

    Runs over every basis monomial whose level keeps all intermediate levels
    within max_level; each comparison is exact, so a mismatch is a genuine
    counterexample and is returned with both sides.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    c = params.central_charge
    checked = 0
    for ell in _bracket_window(max_level, n, m):
        for mu in partitions_of(ell):
            v = basis_vector(mu)
            lhs = sub(
                apply_virasoro(n, params, apply_virasoro(m, params, v)),
                apply_virasoro(m, params, apply_virasoro(n, params, v)),
            )
            rhs = scale(apply_virasoro(n + m, params, v), Fraction(n - m))
            if n + m == 0:
                rhs = add(rhs, scale(v, Fraction(n**3 - n, 12) * c))
            checked += 1
            if not vectors_equal(lhs, rhs):
                return {
                    "identity": "virasoro-bracket",
                    "n": n,
                    "m": m,
                    "lambda": format_rational(params.lam),
                    "q": format_rational(params.q),
                    "max_level": max_level,
                    "checked": checked,
                    "pass": False,
                    "counterexample": {
                        "basis_vector": list(mu),
                        "lhs": vector_to_json(lhs),
                        "rhs": vector_to_json(rhs),
                    },
                }
    return {
        "identity": "virasoro-bracket",
        "n": n,
        "m": m,
        "lambda": format_rational(params.lam),
        "q": format_rational(params.q),
        "max_level": max_level,
        "checked": checked,
        "pass": True,
        "counterexample": None,
    }


def oscillator_character(
    params: OscillatorParams, order: int, check_levels: int = 6
) -> QSeries:
    """Tr t^{L_0} of the deformed representation, truncated at ``order``.

    The grading gives eigenvalue h + n on the level-n subspace, whose
    dimension is the number of partitions of n (counted by enumeration).
    Diagonality of L_0 is re-verified on every basis vector of level up to
    ``check_levels``; the partition generating series is the independent
    cross-check used by the tests.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    h = params.lowest_weight
    coeffs = []
    for n in range(order + 1):
        basis = partitions_of(n)
        if n <= check_levels:
            expected = GaussianRational(h + n)
            for mu in basis:
                got = apply_virasoro(0, params, basis_vector(mu))
                if not vectors_equal(got, {mu: expected}):
                    raise RuntimeError(
                        f"L_0 not diagonal on level {n} basis vector {mu}"
                    )
        coeffs.append(Fraction(len(basis)))
    result = QSeries(h, coeffs)
    if result != partition_generating(order).shift(h):
        raise RuntimeError("graded trace disagrees with the product formula")
    return result


def sl2_triple_check(n: int, params: OscillatorParams, max_level: int) -> dict:
    """Verify the rotation/deformation triple built from L_{+-n}.

    X = (L_{-n} - L_n)/2 and Y = (L_n + L_{-n})/(2i) must satisfy
    [iL_0, X] = -nY, [iL_0, Y] = nX and [X, Y] = in(L_0 + c_n); the constant
    c_n is solved from the vacuum and then confirmed on every safe basis
    vector, along with the closed form (n^2 - 1) c / 24.
    """
    if n < 1:
        raise ValueError("mode index n must be >= 1")
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    half = Fraction(1, 2)
    minus_i_half = GaussianRational(0, Fraction(-1, 2))  # 1/(2i)

    def apply_x(v):
        return scale(
            sub(apply_virasoro(-n, params, v), apply_virasoro(n, params, v)), half
        )

    def apply_y(v):
        return scale(
            add(apply_virasoro(n, params, v), apply_virasoro(-n, params, v)),
            minus_i_half,
        )

    def apply_l0(v):
        return apply_virasoro(0, params, v)

    c = params.central_charge
    h = params.lowest_weight
    expected_cn = Fraction(n * n - 1) * c / 24

    # solve c_n from [X, Y] vac = i n (h + c_n) vac
    w = sub(apply_x(apply_y(vacuum())), apply_y(apply_x(vacuum())))
    top = GaussianRational.promote(w.get((), 0)) / (_I * Fraction(n))
    if not top.is_real():
        return _sl2_report(n, params, max_level, False, None, expected_cn, 0,
                           note="vacuum bracket coefficient not real")
    solved_cn = top.re - h

    relations_pass = True
    note = None
    checked = 0
    for ell in _bracket_window(max_level, n, -n):
        for mu in partitions_of(ell):
            v = basis_vector(mu)
            l0v = apply_l0(v)
            r1_lhs = scale(sub(apply_l0(apply_x(v)), apply_x(l0v)), _I)
            r1_rhs = scale(apply_y(v), Fraction(-n))
            r2_lhs = scale(sub(apply_l0(apply_y(v)), apply_y(l0v)), _I)
            r2_rhs = scale(apply_x(v), Fraction(n))
            r3_lhs = sub(apply_x(apply_y(v)), apply_y(apply_x(v)))
            r3_rhs = scale(add(l0v, scale(v, solved_cn)), _I * Fraction(n))
            checked += 1
            if not (
                vectors_equal(r1_lhs, r1_rhs)
                and vectors_equal(r2_lhs, r2_rhs)
                and vectors_equal(r3_lhs, r3_rhs)
            ):
                relations_pass = False
                note = f"relation failed on basis vector {mu} at level {ell}"
                break
        if not relations_pass:
            break

    ok = relations_pass and solved_cn == expected_cn
    return _sl2_report(n, params, max_level, ok, solved_cn, expected_cn, checked, note)


def _sl2_report(n, params, max_level, ok, solved_cn, expected_cn, checked, note=None):
    return {
        "identity": "sl2-triple",
        "n": n,
        "lambda": format_rational(params.lam),
        "q": format_rational(params.q),
        "c": format_rational(params.central_charge),
        "max_level": max_level,
        "checked": checked,
        "c_n": None if solved_cn is None else format_rational(solved_cn),
        "c_n_closed_form": format_rational(expected_cn),
        "pass": ok,
        "note": note,
    }
