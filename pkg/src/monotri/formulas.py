"""Closed forms and operator formulas for halved and ordinary monotone triangles.

All polynomials live in :class:`~monotri.poly.MultiPoly` with k_1..k_m and x,
where ``m = ceil(n/2)`` for halved triangles and ``m = n`` for ordinary ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidInputError, VerificationError
from .poly import K, X, MultiPoly
from .shiftops import (OperatorKind, ShiftOp, apply_op, apply_op_at, apply_ops,
                       build_operator, characterizing_factors, operator_factors,
                       quadruple_factors)


def half(n: int) -> int:
    return (n + 1) // 2


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise VerificationError(f"{what} evaluated to the non-integer {value}")
    return value.numerator


@dataclass(frozen=True)
class FormulaResult:
    n: int
    method: str
    symbolic: MultiPoly | None = None
    value: Fraction | None = None
    x: int | None = None
    k: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.symbolic is not None and self.value is not None:
            point = {K(i + 1): v for i, v in enumerate(self.k or ())}
            point[X] = self.x if self.x is not None else 0
            if self.symbolic.eval(point) != self.value:
                raise VerificationError("recorded value disagrees with its polynomial")


# Proctor's count of halved triangles with weakly increasing rows


def beta(n: int, x: int | Fraction, k: Sequence[int | Fraction]) -> Fraction:
    _check_n(n)
    m = half(n)
    if len(k) != m:
        raise InvalidInputError(f"need {m} bottom entries for n={n}, got {len(k)}")
    k = [Fraction(v) for v in k]
    x = Fraction(x)
    value = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ki, kj = k[i - 1], k[j - 1]
            if n % 2:
                value *= (kj - ki + j - i) * (2 * x + 2 + n - i - j - ki - kj) / ((j - i) * (j + i - 1))
            else:
                value *= (kj - ki + j - i) * (2 * x + 2 - i - j + n - ki - kj) / ((j - i) * (j + i))
    if n % 2 == 0:
        for i in range(1, m + 1):
            value *= (x + 1 - i + Fraction(n, 2) - k[i - 1]) / i
    return value


def beta_poly(n: int) -> MultiPoly:
    _check_n(n)
    m = half(n)
    *ks, x = MultiPoly.gens(m)
    p = MultiPoly.constant(1, m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ki, kj = ks[i - 1], ks[j - 1]
            if n % 2:
                p = p * ((kj - ki + (j - i)) * (2 * x + (2 + n - i - j) - ki - kj)) / ((j - i) * (j + i - 1))
            else:
                p = p * ((kj - ki + (j - i)) * (2 * x + (2 - i - j + n) - ki - kj)) / ((j - i) * (j + i))
    if n % 2 == 0:
        for i in range(1, m + 1):
            p = p * (x + (1 - i + Fraction(n, 2)) - ks[i - 1]) / i
    return p


# halved monotone triangles


def _base_product(n: int, normalized: bool, shift: Fraction = Fraction(0)) -> MultiPoly:
    """The product that the operators act on; ``shift`` offsets the constants in x."""
    _check_n(n)
    m = half(n)
    *ks, x = MultiPoly.gens(m)
    p = MultiPoly.constant(1, m)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            ki, kj = ks[i - 1], ks[j - 1]
            if n % 2:
                factor = (kj - ki) * (2 * x + (1 + 2 * shift) - ki - kj)
                norm = (j - i) * (j + i - 1)
            else:
                factor = (kj - ki) * (2 * x + (2 + 2 * shift) - ki - kj)
                norm = (j - i) * (j + i)
            p = p * factor
            if normalized:
                p = p / norm
    if n % 2 == 0:
        for i in range(1, m + 1):
            p = p * (x + (1 + shift) - ks[i - 1])
            if normalized:
                p = p / i
    return p


def gamma_base(n: int) -> MultiPoly:
    """The normalized product the main operator formula is applied to."""
    return _base_product(n, normalized=True)


def gamma_base_unnormalized(n: int) -> MultiPoly:
    return _base_product(n, normalized=False)


@lru_cache(maxsize=None)
def gamma_theorem1(n: int) -> MultiPoly:
    """Halved-triangle count as a polynomial in k_1..k_ceil(n/2) and x."""
    return apply_ops(operator_factors(OperatorKind.THEOREM1, half(n)), gamma_base(n))


def gamma_value(n: int, x: int, k: Sequence[int]) -> int:
    """Evaluate the count polynomial; on non-increasing rows this is its polynomial extension."""
    k = tuple(k)
    if len(k) != half(n):
        raise InvalidInputError(f"need {half(n)} bottom entries for n={n}, got {len(k)}")
    return _as_int(gamma_theorem1(n)(*k, x=x), f"gamma({n}, {x}; {k})")


def gamma_via_inverse_ops(n: int, degree_bound: int | None = None) -> MultiPoly:
    """The count polynomial from the truncated-inverse operator form.

    The default degree bound is n - 1.  The result is checked by applying the
    un-inverted operator and comparing with the base product.
    """
    _check_n(n)
    m = half(n)
    d = n - 1 if degree_bound is None else degree_bound
    base = gamma_base(n)
    result = apply_ops(operator_factors(OperatorKind.INVERSE_FORM, m, d), base)
    # round trip: undo the E_p shifts, then apply the operator that was inverted
    back = result
    one = ShiftOp.identity(m)
    for p, q in ((p, q) for p in range(1, m + 1) for q in range(p + 1, m + 1)):
        dp = ShiftOp.delta(m, p)
        back = apply_op(ShiftOp.shift(m, p, -1) * (one + ShiftOp.shift(m, q) * dp)
                        * (one + ShiftOp.shift(m, q, -1) * dp), back)
    if back != base:
        raise VerificationError(
            f"degree bound {d} is too small for n={n}: the inverse does not round-trip")
    return result


def gamma_via_beta(n: int, x: int, k: Sequence[int]) -> Fraction:
    """Apply the beta-to-gamma shift operator to Proctor's product, pointwise."""
    op = build_operator(OperatorKind.BETA_TO_GAMMA, half(n))
    return apply_op_at(op, lambda kk: beta(n, x, kk), k)


def gamma_star(n: int) -> MultiPoly:
    """``prod_{p<q} V_{k_p,k_q}`` applied to the count polynomial; antisymmetric in the k's."""
    return apply_ops(operator_factors(OperatorKind.V_PRODUCT, half(n)), gamma_theorem1(n))


def gamma_bar(n: int) -> MultiPoly:
    """The base product with x shifted so that only inverse shifts are needed."""
    _check_n(n)
    return _base_product(n, normalized=True, shift=Fraction(1 - n, 2) if n % 2
                         else Fraction(2 - n, 2))


def gamma_via_gamma_bar(n: int, x: int, k: Sequence[int]) -> Fraction:
    op = build_operator(OperatorKind.GAMMA_BAR_TO_GAMMA, half(n))
    bar = gamma_bar(n)
    return apply_op_at(op, lambda kk: bar(*kk, x=x), k)


def gamma_bar_to_gamma_poly(n: int) -> MultiPoly:
    return apply_ops(operator_factors(OperatorKind.GAMMA_BAR_TO_GAMMA, half(n)), gamma_bar(n))


def characterizing_transform(n: int) -> MultiPoly:
    """Count polynomial after the symmetrizing product; a constant times the unnormalized base."""
    return apply_ops(characterizing_factors(half(n)), gamma_theorem1(n))


def quadruple_transform(n: int) -> MultiPoly:
    return apply_ops(quadruple_factors(half(n)), gamma_base_unnormalized(n))


# ordinary monotone triangles


def vandermonde_ratio(n: int) -> MultiPoly:
    """``prod_{i<j} (k_j - k_i)/(j - i)`` in n k-variables."""
    _check_n(n)
    *ks, _ = MultiPoly.gens(n)
    p = MultiPoly.constant(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            p = p * (ks[j] - ks[i]) / (j - i)
    return p


@lru_cache(maxsize=None)
def alpha_poly(n: int) -> MultiPoly:
    return apply_ops(operator_factors(OperatorKind.ALPHA, n), vandermonde_ratio(n))


def alpha_value(n: int, k: Sequence[int]) -> int:
    k = tuple(k)
    if len(k) != n:
        raise InvalidInputError(f"need {n} bottom entries, got {len(k)}")
    return _as_int(alpha_poly(n)(*k), f"alpha({n}; {k})")


# product formulas


def asm_count(n: int) -> int:
    _check_n(n)
    value = Fraction(1)
    for j in range(n):
        value *= Fraction(math.factorial(3 * j + 1), math.factorial(n + j))
    return _as_int(value, f"ASM product formula at n={n}")


def vsasm_count(n: int) -> int:
    """Vertically symmetric ASMs of size (2n+1) x (2n+1)."""
    _check_n(n)
    value = Fraction(math.factorial(n), math.factorial(2 * n) * 2 ** n)
    for j in range(1, n + 1):
        value *= Fraction(math.factorial(6 * j - 2), math.factorial(2 * n + 2 * j - 1))
    return _as_int(value, f"VSASM product formula at n={n}")


# leading coefficient in the falling-factorial basis


def leading_constant(n: int) -> Fraction:
    """Reciprocal of (n-1)! (n-3)! ... down to 2! (odd n) or 1! (even n)."""
    _check_n(n)
    denom = 1
    for a in range(n - 1, 0, -2):
        denom *= math.factorial(a)
    return Fraction(1, denom)


def _stirling2(a: int) -> list[int]:
    """Row a of Stirling numbers of the second kind: k^a = sum_j S(a, j) (k)_j."""
    row = [1]
    for i in range(1, a + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            new[j] = (row[j] if j < len(row) else 0) * j + row[j - 1]
        row = new
    return row


def falling_factorial_expansion(p: MultiPoly) -> dict[tuple[int, ...], MultiPoly]:
    """Coefficients of p in the basis prod_i (k_i)_{m_i}; coefficients are polynomials in x."""
    m = p.arity
    out: dict[tuple[int, ...], dict] = {}
    for e, c in p.terms.items():
        partial = {(): c}
        for a in e[:-1]:
            row = _stirling2(a)
            partial = {idx + (j,): v * row[j] for idx, v in partial.items()
                       for j in range(len(row)) if row[j]}
        xe = (0,) * m + (e[-1],)
        for idx, v in partial.items():
            bucket = out.setdefault(idx, {})
            bucket[xe] = bucket.get(xe, 0) + v
    result = {}
    for idx, terms in out.items():
        poly = MultiPoly(m, terms)
        if poly:
            result[idx] = poly
    return result


def leading_falling_factorial(p: MultiPoly) -> tuple[tuple[int, ...], MultiPoly]:
    """Lexicographically largest degree sequence in the falling-factorial basis, with coefficient."""
    expansion = falling_factorial_expansion(p)
    if not expansion:
        raise InvalidInputError("the zero polynomial has no leading basis element")
    top = max(expansion)
    return top, expansion[top]


def reflection_form(n: int, arity: int) -> MultiPoly:
    """``2x + 1 - k_i`` (odd n) or ``2x + 2 - k_i`` (even n) without the ``- k_i`` part."""
    x = MultiPoly.var(X, arity)
    return 2 * x + (1 if n % 2 else 2)


def reflect(p: MultiPoly, n: int, i: int) -> MultiPoly:
    """Substitute k_i -> 2x+1-k_i (odd n) or k_i -> 2x+2-k_i (even n)."""
    return p.substitute(K(i), reflection_form(n, p.arity) - MultiPoly.var(K(i), p.arity))
