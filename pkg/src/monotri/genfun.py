"""Coefficient extraction from the triangle generating functions and binomial determinants.

Rational functions of the form ``monomial * N(X) / prod (1 - X_i)^n`` are never
expanded as series.  A coefficient is read off by convolving the finite
numerator ``N`` with the closed-form coefficients of ``(1 - X)^{-n}``:
``[X^t] (1 - X)^{-n} = binom(t + n - 1, n - 1)`` for ``t >= 0``.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import InvalidInputError, OutOfRegionWarning
from .poly import MultiPoly, generalized_binomial, poly_binomial
from .formulas import half

Laurent = dict  # exponent tuple -> int coefficient


def laurent_mul(a: Laurent, b: Laurent, caps: Sequence[int] | None = None) -> Laurent:
    """Product of two exponent dicts; with ``caps``, drop terms whose exponent exceeds a cap."""
    out: Laurent = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if caps is not None and any(x > cap for x, cap in zip(e, caps)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _linear(n: int, spec: dict[tuple[int, ...], int]) -> Laurent:
    """Build a Laurent polynomial in n variables from {(var, exp), ...: coeff} style terms."""
    out: Laurent = {}
    for monomial, c in spec.items():
        e = [0] * n
        for var, a in monomial:
            e[var] += a
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _neg_binomial(t: int, n: int) -> int:
    """Coefficient of Y^t in (1 - Y)^{-n}."""
    return math.comb(t + n - 1, n - 1) if t >= 0 else 0


# ordinary monotone triangles


def _mt_pair_factors(n: int, i: int, j: int) -> list[Laurent]:
    return [_linear(n, {((j, 1),): 1, ((i, 1),): -1}),
            _linear(n, {(): 1, ((j, 1),): -1, ((i, 1), (j, 1)): 1})]


@lru_cache(maxsize=None)
def mt_numerator(n: int) -> Laurent:
    """``prod_{i<j} (X_j - X_i)(1 - X_j + X_i X_j)`` as an exponent dict."""
    poly: Laurent = {(0,) * n: 1}
    for i, j in itertools.combinations(range(n), 2):
        for factor in _mt_pair_factors(n, i, j):
            poly = laurent_mul(poly, factor)
    return poly


def _mt_coefficient(n: int, shift: Sequence[int], k: Sequence[int]) -> int:
    """``[X^k] prod X_i^{-shift_i} (1 - X_i)^{-n} * numerator``.

    Variables are eliminated one at a time: once every factor involving X_v has
    been multiplied in, X_v^e is replaced by its weight ``binom(cap - e + n - 1, n - 1)``.
    Numerator exponents only grow, so terms above a cap are dropped early.
    """
    caps = [ki + si for ki, si in zip(k, shift)]
    if min(caps) < 0:
        return 0
    poly: Laurent = {(0,) * n: 1}
    for v in range(n):
        for u in range(v + 1, n):
            for factor in _mt_pair_factors(n, v, u):
                poly = laurent_mul(poly, factor, caps)
        collapsed: Laurent = {}
        for e, c in poly.items():
            weight = _neg_binomial(caps[v] - e[v], n)
            if weight:
                e = e[:v] + (0,) + e[v + 1:]
                collapsed[e] = collapsed.get(e, 0) + c * weight
        poly = {e: c for e, c in collapsed.items() if c}
    return poly.get((0,) * n, 0)


def mt_gf_coeff(n: int, k: Sequence[int]) -> int:
    """Coefficient of X^k in ``prod X_i^{-(n-1)} (1 - X_i)^{-n} * prod_{i<j} (X_j - X_i)(1 - X_j + X_i X_j)``."""
    if n < 1 or len(k) != n:
        raise InvalidInputError(f"need n >= 1 and n exponents, got n={n}, k={tuple(k)}")
    return _mt_coefficient(n, [n - 1] * n, k)


def asm_constant_term(n: int) -> int:
    """Constant term of ``prod X_i^{-(n+i-2)} (1 - X_i)^{-n} * numerator``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return _mt_coefficient(n, [n + i - 2 for i in range(1, n + 1)], [0] * n)


def mt_gf_coeff_by_series(n: int, k: Sequence[int]) -> int:
    """Slow cross-check: multiply truncated geometric series out explicitly."""
    k = tuple(k)
    top = [ki + n - 1 for ki in k]
    if min(top) < 0:
        return 0
    series: Laurent = {(0,) * n: 1}
    for i in range(n):
        geometric = {tuple(t if v == i else 0 for v in range(n)): 1 for t in range(top[i] + 1)}
        for _ in range(n):
            series = laurent_mul(series, geometric)
            series = {e: c for e, c in series.items() if all(a <= b for a, b in zip(e, top))}
    product = laurent_mul(series, mt_numerator(n))
    return product.get(tuple(top), 0)


# halved monotone triangles


@lru_cache(maxsize=None)
def hmt_numerator(m: int) -> Laurent:
    """``prod_{i<j} (X_j - X_i)(X_i + X_j - 1)(X_i X_j - 1)(1 - X_j + X_i X_j)``."""
    poly: Laurent = {(0,) * m: 1}
    for i, j in itertools.combinations(range(m), 2):
        for spec in ({((j, 1),): 1, ((i, 1),): -1},
                     {((i, 1),): 1, ((j, 1),): 1, (): -1},
                     {((i, 1), (j, 1)): 1, (): -1},
                     {(): 1, ((j, 1),): -1, ((i, 1), (j, 1)): 1}):
            poly = laurent_mul(poly, _linear(m, spec))
    return poly


def hmt_region_bound(n: int, x: int) -> int:
    """Largest bottom entry for which the coefficient equals the count polynomial."""
    c = Fraction(2 * x + 1 - n, 2) if n % 2 else Fraction(2 * x + 4 - n, 2)
    if c.denominator != 1:
        raise InvalidInputError(f"bound for n={n} is not an integer: {c}")
    return int(c)


def _hmt_top_exponent(n: int, x: int) -> int:
    # doubled: 2x + 3 - n (odd n) or 2x + 6 - n (even n); always even for the matching parity
    doubled = 2 * x + 3 - n if n % 2 else 2 * x + 6 - n
    if doubled % 2:
        raise InvalidInputError(f"half-integer exponent {doubled}/2 for n={n}")
    return doubled // 2


@dataclass(frozen=True)
class HmtCoefficient:
    value: int
    in_region: bool


def hmt_gf_coefficient(n: int, x: int, k: Sequence[int]) -> HmtCoefficient:
    """Coefficient of X^k in the halved-triangle generating function, read in powers of 1/X.

    The function is ``numerator * prod X_i^{s} / (X_i - 1)^n`` with
    ``s = x + 3/2 - n/2`` (odd n) or ``s = x + 3 - n/2`` (even n).
    """
    k = tuple(k)
    m = half(n)
    if n < 1 or len(k) != m:
        raise InvalidInputError(f"need {m} exponents for n={n}, got {k}")
    s = _hmt_top_exponent(n, x)
    # 1/(X-1)^n = X^{-n} (1 - 1/X)^{-n}: substitute X -> 1/Y and reuse the negative binomial
    total = 0
    for e, c in hmt_numerator(m).items():
        term = c
        for ki, ei in zip(k, e):
            term *= _neg_binomial(s + ei - n - ki, n)
            if not term:
                break
        total += term
    bound = hmt_region_bound(n, x)
    return HmtCoefficient(total, all(ki <= bound for ki in k))


def hmt_gf_coeff(n: int, x: int, k: Sequence[int]) -> int:
    """As :func:`hmt_gf_coefficient`, warning when ``k`` leaves the counting region."""
    result = hmt_gf_coefficient(n, x, k)
    if not result.in_region:
        warnings.warn(f"exponents {tuple(k)} exceed the region bound {hmt_region_bound(n, x)} "
                      f"for n={n}, x={x}", OutOfRegionWarning, stacklevel=2)
    return result.value


# determinants


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant over the rationals by Gaussian elimination."""
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return result


def det_leibniz(matrix):
    """Determinant by permutation expansion; works for any commutative ring entries."""
    n = len(matrix)
    total = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = None
        for i in range(n):
            entry = matrix[i][perm[i]]
            term = entry if term is None else term * entry
        if term is None:
            term = 1
        term = -term if inversions % 2 else term
        total = term if total is None else total + term
    return 1 if total is None else total


def _binom_entry(kind: int, ki, j: int):
    if kind == 1:
        arg, lower = ki + (j - 1), 2 * j - 1
    elif kind == 2:
        arg, lower = ki + (j - Fraction(3, 2)), 2 * j - 2
    else:
        raise InvalidInputError(f"determinant kind must be 1 or 2, got {kind}")
    if isinstance(arg, MultiPoly):
        return poly_binomial(arg, lower)
    return generalized_binomial(arg, lower)


def binom_matrix(kind: int, k: Sequence):
    n = len(k)
    return [[_binom_entry(kind, k[i], j) for j in range(1, n + 1)] for i in range(n)]


def binom_determinant(kind: int, k: Sequence) -> Fraction:
    """``det binom(k_i + j - 1, 2j - 1)`` (kind 1) or ``det binom(k_i + j - 3/2, 2j - 2)`` (kind 2)."""
    return det(binom_matrix(kind, [Fraction(v) for v in k]))


def binom_determinant_symbolic(kind: int, n: int) -> MultiPoly:
    """The same determinant with k_1..k_n left as polynomial variables."""
    ks = MultiPoly.gens(n)[:n]
    return det_leibniz(binom_matrix(kind, ks))


def binom_product(kind: int, k: Sequence):
    """Product side of the determinant evaluations; ``k`` may hold numbers or polynomials."""
    n = len(k)
    if kind not in (1, 2):
        raise InvalidInputError(f"determinant kind must be 1 or 2, got {kind}")
    value = Fraction(1) if not k or not isinstance(k[0], MultiPoly) else MultiPoly.constant(1, k[0].arity)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            norm = (j - i) * (j + i) if kind == 1 else (j - i) * (j + i - 1)
            value = value * ((k[j - 1] - k[i - 1]) * (k[i - 1] + k[j - 1])) / norm
    if kind == 1:
        for i in range(1, n + 1):
            value = value * k[i - 1] / i
    return value


# series identities


def _identity_range(parity: str, j: int) -> range:
    if parity == "odd":
        return range(-j - 1, j - 2)
    if parity == "even":
        return range(-j - 1, j - 1)
    raise InvalidInputError(f"parity must be 'odd' or 'even', got {parity!r}")


def series_identity_check(parity: str, j: int, z: int, c: int, window: int) -> bool:
    """Compare both sides of the summed-binomial series identity on a window of exponents.

    Left side: ``sum_{l <= c} binom(l + j - c + z, 2j - 2) X^l`` (odd) or
    ``binom(l + j - c + z, 2j - 1)`` (even).  Right side:
    ``X^{j+c-z-2} / (X-1)^{2j-1}`` (odd) or ``-X^{j+c-z-1} / (X-1)^{2j}`` (even),
    both read as series in 1/X.  Exponents from ``c - window + 1`` to ``c + window``
    are compared.  ``z`` must lie in the range where the identity is claimed.
    """
    if j < 1:
        raise InvalidInputError(f"j must be >= 1, got {j}")
    r = _identity_range(parity, j)
    if z not in r:
        raise InvalidInputError(f"z={z} outside the valid range {r.start}..{r.stop - 1}")
    return series_identity_holds(parity, j, z, c, window)


def series_identity_holds(parity: str, j: int, z: int, c: int, window: int) -> bool:
    """As :func:`series_identity_check` without the range restriction on ``z``."""
    if window < 1:
        raise InvalidInputError("window must be positive")
    if parity == "odd":
        lower, top, power, sign = 2 * j - 2, j + c - z - 2, 2 * j - 1, 1
    elif parity == "even":
        lower, top, power, sign = 2 * j - 1, j + c - z - 1, 2 * j, -1
    else:
        raise InvalidInputError(f"parity must be 'odd' or 'even', got {parity!r}")
    for l in range(c - window + 1, c + window + 1):
        left = generalized_binomial(l + j - c + z, lower) if l <= c else Fraction(0)
        # [X^l] X^top / (X-1)^power = [Y^(top - power - l)] (1 - Y)^{-power}
        right = sign * _neg_binomial(top - power - l, power)
        if left != right:
            return False
    return True


def vandermonde_monic_check(polys: Sequence[Sequence[Fraction]], ys: Sequence[Fraction]) -> bool:
    """``det p_j(Y_i) == prod_{i<j} (Y_j - Y_i)`` for monic p_j of degree j - 1.

    ``polys[j]`` lists coefficients of p_{j+1} from the constant term upwards.
    """
    n = len(ys)
    if len(polys) != n:
        raise InvalidInputError("need one polynomial per point")
    for j, coeffs in enumerate(polys):
        if len(coeffs) != j + 1 or coeffs[-1] != 1:
            raise InvalidInputError(f"p_{j + 1} must be monic of degree {j}")
    matrix = [[sum(Fraction(a) * y ** e for e, a in enumerate(p)) for p in polys] for y in ys]
    product = Fraction(1)
    for i, j in itertools.combinations(range(n), 2):
        product *= Fraction(ys[j]) - Fraction(ys[i])
    return det(matrix) == product
