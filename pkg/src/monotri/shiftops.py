"""Laurent polynomials in commuting shift operators E_1, ..., E_m.

``E_i`` acts on a :class:`~monotri.poly.MultiPoly` by ``k_i -> k_i + 1``; x is
never shifted.  Operators are kept fully expanded in the E-basis.  The
difference operator is ``Delta_i = E_i - id`` and ``V_{p,q} = id + E_q Delta_p``.
"""
from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidInputError, NotInvertibleError
from .poly import MultiPoly, Scalar, _shift_terms, format_terms, generalized_binomial, parse_terms


class OperatorKind(enum.Enum):
    THEOREM1 = "theorem1"
    INVERSE_FORM = "inverse_form"
    BETA_TO_GAMMA = "beta_to_gamma"
    GAMMA_BAR_TO_GAMMA = "gamma_bar_to_gamma"
    V_PRODUCT = "v_product"
    ALPHA = "alpha"


class ShiftOp:
    """Immutable Laurent polynomial in E_1..E_m with rational coefficients."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Iterable[int], Scalar] | None = None):
        if arity < 0:
            raise InvalidInputError(f"arity must be >= 0, got {arity}")
        clean: dict[tuple, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != arity:
                raise InvalidInputError(f"exponent vector {e} does not have length {arity}")
            c = Fraction(c)
            s = clean.get(e, 0) + c
            if s:
                clean[e] = s
            else:
                clean.pop(e, None)
        self.arity = arity
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "ShiftOp":
        op = cls.__new__(cls)
        op.arity = arity
        op._terms = terms
        op._hash = None
        return op

    @classmethod
    def identity(cls, arity: int) -> "ShiftOp":
        return cls._raw(arity, {(0,) * arity: Fraction(1)})

    @classmethod
    def shift(cls, arity: int, i: int, t: int = 1) -> "ShiftOp":
        """``E_i^t``."""
        _check_index(i, arity)
        e = [0] * arity
        e[i - 1] = t
        return cls._raw(arity, {tuple(e): Fraction(1)})

    @classmethod
    def delta(cls, arity: int, i: int) -> "ShiftOp":
        return cls.shift(arity, i) - cls.identity(arity)

    @property
    def terms(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def items(self):
        key = lambda e: (sum(e),) + e
        for e in sorted(self._terms, key=key, reverse=True):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShiftOp):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"ShiftOp({self.arity}, {self.to_text()!r})"

    def _check(self, other: "ShiftOp") -> None:
        if self.arity != other.arity:
            raise InvalidInputError(f"operator arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other) -> "ShiftOp":
        if isinstance(other, (int, Fraction)):
            other = ShiftOp.identity(self.arity) * other
        if not isinstance(other, ShiftOp):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return ShiftOp._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> "ShiftOp":
        return ShiftOp._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "ShiftOp":
        return self + (-other)

    def __rsub__(self, other) -> "ShiftOp":
        return (-self) + other

    def __mul__(self, other) -> "ShiftOp":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ShiftOp._raw(self.arity, {})
            return ShiftOp._raw(self.arity, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, ShiftOp):
            return NotImplemented
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ShiftOp._raw(self.arity, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return apply_op(self, p)

    def constant_term(self) -> Fraction:
        """Constant term after rewriting in the Delta-basis (sum of all coefficients)."""
        return sum(self._terms.values(), Fraction(0))

    def permuted(self, perm: tuple[int, ...]) -> "ShiftOp":
        """Relabel: the exponent of E_i moves to position ``perm[i-1]`` (1-based)."""
        out = {}
        for e, c in self._terms.items():
            new = [0] * self.arity
            for i, a in enumerate(e):
                new[perm[i] - 1] = a
            out[tuple(new)] = c
        return ShiftOp._raw(self.arity, out)

    def is_symmetric(self) -> bool:
        return all(self.permuted(tuple(p)) == self
                   for p in itertools.permutations(range(1, self.arity + 1)))

    def inverted_in(self, i: int) -> "ShiftOp":
        """Replace E_i by E_i^{-1}."""
        _check_index(i, self.arity)
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1] = -e[i - 1]
            out[tuple(e)] = c
        return ShiftOp._raw(self.arity, out)

    def to_text(self) -> str:
        return format_terms(
            (c, [(f"E{i + 1}", a) for i, a in enumerate(e) if a]) for e, c in self.items())

    @classmethod
    def parse(cls, text: str, arity: int | None = None) -> "ShiftOp":
        parsed = parse_terms(text, _op_symbol)
        top = max((p for _, f in parsed for p in f), default=0)
        arity = top if arity is None else arity
        if top > arity:
            raise InvalidInputError(f"E{top} occurs but arity is {arity}")
        out = {}
        for c, factors in parsed:
            e = [0] * arity
            for p, a in factors.items():
                e[p - 1] += a
            out[tuple(e)] = out.get(tuple(e), 0) + c
        return cls(arity, out)


def _op_symbol(name: str, idx: str) -> int:
    if name == "E" and idx and int(idx) >= 1:
        return int(idx)
    raise InvalidInputError(f"unknown operator symbol {name}{idx}")


def _check_index(i: int, arity: int) -> None:
    if not 1 <= i <= arity:
        raise InvalidInputError(f"index {i} out of range 1..{arity}")


def op_add(a: ShiftOp, b: ShiftOp) -> ShiftOp:
    return a + b


def op_mul(a: ShiftOp, b: ShiftOp) -> ShiftOp:
    return a * b


def apply_op(op: ShiftOp, p: MultiPoly) -> MultiPoly:
    """Apply ``op`` to ``p``: sum of c * p(k + e) over the operator's terms."""
    if op.arity != p.arity:
        raise InvalidInputError(f"operator arity {op.arity} != polynomial arity {p.arity}")
    out: dict = {}
    # shift one variable at a time, sharing work between exponent vectors with a common prefix
    cache: dict[tuple, dict] = {(): p._terms}

    def shifted(prefix: tuple) -> dict:
        if prefix not in cache:
            parent = shifted(prefix[:-1])
            cache[prefix] = _shift_terms(parent, len(prefix) - 1, prefix[-1])
        return cache[prefix]

    for e, c in op._terms.items():
        for mono, coef in shifted(e).items():
            out[mono] = out.get(mono, 0) + c * coef
    return MultiPoly._raw(p.arity, {m: c for m, c in out.items() if c})


def apply_ops(ops: Iterable[ShiftOp], p: MultiPoly) -> MultiPoly:
    """Apply a sequence of operators (rightmost first is irrelevant; they commute)."""
    for op in ops:
        p = apply_op(op, p)
    return p


def apply_op_at(op: ShiftOp, f, k: Iterable[int]) -> Fraction:
    """Apply ``op`` to a function of integer tuples and evaluate at ``k``."""
    k = tuple(k)
    if len(k) != op.arity:
        raise InvalidInputError(f"point has {len(k)} coordinates, operator arity {op.arity}")
    return sum((c * f(tuple(a + b for a, b in zip(k, e))) for e, c in op._terms.items()),
               Fraction(0))


def swap_vars(p: MultiPoly, i: int, j: int) -> MultiPoly:
    return p.swap(i, j)


# the named operator products


def _E(m: int, i: int, t: int = 1) -> ShiftOp:
    return ShiftOp.shift(m, i, t)


def v_operator(m: int, p: int, q: int) -> ShiftOp:
    """``V_{k_p,k_q} = id + E_q Delta_p``."""
    return ShiftOp.identity(m) + _E(m, q) * ShiftOp.delta(m, p)


def _pair_factor(kind: OperatorKind, m: int, p: int, q: int) -> ShiftOp:
    one = ShiftOp.identity(m)
    if kind is OperatorKind.THEOREM1:
        return _E(m, p) * (_E(m, p, -1) + _E(m, q, -1) - one) * (_E(m, p, -1) + _E(m, q) - one)
    if kind is OperatorKind.BETA_TO_GAMMA:
        return ((_E(m, p) + _E(m, q) - _E(m, p) * _E(m, q))
                * (_E(m, p) + _E(m, q, -1) - _E(m, p) * _E(m, q, -1)))
    if kind is OperatorKind.GAMMA_BAR_TO_GAMMA:
        return ((_E(m, p, -1) + _E(m, q, -1) - one)
                * (_E(m, p, -1) * _E(m, q, -1) + one - _E(m, q, -1)))
    if kind is OperatorKind.V_PRODUCT:
        return v_operator(m, p, q)
    if kind is OperatorKind.ALPHA:
        return one + _E(m, p) * _E(m, q) - _E(m, p)
    raise InvalidInputError(f"{kind} has no polynomial pair factor")


def pairs(m: int):
    return itertools.combinations(range(1, m + 1), 2)


def operator_factors(kind: OperatorKind, m: int, degree_bound: int | None = None) -> list[ShiftOp]:
    """The operator of ``kind`` as a list of commuting factors, one per pair p < q.

    For INVERSE_FORM the whole inverse is a single factor valid on polynomials
    whose degree in each k_i is at most ``degree_bound``.
    """
    if m < 1:
        raise InvalidInputError(f"operator arity must be >= 1, got {m}")
    if kind is OperatorKind.INVERSE_FORM:
        if degree_bound is None:
            raise InvalidInputError("INVERSE_FORM needs an explicit degree bound")
        denominator = ShiftOp.identity(m)
        shifts = ShiftOp.identity(m)
        for p, q in pairs(m):
            denominator = denominator * (v_operator(m, p, q)
                                         * (ShiftOp.identity(m) + _E(m, q, -1) * ShiftOp.delta(m, p)))
            shifts = shifts * _E(m, p)
        return [shifts * op_invert(denominator, degree_bound)]
    return [_pair_factor(kind, m, p, q) for p, q in pairs(m)]


def build_operator(kind: OperatorKind, m: int, degree_bound: int | None = None) -> ShiftOp:
    """Fully expanded operator of the given kind in m shift variables."""
    result = ShiftOp.identity(m)
    for factor in operator_factors(kind, m, degree_bound):
        result = result * factor
    return result


def characterizing_factors(m: int) -> list[ShiftOp]:
    """Per-pair factors ``(id + E_q Delta_p) E_p^{-1} (id + E_q^{-1} Delta_p)``."""
    one = ShiftOp.identity(m)
    return [v_operator(m, p, q) * _E(m, p, -1) * (one + _E(m, q, -1) * ShiftOp.delta(m, p))
            for p, q in pairs(m)]


def quadruple_factors(m: int) -> list[ShiftOp]:
    """Per-pair factors of the four-fold product that fixes the base polynomial."""
    one = ShiftOp.identity(m)
    out = []
    for p, q in pairs(m):
        dp = ShiftOp.delta(m, p)
        out.append((one + _E(m, q) * dp) * (one + _E(m, q, -1) * dp)
                   * (one - _E(m, q) * _E(m, p, -1) * dp)
                   * (one - _E(m, q, -1) * _E(m, p, -1) * dp))
    return out


# inversion in the Delta-basis


def _to_delta_series(op: ShiftOp, d: int) -> dict[tuple, Fraction]:
    """Rewrite ``op`` as a power series in Delta_1..Delta_m, truncated at degree d per variable."""
    m = op.arity
    expansions: dict[int, list[Fraction]] = {}

    def expand(e: int) -> list[Fraction]:
        # E^e = (id + Delta)^e, truncated; exact for e >= 0 once d >= e
        if e not in expansions:
            expansions[e] = [generalized_binomial(e, j) for j in range(d + 1)]
        return expansions[e]

    series: dict[tuple, Fraction] = {}
    for e, c in op._terms.items():
        partial = {(): c}
        for a in e:
            coeffs = expand(a)
            partial = {idx + (j,): v * coeffs[j]
                       for idx, v in partial.items() for j in range(d + 1) if coeffs[j]}
        for idx, v in partial.items():
            series[idx] = series.get(idx, 0) + v
    return {idx: v for idx, v in series.items() if v}


def _from_delta_series(series: Mapping[tuple, Fraction], m: int) -> ShiftOp:
    out = ShiftOp._raw(m, {})
    cache: dict[tuple[int, int], ShiftOp] = {}
    for idx, v in series.items():
        term = ShiftOp.identity(m) * v
        for i, j in enumerate(idx):
            if j:
                if (i, j) not in cache:
                    d = ShiftOp.delta(m, i + 1)
                    power = ShiftOp.identity(m)
                    for _ in range(j):
                        power = power * d
                    cache[(i, j)] = power
                term = term * cache[(i, j)]
        out = out + term
    return out


def op_invert(op: ShiftOp, degree_bound: int) -> ShiftOp:
    """Inverse of ``op`` on polynomials of degree <= degree_bound in every k_i.

    The operator is read as a power series in the Delta_i; it is invertible iff
    that series has a non-zero constant term.
    """
    if degree_bound < 0:
        raise InvalidInputError(f"degree bound must be >= 0, got {degree_bound}")
    d, m = degree_bound, op.arity
    a = _to_delta_series(op, d)
    a0 = a.get((0,) * m, Fraction(0))
    if not a0:
        raise NotInvertibleError("operator has zero constant term in the Delta-basis")
    # solve a * b = 1 coefficientwise, in order of total Delta-degree
    box = sorted(itertools.product(range(d + 1), repeat=m), key=sum)
    b: dict[tuple, Fraction] = {}
    a_items = [(s, v) for s, v in a.items() if any(s)]
    for r in box:
        acc = Fraction(1) if not any(r) else Fraction(0)
        for s, v in a_items:
            rest = tuple(ri - si for ri, si in zip(r, s))
            if min(rest) >= 0 and rest in b:
                acc -= v * b[rest]
        if acc:
            b[r] = acc / a0
    return _from_delta_series(b, m)
