"""Exact multivariate polynomials in k_1, ..., k_m and x over the rationals.

A :class:`MultiPoly` stores its terms as a dict from exponent tuples
``(e_k1, ..., e_km, e_x)`` to :class:`fractions.Fraction` coefficients and
never keeps zero coefficients, so two polynomials of the same arity are equal
exactly when their term dicts are equal.

Terms are ordered graded-lexicographically on ``(x, k1, ..., km)``; that order
drives the text form, e.g. ``x - k1 + 1`` or ``1/2 * k1^2 * x - 3``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import InvalidInputError

Scalar = Union[int, Fraction]
Exponents = tuple


@dataclass(frozen=True, order=True)
class Var:
    """A polynomial variable: ``index == 0`` is x, ``index == i >= 1`` is k_i."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise InvalidInputError(f"variable index must be >= 0, got {self.index}")

    @property
    def is_x(self) -> bool:
        return self.index == 0

    @property
    def name(self) -> str:
        return "x" if self.index == 0 else f"k{self.index}"

    def __repr__(self) -> str:
        return self.name


X = Var(0)


def K(i: int) -> Var:
    if i < 1:
        raise InvalidInputError(f"k-variables are 1-based, got k{i}")
    return Var(i)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, not {type(c).__name__}")


def _grlex_key(e: Exponents):
    # exponent tuples are (k1..km, x); compare on (x, k1, ..., km)
    return (sum(e), e[-1]) + e[:-1]


class MultiPoly:
    """Immutable polynomial in ``arity`` k-variables and x."""

    __slots__ = ("arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Mapping[Iterable[int], Scalar] | None = None):
        if arity < 0:
            raise InvalidInputError(f"arity must be >= 0, got {arity}")
        clean: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(a) for a in e)
            if len(e) != arity + 1 or any(a < 0 for a in e):
                raise InvalidInputError(f"bad exponent vector {e} for arity {arity}")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.arity = arity
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.arity = arity
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, c: Scalar, arity: int) -> "MultiPoly":
        c = _as_fraction(c)
        return cls._raw(arity, {(0,) * (arity + 1): c} if c else {})

    @classmethod
    def var(cls, v: Var, arity: int) -> "MultiPoly":
        e = [0] * (arity + 1)
        e[_position(v, arity)] = 1
        return cls._raw(arity, {tuple(e): Fraction(1)})

    @classmethod
    def gens(cls, arity: int) -> tuple["MultiPoly", ...]:
        """Return ``(k1, ..., km, x)`` as polynomials of the given arity."""
        return tuple(cls.var(K(i), arity) for i in range(1, arity + 1)) + (cls.var(X, arity),)

    # basic protocol

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            yield e, self._terms[e]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * (self.arity + 1), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.arity, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.arity}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # ring operations

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise InvalidInputError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.arity)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly.zero(self.arity)
            return MultiPoly._raw(self.arity, {e: c * other for e, c in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MultiPoly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise InvalidInputError("polynomial powers must be non-negative integers")
        result = MultiPoly.constant(1, self.arity)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # structure

    def variables(self) -> set[Var]:
        found = set()
        for e in self._terms:
            for pos, a in enumerate(e):
                if a:
                    found.add(X if pos == self.arity else K(pos + 1))
        return found

    def degree_in(self, v: Var) -> int:
        """Largest exponent of ``v``; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        pos = _position(v, self.arity)
        return max(e[pos] for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def with_arity(self, arity: int) -> "MultiPoly":
        """Re-embed into a ring with a different number of k-variables."""
        if arity == self.arity:
            return self
        out = {}
        for e, c in self._terms.items():
            ks, ex = e[:-1], e[-1]
            if arity < self.arity and any(ks[arity:]):
                raise InvalidInputError(f"k{arity + 1}.. occur; cannot shrink arity to {arity}")
            ks = ks[:arity] + (0,) * (arity - len(ks))
            out[ks + (ex,)] = c
        return MultiPoly._raw(arity, out)

    # evaluation and substitution

    def eval(self, point: Mapping[Var, Scalar]) -> Fraction:
        needed = self.variables()
        missing = [v for v in needed if v not in point]
        if missing:
            names = ", ".join(sorted(v.name for v in missing))
            raise InvalidInputError(f"no value given for {names}")
        values = [Fraction(0)] * (self.arity + 1)
        for v in needed:
            values[_position(v, self.arity)] = _as_fraction(point[v])
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for val, a in zip(values, e):
                if a:
                    term *= val ** a
            total += term
        return total

    def __call__(self, *ks: Scalar, x: Scalar = 0) -> Fraction:
        if len(ks) != self.arity:
            raise InvalidInputError(f"expected {self.arity} k-values, got {len(ks)}")
        point = {K(i + 1): k for i, k in enumerate(ks)}
        point[X] = x
        return self.eval(point)

    def shift(self, v: Var, t: int) -> "MultiPoly":
        """Replace ``v`` by ``v + t``."""
        pos = _position(v, self.arity)
        return MultiPoly._raw(self.arity, _shift_terms(self._terms, pos, t))

    def shift_k(self, offsets: Iterable[int]) -> "MultiPoly":
        """Replace each k_i by ``k_i + offsets[i-1]``."""
        offsets = tuple(offsets)
        if len(offsets) != self.arity:
            raise InvalidInputError(f"expected {self.arity} offsets, got {len(offsets)}")
        terms = self._terms
        for pos, t in enumerate(offsets):
            if t:
                terms = _shift_terms(terms, pos, t)
        return MultiPoly._raw(self.arity, dict(terms))

    def substitute(self, v: Var, form: "MultiPoly") -> "MultiPoly":
        """Replace every occurrence of ``v`` by the affine polynomial ``form``."""
        form = self._coerce(form)
        if form.total_degree() > 1:
            raise InvalidInputError("substitution form must be affine (total degree <= 1)")
        pos = _position(v, self.arity)
        by_power: dict[int, dict] = {}
        for e, c in self._terms.items():
            rest = e[:pos] + (0,) + e[pos + 1:]
            by_power.setdefault(e[pos], {})[rest] = c
        result = MultiPoly.zero(self.arity)
        power = MultiPoly.constant(1, self.arity)
        for a in range(max(by_power, default=-1) + 1):
            if a in by_power:
                result = result + MultiPoly._raw(self.arity, by_power[a]) * power
            power = power * form
        return result

    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange k_i and k_j."""
        for idx in (i, j):
            if not 1 <= idx <= self.arity:
                raise InvalidInputError(f"k{idx} out of range for arity {self.arity}")
        if i == j:
            raise InvalidInputError("swap needs two distinct variables")
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[j - 1] = e[j - 1], e[i - 1]
            out[tuple(e)] = c
        return MultiPoly._raw(self.arity, out)

    # text form

    def to_text(self) -> str:
        names = [f"k{i}" for i in range(1, self.arity + 1)] + ["x"]
        return format_terms((c, [(names[p], a) for p, a in enumerate(e) if a])
                            for e, c in self.items())

    @classmethod
    def parse(cls, text: str, arity: int | None = None) -> "MultiPoly":
        parsed = parse_terms(text, _poly_symbol)
        top = max((p for _, factors in parsed for p in factors if p > 0), default=0)
        if arity is None:
            arity = top
        elif top > arity:
            raise InvalidInputError(f"k{top} occurs but arity is {arity}")
        out: dict[Exponents, Fraction] = {}
        for c, factors in parsed:
            e = [0] * (arity + 1)
            for p, a in factors.items():
                if a < 0:
                    raise InvalidInputError("negative exponent in a polynomial")
                e[arity if p == 0 else p - 1] += a
            e = tuple(e)
            out[e] = out.get(e, 0) + c
        return cls(arity, out)


def _position(v: Var, arity: int) -> int:
    if v.is_x:
        return arity
    if v.index > arity:
        raise InvalidInputError(f"{v.name} out of range for arity {arity}")
    return v.index - 1


def _shift_terms(terms: Mapping[Exponents, Fraction], pos: int, t: int) -> dict:
    if not t:
        return dict(terms)
    out: dict[Exponents, Fraction] = {}
    powers = [1]
    for e, c in terms.items():
        a = e[pos]
        if not a:
            out[e] = out.get(e, 0) + c
            continue
        while len(powers) <= a:
            powers.append(powers[-1] * t)
        for j in range(a + 1):
            e2 = e[:pos] + (j,) + e[pos + 1:]
            out[e2] = out.get(e2, 0) + c * (math.comb(a, j) * powers[a - j])
    return {e: c for e, c in out.items() if c}


# shared text format for polynomials and shift operators

def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Iterable[tuple[Fraction, list[tuple[str, int]]]]) -> str:
    pieces = []
    for c, factors in terms:
        sign = "-" if c < 0 else "+"
        c = abs(c)
        parts = [] if (c == 1 and factors) else [_format_coefficient(c)]
        parts += [name if a == 1 else f"{name}^{a}" for name, a in factors]
        body = " * ".join(parts)
        if not pieces:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) or "0"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)(?:\s*/\s*(?P<den>\d+))?"
                    r"|(?P<sym>[A-Za-z]+)(?P<idx>\d*)(?:\s*\^\s*(?P<exp>-?\d+))?"
                    r"|(?P<op>[+\-*]))")


def parse_terms(text: str, symbol) -> list[tuple[Fraction, dict[int, int]]]:
    """Parse ``c * s1^a * s2^b +/- ...`` into (coefficient, {position: exponent}) pairs.

    ``symbol(name, index)`` maps a symbol to an integer position.
    """
    terms: list[tuple[Fraction, dict[int, int]]] = []
    pos = 0
    text = text.strip()
    if not text:
        raise InvalidInputError("empty polynomial text")
    sign = 1
    coeff = Fraction(1)
    factors: dict[int, int] = {}
    expect_factor = True
    seen_factor = False
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidInputError(f"cannot parse {text[pos:]!r}")
        pos = m.end()
        op = m.group("op")
        if op in ("+", "-"):
            if seen_factor and not expect_factor:
                terms.append((sign * coeff, factors))
                sign, coeff, factors, seen_factor = 1, Fraction(1), {}, False
            elif seen_factor:
                raise InvalidInputError(f"dangling operator in {text!r}")
            if op == "-":
                sign = -sign
            expect_factor = True
        elif op == "*":
            if expect_factor:
                raise InvalidInputError(f"dangling '*' in {text!r}")
            expect_factor = True
        else:
            if not expect_factor:
                raise InvalidInputError(f"missing operator in {text!r}")
            if m.group("num") is not None:
                den = int(m.group("den")) if m.group("den") else 1
                if den == 0:
                    raise InvalidInputError("zero denominator")
                coeff *= Fraction(int(m.group("num")), den)
            else:
                p = symbol(m.group("sym"), m.group("idx"))
                factors[p] = factors.get(p, 0) + int(m.group("exp") or 1)
            expect_factor = False
            seen_factor = True
    if expect_factor:
        raise InvalidInputError(f"text ends with an operator: {text!r}")
    terms.append((sign * coeff, factors))
    return terms


def _poly_symbol(name: str, idx: str) -> int:
    if name == "x" and not idx:
        return 0
    if name == "k" and idx and int(idx) >= 1:
        return int(idx)
    raise InvalidInputError(f"unknown polynomial symbol {name}{idx}")


# functional interface

def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_eval(p: MultiPoly, point: Mapping[Var, Scalar]) -> Fraction:
    return p.eval(point)


def poly_shift(p: MultiPoly, v: Var, t: int) -> MultiPoly:
    return p.shift(v, t)


def poly_substitute_linear(p: MultiPoly, v: Var, form: MultiPoly) -> MultiPoly:
    return p.substitute(v, form)


def poly_degree_in(p: MultiPoly, v: Var) -> int:
    return p.degree_in(v)


def generalized_binomial(a: Scalar, m: int) -> Fraction:
    """``a (a-1) ... (a-m+1) / m!`` for any rational ``a``."""
    if m < 0:
        raise InvalidInputError(f"binomial lower index must be >= 0, got {m}")
    a = _as_fraction(a)
    num = Fraction(1)
    for i in range(m):
        num *= a - i
    return num / math.factorial(m)


def poly_binomial(p: MultiPoly, m: int) -> MultiPoly:
    """The binomial coefficient ``binom(p, m)`` as a polynomial in p's variables."""
    if m < 0:
        raise InvalidInputError(f"binomial lower index must be >= 0, got {m}")
    out = MultiPoly.constant(1, p.arity)
    for i in range(m):
        out = out * (p - i)
    return out / math.factorial(m)


def falling_factorial(p: MultiPoly, m: int) -> MultiPoly:
    return poly_binomial(p, m) * math.factorial(m)
