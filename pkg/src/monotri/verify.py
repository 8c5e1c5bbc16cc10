"""Randomized and exhaustive property suites behind ``monotri verify``.

Every property gets its own ``random.Random`` seeded from the suite seed and the
property name, so results do not depend on which other properties run or in
which order.
"""
from __future__ import annotations

import itertools
import random
from math import comb
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import brute, formulas, genfun
from .errors import InvalidInputError
from .formulas import half
from .poly import K, MultiPoly
from .shiftops import ShiftOp, apply_op, op_invert, v_operator

SUITES = ("all", "recursion", "operators", "symmetry", "genfun", "asm")
SYMBOLIC_GUARD = 9


@dataclass(frozen=True)
class Bounds:
    max_rows: int = 5
    max_x: int = 5
    instances: int = 100
    window: int = 20
    unsafe_sizes: bool = False

    def __post_init__(self):
        if self.max_rows < 1 or self.max_x < 0 or self.instances < 1 or self.window < 1:
            raise InvalidInputError(f"bounds out of range: {self}")
        if self.max_rows > SYMBOLIC_GUARD and not self.unsafe_sizes:
            raise InvalidInputError(
                f"--max-rows {self.max_rows} exceeds the guard {SYMBOLIC_GUARD}; pass --unsafe-sizes")


@dataclass
class PropertyResult:
    name: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def check(self, ok: bool, describe: Callable[[], str]) -> None:
        self.instances += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe()

    def to_dict(self) -> dict:
        return {"name": self.name, "instances": self.instances, "passed": self.passed,
                "counterexample": self.counterexample}


@dataclass
class VerifyReport:
    suite: str
    seed: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        width = max((len(r.name) for r in self.results), default=0)
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<{width}}  {r.instances:>6} instances"
            if not r.passed:
                line += f"  first counterexample: {r.counterexample}"
            lines.append(line)
        failed = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - failed}/{len(self.results)} properties passed")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok,
                "properties": [r.to_dict() for r in self.results]}


class RandomTable:
    """An integer-valued function on Z^d whose values are drawn on first use."""

    def __init__(self, rng: random.Random, spread: int = 5):
        self._rng = rng
        self._spread = spread
        self._values: dict[tuple, int] = {}

    def __call__(self, *args: int) -> int:
        if args not in self._values:
            self._values[args] = self._rng.randint(-self._spread, self._spread)
        return self._values[args]


def signed_sum(f: Callable[[int], Fraction], a: int, b: int) -> Fraction:
    return brute.signed_range_sum(f, a, b)


def _v(h):
    """``V_{a,b} h = h(a,b) + h(a+1,b+1) - h(a,b+1)`` on a two-argument function."""
    return lambda a, b: h(a, b) + h(a + 1, b + 1) - h(a, b + 1)


def _t(h):
    """``T_{a,b} = (id + S_{a,b}) V_{a,b}``."""
    v = _v(h)
    return lambda a, b: v(a, b) + v(b, a)


def _random_fraction(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def _random_poly(rng: random.Random, arity: int, degree: int, terms: int = 4) -> MultiPoly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, degree) for _ in range(arity)) + (rng.randint(0, 1),)
        out[e] = _random_fraction(rng)
    return MultiPoly(arity, out)


def _random_op(rng: random.Random, arity: int, terms: int = 3, spread: int = 2) -> ShiftOp:
    out = {}
    for _ in range(terms):
        out[tuple(rng.randint(-spread, spread) for _ in range(arity))] = _random_fraction(rng)
    return ShiftOp(arity, out)


def _random_invertible_op(rng: random.Random, arity: int) -> ShiftOp:
    while True:
        op = _random_op(rng, arity)
        if op.constant_term() != 0:
            return op


def _extended_sum(f, bounds: tuple[int, ...]) -> Fraction:
    """Extended summation where a single bound means 'no summation variables'."""
    if len(bounds) == 1:
        return Fraction(f(()))
    return brute.extended_sum(f, bounds)


def _merge_rhs(a, k: tuple[int, ...], i: int) -> Fraction:
    """Right side of the merge rule splitting the sum around k_i, k_{i+1} (1-based i)."""

    def inner(w, x, y, z):
        return _extended_sum(
            lambda left: _extended_sum(
                lambda mid: _extended_sum(lambda right: a(*(left + mid + right)), (z,) + k[i + 2:]),
                (x, k[i - 1], k[i], y)),
            k[:i - 2] + (w,))

    def merge_op(f, y):
        return f(y - 1, y) + f(y, y + 1) - f(y - 1, y + 1)

    return merge_op(lambda w, x: merge_op(lambda y, z: inner(w, x, y, z), k[i + 1]), k[i - 2])


def _t_identity_rhs(f, k: tuple[int, int, int, int]) -> Fraction:
    k1, k2, k3, k4 = k
    t12 = lambda l3: _t(lambda a, b: f(a, b, l3))
    t23 = lambda l1: _t(lambda b, c: f(l1, b, c))
    half_ = Fraction(1, 2)
    total = -half_ * (
        signed_sum(lambda l1: signed_sum(lambda l2: signed_sum(
            lambda l3: t12(l3)(l1, l2), k2, k4), k2 + 1, k3), k2 + 1, k3)
        + signed_sum(lambda l1: signed_sum(lambda l2: signed_sum(
            lambda l3: t23(l1)(l2, l3), k2, k3 - 1), k2, k3 - 1), k1, k2 + 1))
    # Delta_{l2} (id + E_{l1}) T_{l1,l2} f(l1, l2, k2) and its mirror image
    a = lambda l1, l2: t12(k2)(l1, l2) + t12(k2)(l1 + 1, l2)
    b = lambda l2, l3: t23(k2 + 1)(l2, l3) + t23(k2 + 1)(l2, l3 + 1)
    total += half_ * (
        signed_sum(lambda l1: signed_sum(lambda l2: a(l1, l2 + 1) - a(l1, l2), k2, k3 - 1), k2, k3 - 1)
        - signed_sum(lambda l2: signed_sum(lambda l3: b(l2 + 1, l3) - b(l2, l3), k2, k3 - 1), k2, k3 - 1))
    total += half_ * (t12(k2 + 1)(k2, k2) - t12(k3 + 1)(k2, k2) + t23(k2)(k2, k2) - t23(k3)(k2, k2))
    total -= t12(k2 + 1)(k2, k3) + t23(k2)(k2, k3)
    return total


def _random_tuple(rng: random.Random, m: int, lo: int, hi: int, strict: bool) -> tuple[int, ...]:
    if strict:
        return tuple(sorted(rng.sample(range(lo, hi + 1), m)))
    return tuple(rng.randint(lo, hi) for _ in range(m))


def _swap(k: tuple, i: int, j: int) -> tuple:
    k = list(k)
    k[i], k[j] = k[j], k[i]
    return tuple(k)


# recursion suite


def prop_cross_method(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("cross_method_equality")
    for n in range(1, min(b.max_rows, 6) + 1):
        m = half(n)
        for x in range(0, b.max_x + 1):
            for k in itertools.combinations(range(1, x + 1), m):
                values = {
                    "brute": brute.count_hmt_brute(n, x, k),
                    "recursion": brute.gamma_recursive(n, x, k),
                    "operator": formulas.gamma_value(n, x, k),
                    "beta_route": formulas.gamma_via_beta(n, x, k),
                    "gamma_bar_route": formulas.gamma_via_gamma_bar(n, x, k),
                }
                res.check(len(set(values.values())) == 1, lambda: f"n={n} x={x} k={k}: {values}")
    return res


def prop_extended_recursion(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("extended_recursion_matches_polynomial")
    top = min(b.max_rows, 5)
    for _ in range(b.instances):
        n = rng.randint(1, top)
        x = rng.randint(0, min(b.max_x, 4))
        k = _random_tuple(rng, half(n), -2, 6, strict=False)
        rec = brute.gamma_recursive(n, x, k, extended=True)
        poly = formulas.gamma_theorem1(n)(*k, x=x)
        res.check(rec == poly, lambda: f"n={n} x={x} k={k}: recursion {rec}, polynomial {poly}")
    return res


def prop_t_identity_three(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("t_operator_identity_three_variables")
    for _ in range(b.instances):
        f = RandomTable(rng)
        k = _random_tuple(rng, 4, -3, 6, strict=rng.random() < 0.5)
        g = lambda k2, k3: brute.extended_sum(lambda ls: f(*ls), (k[0], k2, k3, k[3]))
        lhs = _t(g)(k[1], k[2])
        rhs = _t_identity_rhs(f, k)
        res.check(lhs == rhs, lambda: f"k={k}: {lhs} != {rhs}")
    return res


def prop_t_identity_two(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("t_operator_identity_two_variables")
    for _ in range(b.instances):
        h = RandomTable(rng)
        k1, k2, k3 = _random_tuple(rng, 3, -3, 7, strict=rng.random() < 0.5)
        lhs = _t(lambda a, c: brute.extended_sum(lambda ls: h(*ls), (a, c, k3)))(k1, k2)
        rhs = -Fraction(1, 2) * signed_sum(
            lambda l1: signed_sum(lambda l2: _t(h)(l1, l2), k1, k2 - 1), k1, k2 - 1)
        res.check(lhs == rhs, lambda: f"k={(k1, k2, k3)}: {lhs} != {rhs}")
    return res


def prop_merge_rule(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("merge_rule")
    for _ in range(b.instances):
        m = rng.choice((5, 6))
        a = RandomTable(rng)
        k = _random_tuple(rng, m, -2, 7, strict=rng.random() < 0.5)
        i = rng.randint(2, m - 2)
        lhs = brute.extended_sum(lambda ls: a(*ls), k)
        rhs = _merge_rhs(a, k, i)
        res.check(lhs == rhs, lambda: f"m={m} i={i} k={k}: {lhs} != {rhs}")
    return res


def prop_hilf_one(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("reflected_sum_single")
    for _ in range(b.instances):
        x = rng.randint(0, b.max_x)
        free = RandomTable(rng, spread=9)
        # antisymmetric under l -> 2x+2-l
        f = lambda l: 0 if l == x + 1 else (free(l) if l > x + 1 else -free(2 * x + 2 - l))
        k1, k2 = rng.randint(-4, 2 * x + 4), rng.randint(-4, 2 * x + 4)
        g = lambda a, c: signed_sum(f, a, c)
        res.check(g(k1, k2) == g(k1, 2 * x + 1 - k2), lambda: f"x={x} k=({k1}, {k2})")
    return res


def prop_hilf_two(rng, b: Bounds) -> PropertyResult:
    # random rational combinations of count polynomials satisfy both hypotheses
    res = PropertyResult("reflected_sum_double")
    g3, g5 = formulas.gamma_theorem1(3), formulas.gamma_theorem1(5)
    for _ in range(b.instances):
        x = rng.randint(0, b.max_x)
        a, c, pin = _random_fraction(rng), _random_fraction(rng), rng.randint(-3, 6)
        f = lambda l1, l2: a * g3(l1, l2, x=x) + c * g5(pin, l1, l2, x=x)
        g = lambda k1, k2: brute.extended_sum(lambda ls: f(*ls), (k1, k2, x))
        k1, k2 = rng.randint(-3, 2 * x + 3), rng.randint(-3, 2 * x + 3)
        res.check(g(k1, k2) == -g(k1, 2 * x + 2 - k2),
                  lambda: f"x={x} k=({k1}, {k2}) coefficients ({a}, {c}) pin={pin}")
    return res


# operators suite


def prop_inversion_round_trip(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("operator_inversion_round_trip")
    for _ in range(b.instances):
        m = rng.randint(1, 3)
        d = rng.randint(0, 3)
        op = _random_invertible_op(rng, m)
        p = _random_poly(rng, m, d)
        inv = op_invert(op, d)
        forward = apply_op(op, apply_op(inv, p))
        backward = apply_op(inv, apply_op(op, p))
        res.check(forward == p and backward == p,
                  lambda: f"op={op.to_text()} d={d} p={p.to_text()}")
    return res


def prop_degree_preservation(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("invertible_operator_preserves_degree")
    for _ in range(b.instances):
        m = rng.randint(1, 3)
        op = _random_invertible_op(rng, m)
        p = _random_poly(rng, m, 3)
        q = apply_op(op, p)
        same = all(q.degree_in(K(i)) == p.degree_in(K(i)) for i in range(1, m + 1))
        res.check(same, lambda: f"op={op.to_text()} p={p.to_text()}")
    return res


def prop_degree_bound(rng, b: Bounds) -> PropertyResult:
    """Degree in each k_i is at most n-1: symbolically, and as a vanishing n-th difference of the recursion."""
    res = PropertyResult("degree_bound")
    for n in range(1, b.max_rows + 1):
        p = formulas.gamma_theorem1(n)
        for i in range(1, half(n) + 1):
            res.check(p.degree_in(K(i)) <= n - 1, lambda: f"n={n}: degree {p.degree_in(K(i))} in k{i}")
    for _ in range(b.instances):
        n = rng.randint(1, min(b.max_rows, 4))
        x = rng.randint(0, min(b.max_x, 3))
        k = _random_tuple(rng, half(n), -2, 5, strict=False)
        i = rng.randrange(half(n))
        diff = sum((-1) ** (n - j) * comb(n, j)
                   * brute.gamma_recursive(n, x, k[:i] + (k[i] + j,) + k[i + 1:], extended=True)
                   for j in range(n + 1))
        res.check(diff == 0, lambda: f"n={n} x={x} k={k}: n-th difference in k{i + 1} is {diff}")
    return res


def prop_inverse_form(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("inverse_operator_form")
    for n in range(1, min(b.max_rows, 5) + 1):
        res.check(formulas.gamma_via_inverse_ops(n) == formulas.gamma_theorem1(n), lambda: f"n={n}")
    return res


def prop_characterizing_constants(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("characterizing_constants")
    for n in range(1, min(b.max_rows, 5) + 1):
        base = formulas.gamma_base_unnormalized(n)
        char = formulas.characterizing_transform(n)
        ratio = _constant_ratio(char, base)
        res.check(ratio == formulas.leading_constant(n),
                  lambda: f"n={n}: ratio {ratio}, expected {formulas.leading_constant(n)}")
        res.check(formulas.quadruple_transform(n) == base, lambda: f"n={n}: four-fold product moved the base")
    return res


def _constant_ratio(p: MultiPoly, q: MultiPoly) -> Fraction | None:
    if not q:
        return None
    e, c = next(q.items())
    ratio = p.terms.get(e, Fraction(0)) / c
    return ratio if p == q * ratio else None


# symmetry suite


def prop_v_antisymmetry(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("v_antisymmetry")
    for n in range(1, b.max_rows + 1):
        m = half(n)
        p = formulas.gamma_theorem1(n)
        for i in range(1, m):
            q = apply_op(v_operator(m, i, i + 1), p)
            res.check(q.swap(i, i + 1) == -q, lambda: f"n={n} pair ({i}, {i + 1})")
    for _ in range(b.instances):
        n = rng.randint(3, min(max(b.max_rows, 3), 5))
        m, x = half(n), rng.randint(0, min(b.max_x, 3))
        i = rng.randrange(m - 1)
        k = _random_tuple(rng, m, -2, 6, strict=False)
        rec = lambda kk: brute.gamma_recursive(n, x, kk, extended=True)

        def vrec(kk):
            up = tuple(v + (j in (i, i + 1)) for j, v in enumerate(kk))
            return rec(kk) + rec(up) - rec(kk[:i + 1] + (kk[i + 1] + 1,) + kk[i + 2:])

        res.check(vrec(k) == -vrec(_swap(k, i, i + 1)), lambda: f"n={n} x={x} k={k} pair {i + 1}")
    return res


def _perm_sign(perm) -> int:
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def prop_gamma_star_antisymmetry(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("gamma_star_antisymmetry")
    stars = {n: formulas.gamma_star(n) for n in range(1, b.max_rows + 1)}
    for n, p in stars.items():
        for i, j in itertools.combinations(range(1, half(n) + 1), 2):
            res.check(p.swap(i, j) == -p, lambda: f"n={n} transposition ({i}, {j})")
    for _ in range(b.instances):
        n = rng.randint(1, b.max_rows)
        m, x = half(n), rng.randint(-3, 6)
        k = _random_tuple(rng, m, -5, 8, strict=False)
        perm = list(range(m))
        rng.shuffle(perm)
        permuted = tuple(k[v] for v in perm)
        lhs, rhs = stars[n](*permuted, x=x), _perm_sign(perm) * stars[n](*k, x=x)
        res.check(lhs == rhs, lambda: f"n={n} x={x} k={k} perm={perm}")
    return res


def prop_reflection(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("reflection_symmetry")
    for n in range(1, b.max_rows + 1):
        p = formulas.gamma_theorem1(n)
        sign = 1 if n % 2 else -1
        res.check(formulas.reflect(p, n, half(n)) == sign * p, lambda: f"n={n} polynomial identity")
    for _ in range(b.instances):
        n = rng.randint(1, min(b.max_rows, 5))
        m, x = half(n), rng.randint(0, min(b.max_x, 4))
        k = _random_tuple(rng, m, -2, 2 * x + 3, strict=False)
        sign, offset = (1, 2 * x + 1) if n % 2 else (-1, 2 * x + 2)
        mirrored = k[:-1] + (offset - k[-1],)
        lhs = brute.gamma_recursive(n, x, k, extended=True)
        rhs = sign * brute.gamma_recursive(n, x, mirrored, extended=True)
        res.check(lhs == rhs, lambda: f"n={n} x={x} k={k}: {lhs} vs {rhs}")
    return res


def _symmetrized_op(rng, m: int) -> ShiftOp:
    base = _random_op(rng, m, terms=2)
    out = ShiftOp(m)
    for perm in itertools.permutations(range(m)):
        out = out + base.permuted(perm)
    return out


def _antisymmetrized_poly(rng, m: int) -> MultiPoly:
    base = _random_poly(rng, m, 3, terms=3)
    out = MultiPoly.zero(m)
    for perm in itertools.permutations(range(m)):
        out = out + _perm_sign(perm) * _permute_poly(base, perm)
    return out


def _permute_poly(p: MultiPoly, perm) -> MultiPoly:
    return MultiPoly(p.arity, {tuple(e[perm[i]] for i in range(p.arity)) + (e[-1],): c
                               for e, c in p.terms.items()})


def prop_symmetric_operator(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("symmetric_operator_preserves_antisymmetry")
    for _ in range(b.instances):
        m = rng.randint(2, 3)
        op, p = _symmetrized_op(rng, m), _antisymmetrized_poly(rng, m)
        q = apply_op(op, p)
        ok = op.is_symmetric() and all(q.swap(i, j) == -q
                                       for i, j in itertools.combinations(range(1, m + 1), 2))
        res.check(ok, lambda: f"op={op.to_text()} p={p.to_text()}")
    return res


def prop_negative_exponent_reflection(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("reflection_invariant_operator")
    for _ in range(b.instances):
        m = rng.randint(1, 3)
        base = _random_op(rng, m)
        op = base + base.inverted_in(m)
        d, sign = rng.randint(-3, 5), rng.choice((1, -1))
        km = MultiPoly.var(K(m), m)
        q = _random_poly(rng, m, 3)
        mirror = lambda r: r.substitute(K(m), d - km)
        p = q + sign * mirror(q)
        out = apply_op(op, p)
        res.check(out == sign * mirror(out), lambda: f"op={op.to_text()} d={d} sign={sign}")
    return res


# generating-function suite


def prop_mt_fixtures(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("mt_generating_function_fixtures")
    for k, want in (((3, 2, 1), -1), ((-1, 2, 3), 7)):
        got = genfun.mt_gf_coeff(3, k)
        res.check(got == want, lambda: f"coefficient at {k} is {got}, expected {want}")
    got = formulas.alpha_value(3, (-1, 2, 3))
    res.check(got == 23, lambda: f"alpha at (-1, 2, 3) is {got}, expected 23")
    return res


def prop_mt_gf_alpha(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("mt_generating_function_matches_alpha")
    for n in (1, 2, 3):
        for k in itertools.product(range(0, 6), repeat=n):
            got, want = genfun.mt_gf_coeff(n, k), formulas.alpha_value(n, k)
            res.check(got == want, lambda: f"n={n} k={k}: {got} vs {want}")
    return res


def prop_mt_gf_series(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("mt_generating_function_series_oracle")
    for _ in range(b.instances):
        n = rng.randint(1, 3)
        k = _random_tuple(rng, n, -2, 3, strict=False)
        got, want = genfun.mt_gf_coeff(n, k), genfun.mt_gf_coeff_by_series(n, k)
        res.check(got == want, lambda: f"n={n} k={k}: {got} vs {want}")
    return res


def prop_asm_constant_term(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("asm_constant_term")
    for n in range(1, 7):
        got, want = genfun.asm_constant_term(n), formulas.asm_count(n)
        res.check(got == want, lambda: f"n={n}: {got} vs {want}")
    return res


def prop_hmt_gf(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("hmt_generating_function_matches_gamma")
    for n in range(1, min(b.max_rows, 5) + 1):
        m = half(n)
        for x in range(0, b.max_x + 1):
            c = genfun.hmt_region_bound(n, x)
            for k in itertools.product(range(-2, c + 1), repeat=m):
                got = genfun.hmt_gf_coefficient(n, x, k)
                want = formulas.gamma_value(n, x, k)
                res.check(got.in_region and got.value == want, lambda: f"n={n} x={x} k={k}")
    return res


def prop_determinants(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("binomial_determinants")
    for kind in (1, 2):
        for n in range(1, 5):
            ks = list(MultiPoly.gens(n)[:n])
            res.check(genfun.binom_determinant_symbolic(kind, n) == genfun.binom_product(kind, ks),
                      lambda: f"kind={kind} n={n} symbolic")
    for _ in range(b.instances):
        kind, n = rng.choice((1, 2)), rng.randint(1, 5)
        k = [_random_fraction(rng, 9) for _ in range(n)]
        got, want = genfun.binom_determinant(kind, k), genfun.binom_product(kind, k)
        res.check(got == want, lambda: f"kind={kind} k={k}: {got} vs {want}")
    return res


def prop_series_identities(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("series_identities")
    for _ in range(b.instances):
        parity, j = rng.choice(("odd", "even")), rng.randint(1, 5)
        z = rng.randint(-j - 1, j - 3 if parity == "odd" else j - 2)
        c = rng.randint(-6, 6)
        ok = genfun.series_identity_check(parity, j, z, c, max(b.window, 20))
        res.check(ok, lambda: f"{parity} j={j} z={z} c={c}")
    return res


def prop_vandermonde(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("monic_vandermonde")
    for _ in range(b.instances):
        n = rng.randint(1, 5)
        polys = [[_random_fraction(rng) for _ in range(j)] + [Fraction(1)] for j in range(n)]
        ys = [_random_fraction(rng, 9) for _ in range(n)]
        res.check(genfun.vandermonde_monic_check(polys, ys), lambda: f"polys={polys} ys={ys}")
    return res


# ASM suite


def prop_asm_chain(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("asm_chain")
    top = 6 if b.unsafe_sizes else 4
    for n in range(1, top + 1):
        values = {"enumeration": brute.count_asm_brute(n, allow_large=b.unsafe_sizes),
                  "alpha": formulas.alpha_value(n, range(1, n + 1)),
                  "constant_term": genfun.asm_constant_term(n),
                  "product": formulas.asm_count(n)}
        res.check(len(set(values.values())) == 1, lambda: f"n={n}: {values}")
    return res


def prop_asm_bijection(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("asm_monotone_triangle_bijection")
    for n in range(1, 5):
        seen = set()
        for a in brute.enumerate_asm(n):
            t = brute.asm_to_mt(a)
            seen.add(t)
            res.check(t.bottom == tuple(range(1, n + 1)) and brute.mt_to_asm(t) == a,
                      lambda: f"n={n}\n{a.to_text()}")
        res.check(len(seen) == brute.count_mt_brute(range(1, n + 1)), lambda: f"n={n}: not onto")
    return res


def prop_alpha_brute(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("alpha_matches_enumeration")
    for _ in range(b.instances):
        n = rng.randint(1, 4)
        k = _random_tuple(rng, n, -3, 6, strict=True)
        got, want = formulas.alpha_value(n, k), brute.count_mt_brute(k)
        res.check(got == want, lambda: f"k={k}: {got} vs {want}")
    return res


def prop_vsasm_chain(rng, b: Bounds) -> PropertyResult:
    res = PropertyResult("vsasm_chain")
    top = 3 if b.unsafe_sizes else 2
    for n in range(1, top + 1):
        values = {"filter": brute.count_vsasm_brute(2 * n + 1, allow_large=b.unsafe_sizes),
                  "product": formulas.vsasm_count(n),
                  "halved": brute.count_hmt_brute(2 * n, n, range(1, n + 1))}
        res.check(len(set(values.values())) == 1, lambda: f"n={n}: {values}")
    for n in (1, 2):
        images = set()
        for a in brute.enumerate_asm(2 * n + 1):
            if brute.is_vertically_symmetric(a):
                h = brute.vsasm_to_hmt(a)
                images.add(h.rows)
                res.check(h.bottom == tuple(range(1, n + 1)) and len(h.rows) == 2 * n,
                          lambda: f"size {2 * n + 1}\n{a.to_text()}")
        res.check(len(images) == formulas.vsasm_count(n), lambda: f"size {2 * n + 1}: not injective")
    return res


PROPERTIES: dict[str, list[Callable[[random.Random, Bounds], PropertyResult]]] = {
    "recursion": [prop_cross_method, prop_extended_recursion, prop_t_identity_three,
                  prop_t_identity_two, prop_merge_rule, prop_hilf_one, prop_hilf_two],
    "operators": [prop_inversion_round_trip, prop_degree_preservation, prop_degree_bound,
                  prop_inverse_form, prop_characterizing_constants],
    "symmetry": [prop_v_antisymmetry, prop_gamma_star_antisymmetry, prop_reflection,
                 prop_symmetric_operator, prop_negative_exponent_reflection],
    "genfun": [prop_mt_fixtures, prop_mt_gf_alpha, prop_mt_gf_series, prop_asm_constant_term,
               prop_hmt_gf, prop_determinants, prop_series_identities, prop_vandermonde],
    "asm": [prop_asm_chain, prop_asm_bijection, prop_alpha_brute, prop_vsasm_chain],
}


def run_suite(suite: str = "all", bounds: Bounds | None = None, seed: int = 0) -> VerifyReport:
    if suite not in SUITES:
        raise InvalidInputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    bounds = bounds or Bounds()
    chosen = [p for name, props in PROPERTIES.items() if suite in ("all", name) for p in props]
    results = [prop(random.Random(f"{seed}:{prop.__name__}"), bounds) for prop in chosen]
    return VerifyReport(suite, seed, sorted(results, key=lambda r: r.name))
