import itertools
from fractions import Fraction

import pytest

from conftest import golden
from monotri import K, InvalidInputError, MultiPoly, VerificationError
from monotri import formulas as F
from monotri.brute import count_hmt_brute, count_mt_brute, count_weak_hmt_brute


def test_beta_examples():
    assert F.beta(2, 5, (3,)) == 3
    assert F.beta(1, 7, (4,)) == 1
    # enumeration gives 5 here; see test_brute for the manual count
    assert F.beta(3, 3, (1, 2)) == 5


def test_beta_matches_weak_enumeration():
    for n in range(1, 6):
        for x in range(0, 5):
            for k in itertools.combinations(range(1, x + 1), (n + 1) // 2):
                assert F.beta(n, x, k) == count_weak_hmt_brute(n, x, k), (n, x, k)


def test_beta_poly_matches_pointwise_beta():
    for n in range(1, 6):
        p = F.beta_poly(n)
        for k in itertools.product(range(-1, 3), repeat=(n + 1) // 2):
            assert p(*k, x=3) == F.beta(n, 3, k)


def test_base_examples():
    k1, k2, x = MultiPoly.gens(2)
    assert F.gamma_base(1) == MultiPoly.constant(1, 1)
    assert F.gamma_base(2) == MultiPoly.parse("x + 1 - k1", 1)
    assert F.gamma_base(3) == Fraction(1, 2) * (k2 - k1) * (2 * x + 1 - k1 - k2)


def test_theorem1_examples():
    k1, k2, x = MultiPoly.gens(2)
    assert F.gamma_theorem1(3) == Fraction(1, 2) * (2 * x + 2 - k1 - k2) * (k2 - k1 + 1)
    assert F.gamma_value(4, 2, (1, 2)) == 3
    assert F.gamma_theorem1(1) == MultiPoly.constant(1, 1)
    with pytest.raises(InvalidInputError):
        F.gamma_value(3, 2, (1,))


@pytest.mark.parametrize("n", range(1, 6))
def test_golden_lists(n):
    m = (n + 1) // 2
    assert F.gamma_theorem1(n) == golden(f"gamma_{n}", m)
    assert F.gamma_star(n) == golden(f"gamma_star_{n}", m)


def test_inverse_form_examples():
    assert F.gamma_via_inverse_ops(1) == MultiPoly.constant(1, 1)
    assert F.gamma_via_inverse_ops(2) == MultiPoly.parse("x + 1 - k1", 1)
    assert F.gamma_via_inverse_ops(3) == F.gamma_theorem1(3)


def test_inverse_form_detects_a_short_bound():
    with pytest.raises(VerificationError):
        F.gamma_via_inverse_ops(4, degree_bound=0)


@pytest.mark.parametrize("n, x, k, want", [(2, 5, (3,), 3), (3, 3, (1, 2), 5), (4, 2, (1, 2), 3)])
def test_operator_routes(n, x, k, want):
    assert F.gamma_via_beta(n, x, k) == want
    assert F.gamma_via_gamma_bar(n, x, k) == want
    assert count_hmt_brute(n, x, k) == want


@pytest.mark.parametrize("n, points", [
    (3, list(itertools.product(range(-2, 4), repeat=2))),
    (4, list(itertools.product(range(-2, 4), repeat=2))),
    (5, [(-2, 0, 3), (3, 2, 1), (0, 0, 0), (1, 5, -1)]),
])
def test_operator_routes_agree_off_the_count_region(n, points):
    for k in points:
        want = F.gamma_theorem1(n)(*k, x=2)
        assert F.gamma_via_beta(n, 2, k) == want
        assert F.gamma_via_gamma_bar(n, 2, k) == want


def test_gamma_bar_examples():
    assert F.gamma_bar(2) == MultiPoly.parse("x + 1 - k1", 1)
    assert F.gamma_bar(1) == MultiPoly.constant(1, 1)
    for n in range(1, 6):
        assert F.gamma_bar_to_gamma_poly(n) == F.gamma_theorem1(n)


def test_gamma_star_examples():
    k1, k2, x = MultiPoly.gens(2)
    assert F.gamma_star(3) == Fraction(1, 2) * (2 * x + 1 - k1 - k2) * (k2 - k1)
    assert F.gamma_star(1) == MultiPoly.constant(1, 1)


def test_alpha_examples():
    assert F.alpha_value(3, (1, 2, 3)) == 7
    assert F.alpha_value(3, (-1, 2, 3)) == 23
    assert F.alpha_value(3, (3, 2, 1)) == -1


def test_alpha_matches_enumeration_and_is_translation_invariant():
    for n in range(1, 5):
        for k in itertools.combinations(range(0, n + 2), n):
            assert F.alpha_value(n, k) == count_mt_brute(k)
            assert F.alpha_value(n, [v - 5 for v in k]) == F.alpha_value(n, k)


def test_product_formulas():
    assert [F.asm_count(n) for n in range(1, 8)] == [1, 2, 7, 42, 429, 7436, 218348]
    assert [F.vsasm_count(n) for n in range(1, 5)] == [1, 3, 26, 646]
    assert [F.alpha_value(n, range(1, n + 1)) for n in range(1, 6)] == [F.asm_count(n) for n in range(1, 6)]


@pytest.mark.parametrize("n, want", [(1, 1), (2, 1), (3, Fraction(1, 2)), (4, Fraction(1, 6)),
                                     (5, Fraction(1, 48))])
def test_leading_constant(n, want):
    assert F.leading_constant(n) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_leading_falling_factorial_coefficient(n):
    m = (n + 1) // 2
    top, coeff = F.leading_falling_factorial(F.gamma_theorem1(n))
    # for even n the top coefficient carries the sign (-1)^(n/2)
    sign = 1 if n % 2 else (-1) ** (n // 2)
    assert coeff == MultiPoly.constant(sign * F.leading_constant(n), m)


def test_falling_factorial_expansion_reconstructs_the_polynomial():
    from monotri.poly import falling_factorial
    p = F.gamma_theorem1(4)
    rebuilt = MultiPoly.zero(p.arity)
    for idx, coeff in F.falling_factorial_expansion(p).items():
        term = coeff
        for i, e in enumerate(idx, start=1):
            term = term * falling_factorial(MultiPoly.var(K(i), p.arity), e)
        rebuilt = rebuilt + term
    assert rebuilt == p


def test_characterizing_constants():
    for n in range(1, 6):
        base = F.gamma_base_unnormalized(n)
        assert F.characterizing_transform(n) == base * F.leading_constant(n)
        assert F.quadruple_transform(n) == base


def test_reflection_identities():
    for n in range(1, 7):
        p = F.gamma_theorem1(n)
        m = (n + 1) // 2
        assert F.reflect(p, n, m) == (p if n % 2 else -p)


def test_degree_bound():
    for n in range(1, 7):
        p = F.gamma_theorem1(n)
        assert max(p.degree_in(K(i)) for i in range(1, (n + 1) // 2 + 1)) <= n - 1


def test_formula_result_consistency():
    p = F.gamma_theorem1(2)
    F.FormulaResult(2, "theorem1", symbolic=p, value=Fraction(3), x=5, k=(3,))
    with pytest.raises(VerificationError):
        F.FormulaResult(2, "theorem1", symbolic=p, value=Fraction(4), x=5, k=(3,))
