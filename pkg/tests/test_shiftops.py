import itertools
from fractions import Fraction

import pytest

from monotri import (InvalidInputError, MultiPoly, NotInvertibleError, OperatorKind, ShiftOp,
                     apply_op, build_operator, op_invert)
from monotri.formulas import beta_poly, gamma_theorem1
from monotri.shiftops import apply_op_at, op_add, op_mul, swap_vars, v_operator


def E(m, i, t=1):
    return ShiftOp.shift(m, i, t)


def test_mul_examples():
    one = ShiftOp.identity(2)
    assert op_mul(E(2, 1), E(2, 1, -1)) == one
    a = E(2, 1) + E(2, 2) - E(2, 1) * E(2, 2)
    assert op_mul(a, one) == a
    assert len(a) == 3
    b = E(2, 2, -1) + 3 * one
    assert op_mul(a, b) == op_mul(b, a)
    assert op_add(a, b) == op_add(b, a)


def test_arity_mismatch():
    with pytest.raises(InvalidInputError):
        ShiftOp.identity(1) * ShiftOp.identity(2)
    with pytest.raises(InvalidInputError):
        apply_op(ShiftOp.identity(2), MultiPoly.gens(1)[0])


def test_apply_examples():
    k1, k2, x = MultiPoly.gens(2)
    assert apply_op(v_operator(2, 1, 2), k1 * k2) == k1 * k2 + k2 + 1
    p = k1 ** 3 - x * k2
    assert apply_op(ShiftOp.identity(2), p) == p
    q1, qx = MultiPoly.gens(1)
    assert apply_op(E(1, 1), qx - q1 + 1) == qx - q1


def test_application_is_a_homomorphism():
    k1, k2, x = MultiPoly.gens(2)
    a = E(2, 1) - 2 * E(2, 2, -1)
    b = v_operator(2, 1, 2)
    p = k1 ** 2 * k2 + x * k1
    assert apply_op(a * b, p) == apply_op(a, apply_op(b, p))
    assert apply_op(a + b, p) == apply_op(a, p) + apply_op(b, p)


def test_swap():
    k1, k2, x = MultiPoly.gens(2)
    assert swap_vars(k1 - k2, 1, 2) == k2 - k1
    assert swap_vars(k1 * k2 + x, 1, 2) == k1 * k2 + x
    p = k1 ** 2 * x + k2
    assert swap_vars(swap_vars(p, 1, 2), 1, 2) == p
    with pytest.raises(InvalidInputError):
        swap_vars(p, 1, 3)


def test_build_examples():
    assert build_operator(OperatorKind.THEOREM1, 1) == ShiftOp.identity(1)
    assert build_operator(OperatorKind.V_PRODUCT, 2) == ShiftOp.identity(2) + E(2, 2) * ShiftOp.delta(2, 1)
    assert apply_op(build_operator(OperatorKind.BETA_TO_GAMMA, 2), beta_poly(3)) == gamma_theorem1(3)
    with pytest.raises(InvalidInputError):
        build_operator(OperatorKind.INVERSE_FORM, 2)
    with pytest.raises(InvalidInputError):
        build_operator(OperatorKind.ALPHA, 0)


def test_every_kind_builds_for_small_arity():
    for kind in OperatorKind:
        for m in (1, 2, 3):
            op = build_operator(kind, m, degree_bound=2)
            assert op.arity == m


def test_invert_examples():
    assert op_invert(ShiftOp.identity(2), 4) == ShiftOp.identity(2)
    k1, k2, x = MultiPoly.gens(2)
    v = v_operator(2, 1, 2)
    p = k1 ** 2 * k2 ** 2
    inv = op_invert(v, 2)
    assert apply_op(v, apply_op(inv, p)) == p
    assert apply_op(inv, apply_op(v, p)) == p
    with pytest.raises(NotInvertibleError):
        op_invert(ShiftOp.delta(2, 1), 3)


def test_inverse_is_only_valid_up_to_the_bound():
    k1, x = MultiPoly.gens(1)
    op = 2 * ShiftOp.identity(1) + ShiftOp.delta(1, 1)
    inv = op_invert(op, 1)
    assert apply_op(op, apply_op(inv, k1)) == k1
    assert apply_op(op, apply_op(inv, k1 ** 3)) != k1 ** 3


def test_text_round_trip():
    op = E(2, 1, -1) * 3 + E(2, 2) * E(2, 1) - Fraction(1, 2) * ShiftOp.identity(2)
    assert ShiftOp.parse(op.to_text(), 2) == op
    assert "E1^-1" in op.to_text()


def test_pointwise_application_matches_symbolic():
    k1, k2, x = MultiPoly.gens(2)
    p = k1 ** 2 - 3 * k2 * x + k1 * k2
    op = build_operator(OperatorKind.THEOREM1, 2)
    q = apply_op(op, p)
    for a, b in itertools.product(range(-2, 3), repeat=2):
        assert apply_op_at(op, lambda kk: p(*kk, x=4), (a, b)) == q(a, b, x=4)


def test_symmetry_helpers():
    sym = E(2, 1) + E(2, 2)
    assert sym.is_symmetric()
    assert not (E(2, 1) + 2 * E(2, 2)).is_symmetric()
    assert E(2, 2, 3).inverted_in(2) == E(2, 2, -3)
