import itertools
from fractions import Fraction

import pytest

from monotri import InvalidInputError, SizeGuardWarning
from monotri.brute import (AsmMatrix, HalvedMonotoneTriangle, MonotoneTriangle, asm_to_mt,
                           count_asm_brute, count_hmt_brute, count_mt_brute, count_vsasm_brute,
                           count_weak_hmt_brute, enumerate_asm, enumerate_hmt, enumerate_mt,
                           extended_sum, gamma_recursive, is_vertically_symmetric, mt_to_asm,
                           signed_range_sum, vsasm_to_hmt)

DISPLAYED_ASM = AsmMatrix.from_text("""
 0  0  0  1  0  0  0
 0  1  0 -1  0  1  0
 1 -1  0  1  0 -1  1
 0  0  1 -1  1  0  0
 0  1 -1  1 -1  1  0
 0  0  1 -1  1  0  0
 0  0  0  1  0  0  0
""")

DISPLAYED_TRIANGLE = MonotoneTriangle.from_text("""
4
2 6
1 4 7
1 3 5 7
1 2 4 6 7
1 2 3 5 6 7
1 2 3 4 5 6 7
""")

DISPLAYED_HALVED = ((2,), (1,), (1, 3), (1, 2), (1, 2, 3), (1, 2, 3))


@pytest.mark.parametrize("n, x, bottom, want", [
    (1, 4, (2,), 1), (2, 5, (3,), 3), (4, 2, (1, 2), 3), (3, 3, (1, 2), 5),
])
def test_hmt_counts(n, x, bottom, want):
    assert count_hmt_brute(n, x, bottom) == want
    assert sum(1 for _ in enumerate_hmt(n, x, bottom)) == want


def test_weak_counts():
    assert count_weak_hmt_brute(2, 5, (3,)) == 3
    # the weak and strict counts only differ once two rows of length >= 2 appear
    assert count_weak_hmt_brute(3, 3, (1, 2)) == 5
    assert count_weak_hmt_brute(5, 3, (1, 2, 3)) > count_hmt_brute(5, 3, (1, 2, 3))


def test_weak_count_matches_manual_enumeration():
    # rows: (a) above (b) above (1, 2); b in [1, 2]; a in [b, x]
    x = 3
    manual = sum(1 for b in (1, 2) for a in range(b, x + 1))
    assert count_weak_hmt_brute(3, x, (1, 2)) == manual == 5


@pytest.mark.parametrize("n, x, bottom", [(2, 2, (3,)), (3, 4, (1,)), (3, 4, (2, 2)), (0, 1, ())])
def test_hmt_rejects_bad_input(n, x, bottom):
    with pytest.raises(InvalidInputError):
        count_hmt_brute(n, x, bottom)


def test_enumerated_hmts_are_valid_and_distinct():
    found = list(enumerate_hmt(5, 4, (1, 2, 4)))
    assert len(set(found)) == len(found) == count_hmt_brute(5, 4, (1, 2, 4))
    for h in found:
        assert all(max(row) <= 4 for row in h.rows)


@pytest.mark.parametrize("bottom, want", [((5,), 1), ((1, 2, 3), 7), ((1, 2), 2)])
def test_mt_counts(bottom, want):
    assert count_mt_brute(bottom) == want
    assert sum(1 for _ in enumerate_mt(bottom)) == want


def test_mt_rejects_non_strict_bottom():
    with pytest.raises(InvalidInputError):
        count_mt_brute((1, 1))


def test_signed_range_convention():
    f = lambda i: Fraction(i)
    assert signed_range_sum(f, 5, 3) == -4
    assert signed_range_sum(f, 4, 3) == 0
    assert signed_range_sum(f, 1, 3) == 6


def test_extended_sum_examples():
    assert extended_sum(lambda ls: Fraction(ls[0]), (5, 3)) == -4
    assert extended_sum(lambda ls: Fraction(ls[0]), (1, 3)) == 6
    with pytest.raises(InvalidInputError):
        extended_sum(lambda ls: 1, (1,))


def test_extended_sum_counts_interleavings_on_strict_bounds():
    k = (1, 3, 4, 7)
    brute = sum(1 for ls in itertools.product(range(1, 8), repeat=3)
                if all(k[i] <= ls[i] <= k[i + 1] for i in range(3)) and ls[0] < ls[1] < ls[2])
    assert extended_sum(lambda ls: 1, k) == brute


def test_recursion_examples():
    assert gamma_recursive(0, 3, ()) == 1
    assert gamma_recursive(2, 5, (3,)) == 3
    assert gamma_recursive(3, 10, (4, 2), extended=True) == -8
    with pytest.raises(InvalidInputError):
        gamma_recursive(3, 10, (4, 2))


def test_recursion_matches_enumeration():
    for n in range(1, 6):
        for x in range(0, 5):
            for k in itertools.combinations(range(1, x + 1), (n + 1) // 2):
                assert gamma_recursive(n, x, k) == count_hmt_brute(n, x, k), (n, x, k)


@pytest.mark.parametrize("n, want", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_asm_enumeration(n, want):
    assert count_asm_brute(n) == want


def test_asm_guard():
    with pytest.raises(InvalidInputError):
        next(enumerate_asm(7))
    with pytest.warns(SizeGuardWarning):
        next(enumerate_asm(7, allow_large=True))


def test_asm_records_reject_bad_matrices():
    with pytest.raises(InvalidInputError):
        AsmMatrix(((1, 0), (1, 0)))
    with pytest.raises(InvalidInputError):
        AsmMatrix(((0, 1, 0), (1, 1, -1), (0, -1, 1)))
    with pytest.raises(InvalidInputError):
        MonotoneTriangle(((2,), (1, 1)))
    with pytest.raises(InvalidInputError):
        HalvedMonotoneTriangle(((1,), (2,)))


def test_displayed_matrix_maps_to_displayed_triangle():
    assert asm_to_mt(DISPLAYED_ASM) == DISPLAYED_TRIANGLE
    assert mt_to_asm(DISPLAYED_TRIANGLE) == DISPLAYED_ASM


def test_identity_maps_to_staircase():
    identity = AsmMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert asm_to_mt(identity).rows == ((1,), (1, 2), (1, 2, 3))


def test_bijection_round_trips_exhaustively():
    for n in range(1, 6):
        triangles = set()
        for a in enumerate_asm(n):
            t = asm_to_mt(a)
            assert mt_to_asm(t) == a
            triangles.add(t)
        assert len(triangles) == count_mt_brute(range(1, n + 1))
        assert triangles == set(enumerate_mt(range(1, n + 1)))


def test_mt_to_asm_needs_staircase_bottom():
    with pytest.raises(InvalidInputError):
        mt_to_asm(MonotoneTriangle(((2,), (1, 3))))


def test_displayed_symmetric_matrix_maps_to_displayed_halved_array():
    assert is_vertically_symmetric(DISPLAYED_ASM)
    assert vsasm_to_hmt(DISPLAYED_ASM).rows == DISPLAYED_HALVED


def test_vsasm_correspondence_small():
    sym = [a for a in enumerate_asm(3) if is_vertically_symmetric(a)]
    assert len(sym) == 1
    assert vsasm_to_hmt(sym[0]).rows == ((1,), (1,))
    images = {vsasm_to_hmt(a) for a in enumerate_asm(5) if is_vertically_symmetric(a)}
    assert images == set(enumerate_hmt(4, 2, (1, 2)))
    assert count_vsasm_brute(3) == 1 and count_vsasm_brute(5) == 3


def test_vsasm_conversion_rejects_asymmetric_input():
    with pytest.raises(InvalidInputError):
        vsasm_to_hmt(AsmMatrix(((0, 1, 0), (1, 0, 0), (0, 0, 1))))
    with pytest.raises(InvalidInputError):
        vsasm_to_hmt(AsmMatrix(((1, 0), (0, 1))))


def test_text_round_trips():
    assert AsmMatrix.from_text(DISPLAYED_ASM.to_text()) == DISPLAYED_ASM
    assert MonotoneTriangle.from_text(DISPLAYED_TRIANGLE.to_text()) == DISPLAYED_TRIANGLE
