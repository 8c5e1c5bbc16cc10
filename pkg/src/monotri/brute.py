"""Brute-force ground truth: enumeration of triangles and ASMs, and the row recursion.

Everything here counts objects directly; the closed formulas in
:mod:`monotri.formulas` are checked against these functions.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import InvalidInputError, SizeGuardWarning

ASM_SIZE_GUARD = 6


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def _is_strict(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


# records


@dataclass(frozen=True)
class MonotoneTriangle:
    """Rows top to bottom; row i (1-based) has i entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if len(row) != i:
                raise InvalidInputError(f"row {i} has {len(row)} entries, expected {i}")
            if not _is_strict(row):
                raise InvalidInputError(f"row {i} is not strictly increasing: {row}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            for j, a in enumerate(upper):
                if not lower[j] <= a <= lower[j + 1]:
                    raise InvalidInputError(f"entry {a} does not interlace {lower}")

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1] if self.rows else ()

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "MonotoneTriangle":
        return cls(tuple(tuple(int(t) for t in line.split()) for line in text.strip().splitlines()))


@dataclass(frozen=True)
class HalvedMonotoneTriangle:
    """Rows top to bottom; row i has ceil(i/2) entries."""

    rows: tuple[tuple[int, ...], ...]
    strict_rows: bool = True

    def __post_init__(self):
        for i, row in enumerate(self.rows, start=1):
            if len(row) != _ceil_half(i):
                raise InvalidInputError(f"row {i} has {len(row)} entries, expected {_ceil_half(i)}")
            if self.strict_rows and not _is_strict(row):
                raise InvalidInputError(f"row {i} is not strictly increasing: {row}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            for j, a in enumerate(upper):
                if a < lower[j] or (j + 1 < len(lower) and a > lower[j + 1]):
                    raise InvalidInputError(f"entry {a} of {upper} violates the bounds from {lower}")

    @property
    def bottom(self) -> tuple[int, ...]:
        return self.rows[-1] if self.rows else ()

    def to_text(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


@dataclass(frozen=True)
class AsmMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise InvalidInputError("ASM must be square")
        for line in list(self.entries) + list(zip(*self.entries)):
            nonzero = [a for a in line if a]
            if any(a not in (-1, 1) for a in nonzero):
                raise InvalidInputError("ASM entries must lie in {-1, 0, 1}")
            if sum(nonzero) != 1 or any(a == b for a, b in zip(nonzero, nonzero[1:])):
                raise InvalidInputError(f"line {line} does not alternate with sum 1")

    @property
    def size(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        return "\n".join(" ".join(f"{a:2d}" for a in row) for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "AsmMatrix":
        return cls(tuple(tuple(int(t) for t in line.split()) for line in text.strip().splitlines()))


# halved monotone triangles


def _check_hmt_args(n: int, x: int, bottom: Sequence[int]) -> tuple[int, ...]:
    bottom = tuple(bottom)
    if n < 1:
        raise InvalidInputError(f"need at least one row, got n={n}")
    if len(bottom) != _ceil_half(n):
        raise InvalidInputError(f"bottom row needs {_ceil_half(n)} entries, got {len(bottom)}")
    if not _is_strict(bottom):
        raise InvalidInputError(f"bottom row must be strictly increasing: {bottom}")
    if bottom and bottom[-1] > x:
        raise InvalidInputError(f"bottom entry {bottom[-1]} exceeds the bound x={x}")
    return bottom


def _rows_above(row: tuple[int, ...], length: int, x: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """All rows of ``length`` entries that may sit directly above ``row``."""
    out: list[int] = []

    def place(j: int):
        if j == length:
            yield tuple(out)
            return
        lo = row[j]
        if out:
            lo = max(lo, out[-1] + 1 if strict else out[-1])
        hi = row[j + 1] if j + 1 < len(row) else x
        for a in range(lo, hi + 1):
            out.append(a)
            yield from place(j + 1)
            out.pop()

    yield from place(0)


def count_hmt_brute(n: int, x: int, bottom: Sequence[int], strict_rows: bool = True) -> int:
    """Number of halved monotone triangles with n rows, entries <= x and given bottom row."""
    bottom = _check_hmt_args(n, x, bottom)

    @lru_cache(maxsize=None)
    def count(i: int, row: tuple[int, ...]) -> int:
        # ``row`` is row i; count completions of rows 1..i-1
        if i == 1:
            return 1
        return sum(count(i - 1, up) for up in _rows_above(row, _ceil_half(i - 1), x, strict_rows))

    return count(n, bottom)


def count_weak_hmt_brute(n: int, x: int, bottom: Sequence[int]) -> int:
    return count_hmt_brute(n, x, bottom, strict_rows=False)


def enumerate_hmt(n: int, x: int, bottom: Sequence[int],
                  strict_rows: bool = True) -> Iterator[HalvedMonotoneTriangle]:
    bottom = _check_hmt_args(n, x, bottom)

    def build(i: int, rows: list[tuple[int, ...]]):
        if i == 1:
            yield HalvedMonotoneTriangle(tuple(reversed(rows)), strict_rows)
            return
        for up in _rows_above(rows[-1], _ceil_half(i - 1), x, strict_rows):
            rows.append(up)
            yield from build(i - 1, rows)
            rows.pop()

    yield from build(n, [bottom])


# monotone triangles


def count_mt_brute(bottom: Sequence[int]) -> int:
    """Number of monotone triangles with the given strictly increasing bottom row."""
    bottom = tuple(bottom)
    if not _is_strict(bottom):
        raise InvalidInputError(f"bottom row must be strictly increasing: {bottom}")

    @lru_cache(maxsize=None)
    def count(row: tuple[int, ...]) -> int:
        if len(row) <= 1:
            return 1
        return sum(count(up) for up in _mt_rows_above(row))

    return count(bottom)


def _mt_rows_above(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    out: list[int] = []

    def place(j: int):
        if j == len(row) - 1:
            yield tuple(out)
            return
        lo = row[j] if not out else max(row[j], out[-1] + 1)
        for a in range(lo, row[j + 1] + 1):
            out.append(a)
            yield from place(j + 1)
            out.pop()

    yield from place(0)


def enumerate_mt(bottom: Sequence[int]) -> Iterator[MonotoneTriangle]:
    bottom = tuple(bottom)
    if not _is_strict(bottom):
        raise InvalidInputError(f"bottom row must be strictly increasing: {bottom}")

    def build(rows: list[tuple[int, ...]]):
        if len(rows[-1]) <= 1:
            yield MonotoneTriangle(tuple(reversed(rows)))
            return
        for up in _mt_rows_above(rows[-1]):
            rows.append(up)
            yield from build(rows)
            rows.pop()

    yield from build([bottom])


# the row recursion with the extended summation operator


def signed_range_sum(f: Callable[[int], Fraction], a: int, b: int) -> Fraction:
    """``sum_{i=a}^{b} f(i)``, with ``-sum_{i=b+1}^{a-1} f(i)`` when a > b."""
    if a <= b:
        return sum((f(i) for i in range(a, b + 1)), Fraction(0))
    return -sum((f(i) for i in range(b + 1, a)), Fraction(0))


def extended_sum(f: Callable[[tuple[int, ...]], Fraction], k: Sequence[int]) -> Fraction:
    """Sum of f over interlacing sequences between the entries of ``k``.

    For strictly increasing ``k`` this runs over all strictly increasing
    ``(l_1, ..., l_{m-1})`` with ``k_i <= l_i <= k_{i+1}``.  For arbitrary
    integer ``k`` it is extended recursively (splitting on whether
    ``l_{m-1} = k_{m-1}``), which keeps the result polynomial in ``k``.
    """
    k = tuple(k)
    m = len(k)
    if m < 2:
        raise InvalidInputError(f"summation needs at least two bounds, got {m}")
    if m == 2:
        return signed_range_sum(lambda l: f((l,)), k[0], k[1])
    head = extended_sum(
        lambda ls: signed_range_sum(lambda l: f(ls + (l,)), k[-2] + 1, k[-1]), k[:-1])
    tail = extended_sum(lambda ls: f(ls + (k[-2],)), k[:-2] + (k[-2] - 1,))
    return head + tail


@lru_cache(maxsize=None)
def _gamma_rec(n: int, x: int, k: tuple[int, ...]) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n == 1:
        # a single-entry triangle; the k-sum below would be empty
        return Fraction(1)
    below = lambda ls: _gamma_rec(n - 1, x, ls)
    if n % 2 == 0:
        return extended_sum(below, k + (x,))
    return extended_sum(below, k)


def gamma_recursive(n: int, x: int, k: Sequence[int], extended: bool = False) -> Fraction:
    """Halved-triangle count via the row recursion.

    With ``extended=True`` arbitrary integer tuples are allowed and the value
    is that of the polynomial extension.
    """
    k = tuple(k)
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    if len(k) != _ceil_half(n):
        raise InvalidInputError(f"need {_ceil_half(n)} bottom entries for n={n}, got {len(k)}")
    if not extended:
        if not _is_strict(k) or (k and k[-1] > x):
            raise InvalidInputError(f"{k} is not a strictly increasing row bounded by x={x}")
    return _gamma_rec(n, x, k)


# alternating sign matrices


def _guard(n: int, limit: int, allow_large: bool, what: str) -> None:
    if n > limit:
        if not allow_large:
            raise InvalidInputError(f"{what} of size {n} exceeds the guard {limit}; "
                                    "pass allow_large=True to override")
        warnings.warn(f"{what} of size {n} is beyond the desk-scale guard {limit}",
                      SizeGuardWarning, stacklevel=3)


def _asm_rows(colsum: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Rows that keep every partial column sum in {0, 1} and alternate +1, -1, ..., +1."""
    n = len(colsum)
    row = [0] * n

    def place(j: int, want: int):
        # ``want`` is the sign of the next non-zero entry
        if j == n:
            if want == -1:
                yield tuple(row)
            return
        yield from place(j + 1, want)
        if (want == 1 and colsum[j] == 0) or (want == -1 and colsum[j] == 1):
            row[j] = want
            yield from place(j + 1, -want)
            row[j] = 0

    yield from place(0, 1)


def enumerate_asm(n: int, allow_large: bool = False) -> Iterator[AsmMatrix]:
    """All n x n alternating sign matrices, row by row."""
    if n < 1:
        raise InvalidInputError(f"ASM size must be >= 1, got {n}")
    _guard(n, ASM_SIZE_GUARD, allow_large, "ASM enumeration")

    def build(i: int, colsum: tuple[int, ...], rows: list):
        if i == n:
            if all(colsum):
                yield AsmMatrix(tuple(rows))
            return
        for row in _asm_rows(colsum):
            rows.append(row)
            yield from build(i + 1, tuple(c + r for c, r in zip(colsum, row)), rows)
            rows.pop()

    yield from build(0, (0,) * n, [])


def count_asm_brute(n: int, allow_large: bool = False) -> int:
    return sum(1 for _ in enumerate_asm(n, allow_large))


def is_vertically_symmetric(a: AsmMatrix) -> bool:
    return all(row == row[::-1] for row in a.entries)


def count_vsasm_brute(size: int, allow_large: bool = False) -> int:
    """Vertically symmetric ASMs of the given size, by filtering all ASMs."""
    return sum(1 for a in enumerate_asm(size, allow_large) if is_vertically_symmetric(a))


def asm_to_mt(a: AsmMatrix) -> MonotoneTriangle:
    """Row i of the triangle lists the columns whose partial sum through row i is 1."""
    rows = []
    colsum = [0] * a.size
    for row in a.entries:
        colsum = [c + r for c, r in zip(colsum, row)]
        rows.append(tuple(j + 1 for j, c in enumerate(colsum) if c))
    return MonotoneTriangle(tuple(rows))


def mt_to_asm(t: MonotoneTriangle) -> AsmMatrix:
    n = len(t.rows)
    if t.bottom != tuple(range(1, n + 1)):
        raise InvalidInputError(f"bottom row must be 1..{n}, got {t.bottom}")
    previous = [0] * n
    rows = []
    for row in t.rows:
        current = [0] * n
        for j in row:
            current[j - 1] = 1
        rows.append(tuple(c - p for c, p in zip(current, previous)))
        previous = current
    return AsmMatrix(tuple(rows))


def vsasm_to_hmt(a: AsmMatrix) -> HalvedMonotoneTriangle:
    """Keep the entries left of the middle column in rows 2..2n+1 of the monotone triangle."""
    size = a.size
    if size % 2 == 0:
        raise InvalidInputError("vertically symmetric ASMs have odd size")
    if not is_vertically_symmetric(a):
        raise InvalidInputError("matrix is not vertically symmetric")
    middle = (size + 1) // 2
    t = asm_to_mt(a)
    rows = tuple(tuple(e for e in row if e < middle) for row in t.rows[1:])
    return HalvedMonotoneTriangle(rows)
