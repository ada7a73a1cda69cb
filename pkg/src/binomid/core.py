"""Generalized factorials, binomial coefficients, triangles, and pyramids.

All entries are exact rationals; integrality is a property to query,
never an assumption of storage. Nothing here uses floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegralEntryError, UndefinedTermError
from .sequences import Sequence, from_list

ExactRational = Fraction

__all__ = [
    "ExactRational",
    "Pyramid",
    "Triangle",
    "col_seq",
    "fbinom",
    "fbinom_values",
    "ffactorial",
    "pyramid",
    "row_seq",
    "triangle",
]


def ffactorial(f: Sequence, n: int) -> int:
    """Product of the first n terms; the empty product is 1."""
    if n < 0:
        raise UndefinedTermError(f"factorial of negative index {n}", index=n)
    total = 1
    for i in range(1, n + 1):
        total *= f.term(i)
    return total


def _prefix_factorials(f: Sequence, n: int) -> list[int]:
    out = [1]
    for i in range(1, n + 1):
        out.append(out[-1] * f.term(i))
    return out


def fbinom(f: Sequence, n: int, k: int) -> Fraction:
    """The generalized binomial [n k] over f, as a reduced exact rational.

    Undefined (not zero) when k > n or an index is negative.
    """
    if n < 0 or k < 0 or k > n:
        raise UndefinedTermError(f"[{n} {k}] is undefined")
    num = 1
    for i in range(n - k + 1, n + 1):
        num *= f.term(i)
    den = 1
    for i in range(1, k + 1):
        den *= f.term(i)
    return Fraction(num, den)


def _recip(q: Fraction) -> Fraction:
    return Fraction(q.denominator, q.numerator)


def fbinom_values(values, n: int, k: int) -> Fraction:
    """[n k] over an explicit 1-indexed list of exact nonzero values.

    The list may hold integers or fractions; the result is exact either way.
    """
    if n < 0 or k < 0 or k > n:
        raise UndefinedTermError(f"[{n} {k}] is undefined")
    if n > len(values):
        raise UndefinedTermError(f"[{n} {k}] needs {n} terms, have {len(values)}")
    num = Fraction(1)
    for i in range(n - k + 1, n + 1):
        num *= Fraction(values[i - 1])
    den = Fraction(1)
    for i in range(1, k + 1):
        den *= Fraction(values[i - 1])
    return num * _recip(den)


@dataclass(frozen=True)
class Triangle:
    """The triangular array of [n k] entries for 0 <= k <= n <= depth."""

    source: Sequence
    depth: int
    rows: tuple[tuple[Fraction, ...], ...]

    def entry(self, n: int, k: int) -> Fraction:
        if not (0 <= k <= n <= self.depth):
            raise UndefinedTermError(f"[{n} {k}] outside triangle of depth {self.depth}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        if not (0 <= n <= self.depth):
            raise UndefinedTermError(f"row {n} outside triangle of depth {self.depth}")
        return self.rows[n]

    def first_non_integral(self) -> tuple[int, int, Fraction] | None:
        """(n, k, value) of the first non-integer entry in row order, or None."""
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                if value.denominator != 1:
                    return (n, k, value)
        return None

    def is_integral(self) -> bool:
        return self.first_non_integral() is None


def triangle(f: Sequence, depth: int) -> Triangle:
    """Build the triangle to the given depth, capped at a finite length.

    Each f-factorial is computed once and entries are formed by exact
    division, so row construction reuses all prior products.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if f.length is not None:
        depth = min(depth, f.length)
    fact = _prefix_factorials(f, depth)
    rows = tuple(
        tuple(Fraction(fact[n], fact[k] * fact[n - k]) for k in range(n + 1))
        for n in range(depth + 1)
    )
    return Triangle(f, depth, rows)


def _require_unit_first(f: Sequence) -> None:
    first = f.term(1)
    if first != 1:
        raise ValueError(f"{f.name}: first term must be 1, got {first}")


def row_seq(f: Sequence, m: int) -> Sequence:
    """Row m of the triangle of f, as a finite sequence of m+1 integers.

    Fails with the offending entry if any required value is non-integral.
    """
    if m < 0:
        raise ValueError("row index must be nonnegative")
    _require_unit_first(f)
    terms = []
    for j in range(m + 1):
        value = fbinom(f, m, j)
        if value.denominator != 1:
            raise NonIntegralEntryError(m, j, value)
        terms.append(value.numerator)
    return from_list(terms, name=f"row({m},{f.name})")


def col_seq(f: Sequence, j: int) -> Sequence:
    """Column j of the triangle of f: term N is [N+j-1 j].

    Lazy; a non-integral entry surfaces on materialization with its witness.
    Column 1 reproduces f itself when f starts with 1.
    """
    if j < 0:
        raise ValueError("column index must be nonnegative")
    _require_unit_first(f)
    length = None if f.length is None else max(f.length - j + 1, 0)

    def rule(n: int) -> int:
        value = fbinom(f, n + j - 1, j)
        if value.denominator != 1:
            raise NonIntegralEntryError(n + j - 1, j, value)
        return value.numerator

    return Sequence(f"col({j},{f.name})", rule, length=length)


@dataclass(frozen=True)
class Pyramid:
    """Stack of triangles built from the rows of a base triangle.

    Slice m is the triangle of row m, kept to depth m, so each slice has
    m+1 entries along every edge and all boundary entries are 1.
    """

    source: Sequence
    depth: int
    slices: tuple[Triangle, ...]

    def slice(self, m: int) -> Triangle:
        if not (0 <= m <= self.depth):
            raise UndefinedTermError(f"slice {m} outside pyramid of depth {self.depth}")
        return self.slices[m]

    def first_non_integral(self) -> tuple[int, int, int, Fraction] | None:
        """(m, n, k, value) of the first non-integer entry, or None."""
        for m, tri in enumerate(self.slices):
            bad = tri.first_non_integral()
            if bad is not None:
                return (m,) + bad
        return None


def pyramid(f: Sequence, depth: int) -> Pyramid:
    """Stack the row triangles of f up to the given depth.

    Requires f to start with 1; other inputs are rejected, not renormalized.
    Entries stay exact rationals: integrality is a result to classify, not
    a precondition of storage.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    _require_unit_first(f)
    slices = tuple(triangle(row_seq(f, m), m) for m in range(depth + 1))
    return Pyramid(f, depth, slices)
