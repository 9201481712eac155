"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator, zero is ``0/1``).  Matrices are immutable row-major grids of
fractions.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, ShapeMismatch, Singular

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` / ``"p"`` (or a bare int) into a Fraction."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"rationals must be strings or ints, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise ParseError(f"decimal notation not accepted: {text!r}")
    return value


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Immutable ``rows x cols`` matrix of Fractions.

    Zero-sized shapes (``3 x 0``, ``0 x 0``) are legal and common: they are
    the matrices of maps into or out of a zero homology group.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[Iterable] = ()):
        self.rows = rows
        self.cols = cols
        grid = tuple(tuple(Fraction(x) for x in row) for row in data)
        if not grid:
            grid = tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows))
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ShapeMismatch(f"data does not have shape {rows}x{cols}")
        self._data = grid

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ShapeMismatch("column length does not match row count")
        data = [[columns[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols}, {self.to_strings()})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return RatMatrix(self.rows, self.cols,
                         [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + (-other)

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols, [[c * x for x in r] for r in self._data])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        # skip zeros: boundary, chain and permutation matrices are mostly empty
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        odata = other._data
        for i, row in enumerate(self._data):
            acc = out[i]
            for k, a in enumerate(row):
                if a == 0:
                    continue
                for j, b in enumerate(odata[k]):
                    if b:
                        acc[j] += a * b
        return RatMatrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        return tuple(sum((a * Fraction(v) for a, v in zip(r, vec) if a and v), ZERO)
                     for r in self._data)

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, [list(c) for c in zip(*self._data)]
                         if self.rows else [])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ShapeMismatch(f"trace of non-square {self.shape} matrix")
        return sum((self._data[i][i] for i in range(self.rows)), ZERO)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return RatMatrix(self.rows, self.cols + other.cols,
                         [r + s for r, s in zip(self._data, other._data)])

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal column counts")
        return RatMatrix(self.rows + other.rows, self.cols, self._data + other._data)

    def select_rows(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix(len(idx), self.cols, [self._data[i] for i in idx])

    def select_columns(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix(self.rows, len(idx), [[r[j] for j in idx] for r in self._data])


def kron(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Kronecker product, row index ``i*b.rows + k``."""
    data = []
    for i in range(a.rows):
        for k in range(b.rows):
            data.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return RatMatrix(a.rows * b.rows, a.cols * b.cols, data)


def block_diag(blocks: Sequence[RatMatrix]) -> RatMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return RatMatrix(rows, cols, out)


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Pivot rule: for each column left to right, the first row (top to bottom,
    at or below the current pivot row) with a nonzero entry.  This makes all
    downstream bases deterministic.
    """
    a = m.to_lists()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(m.rows, m.cols, a) if m.rows else m, tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Null space basis: one vector per free column of the RREF, ascending.

    Each vector has a 1 in its free coordinate, 0 in the other free
    coordinates, and back-substituted values in the pivot coordinates.
    """
    red, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for row, pc in enumerate(pivots):
            v[pc] = -red[row, free]
        basis.append(tuple(v))
    return basis


def kernel_matrix(m: RatMatrix) -> RatMatrix:
    return RatMatrix.from_columns(kernel_basis(m), m.cols)


def independent_columns(m: RatMatrix) -> tuple[int, ...]:
    """Indices of the greedy (left to right) maximal independent column set."""
    return rref(m)[1]


def invert(m: RatMatrix) -> RatMatrix:
    if m.rows != m.cols:
        raise ShapeMismatch(f"cannot invert non-square {m.shape} matrix")
    n = m.rows
    red, pivots = rref(m.hstack(RatMatrix.identity(n)))
    if pivots[:n] != tuple(range(n)):
        raise Singular(f"matrix of size {n} has rank {sum(p < n for p in pivots)}")
    return red.select_columns(range(n, 2 * n))


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Return the X with ``a @ X == b``; ``a`` must have independent columns.

    Raises Singular if the columns of ``a`` are dependent or if some column
    of ``b`` is outside the column space of ``a``.
    """
    if a.rows != b.rows:
        raise ShapeMismatch("solve needs matching row counts")
    n = a.cols
    red, pivots = rref(a.hstack(b))
    if pivots[:n] != tuple(range(n)) and n:
        raise Singular("coefficient matrix has dependent columns")
    if any(p >= n for p in pivots):
        raise Singular("right-hand side is not in the column space")
    return red.select_rows(range(n)).select_columns(range(n, n + b.cols))
