"""Exact rational linear algebra on small dense matrices.

Every entry is a Python Fraction, so all results are exact. Floats are
rejected outright; there is no rounding anywhere in this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Rational = Fraction

# Guard for the combinatorial sweeps below; overridable per call.
DEFAULT_SUBSET_CAP = 250_000


class ExactMatError(Exception):
    """Base class for errors raised by this module."""


class ZeroPivot(ExactMatError):
    """Exchange-free elimination hit a zero pivot at 1-based step ``step``."""

    def __init__(self, step: int):
        super().__init__(f"zero pivot at elimination step {step}")
        self.step = step


class NotSymmetric(ExactMatError):
    pass


class DimensionMismatch(ExactMatError):
    pass


class SizeCapExceeded(ExactMatError):
    pass


class SingularMatrix(ExactMatError):
    pass


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("matrix entries must be rational, got bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"matrix entries must be rational, got {type(value).__name__}")


class Matrix:
    """Immutable dense matrix of Fractions.

    ``rows`` and ``cols`` are counts; entries are read with ``A[i, j]``
    using 0-based indices. Diagnostics reported by the functions in this
    module (pivot steps, minor sizes, row/column subsets) are 1-based to
    line up with vertex labels elsewhere in the package.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, shape: tuple[int, int] | None = None):
        rows = tuple(tuple(_coerce(x) for x in row) for row in data)
        if shape is None:
            if not rows:
                raise DimensionMismatch("cannot infer shape of an empty matrix; pass shape=")
            nrows, ncols = len(rows), len(rows[0])
        else:
            nrows, ncols = shape
            if len(rows) != nrows:
                raise DimensionMismatch(f"expected {nrows} rows, got {len(rows)}")
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows in matrix literal")
        self.rows = nrows
        self.cols = ncols
        self._data = rows

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [tuple(c) for c in columns]
        if not cols:
            if rows is None:
                raise DimensionMismatch("need explicit row count for a matrix with no columns")
            return cls.zeros(rows, 0)
        nrows = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(nrows)], shape=(nrows, len(cols)))

    @property
    def data(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._data

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "Matrix":
        return Matrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      shape=(self.cols, self.rows))

    def select(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        """Submatrix from 0-based row/column index sequences, in the given order."""
        return Matrix([[self._data[i][j] for j in col_idx] for i in row_idx],
                      shape=(len(row_idx), len(col_idx)))

    def mul_vector(self, vec: Sequence) -> tuple[Fraction, ...]:
        v = [_coerce(x) for x in vec]
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        return tuple(sum(r[j] * v[j] for j in range(self.cols)) for r in self._data)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
            bt = other.transpose()._data
            return Matrix([[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._data],
                          shape=(self.rows, other.cols))
        if isinstance(other, (int, Fraction)):
            s = _coerce(other)
            return Matrix([[x * s for x in row] for row in self._data], shape=(self.rows, self.cols))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._data, other._data)],
                      shape=(self.rows, self.cols))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    @property
    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        d = self._data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i + 1, self.cols))

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: {body})"


def gauss_steps(a: Matrix, t: int) -> Iterator[Matrix]:
    """Yield the matrix after each of the first ``t`` elimination steps.

    Step s divides row s by its pivot, zeroes column s below the pivot and
    applies the Schur update to the trailing block. No row exchanges are
    performed: a zero pivot raises ZeroPivot(s). Rows above the pivot are
    never touched again, so the processed staircase has unit pivots.
    """
    if not 0 <= t <= min(a.rows, a.cols):
        raise DimensionMismatch(f"step count {t} out of range for {a.rows}x{a.cols}")
    g = a.to_lists()
    for s in range(1, t + 1):
        p = g[s - 1][s - 1]
        if p == 0:
            raise ZeroPivot(s)
        pivot_row = g[s - 1]  # pre-division values feed the Schur update
        g[s - 1] = [x / p for x in pivot_row]
        for i in range(s, a.rows):
            row = g[i]
            f = row[s - 1]
            row[s - 1] = Fraction(0)
            if f:
                for j in range(s, a.cols):
                    row[j] -= f * pivot_row[j] / p
        yield Matrix(g, shape=(a.rows, a.cols))


def gauss_step_sequence(a: Matrix, t: int) -> Matrix:
    """Matrix after the first ``t`` exchange-free elimination steps (t=0 returns a)."""
    result = a
    for result in gauss_steps(a, t):
        pass
    return result


def determinant(a: Matrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination with row swaps."""
    if a.rows != a.cols:
        raise DimensionMismatch("determinant needs a square matrix")
    n = a.rows
    if n == 0:
        return Fraction(1)
    m = a.to_lists()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = pivot
    return sign * m[n - 1][n - 1]


def leading_principal_minor(a: Matrix, k: int) -> Fraction:
    """Determinant of the top-left k-by-k block, 1 <= k <= n."""
    if a.rows != a.cols:
        raise DimensionMismatch("leading principal minors need a square matrix")
    if not 1 <= k <= a.rows:
        raise ValueError(f"minor size {k} out of range 1..{a.rows}")
    idx = range(k)
    return determinant(a.select(idx, idx))


def rank(a: Matrix) -> int:
    """Rank by row-echelon elimination with row exchanges."""
    m = a.to_lists()
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        for i in range(r + 1, a.rows):
            f = m[i][c]
            if f:
                for j in range(c, a.cols):
                    m[i][j] -= f * m[r][j] / lead
        r += 1
        if r == a.rows:
            break
    return r


def has_generic_rank_profile(a: Matrix) -> tuple[bool, int]:
    """Whether the first rank(a) leading principal minors are all nonzero.

    Returns (decision, rank). The zero matrix vacuously qualifies with rank 0.
    """
    if a.rows != a.cols:
        raise DimensionMismatch("generic rank profile needs a square matrix")
    if not a.is_symmetric:
        raise NotSymmetric("generic rank profile is defined here for symmetric matrices")
    k = rank(a)
    for j in range(1, k + 1):
        if leading_principal_minor(a, j) == 0:
            return False, k
    return True, k


def _rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    m = a.to_lists()
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == a.rows:
            break
    return m, pivots


def null_space_basis(a: Matrix) -> Matrix:
    """Kernel basis from the reduced row echelon form.

    One basis column per free column of the RREF, in increasing free-column
    order: the free variable is set to 1 and each pivot variable to the
    negated RREF entry. Deterministic for a given input.
    """
    m, pivots = _rref(a)
    pivot_set = set(pivots)
    columns = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -m[row_idx][f]
        columns.append(v)
    return Matrix.from_columns(columns, rows=a.cols)


UNIQUE = "unique"
INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class LinearSolution:
    """Classification of A x = b with an explicit witness for each case."""

    status: str
    solution: tuple[Fraction, ...] | None = None
    kernel: Matrix | None = None

    @property
    def is_unique(self) -> bool:
        return self.status == UNIQUE


def solve_linear(a: Matrix, b: Sequence) -> LinearSolution:
    """Solve A x = b exactly, reporting unique/inconsistent/underdetermined."""
    rhs = [_coerce(x) for x in b]
    if len(rhs) != a.rows:
        raise DimensionMismatch(f"rhs of length {len(rhs)} against {a.rows} rows")
    aug = Matrix([list(row) + [rhs[i]] for i, row in enumerate(a.data)],
                 shape=(a.rows, a.cols + 1))
    m, pivots = _rref(aug)
    if a.cols in pivots:
        return LinearSolution(INCONSISTENT)
    particular = [Fraction(0)] * a.cols
    for row_idx, p in enumerate(pivots):
        particular[p] = m[row_idx][a.cols]
    kernel = null_space_basis(a)
    if kernel.cols == 0:
        return LinearSolution(UNIQUE, solution=tuple(particular))
    return LinearSolution(UNDERDETERMINED, solution=tuple(particular), kernel=kernel)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrix when none exists."""
    if a.rows != a.cols:
        raise DimensionMismatch("inverse needs a square matrix")
    n = a.rows
    aug = Matrix([list(row) + [1 if i == j else 0 for j in range(n)]
                  for i, row in enumerate(a.data)], shape=(n, 2 * n))
    m, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return Matrix([row[n:] for row in m], shape=(n, n))


@dataclass(frozen=True)
class PsdResult:
    """Outcome of the exact PSD test.

    ``rank`` counts the pivots consumed; it equals the matrix rank exactly
    when ``is_psd`` holds. ``witness`` satisfies x^T A x < 0 when not PSD.
    """

    is_psd: bool
    rank: int
    witness: tuple[Fraction, ...] | None


def psd_check(a: Matrix) -> PsdResult:
    """Decide positive semidefiniteness by symmetric elimination.

    Pivots on the greatest remaining diagonal entry (ties to the lowest
    index). A residual that is all zero certifies PSD; a nonpositive
    greatest diagonal with a nonzero residual yields an explicit witness
    vector, lifted back through the pivot stack so that x^T A x < 0 holds
    for the original matrix.
    """
    if a.rows != a.cols:
        raise DimensionMismatch("psd_check needs a square matrix")
    if not a.is_symmetric:
        raise NotSymmetric("psd_check needs a symmetric matrix")
    n = a.rows
    work = a.to_lists()
    active = list(range(n))
    steps: list[tuple[int, Fraction, dict[int, Fraction]]] = []
    while True:
        if all(work[i][j] == 0 for i in active for j in active):
            return PsdResult(True, len(steps), None)
        dmax, p = max(((work[i][i], i) for i in active), key=lambda t: (t[0], -t[1]))
        if dmax > 0:
            col = {q: work[q][p] for q in active if q != p}
            steps.append((p, dmax, col))
            active.remove(p)
            for i in active:
                f = work[i][p]
                if f:
                    for j in active:
                        work[i][j] -= f * work[p][j] / dmax
            continue
        # Not PSD: build a witness on the residual, then lift it.
        x: dict[int, Fraction] = {}
        neg = next((i for i in active if work[i][i] < 0), None)
        if neg is not None:
            x[neg] = Fraction(1)
        else:
            # All residual diagonals are zero, so some off-diagonal is not.
            i0, j0 = next((i, j) for i in active for j in active
                          if i < j and work[i][j] != 0)
            x[i0] = Fraction(1)
            x[j0] = Fraction(-1 if work[i0][j0] > 0 else 1)
        for p, d, col in reversed(steps):
            x[p] = -sum(col[q] * xv for q, xv in x.items()) / d
        witness = tuple(x.get(i, Fraction(0)) for i in range(n))
        value = sum(witness[i] * a[i, j] * witness[j] for i in range(n) for j in range(n))
        assert value < 0
        return PsdResult(False, len(steps), witness)


def all_square_submatrices_nonsingular(
    a: Matrix, m: int, cap: int = DEFAULT_SUBSET_CAP
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Brute-force check that every m-by-m submatrix has nonzero determinant.

    Subset pairs are scanned in lexicographic order; the first singular pair
    is returned as 1-based (row subset, column subset). Raises
    SizeCapExceeded when the number of pairs would exceed ``cap``.
    """
    if not 0 <= m <= min(a.rows, a.cols):
        raise DimensionMismatch(f"submatrix size {m} out of range for {a.rows}x{a.cols}")
    total = math.comb(a.rows, m) * math.comb(a.cols, m)
    if total > cap:
        raise SizeCapExceeded(f"{total} submatrices exceed the cap of {cap}")
    for alpha in itertools.combinations(range(a.rows), m):
        for beta in itertools.combinations(range(a.cols), m):
            if determinant(a.select(alpha, beta)) == 0:
                return False, (tuple(i + 1 for i in alpha), tuple(j + 1 for j in beta))
    return True, None
