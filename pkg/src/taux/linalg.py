"""Exact linear algebra over the rationals.

Elimination is fraction-free on integer rows (Bareiss update with
leftmost-nonzero pivoting); only the final back substitution touches
``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


def _q(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of Fraction

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    # -- construction -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_q(x) for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence], rows: int) -> "QMatrix":
        cols = [list(c) for c in cols]
        return cls(rows, len(cols), tuple(_q(cols[j][i]) for i in range(rows) for j in range(len(cols))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        z, o = Fraction(0), Fraction(1)
        return cls(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)))

    # -- access -------------------------------------------------------
    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- arithmetic ---------------------------------------------------
    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [Fraction(0)] * (n * p)
        for i in range(n):
            base = i * m
            for k in range(m):
                aik = a[base + k]
                if not aik:
                    continue
                bk = k * p
                o = i * p
                for j in range(p):
                    bkj = b[bk + j]
                    if bkj:
                        out[o + j] += aik * bkj
        return QMatrix(n, p, tuple(out))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in +")
        return QMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in -")
        return QMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scale(self, c) -> "QMatrix":
        c = _q(c)
        return QMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    @property
    def T(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows,
                       tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def select_cols(self, idx: Iterable[int]) -> "QMatrix":
        idx = list(idx)
        return QMatrix(self.rows, len(idx),
                       tuple(self.entries[i * self.cols + j] for i in range(self.rows) for j in idx))

    def select_rows(self, idx: Iterable[int]) -> "QMatrix":
        idx = list(idx)
        return QMatrix(len(idx), self.cols, tuple(x for i in idx for x in self.row(i)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.to_rows())
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"


def hstack(mats: Sequence[QMatrix], rows: Optional[int] = None) -> QMatrix:
    if not mats:
        return QMatrix.zeros(rows or 0, 0)
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise ValueError("hstack row mismatch")
    return QMatrix.from_rows([sum((m.row(i) for m in mats), []) for i in range(r)],
                             cols=sum(m.cols for m in mats))


def vstack(mats: Sequence[QMatrix], cols: Optional[int] = None) -> QMatrix:
    if not mats:
        return QMatrix.zeros(0, cols or 0)
    c = mats[0].cols
    if any(m.cols != c for m in mats):
        raise ValueError("vstack column mismatch")
    return QMatrix(sum(m.rows for m in mats), c, sum((m.entries for m in mats), ()))


def block_diag(mats: Sequence[QMatrix]) -> QMatrix:
    R = sum(m.rows for m in mats)
    C = sum(m.cols for m in mats)
    out = [[Fraction(0)] * C for _ in range(R)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m[i, j]
        r0 += m.rows
        c0 += m.cols
    return QMatrix.from_rows(out, cols=C)


# -- elimination ------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list:
    out = []
    for r in rows:
        den = 1
        for x in r:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _echelon(rows: list, ncols: int, pivot_limit: int) -> tuple:
    """Fraction-free row echelon form in place on integer rows.

    Pivots are searched only in the first ``pivot_limit`` columns and the
    first row with a nonzero entry is taken.  Returns the pivot columns.
    """
    m = len(rows)
    prev = 1
    r = 0
    pivots = []
    for c in range(pivot_limit):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        piv_row = rows[r]
        pv = piv_row[c]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (pv * row[j] - a * piv_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (pv * row[j]) // prev
            row[c] = 0
        prev = pv
        pivots.append(c)
        r += 1
    return tuple(pivots)


def rref(m: QMatrix, pivot_limit: Optional[int] = None) -> tuple:
    """Reduced row echelon form; returns (rows as Fraction lists, pivot columns)."""
    if pivot_limit is None:
        pivot_limit = m.cols
    rows = _integer_rows(m.to_rows())
    pivots = _echelon(rows, m.cols, pivot_limit)
    red = []
    for r, c in enumerate(pivots):
        pv = rows[r][c]
        red.append([Fraction(x, pv) for x in rows[r]])
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        src = red[r]
        for k in range(r):
            f = red[k][c]
            if f:
                tgt = red[k]
                for j in range(c, m.cols):
                    if src[j]:
                        tgt[j] -= f * src[j]
    zero_tail = [[Fraction(x) for x in rows[i]] for i in range(len(pivots), m.rows)]
    return red + zero_tail, pivots


def rank(m: QMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = _integer_rows(m.to_rows())
    return len(_echelon(rows, m.cols, m.cols))


def kernel_basis(m: QMatrix) -> QMatrix:
    """Columns form the canonical reduced-echelon basis of the right kernel."""
    n = m.cols
    if m.rows == 0:
        return QMatrix.identity(n)
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    cols = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        cols.append(v)
    return QMatrix.from_cols(cols, n)


def solve(m: QMatrix, b: QMatrix) -> Optional[QMatrix]:
    """One solution x of m @ x == b (free variables zero), or None."""
    if b.rows != m.rows:
        raise ValueError(f"solve: rhs has {b.rows} rows, matrix has {m.rows}")
    n = m.cols
    if m.rows == 0:
        return QMatrix.zeros(n, b.cols)
    aug = hstack([m, b])
    red, pivots = rref(aug, pivot_limit=n)
    for r in range(len(pivots), len(red)):
        if any(red[r][n:]):
            return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for r, c in enumerate(pivots):
        x[c] = red[r][n:]
    return QMatrix.from_rows(x, cols=b.cols)


def column_space_basis(m: QMatrix) -> QMatrix:
    """Pivot columns of m (a basis of its column space, in original coordinates)."""
    if m.cols == 0 or m.rows == 0:
        return QMatrix.zeros(m.rows, 0)
    rows = _integer_rows(m.to_rows())
    pivots = _echelon(rows, m.cols, m.cols)
    return m.select_cols(pivots)


def complement_basis(sub: QMatrix) -> QMatrix:
    """Standard basis vectors completing the columns of ``sub`` to a basis.

    ``sub`` must have linearly independent columns; vectors e_i are taken
    greedily in increasing i.
    """
    n = sub.rows
    aug = hstack([sub, QMatrix.identity(n)]) if sub.cols else QMatrix.identity(n)
    rows = _integer_rows(aug.to_rows())
    pivots = _echelon(rows, aug.cols, aug.cols)
    picked = [c - sub.cols for c in pivots if c >= sub.cols]
    return QMatrix.identity(n).select_cols(picked)


def inverse(m: QMatrix) -> QMatrix:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    x = solve(m, QMatrix.identity(m.rows))
    if x is None or rank(m) != m.rows:
        raise ValueError("matrix is singular")
    return x


def is_invertible(m: QMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def matrix_power(m: QMatrix, k: int) -> QMatrix:
    out = QMatrix.identity(m.rows)
    base = m
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out
