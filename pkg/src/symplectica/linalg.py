"""Dense matrices over Q with exact Gaussian elimination.

Sizes in this package stay below a few hundred rows, so a plain
list-of-Fractions representation is fast enough and keeps every identity an
exact equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = ["QMatrix", "span_rank", "relative_rank"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class QMatrix:
    """Immutable ``nrows x ncols`` matrix of Fractions.

    Zero-sized shapes are allowed; maps into or out of the zero space show up
    at the ends of every graded complex.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        return cls._raw(tuple((_ZERO,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls._raw(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n, n
        )

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "QMatrix":
        cols = [tuple(Fraction(x) for x in c) for c in cols]
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(nrows)), nrows, len(cols))

    @classmethod
    def _raw(cls, rows, nrows, ncols) -> "QMatrix":
        m = object.__new__(cls)
        m.rows, m.nrows, m.ncols = rows, nrows, ncols
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "QMatrix":
        return QMatrix._raw(
            tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.ncols, self.nrows
        )

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.T.rows
            rows = tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), _ZERO) for c in ocols)
                for r in self.rows
            )
            return QMatrix._raw(rows, self.nrows, other.ncols)
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec) if a and b), _ZERO) for r in self.rows)

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.nrows,
            self.ncols,
        )

    def __neg__(self) -> "QMatrix":
        return self.scale(-1)

    def scale(self, c) -> "QMatrix":
        c = Fraction(c)
        return QMatrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.nrows, self.ncols)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def __repr__(self):
        return f"QMatrix({[[str(a) for a in r] for r in self.rows]!r}, ncols={self.ncols})"

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return QMatrix._raw(
            tuple(r + s for r, s in zip(self.rows, other.rows)), self.nrows, self.ncols + other.ncols
        )

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(self.ncols):
            pr = next((i for i in range(row, self.nrows) if m[i][col]), None)
            if pr is None:
                continue
            m[row], m[pr] = m[pr], m[row]
            inv = 1 / m[row][col]
            m[row] = [x * inv for x in m[row]]
            for i in range(self.nrows):
                if i != row and m[i][col]:
                    f = m[i][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        return m, pivots

    def rank(self) -> int:
        if self.nrows == 0 or self.ncols == 0:
            return 0
        if self.nrows < self.ncols:
            return len(self.T.rref()[1])
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Basis of the kernel, one vector per free column."""
        if self.nrows == 0:
            return [tuple(_ONE if i == j else _ZERO for i in range(self.ncols)) for j in range(self.ncols)]
        r, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [_ZERO] * self.ncols
            v[f] = _ONE
            for i, p in enumerate(pivots):
                v[p] = -r[i][f]
            basis.append(tuple(v))
        return basis

    def column_basis(self) -> list[tuple[Fraction, ...]]:
        """Linearly independent columns spanning the column space."""
        if self.nrows == 0:
            return []
        _, pivots = self.rref()
        return [self.column(j) for j in pivots]

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...] | None:
        """One solution ``x`` of ``self @ x == rhs``, or None if inconsistent."""
        rhs = tuple(Fraction(x) for x in rhs)
        if len(rhs) != self.nrows:
            raise ValueError("rhs length mismatch")
        aug = QMatrix._raw(tuple(r + (b,) for r, b in zip(self.rows, rhs)), self.nrows, self.ncols + 1)
        r, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [_ZERO] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = r[i][self.ncols]
        return tuple(x)

    def inverse(self) -> "QMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = self.hstack(QMatrix.identity(n))
        r, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return QMatrix._raw(tuple(tuple(row[n:]) for row in r), n, n)

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        d = _ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return _ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] / m[c][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d


def span_rank(vectors: Sequence[Sequence], dim: int) -> int:
    """Dimension of the span of ``vectors`` in Q^dim."""
    if not vectors:
        return 0
    return QMatrix.from_columns(vectors, dim).rank()


def relative_rank(vectors: Sequence[Sequence], subspace: Sequence[Sequence], dim: int) -> int:
    """Dimension of span(vectors + subspace) / span(subspace)."""
    return span_rank(list(vectors) + list(subspace), dim) - span_rank(subspace, dim)
