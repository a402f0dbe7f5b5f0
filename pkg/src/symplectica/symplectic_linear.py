"""Exterior algebra of a symplectic vector space: pairing, star, L and Lambda.

Forms of degree ``k`` on a ``2m``-dimensional space are coefficient vectors over
the basis ``e^I``, ``I`` a strictly increasing index tuple, in the
lexicographic order of :func:`itertools.combinations`.

Sign conventions
----------------
* ``omega = sum_{i<j} omega[i][j] e^i ^ e^j`` with ``omega`` skew-symmetric.
* The Poisson bivector is ``Z = sum_{i<j} Pi[i][j] d_i ^ d_j`` with
  ``Pi = -omega^{-1}``, so ``Pi @ omega.T == 1``.  For ``omega = e^1 ^ e^2``
  this gives ``Z = d_1 ^ d_2``.
* Contraction by ``X ^ Y`` is ``i_Y i_X``; hence ``i_Z omega = m``.
* The pairing on ``Lambda^k`` is ``<a_1^...^a_k, b_1^...^b_k> = det[Pi(a_i, b_j)]``,
  the unique normalization making ``Lambda = *L*`` equal to ``i_Z``.
* ``beta ^ *alpha = <beta, alpha> omega^m/m!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Sequence

from .errors import DomainError, InvariantError
from .linalg import QMatrix

__all__ = [
    "ExteriorBasis",
    "GradedOperator",
    "SymplecticSpace",
    "contraction_matrix",
    "exterior_basis",
    "exterior_power",
    "lambda_op",
    "lefschetz_L",
    "pairing_matrix",
    "standard_space",
    "star",
    "wedge",
    "wedge_matrix",
]


@lru_cache(maxsize=None)
def exterior_basis(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k < 0 or k > n:
        return ()
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def _index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {I: i for i, I in enumerate(exterior_basis(n, k))}


@dataclass(frozen=True)
class ExteriorBasis:
    n: int
    degree: int

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return exterior_basis(self.n, self.degree)

    def __len__(self):
        return len(self.elements)

    def index(self, I: tuple[int, ...]) -> int:
        return _index(self.n, self.degree)[I]


def _merge_sign(I: Sequence[int], J: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted tuple of ``e^I ^ e^J``; sign 0 if indices repeat."""
    if set(I) & set(J):
        return 0, ()
    inversions = sum(1 for a in I for b in J if a > b)
    return (-1 if inversions % 2 else 1), tuple(sorted(I + tuple(J)))


def wedge(n: int, a: Sequence, ka: int, b: Sequence, kb: int) -> tuple[Fraction, ...]:
    """Coefficients of ``a ^ b`` for ``a`` of degree ``ka`` and ``b`` of degree ``kb``."""
    out = [Fraction(0)] * len(exterior_basis(n, ka + kb))
    if ka + kb > n:
        return tuple(out)
    idx = _index(n, ka + kb)
    for I, x in zip(exterior_basis(n, ka), a):
        if not x:
            continue
        for J, y in zip(exterior_basis(n, kb), b):
            if not y:
                continue
            sgn, K = _merge_sign(I, J)
            if sgn:
                out[idx[K]] += sgn * x * y
    return tuple(out)


def wedge_matrix(n: int, form: Sequence, form_degree: int, k: int) -> QMatrix:
    """Matrix of ``mu -> mu ^ form`` from ``Lambda^k`` to ``Lambda^(k + form_degree)``."""
    src = exterior_basis(n, k)
    tgt_dim = len(exterior_basis(n, k + form_degree))
    cols = []
    for j in range(len(src)):
        unit = [Fraction(0)] * len(src)
        unit[j] = Fraction(1)
        cols.append(wedge(n, unit, k, form, form_degree))
    return QMatrix.from_columns(cols, tgt_dim) if src else QMatrix.zeros(tgt_dim, 0)


def _contract_vector(a: int, I: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # i_{d_a} e^I
    if a not in I:
        return 0, ()
    r = I.index(a)
    return (-1 if r % 2 else 1), I[:r] + I[r + 1:]


def contraction_matrix(n: int, bivector: QMatrix, k: int) -> QMatrix:
    """Matrix of ``i_Z`` on ``Lambda^k`` for ``Z = sum_{a<b} Z[a][b] d_a ^ d_b``."""
    src = exterior_basis(n, k)
    tgt = exterior_basis(n, k - 2) if k >= 2 else ()
    idx = _index(n, k - 2) if k >= 2 else {}
    rows = [[Fraction(0)] * len(src) for _ in tgt]
    if k >= 2:
        for j, I in enumerate(src):
            for a, b in combinations(I, 2):
                z = bivector[a, b]
                if not z:
                    continue
                s1, I1 = _contract_vector(a, I)
                s2, I2 = _contract_vector(b, I1)
                rows[idx[I2]][j] += s1 * s2 * z
    return QMatrix(rows, ncols=len(src))


@lru_cache(maxsize=None)
def _minor_cache(rows, n, k):
    P = QMatrix._raw(rows, n, n)
    basis = exterior_basis(n, k)
    return tuple(
        tuple(QMatrix([[P[i, j] for j in J] for i in I], ncols=k).det() if k else Fraction(1) for J in basis)
        for I in basis
    )


def exterior_power(P: QMatrix, k: int) -> QMatrix:
    """``Lambda^k P``: entries are the ``k x k`` minors ``det P[I, J]``."""
    n = P.nrows
    basis = exterior_basis(n, k)
    return QMatrix(_minor_cache(P.rows, n, k), ncols=len(basis))


@dataclass(frozen=True)
class GradedOperator:
    """Linear map ``Lambda^source_degree -> Lambda^target_degree`` over canonical bases."""

    source_degree: int
    target_degree: int
    matrix: QMatrix

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        if other.target_degree != self.source_degree:
            raise ValueError(f"cannot compose: degree {other.target_degree} into {self.source_degree}")
        return GradedOperator(other.source_degree, self.target_degree, self.matrix @ other.matrix)

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._same(other)
        return GradedOperator(self.source_degree, self.target_degree, self.matrix + other.matrix)

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        self._same(other)
        return GradedOperator(self.source_degree, self.target_degree, self.matrix - other.matrix)

    def scale(self, c) -> "GradedOperator":
        return GradedOperator(self.source_degree, self.target_degree, self.matrix.scale(c))

    def _same(self, other):
        if (self.source_degree, self.target_degree) != (other.source_degree, other.target_degree):
            raise ValueError("degree mismatch")

    def apply(self, vec):
        return self.matrix @ vec


class SymplecticSpace:
    """``(V, omega)`` with ``dim V = 2m`` and its Poisson bivector."""

    def __init__(self, omega):
        omega = omega if isinstance(omega, QMatrix) else QMatrix(omega)
        n = omega.nrows
        if omega.ncols != n or n % 2:
            raise DomainError("omega must be an even-dimensional square matrix")
        if omega.T != -omega:
            raise DomainError("omega must be skew-symmetric")
        if omega.det() == 0:
            raise DomainError("omega is degenerate")
        self.omega = omega
        self.dim = n
        self.m = n // 2
        self.poisson = -omega.inverse()
        if self.poisson @ omega.T != QMatrix.identity(n):
            raise InvariantError("Pi @ omega.T != 1")
        self._cache: dict = {}

    @classmethod
    def from_form(cls, n: int, coeffs: Sequence) -> "SymplecticSpace":
        """From coefficients of a 2-form on the basis ``exterior_basis(n, 2)``."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in zip(exterior_basis(n, 2), coeffs):
            rows[i][j] += Fraction(c)
            rows[j][i] -= Fraction(c)
        return cls(QMatrix(rows))

    @property
    def omega_form(self) -> tuple[Fraction, ...]:
        return tuple(self.omega[i, j] for i, j in exterior_basis(self.dim, 2))

    def basis(self, k: int) -> ExteriorBasis:
        return ExteriorBasis(self.dim, k)

    def rank(self, k: int) -> int:
        return len(exterior_basis(self.dim, k))

    def _cached(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def volume_coefficient(self) -> Fraction:
        """Coefficient of ``omega^m/m!`` on ``e^1 ^ ... ^ e^2m`` (the Pfaffian)."""

        def build():
            n, w = self.dim, self.omega_form
            acc, deg = (Fraction(1),), 0
            for _ in range(self.m):
                acc = wedge(n, acc, deg, w, 2)
                deg += 2
            return acc[0] / factorial(self.m)

        return self._cached("vol", build)

    def omega_power(self, j: int) -> tuple[Fraction, ...]:
        """Coefficients of ``omega^j`` (not divided by ``j!``)."""

        def build():
            acc, deg = (Fraction(1),), 0
            for _ in range(j):
                acc = wedge(self.dim, acc, deg, self.omega_form, 2)
                deg += 2
            return acc

        return self._cached(("omega_power", j), build)

    def _check_degree(self, k: int):
        if not 0 <= k <= self.dim:
            raise DomainError(f"degree {k} outside 0..{self.dim}")


def pairing_matrix(sp: SymplecticSpace, k: int) -> QMatrix:
    """Gram matrix of the Poisson pairing on ``Lambda^k``."""
    sp._check_degree(k)
    return sp._cached(("pairing", k), lambda: exterior_power(sp.poisson, k))


def star(sp: SymplecticSpace, k: int) -> GradedOperator:
    """Symplectic star ``Lambda^k -> Lambda^(2m-k)``, from ``beta ^ *alpha = <beta, alpha> vol``."""
    sp._check_degree(k)

    def build():
        n = sp.dim
        src = exterior_basis(n, k)
        comp = exterior_basis(n, n - k)
        # W[I, K]: coefficient of e^top in e^I ^ e^K
        W = QMatrix([[_merge_sign(I, K)[0] for K in comp] for I in src], ncols=len(comp))
        rhs = pairing_matrix(sp, k).scale(sp.volume_coefficient())
        return GradedOperator(k, n - k, W.inverse() @ rhs)

    return sp._cached(("star", k), build)


def lefschetz_L(sp: SymplecticSpace, k: int) -> GradedOperator:
    """``L(mu) = mu ^ omega`` on ``Lambda^k``."""
    sp._check_degree(k)
    return sp._cached(("L", k), lambda: GradedOperator(k, k + 2, wedge_matrix(sp.dim, sp.omega_form, 2, k)))


def lambda_op(sp: SymplecticSpace, k: int) -> GradedOperator:
    """``Lambda`` on ``Lambda^k``, computed as ``i_Z`` and checked against ``*L*``."""
    sp._check_degree(k)

    def build():
        contraction = contraction_matrix(sp.dim, sp.poisson, k)
        if k >= 2:
            via_star = (star(sp, sp.dim - k + 2) @ lefschetz_L(sp, sp.dim - k) @ star(sp, k)).matrix
            if via_star != contraction:
                raise InvariantError(f"*L* != i_Z on degree {k}: sign convention mismatch")
        return GradedOperator(k, k - 2, contraction)

    return sp._cached(("Lambda", k), build)


def standard_space(m: int) -> SymplecticSpace:
    """``R^2m`` with ``omega = sum_a e^(2a-1) ^ e^(2a)``."""
    n = 2 * m
    rows = [[0] * n for _ in range(n)]
    for a in range(m):
        rows[2 * a][2 * a + 1] = 1
        rows[2 * a + 1][2 * a] = -1
    return SymplecticSpace(QMatrix(rows))
