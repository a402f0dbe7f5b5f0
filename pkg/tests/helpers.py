"""Shared generators and helpers for tests."""

from __future__ import annotations

import random
from fractions import Fraction

from symplectica.linalg import QMatrix
from symplectica.symplectic_linear import lambda_op, lefschetz_L


def random_rational(rng: random.Random, span: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def random_omega(rng: random.Random, m: int) -> QMatrix:
    """Random nondegenerate skew rational matrix of size ``2m``."""
    n = 2 * m
    while True:
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                c = random_rational(rng)
                rows[i][j], rows[j][i] = c, -c
        mat = QMatrix(rows)
        if mat.det() != 0:
            return mat


def random_invertible(rng: random.Random, n: int) -> QMatrix:
    while True:
        mat = QMatrix([[random_rational(rng, 3) for _ in range(n)] for _ in range(n)])
        if mat.det() != 0:
            return mat


def sl2_commutator(sp, k):
    """Matrix of ``Lambda L - L Lambda`` on degree ``k``."""
    size = sp.rank(k)
    out = QMatrix.zeros(size, size)
    if k + 2 <= sp.dim:
        out = out + (lambda_op(sp, k + 2) @ lefschetz_L(sp, k)).matrix
    if k >= 2:
        out = out - (lefschetz_L(sp, k - 2) @ lambda_op(sp, k)).matrix
    return out


def mixed_identity_failures(cx) -> list[str]:
    """Names of the mixed-complex identities that fail on a ``ModelComplex``, checked degree by degree."""
    n = cx.n

    def rank(k):
        return cx.rank[k] if 0 <= k <= n else 0

    def op(table, k, shift):
        if 0 <= k <= n and 0 <= k + shift <= n:
            return table[k]
        return QMatrix.zeros(rank(k + shift), rank(k))

    def d(k):
        return op(cx.d, k, 1)

    def delta(k):
        return op(cx.delta, k, -1)

    def L(k):
        return op(cx.L, k, 2)

    def Lam(k):
        return op(cx.Lam, k, -2)

    bad = []
    for k in range(n + 1):
        checks = {
            "d^2": (d(k + 1) @ d(k)).is_zero(),
            "delta^2": (delta(k - 1) @ delta(k)).is_zero(),
            "d delta + delta d": (d(k - 1) @ delta(k) + delta(k + 1) @ d(k)).is_zero(),
            "[L, delta] = d": L(k - 1) @ delta(k) - delta(k + 2) @ L(k) == d(k),
            "[Lambda, d] = delta": Lam(k + 1) @ d(k) - d(k - 2) @ Lam(k) == delta(k),
        }
        bad += [f"{name} on degree {k}" for name, ok in checks.items() if not ok]
    for parity in (0, 1):
        D = cx.D(parity)
        if cx.T(1 - parity) @ D - D @ cx.T(parity) != D:
            bad.append(f"[T, D] = D on parity {parity}")
    return bad


def random_hermitian(rng: random.Random, N: int, traceless: bool = False):
    from symplectica.exact_arith import GaussianRational
    from symplectica.moments import HermitianMatrix

    rows = [[GaussianRational(0)] * N for _ in range(N)]
    for i in range(N):
        rows[i][i] = GaussianRational(random_rational(rng))
        for j in range(i + 1, N):
            z = GaussianRational(random_rational(rng), random_rational(rng))
            rows[i][j], rows[j][i] = z, z.conjugate()
    if traceless:
        tr = sum((rows[i][i].real for i in range(N)), Fraction(0))
        rows[N - 1][N - 1] = rows[N - 1][N - 1] - tr
    return HermitianMatrix(tuple(tuple(r) for r in rows))


def rational_unitary(rng: random.Random, N: int):
    """Product of a random permutation and a rotation by the Pythagorean angle (3/5, 4/5) with phase."""
    from symplectica.exact_arith import GaussianRational

    perm = list(range(N))
    rng.shuffle(perm)
    U = [[GaussianRational(int(perm[i] == j)) for j in range(N)] for i in range(N)]
    if N >= 2:
        a, b = rng.sample(range(N), 2)
        c, s = GaussianRational(Fraction(3, 5)), GaussianRational(0, Fraction(4, 5))
        R = [[GaussianRational(int(i == j)) for j in range(N)] for i in range(N)]
        R[a][a], R[a][b], R[b][a], R[b][b] = c, s, s, c
        U = [[sum((R[i][k] * U[k][j] for k in range(N)), GaussianRational(0)) for j in range(N)] for i in range(N)]
    return U
