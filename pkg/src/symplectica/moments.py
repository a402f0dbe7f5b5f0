"""Exact moments of Hermitian forms over the unit sphere in C^(n+1).

All expectations are with respect to the rotation-invariant probability
measure on ``S^(2n+1)``.  For Hermitian ``B`` with eigenvalues ``lambda``,

    E[(Bv, v)^k] = h_k(lambda) / C(n+k, k),

and for several Hermitian matrices ``E[prod (A_i v, v)]`` is a sum over
permutations of products of traces along cycles, divided by
``(n+1)(n+2)...(n+k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, prod
from typing import Sequence

import numpy as np

from .errors import DomainError, InvariantError
from .exact_arith import GaussianRational, I

__all__ = [
    "GeneratingSeries",
    "HermitianMatrix",
    "MonteCarloEstimate",
    "SymmetricFunctionValue",
    "SymmetricKind",
    "cartan_form",
    "commutator_hamiltonian",
    "complete_homogeneous",
    "conjugate",
    "elementary_symmetric",
    "generating_identity_check",
    "generating_series",
    "hamiltonian_of",
    "killing_proportionality",
    "mixed_moment",
    "monte_carlo_moment",
    "power_sum",
    "recover_elementary",
    "sphere_moment",
    "symmetric_values",
]

_G0 = GaussianRational(0)


@dataclass(frozen=True)
class HermitianMatrix:
    """Square matrix over Q(i) equal to its conjugate transpose."""

    entries: tuple[tuple[GaussianRational, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(GaussianRational.coerce(x) for x in r) for r in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DomainError("Hermitian matrix must be square and nonempty")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != rows[j][i].conjugate():
                    raise DomainError(f"not Hermitian at ({i + 1}, {j + 1})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def diagonal(cls, eigs: Sequence) -> "HermitianMatrix":
        n = len(eigs)
        return cls(tuple(tuple(GaussianRational(eigs[i]) if i == j else _G0 for j in range(n)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def traceless(self) -> bool:
        return self.trace() == 0

    def trace(self) -> Fraction:
        return sum((self.entries[i][i].real for i in range(self.size)), Fraction(0))

    def to_complex(self):
        return [[complex(float(x.real), float(x.imag)) for x in r] for r in self.entries]


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), _G0) for j in range(n))
        for i in range(n)
    )


def _trace(a) -> GaussianRational:
    return sum((a[i][i] for i in range(len(a))), _G0)


def _dagger(a):
    n = len(a)
    return tuple(tuple(a[j][i].conjugate() for j in range(n)) for i in range(n))


def conjugate(A: HermitianMatrix, U) -> HermitianMatrix:
    """``U A U^*`` for a square ``U`` over Q(i)."""
    U = tuple(tuple(GaussianRational.coerce(x) for x in r) for r in U)
    return HermitianMatrix(_matmul(_matmul(U, A.entries), _dagger(U)))


def hamiltonian_of(X) -> HermitianMatrix:
    """Hamiltonian ``f(Z) = (iXZ, Z)`` of an anti-Hermitian ``X`` as the Hermitian matrix ``iX``."""
    rows = tuple(tuple(I * GaussianRational.coerce(x) for x in r) for r in X)
    return HermitianMatrix(rows)


def commutator_hamiltonian(A: HermitianMatrix, B: HermitianMatrix) -> HermitianMatrix:
    """``-i[A, B]``, the Hermitian matrix of the bracket."""
    ab, ba = _matmul(A.entries, B.entries), _matmul(B.entries, A.entries)
    minus_i = GaussianRational(0, -1)
    n = A.size
    return HermitianMatrix(tuple(tuple(minus_i * (ab[i][j] - ba[i][j]) for j in range(n)) for i in range(n)))


# ----- symmetric functions


def elementary_symmetric(eigs: Sequence, k: int) -> Fraction:
    e = [Fraction(1)] + [Fraction(0)] * k
    for lam in eigs:
        lam = Fraction(lam)
        for j in range(k, 0, -1):
            e[j] += lam * e[j - 1]
    return e[k]


def complete_homogeneous(eigs: Sequence, k: int) -> Fraction:
    """``h_k``: sum of all degree-``k`` monomials in ``eigs``."""
    h = [Fraction(1)] + [Fraction(0)] * k
    for lam in eigs:
        lam = Fraction(lam)
        for j in range(1, k + 1):
            h[j] += lam * h[j - 1]
    return h[k]


def power_sum(eigs: Sequence, k: int) -> Fraction:
    return sum((Fraction(lam) ** k for lam in eigs), Fraction(0))


class SymmetricKind(str, enum.Enum):
    ELEMENTARY = "e"
    COMPLETE = "h"
    POWER = "p"


@dataclass(frozen=True)
class SymmetricFunctionValue:
    kind: SymmetricKind
    index: int
    value: Fraction


def symmetric_values(eigs: Sequence, K: int) -> list[SymmetricFunctionValue]:
    """``e_k``, ``h_k``, ``p_k`` for ``k = 1..K``, checked against Newton's identities."""
    out = []
    e = [elementary_symmetric(eigs, k) for k in range(K + 1)]
    h = [complete_homogeneous(eigs, k) for k in range(K + 1)]
    p = [Fraction(0)] + [power_sum(eigs, k) for k in range(1, K + 1)]
    for k in range(1, K + 1):
        # k e_k = sum_{i=1}^k (-1)^(i-1) e_(k-i) p_i ;  k h_k = sum_{i=1}^k h_(k-i) p_i
        if k * e[k] != sum((-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)):
            raise InvariantError(f"Newton identity for e_{k} fails")
        if k * h[k] != sum(h[k - i] * p[i] for i in range(1, k + 1)):
            raise InvariantError(f"Newton identity for h_{k} fails")
        for kind, seq in ((SymmetricKind.ELEMENTARY, e), (SymmetricKind.COMPLETE, h), (SymmetricKind.POWER, p)):
            out.append(SymmetricFunctionValue(kind, k, seq[k]))
    return out


def recover_elementary(h: Sequence) -> list[Fraction]:
    """``e_1..e_n`` from ``h_1..h_n`` via ``sum_i (-1)^i e_i h_(k-i) = 0``."""
    if len(h) < 1:
        raise DomainError("need at least h_1")
    hs = [Fraction(1)] + [Fraction(x) for x in h]
    e = [Fraction(1)]
    for k in range(1, len(hs)):
        s = sum(((-1) ** i * e[i] * hs[k - i] for i in range(k)), Fraction(0))
        e.append((-1) ** (k + 1) * s)
    return e[1:]


# ----- moments


def sphere_moment(eigs: Sequence, n: int, k: int) -> Fraction:
    """``E[(Bv, v)^k]`` for ``B`` with eigenvalues ``eigs`` on the unit sphere of C^(n+1)."""
    if len(eigs) != n + 1:
        raise DomainError(f"expected {n + 1} eigenvalues, got {len(eigs)}")
    if k < 0:
        raise DomainError("k must be nonnegative")
    return complete_homogeneous(eigs, k) / comb(n + k, k)


def _cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


def mixed_moment(mats: Sequence[HermitianMatrix], n: int) -> Fraction:
    """``E[prod_i (A_i v, v)]`` by the cycle-type trace formula."""
    k = len(mats)
    for A in mats:
        if A.size != n + 1:
            raise DomainError(f"matrix of size {A.size} on C^{n + 1}")
    cache: dict[tuple[int, ...], GaussianRational] = {}

    def cycle_trace(cyc: tuple[int, ...]) -> GaussianRational:
        r = cyc.index(min(cyc))
        key = cyc[r:] + cyc[:r]
        if key not in cache:
            acc = mats[key[0]].entries
            for i in key[1:]:
                acc = _matmul(acc, mats[i].entries)
            cache[key] = _trace(acc)
        return cache[key]

    total = _G0
    for perm in permutations(range(k)):
        term = GaussianRational(1)
        for cyc in _cycles(perm):
            term = term * cycle_trace(cyc)
        total = total + term
    if total.imag:
        raise InvariantError("moment of Hermitian forms has an imaginary part")
    return total.real / prod(range(n + 1, n + k + 1))


def killing_proportionality(n: int, samples: Sequence[HermitianMatrix] = ()) -> Fraction:
    """Constant ``c`` with ``E[(Av, v)^2] = c tr(A^2)`` for traceless Hermitian ``A`` on C^(n+1).

    Verified on a basis of su(n+1) (as a Gram-matrix identity, which covers
    every traceless ``A`` by bilinearity) and on any extra ``samples``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    c = Fraction(1, 2 * comb(n + 2, 2))
    basis = _su_basis(n + 1)
    for i, A in enumerate(basis):
        for B in basis[i:]:
            lhs = mixed_moment([A, B], n)
            rhs = c * _trace(_matmul(A.entries, B.entries)).real
            if lhs != rhs:
                raise InvariantError(f"quadratic moment not proportional to tr(AB) for n={n}")
    for A in samples:
        if not A.traceless:
            raise DomainError("samples must be traceless")
        if mixed_moment([A, A], n) != c * _trace(_matmul(A.entries, A.entries)).real:
            raise InvariantError(f"quadratic moment not proportional to tr(A^2) for n={n}")
    return c


def _su_basis(N: int) -> list[HermitianMatrix]:
    """Hermitian basis of traceless matrices (the Hamiltonians of su(N))."""
    out = []

    def mat(entries):
        rows = [[_G0] * N for _ in range(N)]
        for (i, j), v in entries.items():
            rows[i][j] = GaussianRational.coerce(v)
        return HermitianMatrix(tuple(tuple(r) for r in rows))

    for i in range(N):
        for j in range(i + 1, N):
            out.append(mat({(i, j): 1, (j, i): 1}))
            out.append(mat({(i, j): GaussianRational(0, -1), (j, i): I}))
    for i in range(N - 1):
        out.append(mat({(i, i): 1, (i + 1, i + 1): -1}))
    return out


def cartan_form(A: HermitianMatrix, B: HermitianMatrix, C: HermitianMatrix, n: int) -> Fraction:
    """``alpha(A, B, C) = E[(-i[A,B] v, v)(Cv, v)]``, checked for full antisymmetry."""
    for X in (A, B, C):
        if X.size != n + 1:
            raise DomainError(f"matrix of size {X.size} on C^{n + 1}")
        if not X.traceless:
            raise DomainError("cartan_form expects traceless Hermitian inputs")

    def alpha(x, y, z):
        return mixed_moment([commutator_hamiltonian(x, y), z], n)

    val = alpha(A, B, C)
    for x, y, z, sign in ((B, A, C, -1), (A, C, B, -1), (C, B, A, -1), (B, C, A, 1), (C, A, B, 1)):
        if alpha(x, y, z) != sign * val:
            raise InvariantError("cartan form is not antisymmetric")
    return val


# ----- generating identity


def _series_inverse(coeffs: list[Fraction], K: int) -> list[Fraction]:
    if coeffs[0] == 0:
        raise DomainError("series with zero constant term is not invertible")
    inv = [1 / coeffs[0]]
    for k in range(1, K + 1):
        s = sum((coeffs[i] * inv[k - i] for i in range(1, min(k, len(coeffs) - 1) + 1)), Fraction(0))
        inv.append(-s / coeffs[0])
    return inv


def _char_series(eigs: Sequence, sign: int) -> list[Fraction]:
    # prod (1 + sign * lambda x) expanded as a polynomial
    poly = [Fraction(1)]
    for lam in eigs:
        lam = Fraction(lam) * sign
        poly = [a + lam * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return poly


@dataclass(frozen=True)
class GeneratingSeries:
    complete: tuple[Fraction, ...]
    det_inverse: tuple[Fraction, ...]
    moment_side: tuple[Fraction, ...]
    det_plus_inverse: tuple[Fraction, ...]


def generating_series(eigs: Sequence, K: int) -> GeneratingSeries:
    """Both sides of ``sum h_k x^k = det(1 - xB)^(-1)`` and of the moment form to order ``K``.

    The moment form is ``sum_k C(-n-1, k) s^k E[(Bv, v)^k] = det(1 + sB)^(-1)``.
    """
    if K < 1:
        raise DomainError("order K must be >= 1")
    if not eigs:
        raise DomainError("need at least one eigenvalue")
    n = len(eigs) - 1
    h = tuple(complete_homogeneous(eigs, k) for k in range(K + 1))
    det_inv = tuple(_series_inverse(_char_series(eigs, -1), K))
    # C(-n-1, k) = (-1)^k C(n+k, k)
    moment = tuple((-1) ** k * comb(n + k, k) * sphere_moment(eigs, n, k) for k in range(K + 1))
    plus_inv = tuple(_series_inverse(_char_series(eigs, 1), K))
    return GeneratingSeries(h, det_inv, moment, plus_inv)


def generating_identity_check(eigs: Sequence, K: int) -> bool:
    g = generating_series(eigs, K)
    return g.complete == g.det_inverse and g.moment_side == g.det_plus_inverse


# ----- Monte Carlo oracle


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float

    def agrees(self, exact, sigmas: float = 3.0) -> bool:
        return abs(self.mean - float(exact)) <= sigmas * self.stderr + 1e-12


def monte_carlo_moment(mats: Sequence[HermitianMatrix], n: int, samples: int = 100_000, seed: int = 0) -> MonteCarloEstimate:
    """Sample ``prod (A_i v, v)`` over uniform unit vectors of C^(n+1)."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((samples, n + 1)) + 1j * rng.standard_normal((samples, n + 1))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    vals = np.ones(samples)
    for A in mats:
        M = np.array(A.to_complex())
        vals = vals * np.einsum("si,ij,sj->s", z.conj(), M, z).real
    return MonteCarloEstimate(float(vals.mean()), float(vals.std(ddof=1) / np.sqrt(samples)))
