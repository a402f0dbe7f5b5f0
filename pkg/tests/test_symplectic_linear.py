import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from symplectica.errors import DomainError
from symplectica.linalg import QMatrix
from symplectica.symplectic_linear import (
    SymplecticSpace,
    exterior_basis,
    exterior_power,
    lambda_op,
    lefschetz_L,
    pairing_matrix,
    standard_space,
    star,
    wedge,
)

from .helpers import random_invertible, random_omega, sl2_commutator


def unit(n, k, I):
    return tuple(Fraction(int(J == I)) for J in exterior_basis(n, k))


def test_basis_order_and_size():
    assert exterior_basis(4, 2) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert len(exterior_basis(6, 3)) == 20


def test_wedge_anticommutes_on_one_forms():
    a, b = unit(4, 1, (0,)), unit(4, 1, (2,))
    assert wedge(4, a, 1, b, 1) == tuple(-x for x in wedge(4, b, 1, a, 1))
    assert not any(wedge(4, a, 1, a, 1))


def test_poisson_inverts_omega():
    sp = standard_space(2)
    assert sp.poisson @ sp.omega.T == QMatrix.identity(4)
    assert sp.m == 2 and sp.dim == 4


@pytest.mark.parametrize("rows", [[[0, 1], [1, 0]], [[0, 0], [0, 0]], [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]])
def test_rejects_bad_omega(rows):
    with pytest.raises(DomainError):
        SymplecticSpace(rows)


def test_pairing_examples():
    sp = standard_space(1)
    assert pairing_matrix(sp, 0) == QMatrix([[1]])
    assert pairing_matrix(sp, 1) == QMatrix([[0, 1], [-1, 0]])
    assert pairing_matrix(sp, 2) == QMatrix([[1]])


def test_pairing_is_determinant_extension():
    rng = random.Random(3)
    sp = SymplecticSpace(random_omega(rng, 2))
    P = sympy.Matrix(sp.poisson.nrows, sp.poisson.ncols, lambda i, j: sympy.Rational(str(sp.poisson[i, j])))
    for k in range(5):
        G = pairing_matrix(sp, k)
        basis = exterior_basis(4, k)
        for (a, I), (b, J) in product(enumerate(basis), repeat=2):
            expected = P.extract(list(I), list(J)).det() if k else 1
            assert G[a, b] == Fraction(str(expected))
        assert G.T == G.scale((-1) ** k)


def test_star_examples():
    sp = standard_space(1)
    assert star(sp, 1).matrix == QMatrix.identity(2)
    assert star(sp, 0).apply((Fraction(1),)) == (Fraction(1),)
    sp2 = standard_space(2)
    vol = tuple(c / 2 for c in sp2.omega_power(2))
    assert star(sp2, 0).apply((Fraction(1),)) == vol


def test_star_defining_equation():
    rng = random.Random(5)
    sp = SymplecticSpace(random_omega(rng, 2))
    vol = sp.volume_coefficient()
    for k in range(5):
        G, S = pairing_matrix(sp, k), star(sp, k)
        basis = exterior_basis(4, k)
        for a, I in enumerate(basis):
            s_alpha = S.apply(unit(4, k, I))
            for b, J in enumerate(basis):
                top = wedge(4, unit(4, k, J), k, s_alpha, 4 - k)
                assert top[0] == G[b, a] * vol


def test_lefschetz_examples():
    sp = standard_space(2)
    assert lefschetz_L(sp, 0).apply((Fraction(1),)) == sp.omega_form
    assert lefschetz_L(standard_space(1), 1).matrix.is_zero()
    # omega = e13 + e24
    sp = SymplecticSpace.from_form(4, [0, 1, 0, 0, 1, 0])
    assert lefschetz_L(sp, 2).apply(unit(4, 2, (0, 2))) == (Fraction(-1),)
    assert lefschetz_L(sp, 2).apply(unit(4, 2, (0, 1))) == (Fraction(0),)


def test_lambda_examples():
    for m in (1, 2, 3):
        sp = standard_space(m)
        assert lambda_op(sp, 2).apply(sp.omega_form) == (Fraction(m),)
    assert lambda_op(standard_space(1), 2).apply((Fraction(1),)) == (Fraction(1),)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_random_omega_identities(m):
    rng = random.Random(100 + m)
    for _ in range(3):
        sp = SymplecticSpace(random_omega(rng, m))
        n = 2 * m
        for k in range(n + 1):
            assert (star(sp, n - k) @ star(sp, k)).matrix == QMatrix.identity(sp.rank(k))
            assert sl2_commutator(sp, k) == QMatrix.identity(sp.rank(k)).scale(m - k)


def test_basis_independence():
    rng = random.Random(11)
    for m in (1, 2):
        n = 2 * m
        sp = SymplecticSpace(random_omega(rng, m))
        A = random_invertible(rng, n)
        pulled = SymplecticSpace(A.T @ sp.omega @ A)
        for k in range(n + 1):
            Ek, Enk = exterior_power(A, k).T, exterior_power(A, n - k).T
            assert star(pulled, k).matrix @ Ek == Enk @ star(sp, k).matrix
            if k + 2 <= n:
                assert lefschetz_L(pulled, k).matrix @ Ek == exterior_power(A, k + 2).T @ lefschetz_L(sp, k).matrix


def test_degree_checks():
    with pytest.raises(DomainError):
        star(standard_space(1), 3)
