import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from symplectica.errors import DomainError
from symplectica.exact_arith import GaussianRational
from symplectica.moments import (
    HermitianMatrix,
    SymmetricKind,
    cartan_form,
    commutator_hamiltonian,
    complete_homogeneous,
    conjugate,
    elementary_symmetric,
    generating_identity_check,
    generating_series,
    hamiltonian_of,
    killing_proportionality,
    mixed_moment,
    monte_carlo_moment,
    power_sum,
    recover_elementary,
    sphere_moment,
    symmetric_values,
)

from .helpers import random_hermitian, rational_unitary
from .oracles import dirichlet_power_moment

rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 7))
HALF = Fraction(1, 2)
PAULI = (
    HermitianMatrix(((0, HALF), (HALF, 0))),
    HermitianMatrix(((0, GaussianRational(0, -HALF)), (GaussianRational(0, HALF), 0))),
    HermitianMatrix(((HALF, 0), (0, -HALF))),
)


def test_hermitian_validation():
    with pytest.raises(DomainError):
        HermitianMatrix(((0, 1), (2, 0)))
    with pytest.raises(DomainError):
        HermitianMatrix(((1, 0),))
    assert HermitianMatrix.diagonal([1, -1]).traceless


def test_symmetric_function_examples():
    assert elementary_symmetric([1, 2, 3], 2) == 11
    assert complete_homogeneous([1, 2], 3) == 15
    assert power_sum([1, 2], 3) == 9
    vals = {(v.kind, v.index): v.value for v in symmetric_values([1, 2], 2)}
    assert vals[(SymmetricKind.COMPLETE, 2)] == 7


def test_sphere_moment_examples():
    assert sphere_moment([Fraction(5, 3)], 0, 4) == Fraction(5, 3) ** 4
    assert sphere_moment([2, 7], 1, 1) == Fraction(9, 2)
    assert sphere_moment([1, -1], 1, 2) == Fraction(1, 3)
    with pytest.raises(DomainError):
        sphere_moment([1, 2], 2, 1)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=4), st.integers(0, 5))
def test_sphere_moment_matches_dirichlet_oracle(eigs, k):
    assert sphere_moment(eigs, len(eigs) - 1, k) == dirichlet_power_moment(eigs, k)


def test_mixed_moment_examples():
    rng = random.Random(2)
    A = random_hermitian(rng, 3, traceless=True)
    B = random_hermitian(rng, 3)
    assert mixed_moment([A], 2) == 0
    trAB = sum((A.entries[i][k] * B.entries[k][i] for i in range(3) for k in range(3)), GaussianRational(0)).real
    assert mixed_moment([A, B], 2) == (A.trace() * B.trace() + trAB) / 12
    D = HermitianMatrix.diagonal([1, -1])
    assert mixed_moment([D, D], 1) == sphere_moment([1, -1], 1, 2) == Fraction(1, 3)


def test_mixed_moment_unitary_invariance():
    rng = random.Random(4)
    for N in (2, 3):
        mats = [random_hermitian(rng, N) for _ in range(3)]
        U = rational_unitary(rng, N)
        assert mixed_moment([conjugate(A, U) for A in mats], N - 1) == mixed_moment(mats, N - 1)


def test_mixed_moment_of_power_matches_sphere_moment():
    rng = random.Random(8)
    A = HermitianMatrix.diagonal([Fraction(1, 2), 3, -2])
    U = rational_unitary(rng, 3)
    B = conjugate(A, U)
    assert mixed_moment([B] * 4, 2) == sphere_moment([Fraction(1, 2), 3, -2], 2, 4)


@pytest.mark.parametrize("n, c", [(1, Fraction(1, 6)), (2, Fraction(1, 12)), (3, Fraction(1, 20))])
def test_killing_constant(n, c):
    assert killing_proportionality(n) == c == Fraction(1, 2 * comb(n + 2, 2))


def test_killing_on_random_samples():
    rng = random.Random(6)
    samples = [random_hermitian(rng, 3, traceless=True) for _ in range(5)]
    c = killing_proportionality(2, samples)
    for A in samples:
        trA2 = sum((A.entries[i][k] * A.entries[k][i] for i in range(3) for k in range(3)), GaussianRational(0)).real
        assert mixed_moment([A, A], 2) - c * trA2 == 0
    with pytest.raises(DomainError):
        killing_proportionality(2, [HermitianMatrix.diagonal([1, 1, 1])])


def test_cartan_form_pauli():
    a, b, c = PAULI
    val = cartan_form(a, b, c, 1)
    assert val == Fraction(1, 12)
    assert cartan_form(b, c, a, 1) == val
    assert cartan_form(a, a, c, 1) == 0


def test_cartan_form_invariance_under_conjugation():
    rng = random.Random(10)
    mats = [random_hermitian(rng, 3, traceless=True) for _ in range(3)]
    U = rational_unitary(rng, 3)
    assert cartan_form(*[conjugate(A, U) for A in mats], 2) == cartan_form(*mats, 2)


def test_hamiltonian_helpers():
    X = ((GaussianRational(0, 1), 0), (0, GaussianRational(0, -1)))
    assert hamiltonian_of(X) == HermitianMatrix.diagonal([-1, 1])
    a, b, c = PAULI
    assert commutator_hamiltonian(a, b) == c


def test_recover_elementary_examples():
    assert recover_elementary([Fraction(5)]) == [5]
    assert recover_elementary([3, 7]) == [3, 2]


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6))
def test_recover_elementary_round_trip(eigs):
    n = len(eigs)
    h = [complete_homogeneous(eigs, k) for k in range(1, n + 1)]
    assert recover_elementary(h) == [elementary_symmetric(eigs, k) for k in range(1, n + 1)]


def test_generating_series_examples():
    g = generating_series([1], 3)
    assert g.complete == g.det_inverse == (1, 1, 1, 1)
    g = generating_series([1, 2], 4)
    assert g.complete == (1, 3, 7, 15, 31)
    assert generating_series([0, 3], 5).complete == generating_series([3], 5).complete


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=5), st.integers(1, 8))
def test_generating_identity(eigs, K):
    assert generating_identity_check(eigs, K)


def test_monte_carlo_agrees_and_is_deterministic():
    D = HermitianMatrix.diagonal([1, -1])
    est = monte_carlo_moment([D, D], 1, samples=100_000, seed=0)
    assert est.agrees(Fraction(1, 3))
    assert abs(est.mean - 1 / 3) < 1e-2
    assert monte_carlo_moment([D, D], 1, samples=1000, seed=5) == monte_carlo_moment([D, D], 1, samples=1000, seed=5)
