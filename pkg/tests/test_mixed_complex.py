import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symplectica.errors import DomainError, ModelError
from symplectica.mixed_complex import (
    BUILTIN_MODELS,
    LieModel,
    ModelComplex,
    PoissonPolyModel,
    PolyForm,
    brylinski_test,
    builtin_model,
    canonical_homology,
    ce_differential,
    characteristic_forms,
    cohomology,
    cyclic_cycle_check,
    exterior_d,
    hard_lefschetz,
    hc_odd_sequence,
    hodge_report,
    koszul_delta,
    lie_poisson_delta,
    load_model,
    model_to_json,
    periodic_cyclic,
    save_model,
    su2_characteristic_cycle_check,
    weight_spectrum,
)
from symplectica.symplectic_linear import exterior_basis

from .helpers import mixed_identity_failures
from .oracles import brylinski_delta, ce_one_form_differential

MODELS = sorted(BUILTIN_MODELS)


@pytest.fixture(scope="module")
def complexes():
    return {name: ModelComplex(builtin_model(name)) for name in MODELS}


@pytest.mark.parametrize("name", MODELS)
def test_identities(complexes, name):
    assert mixed_identity_failures(complexes[name]) == []


@pytest.mark.parametrize("name", MODELS)
def test_ce_matches_dual_bracket_formula(name):
    model = builtin_model(name)
    d1 = ce_differential(model, 1).matrix
    pos = {I: r for r, I in enumerate(exterior_basis(model.dim, 2))}
    for c in range(model.dim):
        col = [Fraction(0)] * len(pos)
        for ab, v in ce_one_form_differential(model, c).items():
            col[pos[ab]] = Fraction(v)
        assert d1.column(c) == tuple(col)


@pytest.mark.parametrize("name, betti", [
    ("T2", [1, 2, 1]),
    ("T4", [1, 4, 6, 4, 1]),
    ("T6", [1, 6, 15, 20, 15, 6, 1]),
    ("KT", [1, 3, 4, 3, 1]),
    ("filiform4", [1, 2, 2, 2, 1]),
    # Kuenneth: (1 + 3t + 4t^2 + 3t^3 + t^4)(1 + t)^2
    ("KTxT2", [1, 5, 11, 14, 11, 5, 1]),
])
def test_betti_numbers(complexes, name, betti):
    assert cohomology(complexes[name]) == betti


@pytest.mark.parametrize("name", MODELS)
def test_canonical_duality_and_degeneration(complexes, name):
    cx = complexes[name]
    b = cohomology(cx)
    assert canonical_homology(cx) == b[::-1]
    even, odd, filt = periodic_cyclic(cx)
    assert (even, odd) == (sum(b[0::2]), sum(b[1::2]))
    assert filt["even"][-1] == even and filt["odd"][-1] == odd


@pytest.mark.parametrize("name", MODELS)
def test_weight_spectrum_integral_and_complete(complexes, name):
    cx = complexes[name]
    spectrum = weight_spectrum(cx)
    even, odd, _ = periodic_cyclic(cx)
    for key, total in (("even", even), ("odd", odd)):
        assert sum(mult for _, mult in spectrum[key]) == total
        assert all(isinstance(lam, int) and -cx.m <= lam <= cx.m for lam, _ in spectrum[key])


def test_weight_spectrum_examples(complexes):
    assert dict(weight_spectrum(complexes["T4"])["odd"]) == {1: 4, -1: 4}
    assert dict(weight_spectrum(complexes["KT"])["odd"]) == {1: 3, -1: 3}
    assert dict(weight_spectrum(complexes["T2"])["odd"]) == {0: 2}


def test_hard_lefschetz(complexes):
    assert hard_lefschetz(complexes["T4"]) == [1, 4, 6]
    assert hard_lefschetz(complexes["KT"]) == [1, 2, 4]
    assert hard_lefschetz(complexes["filiform4"]) == [1, 0, 2]


def test_brylinski(complexes):
    assert brylinski_test(complexes["KT"], 3) == (2, 3, False)
    assert [brylinski_test(complexes["T4"], k)[2] for k in range(5)] == [True] * 5
    for name in MODELS:
        assert brylinski_test(complexes[name], 1)[2]
    for name in ("T4", "KT", "filiform4"):
        assert brylinski_test(complexes[name], 3)[0] == hard_lefschetz(complexes[name])[1]


@pytest.mark.parametrize("name", ["T4", "KT", "filiform4"])
def test_odd_sequence(complexes, name):
    cert = hc_odd_sequence(complexes[name])
    assert cert.exact
    assert cert.plus_eigenspace_dim == cert.b3 and cert.minus_eigenspace_dim == cert.b1


def test_odd_sequence_needs_dimension_four(complexes):
    with pytest.raises(DomainError):
        hc_odd_sequence(complexes["KTxT2"])


def test_hodge_report(complexes):
    report = hodge_report(complexes["KT"]).to_dict()
    assert report["betti"] == [1, 3, 4, 3, 1]
    assert report["verdicts"] == {
        "hard_lefschetz": False, "brylinski": False, "degenerates": True, "odd_spectrum_pm1": True,
    }
    assert json.loads(json.dumps(report)) == report


def test_operator_accessors(complexes):
    assert koszul_delta(complexes["T4"], 2).matrix.is_zero()
    with pytest.raises(DomainError):
        ce_differential(builtin_model("T4"), 9)
    with pytest.raises(DomainError):
        ce_differential("T4", 1)


@pytest.mark.parametrize("name", MODELS)
def test_json_round_trip(tmp_path, name):
    model = builtin_model(name)
    path = tmp_path / f"{name}.json"
    save_model(model, path)
    assert load_model(str(path)) == model
    assert load_model(json.dumps(model_to_json(model))) == model
    assert load_model(model_to_json(model)) == model


def test_jacobi_failure_names_triple():
    data = {"name": "bad", "dim": 4, "brackets": [
        {"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 3, "j": 4, "k": 1, "c": "1"},
    ], "omega": [{"i": 1, "j": 2, "c": "1"}, {"i": 3, "j": 4, "c": "1"}]}
    with pytest.raises(ModelError, match=r"Jacobi identity fails on \(e1, e2, e4\)"):
        load_model(data)


@pytest.mark.parametrize("brackets, omega, message", [
    ([(0, 1, 0, 1)], [(0, 1, 1), (2, 3, 1)], "unimodular"),
    ([(0, 1, 2, 1)], [(0, 1, 1), (2, 3, 1)], "not closed"),
    ([], [(0, 1, 1)], "degenerate"),
    ([(0, 5, 1, 1)], [(0, 1, 1), (2, 3, 1)], "outside"),
])
def test_model_validation(brackets, omega, message):
    with pytest.raises(ModelError, match=message):
        LieModel.build("x", 4, brackets, omega)


def test_load_model_errors():
    with pytest.raises(ModelError):
        load_model("no-such-model")
    with pytest.raises(ModelError):
        load_model({"dim": 4})
    with pytest.raises(ModelError):
        builtin_model("K3")


# Lie-Poisson side


def random_form(rng, nvars, degree, poly_deg):
    terms = {}
    for _ in range(4):
        exps = [0] * nvars
        for _ in range(rng.randint(0, poly_deg)):
            exps[rng.randrange(nvars)] += 1
        idx = tuple(sorted(rng.sample(range(nvars), degree)))
        terms[(tuple(exps), idx)] = rng.randint(-3, 3)
    return PolyForm(nvars, degree, terms)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.sampled_from(["su2", "so3"]))
def test_poisson_delta_matches_brylinski_formula(seed, degree, kind):
    ppm = getattr(PoissonPolyModel, kind)()
    form = random_form(random.Random(seed), 3, degree, 3)
    assert lie_poisson_delta(ppm, form) == brylinski_delta(ppm, form)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_poisson_delta_squares_to_zero_and_anticommutes(seed, degree):
    ppm = PoissonPolyModel.su2()
    form = random_form(random.Random(seed), 3, degree, 3)
    dd = lie_poisson_delta(ppm, form)
    if dd.degree >= 1:
        assert lie_poisson_delta(ppm, dd).is_zero()
    if degree <= 2:
        mixed = exterior_d(lie_poisson_delta(ppm, form)) + lie_poisson_delta(ppm, exterior_d(form)) if degree >= 1 else None
        assert mixed is None or mixed.is_zero()


def test_so3_delta_example():
    x_dy = PolyForm.monomial((1, 0, 0), (1,))
    assert lie_poisson_delta(PoissonPolyModel.so3(), x_dy) == PolyForm.monomial((0, 0, 1))


def test_abelian_delta_vanishes():
    form = PolyForm.monomial((2, 1, 0), (0, 2))
    assert lie_poisson_delta(PoissonPolyModel.abelian(3), form).is_zero()


def test_characteristic_cycle():
    w00, w11 = characteristic_forms()
    assert su2_characteristic_cycle_check()
    assert not su2_characteristic_cycle_check(omega00=w00.scale(2))
    assert not su2_characteristic_cycle_check(omega11=w11.scale(2))
    assert not su2_characteristic_cycle_check(ppm=PoissonPolyModel.so3())
    assert su2_characteristic_cycle_check(PolyForm.zero(3, 0), PolyForm.zero(3, 2))
    assert not exterior_d(w11).is_zero()
    with pytest.raises(DomainError):
        cyclic_cycle_check(PoissonPolyModel.su2(), [w11, w11])


def test_poisson_model_errors():
    with pytest.raises(ModelError):
        PoissonPolyModel(4, (((0, 1, 2), 1), ((2, 3, 0), 1)))
    with pytest.raises(DomainError):
        lie_poisson_delta(PoissonPolyModel.su2(max_degree=1), PolyForm.monomial((2, 0, 0), (0,)))
