"""Symplectic Hodge theory on small nilmanifold models."""

from symplectica.mixed_complex import (
    ModelComplex,
    PoissonPolyModel,
    brylinski_test,
    builtin_model,
    characteristic_forms,
    hc_odd_sequence,
    hodge_report,
    lie_poisson_delta,
    su2_characteristic_cycle_check,
)
from symplectica.symplectic_linear import lambda_op, standard_space, star

spacer = "_" * 60

print("Linear algebra first: the star on R^2 fixes 1-forms.")
sp = standard_space(1)
print("  *e1 =", star(sp, 1).apply((1, 0)), "  *e2 =", star(sp, 1).apply((0, 1)))
sp = standard_space(2)
print("  Lambda(omega) on R^4 =", lambda_op(sp, 2).apply(sp.omega_form)[0])

print(spacer)
for name in ("T4", "KT", "filiform4"):
    rep = hodge_report(ModelComplex(builtin_model(name)))
    print(f"{name}: betti {rep.betti}, HC even/odd {rep.hc_even_dim}/{rep.hc_odd_dim}")
    print(f"  odd weight spectrum {dict(rep.weight_spectrum_odd)}")
    print(f"  harmonic dims {rep.brylinski_harmonic_dims}, verdicts {rep.verdicts}")

print(spacer)
kt = ModelComplex(builtin_model("KT"))
h, b, ok = brylinski_test(kt, 3)
print(f"Kodaira-Thurston, degree 3: {h} harmonic classes out of {b}, so not every class is harmonic.")
cert = hc_odd_sequence(kt)
print("  0 -> H^1 -> HC^odd -> H^3 -> 0 exact:", cert.exact, f"(+1: {cert.plus_eigenspace_dim}, -1: {cert.minus_eigenspace_dim})")

print(spacer)
print("Linear Poisson structure on su(2)*:")
w00, w11 = characteristic_forms()
su2 = PoissonPolyModel.su2()
print("  omega11 =", w11)
print("  delta(omega11) =", lie_poisson_delta(su2, w11))
print("  cycle check:", su2_characteristic_cycle_check())
print("  with 2 * omega00:", su2_characteristic_cycle_check(omega00=w00.scale(2)))
