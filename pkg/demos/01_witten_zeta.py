"""Witten zeta sums, special values and their divisibility."""

import mpmath

from symplectica.root_systems import enumerate_weights_by_dim, parse_group
from symplectica.witten_zeta import a2_double_sum, hurwitz_data, su2_zeta_exact, von_staudt_audit, witten_zeta

spacer = "_" * 60

print("Irreducible representations of SU(3) up to dimension 15:")
for w, d in enumerate_weights_by_dim(parse_group("SU(3)"), 15):
    print(f"  weight {w.coords}  dim {d}")

print(spacer)
print("SU(2): the sum over dim^-2 is zeta(2) = pi^2/6.")
r = witten_zeta(parse_group("A1"), 2, 10**5)
print("  partial sum  ", mpmath.nstr(r.float_estimate, 20))
print("  tail bound   ", mpmath.nstr(r.tail_bound, 5))
print("  pi^2/6       ", mpmath.nstr(mpmath.pi**2 / 6, 20))
print("  zeta(4)/pi^4 =", su2_zeta_exact(2))

print(spacer)
print("SU(3) two ways: root-system enumeration and a direct double sum.")
for s in (2, 4):
    r = witten_zeta(parse_group("A2"), s, 10**4)
    total, tail = a2_double_sum(s)
    print(f"  s={s}: {float(r.float_estimate):.12f} vs {total:.12f}  (bounds {float(r.tail_bound):.1e}, {tail:.1e})")

print(spacer)
print("Normalized special values and prime divisibility:")
for rep in von_staudt_audit(range(2, 9)):
    primes = ", ".join(f"p={c.p}:{'ok' if c.divides else 'no'}" for c in rep.prime_checks if c.applies) or "-"
    print(f"  m={rep.m:2d}  value={rep.value}  {primes}")
literal = von_staudt_audit([2], "paper_literal")[0]
print("  the literal normalization at m=2 gives", literal.value, "which 2 does not divide")

print(spacer)
h = hurwitz_data(7, 3)
print("A Z_3 action on a genus-7 surface:", h)
print("Riemann-Hurwitz holds:", h.riemann_hurwitz_holds())
