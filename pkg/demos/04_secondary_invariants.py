"""Rational secondary invariants: projective spaces, sphere caps and the torus."""

from fractions import Fraction

from symplectica.secondary_invariants import (
    TorusSymplectomorphism,
    cap_rho,
    rho_rpn,
    total_sw_tau,
    total_sw_tautological,
    torus_character,
)

spacer = "_" * 60

print("Stiefel-Whitney classes on RP^6:")
print("  w(tau)       =", total_sw_tau(6))
print("  w(tau (x) C) =", total_sw_tautological(6))
print("  (1 + x)^5    =", total_sw_tau(6) ** 5)

print(spacer)
print("rho on the odd homology of RP^n:")
for n in range(3, 10, 2):
    print(f"  n={n}:", [str(rho_rpn(n, k)) for k in range(2, (n + 1) // 2 + 1)])

print(spacer)
print("Latitude circles on the unit-area sphere:")
for h in (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)):
    print(f"  height {str(h):>4}: rho = {cap_rho(h)}")

print(spacer)
f = TorusSymplectomorphism.translation(Fraction(1, 2), Fraction(1, 3))
g = TorusSymplectomorphism.translation(Fraction(3, 4), Fraction(-1, 5))
print("Torus character of translations:")
print("  chi(f)   =", [str(x) for x in torus_character(f)])
print("  chi(g)   =", [str(x) for x in torus_character(g)])
print("  chi(f g) =", [str(x) for x in torus_character(f.compose(g))])
