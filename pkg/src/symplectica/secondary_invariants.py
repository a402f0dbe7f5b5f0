"""Closed-form secondary invariants: Stiefel-Whitney arithmetic on RP^n, rho on RP^n and sphere caps, the torus character.

Values "mod 1" are Fractions normalized into ``[0, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvariantError
from .exact_arith import parse_rational

__all__ = [
    "SWPolynomial",
    "TorusSymplectomorphism",
    "cap_rho",
    "cylinder_integral",
    "mod1",
    "rationality_denominator",
    "rho_rpn",
    "rpn_torsion_order",
    "total_sw_tau",
    "total_sw_tautological",
    "torus_character",
]


def mod1(q) -> Fraction:
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True)
class SWPolynomial:
    """Element of ``F_2[x]/(x^(n+1))``, the mod-2 cohomology ring of RP^n."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("n must be >= 0")
        c = tuple(int(a) % 2 for a in self.coeffs)[: self.n + 1]
        object.__setattr__(self, "coeffs", c + (0,) * (self.n + 1 - len(c)))

    @classmethod
    def one(cls, n: int) -> "SWPolynomial":
        return cls(n, (1,))

    @classmethod
    def gen(cls, n: int) -> "SWPolynomial":
        """The generator ``x`` of ``H^1``."""
        return cls(n, (0, 1))

    def _same(self, other: "SWPolynomial"):
        if self.n != other.n:
            raise DomainError(f"different truncations {self.n} and {other.n}")

    def __add__(self, other: "SWPolynomial") -> "SWPolynomial":
        self._same(other)
        return SWPolynomial(self.n, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "SWPolynomial") -> "SWPolynomial":
        self._same(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: self.n + 1 - i]):
                    out[i + j] ^= b
        return SWPolynomial(self.n, tuple(out))

    def __pow__(self, e: int) -> "SWPolynomial":
        out, base = SWPolynomial.one(self.n), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.n else 0

    def degree_part(self, i: int) -> "SWPolynomial":
        return SWPolynomial(self.n, tuple(a if j == i else 0 for j, a in enumerate(self.coeffs)))

    def restrict(self, n: int) -> "SWPolynomial":
        """Pullback along ``RP^n -> RP^self.n`` for ``n <= self.n``."""
        if n > self.n:
            raise DomainError("can only restrict to a smaller projective space")
        return SWPolynomial(n, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = [("1" if i == 0 else "x" if i == 1 else f"x^{i}") for i, a in enumerate(self.coeffs) if a]
        return " + ".join(terms) or "0"


def total_sw_tau(n: int) -> SWPolynomial:
    """``w(tau) = 1 + x`` for the tautological real line bundle on RP^n."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return SWPolynomial(n, (1, 1))


def total_sw_tautological(n: int) -> SWPolynomial:
    """``w(tau (x) C) = w(tau + tau) = (1 + x)^2 = 1 + x^2``."""
    w = total_sw_tau(n) ** 2
    if w != SWPolynomial(n, (1, 0, 1)):
        raise InvariantError("(1 + x)^2 != 1 + x^2 in characteristic 2")
    return w


def rpn_torsion_order(n: int) -> int:
    """Order of ``H^2(RP^n; Z)``, which is all torsion: 2 for ``n >= 2``, else 1."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return 2 if n >= 2 else 1


def rationality_denominator(torsion_order: int) -> int:
    """Guaranteed denominator of ``rho``: ``N rho`` is an integer when ``N`` is the order of ``c_1``."""
    if isinstance(torsion_order, bool) or not isinstance(torsion_order, int) or torsion_order < 1:
        raise DomainError(f"torsion order must be a positive integer, got {torsion_order!r}")
    return torsion_order


def rho_rpn(n: int, k: int) -> Fraction:
    """``rho`` on the generator of ``H_(2k-1)(RP^n; Z)``.

    The chain: ``w_2 = x^2 != 0``, so the mod-2 reduction of ``c_1^k`` is
    ``x^(2k)``.  This is computed on ``RP^max(n, 2k)`` and carried to ``RP^n`` by
    naturality (for ``n = 2k - 1`` the class itself lives one degree above
    the top).  A nonzero reduction forces ``rho`` to be the nonzero element
    of ``(1/2)Z / Z``.
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got k={k}")
    if 2 * k - 1 > n:
        raise DomainError(f"degree 2k-1 = {2 * k - 1} exceeds n = {n}")
    big = max(n, 2 * k)
    w = total_sw_tautological(big)
    w2 = w.degree_part(2)
    if w2.is_zero():
        return Fraction(0)
    reduction = w2 ** k
    if reduction.coefficient(2 * k) == 0:
        return Fraction(0)
    rho = Fraction(1, rationality_denominator(rpn_torsion_order(big)))
    if mod1(rho * rationality_denominator(rpn_torsion_order(n))) != 0:
        raise InvariantError("rho violates its rationality bound")
    return rho


def cap_rho(h) -> Fraction:
    """``rho`` of a latitude circle at height ``h`` on the unit-area sphere: ``(1 - h)/2`` mod 1.

    The other spanning cap, with the opposite orientation, gives
    ``-(1 + h)/2``; the two agree mod 1.
    """
    h = _as_rational(h)
    if not -1 <= h <= 1:
        raise DomainError(f"height must lie in [-1, 1], got {h}")
    upper = (1 - h) / 2
    lower = -(1 + h) / 2
    if mod1(upper) != mod1(lower):
        raise InvariantError("cap value depends on the spanning chain")
    return mod1(upper)


def _as_rational(x) -> Fraction:
    if isinstance(x, float):
        return Fraction(repr(x))
    return parse_rational(x)


@dataclass(frozen=True)
class TorusSymplectomorphism:
    """Translation of ``R^2/Z^2`` by ``(a, b)``, or a Hamiltonian loop."""

    kind: str = "translation"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("translation", "hamiltonian_loop"):
            raise DomainError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "a", mod1(_as_rational(self.a)))
        object.__setattr__(self, "b", mod1(_as_rational(self.b)))

    @classmethod
    def translation(cls, a, b) -> "TorusSymplectomorphism":
        return cls("translation", a, b)

    @classmethod
    def hamiltonian_loop(cls) -> "TorusSymplectomorphism":
        return cls("hamiltonian_loop")

    def compose(self, other: "TorusSymplectomorphism") -> "TorusSymplectomorphism":
        """``self o other``; Hamiltonian factors do not change the translation part."""
        return TorusSymplectomorphism.translation(self.a + other.a, self.b + other.b)


def cylinder_integral(tangent: tuple, sweep: tuple) -> Fraction:
    """``int dx ^ dy`` over the cylinder ``(t, s) -> p + t*tangent + s*sweep`` on ``[0,1]^2``."""
    (tx, ty), (sx, sy) = tangent, sweep
    return Fraction(tx) * Fraction(sy) - Fraction(ty) * Fraction(sx)


def torus_character(f: TorusSymplectomorphism) -> tuple[Fraction, Fraction]:
    """``chi(f)`` on the ``x``- and ``y``-cycles, mod 1: ``(b, -a)`` for translation by ``(a, b)``.

    Each value is the area of the cylinder swept from the cycle to its image,
    oriented with the cycle direction first and the sweep second.
    """
    if f.kind == "hamiltonian_loop":
        return (Fraction(0), Fraction(0))
    move = (f.a, f.b)
    return (mod1(cylinder_integral((1, 0), move)), mod1(cylinder_integral((0, 1), move)))
