"""Witten zeta values, normalized special values and their divisibility audit.

``witten_zeta`` sums ``dim(V)^-s`` over irreducible representations with
dimension up to a cutoff.  The partial sum is exact; the decimal estimate and
the tail bound carry ``precision`` significant digits (default 50).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, factorial, isqrt
from typing import Iterable, NamedTuple

import gmpy2
import mpmath

from .errors import DomainError
from .exact_arith import bernoulli, coprime_fraction, falling_factorial_ratio, is_prime, padic_valuation
from .root_systems import RootSystem, iter_weights_by_dim

__all__ = [
    "HurwitzData",
    "PrimeCheck",
    "Variant",
    "VonStaudtReport",
    "WittenZetaResult",
    "a2_double_sum",
    "hurwitz_data",
    "lemma_prime_applies",
    "moduli_volume",
    "orbifold_moduli_dimension",
    "su2_zeta_exact",
    "theorem_prime_applies",
    "von_staudt_audit",
    "von_staudt_value",
    "witten_zeta",
]

DEFAULT_PRECISION = 50


def _tree_sum(terms: list[tuple[int, int]]) -> tuple[int, int]:
    """Unreduced ``(num, den)`` of ``sum count/den`` by binary splitting."""
    if not terms:
        return 0, 1

    def rec(lo, hi):
        if hi - lo == 1:
            c, d = terms[lo]
            return gmpy2.mpz(c), gmpy2.mpz(d)
        mid = (lo + hi) // 2
        p1, q1 = rec(lo, mid)
        p2, q2 = rec(mid, hi)
        return p1 * q2 + p2 * q1, q1 * q2

    p, q = rec(0, len(terms))
    return int(p), int(q)


@dataclass
class WittenZetaResult:
    group: str
    s: int
    cutoff_dim: int
    terms_used: int
    float_estimate: mpmath.mpf
    tail_bound: mpmath.mpf
    tail_rigorous: bool
    last_term: mpmath.mpf
    precision: int = DEFAULT_PRECISION
    _num: int = field(default=0, repr=False)
    _den: int = field(default=1, repr=False)

    @cached_property
    def exact_partial_sum(self) -> Fraction:
        """Reduced partial sum, computed on first access (GMP gcd)."""
        r = gmpy2.mpq(self._num, self._den)
        return coprime_fraction(int(r.numerator), int(r.denominator))

    @property
    def exact_size_digits(self) -> int:
        """Rough decimal length of the unreduced partial sum."""
        return int((self._num.bit_length() + self._den.bit_length()) * 0.30103) + 1

    def interval(self) -> tuple[mpmath.mpf, mpmath.mpf]:
        """Enclosure of the full series value (for s > 0 the tail is nonnegative)."""
        with mpmath.workdps(self.precision):
            return self.float_estimate, self.float_estimate + self.tail_bound


def _a2_tail_bound(s: int, cutoff: int, dps: int) -> mpmath.mpf:
    """Rigorous bound on the A2 tail ``sum_{pq(p+q)/2 > D} (2/(pq(p+q)))^s``.

    Row ``p`` contributes ``(2/p)^s sum_{q >= q0} (q(p+q))^-s``.  The summand
    is convex in ``q``, so each term is at most its integral over
    ``[q - 1/2, q + 1/2]``.  Rows beyond ``P`` are bounded by
    ``2^s zeta(s) P^(1-2s)/(2s-1)`` with ``zeta(s) <= s/(s-1)``.
    """
    two_d = 2 * cutoff
    rows = max(isqrt(two_d) + 2, 2000)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        coeffs = [(j, comb(2 * s - 2, j) * (-1) ** j) for j in range(2 * s - 1)]
        for p in range(1, rows + 1):
            # smallest q >= 1 with p q (p + q) > 2D
            q0 = max(1, (isqrt(p * p * p * p + 4 * p * two_d) - p * p) // (2 * p) - 1)
            while p * q0 * (p + q0) <= two_d:
                q0 += 1
            a = mpmath.mpf(q0) - mpmath.mpf(1) / 2
            t0 = a / (a + p)
            integral = mpmath.mpf(0)
            for j, c in coeffs:
                e = j - s + 1
                if e == 0:
                    integral += c * (-mpmath.log(t0))
                else:
                    integral += c * (1 - t0**e) / e
            total += (mpmath.mpf(2) / p) ** s * mpmath.mpf(p) ** (1 - 2 * s) * integral
        zeta_s = mpmath.mpf(s) / (s - 1)
        total += 2**s * zeta_s * mpmath.mpf(rows) ** (1 - 2 * s) / (2 * s - 1)
        return total


def _heuristic_tail(rs: RootSystem, s: int, cutoff: int, counts: Counter, dps: int) -> mpmath.mpf:
    # fitted N(D) <= C D^a with a = rank / #positive roots, then partial summation
    a = Fraction(rs.rank, len(rs.positive_roots))
    with mpmath.workdps(dps):
        af = mpmath.mpf(a.numerator) / a.denominator
        running = 0
        c = mpmath.mpf(0)
        for d in sorted(counts):
            running += counts[d]
            c = max(c, running / mpmath.mpf(d) ** af)
        return c * s / (s - af) * mpmath.mpf(cutoff) ** (af - s)


def witten_zeta(rs: RootSystem, s: int, cutoff_dim: int, precision: int = DEFAULT_PRECISION) -> WittenZetaResult:
    """Partial sum of ``sum_V dim(V)^-s`` over irreps with ``dim(V) <= cutoff_dim``.

    Tail bounds are rigorous for A1 (integral comparison) and A2 (row-wise
    convexity bound); other types get a fitted counting-function bound with
    ``tail_rigorous = False``.
    """
    if isinstance(s, bool) or not isinstance(s, int) or s < 2:
        raise DomainError(f"s must be an integer >= 2, got {s!r}")
    if cutoff_dim < 1:
        raise DomainError("cutoff_dim must be >= 1")
    counts = Counter(d for _, d in iter_weights_by_dim(rs, cutoff_dim))
    dims = sorted(counts)
    num, den = _tree_sum([(counts[d], d**s) for d in dims])
    dps = precision + 10
    with mpmath.workdps(dps):
        estimate = mpmath.mpf(num) / den
        last = mpmath.mpf(dims[-1]) ** (-s)
        if rs.family == "A" and rs.rank == 1:
            tail, rigorous = mpmath.mpf(cutoff_dim) ** (1 - s) / (s - 1), True
        elif rs.family == "A" and rs.rank == 2:
            tail, rigorous = _a2_tail_bound(s, cutoff_dim, dps), True
        else:
            tail, rigorous = _heuristic_tail(rs, s, cutoff_dim, counts, dps), False
    return WittenZetaResult(
        group=rs.name,
        s=s,
        cutoff_dim=cutoff_dim,
        terms_used=sum(counts.values()),
        float_estimate=estimate,
        tail_bound=tail,
        tail_rigorous=rigorous,
        last_term=last,
        precision=precision,
        _num=num,
        _den=den,
    )


def a2_double_sum(s: int, box: int = 2000) -> tuple[float, float]:
    """``sum_{p,q >= 1} (2/(pq(p+q)))^s`` over a ``box x box`` square, with a tail bound.

    Independent of the root-system machinery; used to cross-check SU(3).
    Terms outside the box satisfy ``p > box`` or ``q > box``; each half is at
    most ``2^s zeta(s) box^(1-2s)/(2s-1)``.  The bound also absorbs float
    rounding of the box sum.
    """
    import numpy as np

    if s < 2:
        raise DomainError("s must be >= 2")
    q = np.arange(1, box + 1, dtype=np.float64)
    total = 0.0
    for p in range(1, box + 1):
        total += float(np.sum((2.0 / (p * q * (p + q))) ** s))
    zeta_s = s / (s - 1)
    tail = 2 * 2**s * zeta_s * float(box) ** (1 - 2 * s) / (2 * s - 1)
    rounding = box * box * 2.0**-50 * total
    return total, tail + rounding


def moduli_volume(rs: RootSystem, g: int, cutoff: int, precision: int = DEFAULT_PRECISION) -> WittenZetaResult:
    """Symplectic volume of the genus-``g`` representation variety, ``zeta(2g - 2)``."""
    if g < 2:
        raise DomainError(f"genus must be >= 2, got {g}")
    return witten_zeta(rs, 2 * g - 2, cutoff, precision)


def su2_zeta_exact(m: int) -> Fraction:
    """``zeta(2m)/pi^(2m)`` as an exact rational.

    >>> su2_zeta_exact(2)
    Fraction(1, 90)
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    return (-1) ** (m + 1) * bernoulli(2 * m) * 2 ** (2 * m - 1) / factorial(2 * m)


class Variant(str, enum.Enum):
    PAPER_LITERAL = "paper_literal"
    INTERSECTION_NUMBER = "intersection_number"

    @classmethod
    def parse(cls, value) -> "Variant":
        if isinstance(value, Variant):
            return value
        text = str(value).lower().replace("-", "_")
        aliases = {"literal": cls.PAPER_LITERAL, "intersection": cls.INTERSECTION_NUMBER}
        if text in aliases:
            return aliases[text]
        try:
            return cls(text)
        except ValueError:
            raise DomainError(f"unknown variant {value!r}") from None


def von_staudt_value(m: int, variant=Variant.INTERSECTION_NUMBER) -> Fraction:
    """Normalized SU(2) special value ``W(2m)`` in one of two normalizations.

    ``paper_literal`` is ``(3m)!/(2m)! * B_2m``.  ``intersection_number`` is
    ``(3m)!/(2m)! * 2^(m-1) (2^(2m) - 2) |B_2m|``, the top self-intersection
    of the Theta class on the genus ``m + 1`` SU(2) moduli space.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    variant = Variant.parse(variant)
    ratio = falling_factorial_ratio(3 * m, 2 * m)
    b = bernoulli(2 * m)
    if variant is Variant.PAPER_LITERAL:
        return ratio * b
    return ratio * 2 ** (m - 1) * (2 ** (2 * m) - 2) * abs(b)


def theorem_prime_applies(p: int, m: int) -> bool:
    """Divisibility hypothesis: ``p`` prime, ``p | m`` and ``p(p-1) <= m``."""
    return is_prime(p) and m % p == 0 and p * (p - 1) <= m


def lemma_prime_applies(g: int, p: int, strict: bool = True) -> bool:
    """Non-free action hypothesis: ``p`` prime, ``p | g-1`` and ``p(p-1) < 2(g-1)``."""
    if not (is_prime(p) and g >= 2 and (g - 1) % p == 0):
        return False
    bound = 2 * (g - 1)
    return p * (p - 1) < bound if strict else p * (p - 1) <= bound


class PrimeCheck(NamedTuple):
    p: int
    applies: bool
    divides: bool
    valuation: int


@dataclass(frozen=True)
class VonStaudtReport:
    m: int
    variant: Variant
    value: Fraction
    prime_checks: tuple[PrimeCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.divides for c in self.prime_checks if c.applies)

    @property
    def failures(self) -> list[PrimeCheck]:
        return [c for c in self.prime_checks if c.applies and not c.divides]


def _prime_divisors(m: int) -> list[int]:
    return [p for p in range(2, m + 1) if m % p == 0 and is_prime(p)]


def von_staudt_audit(m_range: Iterable[int], variant=Variant.INTERSECTION_NUMBER) -> list[VonStaudtReport]:
    """Check every prime divisor ``p`` of each ``m``; those with ``p(p-1) <= m`` must divide."""
    variant = Variant.parse(variant)
    reports = []
    for m in m_range:
        if m < 2:
            raise DomainError(f"audit needs m >= 2, got {m}")
        value = von_staudt_value(m, variant)
        checks = []
        for p in _prime_divisors(m):
            v = padic_valuation(value, p)
            checks.append(PrimeCheck(p, theorem_prime_applies(p, m), v >= 1, v))
        reports.append(VonStaudtReport(m, variant, value, tuple(checks)))
    return reports


@dataclass(frozen=True)
class HurwitzData:
    """Cyclic ``Z_p`` branched cover ``C -> Sigma`` with ``kbar * p`` branch points."""

    g: int
    p: int
    quotient_euler: int
    kbar: int
    branch_points: int

    @property
    def euler(self) -> int:
        return 2 - 2 * self.g

    def riemann_hurwitz_holds(self) -> bool:
        return (
            self.euler == self.p * self.quotient_euler - (self.p - 1) * self.branch_points
            and self.branch_points == self.kbar * self.p
            and self.branch_points > 0
        )


def hurwitz_data(g: int, p: int, strict: bool = True) -> HurwitzData:
    """Quotient data for a non-free ``Z_p`` action on a genus-``g`` surface.

    ``kbar`` is the least positive integer with
    ``0 <= |chi|/p - (p-1) kbar <= p - 1`` and ``chi_0 = -(|chi|/p - (p-1) kbar)``.
    The construction only needs ``p(p-1) <= 2(g-1)``; ``strict=False`` admits
    the boundary case.

    >>> hurwitz_data(7, 3)
    HurwitzData(g=7, p=3, quotient_euler=-2, kbar=1, branch_points=3)
    """
    if not is_prime(p):
        raise DomainError(f"p = {p} is not prime")
    if g < 2 or (g - 1) % p:
        raise DomainError(f"p | (g - 1) fails: p = {p}, g - 1 = {g - 1}")
    if strict and not p * (p - 1) < 2 * (g - 1):
        raise DomainError(f"p(p-1) < 2(g-1) fails: {p * (p - 1)} >= {2 * (g - 1)}")
    if not p * (p - 1) <= 2 * (g - 1):
        raise DomainError(f"p(p-1) <= 2(g-1) fails: {p * (p - 1)} > {2 * (g - 1)}")
    reduced = 2 * (g - 1) // p
    kbar = max(1, -(-(reduced - (p - 1)) // (p - 1)))
    rest = reduced - (p - 1) * kbar
    if not 0 <= rest <= p - 1:
        raise AssertionError(f"no admissible kbar for g={g}, p={p}")
    data = HurwitzData(g=g, p=p, quotient_euler=-rest, kbar=kbar, branch_points=kbar * p)
    if not data.riemann_hurwitz_holds():
        raise AssertionError(f"Riemann-Hurwitz fails for {data}")
    return data


def orbifold_moduli_dimension(g: int, r: int, dim_g: int) -> int:
    """Dimension ``2r + (2g - 2) dim G`` of the orbifold representation variety."""
    if g < 0 or r < 0:
        raise DomainError("need g >= 0 and r >= 0")
    if dim_g < 3:
        raise DomainError("dim G must be >= 3 for a simple non-abelian G")
    return 2 * r + (2 * g - 2) * dim_g
