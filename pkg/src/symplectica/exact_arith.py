"""Exact scalar arithmetic: Bernoulli numbers, p-adic valuations, Gaussian rationals.

Rationals are plain :class:`fractions.Fraction` objects, which are always
reduced with a positive denominator.  They serialize as ``"p/q"`` (or ``"p"``
when ``q == 1``), which is exactly ``str(Fraction)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from numbers import Rational as _RationalABC

from .errors import DomainError

__all__ = [
    "DomainError",
    "GaussianRational",
    "bernoulli",
    "coprime_fraction",
    "falling_factorial_ratio",
    "format_rational",
    "is_prime",
    "padic_valuation",
    "parse_rational",
    "set_bernoulli_memo_limit",
]

_memo_limit = 200
_memo: list[Fraction] = [Fraction(1)]  # B_0, B_1, B_2, ... (B_1 = -1/2)
_memo_lock = threading.Lock()


def set_bernoulli_memo_limit(limit: int) -> None:
    """Cap the index up to which Bernoulli numbers are cached."""
    global _memo_limit
    if limit < 0:
        raise DomainError("memo limit must be nonnegative")
    with _memo_lock:
        _memo_limit = limit
        del _memo[limit + 1:]


def _extend(table: list[Fraction], n: int) -> None:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    for m in range(len(table), n + 1):
        if m > 1 and m % 2 == 1:
            table.append(Fraction(0))
            continue
        s = sum((comb(m + 1, j) * table[j] for j in range(m)), Fraction(0))
        table.append(-s / (m + 1))


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number ``B_n`` for even ``n >= 0``.

    Uses the convention ``B_1 = -1/2``; only even indices are exposed.

    >>> bernoulli(12)
    Fraction(-691, 2730)
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"Bernoulli index must be an integer, got {n!r}")
    if n < 0 or n % 2:
        raise DomainError(f"Bernoulli index must be even and >= 0, got {n}")
    if n < len(_memo):
        return _memo[n]
    with _memo_lock:
        if n <= _memo_limit:
            _extend(_memo, n)
            return _memo[n]
        table = list(_memo)
    _extend(table, n)
    return table[n]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, _RationalABC)):
        return Fraction(q)
    raise DomainError(f"expected an exact rational, got {type(q).__name__}")


def padic_valuation(q, p: int) -> int:
    """Exponent of the prime ``p`` in the nonzero rational ``q``.

    >>> padic_valuation(Fraction(-691, 2730), 3)
    -1
    """
    q = _to_fraction(q)
    if q == 0:
        raise DomainError("valuation of 0 is infinite")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")

    def v(n: int) -> int:
        n = abs(n)
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k

    return v(q.numerator) - v(q.denominator)


def falling_factorial_ratio(a: int, b: int) -> int:
    """``a!/b!`` as the product ``(b+1)(b+2)...a``."""
    if b < 0 or a < b:
        raise DomainError(f"need a >= b >= 0, got a={a}, b={b}")
    return prod(range(b + 1, a + 1))


def coprime_fraction(num: int, den: int) -> Fraction:
    """Build a Fraction from an already reduced pair without recomputing the gcd.

    Multi-megabit partial sums are reduced with GMP; re-running Python's gcd
    on them would dominate the runtime.
    """
    if den <= 0:
        raise DomainError("denominator must be positive")
    ctor = getattr(Fraction, "_from_coprime_ints", None)
    if ctor is not None:
        return ctor(num, den)
    try:
        return Fraction(num, den, _normalize=False)
    except TypeError:
        return Fraction(num, den)


def format_rational(q) -> str:
    return str(_to_fraction(q))


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class GaussianRational:
    """Element ``real + i*imag`` of Q(i)."""

    real: Fraction = Fraction(0)
    imag: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.real, -self.imag)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.real * o.real - self.imag * o.imag,
            self.real * o.imag + self.imag * o.real,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.real / n, -o.imag / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __repr__(self):
        return f"GaussianRational({self.real}, {self.imag})"

    def __str__(self):
        if not self.imag:
            return str(self.real)
        return f"{self.real}+{self.imag}i" if self.imag > 0 else f"{self.real}{self.imag}i"


I = GaussianRational(0, 1)
