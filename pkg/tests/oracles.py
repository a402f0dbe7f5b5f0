"""Independent reference computations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def akiyama_tanigawa(n: int) -> Fraction:
    """B_n with B_1 = +1/2 (the algorithm's native convention); even n agree."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def su3_dim(a: int, b: int) -> int:
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def sun_dim_hook_content(coords: tuple[int, ...]) -> int:
    """dim of the SU(n+1) irrep with Dynkin labels ``coords`` by the hook-content formula."""
    n1 = len(coords) + 1
    # partition: lambda_i = sum_{j >= i} a_j
    lam = [sum(coords[i:]) for i in range(len(coords))]
    lam = [x for x in lam if x > 0]
    num, den = 1, 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n1 + j - i
            arm = row - j - 1
            leg = sum(1 for r in lam[i + 1:] if r > j)
            den *= arm + leg + 1
    assert num % den == 0
    return num // den


def brute_force_weights(dim_fn, rank: int, box: int, max_dim: int) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for coords in product(range(box + 1), repeat=rank):
        d = dim_fn(coords)
        if d <= max_dim:
            out.append((coords, d))
    return sorted(out, key=lambda cd: (cd[1], cd[0]))


def hurwitz_brute_force(g: int, p: int) -> tuple[int, int] | None:
    """Least ``kbar >= 1`` with some ``chi0`` in ``[-(p-1), 0]`` balancing Riemann-Hurwitz."""
    chi = 2 - 2 * g
    for kbar in range(1, 2 * g + 2):
        for chi0 in range(-(p - 1), 1):
            if chi == p * chi0 - (p - 1) * kbar * p:
                return chi0, kbar
    return None


def brylinski_delta(ppm, form):
    """Explicit formula for the Poisson ``delta`` on ``f dx_I``.

    ``sum_j (-1)^j {f, x_ij} dx_(I - ij)
    + sum_(j<l) (-1)^(j+l) f d{x_ij, x_il} ^ dx_(I - ij - il)`` (0-based positions).
    """
    from symplectica.mixed_complex.poisson import PolyForm

    n, k = form.nvars, form.degree
    out: dict = {}

    def add(exps, idx, c):
        key = (tuple(exps), tuple(idx))
        out[key] = out.get(key, 0) + c

    for (exps, idx), c in form.terms.items():
        for j, i in enumerate(idx):
            rest = idx[:j] + idx[j + 1:]
            # {x^a, x_i} = sum_t a_t x^(a - e_t) {x_t, x_i}
            for t, a in enumerate(exps):
                if not a:
                    continue
                for s, v in ppm.bracket(t, i).items():
                    e = list(exps)
                    e[t] -= 1
                    e[s] += 1
                    add(e, rest, (-1) ** j * a * v * c)
        for j in range(k):
            for l in range(j + 1, k):
                rest = idx[:j] + idx[j + 1:l] + idx[l + 1:]
                for s, v in ppm.bracket(idx[j], idx[l]).items():
                    if s in rest:
                        continue
                    pos = sum(1 for r in rest if r < s)
                    add(exps, tuple(sorted(rest + (s,))), (-1) ** (j + l + pos) * v * c)
    return PolyForm(n, k - 1, out)


def ce_one_form_differential(model, c: int) -> dict:
    """``d e^c`` from ``d alpha(X, Y) = -alpha([X, Y])``, as ``{(a, b): coeff}`` with ``a < b``."""
    out = {}
    for a in range(model.dim):
        for b in range(a + 1, model.dim):
            v = model.bracket(a, b).get(c, 0)
            if v:
                out[(a, b)] = -v
    return out


def dirichlet_power_moment(eigs, k: int) -> Fraction:
    """``E[(sum lambda_i t_i)^k]`` with ``t`` uniform on the simplex (``|v_i|^2`` for uniform ``v``).

    Uses ``E[prod t_i^a_i] = n! prod a_i! / (n + |a|)!`` and a multinomial expansion.
    """
    from math import factorial

    n = len(eigs) - 1
    total = Fraction(0)

    def compositions(k, parts):
        if parts == 1:
            yield (k,)
            return
        for first in range(k + 1):
            for rest in compositions(k - first, parts - 1):
                yield (first,) + rest

    for a in compositions(k, n + 1):
        multinom = factorial(k)
        weight = Fraction(factorial(n), factorial(n + k))
        term = Fraction(1)
        for lam, ai in zip(eigs, a):
            multinom //= factorial(ai)
            weight *= factorial(ai)
            term *= Fraction(lam) ** ai
        total += multinom * weight * term
    return total
