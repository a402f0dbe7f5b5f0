"""Polynomial differential forms on a linear Poisson space ``g*`` and the operator ``delta``.

A form is a finite sum of ``x^a dx_I`` with rational coefficients; ``a`` is an
exponent tuple and ``I`` a strictly increasing index tuple.  The bivector of
the linear structure is ``pi = sum_{i<j} {x_i, x_j} d_i ^ d_j`` with
``{x_i, x_j} = sum_k c_ij^k x_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from ..errors import DomainError, InvariantError, ModelError

__all__ = [
    "PolyForm",
    "PoissonPolyModel",
    "characteristic_forms",
    "cyclic_cycle_check",
    "exterior_d",
    "lie_poisson_delta",
    "poisson_contraction",
    "su2_characteristic_cycle_check",
]

Key = tuple[tuple[int, ...], tuple[int, ...]]


class PolyForm:
    """Homogeneous-degree polynomial differential form in ``nvars`` variables."""

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping[Key, object] | None = None):
        self.nvars = nvars
        self.degree = degree
        clean: dict[Key, Fraction] = {}
        for (exps, idx), c in (terms or {}).items():
            exps, idx = tuple(exps), tuple(idx)
            if len(exps) != nvars or len(idx) != degree or list(idx) != sorted(set(idx)):
                raise DomainError(f"bad term {exps}, {idx} for a {degree}-form in {nvars} variables")
            c = Fraction(c)
            if c:
                clean[(exps, idx)] = clean.get((exps, idx), Fraction(0)) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "PolyForm":
        return cls(nvars, degree)

    @classmethod
    def monomial(cls, exps: Iterable[int], idx: Iterable[int] = (), coeff=1) -> "PolyForm":
        exps, idx = tuple(exps), tuple(idx)
        return cls(len(exps), len(idx), {(exps, idx): coeff})

    def poly_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def _like(self, other: "PolyForm"):
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise DomainError("forms of different degree or dimension")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._like(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PolyForm(self.nvars, self.degree, out)

    def __neg__(self) -> "PolyForm":
        return self.scale(-1)

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        c = Fraction(c)
        return PolyForm(self.nvars, self.degree, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.nvars, self.degree, self.terms) == (other.nvars, other.degree, other.terms)

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"PolyForm(0, degree={self.degree})"
        parts = []
        for (exps, idx), c in sorted(self.terms.items()):
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e)
            dx = "^".join(f"dx{i + 1}" for i in idx)
            parts.append(f"({c})" + (f"*{mono}" if mono else "") + (f" {dx}" if dx else ""))
        return " + ".join(parts)


@dataclass(frozen=True)
class PoissonPolyModel:
    """Lie-Poisson structure on ``g*`` from structure constants ``c_ij^k`` (``i < j``)."""

    nvars: int
    structure_constants: tuple[tuple[tuple[int, int, int], Fraction], ...]
    max_degree: int = 6

    def __post_init__(self):
        consts = tuple(sorted(((tuple(k), Fraction(c)) for k, c in self.structure_constants if c)))
        for (i, j, k), _ in consts:
            if not (0 <= i < j < self.nvars and 0 <= k < self.nvars):
                raise ModelError(f"bad structure constant index ({i}, {j}, {k})")
        object.__setattr__(self, "structure_constants", consts)
        if self.max_degree < 1:
            raise DomainError("max_degree must be >= 1")
        for a, b, c in combinations(range(self.nvars), 3):
            tot: dict[int, Fraction] = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for k, u in self.bracket(x, y).items():
                    for l, v in self.bracket(k, z).items():
                        tot[l] = tot.get(l, Fraction(0)) + u * v
            if any(tot.values()):
                raise ModelError(f"Jacobi identity fails on (x{a + 1}, x{b + 1}, x{c + 1})")

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """``{x_i, x_j}`` as a sparse linear form ``{k: c}``."""
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        return {k: sign * c for (a, b, k), c in self.structure_constants if (a, b) == (i, j)}

    @classmethod
    def su2(cls, max_degree: int = 6) -> "PoissonPolyModel":
        """``su(2)*`` in the basis ``X_k = i sigma_k``: ``[X_1, X_2] = -2 X_3`` cyclically."""
        return cls(3, (((0, 1, 2), Fraction(-2)), ((1, 2, 0), Fraction(-2)), ((0, 2, 1), Fraction(2))), max_degree)

    @classmethod
    def so3(cls, max_degree: int = 6) -> "PoissonPolyModel":
        """``so(3)*`` with the cross-product bracket ``{x, y} = z``."""
        return cls(3, (((0, 1, 2), Fraction(1)), ((1, 2, 0), Fraction(1)), ((0, 2, 1), Fraction(-1))), max_degree)

    @classmethod
    def abelian(cls, nvars: int, max_degree: int = 6) -> "PoissonPolyModel":
        return cls(nvars, (), max_degree)


def exterior_d(form: PolyForm) -> PolyForm:
    """de Rham differential of a polynomial form."""
    n = form.nvars
    out: dict[Key, Fraction] = {}
    for (exps, idx), c in form.terms.items():
        for a in range(n):
            if not exps[a] or a in idx:
                continue
            new_exps = exps[:a] + (exps[a] - 1,) + exps[a + 1:]
            pos = sum(1 for i in idx if i < a)
            key = (new_exps, tuple(sorted(idx + (a,))))
            out[key] = out.get(key, Fraction(0)) + (-1) ** pos * exps[a] * c
    return PolyForm(n, form.degree + 1, out)


def poisson_contraction(ppm: PoissonPolyModel, form: PolyForm) -> PolyForm:
    """``i_pi`` with ``i_{X ^ Y} = i_Y i_X``; lowers form degree by 2."""
    if form.degree < 2:
        return _Nothing(form.nvars, form.degree - 2)
    n = form.nvars
    out: dict[Key, Fraction] = {}
    for (exps, idx), c in form.terms.items():
        for a, b in combinations(idx, 2):
            lin = ppm.bracket(a, b)
            if not lin:
                continue
            ra = idx.index(a)
            rest = idx[:ra] + idx[ra + 1:]
            rb = rest.index(b)
            sign = (-1) ** (ra + rb)
            rest = rest[:rb] + rest[rb + 1:]
            for k, v in lin.items():
                e = exps[:k] + (exps[k] + 1,) + exps[k + 1:]
                key = (e, rest)
                out[key] = out.get(key, Fraction(0)) + sign * v * c
    return PolyForm(n, form.degree - 2, out)


class _Nothing(PolyForm):
    """The zero element of a negative-degree space; only ``d`` of it is used."""

    def __init__(self, nvars: int, degree: int):
        self.nvars, self.degree, self.terms = nvars, degree, {}


def lie_poisson_delta(ppm: PoissonPolyModel, form: PolyForm) -> PolyForm:
    """``delta = i_pi d - d i_pi``; lowers form degree by 1 and keeps polynomial degree."""
    if form.nvars != ppm.nvars:
        raise DomainError(f"form has {form.nvars} variables, model has {ppm.nvars}")
    if form.poly_degree() > ppm.max_degree:
        raise DomainError(f"polynomial degree {form.poly_degree()} exceeds truncation {ppm.max_degree}")
    out = _delta(ppm, form)
    if out.degree >= 1 and not _delta(ppm, out).is_zero():
        raise InvariantError("delta^2 != 0 on the truncated complex")
    return out


def _delta(ppm: PoissonPolyModel, form: PolyForm) -> PolyForm:
    if form.degree == 0:
        return _Nothing(form.nvars, -1)
    first = poisson_contraction(ppm, exterior_d(form))
    if form.degree < 2:
        return first
    return first - exterior_d(poisson_contraction(ppm, form))


def cyclic_cycle_check(ppm: PoissonPolyModel, components: list[PolyForm]) -> bool:
    """Is ``(x_0, x_1, ...)`` with ``x_p`` in column ``p`` a cycle of the cyclic bicomplex?

    Column ``p`` holds forms of degree ``deg x_0 - 2p``; the conditions are
    ``delta x_p + d x_(p+1) = 0`` for every ``p``, with ``x_(last+1) = 0``.
    """
    if not components:
        return True
    top = components[0].degree
    for p, x in enumerate(components):
        if x.degree != top - 2 * p or x.nvars != ppm.nvars:
            raise DomainError(f"component {p} must be a {top - 2 * p}-form")
    for p, x in enumerate(components):
        lhs = lie_poisson_delta(ppm, x)
        if lhs.degree < 0:
            continue
        if p + 1 < len(components):
            lhs = lhs + exterior_d(components[p + 1])
        if not lhs.is_zero():
            return False
    return True


def characteristic_forms(nvars: int = 3) -> tuple[PolyForm, PolyForm]:
    """``(omega00, omega11)`` with ``omega00 = x^2+y^2+z^2`` and ``omega11 = x dy dz - y dx dz + z dx dy``."""
    if nvars != 3:
        raise DomainError("the characteristic forms live on a 3-dimensional dual")
    w00 = PolyForm(3, 0, {((2, 0, 0), ()): 1, ((0, 2, 0), ()): 1, ((0, 0, 2), ()): 1})
    w11 = PolyForm(3, 2, {((1, 0, 0), (1, 2)): 1, ((0, 1, 0), (0, 2)): -1, ((0, 0, 1), (0, 1)): 1})
    return w00, w11


def su2_characteristic_cycle_check(
    omega00: PolyForm | None = None,
    omega11: PolyForm | None = None,
    ppm: PoissonPolyModel | None = None,
) -> bool:
    """Is ``omega00 + omega11`` a cycle, ``omega11`` in column 0 and ``omega00`` in column 1?"""
    ppm = ppm or PoissonPolyModel.su2()
    d00, d11 = characteristic_forms()
    omega00 = d00 if omega00 is None else omega00
    omega11 = d11 if omega11 is None else omega11
    if omega00.degree != 0 or omega11.degree != 2:
        raise DomainError("expected a function and a 2-form")
    return cyclic_cycle_check(ppm, [omega11, omega00])
