"""Symplectic Hodge theory of a Lie algebra model, computed exactly.

Every operator is a per-degree :class:`QMatrix`; the identities relating
them (``d^2 = 0``, ``[Lambda, d] = delta``, ``[L, delta] = d`` and so on) are
checked as matrix equalities when the complex is built.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from ..errors import DomainError, InvariantError
from ..linalg import QMatrix, relative_rank, span_rank
from ..symplectic_linear import (
    GradedOperator,
    exterior_basis,
    lambda_op,
    lefschetz_L,
    star,
)
from .models import LieModel

__all__ = [
    "HodgeReport",
    "ModelComplex",
    "OddSequenceCertificate",
    "brylinski_test",
    "canonical_homology",
    "ce_differential",
    "cohomology",
    "hard_lefschetz",
    "hc_odd_sequence",
    "hodge_report",
    "koszul_delta",
    "periodic_cyclic",
    "weight_spectrum",
]


def _perm_sign(seq: tuple[int, ...]) -> int:
    inv = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inv % 2 else 1


class ModelComplex:
    """Operators ``d``, ``delta``, ``L``, ``Lambda``, ``*`` on the forms of a model."""

    def __init__(self, model: LieModel):
        self.model = model
        self.n = model.dim
        self.m = model.m
        self.sp = model.space()
        self.rank = [len(exterior_basis(self.n, k)) for k in range(self.n + 1)]
        self.d = [self._ce(k) for k in range(self.n + 1)]
        for k in range(self.n - 1):
            if not (self.d[k + 1] @ self.d[k]).is_zero():
                raise InvariantError(f"{model.name}: d^2 != 0 on degree {k}")
        self.L = [lefschetz_L(self.sp, k).matrix for k in range(self.n + 1)]
        self.Lam = [lambda_op(self.sp, k).matrix for k in range(self.n + 1)]
        self.star = [star(self.sp, k).matrix for k in range(self.n + 1)]
        self.delta_sign: list[int] = []
        self.delta = [self._delta(k) for k in range(self.n + 1)]
        self._check_identities()

    def _zero(self, rows_deg: int, cols_deg: int) -> QMatrix:
        r = self.rank[rows_deg] if 0 <= rows_deg <= self.n else 0
        c = self.rank[cols_deg] if 0 <= cols_deg <= self.n else 0
        return QMatrix.zeros(r, c)

    def _ce(self, k: int) -> QMatrix:
        """``d: Lambda^k -> Lambda^(k+1)`` with ``d e^c = -sum_{a<b} c_ab^c e^a ^ e^b``."""
        n = self.n
        de: list[list[tuple[tuple[int, int], Fraction]]] = [[] for _ in range(n)]
        for (a, b, c), val in self.model.structure_constants:
            de[c].append(((a, b), -val))
        src = exterior_basis(n, k)
        tgt = {J: i for i, J in enumerate(exterior_basis(n, k + 1))}
        rows = [[Fraction(0)] * len(src) for _ in tgt]
        for col, I in enumerate(src):
            for r, idx in enumerate(I):
                for (a, b), val in de[idx]:
                    seq = I[:r] + (a, b) + I[r + 1:]
                    if len(set(seq)) < len(seq):
                        continue
                    sgn = (-1) ** r * _perm_sign(seq)
                    rows[tgt[tuple(sorted(seq))]][col] += sgn * val
        return QMatrix(rows, ncols=len(src))

    def _d(self, k: int) -> QMatrix:
        return self.d[k] if 0 <= k <= self.n else self._zero(k + 1, k)

    def _lam(self, k: int) -> QMatrix:
        return self.Lam[k] if 0 <= k <= self.n else self._zero(k - 2, k)

    def _delta(self, k: int) -> QMatrix:
        """``delta = eps(k) * d *`` on ``Lambda^k``, sign fixed by ``[Lambda, d] = delta``."""
        n = self.n
        if k == 0:
            self.delta_sign.append(1)
            return self._zero(-1, 0)
        bracket = self._lam(k + 1) @ self._d(k) - self._d(k - 2) @ self._lam(k)
        sds = self.star[n - k + 1] @ self.d[n - k] @ self.star[k]
        if bracket == sds:
            self.delta_sign.append(1)
        elif bracket == -sds:
            self.delta_sign.append(-1)
        else:
            raise InvariantError(f"{self.model.name}: no sign makes *d* equal [Lambda, d] on degree {k}")
        return bracket

    def _delta_at(self, k: int) -> QMatrix:
        return self.delta[k] if 0 <= k <= self.n else self._zero(k - 1, k)

    def _L_at(self, k: int) -> QMatrix:
        return self.L[k] if 0 <= k <= self.n else self._zero(k + 2, k)

    def _check_identities(self) -> None:
        name = self.model.name
        for k in range(self.n + 1):
            if not (self._delta_at(k - 1) @ self._delta_at(k)).is_zero():
                raise InvariantError(f"{name}: delta^2 != 0 on degree {k}")
            if not (self._d(k - 1) @ self._delta_at(k) + self._delta_at(k + 1) @ self._d(k)).is_zero():
                raise InvariantError(f"{name}: d delta + delta d != 0 on degree {k}")
            # [L, delta] = d
            if self._L_at(k - 1) @ self._delta_at(k) - self._delta_at(k + 2) @ self._L_at(k) != self._d(k):
                raise InvariantError(f"{name}: [L, delta] != d on degree {k}")

    # ----- parity-graded assembly

    def offsets(self, parity: int) -> dict[int, int]:
        off, pos = {}, 0
        for k in range(parity, self.n + 1, 2):
            off[k] = pos
            pos += self.rank[k]
        return off

    def parity_dim(self, parity: int) -> int:
        return sum(self.rank[k] for k in range(parity, self.n + 1, 2))

    def _assemble(self, parity: int, blocks) -> QMatrix:
        """Matrix from the ``parity`` sum to the opposite one; ``blocks(k)`` yields ``(target_degree, matrix)``."""
        src, tgt = self.offsets(parity), self.offsets(1 - parity)
        rows = [[Fraction(0)] * self.parity_dim(parity) for _ in range(self.parity_dim(1 - parity))]
        for k, c0 in src.items():
            for t, mat in blocks(k):
                if t not in tgt:
                    continue
                r0 = tgt[t]
                for i, row in enumerate(mat.rows):
                    for j, x in enumerate(row):
                        if x:
                            rows[r0 + i][c0 + j] += x
        return QMatrix(rows, ncols=self.parity_dim(parity))

    def _assemble_same(self, parity: int, blocks) -> QMatrix:
        off = self.offsets(parity)
        dim = self.parity_dim(parity)
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for k, c0 in off.items():
            for t, mat in blocks(k):
                if t not in off:
                    continue
                r0 = off[t]
                for i, row in enumerate(mat.rows):
                    for j, x in enumerate(row):
                        if x:
                            rows[r0 + i][c0 + j] += x
        return QMatrix(rows, ncols=dim)

    def D(self, parity: int) -> QMatrix:
        """``d + delta`` from the ``parity`` sum to the other one."""
        key = ("D", parity)
        if key not in self._cache:
            self._cache[key] = self._assemble(
                parity, lambda k: [(k + 1, self.d[k]), (k - 1, self.delta[k])]
            )
        return self._cache[key]

    def T(self, parity: int) -> QMatrix:
        """``T = L + Lambda`` on the ``parity`` sum."""
        key = ("T", parity)
        if key not in self._cache:
            self._cache[key] = self._assemble_same(
                parity, lambda k: [(k + 2, self.L[k]), (k - 2, self.Lam[k])]
            )
        return self._cache[key]

    def star_parity(self, parity: int) -> QMatrix:
        """``*`` on the ``parity`` sum (``2m`` is even, so parity is kept)."""
        return self._assemble_same(parity, lambda k: [(self.n - k, self.star[k])])

    @cached_property
    def _cache(self) -> dict:
        return {}

    def embed(self, parity: int, k: int, vec) -> tuple[Fraction, ...]:
        off = self.offsets(parity)
        out = [Fraction(0)] * self.parity_dim(parity)
        for i, x in enumerate(vec):
            out[off[k] + i] = Fraction(x)
        return tuple(out)

    def component(self, parity: int, k: int, vec) -> tuple[Fraction, ...]:
        o = self.offsets(parity)[k]
        return tuple(vec[o:o + self.rank[k]])

    # ----- homology pieces

    def closed(self, k: int) -> list[tuple[Fraction, ...]]:
        return self.d[k].nullspace() if self.d[k].nrows else QMatrix.identity(self.rank[k]).columns()

    def exact(self, k: int) -> list[tuple[Fraction, ...]]:
        return self.d[k - 1].column_basis() if k >= 1 else []

    def cycles(self, parity: int) -> list[tuple[Fraction, ...]]:
        return self.D(parity).nullspace()

    def boundaries(self, parity: int) -> list[tuple[Fraction, ...]]:
        return self.D(1 - parity).column_basis()


@dataclass
class HodgeReport:
    model: str
    dim: int
    betti: list[int]
    canonical_homology_dims: list[int]
    hc_even_dim: int
    hc_odd_dim: int
    filtration_dims: dict[str, list[int]]
    weight_spectrum_even: list[tuple[int, int]]
    weight_spectrum_odd: list[tuple[int, int]]
    hard_lefschetz_ranks: list[int]
    brylinski_harmonic_dims: list[int]
    delta_signs: list[int]
    verdicts: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["weight_spectrum_even"] = [list(p) for p in self.weight_spectrum_even]
        d["weight_spectrum_odd"] = [list(p) for p in self.weight_spectrum_odd]
        return d


def _complex(model) -> ModelComplex:
    if isinstance(model, ModelComplex):
        return model
    if not isinstance(model, LieModel):
        raise DomainError(f"expected a LieModel, got {type(model).__name__}")
    return ModelComplex(model)


def ce_differential(model, k: int) -> GradedOperator:
    cx = _complex(model)
    if not 0 <= k <= cx.n:
        raise DomainError(f"degree {k} outside 0..{cx.n}")
    return GradedOperator(k, k + 1, cx.d[k])


def koszul_delta(model, k: int) -> GradedOperator:
    cx = _complex(model)
    if not 0 <= k <= cx.n:
        raise DomainError(f"degree {k} outside 0..{cx.n}")
    return GradedOperator(k, k - 1, cx.delta[k])


def cohomology(model) -> list[int]:
    """Betti numbers ``b_0 .. b_2m`` of the Chevalley-Eilenberg complex."""
    cx = _complex(model)
    ranks = [cx.d[k].rank() for k in range(cx.n + 1)]
    return [cx.rank[k] - ranks[k] - (ranks[k - 1] if k else 0) for k in range(cx.n + 1)]


def canonical_homology(model) -> list[int]:
    """``dim H_k(Omega, delta)``, checked against ``b_(2m-k)``."""
    cx = _complex(model)
    ranks = [cx.delta[k].rank() for k in range(cx.n + 1)]
    dims = [cx.rank[k] - ranks[k] - (ranks[k + 1] if k < cx.n else 0) for k in range(cx.n + 1)]
    betti = cohomology(cx)
    for k in range(cx.n + 1):
        if dims[k] != betti[cx.n - k]:
            raise InvariantError(f"{cx.model.name}: dim H_{k}(delta) = {dims[k]} but b_{cx.n - k} = {betti[cx.n - k]}")
    return dims


def _hc_dim(cx: ModelComplex, parity: int) -> int:
    return cx.parity_dim(parity) - cx.D(parity).rank() - cx.D(1 - parity).rank()


def _filtration(cx: ModelComplex, parity: int) -> list[int]:
    """``dim F_j`` for classes with a cycle supported in degrees ``<= 2j + parity``."""
    bnd = cx.boundaries(parity)
    D = cx.D(parity)
    off = cx.offsets(parity)
    dims = []
    for top in range(parity, cx.n + 1, 2):
        width = off[top] + cx.rank[top]
        sub = QMatrix([r[:width] for r in D.rows], ncols=width) if D.nrows else QMatrix.zeros(0, width)
        cyc = [tuple(v) + (Fraction(0),) * (cx.parity_dim(parity) - width) for v in sub.nullspace()]
        dims.append(relative_rank(cyc, bnd, cx.parity_dim(parity)))
    return dims


def periodic_cyclic(model) -> tuple[int, int, dict[str, list[int]]]:
    """``(hc_even, hc_odd, filtration)`` for the periodic complex of ``d + delta``.

    Raises :class:`InvariantError` when a graded piece of the filtration does
    not match the corresponding Betti number.
    """
    cx = _complex(model)
    betti = cohomology(cx)
    even, odd = _hc_dim(cx, 0), _hc_dim(cx, 1)
    filt = {"even": _filtration(cx, 0), "odd": _filtration(cx, 1)}
    for parity, key in ((0, "even"), (1, "odd")):
        prev = 0
        for j, f in enumerate(filt[key]):
            deg = 2 * j + parity
            if f - prev != betti[deg]:
                raise InvariantError(f"{cx.model.name}: F_{j + 1}/F_{j} has dim {f - prev}, b_{deg} = {betti[deg]}")
            prev = f
    if even != sum(betti[0::2]) or odd != sum(betti[1::2]):
        raise InvariantError(f"{cx.model.name}: periodic cyclic dims do not match Betti sums")
    return even, odd, filt


def _induced(cx: ModelComplex, parity: int, op: QMatrix) -> tuple[QMatrix, list]:
    """Matrix of ``op`` on ``HC^parity`` in a basis of cycle representatives."""
    dim = cx.parity_dim(parity)
    bnd = cx.boundaries(parity)
    cyc = cx.cycles(parity)
    D = cx.D(parity)
    for z in cyc:
        if any(D @ (op @ z)):
            raise InvariantError(f"{cx.model.name}: operator does not preserve cycles")
    if bnd and span_rank([op @ b for b in bnd] + bnd, dim) != len(bnd):
        raise InvariantError(f"{cx.model.name}: operator does not preserve boundaries")
    reps: list = []
    basis = list(bnd)
    for z in cyc:
        if span_rank(basis + [z], dim) > len(basis):
            basis.append(z)
            reps.append(z)
    if not reps:
        return QMatrix.zeros(0, 0), reps
    A = QMatrix.from_columns(reps + bnd, dim)
    cols = []
    for z in reps:
        x = A.solve(op @ z)
        if x is None:
            raise InvariantError(f"{cx.model.name}: image of a cycle left the cycle space")
        cols.append(x[: len(reps)])
    return QMatrix.from_columns(cols, len(reps)), reps


def _spectrum(cx: ModelComplex, parity: int) -> list[tuple[int, int]]:
    M, reps = _induced(cx, parity, cx.T(parity))
    r = len(reps)
    spectrum = []
    for lam in range(-cx.m, cx.m + 1):
        mult = r - (M - QMatrix.identity(r).scale(lam)).rank() if r else 0
        if mult:
            spectrum.append((lam, mult))
    if sum(mult for _, mult in spectrum) != r:
        raise InvariantError(
            f"{cx.model.name}: T on HC^{'odd' if parity else 'even'} is not semisimple with integer spectrum"
        )
    return spectrum


def weight_spectrum(model) -> dict[str, list[tuple[int, int]]]:
    """Eigenvalues and multiplicities of ``T = L + Lambda`` on ``HC^even`` and ``HC^odd``."""
    cx = _complex(model)
    for parity in (0, 1):
        lhs = cx.T(1 - parity) @ cx.D(parity) - cx.D(parity) @ cx.T(parity)
        if lhs != cx.D(parity):
            raise InvariantError(f"{cx.model.name}: [T, d + delta] != d + delta")
    return {"even": _spectrum(cx, 0), "odd": _spectrum(cx, 1)}


def _power(cx: ModelComplex, k: int, j: int) -> QMatrix:
    mat = QMatrix.identity(cx.rank[k])
    for step in range(j):
        mat = cx.L[k + 2 * step] @ mat
    return mat


def hard_lefschetz(model) -> list[int]:
    """Ranks of ``L^(m-k): H^k -> H^(2m-k)`` for ``k = 0..m``."""
    cx = _complex(model)
    out = []
    for k in range(cx.m + 1):
        t = cx.n - k
        P = _power(cx, k, cx.m - k)
        out.append(relative_rank([P @ z for z in cx.closed(k)], cx.exact(t), cx.rank[t]))
    return out


def brylinski_test(model, k: int) -> tuple[int, int, bool]:
    """``(harmonic_dim, b_k, holds)``: classes with a ``d``- and ``delta``-closed representative."""
    cx = _complex(model)
    if not 0 <= k <= cx.n:
        raise DomainError(f"degree {k} outside 0..{cx.n}")
    stacked = QMatrix(cx.d[k].rows + cx.delta[k].rows, ncols=cx.rank[k])
    harm = stacked.nullspace() if stacked.nrows else QMatrix.identity(cx.rank[k]).columns()
    hdim = relative_rank(harm, cx.exact(k), cx.rank[k])
    b = cohomology(cx)[k]
    if hdim > b:
        raise InvariantError(f"{cx.model.name}: harmonic dim {hdim} exceeds b_{k} = {b}")
    return hdim, b, hdim == b


@dataclass
class OddSequenceCertificate:
    """Rank data for ``0 -> H^1 -> HC^odd -> H^3 -> 0`` on a 4-dimensional model."""

    b1: int
    b3: int
    hc_odd: int
    injective: bool
    surjective: bool
    exact_middle: bool
    well_defined: bool
    plus_eigenspace_dim: int
    minus_eigenspace_dim: int
    splitting_is_lefschetz: bool

    @property
    def exact(self) -> bool:
        return self.injective and self.surjective and self.exact_middle and self.well_defined


def hc_odd_sequence(model) -> OddSequenceCertificate:
    """Chain-level check of ``0 -> H^1 -> HC^odd -> H^3 -> 0``.

    ``i[rho] = [(rho, 0)]``, ``pi[(rho, P)] = [P]``; surjectivity uses the
    lift ``(*P, P)`` of a closed 3-form.  The ``T = +1`` and ``T = -1`` classes
    are ``(*P, P)`` and ``(rho, -*rho)``.
    """
    cx = _complex(model)
    if cx.n != 4:
        raise DomainError(f"the odd sequence needs a 4-dimensional model, got {cx.n}")
    dim = cx.parity_dim(1)
    D = cx.D(1)
    bnd = cx.boundaries(1)
    b = cohomology(cx)
    z1, z3 = cx.closed(1), cx.closed(3)
    e3 = cx.exact(3)

    def odd(rho, P):
        return tuple(Fraction(x) for x in rho) + tuple(P)

    def is_cycle(v):
        return not any(D @ v)

    zero1, zero3 = (Fraction(0),) * cx.rank[1], (Fraction(0),) * cx.rank[3]
    i_imgs = [odd(r, zero3) for r in z1]
    well = all(is_cycle(v) for v in i_imgs)
    # exact 1-forms map to boundaries, boundaries map to exact 3-forms
    well = well and all(relative_rank([odd(r, zero3)], bnd, dim) == 0 for r in cx.exact(1))
    well = well and all(relative_rank([cx.component(1, 3, v)], e3, cx.rank[3]) == 0 for v in bnd)
    injective = relative_rank(i_imgs, bnd, dim) == b[1]

    lifts = [odd(cx.star[3] @ P, P) for P in z3]
    surjective = all(is_cycle(v) for v in lifts) and relative_rank(z3, e3, cx.rank[3]) == b[3]
    hc = _hc_dim(cx, 1)
    # ker pi: cycles whose 3-part is exact; compare with image of i
    cyc = cx.cycles(1)
    ker_pi = [v for v in cyc if relative_rank([cx.component(1, 3, v)], e3, cx.rank[3]) == 0]
    ker_pi_dim = hc - relative_rank([cx.component(1, 3, v) for v in cyc], e3, cx.rank[3])
    exact_middle = ker_pi_dim == b[1] and relative_rank(i_imgs + ker_pi, bnd, dim) == relative_rank(i_imgs, bnd, dim)

    T = cx.T(1)
    plus = [v for v in lifts if T @ v == v]
    minus_vecs = [odd(r, tuple(-x for x in cx.star[1] @ r)) for r in z1]
    minus = [v for v in minus_vecs if T @ v == tuple(-x for x in v)]
    plus_dim = relative_rank(plus, bnd, dim) if len(plus) == len(lifts) else -1
    minus_dim = relative_rank(minus, bnd, dim) if len(minus) == len(minus_vecs) else -1
    lefschetz = hard_lefschetz(cx)[1] == b[1] == b[3]
    return OddSequenceCertificate(
        b1=b[1],
        b3=b[3],
        hc_odd=hc,
        injective=injective,
        surjective=surjective,
        exact_middle=exact_middle and hc == b[1] + b[3],
        well_defined=well,
        plus_eigenspace_dim=plus_dim,
        minus_eigenspace_dim=minus_dim,
        splitting_is_lefschetz=lefschetz,
    )


def hodge_report(model) -> HodgeReport:
    cx = _complex(model)
    betti = cohomology(cx)
    canon = canonical_homology(cx)
    even, odd, filt = periodic_cyclic(cx)
    spectrum = weight_spectrum(cx)
    hl = hard_lefschetz(cx)
    bry = [brylinski_test(cx, k)[0] for k in range(cx.n + 1)]
    verdicts = {
        "hard_lefschetz": all(hl[k] == betti[k] for k in range(cx.m + 1)),
        "brylinski": all(bry[k] == betti[k] for k in range(cx.n + 1)),
        "degenerates": even == sum(betti[0::2]) and odd == sum(betti[1::2]),
        "odd_spectrum_pm1": {lam for lam, _ in spectrum["odd"]} <= {-1, 1},
    }
    return HodgeReport(
        model=cx.model.name,
        dim=cx.n,
        betti=betti,
        canonical_homology_dims=canon,
        hc_even_dim=even,
        hc_odd_dim=odd,
        filtration_dims=filt,
        weight_spectrum_even=spectrum["even"],
        weight_spectrum_odd=spectrum["odd"],
        hard_lefschetz_ranks=hl,
        brylinski_harmonic_dims=bry,
        delta_signs=list(cx.delta_sign),
        verdicts=verdicts,
    )
