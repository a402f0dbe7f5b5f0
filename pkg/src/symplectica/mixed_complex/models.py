"""Symplectic Lie algebra models: structure constants plus a closed nondegenerate 2-cochain.

Indices are 0-based internally and 1-based in model files.  A bracket
``[e_i, e_j] = sum_k c_ij^k e_k`` is stored once, for ``i < j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from ..errors import ModelError
from ..exact_arith import format_rational, parse_rational
from ..linalg import QMatrix
from ..symplectic_linear import SymplecticSpace, exterior_basis

__all__ = ["BUILTIN_MODELS", "LieModel", "builtin_model", "load_model", "model_to_json", "save_model"]

Bracket = Mapping[tuple[int, int], Mapping[int, Fraction]]


@dataclass(frozen=True)
class LieModel:
    """Left-invariant forms on a symplectic Lie algebra.

    ``structure_constants`` holds ``((i, j, k), c)`` with ``i < j`` and ``c != 0``;
    ``omega_cochain`` holds coefficients over ``exterior_basis(dim, 2)``.
    """

    name: str
    dim: int
    structure_constants: tuple[tuple[tuple[int, int, int], Fraction], ...]
    omega_cochain: tuple[Fraction, ...]
    _bracket: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        br: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), c in self.structure_constants:
            br.setdefault((i, j), {})[k] = Fraction(c)
        object.__setattr__(self, "_bracket", br)

    @classmethod
    def build(
        cls,
        name: str,
        dim: int,
        brackets: Iterable[tuple[int, int, int, object]],
        omega: Iterable[tuple[int, int, object]],
    ) -> "LieModel":
        """Validated model from 0-based ``(i, j, k, c)`` brackets and ``(i, j, c)`` omega terms."""
        if dim < 2 or dim % 2:
            raise ModelError(f"{name}: dimension must be even and positive, got {dim}")
        consts: dict[tuple[int, int, int], Fraction] = {}
        for i, j, k, c in brackets:
            _check_index(name, dim, i, j, k)
            if i == j:
                raise ModelError(f"{name}: bracket [e{i + 1}, e{i + 1}] must vanish")
            c = parse_rational(c)
            if i > j:
                i, j, c = j, i, -c
            consts[(i, j, k)] = consts.get((i, j, k), Fraction(0)) + c
        pos = {I: n for n, I in enumerate(exterior_basis(dim, 2))}
        w = [Fraction(0)] * len(pos)
        for i, j, c in omega:
            _check_index(name, dim, i, j)
            if i == j:
                continue
            c = parse_rational(c)
            if i > j:
                i, j, c = j, i, -c
            w[pos[(i, j)]] += c
        model = cls(
            name=name,
            dim=dim,
            structure_constants=tuple(sorted((key, c) for key, c in consts.items() if c)),
            omega_cochain=tuple(w),
        )
        model.validate()
        return model

    @property
    def m(self) -> int:
        return self.dim // 2

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """``[e_i, e_j]`` as a sparse ``{k: c}``."""
        if i == j:
            return {}
        if i < j:
            return dict(self._bracket.get((i, j), {}))
        return {k: -c for k, c in self._bracket.get((j, i), {}).items()}

    def space(self) -> SymplecticSpace:
        return SymplecticSpace.from_form(self.dim, self.omega_cochain)

    def is_abelian(self) -> bool:
        return not self.structure_constants

    def validate(self) -> None:
        """Raise :class:`ModelError` on Jacobi failure, non-unimodularity, ``d omega != 0`` or degeneracy."""
        n = self.dim
        for a, b, c in combinations(range(n), 3):
            total: dict[int, Fraction] = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for k, u in self.bracket(x, y).items():
                    for l, v in self.bracket(k, z).items():
                        total[l] = total.get(l, Fraction(0)) + u * v
            if any(total.values()):
                raise ModelError(f"{self.name}: Jacobi identity fails on (e{a + 1}, e{b + 1}, e{c + 1})")
        for x in range(n):
            if sum(self.bracket(x, k).get(k, Fraction(0)) for k in range(n)):
                raise ModelError(f"{self.name}: not unimodular (tr ad e{x + 1} != 0)")
        # d omega (a, b, c) = -omega([a,b], c) + omega([a,c], b) - omega([b,c], a)
        W = self._omega_matrix()
        for a, b, c in combinations(range(n), 3):
            val = Fraction(0)
            for (x, y, z), sgn in (((a, b, c), -1), ((a, c, b), 1), ((b, c, a), -1)):
                for k, u in self.bracket(x, y).items():
                    val += sgn * u * W[k, z]
            if val:
                raise ModelError(f"{self.name}: omega is not closed (d omega on e{a + 1}, e{b + 1}, e{c + 1})")
        if W.det() == 0:
            raise ModelError(f"{self.name}: omega is degenerate")

    def _omega_matrix(self) -> QMatrix:
        n = self.dim
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in zip(exterior_basis(n, 2), self.omega_cochain):
            rows[i][j], rows[j][i] = c, -c
        return QMatrix(rows)


def _check_index(name, dim, *idx):
    for i in idx:
        if not 0 <= i < dim:
            raise ModelError(f"{name}: index {i + 1} outside 1..{dim}")


def _torus(m: int) -> LieModel:
    return LieModel.build(f"T{2 * m}", 2 * m, [], [(2 * a, 2 * a + 1, 1) for a in range(m)])


def _kodaira_thurston() -> LieModel:
    # [e1, e2] = e3, omega = e13 + e24
    return LieModel.build("KT", 4, [(0, 1, 2, 1)], [(0, 2, 1), (1, 3, 1)])


def _filiform() -> LieModel:
    # [e1, e2] = e3, [e1, e3] = e4, omega = e14 + e23
    return LieModel.build("filiform4", 4, [(0, 1, 2, 1), (0, 2, 3, 1)], [(0, 3, 1), (1, 2, 1)])


def _kt_times_t2() -> LieModel:
    return LieModel.build("KTxT2", 6, [(0, 1, 2, 1)], [(0, 2, 1), (1, 3, 1), (4, 5, 1)])


BUILTIN_MODELS = {
    "T2": lambda: _torus(1),
    "T4": lambda: _torus(2),
    "T6": lambda: _torus(3),
    "KT": _kodaira_thurston,
    "filiform4": _filiform,
    "KTxT2": _kt_times_t2,
}


def builtin_model(name: str) -> LieModel:
    try:
        return BUILTIN_MODELS[name]()
    except KeyError:
        known = ", ".join(BUILTIN_MODELS)
        raise ModelError(f"unknown model {name!r}; built-ins: {known}") from None


def model_to_json(model: LieModel) -> dict:
    """Model file dict: 1-based indices, rationals as strings."""
    return {
        "name": model.name,
        "dim": model.dim,
        "brackets": [
            {"i": i + 1, "j": j + 1, "k": k + 1, "c": format_rational(c)}
            for (i, j, k), c in model.structure_constants
        ],
        "omega": [
            {"i": i + 1, "j": j + 1, "c": format_rational(c)}
            for (i, j), c in zip(exterior_basis(model.dim, 2), model.omega_cochain)
            if c
        ],
    }


def _from_json(data: dict) -> LieModel:
    try:
        name = str(data.get("name", "model"))
        dim = int(data["dim"])
        brackets = [(int(b["i"]) - 1, int(b["j"]) - 1, int(b["k"]) - 1, b["c"]) for b in data.get("brackets", [])]
        omega = [(int(w["i"]) - 1, int(w["j"]) - 1, w["c"]) for w in data["omega"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed model file: {exc}") from exc
    return LieModel.build(name, dim, brackets, omega)


def load_model(source) -> LieModel:
    """Load a model from a JSON path, a JSON string, a dict, or a built-in name."""
    if isinstance(source, LieModel):
        return source
    if isinstance(source, dict):
        return _from_json(source)
    text = str(source)
    if text in BUILTIN_MODELS:
        return builtin_model(text)
    path = Path(text)
    if path.exists():
        try:
            return _from_json(json.loads(path.read_text()))
        except json.JSONDecodeError as exc:
            raise ModelError(f"{path}: invalid JSON: {exc}") from exc
    try:
        return _from_json(json.loads(text))
    except json.JSONDecodeError:
        raise ModelError(f"no built-in model or file named {text!r}") from None


def save_model(model: LieModel, path) -> None:
    Path(path).write_text(json.dumps(model_to_json(model), indent=2) + "\n")
