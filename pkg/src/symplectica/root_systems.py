"""Simple root systems and the Weyl dimension formula.

Roots are stored as integer coefficient vectors in the basis of simple roots;
weights are stored in the basis of fundamental weights.  The invariant inner
product is normalized so that long roots have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm, prod
from typing import Iterator

from .errors import DomainError
from .linalg import QMatrix

__all__ = [
    "DominantWeight",
    "RootSystem",
    "build_root_system",
    "enumerate_weights_by_dim",
    "iter_weights_by_dim",
    "parse_group",
    "weyl_dimension",
]

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _simple_gram(family: str, n: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots (Bourbaki numbering)."""
    h = Fraction(1, 2)
    g = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = Fraction(v)

    if family == "A":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "B":
        for i in range(n - 1):
            g[i][i] = Fraction(2)
        g[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "C":
        for i in range(n - 1):
            g[i][i] = Fraction(1)
        g[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -h)
        link(n - 2, n - 1, -1)
    elif family == "D":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif family == "E":
        for i in range(n):
            g[i][i] = Fraction(2)
        for a, b in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]:
            if a <= n and b <= n:
                link(a - 1, b - 1, -1)
    elif family == "F":
        g[0][0] = g[1][1] = Fraction(2)
        g[2][2] = g[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, -h)
    elif family == "G":
        g[0][0] = Fraction(2, 3)
        g[1][1] = Fraction(2)
        link(0, 1, -1)
    return g


def _valid(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True)
class DominantWeight:
    """Highest weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if any(isinstance(c, bool) or not isinstance(c, int) for c in coords):
            raise DomainError(f"weight coordinates must be integers: {coords}")
        if any(c < 0 for c in coords):
            raise DomainError(f"weight {coords} is not dominant")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    simple_gram: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    weyl_vector: tuple[int, ...]
    inner_product: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def root_pairing(self, x, y) -> Fraction:
        """Invariant inner product of two vectors in simple-root coordinates."""
        g = self.simple_gram
        return sum(
            (Fraction(a) * g[i][j] * b for i, a in enumerate(x) if a for j, b in enumerate(y) if b),
            Fraction(0),
        )

    def weight_pairing(self, x, y) -> Fraction:
        g = self.inner_product
        return sum(
            (Fraction(a) * g[i][j] * b for i, a in enumerate(x) if a for j, b in enumerate(y) if b),
            Fraction(0),
        )

    def reflect_weight(self, i: int, w) -> tuple:
        """Simple reflection ``s_i`` acting on fundamental-weight coordinates."""
        a = w[i]
        return tuple(x - a * self.cartan_matrix[i][j] for j, x in enumerate(w))

    @cached_property
    def _dim_data(self) -> tuple[tuple[tuple[int, ...], ...], int]:
        # <lambda, alpha> = sum_j c_j a_j (alpha_j, alpha_j)/2; rescale to integers
        halves = [self.simple_gram[j][j] / 2 for j in range(self.rank)]
        scale = lcm(*(h.denominator for h in halves))
        s = [int(h * scale) for h in halves]
        vecs = tuple(tuple(c * sj for c, sj in zip(root, s)) for root in self.positive_roots)
        denom = prod(sum(v) for v in vecs)
        return vecs, denom


def build_root_system(family: str, rank: int) -> RootSystem:
    """Simple root system of type ``family``/``rank`` with its positive roots.

    >>> len(build_root_system("G", 2).positive_roots)
    6
    """
    family = str(family).upper()
    if not _valid(family, rank):
        raise DomainError(f"no simple root system of type {family}{rank}")
    n = rank
    gram = _simple_gram(family, n)
    cartan = tuple(tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(n)) for i in range(n))

    def coroot_pairing(root, i):
        # <beta, alpha_i^vee> = sum_j c_j A_{ji}
        return sum(c * cartan[j][i] for j, c in enumerate(root))

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - coroot_pairing(beta, i)
                if q > 0:
                    up = tuple(c + (1 if j == i else 0) for j, c in enumerate(beta))
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        level = nxt
    roots = tuple(sorted(found, key=lambda r: (sum(r), r)))
    if len(roots) != _POSITIVE_ROOT_COUNT[family](n):
        raise AssertionError(f"root closure produced {len(roots)} roots for {family}{n}")

    cm = QMatrix([[Fraction(x) for x in row] for row in cartan])
    b = QMatrix(gram)
    cinv = cm.inverse()
    gw = cinv @ b @ cinv.T
    return RootSystem(
        family=family,
        rank=n,
        cartan_matrix=cartan,
        simple_gram=tuple(tuple(r) for r in gram),
        positive_roots=roots,
        weyl_vector=(1,) * n,
        inner_product=gw.rows,
    )


_ALIAS = re.compile(r"^SU\(?(\d+)\)?$")


def parse_group(label: str) -> RootSystem:
    """Root system from a label like ``"A2"``, ``"G2"`` or the aliases ``"SU2"``/``"SU(3)"``."""
    text = label.strip().upper()
    m = _ALIAS.match(text)
    if m:
        n = int(m.group(1))
        if n < 2:
            raise DomainError(f"SU({n}) is not simple non-abelian")
        return build_root_system("A", n - 1)
    m = re.match(r"^([A-G])_?(\d+)$", text)
    if not m:
        raise DomainError(f"unrecognized group label {label!r}")
    return build_root_system(m.group(1), int(m.group(2)))


def _as_coords(rs: RootSystem, w) -> tuple[int, ...]:
    if not isinstance(w, DominantWeight):
        w = DominantWeight(tuple(w))
    if len(w.coords) != rs.rank:
        raise DomainError(f"weight has {len(w.coords)} coordinates, rank is {rs.rank}")
    return w.coords


def _dim_of(vecs, denom, coords) -> int:
    num = 1
    for v in vecs:
        num *= sum(c * (a + 1) for c, a in zip(v, coords))
    d, r = divmod(num, denom)
    if r:
        raise AssertionError(f"Weyl product {num} not divisible by {denom}")
    return d


def weyl_dimension(rs: RootSystem, w) -> int:
    """Dimension of the irreducible representation with highest weight ``w``.

    >>> weyl_dimension(build_root_system("A", 2), (1, 1))
    8
    """
    coords = _as_coords(rs, w)
    vecs, denom = rs._dim_data
    return _dim_of(vecs, denom, coords)


def iter_weights_by_dim(rs: RootSystem, max_dim: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Unordered stream of ``(coords, dim)`` with ``dim <= max_dim``.

    Depth-first over coordinates, incrementing only coordinates at or after
    the last one raised so each weight has exactly one path.  Since
    ``dim(w + e_i) > dim(w)``, a branch whose dimension exceeds the bound
    holds nothing further.
    """
    if max_dim < 1:
        raise DomainError("max_dim must be >= 1")
    vecs, denom = rs._dim_data
    r = rs.rank
    stack = [((0,) * r, 0)]
    while stack:
        coords, start = stack.pop()
        d = _dim_of(vecs, denom, coords)
        if d > max_dim:
            continue
        yield coords, d
        for i in range(start, r):
            child = coords[:i] + (coords[i] + 1,) + coords[i + 1:]
            stack.append((child, i))


def enumerate_weights_by_dim(rs: RootSystem, max_dim: int) -> list[tuple[DominantWeight, int]]:
    """All dominant weights of dimension at most ``max_dim``, sorted by ``(dim, coords)``."""
    found = sorted(iter_weights_by_dim(rs, max_dim), key=lambda cd: (cd[1], cd[0]))
    return [(DominantWeight(c), d) for c, d in found]
