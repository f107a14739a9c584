"""
R-matrices and braidings on a finite-dimensional space V.

Operators on V (x) V are square matrices whose column j holds the image of
basis vector j.  Two orderings of the basis of V (x) V are supported:

* ``LEX``: x_i (x) x_j sits at index (i-1)*dim + (j-1); used internally.
* ``PAPER``: the first factor varies fastest, i.e. for dim 2 the order
  x1x1, x2x1, x1x2, x2x2 in which the catalog matrices are written.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Literal, Sequence

from . import linalg
from .errors import NicholsError
from .scalars import Scalar, as_scalar


class Kind(str, Enum):
    R_MATRIX = "R"
    BRAIDING = "c"


class Ordering(str, Enum):
    PAPER = "paper"
    LEX = "lex"


@dataclass(frozen=True)
class SquareOperator:
    entries: tuple[tuple[Scalar, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def conductor(self) -> int:
        return self.entries[0][0].conductor

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], conductor: int = 1) -> SquareOperator:
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("operator must be square")
        return cls(tuple(tuple(as_scalar(v, conductor) for v in r) for r in rows))

    @classmethod
    def identity(cls, size: int, conductor: int = 1) -> SquareOperator:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)],
                             conductor)

    @classmethod
    def permutation(cls, perm: Sequence[int], conductor: int = 1) -> SquareOperator:
        """Operator sending basis vector j to basis vector perm[j]."""
        n = len(perm)
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(perm):
            rows[i][j] = 1
        return cls.from_rows(rows, conductor)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: SquareOperator) -> SquareOperator:
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        zero = Scalar.zero(self.conductor)
        cols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append(tuple(
                sum((a * col[k] for k, a in nz if col[k]), zero) for col in cols))
        return SquareOperator(tuple(out))

    def __add__(self, other: SquareOperator) -> SquareOperator:
        return SquareOperator(tuple(tuple(a + b for a, b in zip(r, s))
                                    for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: SquareOperator) -> SquareOperator:
        return SquareOperator(tuple(tuple(a - b for a, b in zip(r, s))
                                    for r, s in zip(self.entries, other.entries)))

    def scaled(self, kappa) -> SquareOperator:
        return SquareOperator(tuple(tuple(kappa * a for a in r) for r in self.entries))

    def transpose(self) -> SquareOperator:
        return SquareOperator(tuple(zip(*self.entries)))

    def kron(self, other: SquareOperator) -> SquareOperator:
        n, m = self.size, other.size
        rows = []
        for i1 in range(n):
            for i2 in range(m):
                rows.append(tuple(self.entries[i1][j1] * other.entries[i2][j2]
                                  for j1 in range(n) for j2 in range(m)))
        return SquareOperator(tuple(rows))

    def conjugate(self, perm: Sequence[int]) -> SquareOperator:
        """P A P^-1 for the permutation operator P of ``perm``."""
        n = self.size
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[perm[i]][perm[j]] = self.entries[i][j]
        return SquareOperator(tuple(tuple(r) for r in rows))

    def row_vectors(self) -> list[linalg.Vector]:
        return [{j: v for j, v in enumerate(r) if v} for r in self.entries]

    def rank(self) -> int:
        return linalg.rank(self.row_vectors())

    def is_invertible(self) -> bool:
        return self.rank() == self.size

    def inverse(self) -> SquareOperator:
        n = self.size
        one = Scalar.one(self.conductor)
        aug = [dict(r, **{}) for r in self.row_vectors()]
        for i in range(n):
            aug[i][n + i] = one
        rref, pivots = linalg.row_reduce(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise NicholsError("operator is singular")
        zero = Scalar.zero(self.conductor)
        return SquareOperator(tuple(
            tuple(rref[i].get(n + j, zero) for j in range(n)) for i in range(n)))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.entries)


@dataclass(frozen=True)
class BraidingSpec:
    dim: int
    operator: SquareOperator
    kind: Kind = Kind.BRAIDING
    ordering: Ordering = Ordering.LEX

    def __post_init__(self) -> None:
        if self.operator.size != self.dim ** 2:
            raise ValueError(f"operator size {self.operator.size} != dim^2 = {self.dim ** 2}")

    @property
    def conductor(self) -> int:
        return self.operator.conductor

    def lex(self) -> BraidingSpec:
        if self.ordering is Ordering.LEX:
            return self
        return BraidingSpec(self.dim, self.operator.conjugate(paper_to_lex(self.dim)),
                            self.kind, Ordering.LEX)

    def paper(self) -> BraidingSpec:
        if self.ordering is Ordering.PAPER:
            return self
        inv = _invert_perm(paper_to_lex(self.dim))
        return BraidingSpec(self.dim, self.operator.conjugate(inv), self.kind, Ordering.PAPER)

    def image(self, i: int, j: int) -> dict[tuple[int, int], Scalar]:
        """c(x_i (x) x_j) as {(a, b): coefficient of x_a (x) x_b}, letters 1-based."""
        c = self.lex()
        d = self.dim
        col = (i - 1) * d + (j - 1)
        out = {}
        for row in range(d * d):
            v = c.operator.entries[row][col]
            if v:
                out[(row // d + 1, row % d + 1)] = v
        return out


def paper_to_lex(dim: int) -> list[int]:
    """perm[paper_index] = lex_index."""
    perm = [0] * (dim * dim)
    for i in range(dim):
        for j in range(dim):
            perm[i + dim * j] = i * dim + j
    return perm


def _invert_perm(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def flip(dim: int, conductor: int = 1) -> SquareOperator:
    """The flip tau(x (x) y) = y (x) x in LEX ordering."""
    return SquareOperator.permutation(
        [(k % dim) * dim + k // dim for k in range(dim * dim)], conductor)


def to_braiding(spec: BraidingSpec) -> BraidingSpec:
    """c = tau o R, returned in LEX ordering."""
    if spec.kind is not Kind.R_MATRIX:
        raise ValueError("to_braiding expects an R-matrix")
    R = spec.lex().operator
    return BraidingSpec(spec.dim, flip(spec.dim, R.conductor) @ R, Kind.BRAIDING, Ordering.LEX)


def _dim_of(A: SquareOperator) -> int:
    d = round(A.size ** 0.5)
    if d * d != A.size:
        raise ValueError("operator size is not a square")
    return d


def satisfies_qybe(R: SquareOperator) -> bool:
    """R12 R13 R23 == R23 R13 R12 on V^(x)3 (R in LEX ordering)."""
    d = _dim_of(R)
    I = SquareOperator.identity(d, R.conductor)
    R12 = R.kron(I)
    R23 = I.kron(R)
    P23 = I.kron(flip(d, R.conductor))
    R13 = P23 @ R12 @ P23
    return R12 @ R13 @ R23 == R23 @ R13 @ R12


def satisfies_braid_eq(c: SquareOperator) -> bool:
    d = _dim_of(c)
    I = SquareOperator.identity(d, c.conductor)
    c1 = c.kron(I)
    c2 = I.kron(c)
    return c1 @ c2 @ c1 == c2 @ c1 @ c2


def is_invertible(A: SquareOperator) -> bool:
    return A.is_invertible()


def c_flat(spec: BraidingSpec) -> SquareOperator:
    """Matrix of f (x) v -> sum_i (ev (x) id (x) id)(f (x) c(v (x) v_i) (x) v^i).

    Columns are indexed by f^l (x) v_j and rows by v_b (x) v^i, both as
    (dual index, primal index) pairs, so row i*dim + b and column l*dim + j.
    The entry is the coefficient of v_l (x) v_b in c(v_j (x) v_i).  With this
    pairing a diagonal braiding gives a diagonal matrix.
    """
    if spec.kind is not Kind.BRAIDING:
        raise ValueError("c_flat expects a braiding")
    c = spec.lex().operator
    d = spec.dim
    zero = Scalar.zero(c.conductor)
    rows = [[zero] * (d * d) for _ in range(d * d)]
    for l in range(d):
        for j in range(d):
            for b in range(d):
                for i in range(d):
                    rows[i * d + b][l * d + j] = c.entries[l * d + b][j * d + i]
    return SquareOperator(tuple(tuple(r) for r in rows))


def is_rigid(spec: BraidingSpec) -> bool:
    return c_flat(spec).is_invertible()


TransformName = Literal["transpose", "sharp", "scale", "basis"]


def transform(R: SquareOperator, which: TransformName, arg=None) -> SquareOperator:
    """Apply one of the equivalences (a), (c), (d), (e) to a LEX operator.

    ``"sharp"`` is tau R tau; ``"scale"`` takes kappa != 0; ``"basis"`` takes an
    invertible dim x dim operator phi and returns (phi (x) phi) R (phi (x) phi)^-1.
    """
    if which == "transpose":
        return R.transpose()
    if which == "sharp":
        t = flip(_dim_of(R), R.conductor)
        return t @ R @ t
    if which == "scale":
        kappa = as_scalar(arg, R.conductor)
        if not kappa:
            raise ValueError("homothety factor must be nonzero")
        return R.scaled(kappa)
    if which == "basis":
        phi: SquareOperator = arg
        if not phi.is_invertible():
            raise ValueError("change of basis must be invertible")
        F = phi.kron(phi)
        return F @ R @ F.inverse()
    raise ValueError(f"unknown transform {which!r}")


def diagonal_braiding(q: Sequence[Sequence], conductor: int = 1) -> BraidingSpec:
    """c(x_i (x) x_j) = q_ij x_j (x) x_i."""
    d = len(q)
    rows = [[0] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            rows[j * d + i][i * d + j] = as_scalar(q[i][j], conductor)
    return BraidingSpec(d, SquareOperator.from_rows(rows, conductor))


def braiding_from_json(data: dict) -> BraidingSpec:
    """Build a spec from the braiding input schema (already decoded)."""
    try:
        dim = int(data["dim"])
        conductor = int(data["conductor"])
        kind = Kind(data.get("kind", "c"))
        ordering = Ordering(data.get("ordering", "lex"))
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise NicholsError(f"invalid braiding file: {exc}") from exc
    if conductor < 1 or dim < 1:
        raise NicholsError("dim and conductor must be positive")
    op = SquareOperator.from_rows([[str(v) for v in row] for row in entries], conductor)
    return BraidingSpec(dim, op, kind, ordering)


def load_braiding(path: str | Path) -> BraidingSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise NicholsError(f"{path}: {exc}") from exc
    return braiding_from_json(data)


def braiding_to_json(spec: BraidingSpec) -> dict:
    return {
        "dim": spec.dim,
        "conductor": spec.conductor,
        "kind": spec.kind.value,
        "ordering": spec.ordering.value,
        "entries": [[str(v) for v in row] for row in spec.operator.entries],
    }


def as_braiding(spec: BraidingSpec) -> BraidingSpec:
    """Braiding in LEX ordering, converting an R-matrix if needed."""
    if spec.kind is Kind.R_MATRIX:
        return to_braiding(spec)
    return spec.lex()
