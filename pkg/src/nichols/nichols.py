"""
Degree-by-degree invariants of the Nichols algebra B(V).

The workhorse is :class:`NicholsTower`.  It keeps, for each degree m, a basis
of B^m(V) made of words, the matrices of left multiplication by each letter
B^(m-1) -> B^m, and the derivations of each basis word projected to B^(m-1).
An element u of degree m lies in J(V) iff every d_a(u) vanishes in B^(m-1),
so B^m is the image of u -> (d_a(u))_a and is found by one elimination per
degree over dim * d_(m-1) candidate words x_l * (basis word).  This agrees
with rank S_m (S_m = (id (x) S_(m-1)) o Delta_(1,m-1)) without ever building
the dim^m x dim^m symmetrizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import linalg
from .braidings import BraidingSpec, as_braiding
from .derivations import RECURSIVE_LIMIT, vanishes_recursive
from .errors import NicholsError
from .scalars import INFINITE, Scalar, UnityOrder, root_of_unity_order
from .tensor import TensorElem, Word, check_degree, kernel_basis, symmetrizer


@dataclass(frozen=True)
class HilbertWindow:
    max_degree: int
    dims: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.dims)

    def trailing_zeros(self) -> int:
        n = 0
        for d in reversed(self.dims):
            if d:
                break
            n += 1
        return n


class Growth(str, Enum):
    FINITE = "FINITE"
    BOUNDED = "BOUNDED"
    LINEAR = "LINEAR"
    SUPERLINEAR = "SUPERLINEAR"


@dataclass(frozen=True)
class GrowthClass:
    tag: Growth
    window_used: tuple[int, int]


class NicholsTower:
    """Lazily extended graded structure of B(V) for one braiding."""

    def __init__(self, c: BraidingSpec) -> None:
        self.c = as_braiding(c)
        self.dim = self.c.dim
        self.conductor = self.c.conductor
        d = self.dim
        self._img = {(l, j): self.c.image(l, j)
                     for l in range(1, d + 1) for j in range(1, d + 1)}
        one = Scalar.one(self.conductor)
        self.basis: list[list[Word]] = [[()]]
        # lam[m][l-1][t] = coordinates in B^m of x_l * basis[m-1][t]
        self.lam: list[list[list[linalg.Vector]]] = [[]]
        # der[m][s][a-1] = coordinates in B^(m-1) of d_a(basis[m][s])
        self.der: list[list[list[linalg.Vector]]] = [[]]
        self._one = one

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    def dims(self, D: int) -> tuple[int, ...]:
        self.extend_to(D)
        return tuple(len(self.basis[m]) for m in range(D + 1))

    def extend_to(self, D: int) -> None:
        while self.top < D:
            self._grow()

    def _left(self, b: int, m: int, vec: linalg.Vector) -> linalg.Vector:
        """x_b * (element of B^(m-1) given by vec), as coordinates in B^m."""
        cols = self.lam[m][b - 1]
        out: linalg.Vector = {}
        for t, a in vec.items():
            linalg.axpy(out, a, cols[t])
        return out

    def _grow(self) -> None:
        m = self.top + 1
        d = self.dim
        prev = self.basis[m - 1]
        n_prev = len(prev)
        # Column of candidate (l, t) = stacked blocks d_a(x_l u_t), a = 1..dim.
        cand_cols: list[linalg.Vector] = []
        cand_words: list[Word] = []
        for l in range(1, d + 1):
            for t, u in enumerate(prev):
                col: linalg.Vector = {(l - 1) * n_prev + t: self._one}
                if m >= 2:
                    for j in range(1, d + 1):
                        dj = self.der[m - 1][t][j - 1]
                        if not dj:
                            continue
                        for (a, b), coef in self._img[(l, j)].items():
                            blk = self._left(b, m - 1, dj)
                            off = (a - 1) * n_prev
                            linalg.axpy(col, coef, {off + k: v for k, v in blk.items()})
                cand_cols.append(col)
                cand_words.append((l,) + u)
        rref, pivots = linalg.row_reduce(linalg.transpose(cand_cols))
        # column k of the rref = coordinates of candidate k in the pivot basis
        coords: list[linalg.Vector] = [{} for _ in cand_cols]
        for r, row in enumerate(rref):
            for k, v in row.items():
                coords[k][r] = v
        self.basis.append([cand_words[p] for p in pivots])
        self.lam.append([[coords[(l - 1) * n_prev + t] for t in range(n_prev)]
                         for l in range(1, d + 1)])
        self.der.append([
            [{k - (a - 1) * n_prev: v for k, v in cand_cols[p].items()
              if (a - 1) * n_prev <= k < a * n_prev}
             for a in range(1, d + 1)]
            for p in pivots])

    def project_word(self, w: Word) -> linalg.Vector:
        """Coordinates in B^m of the class of the word w."""
        self.extend_to(len(w))
        vec: linalg.Vector = {0: self._one}
        for k in range(len(w) - 1, -1, -1):
            vec = self._left(w[k], len(w) - k, vec)
        return vec

    def project(self, u: TensorElem) -> linalg.Vector:
        out: linalg.Vector = {}
        for w, a in u.terms.items():
            linalg.axpy(out, a, self.project_word(w))
        return out

    def contains(self, u: TensorElem, cap: int | None = None) -> bool:
        """u in J(V)."""
        check_degree(u.degree, cap)
        return not self.project(u)

    def relations_in_degree(self, m: int) -> list[TensorElem]:
        """Kernel basis of the projection V^(x)m -> B^m (all of J^m)."""
        from .tensor import words
        self.extend_to(m)
        rows = linalg.transpose([self.project_word(w) for w in words(self.dim, m)])
        vecs = linalg.kernel(rows, self.dim ** m, self.conductor)
        return [TensorElem.from_vector(v, self.dim, m, self.conductor) for v in vecs]


@lru_cache(maxsize=128)
def tower_for(c: BraidingSpec) -> NicholsTower:
    return NicholsTower(as_braiding(c))


def quadratic_relations(c: BraidingSpec) -> list[TensorElem]:
    """Normalized basis of ker(id + c) in degree 2."""
    return kernel_basis(symmetrizer(c, 2))


def hilbert_series(c: BraidingSpec, D: int, cap: int | None = None) -> HilbertWindow:
    check_degree(D, cap)
    return HilbertWindow(D, tower_for(c).dims(D))


def hilbert_series_by_symmetrizer(c: BraidingSpec, D: int,
                                  cap: int | None = None) -> HilbertWindow:
    """Reference route: d_m = rank S_m from the full dim^m matrices."""
    from .tensor import rank
    check_degree(D, cap)
    return HilbertWindow(D, tuple(rank(symmetrizer(c, m, cap)) for m in range(D + 1)))


def symmetrizer_kills(c: BraidingSpec, u: TensorElem, cap: int | None = None) -> bool:
    return symmetrizer(c, u.degree, cap)(u).is_zero()


def verify_relation(c: BraidingSpec, u: TensorElem, cap: int | None = None) -> bool:
    """u in J(V); cross-checked by the derivation recursion up to degree 6."""
    check_degree(u.degree, cap)
    if u.is_zero():
        return True
    result = tower_for(c).contains(u, cap)
    if u.degree <= RECURSIVE_LIMIT:
        if vanishes_recursive(c, u) != result:
            raise NicholsError(f"membership routes disagree on {u}")
    return result


def power_relation_degree(c: BraidingSpec, i: int, bound: int = 1000) -> int | None:
    """N = ord(q) if c(x_i (x) x_i) = q x_i (x) x_i with 2 <= N < infinity."""
    c = as_braiding(c)
    img = c.image(i, i)
    if set(img) - {(i, i)}:
        return None
    q = img.get((i, i))
    if q is None:
        return None
    N: UnityOrder = root_of_unity_order(q, bound)
    if N == INFINITE or N < 2:
        return None
    return int(N)


def growth_classify(h: HilbertWindow) -> GrowthClass:
    """Finite-window proxy for growth; never a certificate."""
    dims = h.dims
    D = len(dims) - 1
    if D < 6:
        raise ValueError("growth classification needs a window of degree >= 6")
    lo = D - D // 2
    window = (lo, D)
    if h.trailing_zeros() >= 2:
        return GrowthClass(Growth.FINITE, window)
    top = dims[lo:]
    if len(set(top)) == 1:
        return GrowthClass(Growth.BOUNDED, window)
    diffs = [b - a for a, b in zip(top, top[1:])]
    if len(set(diffs)) == 1:
        return GrowthClass(Growth.LINEAR, window)
    return GrowthClass(Growth.SUPERLINEAR, window)

