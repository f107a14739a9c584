"""
Homogeneous tensors, the operators c_i, braid lifts and the quantum symmetrizer.

Words are tuples of 1-based letters.  A word of degree m indexes the LEX
basis of V^(x)m at position sum (w_k - 1) * dim^(m-k).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import linalg
from .braidings import BraidingSpec, as_braiding
from .errors import DegreeCapExceeded
from .scalars import Scalar, as_scalar

Word = tuple[int, ...]

DEFAULT_DEGREE_CAP = 10


def degree_cap(override: int | None = None) -> int:
    """Effective cap: explicit override, else $NICHOLS_DEGREE_CAP, else 10."""
    if override is not None:
        return override
    env = os.environ.get("NICHOLS_DEGREE_CAP")
    return int(env) if env else DEFAULT_DEGREE_CAP


def check_degree(m: int, cap: int | None = None) -> None:
    limit = degree_cap(cap)
    if m > limit:
        raise DegreeCapExceeded(f"degree {m} exceeds the cap {limit}")


def word_index(w: Word, dim: int) -> int:
    idx = 0
    for a in w:
        idx = idx * dim + (a - 1)
    return idx


def index_word(idx: int, dim: int, m: int) -> Word:
    out = []
    for _ in range(m):
        idx, r = divmod(idx, dim)
        out.append(r + 1)
    return tuple(reversed(out))


def words(dim: int, m: int) -> Iterator[Word]:
    """All words of degree m in LEX order."""
    return itertools.product(range(1, dim + 1), repeat=m)


def format_word(w: Word) -> str:
    return "".join(f"x{a}" for a in w) if w else "1"


@dataclass(frozen=True, eq=False)
class TensorElem:
    """Homogeneous element of T(V) as a map word -> nonzero coefficient."""

    dim: int
    degree: int
    conductor: int
    terms: dict[Word, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for w, v in self.terms.items():
            if len(w) != self.degree:
                raise ValueError(f"word {w} is not of degree {self.degree}")
            if any(not 1 <= a <= self.dim for a in w):
                raise ValueError(f"letter out of range in {w}")
            if not v:
                raise ValueError("zero coefficients must not be stored")

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, dim: int, degree: int, conductor: int) -> TensorElem:
        return cls(dim, degree, conductor, {})

    @classmethod
    def unit(cls, dim: int, conductor: int) -> TensorElem:
        return cls(dim, 0, conductor, {(): Scalar.one(conductor)})

    @classmethod
    def monomial(cls, w: Sequence[int], dim: int, conductor: int, coeff=1) -> TensorElem:
        c = as_scalar(coeff, conductor)
        return cls(dim, len(w), conductor, {tuple(w): c} if c else {})

    @classmethod
    def letter(cls, i: int, dim: int, conductor: int) -> TensorElem:
        return cls.monomial((i,), dim, conductor)

    @classmethod
    def from_vector(cls, vec: linalg.Vector, dim: int, m: int, conductor: int) -> TensorElem:
        return cls(dim, m, conductor, {index_word(k, dim, m): v for k, v in vec.items()})

    def to_vector(self) -> linalg.Vector:
        return {word_index(w, self.dim): v for w, v in self.terms.items()}

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, w: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(w), Scalar.zero(self.conductor))

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElem):
            if not self.terms and not other.terms:
                return True
            return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dim, self.degree, frozenset(self.terms.items())))

    # -- arithmetic -------------------------------------------------------
    def _same_space(self, other: TensorElem) -> None:
        if self.dim != other.dim or self.conductor != other.conductor:
            raise ValueError("tensors live in different spaces")

    def _lift(self, other) -> TensorElem | None:
        """Coerce a scalar to a degree-0 tensor (only meaningful in degree 0)."""
        if isinstance(other, TensorElem):
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            s = as_scalar(other, self.conductor)
            return TensorElem(self.dim, 0, self.conductor, {(): s} if s else {})
        return None

    def __add__(self, other) -> TensorElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._same_space(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        linalg.axpy(terms, Scalar.one(self.conductor), other.terms)
        return TensorElem(self.dim, self.degree, self.conductor, terms)

    __radd__ = __add__

    def __neg__(self) -> TensorElem:
        return TensorElem(self.dim, self.degree, self.conductor,
                          {w: -v for w, v in self.terms.items()})

    def __sub__(self, other) -> TensorElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> TensorElem:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scaled(self, a) -> TensorElem:
        a = as_scalar(a, self.conductor)
        return TensorElem(self.dim, self.degree, self.conductor, linalg.scale(self.terms, a))

    def __mul__(self, other) -> TensorElem:
        if isinstance(other, TensorElem):
            self._same_space(other)
            terms: dict[Word, Scalar] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    terms[u + v] = a * b
            return TensorElem(self.dim, self.degree + other.degree, self.conductor, terms)
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other) -> TensorElem:
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def __truediv__(self, other) -> TensorElem:
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scaled(as_scalar(other, self.conductor).inv())
        return NotImplemented

    def __pow__(self, e: int) -> TensorElem:
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = TensorElem.unit(self.dim, self.conductor)
        for _ in range(e):
            out = out * self
        return out

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = str(self.terms[w])
            if " " in c:
                c = f"({c})"
            parts.append(f"{c} * {format_word(w)}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElem({str(self)!r})"


@dataclass(frozen=True)
class DegreeOperator:
    """Linear operator on V^(x)m stored as sparse columns (LEX order)."""

    dim: int
    degree: int
    conductor: int
    columns: tuple[linalg.Vector, ...]

    @property
    def size(self) -> int:
        return self.dim ** self.degree

    @classmethod
    def identity(cls, dim: int, m: int, conductor: int) -> DegreeOperator:
        one = Scalar.one(conductor)
        return cls(dim, m, conductor, tuple({k: one} for k in range(dim ** m)))

    def apply_vector(self, vec: linalg.Vector) -> linalg.Vector:
        out: linalg.Vector = {}
        for k, a in vec.items():
            linalg.axpy(out, a, self.columns[k])
        return out

    def __call__(self, u: TensorElem) -> TensorElem:
        if u.degree != self.degree:
            raise ValueError(f"operator of degree {self.degree} applied to degree {u.degree}")
        return TensorElem.from_vector(self.apply_vector(u.to_vector()), self.dim,
                                      self.degree, self.conductor)

    def __matmul__(self, other: DegreeOperator) -> DegreeOperator:
        """Composition self o other."""
        return DegreeOperator(self.dim, self.degree, self.conductor,
                              tuple(self.apply_vector(col) for col in other.columns))

    def __add__(self, other: DegreeOperator) -> DegreeOperator:
        one = Scalar.one(self.conductor)
        cols = []
        for a, b in zip(self.columns, other.columns):
            col = dict(a)
            linalg.axpy(col, one, b)
            cols.append(col)
        return DegreeOperator(self.dim, self.degree, self.conductor, tuple(cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DegreeOperator):
            return NotImplemented
        return (self.dim, self.degree, self.columns) == (other.dim, other.degree, other.columns)

    def rows(self) -> list[linalg.Vector]:
        return linalg.transpose(list(self.columns))

    def entry(self, i: int, j: int) -> Scalar:
        return self.columns[j].get(i, Scalar.zero(self.conductor))


def _braiding(c: BraidingSpec) -> BraidingSpec:
    return as_braiding(c)


def _images(c: BraidingSpec) -> dict[tuple[int, int], dict[tuple[int, int], Scalar]]:
    return {(i, j): c.image(i, j)
            for i in range(1, c.dim + 1) for j in range(1, c.dim + 1)}


def apply_c_i(c: BraidingSpec, i: int, u: TensorElem) -> TensorElem:
    """c_i = id^(i-1) (x) c (x) id^(m-i-1) applied to u (1 <= i <= m-1)."""
    c = _braiding(c)
    m = u.degree
    if not 1 <= i <= m - 1:
        raise IndexError(f"c_{i} undefined in degree {m}")
    img = _images(c)
    out: dict[Word, Scalar] = {}
    for w, a in u.terms.items():
        pre, post = w[:i - 1], w[i + 1:]
        for (x, y), b in img[(w[i - 1], w[i])].items():
            linalg.axpy(out, a, {pre + (x, y) + post: b})
    return TensorElem(u.dim, m, u.conductor, out)


def c_i(c: BraidingSpec, i: int, m: int) -> DegreeOperator:
    c = _braiding(c)
    d = c.dim
    if not 1 <= i <= m - 1:
        raise IndexError(f"c_{i} undefined in degree {m}")
    img = _images(c)
    cols = []
    for w in words(d, m):
        pre, post = w[:i - 1], w[i + 1:]
        cols.append({word_index(pre + ab + post, d): v
                     for ab, v in img[(w[i - 1], w[i])].items()})
    return DegreeOperator(d, m, c.conductor, tuple(cols))


def shift(op: DegreeOperator) -> DegreeOperator:
    """id_V (x) op, an operator one degree higher."""
    d, m = op.dim, op.degree
    n = d ** m
    cols = []
    for a in range(d):
        off = a * n
        for col in op.columns:
            cols.append({off + k: v for k, v in col.items()})
    return DegreeOperator(d, m + 1, op.conductor, tuple(cols))


# -- permutations and reduced words -------------------------------------

def _length(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def _left_mult(i: int, perm: Sequence[int]) -> tuple[int, ...]:
    """s_i o perm in one-line notation (values 1..m)."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in perm)


def all_reduced_words(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Every (i_1, ..., i_l) with perm = s_{i_1} o ... o s_{i_l}, l minimal."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{perm} is not a permutation")
    L = _length(perm)
    if L == 0:
        return [()]
    out = []
    for i in range(1, len(perm)):
        rest = _left_mult(i, perm)
        if _length(rest) == L - 1:
            out.extend((i,) + r for r in all_reduced_words(rest))
    return out


def reduced_word(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    word: list[int] = []
    while True:
        for i in range(1, len(perm)):
            if perm.index(i) > perm.index(i + 1):
                break
        else:
            return tuple(word)
        # s_i o perm shortens perm when i+1 appears before i
        perm = _left_mult(i, perm)
        word.append(i)


def lift_word(c: BraidingSpec, word: Sequence[int], m: int) -> DegreeOperator:
    """c_{i_1} o ... o c_{i_l}."""
    c = _braiding(c)
    op = DegreeOperator.identity(c.dim, m, c.conductor)
    for i in reversed(word):
        op = c_i(c, i, m) @ op
    return op


def braid_lift(c: BraidingSpec, perm: Sequence[int]) -> DegreeOperator:
    """Matsumoto lift of a permutation (one-line notation, values 1..m)."""
    return lift_word(c, reduced_word(perm), len(perm))


# -- coproduct component and symmetrizer ------------------------------

def coproduct_1_rest(c: BraidingSpec, m: int) -> DegreeOperator:
    """Delta_{1,m-1} = sum_{j=0}^{m-1} c_1 c_2 ... c_j on V^(x)m."""
    c = _braiding(c)
    if m < 1:
        raise ValueError("coproduct component needs m >= 1")
    T = DegreeOperator.identity(c.dim, 1, c.conductor)
    for k in range(2, m + 1):
        T = DegreeOperator.identity(c.dim, k, c.conductor) + c_i(c, 1, k) @ shift(T)
    return T


def symmetrizer(c: BraidingSpec, m: int, cap: int | None = None) -> DegreeOperator:
    """S_m = (id (x) S_{m-1}) o Delta_{1,m-1}, with S_0 = S_1 = id."""
    check_degree(m, cap)
    c = _braiding(c)
    S = DegreeOperator.identity(c.dim, min(m, 1), c.conductor)
    T = DegreeOperator.identity(c.dim, 1, c.conductor)
    for k in range(2, m + 1):
        T = DegreeOperator.identity(c.dim, k, c.conductor) + c_i(c, 1, k) @ shift(T)
        S = shift(S) @ T
    return S


def symmetrizer_full_sum(c: BraidingSpec, m: int) -> DegreeOperator:
    """Sum of braid lifts over all m! permutations (reference implementation)."""
    c = _braiding(c)
    total = None
    for perm in itertools.permutations(range(1, m + 1)):
        L = braid_lift(c, perm)
        total = L if total is None else total + L
    if total is None:
        total = DegreeOperator.identity(c.dim, 0, c.conductor)
    return total


def rank(op: DegreeOperator) -> int:
    return linalg.rank(op.columns)


def kernel_basis(op: DegreeOperator) -> list[TensorElem]:
    """Kernel in reduced echelon form: lex-earliest word leads with coefficient 1."""
    vecs = linalg.kernel(op.rows(), op.size, op.conductor)
    return [TensorElem.from_vector(v, op.dim, op.degree, op.conductor) for v in vecs]


def span_equal(a: Iterable[TensorElem], b: Iterable[TensorElem]) -> bool:
    return linalg.same_span([u.to_vector() for u in a], [v.to_vector() for v in b])
