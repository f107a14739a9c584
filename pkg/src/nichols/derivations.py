"""
Skew derivations read off the (1, m-1) component of the braided coproduct.

For u of degree m, Delta_{1,m-1}(u) = sum_a x_a (x) d_a(u).  Writing
c(x_l (x) x_j) = sum C[l,j][a,b] x_a (x) x_b, the identity
Delta_{1,m} = id + c_1 (id (x) Delta_{1,m-1}) gives

    d_a(x_l y) = delta_{a,l} y + sum_{j,b} C[l,j][a,b] x_b d_j(y).
"""

from __future__ import annotations

from functools import lru_cache

from . import linalg
from .braidings import BraidingSpec, as_braiding
from .scalars import Scalar
from .tensor import TensorElem, Word, check_degree

RECURSIVE_LIMIT = 6


@lru_cache(maxsize=64)
def _word_derivations(c: BraidingSpec):
    """Memoized map word -> tuple over a of {word: coeff} for d_a(word)."""
    d = c.dim
    one = Scalar.one(c.conductor)
    img = {(l, j): c.image(l, j) for l in range(1, d + 1) for j in range(1, d + 1)}

    @lru_cache(maxsize=None)
    def partials(w: Word) -> tuple[dict[Word, Scalar], ...]:
        l, y = w[0], w[1:]
        out: list[dict[Word, Scalar]] = [{} for _ in range(d)]
        out[l - 1][y] = one
        if y:
            inner = partials(y)
            for j in range(1, d + 1):
                dj = inner[j - 1]
                if not dj:
                    continue
                for (a, b), coef in img[(l, j)].items():
                    linalg.axpy(out[a - 1], coef, {(b,) + v: s for v, s in dj.items()})
        return tuple(out)

    return partials


def derive(c: BraidingSpec, i: int, u: TensorElem) -> TensorElem:
    """d_i(u) for homogeneous u of degree >= 1."""
    if u.degree < 1:
        raise ValueError("derivations lower the degree; degree-0 input has none")
    c = as_braiding(c)
    if not 1 <= i <= c.dim:
        raise IndexError(f"letter {i} out of range")
    partials = _word_derivations(c)
    out: dict[Word, Scalar] = {}
    for w, a in u.terms.items():
        linalg.axpy(out, a, partials(w)[i - 1])
    return TensorElem(u.dim, u.degree - 1, u.conductor, out)


def all_derivations(c: BraidingSpec, u: TensorElem) -> list[TensorElem]:
    return [derive(c, i, u) for i in range(1, as_braiding(c).dim + 1)]


def vanishes_recursive(c: BraidingSpec, u: TensorElem) -> bool:
    """u in J(V) by repeated application of the derivation criterion."""
    if u.degree <= 1:
        return u.is_zero()
    if u.is_zero():
        return True
    return all(vanishes_recursive(c, v) for v in all_derivations(c, u))


def vanishes_in_nichols(c: BraidingSpec, u: TensorElem, cap: int | None = None) -> bool:
    """True iff u lies in the kernel of the quantum symmetrizer of its degree."""
    check_degree(u.degree, cap)
    if u.degree <= RECURSIVE_LIMIT:
        return vanishes_recursive(c, u)
    from .nichols import tower_for
    return tower_for(c).contains(u, cap=cap)
