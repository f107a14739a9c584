"""
Exact Gaussian elimination on sparse vectors over a cyclotomic field.

Vectors are ``dict[int, Scalar]`` with no stored zeros.  Everything here is
deterministic: the pivot of a row is its smallest index and reduced rows are
normalized to a leading coefficient of 1.
"""

from __future__ import annotations

from typing import Iterable

from .scalars import Scalar

Vector = dict[int, Scalar]


def axpy(y: Vector, a: Scalar, x: Vector) -> None:
    """In place ``y += a * x``."""
    for k, v in x.items():
        w = y.get(k)
        w = a * v if w is None else w + a * v
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def scale(x: Vector, a: Scalar) -> Vector:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


class EchelonBasis:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self) -> None:
        self._rows: dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self) -> list[Vector]:
        return [self._rows[p] for p in sorted(self._rows)]

    def reduce(self, vec: Vector) -> Vector:
        """Remainder of ``vec`` modulo the current row space."""
        out = dict(vec)
        for p in sorted(set(out) & set(self._rows)):
            c = out.get(p)
            if c:
                axpy(out, -c, self._rows[p])
        return out

    def add(self, vec: Vector) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        p = min(rem)
        rem = scale(rem, rem[p].inv())
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, rem)
        self._rows[p] = rem
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)


def row_reduce(rows: Iterable[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form of ``rows``: (nonzero rows, pivot columns)."""
    eb = EchelonBasis()
    for r in rows:
        eb.add(r)
    return eb.rows(), eb.pivots


def rank(rows: Iterable[Vector]) -> int:
    return len(row_reduce(rows)[1])


def kernel(rows: Iterable[Vector], ncols: int, conductor: int) -> list[Vector]:
    """Basis of {x : row . x = 0 for every row}, itself in reduced echelon form."""
    rref, pivots = row_reduce(rows)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v: Vector = {}
        for r, p in zip(rref, pivots):
            c = r.get(f)
            if c:
                v[p] = -c
        v[f] = Scalar.one(conductor)
        basis.append(v)
    return row_reduce(basis)[0]


def transpose(vectors: list[Vector]) -> list[Vector]:
    """Columns <-> rows for a list of sparse vectors."""
    out: dict[int, Vector] = {}
    for j, vec in enumerate(vectors):
        for i, v in vec.items():
            out.setdefault(i, {})[j] = v
    return [out[i] for i in sorted(out)] if out else []


def same_span(a: list[Vector], b: list[Vector]) -> bool:
    ea, eb = EchelonBasis(), EchelonBasis()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    return ea.rank == eb.rank and all(ea.contains(v) for v in b)
