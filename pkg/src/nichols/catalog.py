"""
The eight rank-2 families with quadratic relations, and their expected profiles.

Every family carries its R-matrix as a template in PAPER ordering, the domain
constraints, the condition for quadratic relations, and a list of rows.  A row
has a guard and, when it holds, predicts the defining relations, a PBW ladder,
the total dimension (finite rows) and a growth tag.  Rows are tried in order
and the first guard that holds wins.

All templates are strings for :mod:`nichols.expr`.  Names available to them:
the family parameters, the family's derived quantities, ``ord`` and ``nord``
(``nord`` maps order 1 to INF), ``INF``, and in relation templates the
generators ``x1``, ``x2``, the braided commutator ``x21`` and the family's
named elements.
"""

from __future__ import annotations

import json
import time
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from . import braidings as br
from .errors import ConstraintViolation, NicholsError, NoMatchingRow, ScalarSyntaxError
from .expr import evaluate
from .nichols import (Growth, growth_classify, hilbert_series, quadratic_relations,
                      verify_relation)
from .report import VerifyReport
from .scalars import (INFINITE, Scalar, as_scalar, format_scalar, parse_scalar,
                      root_of_unity_order, zeta)
from .tensor import TensorElem, degree_cap, span_equal

INF = INFINITE


@dataclass(frozen=True)
class PBWLadder:
    """Monomials g_1^e_1 ... g_r^e_r with weighted degree m passing ``constraint``.

    ``generators`` are (name, degree, exponent variable) triples; ``bindings``
    hold the integer parameters (N, M, ...) the constraint refers to.
    """

    generators: tuple[tuple[str, int, str], ...]
    constraint: str = "True"
    bindings: tuple[tuple[str, Any], ...] = ()

    def bind(self, **values) -> PBWLadder:
        return PBWLadder(self.generators, self.constraint,
                         tuple(sorted({**dict(self.bindings), **values}.items())))

    def monomials(self, m: int) -> Iterator[tuple[int, ...]]:
        degs = [g[1] for g in self.generators]
        names = [g[2] for g in self.generators]
        env = dict(self.bindings)
        env["INF"] = INF

        def rec(i: int, left: int, acc: list[int]):
            if i == len(degs) - 1:
                if left % degs[i] == 0:
                    yield acc + [left // degs[i]]
                return
            for e in range(left // degs[i] + 1):
                yield from rec(i + 1, left - e * degs[i], acc + [e])

        if not degs:
            if m == 0:
                yield ()
            return
        for exps in rec(0, m, []):
            env.update(zip(names, exps))
            if evaluate(self.constraint, env):
                yield tuple(exps)

    def describe(self) -> str:
        mono = " ".join(f"{n}^{v}" for n, _, v in self.generators)
        return f"{mono} : {self.constraint}"


def pbw_count(ladder: PBWLadder, m: int) -> int:
    if m < 0:
        return 0
    return sum(1 for _ in ladder.monomials(m))


def _ladder(spec: str, constraint: str = "True") -> PBWLadder:
    """'x1:1:a1 x2:1:a2' -> generators."""
    gens = []
    for tok in spec.split():
        name, deg, var = tok.split(":")
        gens.append((name, int(deg), var))
    return PBWLadder(tuple(gens), constraint)


@dataclass(frozen=True)
class Row:
    guard: str
    relations: tuple[str, ...]
    ladder: PBWLadder
    growth: Growth
    total_dim: str | None = None
    label: str = ""
    algebra: str = ""
    note: str = ""


@dataclass(frozen=True)
class FamilySpec:
    id: str
    param_names: tuple[str, ...]
    r_matrix: tuple[tuple[str, ...], ...]
    constraints: tuple[str, ...]
    quad_condition: str
    rows: tuple[Row, ...]
    derived: tuple[tuple[str, str], ...] = ()
    elements: tuple[tuple[str, str], ...] = ()
    transform: tuple[str, ...] = ()
    description: str = ""


@dataclass
class ExpectedProfile:
    family: str
    quadratic: bool
    row_index: int | None = None
    row: Row | None = None
    relations: list[tuple[str, TensorElem]] = field(default_factory=list)
    ladder: PBWLadder | None = None
    total_dim: int | None = None
    growth: Growth | None = None
    bindings: dict[str, Any] = field(default_factory=dict)

    @property
    def row_label(self) -> str:
        if self.row is None:
            return "no quadratic relations"
        return f"row {self.row_index}: {self.row.label}".rstrip(": ")

    def quadratic_relations(self) -> list[TensorElem]:
        return [u for _, u in self.relations if u.degree == 2]

    def ladder_top_degree(self, limit: int = 64) -> int | None:
        """Largest degree with a basis monomial, if the ladder is finite."""
        if self.total_dim is None or self.ladder is None:
            return None
        seen = 0
        for m in range(limit + 1):
            seen += pbw_count(self.ladder, m)
            if seen >= self.total_dim:
                return m
        return None


# -- the families ----------------------------------------------------------

_QP = "x2:1:a2 x1:1:a1"   # x2^a2 x1^a1
_XY = "x1:1:a1 x2:1:a2"   # x1^a1 x2^a2

_R21 = (("k**2", "0", "0", "0"),
        ("0", "k*p", "k**2 - p*q", "0"),
        ("0", "0", "k*q", "0"),
        ("0", "0", "0", "k**2"))
_R22 = (("k**2", "0", "0", "0"),
        ("0", "k*p", "k**2 - p*q", "0"),
        ("0", "0", "k*q", "0"),
        ("0", "0", "0", "-p*q"))
_R12 = (("p", "0", "0", "k"),
        ("0", "p", "p - q", "0"),
        ("0", "0", "q", "0"),
        ("0", "0", "0", "-q"))

_R12_CONSTRAINTS = ("p != 0", "q != 0", "p != q or k != 0")
_R12_QUAD = "p == -1 or q == 1"
_R12_DERIVED = (("N", "ord(-q)"), ("M", "ord(p)"))


def _r22_rows(r: str) -> tuple[Row, ...]:
    qp = "quantum plane"
    return (
        Row("N1 < INF and N2 < INF", (r, "x1**N1", "x2**N2"),
            _ladder(_QP, "a1 < N1 and a2 < N2"), Growth.FINITE, "N1*N2",
            "N1, N2 finite", qp),
        Row("N1 < INF", (r, "x1**N1"), _ladder(_QP, "a1 < N1"), Growth.BOUNDED,
            label="N1 finite, N2 infinite", algebra=qp),
        Row("N2 < INF", (r, "x2**N2"), _ladder(_QP, "a2 < N2"), Growth.BOUNDED,
            label="N1 infinite, N2 finite", algebra=qp),
        Row("True", (r,), _ladder(_QP), Growth.LINEAR,
            label="N1, N2 infinite", algebra=qp),
    )


def _r12_plain_rows() -> tuple[Row, ...]:
    """Rows for the braiding of R1_2 itself and for its sharp variant."""
    return (
        Row("p == -1 and q == 1 and k == 0", ("x1**2", "x2**2", "r1"),
            _ladder(_XY, "a1 <= 1 and a2 < N"), Growth.FINITE, "4",
            "p=-1, q=1, k=0", "quantum plane"),
        Row("p == -1 and 3 <= N < INF", ("x1**2", "x2**N", "r1"),
            _ladder(_XY, "a1 <= 1 and a2 < N"), Growth.FINITE, "2*N",
            "p=-1, ord(-q)=N>=3", "quantum plane"),
        Row("p == -1", ("x1**2", "r1"), _ladder(_XY, "a1 <= 1"), Growth.BOUNDED,
            label="p=-1, otherwise", algebra="quantum plane"),
        Row("q == 1 and 3 <= M < INF", ("x1**M", "r1", "r2"),
            _ladder(_XY, "a1 < M and a2 <= 1"), Growth.FINITE, "2*M",
            "q=1, ord(p)=M>=3", "deformation of a quantum plane"),
        Row("q == 1", ("r1", "r2"), _ladder(_XY, "a2 <= 1"), Growth.BOUNDED,
            label="q=1, p not a root of unity", algebra="deformation of a quantum plane",
            note="stated basis bounds a1 instead of a2; the per-degree counts agree"),
    )


def _r12_transposed_rows() -> tuple[Row, ...]:
    """Rows for the transpose and transpose-sharp variants of R1_2."""
    return (
        Row("p == -1 and q == 1 and k == 0", ("x1**2", "x2**2", "r1"),
            _ladder(_XY, "a1 <= 1 and a2 < N"), Growth.FINITE, "4",
            "p=-1, q=1, k=0", "quantum plane"),
        Row("p == -1 and q == 1", ("r1", "r2"), _ladder(_XY, "a2 <= 1"), Growth.BOUNDED,
            label="p=-1, q=1, k!=0", algebra="deformation of a quantum plane"),
        Row("p == -1 and 3 <= N < INF", ("x2**N", "r1", "r2"),
            _ladder(_XY, "a1 <= 1 and a2 < N"), Growth.FINITE, "2*N",
            "p=-1, ord(-q)=N>=3", "deformation of a quantum plane"),
        Row("p == -1", ("r1", "r2"), _ladder(_XY, "a1 <= 1"), Growth.BOUNDED,
            label="p=-1, -q not a root of unity", algebra="deformation of a quantum plane"),
        Row("q == 1 and 3 <= M < INF", ("x1**M", "x2**2", "r1"),
            _ladder(_XY, "a1 < M and a2 <= 1"), Growth.FINITE, "2*M",
            "q=1, ord(p)=M>=3", "quantum plane"),
        Row("q == 1", ("x2**2", "r1"), _ladder(_XY, "a2 <= 1"), Growth.BOUNDED,
            label="q=1, p not a root of unity", algebra="quantum plane"),
    )


_R11_B2 = ("(a1 <= 1 and a2 < N) if N % 2 == 1 else "
           "((a1 == 1 and a2 < (N - 2)//2) or (a1 == 0 and a2 < (N + 2)//2))")

FAMILIES: dict[str, FamilySpec] = {}


def _register(f: FamilySpec) -> None:
    FAMILIES[f.id] = f


_register(FamilySpec(
    "R2_1", ("k", "p", "q"), _R21,
    ("k != 0", "p != 0", "q != 0", "k**2 != p*q"),
    "k**2 == -1 or p*q == 1",
    (
        Row("N < INF", ("x1*x2 - k*q*x2*x1", "x1**N", "x2**N"),
            _ladder(_QP, "a1 < N and a2 < N"), Growth.FINITE, "N**2",
            "N = ord(k^2) finite", "quantum plane"),
        Row("True", ("x1*x2 - k*q*x2*x1",), _ladder(_QP), Growth.LINEAR,
            label="N infinite", algebra="quantum plane"),
    ),
    derived=(("N", "nord(k**2)"),),
))

_register(FamilySpec(
    "R2_2", ("k", "p", "q"), _R22,
    ("k != 0", "p != 0", "q != 0", "k**2 != p*q"),
    "k**2 == -1 or p*q == 1",
    _r22_rows("x1*x2 - k*q*x2*x1"),
    derived=(("N1", "nord(k**2)"), ("N2", "nord(-p*q)")),
))

_register(FamilySpec(
    "R2_2a", ("k", "p", "q"), _R22,
    ("k != 0", "p != 0", "q != 0", "k**2 != p*q"),
    "k**2 == -1 or p*q == 1",
    _r22_rows("x2*x1 - k*p*x1*x2"),
    derived=(("N1", "nord(k**2)"), ("N2", "nord(-p*q)")),
    transform=("transpose",),
))

_register(FamilySpec(
    "R2_3", ("k", "p", "q", "s"),
    (("k", "p", "q", "s"),
     ("0", "k", "0", "q"),
     ("0", "0", "k", "p"),
     ("0", "0", "0", "k")),
    ("k != 0", "p != 0 or q != 0 or s != 0"),
    "k**2 == 1",
    (
        Row("k == -1 and p == -q and s == q**2",
            ("x1**2", "x2**2 - q*x1*x2", "x1*x2 + x2*x1"),
            _ladder(_XY, "a1 <= 1 and a2 <= 1"), Growth.FINITE, "4",
            "k=-1, p=-q, s=q^2", "deformation of an exterior algebra"),
        Row("k == -1 and p == -q", ("x1**2", "x1*x2 + x2*x1"),
            _ladder(_XY, "a1 <= 1"), Growth.BOUNDED, label="k=-1, p=-q, s!=q^2"),
        Row("k == -1", ("x1**2", "x2*x21 + (p - q)*x1*x21 - x21*x2"),
            _ladder("x1:1:a x21:2:b x2:1:c", "a <= 1"), Growth.LINEAR,
            label="k=-1, p!=-q", algebra="super Jordan plane"),
        Row("k == 1", ("(q - p)/2*x1**2 - x1*x2 + x2*x1",),
            _ladder(_XY), Growth.LINEAR, label="k=1", algebra="Jordan plane"),
    ),
))

_register(FamilySpec(
    "R1_1", ("p", "q"),
    (("a + 2*p*q", "0", "0", "a"),
     ("0", "b", "a", "0"),
     ("0", "a", "b", "0"),
     ("a", "0", "0", "a - 2*p*q")),
    ("p != 0", "q != 0", "p**2 != q**2"),
    "2*p**2 == -1 or 2*q**2 == 1",
    (
        Row("2*p**2 == -1 and 2*q**2 == 1", ("r1", "r2", "r3"),
            _ladder(_XY, "a1 + a2 <= 1 or (a1 == 0 and a2 == 2)"), Growth.FINITE, "4",
            "2p^2=-1, 2q^2=1", "deformation of an exterior algebra"),
        Row("2*q**2 == 1 and 3 <= N < INF and N != 4", ("r1", "r2", "r4N"),
            _ladder(_XY, _R11_B2), Growth.FINITE, "2*N",
            "2q^2=1, ord(-2pq)=N>=3, N!=4",
            note="for even N the stated basis has N elements, not 2N"),
        Row("2*q**2 == 1 and N == INF", ("r1", "r2"), _ladder(_XY, "a1 <= 1"),
            Growth.BOUNDED, label="2q^2=1, -2pq not a root of unity",
            algebra="deformation of a quantum plane"),
        Row("2*p**2 == -1 and 3 <= N < INF and N != 4", ("r1", "r3", "r4N"),
            _ladder(_XY, _R11_B2), Growth.FINITE, "2*N",
            "2p^2=-1, ord(-2pq)=N>=3, N!=4",
            note="for even N the stated basis has N elements, not 2N"),
        Row("2*p**2 == -1 and N == INF", ("r1", "r3"), _ladder(_XY, "a1 <= 1"),
            Growth.BOUNDED, label="2p^2=-1, -2pq not a root of unity",
            algebra="deformation of a quantum plane"),
    ),
    derived=(("a", "p**2 - q**2"), ("b", "p**2 + q**2"), ("N", "ord(-2*p*q)")),
    elements=(
        ("r1", "x1**2 - (a + 2*p*q + 1)/a*x2**2"),
        ("r2", "x1*x2 - x2*x1"),
        ("r3", "x1*x2 + x2*x1"),
        ("r4N", "x2**N if N % 2 == 1 else x1*x2**((N - 2)//2)"),
    ),
))

_register(FamilySpec(
    "R1_2", ("k", "p", "q"), _R12, _R12_CONSTRAINTS, _R12_QUAD,
    _r12_plain_rows(), derived=_R12_DERIVED,
    elements=(("r1", "x1*x2 - q*x2*x1"), ("r2", "x2**2 - k/(p + 1)*x1**2")),
))

_register(FamilySpec(
    "R1_2a", ("k", "p", "q"), _R12, _R12_CONSTRAINTS, _R12_QUAD,
    _r12_transposed_rows(), derived=_R12_DERIVED,
    elements=(("r1", "x2*x1 - p*x1*x2"), ("r2", "(1 - q)*x1**2 - k*x2**2")),
    transform=("transpose",),
))

_register(FamilySpec(
    "R1_2c", ("k", "p", "q"), _R12, _R12_CONSTRAINTS, _R12_QUAD,
    _r12_plain_rows(), derived=_R12_DERIVED,
    elements=(("r1", "x2*x1 - q*x1*x2"), ("r2", "x2**2 - k/(p + 1)*x1**2")),
    transform=("sharp",),
))

_register(FamilySpec(
    "R1_2ac", ("k", "p", "q"), _R12, _R12_CONSTRAINTS, _R12_QUAD,
    _r12_transposed_rows(), derived=_R12_DERIVED,
    elements=(("r1", "x1*x2 - p*x2*x1"), ("r2", "(1 - q)*x1**2 - k*x2**2")),
    transform=("transpose", "sharp"),
))

_register(FamilySpec(
    "R1_3", ("k", "p", "q"),
    (("k**2", "k*p", "-k*p", "p*q"),
     ("0", "k**2", "0", "k*q"),
     ("0", "0", "k**2", "-k*q"),
     ("0", "0", "0", "k**2")),
    ("k != 0", "p != 0 or q != 0"),
    "k**4 == 1",
    (
        Row("k**2 == -1", ("x1**2", "x2**2 - k*q*x1*x2", "x1*x2 + x2*x1"),
            _ladder(_XY, "a1 <= 1 and a2 <= 1"), Growth.FINITE, "4", "k^2=-1",
            "deformation of an exterior algebra"),
        Row("k**2 == 1", ("x1*x2 - x2*x1 + k*p*x1**2",), _ladder(_XY), Growth.LINEAR,
            label="k^2=1", algebra="Jordan plane"),
    ),
))

_register(FamilySpec(
    "R1_4", ("k", "p", "q"),
    (("0", "0", "0", "p"),
     ("0", "0", "k", "0"),
     ("0", "k", "0", "0"),
     ("q", "0", "0", "0")),
    ("k != 0", "p != 0", "q != 0"),
    "k == -1 or p*q == 1",
    (
        Row("k == -1 and N < INF", ("r12", "r22", "r3N"),
            _ladder(_XY, "(a1 == 0 and a2 < 2*N) or (a2 == 0 and a1 < 2*N + 1)"),
            Growth.FINITE, "4*N", "k=-1, ord(pq)=N"),
        Row("k == -1", ("r12", "r22"), _ladder(_XY, "a1 == 0 or a2 == 0"),
            Growth.BOUNDED, label="k=-1, pq not a root of unity"),
        Row("p*q == 1 and 3 <= N < INF", ("r1N", "r2N", "r31"),
            _ladder("x1:1:a x2x1:2:b x2:1:c",
                    "c <= 1 and a + 2*b + c <= 2*N - 2 "
                    "and (a + 2*b + c < N or a >= a + 2*b + c - N + 2)"),
            Growth.FINITE, "N**2", "pq=1, ord(k)=N>=3"),
        Row("p*q == 1", ("r31",), _ladder("x1:1:a x2x1:2:b x2:1:c", "c <= 1"),
            Growth.LINEAR, label="pq=1, k not a root of unity of order >= 2"),
    ),
    derived=(("N", "ord(p*q) if k == -1 else ord(k)"),),
    elements=(
        ("r12", "x2*x1"),
        ("r22", "x1*x2"),
        ("r3N", "x1**(2*N) + (-q)**N*x2**(2*N)"),
        ("r1N", "(x2*x1)**(N//2) if N % 2 == 0 else x1*(x2*x1)**((N - 1)//2)"),
        ("r2N", "x1*(x2*x1)**((N - 2)//2)*x2 if N % 2 == 0 else (x2*x1)**((N - 1)//2)*x2"),
        ("r31", "x1**2 - q*x2**2"),
    ),
))

_register(FamilySpec(
    "R0_1", ("k",),
    (("k", "0", "0", "k"),
     ("0", "-k", "0", "0"),
     ("0", "0", "-k", "0"),
     ("0", "0", "0", "k")),
    ("k != 0",),
    "k**2 == 1",
    (
        Row("k == 1", ("x1*x2 + x2*x1",), _ladder(_XY), Growth.LINEAR, label="k=1"),
        Row("k == -1", ("x1**2", "x1*x2 - x2*x1"), _ladder(_XY, "a1 <= 1"),
            Growth.BOUNDED, label="k=-1",
            note="stated exponent range for x1 is 0..2; bound 1 follows from x1^2 = 0"),
    ),
))


# -- instantiation ---------------------------------------------------------

def family(fid: str) -> FamilySpec:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise NicholsError(f"unknown family {fid!r}; known: {', '.join(FAMILIES)}") from None


def _order_env(bound: int) -> dict[str, Any]:
    def _ord(s):
        return root_of_unity_order(s if isinstance(s, Scalar) else as_scalar(s, 1), bound)

    def _nord(s):
        n = _ord(s)
        return INF if n == 1 else n

    return {"ord": _ord, "nord": _nord, "INF": INF}


class _LazyEnv(Mapping):
    """Environment whose named elements are evaluated on first use."""

    def __init__(self, base: dict[str, Any], lazy: dict[str, str]) -> None:
        self._base = base
        self._lazy = lazy

    def __getitem__(self, key: str):
        if key in self._base:
            return self._base[key]
        if key in self._lazy:
            val = evaluate(self._lazy[key], self)
            self._base[key] = val
            return val
        raise KeyError(key)

    def __contains__(self, key) -> bool:
        return key in self._base or key in self._lazy

    def __iter__(self):
        return iter({**self._lazy, **self._base})

    def __len__(self) -> int:
        return len(set(self._base) | set(self._lazy))


def _coerce_params(f: FamilySpec, params: Mapping[str, Any],
                   conductor: int | None) -> tuple[dict[str, Scalar], int]:
    missing = [n for n in f.param_names if n not in params]
    extra = [n for n in params if n not in f.param_names]
    if missing or extra:
        raise NicholsError(f"{f.id} takes parameters {', '.join(f.param_names)}"
                           + (f"; missing {missing}" if missing else "")
                           + (f"; unexpected {extra}" if extra else ""))
    if conductor is None:
        conds = {v.conductor for v in params.values() if isinstance(v, Scalar)}
        if len(conds) > 1:
            raise NicholsError(f"parameters live in different fields {sorted(conds)}")
        conductor = conds.pop() if conds else 1
    return {n: parse_param(params[n], conductor) for n in f.param_names}, conductor


def parse_param(value, conductor: int) -> Scalar:
    """Scalar from the scalar grammar, or from an arithmetic expression in z."""
    if not isinstance(value, str):
        return as_scalar(value, conductor)
    try:
        return parse_scalar(value, conductor)
    except ScalarSyntaxError:
        pass
    try:
        v = evaluate(value, {"z": zeta(conductor)})
    except NicholsError as exc:
        raise ScalarSyntaxError(f"cannot read {value!r}: {exc}") from exc
    if not isinstance(v, (int, Fraction, Scalar)):
        raise ScalarSyntaxError(f"{value!r} is not a scalar")
    return as_scalar(v, conductor)


def family_env(f: FamilySpec, values: Mapping[str, Scalar], bound: int = 1000) -> dict:
    """Parameters, order helpers and derived quantities; constraints are checked first."""
    env = _order_env(bound)
    env.update(values)
    check_constraints(f, env)
    for name, tmpl in f.derived:
        env[name] = evaluate(tmpl, env)
    return env


def check_constraints(f: FamilySpec, env: Mapping[str, Any]) -> None:
    for c in f.constraints:
        if not evaluate(c, env):
            raise ConstraintViolation(f"{f.id}: constraint {c!r} fails")


def r_matrix(f: FamilySpec, env: Mapping[str, Any], conductor: int) -> br.BraidingSpec:
    """The R-matrix (LEX ordering) after applying the family's transforms."""
    rows = [[as_scalar(evaluate(e, env), conductor) for e in row] for row in f.r_matrix]
    spec = br.BraidingSpec(2, br.SquareOperator(tuple(tuple(r) for r in rows)),
                           br.Kind.R_MATRIX, br.Ordering.PAPER).lex()
    R = spec.operator
    for t in f.transform:
        R = br.transform(R, t)
    return br.BraidingSpec(2, R, br.Kind.R_MATRIX, br.Ordering.LEX)


def braided_commutator(c: br.BraidingSpec) -> TensorElem:
    """x21 = x2 x1 - mu(c(x2 (x) x1))."""
    c = br.as_braiding(c)
    out = TensorElem.monomial((2, 1), c.dim, c.conductor)
    for (a, b), v in c.image(2, 1).items():
        out = out - TensorElem.monomial((a, b), c.dim, c.conductor, v)
    return out


def select_row(f: FamilySpec, env: Mapping[str, Any]) -> tuple[int, Row]:
    for i, row in enumerate(f.rows, start=1):
        if evaluate(row.guard, env):
            return i, row
    raise NoMatchingRow(f"{f.id}: no row matches these parameters")


def instantiate(fid: str, params: Mapping[str, Any], conductor: int | None = None,
                order_bound: int = 1000) -> tuple[br.BraidingSpec, ExpectedProfile]:
    f = family(fid)
    values, conductor = _coerce_params(f, params, conductor)
    env = family_env(f, values, order_bound)
    R = r_matrix(f, env, conductor)
    c = br.to_braiding(R)
    quad = bool(evaluate(f.quad_condition, env))
    if not quad:
        return c, ExpectedProfile(f.id, False)
    idx, row = select_row(f, env)
    gens = {"x1": TensorElem.letter(1, 2, conductor), "x2": TensorElem.letter(2, 2, conductor),
            "x21": braided_commutator(c)}
    lazy = _LazyEnv({**env, **gens}, dict(f.elements))
    rels = []
    for tmpl in row.relations:
        u = evaluate(tmpl, lazy)
        if not isinstance(u, TensorElem):
            raise NicholsError(f"{f.id}: relation {tmpl!r} is not a tensor")
        rels.append((tmpl, u))
    ints = {k: v for k, v in env.items()
            if k in dict(f.derived) and (isinstance(v, int) or v == INF)}
    total = None
    if row.total_dim is not None:
        total = int(evaluate(row.total_dim, env))
    return c, ExpectedProfile(f.id, True, idx, row, rels, row.ladder.bind(**ints),
                              total, row.growth, ints)


# -- verification ----------------------------------------------------------

def verify_profile(fid: str, params: Mapping[str, Any], D: int,
                   conductor: int | None = None, order_bound: int = 1000,
                   cap: int | None = None) -> VerifyReport:
    t0 = time.perf_counter()
    f = family(fid)
    values, conductor = _coerce_params(f, params, conductor)
    c, prof = instantiate(fid, values, conductor, order_bound)
    R = r_matrix(f, family_env(f, values, order_bound), conductor)
    rep = VerifyReport(fid, {k: format_scalar(v) for k, v in values.items()}, conductor,
                       prof.row_label)
    _structural_checks(rep, R, c)

    quad = quadratic_relations(c)
    if prof.quadratic:
        exp = prof.quadratic_relations()
        rep.add("quadratic_span", _span_text(exp), _span_text(quad), span_equal(exp, quad))
    else:
        rep.add("quadratic_span", "no relations", _span_text(quad), not quad)

    limit = degree_cap(cap)
    for tmpl, u in prof.relations:
        if u.degree > limit:
            rep.add(f"relation {tmpl}", "in J(V)", f"degree {u.degree} above cap", None)
            continue
        ok = verify_relation(c, u, cap)
        rep.add(f"relation {tmpl}", "in J(V)", "in J(V)" if ok else "not in J(V)", ok)

    h = hilbert_series(c, D, cap)
    rep.hilbert = list(h.dims)
    if prof.ladder is not None:
        counts = tuple(pbw_count(prof.ladder, m) for m in range(D + 1))
        rep.add("hilbert_vs_pbw", counts, h.dims, counts == h.dims)
    else:
        rep.add("hilbert_vs_pbw", "no ladder (no quadratic relations)", h.dims, None)

    if prof.total_dim is not None:
        top = prof.ladder_top_degree()
        if h.trailing_zeros() >= 2:
            rep.add("total_dim", prof.total_dim, h.total, h.total == prof.total_dim)
        elif top is not None and D < top + 2:
            rep.add("total_dim", prof.total_dim, f"window D={D} too short", None)
        else:
            rep.add("total_dim", prof.total_dim, f"no trailing zeros up to {D}", False)

    if D >= 6:
        g = growth_classify(h)
        rep.growth = g.tag.value
        if prof.growth is not None:
            rep.add("growth", prof.growth.value, g.tag.value, g.tag is prof.growth)
    else:
        rep.add("growth", prof.growth.value if prof.growth else "-", "window below 6", None)
    if prof.row is not None and prof.row.note:
        rep.notes.append(prof.row.note)
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def _structural_checks(rep: VerifyReport, R: br.BraidingSpec, c: br.BraidingSpec) -> None:
    rep.add("qybe", True, br.satisfies_qybe(R.operator), br.satisfies_qybe(R.operator))
    be = br.satisfies_braid_eq(c.operator)
    rep.add("braid_equation", True, be, be)
    inv = br.is_invertible(c.operator)
    rep.add("invertible", True, inv, inv)
    rig = br.is_rigid(c)
    rep.add("rigid", True, rig, rig)


def _span_text(us: list[TensorElem]) -> str:
    if not us:
        return "<>"
    return "<" + ", ".join(str(u) for u in us) + ">"


def check_braiding(c: br.BraidingSpec, D: int, R: br.BraidingSpec | None = None,
                   cap: int | None = None) -> VerifyReport:
    """Structural checks plus quadratic relations and Hilbert window of any braiding."""
    t0 = time.perf_counter()
    c = br.as_braiding(c)
    rep = VerifyReport("custom", {}, c.conductor)
    if R is not None:
        ok = br.satisfies_qybe(R.lex().operator)
        rep.add("qybe", True, ok, ok)
    be = br.satisfies_braid_eq(c.operator)
    rep.add("braid_equation", True, be, be)
    inv = br.is_invertible(c.operator)
    rep.add("invertible", True, inv, inv)
    rig = br.is_rigid(c)
    rep.add("rigid", True, rig, rig)
    quad = quadratic_relations(c)
    rep.add("quadratic_relations", "-", _span_text(quad), None)
    if be and inv:
        h = hilbert_series(c, D, cap)
        rep.hilbert = list(h.dims)
        if D >= 6:
            rep.growth = growth_classify(h).tag.value
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep


# -- witnesses and dump ----------------------------------------------------

@dataclass(frozen=True)
class Witness:
    family: str
    params: tuple[tuple[str, str], ...]
    conductor: int
    D: int

    @property
    def param_dict(self) -> dict[str, str]:
        return dict(self.params)


def _w(fid: str, conductor: int, D: int, **params: str) -> Witness:
    return Witness(fid, tuple(params.items()), conductor, D)


_SQRT_HALF = "1/2*z - 1/2*z^3"   # 1/sqrt(2) in Q(zeta_8)
_I_SQRT_HALF = "1/2*z + 1/2*z^3"  # i/sqrt(2)

WITNESSES: tuple[Witness, ...] = (
    _w("R2_1", 4, 6, k="z", p="2", q="3"),
    _w("R2_1", 3, 8, k="z^2", p="2", q="1/2"),
    _w("R2_1", 1, 8, k="2", p="3", q="1/3"),
    _w("R2_2", 4, 6, k="z", p="2", q="1/2"),
    _w("R2_2", 12, 8, k="z^3", p="1", q="-z^4"),
    _w("R2_2", 4, 8, k="z", p="2", q="3"),
    _w("R2_2", 1, 8, k="2", p="3", q="1/3"),
    _w("R2_2a", 4, 6, k="z", p="2", q="1/2"),
    _w("R2_2a", 12, 8, k="z^3", p="1", q="-z^4"),
    _w("R2_2a", 4, 8, k="z", p="2", q="3"),
    _w("R2_2a", 1, 8, k="2", p="3", q="1/3"),
    _w("R2_3", 1, 6, k="-1", p="-1", q="1", s="1"),
    _w("R2_3", 1, 8, k="-1", p="-1", q="1", s="0"),
    _w("R2_3", 1, 8, k="-1", p="0", q="1", s="0"),
    _w("R2_3", 1, 8, k="1", p="0", q="1", s="0"),
    _w("R1_1", 8, 6, p=_I_SQRT_HALF, q=_SQRT_HALF),
    _w("R1_1", 24, 8, p="-z^8*(z^3 - z^9)/2", q="(z^3 - z^9)/2"),
    _w("R1_1", 8, 8, p="1", q=_SQRT_HALF),
    _w("R1_1", 24, 8, p="z^6*(z^3 - z^9)/2", q="z^14*(z^3 - z^9)/2"),
    _w("R1_1", 8, 8, p=_I_SQRT_HALF, q="1"),
    _w("R1_2", 1, 6, k="0", p="-1", q="1"),
    _w("R1_2", 3, 8, k="1", p="-1", q="-z"),
    _w("R1_2", 1, 8, k="1", p="-1", q="2"),
    _w("R1_2", 3, 8, k="1", p="z", q="1"),
    _w("R1_2", 1, 8, k="1", p="2", q="1"),
    _w("R1_2a", 1, 6, k="0", p="-1", q="1"),
    _w("R1_2a", 1, 8, k="1", p="-1", q="1"),
    _w("R1_2a", 3, 8, k="1", p="-1", q="-z"),
    _w("R1_2a", 1, 8, k="1", p="-1", q="2"),
    _w("R1_2a", 3, 8, k="1", p="z", q="1"),
    _w("R1_2a", 1, 8, k="1", p="2", q="1"),
    _w("R1_2c", 1, 6, k="0", p="-1", q="1"),
    _w("R1_2c", 3, 8, k="1", p="-1", q="-z"),
    _w("R1_2c", 1, 8, k="1", p="-1", q="2"),
    _w("R1_2c", 3, 8, k="1", p="z", q="1"),
    _w("R1_2c", 1, 8, k="1", p="2", q="1"),
    _w("R1_2ac", 1, 6, k="0", p="-1", q="1"),
    _w("R1_2ac", 1, 8, k="1", p="-1", q="1"),
    _w("R1_2ac", 3, 8, k="1", p="-1", q="-z"),
    _w("R1_2ac", 1, 8, k="1", p="-1", q="2"),
    _w("R1_2ac", 3, 8, k="1", p="z", q="1"),
    _w("R1_2ac", 1, 8, k="1", p="2", q="1"),
    _w("R1_3", 4, 6, k="z", p="1", q="1"),
    _w("R1_3", 1, 8, k="1", p="1", q="1"),
    _w("R1_4", 1, 6, k="-1", p="2", q="-1/2"),
    _w("R1_4", 1, 8, k="-1", p="2", q="3"),
    _w("R1_4", 1, 6, k="-1", p="2", q="1/2"),
    _w("R1_4", 1, 8, k="2", p="2", q="1/2"),
    _w("R0_1", 1, 8, k="1"),
    _w("R0_1", 1, 8, k="-1"),
)


# Parameters where the computed algebra contradicts a catalogued claim.  They are
# kept out of WITNESSES so that a green verify-all means "every claim that
# holds was checked", and are exercised separately by the test suite.
KNOWN_DISCREPANCIES: tuple[tuple[Witness, str], ...] = (
    (_w("R1_1", 24, 8, p="-z^4*(z^3 - z^9)/2", q="(z^3 - z^9)/2"),
     "N=6: the stated basis for even N has N elements and matches every graded "
     "dimension; the stated dimension 2N does not (computed total 6)"),
    (_w("R1_4", 3, 8, k="z", p="2", q="1/2"),
     "N=3: total N^2=9 holds but the catalogued ladder counts (1,2,3,2,2) against "
     "computed (1,2,3,2,1); graded dims are 1..N..1"),
)


def run_witness(w: Witness, cap: int | None = None, order_bound: int = 1000) -> VerifyReport:
    return verify_profile(w.family, w.param_dict, w.D, conductor=w.conductor,
                          order_bound=order_bound, cap=cap)


def _ladder_json(l: PBWLadder) -> dict:
    return {"generators": [{"name": n, "degree": d, "exponent": v} for n, d, v in l.generators],
            "constraint": l.constraint}


def catalog_json() -> dict:
    fams = []
    for f in FAMILIES.values():
        fams.append({
            "id": f.id,
            "param_names": list(f.param_names),
            "r_matrix": [list(r) for r in f.r_matrix],
            "ordering": "paper",
            "transform": list(f.transform),
            "domain_constraints": list(f.constraints),
            "quad_condition": f.quad_condition,
            "derived": dict(f.derived),
            "elements": dict(f.elements),
            "rows": [{
                "guard": r.guard,
                "label": r.label,
                "relations": list(r.relations),
                "ladder": _ladder_json(r.ladder),
                "total_dim": r.total_dim,
                "growth": r.growth.value,
                "algebra": r.algebra,
                "note": r.note,
            } for r in f.rows],
        })
    return {"families": fams,
            "witnesses": [{"family": w.family, "conductor": w.conductor, "max_degree": w.D,
                           "params": w.param_dict} for w in WITNESSES]}


def dump_catalog() -> str:
    return json.dumps(catalog_json(), indent=2, sort_keys=True) + "\n"
