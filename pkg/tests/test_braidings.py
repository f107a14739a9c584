import json
from fractions import Fraction
import random

import pytest

from nichols import braidings as br
from nichols import catalog as cat
from nichols.errors import NicholsError
from nichols.nichols import quadratic_relations
from nichols.scalars import Scalar, zeta
from nichols.tensor import DegreeOperator, kernel_basis, span_equal

from conftest import FAMILY_IDS, family_instance


def family_R(fid, conductor, **params):
    f = cat.family(fid)
    values, cond = cat._coerce_params(f, params, conductor)
    return cat.r_matrix(f, cat.family_env(f, values), cond)


def paper_R(fid, conductor, **params):
    """Untransformed template matrix, PAPER ordering."""
    f = cat.family(fid)
    values, cond = cat._coerce_params(f, params, conductor)
    env = cat.family_env(f, values)
    rows = [[cat.evaluate(t, env) for t in row] for row in f.r_matrix]
    return br.BraidingSpec(2, br.SquareOperator.from_rows(rows, cond), br.Kind.R_MATRIX,
                           br.Ordering.PAPER)


def images(c):
    c = br.as_braiding(c)
    return {(i, j): c.image(i, j) for i in (1, 2) for j in (1, 2)}


def random_phi(rng, conductor, dim=2):
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)]
        phi = br.SquareOperator.from_rows(rows, conductor)
        if phi.is_invertible():
            return phi


def test_to_braiding_trivial():
    I = br.SquareOperator.identity(4)
    tau = br.flip(2)
    assert br.to_braiding(br.BraidingSpec(2, I, br.Kind.R_MATRIX)).operator == tau
    assert br.to_braiding(br.BraidingSpec(2, tau, br.Kind.R_MATRIX)).operator == I


def test_braiding_display_r21():
    c = br.to_braiding(family_R("R2_1", 1, k="2", p="3", q="5"))
    im = images(c)
    assert im[(2, 1)] == {(1, 2): 6}                      # kp x1 (x) x2
    assert im[(1, 2)] == {(2, 1): 10, (1, 2): -11}        # kq x2x1 + (k^2 - pq) x1x2
    assert im[(1, 1)] == {(1, 1): 4} and im[(2, 2)] == {(2, 2): 4}


def test_ordering_conversion():
    R = paper_R("R2_1", 1, k="2", p="3", q="5")
    lex = R.lex()
    assert lex.paper().operator == R.operator
    # converting then braiding equals braiding the reordered matrix
    assert br.to_braiding(R).operator == br.to_braiding(lex).operator
    # in LEX ordering the R-matrix of R2_1 is tau R tau of the PAPER-ordered template
    assert lex.operator == br.transform(R.operator, "sharp")


def test_qybe_examples():
    assert br.satisfies_qybe(br.SquareOperator.identity(4))
    R = paper_R("R2_3", 1, k="1", p="1", q="2", s="3").lex().operator
    assert br.satisfies_qybe(R)
    P = paper_R("R2_1", 1, k="2", p="3", q="5")

    def with_entry(a, b, value):
        rows = [list(r) for r in P.operator.entries]
        rows[a][b] = value
        return br.BraidingSpec(2, br.SquareOperator.from_rows(rows), br.Kind.R_MATRIX,
                               br.Ordering.PAPER).lex().operator

    # zeroing k^2 - pq leaves a diagonal-type solution
    assert br.satisfies_qybe(with_entry(1, 2, 0))
    assert not br.satisfies_qybe(with_entry(1, 1, 0))
    assert not br.satisfies_qybe(with_entry(0, 3, 1))


def test_braid_equation_examples():
    assert br.satisfies_braid_eq(br.flip(2))
    rows = [list(r) for r in br.flip(2).entries]
    rows[2][0] = 1
    assert not br.satisfies_braid_eq(br.SquareOperator.from_rows(rows))


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_catalog_families_are_invertible_rigid_solutions(fid):
    R, c = family_instance(fid)
    assert br.satisfies_qybe(R.operator)
    assert br.satisfies_braid_eq(c.operator)
    assert br.is_invertible(c.operator)
    assert br.is_rigid(c)


def test_rigidity_examples():
    assert br.is_rigid(br.BraidingSpec(2, br.flip(2)))
    q = [[2, 3], [5, 7]]
    c = br.diagonal_braiding(q)
    flat = br.c_flat(c)
    diag = [flat.entries[k][k] for k in range(4)]
    assert [int(v.to_fraction()) for v in diag] == [2, 5, 3, 7]
    assert all(not flat.entries[a][b] for a in range(4) for b in range(4) if a != b)
    assert br.is_rigid(c)
    # a non-rigid but invertible-looking candidate: c with a zero diagonal entry
    assert not br.is_rigid(br.diagonal_braiding([[0, 1], [1, 1]]))


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_transpose_and_sharp_commuting_involutions(fid):
    R, _ = family_instance(fid)
    op = R.operator
    t = br.transform(op, "transpose")
    s = br.transform(op, "sharp")
    assert br.transform(t, "transpose") == op
    assert br.transform(s, "sharp") == op
    assert br.transform(t, "sharp") == br.transform(s, "transpose")
    for variant in (t, s, br.transform(t, "sharp")):
        assert br.satisfies_qybe(variant)


def test_sharp_of_r21_display():
    k, p, q = 2, 3, 5
    R = family_R("R2_1", 1, k=str(k), p=str(p), q=str(q))
    sharp = br.BraidingSpec(2, br.transform(R.operator, "sharp"), br.Kind.R_MATRIX)
    im = images(br.to_braiding(sharp))
    assert im[(1, 1)] == {(1, 1): k * k}
    assert im[(1, 2)] == {(2, 1): k * p}
    assert im[(2, 1)] == {(1, 2): k * q, (2, 1): k * k - p * q}
    assert im[(2, 2)] == {(2, 2): k * k}


def test_transpose_of_r21_display():
    k, p, q = 2, 3, 5
    R = family_R("R2_1", 1, k=str(k), p=str(p), q=str(q))
    t = br.BraidingSpec(2, br.transform(R.operator, "transpose"), br.Kind.R_MATRIX)
    im = images(br.to_braiding(t))
    assert im[(1, 2)] == {(2, 1): k * q}
    assert im[(2, 1)] == {(1, 2): k * p, (2, 1): k * k - p * q}


def test_transpose_of_r22_display():
    k, p, q = 2, 3, 5
    c = br.to_braiding(family_R("R2_2a", 1, k=str(k), p=str(p), q=str(q)))
    im = images(c)
    assert im[(1, 1)] == {(1, 1): k * k}
    assert im[(1, 2)] == {(2, 1): k * q}
    assert im[(2, 1)] == {(1, 2): k * p, (2, 1): k * k - p * q}
    assert im[(2, 2)] == {(2, 2): -p * q}


def test_scale_shifts_quadratic_kernel():
    R = family_R("R2_1", 4, k="z", p="2", q="3")
    kappa = Scalar.from_rational(Fraction(3, 4), 4)
    scaled = br.BraidingSpec(2, br.transform(R.operator, "scale", kappa), br.Kind.R_MATRIX)
    c = br.to_braiding(R)
    shifted = c.operator + br.SquareOperator.identity(4, 4).scaled(kappa.inv())
    want = kernel_basis(_op_as_degree2(shifted))
    assert span_equal(quadratic_relations(br.to_braiding(scaled)), want)


def _op_as_degree2(op):
    cols = []
    for j in range(op.size):
        cols.append({i: op.entries[i][j] for i in range(op.size) if op.entries[i][j]})
    return DegreeOperator(2, 2, op.conductor, tuple(cols))


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_basis_change_preserves_braid_equation(fid):
    R, c = family_instance(fid)
    rng = random.Random(f"basis-{fid}")
    for _ in range(20):
        phi = random_phi(rng, R.conductor)
        R2 = br.transform(R.operator, "basis", phi)
        assert br.satisfies_qybe(R2)
        c2 = br.to_braiding(br.BraidingSpec(2, R2, br.Kind.R_MATRIX))
        assert br.satisfies_braid_eq(c2.operator)


def test_transform_errors():
    R = br.SquareOperator.identity(4)
    with pytest.raises(ValueError):
        br.transform(R, "scale", 0)
    with pytest.raises(ValueError):
        br.transform(R, "basis", br.SquareOperator.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        br.transform(R, "rotate")


def test_json_round_trip(tmp_path):
    R = paper_R("R2_1", 4, k="z", p="2", q="3")
    data = br.braiding_to_json(R)
    path = tmp_path / "r.json"
    path.write_text(json.dumps(data))
    back = br.load_braiding(path)
    assert back == R
    assert back.operator.entries[0][0] == zeta(4) ** 2


@pytest.mark.parametrize("payload", [
    {"dim": 2},
    {"dim": 2, "conductor": 1, "kind": "X", "entries": [[1]]},
    {"dim": 2, "conductor": 0, "entries": [[1]]},
    {"dim": 2, "conductor": 1, "entries": [["1", "0"], ["0", "1"]]},
    {"dim": 2, "conductor": 1, "entries": [["1", "0", "0", "0"], ["0", "1"]]},
    {"dim": 2, "conductor": 1, "entries": [["y"] * 4] * 4},
])
def test_invalid_braiding_files(payload):
    with pytest.raises((NicholsError, ValueError)):
        br.braiding_from_json(payload)
