import random
from fractions import Fraction

import pytest

from nichols import braidings as br
from nichols.errors import DegreeCapExceeded
from nichols.nichols import (Growth, HilbertWindow, growth_classify, hilbert_series,
                             hilbert_series_by_symmetrizer, power_relation_degree,
                             quadratic_relations, tower_for, verify_relation)
from nichols.scalars import zeta
from nichols.tensor import TensorElem, span_equal

from conftest import FAMILY_IDS, family_instance
from test_braidings import family_R, random_phi


def x(*w, coeff=1, conductor=1):
    return TensorElem.monomial(w, 2, conductor, coeff)


def poly_coeffs(factors, D):
    """Coefficients of prod (1 + t + ... + t^(N-1)) up to t^D."""
    out = [1] + [0] * D
    for N in factors:
        new = [0] * (D + 1)
        for m in range(D + 1):
            new[m] = sum(out[m - j] for j in range(N) if m - j >= 0)
        out = new
    return tuple(out)


def test_quadratic_relation_examples():
    c = br.to_braiding(family_R("R2_1", 4, k="z", p="2", q="3"))
    quad = quadratic_relations(c)
    i = zeta(4)
    rel = x(1, 2, conductor=4) - x(2, 1, conductor=4, coeff=3 * i)
    assert span_equal(quad, [x(1, 1, conductor=4), rel, x(2, 2, conductor=4)])
    c = br.to_braiding(family_R("R1_2", 1, k="0", p="-1", q="1"))
    assert span_equal(quadratic_relations(c), [x(1, 1), x(2, 2), x(1, 2) - x(2, 1)])
    c = br.to_braiding(family_R("R2_1", 1, k="2", p="3", q="5"))
    assert quadratic_relations(c) == []


def test_hilbert_examples():
    c = br.to_braiding(family_R("R2_1", 4, k="z", p="2", q="3"))
    assert hilbert_series(c, 5).dims == (1, 2, 1, 0, 0, 0)
    jordan = br.to_braiding(family_R("R2_3", 1, k="1", p="0", q="1", s="0"))
    assert hilbert_series(jordan, 8).dims == tuple(range(1, 10))
    flip = br.BraidingSpec(2, br.flip(2))
    assert hilbert_series(flip, 4).dims == (1, 2, 3, 4, 5)
    with pytest.raises(DegreeCapExceeded):
        hilbert_series(flip, 11)


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_tower_agrees_with_symmetrizer_ranks(fid):
    _, c = family_instance(fid)
    h = hilbert_series(c, 6)
    assert h.dims == hilbert_series_by_symmetrizer(c, 6).dims
    assert h.dims[:2] == (1, 2)


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_relations_in_degree_complement(fid):
    _, c = family_instance(fid)
    tower = tower_for(c)
    dims = tower.dims(4)
    for m in range(2, 5):
        rels = tower.relations_in_degree(m)
        assert len(rels) == 2 ** m - dims[m]
        assert all(verify_relation(c, u) for u in rels)


@pytest.mark.parametrize("N1,N2,q11,q22,conductor", [
    (2, 2, "-1", "-1", 1),
    (2, 4, "-1", "z", 4),
    (3, 3, "z", "z^2", 3),
])
def test_quantum_linear_spaces(N1, N2, q11, q22, conductor):
    c = br.diagonal_braiding([[q11, "2"], ["1/2", q22]], conductor)
    D = N1 + N2
    assert hilbert_series(c, D).dims == poly_coeffs([N1, N2], D)


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_d2_counts_quadratic_relations(fid):
    _, c = family_instance(fid)
    assert hilbert_series(c, 2).dims[2] == 4 - len(quadratic_relations(c))


def test_d2_on_random_diagonal():
    rng = random.Random(7)
    for _ in range(20):
        q = [[rng.choice([-1, 1, 2, "z", "z^3"]) for _ in range(2)] for _ in range(2)]
        c = br.diagonal_braiding(q, 4)
        assert hilbert_series(c, 2).dims[2] == 4 - len(quadratic_relations(c))


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_hilbert_invariant_under_basis_change(fid):
    R, c = family_instance(fid)
    ref = hilbert_series(c, 5).dims
    rng = random.Random(f"hilbert-{fid}")
    for _ in range(10):
        phi = random_phi(rng, R.conductor)
        R2 = br.transform(R.operator, "basis", phi)
        c2 = br.to_braiding(br.BraidingSpec(2, R2, br.Kind.R_MATRIX))
        assert hilbert_series(c2, 5).dims == ref


def test_verify_relation_examples():
    sj = br.to_braiding(family_R("R2_3", 1, k="-1", p="0", q="1", s="0"))
    cubic = x(2, 2, 1) + x(1, 2, 1, coeff=0 - 1) - x(1, 2, 2)
    assert verify_relation(sj, cubic)
    jordan = br.to_braiding(family_R("R2_3", 1, k="1", p="0", q="1", s="0"))
    assert verify_relation(jordan, x(1, 1, coeff=Fraction(1, 2)) - x(1, 2) + x(2, 1))
    assert verify_relation(jordan, TensorElem.zero(2, 3, 1))
    assert not verify_relation(jordan, x(1, 1))


def test_power_relation_degree():
    c = br.to_braiding(family_R("R2_1", 4, k="z", p="2", q="3"))
    assert power_relation_degree(c, 1) == 2
    assert verify_relation(c, x(1, 1, conductor=4))
    c = br.to_braiding(family_R("R2_2", 3, k="2", p="z", q="1"))
    assert power_relation_degree(c, 2) == 6       # ord(-pq) = ord(-z) = 6
    assert verify_relation(c, x(*([2] * 6), conductor=3))
    assert power_relation_degree(br.BraidingSpec(2, br.flip(2)), 1) is None
    # x1 of the Jordan plane is not an eigenvector pair
    jordan = br.to_braiding(family_R("R2_3", 1, k="1", p="0", q="1", s="0"))
    assert power_relation_degree(jordan, 2) is None


@pytest.mark.parametrize("dims,tag", [
    ((1, 2, 1, 0, 0, 0, 0), Growth.FINITE),
    ((1, 2, 2, 2, 2, 2, 2), Growth.BOUNDED),
    ((1, 2, 3, 4, 5, 6, 7), Growth.LINEAR),
    ((1, 2, 4, 8, 16, 32, 64), Growth.SUPERLINEAR),
    ((1, 2, 3, 2, 1, 0, 0, 0, 0), Growth.FINITE),
])
def test_growth_examples(dims, tag):
    g = growth_classify(HilbertWindow(len(dims) - 1, dims))
    assert g.tag is tag
    if tag is Growth.FINITE:
        assert HilbertWindow(len(dims) - 1, dims).trailing_zeros() >= 2


def test_growth_needs_window():
    with pytest.raises(ValueError):
        growth_classify(HilbertWindow(5, (1, 2, 1, 0, 0, 0)))
    # a single trailing zero is not enough to call it finite
    assert growth_classify(HilbertWindow(6, (1, 2, 3, 3, 3, 3, 0))).tag is not Growth.FINITE
