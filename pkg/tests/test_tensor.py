import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from nichols import braidings as br
from nichols import tensor as T
from nichols.errors import DegreeCapExceeded
from nichols.scalars import Scalar, zeta
from nichols.tensor import TensorElem

from conftest import FAMILY_IDS, family_instance
from test_braidings import family_R

FLIP = br.BraidingSpec(2, br.flip(2))


def x(*w, coeff=1, conductor=1):
    return TensorElem.monomial(w, 2, conductor, coeff)


def random_elem(rng, m, conductor):
    terms = {}
    for w in T.words(2, m):
        v = rng.randint(-2, 2)
        if v:
            terms[w] = Scalar.from_rational(v, conductor)
    return TensorElem(2, m, conductor, terms)


def test_words_and_indices():
    ws = list(T.words(2, 3))
    assert ws[0] == (1, 1, 1) and ws[-1] == (2, 2, 2)
    assert [T.word_index(w, 2) for w in ws] == list(range(8))
    assert T.index_word(5, 2, 3) == (2, 1, 2)
    assert T.format_word((1, 2)) == "x1x2"


def test_tensor_arithmetic():
    a = x(1) * x(2) - x(2) * x(1)
    assert a.degree == 2
    assert str(a) == "1 * x1x2 + -1 * x2x1"
    assert (x(1) ** 3).terms == {(1, 1, 1): 1}
    assert a - a == 0
    assert TensorElem.unit(2, 1) * x(2) == x(2)
    with pytest.raises(ValueError):
        x(1) + x(1, 2)


def test_apply_c_i_examples():
    assert T.apply_c_i(FLIP, 1, x(1, 2)) == x(2, 1)
    c = br.to_braiding(family_R("R2_1", 1, k="2", p="3", q="5"))
    assert T.apply_c_i(c, 1, x(2, 1)) == x(1, 2, coeff=6)
    with pytest.raises(IndexError):
        T.apply_c_i(c, 2, x(1, 2))


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_braid_relation_on_random_elements(fid):
    _, c = family_instance(fid)
    rng = random.Random(fid)
    for _ in range(5):
        u = random_elem(rng, 3, c.conductor)
        lhs = T.apply_c_i(c, 1, T.apply_c_i(c, 2, T.apply_c_i(c, 1, u)))
        rhs = T.apply_c_i(c, 2, T.apply_c_i(c, 1, T.apply_c_i(c, 2, u)))
        assert lhs == rhs


def test_braid_lift_examples():
    c = family_instance("R2_1")[1]
    assert T.braid_lift(c, (1, 2, 3)) == T.DegreeOperator.identity(2, 3, c.conductor)
    assert T.braid_lift(c, (2, 1, 3)) == T.c_i(c, 1, 3)
    assert T.braid_lift(c, (1, 3, 2)) == T.c_i(c, 2, 3)
    assert sorted(T.all_reduced_words((3, 2, 1))) == [(1, 2, 1), (2, 1, 2)]
    assert T.lift_word(c, (1, 2, 1), 3) == T.lift_word(c, (2, 1, 2), 3)


def test_reduced_words_have_minimal_length():
    for perm in itertools.permutations(range(1, 5)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        words = T.all_reduced_words(perm)
        assert T.reduced_word(perm) in words
        assert all(len(w) == inversions for w in words)


@pytest.mark.parametrize("fid", FAMILY_IDS)
@pytest.mark.parametrize("m", [3, 4])
def test_matsumoto_well_defined(fid, m):
    _, c = family_instance(fid)
    for perm in itertools.permutations(range(1, m + 1)):
        lifts = [T.lift_word(c, w, m) for w in T.all_reduced_words(perm)]
        assert all(L == lifts[0] for L in lifts[1:])


def test_coproduct_examples():
    c = family_instance("R2_1")[1]
    assert T.coproduct_1_rest(c, 1) == T.DegreeOperator.identity(2, 1, c.conductor)
    assert T.coproduct_1_rest(c, 2) == T.DegreeOperator.identity(2, 2, c.conductor) + T.c_i(c, 1, 2)
    got = T.coproduct_1_rest(FLIP, 3)(x(1, 2, 1))
    assert got == x(1, 2, 1) + x(2, 1, 1) + x(1, 1, 2)


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_coproduct_matches_explicit_sum(fid):
    _, c = family_instance(fid)
    for m in range(1, 6):
        explicit = T.lift_word(c, (), m)
        for j in range(1, m):
            explicit = explicit + T.lift_word(c, tuple(range(1, j + 1)), m)
        assert T.coproduct_1_rest(c, m) == explicit


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_symmetrizer_recursion_equals_full_sum(fid):
    _, c = family_instance(fid)
    for m in range(0, 5):
        assert T.symmetrizer(c, m) == T.symmetrizer_full_sum(c, m)


@pytest.mark.parametrize("fid", FAMILY_IDS)
def test_symmetrizer_factorization(fid):
    _, c = family_instance(fid)
    for m in range(2, 7):
        lhs = T.symmetrizer(c, m)
        rhs = T.shift(T.symmetrizer(c, m - 1)) @ T.coproduct_1_rest(c, m)
        assert lhs == rhs


def test_symmetrizer_examples():
    c = family_instance("R2_1")[1]
    assert T.symmetrizer(c, 2) == T.DegreeOperator.identity(2, 2, c.conductor) + T.c_i(c, 1, 2)
    for m in range(7):
        assert T.rank(T.symmetrizer(FLIP, m)) == m + 1
    jordan = br.to_braiding(family_R("R2_3", 1, k="1", p="0", q="1", s="0"))
    assert T.rank(T.symmetrizer(jordan, 3)) == 4


def test_rank_and_kernel_examples():
    I = T.DegreeOperator.identity(2, 2, 1)
    assert T.rank(I) == 4 and T.kernel_basis(I) == []
    c = br.to_braiding(family_R("R2_1", 1, k="2", p="3", q="5"))
    assert T.rank(T.symmetrizer(c, 2)) == 4


def test_kernel_basis_normalized():
    c = br.to_braiding(family_R("R2_1", 4, k="z", p="2", q="3"))
    ker = T.kernel_basis(T.symmetrizer(c, 2))
    for u in ker:
        lead = min(u.terms)
        assert u.terms[lead] == 1
    assert [min(u.terms) for u in ker] == sorted(min(u.terms) for u in ker)
    assert x(1, 2, conductor=4) - x(2, 1, coeff=3 * zeta(4), conductor=4) in ker


def test_degree_cap(monkeypatch):
    with pytest.raises(DegreeCapExceeded):
        T.symmetrizer(FLIP, 11)
    with pytest.raises(DegreeCapExceeded):
        T.symmetrizer(FLIP, 5, cap=4)
    monkeypatch.setenv("NICHOLS_DEGREE_CAP", "3")
    with pytest.raises(DegreeCapExceeded):
        T.symmetrizer(FLIP, 4)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 4), st.integers(0, 2**16))
def test_vector_round_trip(m, seed):
    u = random_elem(random.Random(seed), m, 1)
    assert TensorElem.from_vector(u.to_vector(), 2, m, 1) == u
