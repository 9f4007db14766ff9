"""Braid operators, PBW vectors, their norms and PBW expansions."""

import pytest
from hypothesis import given, strategies as st

from qtwist.pbw import (PBWError, TriangularElement, braid_apply, braid_relation_length,
                        check_braid_inverse, check_braid_relations, exponents_up_to,
                        in_nilpotent_subalgebra, pbw_dual, pbw_expand, pbw_norm_closed,
                        pbw_vector)
from qtwist.rootdata import cartan_type, enumerate_reduced_words
from qtwist.scalars import ONE, parse_scalar
from qtwist.uqminus import lusztig_pair, parse_element

A2 = cartan_type("A2")


def test_braid_on_torus_and_generators():
    t = TriangularElement.torus(A2, (1, 0))
    assert braid_apply(0, t) == TriangularElement.torus(A2, (-1, 0))
    f2 = TriangularElement.f(A2, 1)
    expected = TriangularElement.from_minus(parse_element(A2, "f2*f1 - q*f1*f2"))
    assert braid_apply(0, f2) == expected
    # T_i(f_i) = -t_i^{-1} e_i
    minus_e = TriangularElement.torus(A2, (-1, 0)) * TriangularElement.e(A2, 0)
    assert braid_apply(0, TriangularElement.f(A2, 0)) == -minus_e


@pytest.mark.parametrize("name,m", [("A2", 3), ("B2", 4), ("G2", 6)])
def test_braid_relations_hold(name, m):
    rd = cartan_type(name)
    assert braid_relation_length(rd, 0, 1) == m
    assert all(check_braid_relations(rd).values())


def test_braid_inverse():
    assert check_braid_inverse(A2)


def test_pbw_vector_values():
    word = (0, 1, 0)
    assert pbw_vector((0, 0, 0), word, A2) == parse_element(A2, "1")
    assert pbw_vector((1, 0, 0), word, A2) == parse_element(A2, "f1")
    assert pbw_vector((0, 1, 0), word, A2) == parse_element(A2, "f2*f1 - q*f1*f2")


def test_pbw_vector_rejects_bad_input():
    with pytest.raises(ValueError):
        pbw_vector((1, 0), (0, 1, 0), A2)
    with pytest.raises(PBWError):
        pbw_vector((1, 0), (0, 0), A2)


def test_closed_norm_values():
    assert pbw_norm_closed((1, 0, 0), (0, 1, 0), A2) == parse_scalar("1/(1-q^2)")
    assert pbw_norm_closed((2, 0, 0), (0, 1, 0), A2) == parse_scalar("1/((1-q^2)*(1-q^4))")
    assert pbw_norm_closed((0, 0, 0), (0, 1, 0), A2) == ONE


def test_dual_pbw_pairs_to_one():
    for c in [(1, 1, 0), (0, 2, 1)]:
        assert lusztig_pair(pbw_dual(c, (0, 1, 0), A2), pbw_vector(c, (0, 1, 0), A2)) == ONE


def test_expansion_examples():
    coeffs, res = pbw_expand(pbw_vector((1, 2, 0), (0, 1, 0), A2), (0, 1, 0))
    assert coeffs == {(1, 2, 0): ONE} and res.is_zero()
    coeffs, res = pbw_expand(parse_element(A2, "f2"), (0,))
    assert coeffs == {} and res == parse_element(A2, "f2")
    _, res = pbw_expand(parse_element(A2, "f1*f2"), (0, 1, 0))
    assert res.is_zero()


@given(st.sampled_from(["A2", "B2"]), st.data())
def test_pbw_orthogonality_and_norms(name, data):
    rd = cartan_type(name)
    word = data.draw(st.sampled_from(enumerate_reduced_words(rd.longest_element())))
    cs = exponents_up_to(rd, word, 3)
    a, b = data.draw(st.sampled_from(cs)), data.draw(st.sampled_from(cs))
    fa, fb = pbw_vector(a, word, rd), pbw_vector(b, word, rd)
    if a == b:
        assert lusztig_pair(fa, fb) == pbw_norm_closed(a, word, rd)
    else:
        assert lusztig_pair(fa, fb).is_zero()


@given(st.sampled_from(["A2", "B2"]), st.data())
def test_pbw_span_independent_of_word(name, data):
    rd = cartan_type(name)
    words = enumerate_reduced_words(rd.longest_element())
    word, other = data.draw(st.sampled_from(words)), data.draw(st.sampled_from(words))
    c = data.draw(st.sampled_from(exponents_up_to(rd, word, 3)))
    assert in_nilpotent_subalgebra(pbw_vector(c, word, rd), other)
