"""Highest weight modules, extremal vectors, matrix coefficients and minors."""

import pytest
from hypothesis import given, strategies as st

from qtwist.canonical import CrystalLabel, degrees_up_to, dual_canonical_element
from qtwist.highest_weight import (ModuleError, act_e, act_f, act_word, contravariant_form,
                                   demazure_dimension, extremal_exponents, extremal_vector,
                                   kumar_peterson_check, matrix_coefficient, module,
                                   module_basis_vectors, quantum_minor, vector_from_dcb,
                                   weight_basis_module)
from qtwist.rootdata import cartan_type
from qtwist.uqminus import algebra, lusztig_pair, parse_element, words_of_degree

A1 = cartan_type("A1")
A2 = cartan_type("A2")
B2 = cartan_type("B2")


def test_weight_space_dimensions():
    assert weight_basis_module((1,), (1,), A1) == {"dim": 1, "degree": (0,), "basis": [()]}
    assert weight_basis_module((1, 0), (0, -1), A2)["dim"] == 1
    assert weight_basis_module((1, 1), (0, 0), A2)["dim"] == 2
    assert sum(len(module_basis_vectors(module(A2, (1, 1)), xi)) for xi in degrees_up_to(A2, 4)) == 8


def test_non_dominant_weight_rejected():
    with pytest.raises(ModuleError):
        module(A2, (1, -1))


def test_action_values_in_a1():
    mod = module(A1, (1,))
    u = mod.highest()
    assert act_e(0, u).is_zero()
    assert act_e(0, act_f(0, u)) == u
    assert act_f(0, u, 2).is_zero()
    assert contravariant_form(u, u).is_one()
    assert contravariant_form(act_f(0, u), act_f(0, u)).is_one()
    assert contravariant_form(u, act_f(0, u)).is_zero()


def test_extremal_vectors():
    assert extremal_vector(A2.identity(), (1, 1)) == module(A2, (1, 1)).highest()
    s = A1.element_from_word((0,))
    assert extremal_vector(s, (1,)) == act_f(0, module(A1, (1,)).highest())
    w0 = A2.element_from_word((0, 1, 0))
    assert extremal_exponents(w0, (1, 0)) == (0, 1, 1)
    u = module(A2, (1, 0)).highest()
    assert extremal_vector(w0, (1, 0)) == act_f(1, act_f(0, u))


def test_minor_values():
    one = algebra(A2).one()
    assert quantum_minor(A2.identity(), A2.identity(), (1, 1)) == one
    for rd in (A2, B2):
        for i in range(2):
            s = rd.element_from_word((i,))
            expected = parse_element(rd, f"(1-q^{2 * rd.d(i)})*f{i + 1}")
            assert quantum_minor(s, rd.identity(), rd.fundamental(i)) == expected
    s1 = A2.element_from_word((0,))
    assert quantum_minor(s1, A2.identity(), (0, 1)) == one
    # D_{u, u'} vanishes when wt u - wt u' is not in -Q_+
    u = module(A2, (1, 0)).highest()
    assert matrix_coefficient(u, act_f(0, u)).is_zero()


def test_longest_minor_is_a_dual_canonical_element():
    w0 = A2.element_from_word((0, 1, 0))
    b = CrystalLabel.star_of(A2, (0, 1, 0), (1, 0, 1))
    assert quantum_minor(w0, A2.identity(), (1, 0)) == b.element()
    assert b.element() != dual_canonical_element((1, 0, 1), (0, 1, 0), A2)


def test_vector_from_dual_canonical_label():
    b = CrystalLabel(A2, (0, 1, 0), (1, 0, 0))
    lam, u = vector_from_dcb(b)
    assert lam == (1, 0)
    assert u == extremal_vector(A2.element_from_word((0,)), (1, 0))
    lam, u = vector_from_dcb(CrystalLabel.highest(A2))
    assert lam == (0, 0) and u == module(A2, (0, 0)).highest()


def test_kumar_peterson_for_s1s2():
    r = kumar_peterson_check(A2.element_from_word((0, 1)), [(1, 0), (0, 1), (1, 1), (2, 2)], 4)
    assert r["equal"]


vectors = st.tuples(st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 1)]),
                    st.sampled_from(degrees_up_to(A2, 3)), st.integers(0, 1))


@given(vectors)
def test_contravariance(args):
    lam, xi, i = args
    mod = module(A2, lam)
    eta = tuple(c + (k == i) for k, c in enumerate(xi))
    for v1 in module_basis_vectors(mod, xi):
        for v2 in module_basis_vectors(mod, eta):
            assert contravariant_form(act_f(i, v1), v2) == contravariant_form(v1, act_e(i, v2))


@given(st.sampled_from([A2, B2]), st.sampled_from([(), (0,), (1,), (0, 1), (1, 0)]),
       st.sampled_from([(1, 0), (0, 1), (1, 1)]))
def test_extremal_vectors_have_norm_one(rd, word, lam):
    u = extremal_vector(rd.element_from_word(word), lam)
    assert contravariant_form(u, u).is_one()


@given(st.sampled_from([(0, 1, 0), (0,), (0, 1)]), st.sampled_from([(1, 0), (0, 1), (1, 1)]),
       st.sampled_from(degrees_up_to(A2, 3)))
def test_minor_defining_identity(word, lam, xi):
    u = extremal_vector(A2.element_from_word(word), lam)
    alg = algebra(A2)
    for v in module_basis_vectors(u.module, xi):
        d = matrix_coefficient(u, v)
        delta = tuple(a - b for a, b in zip(u.degree, v.degree))
        if any(c < 0 for c in delta):
            continue
        for m in words_of_degree(delta):
            assert lusztig_pair(d, alg.monomial(m)) == contravariant_form(u, act_word(m, v))


@given(st.sampled_from([(0,), (0, 1), (0, 1, 0)]), st.sampled_from([(1, 0), (1, 1)]),
       st.sampled_from(degrees_up_to(A2, 3)))
def test_demazure_dimension_counts_ordered_monomials(word, lam, xi):
    from itertools import product
    from qtwist.linalg import rank
    mod = module(A2, lam)
    rows = []
    for a in product(range(4), repeat=len(word)):
        if tuple(sum(k for i, k in zip(word, a) if i == j) for j in range(2)) != xi:
            continue
        v = mod.highest()
        for i, k in reversed(list(zip(word, a))):
            if k:
                v = act_f(i, v, k)
        if not v.is_zero():
            rows.append(v.coords())
    expected = rank(rows) if rows else 0
    assert demazure_dimension(A2.element_from_word(word), lam, xi) == expected
