"""Compatible pairs, quantum tori, seed mutation and the cell realization."""

import random

import pytest
from hypothesis import given, strategies as st

from qtwist.cells import CellElement, frozen, minor, twist_auto
from qtwist.qcluster import (ClusterError, CompatibilityError, CompatiblePair, TorusElement,
                             check_compatible, compatibility_degrees, derive_lambda,
                             frozen_lambda_closed_form, initial_seed, laurent_containment,
                             mutate_compatible_pair, mutate_path, mutate_seed, principal_pair,
                             q_commutation_exponent, qgls_check, rescale, random_compatible_pair,
                             seed_from_pair, seed_quasi_commutation, torus_left_divide, torus_mul,
                             verify_exchange_in_algebra, vpow)
from qtwist.rootdata import cartan_type
from qtwist.scalars import ONE, qpow
from qtwist.uqminus import parse_element

A2 = cartan_type("A2")
W0 = A2.longest_element()
SMALL = CompatiblePair([[0, -1], [1, 0]], [[0], [1]])


def test_torus_product_rule():
    assert torus_mul((1, 0), (-1, 0), SMALL.lam) == (ONE, (0, 0))
    assert torus_mul((1, 0), (0, 1), SMALL.lam) == (vpow(-1), (1, 1))
    x1 = TorusElement.monomial(SMALL.lam, (1, 0))
    x2 = TorusElement.monomial(SMALL.lam, (0, 1))
    assert x1 * x2 == (x2 * x1).scale(qpow(-1))


def test_torus_division():
    x1 = TorusElement.monomial(SMALL.lam, (1, 0))
    z = x1 * (x1 + TorusElement.monomial(SMALL.lam, (0, 1)))
    assert x1 * torus_left_divide(z, x1) == z


def test_pair_mutation_values():
    m = mutate_compatible_pair(SMALL, 0)
    assert m.lam == ((0, 1), (-1, 0))
    assert m.btilde == ((0,), (-1,))
    assert compatibility_degrees(SMALL) == (1,)


def test_untouched_rows_of_exchange_matrix():
    pair = principal_pair([[0, 1], [-1, 0]])
    m = mutate_compatible_pair(pair, 0)
    # b_{ik} = 0 rows stay put outside column k
    assert m.btilde[3][1] == pair.btilde[3][1]


def test_incompatible_pair_reports_entry():
    with pytest.raises(CompatibilityError):
        compatibility_degrees(CompatiblePair([[0, 1], [-1, 0]], [[0], [1]]))
    with pytest.raises(ClusterError):
        CompatiblePair([[0, 1], [1, 0]], [[0], [1]])


def test_two_variable_exchange():
    seed = seed_from_pair(SMALL)
    new = mutate_seed(seed, 0)
    lam = SMALL.lam
    expected = TorusElement.monomial(lam, (-1, 1)) + TorusElement.monomial(lam, (-1, 0))
    assert new.variables[0] == expected
    assert new.variables[1] == seed.variables[1]
    back = mutate_seed(new, 0)
    assert back.pair == seed.pair
    assert all(a == b for a, b in zip(back.variables, seed.variables))


def test_initial_seed_of_a2():
    seed = initial_seed(W0, (0, 1, 0))
    assert seed.size == 3 and seed.exchangeable == 1 and len(seed.frozen) == 2
    f1 = CellElement.from_element(W0, parse_element(A2, "(1-q^2)*f1"))
    d2 = CellElement.from_element(W0, minor(A2.element_from_word((0, 1)), (0, 1)))
    d1 = frozen(W0, (1, 0))
    for x, target in zip(seed.realizations, [f1, d2, d1]):
        assert rescale(x) == target
    assert check_compatible(seed.pair)
    assert all(d > 0 for d in compatibility_degrees(seed.pair))
    assert seed_quasi_commutation(seed)


def test_lambda_from_q_commutation():
    seed = initial_seed(W0, (0, 1, 0))
    lam = derive_lambda(seed.realizations)
    n = len(lam)
    assert all(lam[s][s] == 0 for s in range(n))
    assert all(lam[s][t] == -lam[t][s] for s in range(n) for t in range(n))
    closed = frozen_lambda_closed_form(W0, (0, 1), (1, 0))
    a, b = frozen(W0, (0, 1)), frozen(W0, (1, 0))
    assert q_commutation_exponent(a, b) == closed


def test_exchange_inside_the_cell():
    seed = initial_seed(W0, (0, 1, 0))
    r = verify_exchange_in_algebra(seed, 0)
    for key in ("dual_bar_invariant", "dual_canonical", "exchange_relation", "torus_exchange",
                "involution", "compatible"):
        assert r[key], key


def test_twist_on_seed_monomials():
    seed = initial_seed(W0, (0, 1, 0))
    for s in seed.frozen:
        a = tuple(int(t == s) for t in range(seed.size))
        r = qgls_check(seed, a)
        assert r["passes"] and r["omega_is_one"]
    r = qgls_check(seed, (1, 0, 0))
    assert r["passes"] and r["frozen_lambda"] == [1, 0]
    empty = qgls_check(seed, (0, 0, 0))
    assert empty["omega"] == CellElement.one(W0)
    assert twist_auto(CellElement.one(W0)) == CellElement.one(W0)


def test_cell_seeds_need_simply_laced_type():
    b2 = cartan_type("B2")
    with pytest.raises(ClusterError):
        initial_seed(b2.longest_element())


def test_json_round_trip():
    assert CompatiblePair.from_json(SMALL.to_json()) == SMALL


pairs = st.integers(0, 10**6).map(lambda s: random_compatible_pair(random.Random(s)))


@given(pairs, st.data())
def test_mutation_is_an_involution_preserving_compatibility(pair, data):
    k = data.draw(st.integers(0, pair.exchangeable - 1))
    m = mutate_compatible_pair(pair, k)
    assert check_compatible(m)
    assert compatibility_degrees(m) == compatibility_degrees(pair)
    assert mutate_compatible_pair(m, k) == pair


@given(st.integers(0, 10**6).map(lambda s: random_compatible_pair(random.Random(s), max_rank=2)),
       st.data())
def test_seed_mutation_involution_and_frozen_variables(pair, data):
    seed = seed_from_pair(pair)
    k = data.draw(st.integers(0, pair.exchangeable - 1))
    new = mutate_seed(seed, k)
    assert all(new.variables[s] == seed.variables[s] for s in seed.frozen)
    back = mutate_seed(new, k)
    assert all(a == b for a, b in zip(back.variables, seed.variables))


@given(st.sampled_from(["A2", "A3"]), st.lists(st.integers(0, 2), max_size=4))
def test_laurent_containment_along_paths(name, path):
    rd = cartan_type(name)
    seed = seed_from_pair(initial_seed(rd.longest_element()).pair)
    path = [k % seed.exchangeable for k in path]
    assert laurent_containment(mutate_path(seed, path))
