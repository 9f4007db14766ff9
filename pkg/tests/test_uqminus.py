"""The negative half U_q^-: products, q-derivations, the Lusztig pairing and involutions."""

from hypothesis import given, strategies as st

from qtwist.canonical import degrees_up_to
from qtwist.invariants import random_homogeneous
from qtwist.rootdata import cartan_type
from qtwist.scalars import ONE, parse_scalar, qpow
from qtwist.uqminus import (algebra, involution, lusztig_pair, parse_element, q_derivation, star,
                            weight_basis_coords)

A2 = cartan_type("A2")
B2 = cartan_type("B2")


def el(rd, text):
    return parse_element(rd, text)


def test_products_are_word_concatenation():
    alg = algebra(A2)
    assert (alg.gen(0) * alg.gen(1)).terms == {(0, 1): ONE}
    x = el(A2, "f1*f2 - q*f2*f1")
    assert alg.one() * x == x
    assert el(A2, "(f1+f2)*f1") == el(A2, "f1*f1 + f2*f1")


def test_left_derivation_values():
    assert q_derivation(0, el(A2, "f1")) == algebra(A2).one()
    assert q_derivation(0, el(A2, "f1*f2*f1")) == el(A2, "f2*f1 + q^-1*f1*f2")
    assert q_derivation(0, algebra(A2).one()).is_zero()


def test_pairing_values():
    alg = algebra(A2)
    assert lusztig_pair(alg.one(), alg.one()) == ONE
    assert lusztig_pair(el(A2, "f1"), el(A2, "f1")) == parse_scalar("1/(1-q^2)")
    assert lusztig_pair(el(B2, "f1"), el(B2, "f1")) == parse_scalar("1/(1-q^4)")
    assert lusztig_pair(el(A2, "f1*f2"), el(A2, "f2*f1")) == parse_scalar("q/(1-q^2)^2")


def test_involution_values():
    assert star(el(A2, "f1*f2")) == el(A2, "f2*f1")
    assert involution(el(A2, "q*f1"), "bar") == el(A2, "q^-1*f1")
    assert involution(el(A2, "f1"), "sigma") == el(A2, "-q^2*f1")
    assert involution(el(B2, "f1"), "sigma") == el(B2, "-q^4*f1")
    g = el(A2, "(1-q^2)*f1")
    assert involution(g, "sigma") == g


def test_weight_space_dimension_and_serre_relation():
    alg = algebra(A2)
    assert alg.space((1, 1)).dim == 2
    serre = el(A2, "f1*f1*f2 - (q+q^-1)*f1*f2*f1 + f2*f1*f1")
    assert all(c.is_zero() for c in weight_basis_coords((2, 1), serre))
    assert weight_basis_coords((1, 0), el(A2, "f1")) == [ONE]


def test_gram_rank_matches_kostant_partitions():
    for rd in (A2, B2, cartan_type("G2")):
        for xi in degrees_up_to(rd, 4):
            assert algebra(rd).space(xi).dim == rd.kostant_partition(xi)


homogeneous_pair = st.tuples(st.sampled_from([A2, B2]),
                             st.sampled_from([(1, 0), (1, 1), (2, 1), (1, 2)]),
                             st.integers(0, 10**6))


def _pair_for(rd, xi, seed):
    import random
    rng = random.Random(seed)
    return random_homogeneous(rd, xi, rng), random_homogeneous(rd, xi, rng)


@given(homogeneous_pair)
def test_pairing_symmetric_and_star_invariant(args):
    rd, xi, seed = args
    x, y = _pair_for(rd, xi, seed)
    assert lusztig_pair(x, y) == lusztig_pair(y, x)
    assert lusztig_pair(star(x), star(y)) == lusztig_pair(x, y)


@given(homogeneous_pair, st.integers(0, 1))
def test_right_derivation_is_adjoint_to_right_multiplication(args, i):
    rd, xi, seed = args
    x, _ = _pair_for(rd, xi, seed)
    eta = tuple(c + (k == i) for k, c in enumerate(xi))
    _, y = _pair_for(rd, eta, seed + 1)
    lhs = lusztig_pair(x * algebra(rd).gen(i), y)
    rhs = lusztig_pair(x, q_derivation(i, y, "right")) / (ONE - qpow(2 * rd.d(i)))
    assert lhs == rhs


@given(homogeneous_pair)
def test_sigma_involutive_and_sigma_prime_antimultiplicative(args):
    rd, xi, seed = args
    x, y = _pair_for(rd, xi, seed)
    assert involution(involution(x, "sigma"), "sigma") == x
    lhs = involution(x * y, "sigma_prime")
    assert lhs == involution(y, "sigma_prime") * involution(x, "sigma_prime")
