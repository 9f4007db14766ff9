"""The dual canonical basis, crystal statistics and Demazure membership."""

from hypothesis import given, strategies as st

from qtwist.canonical import (CrystalLabel, check_dual_canonical, crystal_epsilon, dcb_expand,
                              degrees_up_to, demazure_membership, dual_canonical_basis,
                              dual_canonical_element)
from qtwist.rootdata import cartan_type, enumerate_reduced_words
from qtwist.scalars import ONE, parse_scalar
from qtwist.uqminus import algebra, involution, parse_element, star

A2 = cartan_type("A2")
B2 = cartan_type("B2")


def test_element_values():
    assert dual_canonical_element((0, 0, 0), (0, 1, 0), A2) == algebra(A2).one()
    assert dual_canonical_element((1, 0, 0), (0, 1, 0), A2) == parse_element(A2, "(1-q^2)*f1")
    assert dual_canonical_element((1, 0, 0, 0), (0, 1, 0, 1), B2) == parse_element(B2, "(1-q^4)*f1")
    g = dual_canonical_element((0, 1, 0), (0, 1, 0), A2)
    assert g == parse_element(A2, "(1-q^2)*(f2*f1 - q*f1*f2)")


def test_expansion_values():
    b = CrystalLabel(A2, (0, 1, 0), (0, 1, 0))
    assert dcb_expand(b.element()) == {b: ONE}
    assert dcb_expand(parse_element(A2, "f2")) == {
        CrystalLabel(A2, (0, 1, 0), (0, 0, 1)): parse_scalar("1/(1-q^2)")}
    assert dcb_expand(algebra(A2).zero()) == {}


def test_epsilon_values():
    hw = CrystalLabel.highest(A2)
    assert crystal_epsilon(0, hw) == 0
    b = CrystalLabel(A2, (0, 1, 0), (1, 0, 0))
    assert crystal_epsilon(0, b) == 1
    assert crystal_epsilon(1, b, "right") == 0


def test_demazure_membership_values():
    s1 = A2.element_from_word((0,))
    e = A2.identity()
    f2_label = CrystalLabel(A2, (0, 1, 0), (0, 0, 1))
    assert not demazure_membership(f2_label, s1)
    assert demazure_membership(CrystalLabel.highest(A2), e)
    assert not demazure_membership(f2_label, e)
    assert demazure_membership(f2_label, A2.longest_element())


def test_reduced_word_independence_up_to_height_four():
    for xi in degrees_up_to(A2, 4):
        a = [g for _, g in dual_canonical_basis(A2, xi, (0, 1, 0))]
        b = [g for _, g in dual_canonical_basis(A2, xi, (1, 0, 1))]
        assert len(a) == len(b)
        assert all(any(x == y for y in b) for x in a)


def test_relabel_through_other_word():
    b = CrystalLabel(A2, (0, 1, 0), (1, 1, 0))
    other = b.relabel((1, 0, 1))
    assert other.element() == b.element()


@given(st.sampled_from([(A2, 4), (B2, 3)]), st.data())
def test_characterization_in_every_word(case, data):
    rd, h = case
    word = data.draw(st.sampled_from(enumerate_reduced_words(rd.longest_element())))
    xi = data.draw(st.sampled_from(degrees_up_to(rd, h)))
    assert all(check_dual_canonical(rd, xi, word).values())


@given(st.sampled_from([(A2, 4), (B2, 3)]), st.data())
def test_star_and_sigma_on_basis(case, data):
    rd, h = case
    xi = data.draw(st.sampled_from(degrees_up_to(rd, h)))
    basis = dual_canonical_basis(rd, xi)
    lab, g = data.draw(st.sampled_from(basis))
    assert involution(g, "sigma") == g
    assert any(star(g) == other for _, other in basis)


@given(st.sampled_from([(0,), (0, 1), (1, 0), (0, 1, 0)]), st.data())
def test_demazure_membership_word_independent(word, data):
    w = A2.element_from_word(word)
    xi = data.draw(st.sampled_from(degrees_up_to(A2, 4)))
    for lab, _ in dual_canonical_basis(A2, xi):
        assert len({demazure_membership(lab, w, u) for u in enumerate_reduced_words(w)}) == 1
