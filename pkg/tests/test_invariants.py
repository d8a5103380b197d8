import pytest
from hypothesis import given, settings, strategies as st

from gaussforge import EMPTY, LaurentPolynomial, bridge_count, f_polynomial, kauffman_bracket, odd_writhe, parse
from gaussforge.errors import SizeLimitExceeded
from gaussforge.invariants import state_histogram
from gaussforge.laurent import A, LOOP, ONE
from gaussforge.oracles import naive_bracket
from gaussforge.surface import genus

from strategies import diagrams

TREFOIL_F = LaurentPolynomial({-4: 1, -12: 1, -16: -1})


def test_odd_writhe_examples(T3, VT):
    assert odd_writhe(T3) == 0
    assert odd_writhe(VT) == 2
    assert odd_writhe(parse("O1-O2-U1-U2-")) == -2


def test_bracket_examples(K1, T3):
    assert kauffman_bracket(EMPTY) == ONE
    assert kauffman_bracket(K1) == LaurentPolynomial({3: -1})
    assert kauffman_bracket(K1).coefficients == naive_bracket(K1)
    assert kauffman_bracket(T3).coefficients == naive_bracket(T3)


def test_f_polynomial_examples(K1, T3, VT):
    assert f_polynomial(EMPTY) == ONE
    assert f_polynomial(K1) == ONE
    assert f_polynomial(parse("O1-U1-")) == ONE
    # Oracle first, then the frozen value.
    naive = LaurentPolynomial(naive_bracket(T3)) * LaurentPolynomial({-9: -1})
    assert naive == TREFOIL_F
    assert f_polynomial(T3) == TREFOIL_F
    assert f_polynomial(VT) != ONE


def test_mirror_trefoil():
    mirror = parse("O1-U2-O3-U1-O2-U3-")
    assert f_polynomial(mirror) == LaurentPolynomial({4: 1, 12: 1, 16: -1})


def test_size_limit():
    D = parse("".join(f"O{k}+U{k}+" for k in range(1, 4)))
    with pytest.raises(SizeLimitExceeded):
        kauffman_bracket(D, limit=2)
    assert sum(state_histogram(D).values()) == 8


@settings(max_examples=60, deadline=None)
@given(diagrams(max_chords=7))
def test_bracket_agrees_with_naive(D):
    assert kauffman_bracket(D).coefficients == naive_bracket(D)


@settings(max_examples=100)
@given(diagrams(max_chords=8))
def test_genus_zero_odd_writhe_vanishes(D):
    if genus(D) == 0:
        assert odd_writhe(D) == 0


def test_bridge_examples(T3, VT):
    assert bridge_count(T3) == 3
    assert bridge_count(VT) == 1
    assert bridge_count(EMPTY) == 0


@given(diagrams(max_chords=8), st.data())
def test_bridges_monotone_under_deletion(D, data):
    from gaussforge import delete_chords
    labels = D.labels
    dead = data.draw(st.lists(st.sampled_from(labels), unique=True)) if labels else []
    assert bridge_count(delete_chords(D, dead)) <= bridge_count(D)


# LaurentPolynomial arithmetic

def test_laurent_basics():
    p = LaurentPolynomial({2: 3, 0: 0, -1: -1})
    assert p.coefficients == {2: 3, -1: -1}
    assert (p - p).is_zero()
    assert A ** -2 == LaurentPolynomial({-2: 1})
    assert LOOP * LOOP == LaurentPolynomial({4: 1, 0: 2, -4: 1})
    assert ONE == 1
    assert str(LaurentPolynomial({-4: 1, -12: 1, -16: -1})) == "A^-4 + A^-12 - A^-16"
    assert LaurentPolynomial.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        LOOP ** -1


coeffs = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=4).map(LaurentPolynomial)


@given(coeffs, coeffs, coeffs)
def test_laurent_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p ** 3 == p * p * p


def test_figure_eight_is_amphichiral():
    D = parse("U1+O2-U3-O1+U4+O3-U2-O4+")
    assert f_polynomial(D) == LaurentPolynomial({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})
