import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphlinks.errors import ZeroPolynomial
from graphlinks.laurent import LOOP, LaurentPoly, span

polys = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_zero_terms_dropped():
    assert LaurentPoly({1: 0, 2: 3}).terms == {2: 3}
    assert LaurentPoly().is_zero()
    assert LaurentPoly({0: 2}) == 2


def test_loop_value():
    assert LOOP == LaurentPoly({2: -1, -2: -1})
    assert LOOP * LOOP == LaurentPoly({4: 1, 0: 2, -4: 1})


def test_str_format():
    assert str(LaurentPoly.monomial(-3, -1)) == "-1*a^-3"
    assert str(LaurentPoly({-2: -1, 0: 4, 2: -1})) == "-1*a^-2 + 4 + -1*a^2"
    assert str(LaurentPoly()) == "0"


def test_negative_powers_of_monomials():
    assert LaurentPoly.monomial(3, -1) ** -1 == LaurentPoly.monomial(-3, -1)
    with pytest.raises(ValueError):
        LOOP ** -1


def test_span_and_degrees():
    p = LaurentPoly({-5: 1, 7: 2})
    assert (p.min_degree(), p.max_degree(), span(p)) == (-5, 7, 12)
    with pytest.raises(ZeroPolynomial):
        span(LaurentPoly())


@given(polys, polys, polys)
@settings(max_examples=200, deadline=None)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys)
@settings(max_examples=200, deadline=None)
def test_parse_inverts_str(p):
    assert LaurentPoly.parse(str(p)) == p
