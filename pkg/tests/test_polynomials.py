from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from simplesc.polynomials import IntPoly, RatFunc, cyclotomic, multiplicity

coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=5)
polys = coeffs.map(lambda c: IntPoly(c, "q"))
nonzero = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.tuples(polys, nonzero).map(lambda t: RatFunc(t[0], t[1]))
nz_ratfuncs = st.tuples(nonzero, nonzero).map(lambda t: RatFunc(t[0], t[1]))


@settings(max_examples=200, deadline=None)
@given(nz_ratfuncs)
def test_inverse_round_trip(r):
    assert r * r.inverse() == 1
    assert r / r == 1


@settings(max_examples=200, deadline=None)
@given(ratfuncs)
def test_reduction_idempotent(r):
    again = RatFunc(r.num, r.den)
    assert (again.num.coeffs, again.den.coeffs) == (r.num.coeffs, r.den.coeffs)
    assert r.den.leading > 0


@settings(max_examples=200, deadline=None)
@given(ratfuncs, ratfuncs, st.integers(-6, 6))
def test_field_operations_match_evaluation(a, b, x):
    assume(a.den(x) != 0 and b.den(x) != 0)
    s = a + b
    assume(s.den(x) != 0)
    assert s(x) == a(x) + b(x)
    p = a * b
    assume(p.den(x) != 0)
    assert p(x) == a(x) * b(x)
    assert (a - b) + b == a


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_poly_ring(p, q):
    assert (p * q)(3) == p(3) * q(3)
    assert (p + q) - q == p
    if not q.is_zero():
        assert (p * q).exact_div(q) == p


def test_cyclotomic():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    x12 = IntPoly.monomial(12) - 1
    prod = IntPoly([1])
    for d in (1, 2, 3, 4, 6, 12):
        prod = prod * cyclotomic(d)
    assert prod == x12
    assert multiplicity(cyclotomic(2), (IntPoly([1, 1]) ** 3) * cyclotomic(3)) == 3


def test_display_and_json():
    q = IntPoly.x("q")
    r = RatFunc(q * q - 1, q - 1)
    assert str(r) == "q + 1"
    assert RatFunc(q, q + 1).to_json() == {"num": [0, 1], "den": [1, 1], "str": "q/(q + 1)"}


def test_compose_and_reverse():
    p = IntPoly([1, -1])
    assert p.compose_power(3).coeffs == (1, 0, 0, -1)
    assert p.compose_power(0).coeffs == ()
    assert p.reversed_poly().coeffs == (-1, 1)


def test_rational_coefficients_normalized():
    r = RatFunc([Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 6)])
    assert r.num.coeffs == (3, 2) and r.den.coeffs == (1,)
    with pytest.raises(ZeroDivisionError):
        RatFunc(0, 1).inverse()
