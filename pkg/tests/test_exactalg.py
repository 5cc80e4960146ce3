from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superstab.exactalg import (
    LinearFactorProduct,
    LinearForm,
    NotDivisible,
    Polynomial,
    RationalFunction,
    RFMatrix,
    Ring,
    SingularMatrix,
    divides_linear,
    linear_multiplicity,
    parse_polynomial,
    parse_rational,
    rf_inverse,
    rf_solve,
    sum_is_zero,
)

R3 = Ring(("x", "y", "h"))

terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2)),
    st.integers(-5, 5),
    max_size=6,
)


def make(d):
    return Polynomial(R3, {R3.pack(e): c for e, c in d.items()})


@given(terms, terms, terms)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    p, q, r = make(a), make(b), make(c)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial(R3)


@given(terms, terms)
@settings(max_examples=60, deadline=None)
def test_exact_division_round_trip(a, b):
    p, q = make(a), make(b)
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


def test_exact_division_rejects_non_multiples():
    x, y = Polynomial.var(R3, "x"), Polynomial.var(R3, "y")
    with pytest.raises(NotDivisible):
        (x * x + y).exact_div(x)


def test_ring_interning_and_packing():
    assert Ring(("x", "y", "h")) is R3
    m = R3.pack((2, 0, 1))
    assert R3.unpack(m) == (2, 0, 1)
    assert R3.divides(R3.pack((1, 0, 1)), m)
    assert not R3.divides(R3.pack((0, 1, 0)), m)
    assert R3.degree(m) == 3


def test_display_order():
    ring = Ring.grassmann(1, 2)
    assert str(parse_polynomial("z2 - t1", ring)) == "z2 - t1"
    assert str(parse_polynomial("h + t1 - z1", ring)) == "t1 - z1 + h"
    assert str(Polynomial.constant(ring, 0)) == "0"


def test_parse_and_json_round_trip():
    ring = Ring.equivariant(3)
    p = parse_polynomial("(z1 - z2 + h)^2*(z3 - z1) - 7", ring)
    assert Polynomial.from_json(p.to_json()) == p
    assert parse_polynomial(str(p), ring) == p
    f = parse_rational("(z1 - z2)/(z2 - z1 + h)", ring)
    assert RationalFunction.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        parse_polynomial("z9 + 1", ring)


def test_fractional_coefficients():
    p = parse_polynomial("x/2 + y/3", R3)
    assert p.evaluate({"x": 2, "y": 3, "h": 0}) == 2
    assert (p * 6) == parse_polynomial("3*x + 2*y", R3)
    assert p.scale(Fraction(1, 2)).evaluate({"x": 4, "y": 0, "h": 0}) == 1


def test_substitute_into_other_ring():
    src = Ring.grassmann(1, 2)
    dst = Ring.equivariant(2)
    p = parse_polynomial("(z2 - t1)*(t1 - z1 + h)", src)
    got = p.substitute({"t1": Polynomial.var(dst, "z2")}, dst)
    assert got.is_zero()
    got = p.substitute({"t1": Polynomial.var(dst, "z1")}, dst)
    assert got == parse_polynomial("(z2 - z1)*h", dst)


def test_rational_function_arithmetic():
    ring = Ring.equivariant(2)
    a = parse_rational("1/(z1 - z2)", ring)
    b = parse_rational("1/(z2 - z1)", ring)
    assert (a + b).is_zero()
    c = parse_rational("(z1 - z2)*(z1 + h)/((z1 - z2)*h)", ring)
    assert c == parse_rational("(z1 + h)/h", ring)
    assert c * c.inverse() == RationalFunction.constant(ring, 1)
    assert (c - c).is_zero()


def test_linear_forms_and_products():
    ring = Ring.equivariant(2)
    scale, form = LinearForm.make(ring, [-2, 2, 0])
    assert scale == -2 and form.coefficient("z1") == 1
    f = parse_polynomial("(z1 - z2 + h)^2*(z1 - z2)", ring)
    _, g = LinearForm.make(ring, [1, -1, 1])
    assert divides_linear(f, g)
    assert linear_multiplicity(f, g) == 2
    _, z = LinearForm.make(ring, [1, -1, 0])
    assert linear_multiplicity(f, z, limit=5) == 1
    P = LinearFactorProduct.build(ring, 1, [(g, 1)])
    Q = LinearFactorProduct.build(ring, -1, [(g, 1)])
    assert sum_is_zero([P, Q])
    assert not sum_is_zero([P, P])


def test_rf_solve_and_inverse():
    ring = Ring.equivariant(2)
    M = RFMatrix(ring, [[rat_("z1", ring), rat_("h", ring)], [rat_("h", ring), rat_("z2 - z1", ring)]])
    inv = rf_inverse(M)
    assert M @ inv == RFMatrix.identity(ring, 2)
    B = RFMatrix(ring, [[1], [0]])
    X = rf_solve(M, B)
    assert M @ X == B
    with pytest.raises(SingularMatrix):
        rf_inverse(RFMatrix(ring, [[rat_("z1", ring), rat_("z1", ring)], [rat_("h", ring), rat_("h", ring)]]))


def rat_(text, ring):
    return parse_rational(text, ring)
