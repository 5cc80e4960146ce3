import pytest

from superstab.exactalg import Ring, parse_polynomial, parse_rational


@pytest.fixture
def eq2():
    return Ring.equivariant(2)


def poly(text, ring):
    return parse_polynomial(text, ring)


def rat(text, ring):
    return parse_rational(text, ring)
