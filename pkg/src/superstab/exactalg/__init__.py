"""Exact arithmetic: polynomials, products of linear forms, rational functions, matrices."""

from .linear import LinearFactorProduct, LinearForm, linear_images, sum_is_zero
from .matrix import RFMatrix, SingularMatrix, rf_inverse, rf_solve
from .polynomial import NotDivisible, Polynomial, gens
from .ratfunc import DenominatorVanishes, RationalFunction
from .ring import Ring
from .serialize import parse_expression, parse_polynomial, parse_rational


def divides_linear(f: Polynomial, form: LinearForm) -> bool:
    """True iff the linear form divides ``f``.

    Solves ``form = 0`` for its leading variable and tests whether the
    substituted polynomial vanishes.
    """
    if f.is_zero():
        return True
    ring = f.ring
    i = form.lead_index()
    lead = ring.names[i]
    # form = x_i + rest, so x_i = -rest
    image = Polynomial(ring, {ring.unit(j): -c for j, c in enumerate(form.coeffs) if c and j != i})
    if form.constant:
        image = image - form.constant
    return f.substitute({lead: image}).is_zero()


def linear_multiplicity(f: Polynomial, form: LinearForm, limit: int | None = None) -> int:
    """Largest m with form^m dividing f (``limit`` caps the search; 0 polynomial gives ``limit``)."""
    if f.is_zero():
        if limit is None:
            raise ValueError("the zero polynomial is divisible by every power")
        return limit
    p = form.to_polynomial()
    m = 0
    while limit is None or m < limit:
        if not divides_linear(f, form):
            break
        f = f.exact_div(p)
        m += 1
    return m


__all__ = [
    "DenominatorVanishes",
    "LinearFactorProduct",
    "LinearForm",
    "NotDivisible",
    "Polynomial",
    "RFMatrix",
    "RationalFunction",
    "Ring",
    "SingularMatrix",
    "divides_linear",
    "gens",
    "linear_images",
    "linear_multiplicity",
    "parse_expression",
    "parse_polynomial",
    "parse_rational",
    "rf_inverse",
    "rf_solve",
    "sum_is_zero",
]
