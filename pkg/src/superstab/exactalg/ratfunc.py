"""Quotients of polynomials, compared by cross-multiplication."""

from __future__ import annotations

from numbers import Rational

from .polynomial import NotDivisible, Polynomial, div_coeff
from .ring import Ring


class DenominatorVanishes(ZeroDivisionError):
    """A denominator became the zero polynomial (typically after substitution)."""


class RationalFunction:
    """``num / den`` with ``den`` nonzero.

    No gcd reduction is attempted.  Constant denominators are folded into the
    numerator, and arithmetic takes the obvious shortcut when denominators are
    equal, which keeps most expressions in this package small.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        ring = num.ring
        if den is None:
            den = Polynomial.constant(ring, 1)
        elif den.ring is not ring:
            raise ValueError("numerator and denominator live in different rings")
        if den.is_zero():
            raise DenominatorVanishes("zero denominator")
        if den.is_constant():
            c = den.constant_value()
            if c != 1:
                num = num / c
                den = Polynomial.constant(ring, 1)
        elif num.is_zero():
            den = Polynomial.constant(ring, 1)
        self.num = num
        self.den = den

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @classmethod
    def constant(cls, ring: Ring, c) -> RationalFunction:
        return cls(Polynomial.constant(ring, c))

    @classmethod
    def lift(cls, x, ring: Ring | None = None) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Polynomial):
            return cls(x)
        if ring is None:
            raise TypeError(f"cannot lift {x!r} without a ring")
        return cls.constant(ring, x)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.ring is not self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(self.num._coerce(other))
        if isinstance(other, (int, Rational)):
            return RationalFunction.constant(self.ring, other)
        return NotImplemented

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_polynomial(self) -> Polynomial:
        """The quotient as a polynomial; raises NotDivisible if it is not one."""
        if self.den.is_constant():
            return self.num
        return self.num.exact_div(self.den)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (equality is by cross-multiplication)")

    # -- arithmetic ----------------------------------------------------------

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        if other.den.is_constant():
            return RationalFunction(self.num + other.num * self.den, self.den)
        if self.den.is_constant():
            return RationalFunction(self.num * other.den + other.num, other.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalFunction(Polynomial(self.ring))
        # cancel a numerator against an identical denominator when it is cheap
        if self.num == other.den:
            return RationalFunction(other.num, self.den)
        if other.num == self.den:
            return RationalFunction(self.num, other.den)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, (Polynomial, RationalFunction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return RationalFunction(self.num / other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def reduce_by(self, factor: Polynomial) -> RationalFunction:
        """Cancel ``factor`` from numerator and denominator as often as it divides both."""
        num, den = self.num, self.den
        while not den.is_constant():
            try:
                n2 = num.exact_div(factor)
                d2 = den.exact_div(factor)
            except NotDivisible:
                break
            num, den = n2, d2
        return RationalFunction(num, den)

    # -- substitution and evaluation -------------------------------------------

    def substitute(self, bindings, target: Ring | None = None) -> RationalFunction:
        den = self.den.substitute(bindings, target)
        if den.is_zero():
            raise DenominatorVanishes("the denominator vanishes identically after substitution")
        return RationalFunction(self.num.substitute(bindings, target), den)

    def rename(self, mapping, target: Ring | None = None) -> RationalFunction:
        return RationalFunction(self.num.rename(mapping, target), self.den.rename(mapping, target))

    def to_ring(self, target: Ring) -> RationalFunction:
        return RationalFunction(self.num.to_ring(target), self.den.to_ring(target))

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return div_coeff(self.num.evaluate(point), d)

    # -- output ----------------------------------------------------------------

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        num = str(self.num)
        if len(self.num) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_latex(self) -> str:
        from .serialize import rf_latex

        return rf_latex(self)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RationalFunction:
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))
