"""Affine-linear forms and products of their integer powers."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .polynomial import Polynomial, div_coeff, format_coeff, normalize_coeff
from .ratfunc import DenominatorVanishes, RationalFunction
from .ring import Ring


class LinearForm:
    """A nonconstant affine form, normalized so its leading coefficient is 1.

    The leading coefficient is the first nonzero coefficient in ring order.
    Use :meth:`make` to normalize arbitrary coefficient data; it returns the
    scale factor that was divided out.
    """

    __slots__ = ("ring", "coeffs", "constant", "_hash")

    def __init__(self, ring: Ring, coeffs: tuple, constant=0):
        self.ring = ring
        self.coeffs = coeffs
        self.constant = constant
        self._hash = hash((coeffs, constant))

    @staticmethod
    def make(ring: Ring, coeffs, constant=0):
        """Return ``(scale, form)`` with ``scale * form == sum(coeffs*x) + constant``.

        ``form`` is None when the input is constant; then ``scale`` is that
        constant (possibly 0).
        """
        coeffs = tuple(coeffs)
        lead = next((c for c in coeffs if c), 0)
        if not lead:
            return normalize_coeff(constant), None
        if lead != 1:
            coeffs = tuple(div_coeff(c, lead) for c in coeffs)
            constant = div_coeff(constant, lead)
        return lead, LinearForm(ring, coeffs, normalize_coeff(constant))

    @staticmethod
    def from_polynomial(p: Polynomial):
        ring = p.ring
        coeffs = [0] * ring.nvars
        constant = 0
        for exps, c in p.items():
            d = sum(exps)
            if d == 0:
                constant = c
            elif d == 1:
                coeffs[exps.index(1)] = c
            else:
                raise ValueError(f"{p} is not affine-linear")
        return LinearForm.make(ring, coeffs, constant)

    @staticmethod
    def parse(ring: Ring, text: str) -> LinearForm:
        from .serialize import parse_polynomial

        scale, form = LinearForm.from_polynomial(parse_polynomial(text, ring))
        if form is None or scale != 1:
            raise ValueError(f"{text!r} is not a normalized linear form")
        return form

    def __eq__(self, other):
        return (
            isinstance(other, LinearForm)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
            and self.constant == other.constant
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.coeffs, self.constant)

    def to_polynomial(self) -> Polynomial:
        ring = self.ring
        terms = {ring.unit(i): c for i, c in enumerate(self.coeffs) if c}
        if self.constant:
            terms[0] = self.constant
        return Polynomial(ring, terms, _clean_terms=False)

    def coefficient(self, name: str):
        return self.coeffs[self.ring.index[name]]

    def lead_index(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c)

    def is_homogeneous(self) -> bool:
        return not self.constant

    def evaluate(self, point):
        v = self.constant
        for name, c in zip(self.ring.names, self.coeffs):
            if c:
                v += c * point[name]
        return v

    def image(self, images, target: Ring):
        """Raw coefficients of the form after a linear substitution.

        ``images[i]`` is ``(coeff_tuple, constant)`` in ``target`` for the
        i-th source variable.
        """
        out = [0] * target.nvars
        const = self.constant
        for c, (img, ic) in zip(self.coeffs, images):
            if c:
                for j, v in enumerate(img):
                    if v:
                        out[j] += c * v
                if ic:
                    const += c * ic
        return out, const

    def substitute(self, images, target: Ring):
        return LinearForm.make(target, *self.image(images, target))

    def __str__(self):
        return str(self.to_polynomial())

    def __repr__(self):
        return f"LinearForm({self})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "coeffs": [format_coeff(c) for c in self.coeffs],
            "constant": format_coeff(self.constant),
        }

    @classmethod
    def from_json(cls, data: dict) -> LinearForm:
        ring = Ring(data["vars"])
        coeffs = [normalize_coeff(Fraction(c)) for c in data["coeffs"]]
        scale, form = cls.make(ring, coeffs, normalize_coeff(Fraction(data["constant"])))
        if form is None or scale != 1:
            raise ValueError("serialized linear form is not normalized")
        return form


def linear_images(source: Ring, target: Ring, mapping: dict[str, str | Polynomial]) -> list:
    """Images of the source variables for :meth:`LinearForm.image`.

    ``mapping`` sends a variable name to another variable name or to an
    affine-linear polynomial of ``target``; unmapped variables keep their name.
    """
    images = []
    for name in source.names:
        val = mapping.get(name, name)
        coeffs = [0] * target.nvars
        const = 0
        if isinstance(val, str):
            if val not in target.index:
                images.append(None)
                continue
            coeffs[target.index[val]] = 1
        elif isinstance(val, Polynomial):
            for exps, c in val.items():
                d = sum(exps)
                if d == 0:
                    const = c
                elif d == 1:
                    coeffs[exps.index(1)] = c
                else:
                    raise ValueError(f"image of {name} is not affine-linear")
        else:
            const = val
        images.append((tuple(coeffs), const))
    return images


class LinearFactorProduct:
    """``scalar * prod(form ** exp)`` with nonzero integer exponents.

    Equal forms are merged on construction, so a factor that appears in both
    numerator and denominator cancels.  A zero scalar means the product is 0
    (and then there are no factors).
    """

    __slots__ = ("ring", "scalar", "factors")

    def __init__(self, ring: Ring, scalar=1, factors=()):
        self.ring = ring
        scalar = normalize_coeff(scalar)
        if not scalar:
            self.scalar = 0
            self.factors = ()
            return
        self.scalar = scalar
        self.factors = tuple(factors)

    @classmethod
    def build(cls, ring: Ring, scalar=1, items=()) -> LinearFactorProduct:
        """Merge ``items``: pairs ``(form, exp)`` or triples ``(coeffs, constant, exp)``."""
        merged: dict[LinearForm, int] = {}
        for item in items:
            if len(item) == 2:
                form, exp = item
                scale = 1
            else:
                coeffs, const, exp = item
                scale, form = LinearForm.make(ring, coeffs, const)
            if not exp:
                continue
            if form is None:
                if scale == 0:
                    if exp < 0:
                        raise DenominatorVanishes("a denominator factor is identically zero")
                    return cls(ring, 0)
                scalar = scalar * Fraction(scale) ** exp
                continue
            if scale != 1:
                scalar = scalar * Fraction(scale) ** exp
            merged[form] = merged.get(form, 0) + exp
        factors = sorted(((f, e) for f, e in merged.items() if e), key=lambda fe: fe[0].sort_key())
        return cls(ring, scalar, factors)

    @classmethod
    def constant(cls, ring: Ring, c) -> LinearFactorProduct:
        return cls(ring, c)

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.scalar

    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self.factors)

    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def exponent(self, form: LinearForm) -> int:
        for f, e in self.factors:
            if f == form:
                return e
        return 0

    def numerator_factors(self):
        return [(f, e) for f, e in self.factors if e > 0]

    def denominator_factors(self):
        return [(f, -e) for f, e in self.factors if e < 0]

    def __eq__(self, other):
        return (
            isinstance(other, LinearFactorProduct)
            and self.ring is other.ring
            and self.scalar == other.scalar
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash((self.scalar, self.factors))

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return LinearFactorProduct(self.ring, self.scalar * other, self.factors)
        if not isinstance(other, LinearFactorProduct):
            return NotImplemented
        if not self.scalar or not other.scalar:
            return LinearFactorProduct(self.ring, 0)
        return LinearFactorProduct.build(self.ring, self.scalar * other.scalar, self.factors + other.factors)

    __rmul__ = __mul__

    def inverse(self) -> LinearFactorProduct:
        if not self.scalar:
            raise ZeroDivisionError("inverse of a zero product")
        return LinearFactorProduct(self.ring, Fraction(1) / self.scalar, [(f, -e) for f, e in self.factors])

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (Fraction(1) / other)
        return self * other.inverse()

    def __neg__(self):
        return LinearFactorProduct(self.ring, -self.scalar, self.factors)

    def substitute(self, images, target: Ring) -> LinearFactorProduct:
        """Apply a linear substitution factor by factor, merging equal forms."""
        if not self.scalar:
            return LinearFactorProduct(target, 0)
        items = []
        for form, exp in self.factors:
            coeffs, const = form.image(images, target)
            items.append((coeffs, const, exp))
        return LinearFactorProduct.build(target, self.scalar, items)

    def rename(self, mapping: dict[str, str], target: Ring | None = None) -> LinearFactorProduct:
        target = target or self.ring
        return self.substitute(linear_images(self.ring, target, mapping), target)

    def evaluate(self, point):
        v = Fraction(self.scalar)
        for form, exp in self.factors:
            x = form.evaluate(point)
            if exp < 0 and x == 0:
                raise ZeroDivisionError("denominator vanishes at the evaluation point")
            v *= Fraction(x) ** exp
        return normalize_coeff(v)

    def numerator(self) -> Polynomial:
        p = Polynomial.constant(self.ring, self.scalar)
        for form, exp in self.factors:
            for _ in range(exp):
                p = p.mul_linear(form.coeffs, form.constant)
        return p

    def denominator(self) -> Polynomial:
        p = Polynomial.constant(self.ring, 1)
        for form, exp in self.factors:
            for _ in range(-exp):
                p = p.mul_linear(form.coeffs, form.constant)
        return p

    def expand(self):
        """Polynomial if every exponent is positive, else a RationalFunction."""
        num = self.numerator()
        if self.is_polynomial():
            return num
        return RationalFunction(num, self.denominator())

    def to_rational_function(self) -> RationalFunction:
        return RationalFunction(self.numerator(), self.denominator())

    def __str__(self):
        if not self.scalar:
            return "0"
        num = [f"({f})" + (f"^{e}" if e > 1 else "") for f, e in self.factors if e > 0]
        den = [f"({f})" + (f"^{-e}" if e < -1 else "") for f, e in self.factors if e < 0]
        s = self.scalar
        if num:
            head = "*".join(num)
            if s == -1:
                head = "-" + head
            elif s != 1:
                head = f"{format_coeff(s)}*{head}"
        else:
            head = format_coeff(s)
        if den:
            return f"{head}/({'*'.join(den)})" if len(den) > 1 else f"{head}/{den[0]}"
        return head

    def __repr__(self):
        return f"LinearFactorProduct({self})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "scalar": format_coeff(self.scalar),
            "factors": [
                {"coeffs": [format_coeff(c) for c in f.coeffs], "constant": format_coeff(f.constant), "exp": e}
                for f, e in self.factors
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> LinearFactorProduct:
        ring = Ring(data["vars"])
        items = [
            (
                [normalize_coeff(Fraction(c)) for c in f["coeffs"]],
                normalize_coeff(Fraction(f["constant"])),
                f["exp"],
            )
            for f in data["factors"]
        ]
        return cls.build(ring, normalize_coeff(Fraction(data["scalar"])), items)


def common_content(products) -> dict[LinearForm, int]:
    """Per-form minimum exponent over nonzero products (absent forms count as 0)."""
    products = [p for p in products if p.scalar]
    if not products:
        return {}
    content = dict(products[0].factors)
    for p in products[1:]:
        exps = dict(p.factors)
        for form in set(content) | set(exps):
            content[form] = min(content.get(form, 0), exps.get(form, 0))
    return {f: e for f, e in content.items() if e}


def sum_is_zero(products) -> bool:
    """Exact test that a sum of linear-factor products vanishes.

    The common content (minimum exponent of every form) is divided out, after
    which every summand is a polynomial; these are expanded and added.
    """
    products = [p for p in products if p.scalar]
    if not products:
        return True
    ring = products[0].ring
    content = common_content(products)
    total = Polynomial(ring)
    for p in products:
        exps = dict(p.factors)
        rest = LinearFactorProduct.build(
            ring, p.scalar, [(f, exps.get(f, 0) - content.get(f, 0)) for f in set(exps) | set(content)]
        )
        if not rest.is_polynomial():
            raise AssertionError("content extraction left a denominator")
        total = total + rest.numerator()
    return total.is_zero()
