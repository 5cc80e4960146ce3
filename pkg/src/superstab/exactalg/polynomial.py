"""Sparse multivariate polynomials over the rationals.

Coefficients are Python ints when integral and ``fractions.Fraction``
otherwise; there is no floating point anywhere.  Terms live in a dict keyed
by packed monomials (see :mod:`superstab.exactalg.ring`).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational

from .ring import Ring


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Polynomial.exact_div` when the division leaves a remainder."""


def normalize_coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def div_coeff(a, b):
    if b == 1:
        return a
    if b == -1:
        return -a
    return normalize_coeff(Fraction(a) / b)


def format_coeff(c) -> str:
    c = normalize_coeff(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _clean(terms: dict) -> dict:
    out = {}
    for m, c in terms.items():
        if c:
            out[m] = normalize_coeff(c)
    return out


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: dict | None = None, *, _clean_terms: bool = True):
        self.ring = ring
        if terms is None:
            terms = {}
        elif _clean_terms:
            terms = _clean(terms)
        self.terms = terms
        self._hash = None

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> Polynomial:
        return cls(ring)

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, {0: c})

    @classmethod
    def var(cls, ring: Ring, name: str) -> Polynomial:
        return cls(ring, {ring.unit(ring.index[name]): 1}, _clean_terms=False)

    @classmethod
    def from_exponents(cls, ring: Ring, items) -> Polynomial:
        """Build from ``{exponent_tuple: coeff}`` or an iterable of pairs."""
        if isinstance(items, dict):
            items = items.items()
        terms: dict[int, object] = {}
        for exps, c in items:
            if len(exps) != ring.nvars:
                raise ValueError(f"exponent vector {exps} does not fit {ring}")
            m = ring.pack(exps)
            terms[m] = terms.get(m, 0) + c
        return cls(ring, terms)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, 0)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """(exponent tuple, coefficient) pairs in display order."""
        unpack = self.ring.unpack
        return [(unpack(m), c) for m, c in self._sorted_terms()]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        unpack = self.ring.unpack
        return max(sum(unpack(m)) for m in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        unpack = self.ring.unpack
        return max((unpack(m)[i] for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        unpack = self.ring.unpack
        degs = {sum(unpack(m)) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs.pop() == degree

    def variables(self) -> set[str]:
        used = 0
        for m in self.terms:
            used |= m
        unpack = self.ring.unpack
        exps = unpack(used)
        return {name for name, e in zip(self.ring.names, exps) if e}

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            if other == 0:
                return not self.terms
            return self.terms == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _clean_terms=False)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        res = dict(big)
        for m, c in small.items():
            v = res.get(m, 0) + c
            if v:
                res[m] = normalize_coeff(v)
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res, _clean_terms=False)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        res = dict(self.terms)
        for m, c in other.terms.items():
            v = res.get(m, 0) - c
            if v:
                res[m] = normalize_coeff(v)
            else:
                res.pop(m, None)
        return Polynomial(self.ring, res, _clean_terms=False)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> Polynomial:
        if not c:
            return Polynomial(self.ring)
        if c == 1:
            return self
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def shift(self, monomial: int, c=1) -> Polynomial:
        """Multiply by ``c`` times a packed monomial."""
        return Polynomial(self.ring, {m + monomial: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial(self.ring)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            return Polynomial(self.ring, {m + mb: c * cb for m, c in a.items()})
        res: dict[int, object] = {}
        get = res.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                res[m] = get(m, 0) + ca * cb
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            if other == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return Polynomial(self.ring, {m: div_coeff(c, other) for m, c in self.terms.items()})
        return NotImplemented

    def mul_linear(self, coeffs, constant=0) -> Polynomial:
        """Multiply by the affine form sum(coeffs[i] * x_i) + constant."""
        ring = self.ring
        units = [(ring.unit(i), c) for i, c in enumerate(coeffs) if c]
        if constant:
            units.append((0, constant))
        res: dict[int, object] = {}
        get = res.get
        for mu, cu in units:
            for m, c in self.terms.items():
                k = m + mu
                res[k] = get(k, 0) + c * cu
        return Polynomial(ring, res)

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        """Quotient of an exact division; raises :class:`NotDivisible` otherwise.

        Leading-term division in lexicographic order, with a heap over the
        remainder's monomials.
        """
        divisor = self._coerce(divisor)
        if not divisor.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        lead_m = max(divisor.terms)
        lead_c = divisor.terms[lead_m]
        tail = [(m, c) for m, c in divisor.terms.items() if m != lead_m]
        rem = dict(self.terms)
        heap = [-m for m in rem]
        heapq.heapify(heap)
        quot: dict[int, object] = {}
        divides = ring.divides
        while heap:
            m = -heapq.heappop(heap)
            c = rem.pop(m, 0)
            if not c:
                continue
            if not divides(lead_m, m):
                raise NotDivisible("remainder is nonzero")
            d = m - lead_m
            q = div_coeff(c, lead_c)
            quot[d] = q
            for mt, ct in tail:
                key = mt + d
                old = rem.get(key)
                if old is None:
                    rem[key] = -q * ct
                    heapq.heappush(heap, -key)
                else:
                    v = old - q * ct
                    if v:
                        rem[key] = v
                    else:
                        del rem[key]
        return Polynomial(ring, quot)

    # -- substitution and evaluation -----------------------------------------

    def evaluate(self, point) -> object:
        """Exact value at ``point`` (a mapping from every variable name to a rational)."""
        values = [point[name] for name in self.ring.names]
        unpack = self.ring.unpack
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(values, unpack(m)):
                if e:
                    v *= x**e
            total += v
        return normalize_coeff(total)

    def substitute(self, bindings, target: Ring | None = None) -> Polynomial:
        """Replace variables by polynomials of ``target`` (default: own ring).

        Unbound variables are carried over by name and must exist in the
        target ring (unless they do not occur).
        """
        ring = self.ring
        target = target or ring
        bound = []
        images = []
        carry = []
        for i, name in enumerate(ring.names):
            if name in bindings:
                val = bindings[name]
                if not isinstance(val, Polynomial):
                    val = Polynomial.constant(target, val)
                elif val.ring is not target:
                    raise ValueError(f"binding for {name} is not in {target}")
                bound.append(i)
                images.append(val)
            else:
                carry.append((i, target.index.get(name)))
        unpack = ring.unpack
        groups: dict[tuple, dict[int, object]] = {}
        for m, c in self.terms.items():
            exps = unpack(m)
            tm = 0
            for i, j in carry:
                e = exps[i]
                if e:
                    if j is None:
                        raise ValueError(f"variable {ring.names[i]} has no image in {target}")
                    tm += e * target.unit(j)
            key = tuple(exps[i] for i in bound)
            g = groups.setdefault(key, {})
            g[tm] = g.get(tm, 0) + c
        powers: list[dict[int, Polynomial]] = [{} for _ in bound]

        def power(slot, e):
            cache = powers[slot]
            if e not in cache:
                cache[e] = images[slot] ** e
            return cache[e]

        total: dict[int, object] = {}
        for key, part in groups.items():
            poly = Polynomial(target, part)
            for slot, e in enumerate(key):
                if e:
                    poly = poly * power(slot, e)
            for m, c in poly.terms.items():
                total[m] = total.get(m, 0) + c
        return Polynomial(target, total)

    def rename(self, mapping: dict[str, str], target: Ring | None = None) -> Polynomial:
        """Variable renaming (a monomial relabelling, no expansion needed)."""
        ring = self.ring
        target = target or ring
        units = []
        for name in ring.names:
            new = mapping.get(name, name)
            units.append(target.unit(target.index[new]) if new in target.index else None)
        unpack = ring.unpack
        res: dict[int, object] = {}
        for m, c in self.terms.items():
            tm = 0
            for e, u in zip(unpack(m), units):
                if e:
                    if u is None:
                        raise ValueError("renaming drops a variable that occurs")
                    tm += e * u
            res[tm] = res.get(tm, 0) + c
        return Polynomial(target, res)

    def to_ring(self, target: Ring) -> Polynomial:
        """Re-express in another ring containing every occurring variable."""
        if target is self.ring:
            return self
        return self.rename({}, target)

    # -- output ------------------------------------------------------------

    def _sort_key(self, m):
        exps = self.ring.unpack(m)
        names = self.ring.names
        if names and names[-1] == "h":
            return (sum(exps), -exps[-1], exps[-2::-1])
        return (sum(exps), exps[::-1])

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: self._sort_key(mc[0]), reverse=True)

    def _display_terms(self):
        """Graded order in general; affine-linear polynomials read positive
        variables first, then negative ones, then h, then the constant.
        A positive h leads when no other variable is positive."""
        ordered = self._sorted_terms()
        if self.degree() > 1:
            return ordered
        h_unit = self.ring.unit(self.ring.index["h"]) if "h" in self.ring.index else None
        plain = sorted(((m, c) for m, c in self.terms.items() if m and m != h_unit), key=lambda mc: -mc[0])
        pos = [mc for mc in plain if mc[1] > 0]
        neg = [mc for mc in plain if mc[1] < 0]
        tail = [(m, c) for m, c in self.terms.items() if m == h_unit]
        if 0 in self.terms:
            tail.append((0, self.terms[0]))
        if not pos and tail and tail[0][0] == h_unit and tail[0][1] > 0:
            return tail[:1] + neg + tail[1:]
        return pos + neg + tail

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        names = self.ring.names
        unpack = self.ring.unpack
        for m, c in self._display_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, unpack(m)) if e
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_coeff(mag)}*{mono}"
            else:
                body = format_coeff(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"

    def to_latex(self) -> str:
        from .serialize import poly_latex

        return poly_latex(self)

    def to_json(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [{"coeff": format_coeff(c), "exps": list(exps)} for exps, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> Polynomial:
        ring = Ring(data["vars"])
        return cls.from_exponents(ring, [(tuple(t["exps"]), Fraction(t["coeff"])) for t in data["terms"]])


def gens(ring: Ring) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(ring, name) for name in ring.names)
