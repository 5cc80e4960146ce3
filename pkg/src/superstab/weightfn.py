"""Super weight functions W^(r)_{sigma,I} and their fixed-point restrictions.

A weight function is kept as the list of its k! symmetrization terms, each a
LinearFactorProduct; nothing is expanded unless asked for.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .combinat import Permutation, Subset, apply_transposition, compose
from .exactalg import (
    DenominatorVanishes,
    LinearFactorProduct,
    Polynomial,
    RationalFunction,
    Ring,
    linear_images,
    sum_is_zero,
)
from .fixedpoints import Weight, check_version

EXPANSION_MAX_K = 4


class NonCancellingDenominator(ArithmeticError):
    """A restricted term kept a denominator factor.  Never valid input: a bug."""


class GuardViolation(ValueError):
    def __init__(self, guard: str, message: str):
        super().__init__(f"[{guard}] {message}")
        self.guard = guard


def _form(ring: Ring, spec: dict, const=0):
    coeffs = [0] * ring.nvars
    for name, c in spec.items():
        coeffs[ring.index[name]] += c
    return coeffs, const


def build_U(r: str, n: int, k: int, I: Subset) -> LinearFactorProduct:
    """The unsymmetrized term U^(r)_I in variables t1..tk, z1..zn, h."""
    r = check_version(r)
    if I.k != k or I.n != n:
        raise ValueError("subset does not match (n, k)")
    ring = Ring.grassmann(k, n)
    items = []

    def add(spec, const, exp):
        items.append((*_form(ring, spec), exp))

    super_first = r in ("01", "11")
    for a, i_a in enumerate(I.elements, 1):
        t = f"t{a}"
        for b in range(1, i_a):
            if super_first:
                add({f"z{b}": 1, t: -1, "h": 1}, 0, 1)
            else:
                add({t: 1, f"z{b}": -1, "h": 1}, 0, 1)
        for b in range(i_a + 1, n + 1):
            add({f"z{b}": 1, t: -1}, 0, 1)
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            add({f"t{b}": 1, f"t{a}": -1}, 0, -1)
            if r == "00":
                add({f"t{b}": 1, f"t{a}": -1, "h": 1}, 0, -1)
            elif r == "11":
                add({f"t{b}": 1, f"t{a}": -1, "h": 1}, 0, 1)
    if super_first:
        add({"h": 1}, 0, k)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                add({f"z{b}": 1, f"z{a}": -1, "h": 1}, 0, 1)
        for a in range(1, k + 1):
            for b in range(1, n + 1):
                add({f"z{b}": 1, f"t{a}": -1, "h": 1}, 0, -1)
    return LinearFactorProduct.build(ring, 1, items)


@dataclass(frozen=True)
class WeightFunctionSpec:
    r: str
    n: int
    k: int
    sigma: Permutation
    I: Subset

    def __str__(self):
        return f"W^({self.r})_{{{self.sigma},{self.I}}} (n={self.n})"


@dataclass(frozen=True)
class SymmetrizedRF:
    """Sum over tau in S_k of the tau-permuted U-terms."""

    spec: WeightFunctionSpec
    taus: tuple[tuple[int, ...], ...]
    terms: tuple[LinearFactorProduct, ...]

    @property
    def ring(self) -> Ring:
        return self.terms[0].ring

    def evaluate(self, point):
        return sum((term.evaluate(point) for term in self.terms), Fraction(0))

    def expand(self) -> RationalFunction:
        """The whole sum as one RationalFunction (over the product of distinct term denominators)."""
        ring = self.ring
        den_exp: dict = {}
        for term in self.terms:
            for f, e in term.denominator_factors():
                den_exp[f] = max(den_exp.get(f, 0), e)
        common = LinearFactorProduct(ring, 1, sorted(den_exp.items(), key=lambda fe: fe[0].sort_key()))
        num = Polynomial(ring)
        for term in self.terms:
            num = num + (term * common).numerator()
        return RationalFunction(num, common.numerator())

    def permute_t(self, tau) -> SymmetrizedRF:
        """Apply t_a -> t_{tau(a)} to every term (tau given 1-based)."""
        ring = self.ring
        mapping = {f"t{a}": f"t{tau[a - 1]}" for a in range(1, self.spec.k + 1)}
        return SymmetrizedRF(self.spec, self.taus, tuple(t.rename(mapping, ring) for t in self.terms))

    def __str__(self):
        return format_weight(self, "text")


def symmetrize(U: LinearFactorProduct, k: int, spec: WeightFunctionSpec | None = None) -> SymmetrizedRF:
    ring = U.ring
    taus = tuple(tuple(p) for p in permutations(range(1, k + 1)))
    terms = []
    for tau in taus:
        mapping = {f"t{a}": f"t{tau[a - 1]}" for a in range(1, k + 1)}
        terms.append(U.rename(mapping, ring) if k > 1 else U)
    return SymmetrizedRF(spec, taus, tuple(terms))


def twist(W: SymmetrizedRF, sigma: Permutation, spec: WeightFunctionSpec | None = None) -> SymmetrizedRF:
    """Substitute z_b -> z_{sigma(b)} in every term."""
    if sigma.is_identity():
        return SymmetrizedRF(spec or W.spec, W.taus, W.terms)
    ring = W.ring
    mapping = {f"z{b}": f"z{sigma(b)}" for b in range(1, sigma.n + 1)}
    images = linear_images(ring, ring, mapping)
    return SymmetrizedRF(spec or W.spec, W.taus, tuple(t.substitute(images, ring) for t in W.terms))


@lru_cache(maxsize=None)
def _weight_function(r: str, sigma: tuple, I: tuple) -> SymmetrizedRF:
    sig = Permutation(sigma)
    n = sig.n
    subset = Subset(n, I)
    k = subset.k
    spec = WeightFunctionSpec(r, n, k, sig, subset)
    pre = sig.inverse().apply_to(subset)
    U = build_U(r, n, k, pre)
    return twist(symmetrize(U, k), sig, spec)


def weight_function(r: str, n: int, sigma: Permutation, I: Subset) -> SymmetrizedRF:
    """W^(r)_{sigma,I} = W^(r)_{sigma^-1(I)}(t, z_sigma(1), ..., z_sigma(n))."""
    r = check_version(r)
    if sigma.n != n or I.n != n:
        raise ValueError("sigma and I must live on 1..n")
    return _weight_function(r, sigma.images, I.elements)


def _restriction_images(W: SymmetrizedRF, J: Subset):
    spec = W.spec
    if J.k != spec.k or J.n != spec.n:
        raise ValueError(f"restriction point {J} does not match k={spec.k}, n={spec.n}")
    target = Ring.equivariant(spec.n)
    mapping = {f"t{s}": f"z{j}" for s, j in enumerate(J.elements, 1)}
    return target, linear_images(W.ring, target, mapping)


def restrict_terms(W: SymmetrizedRF, J: Subset) -> list[LinearFactorProduct | None]:
    """Per-term restrictions t_s = z_{j_s}; None marks a term that vanished.

    A surviving term may still carry denominators z_{j_b} - z_{j_a} coming
    from t_b - t_a; those only cancel in the sum.  Any other leftover
    denominator factor is a bug and raises NonCancellingDenominator.
    """
    target, images = _restriction_images(W, J)
    h = target.index["h"]
    out = []
    for term in W.terms:
        try:
            sub = term.substitute(images, target)
        except DenominatorVanishes:
            raise NonCancellingDenominator(f"a denominator of {W.spec} vanishes at t = z_{J}") from None
        if sub.is_zero():
            out.append(None)
            continue
        for f, e in sub.factors:
            if e < 0 and f.coeffs[h]:
                raise NonCancellingDenominator(f"term {sub} of {W.spec} at {J} keeps the denominator {f}")
        out.append(sub)
    return out


def combine_terms(terms, target: Ring) -> Polynomial:
    """Sum restricted terms over their common denominator and divide exactly."""
    live = [t for t in terms if t is not None]
    common: dict = {}
    for t in live:
        for f, e in t.denominator_factors():
            common[f] = max(common.get(f, 0), e)
    total = Polynomial(target)
    den = LinearFactorProduct(target, 1, sorted(common.items(), key=lambda fe: fe[0].sort_key()))
    for t in live:
        total = total + (t * den).numerator() if common else total + t.numerator()
    for f, e in common.items():
        p = f.to_polynomial()
        for _ in range(e):
            total = total.exact_div(p)
    return total


@lru_cache(maxsize=200000)
def _restrict_cached(r, sigma, I, J) -> Polynomial:
    W = _weight_function(r, sigma, I)
    n = len(sigma)
    return combine_terms(restrict_terms(W, Subset(n, J)), Ring.equivariant(n))


def restrict(W: SymmetrizedRF, J: Subset) -> Polynomial:
    spec = W.spec
    if spec is not None and W is _weight_function(spec.r, spec.sigma.images, spec.I.elements):
        if J.k != spec.k or J.n != spec.n:
            raise ValueError(f"restriction point {J} does not match k={spec.k}, n={spec.n}")
        return _restrict_cached(spec.r, spec.sigma.images, spec.I.elements, J.elements)
    return combine_terms(restrict_terms(W, J), Ring.equivariant(spec.n))


def restriction(r: str, n: int, sigma: Permutation, I: Subset, J: Subset) -> Polynomial:
    return restrict(weight_function(r, n, sigma, I), J)


# -- the independent expansion path -------------------------------------------


def raw_U_factors(r: str, n: int, I: Subset):
    """U^(r)_I straight from the definition: (scalar, numerator factors, denominator factors).

    Factors are Polynomials in t, z, h; nothing is merged or cancelled.
    """
    k = I.k
    ring = Ring.grassmann(k, n)
    v = {name: Polynomial.var(ring, name) for name in ring.names}
    h = v["h"]
    num, den = [], []
    for a, i_a in enumerate(I.elements, 1):
        t = v[f"t{a}"]
        for b in range(1, i_a):
            num.append(v[f"z{b}"] - t + h if r in ("01", "11") else t - v[f"z{b}"] + h)
        for b in range(i_a + 1, n + 1):
            num.append(v[f"z{b}"] - t)
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            diff = v[f"t{b}"] - v[f"t{a}"]
            den.append(diff)
            if r == "00":
                den.append(diff + h)
            elif r == "11":
                num.append(diff + h)
    if r in ("01", "11"):
        num.extend([h] * k)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                num.append(v[f"z{b}"] - v[f"z{a}"] + h)
        for a in range(1, k + 1):
            for b in range(1, n + 1):
                den.append(v[f"z{b}"] - v[f"t{a}"] + h)
    return 1, num, den


def _sign_normal(p: Polynomial):
    """(sign, p') with p' having a positive leading coefficient in ring order."""
    lead = p.terms[max(p.terms)]
    return (1, p) if lead > 0 else (-1, -p)


def restrict_via_expansion(r: str, n: int, sigma: Permutation, I: Subset, J: Subset) -> Polynomial:
    """Restriction computed without the LinearForm machinery.

    Every factor of every symmetrization term is substituted, the terms are
    brought over one common denominator, the numerator is expanded and summed,
    and the result is divided exactly by the denominator.
    """
    r = check_version(r)
    k = I.k
    if k > EXPANSION_MAX_K:
        raise GuardViolation("expansion-k", f"restrict_via_expansion supports k <= {EXPANSION_MAX_K}, got k={k}")
    if J.k != k:
        raise ValueError("restriction point has the wrong size")
    ring = Ring.grassmann(k, n)
    target = Ring.equivariant(n)
    pre = sigma.inverse().apply_to(I)
    scalar, num, den = raw_U_factors(r, n, pre)
    zmap = {f"z{b}": Polynomial.var(ring, f"z{sigma(b)}") for b in range(1, n + 1)}
    num = [f.substitute(zmap) for f in num]
    den = [f.substitute(zmap) for f in den]
    if k == 0:
        value = RationalFunction(Polynomial.constant(ring, scalar))
        for f in num:
            value = value * f
        for f in den:
            value = value / f
        return value.as_polynomial().to_ring(target)
    terms = []
    for tau in permutations(range(1, k + 1)):
        bind = {f"t{a}": Polynomial.var(target, f"z{J.elements[tau[a - 1] - 1]}") for a in range(1, k + 1)}
        bind.update({f"z{b}": Polynomial.var(target, f"z{b}") for b in range(1, n + 1)})
        bind["h"] = Polynomial.var(target, "h")
        tn = [f.substitute(bind, target) for f in num]
        td = [f.substitute(bind, target) for f in den]
        terms.append((tn, td))
    # common denominator: each distinct (sign-normalized) factor at its maximal multiplicity
    common: dict[Polynomial, int] = {}
    for _, td in terms:
        counts: dict[Polynomial, int] = {}
        for f in td:
            if f.is_zero():
                raise DenominatorVanishes("a denominator factor vanishes after substitution")
            _, g = _sign_normal(f)
            counts[g] = counts.get(g, 0) + 1
        for g, c in counts.items():
            common[g] = max(common.get(g, 0), c)
    total = Polynomial(target)
    for tn, td in terms:
        if any(f.is_zero() for f in tn):
            continue
        sign = scalar
        cof = dict(common)
        for f in td:
            s, g = _sign_normal(f)
            sign *= s
            cof[g] -= 1
        prod = Polynomial.constant(target, sign)
        for f in tn:
            prod = prod * f
        for g, e in cof.items():
            for _ in range(e):
                prod = prod * g
        total = total + prod
    for g, e in common.items():
        for _ in range(e):
            total = total.exact_div(g)
    return total


# -- spade / club products ------------------------------------------------------


def spade_weights(r: str, n: int, sigma: Permutation, I: Subset) -> list[Weight]:
    """Factors z_sigma(a) - z_sigma(b) + h over b < a subject to the version's condition."""
    r = check_version(r)
    out = []
    for a in range(1, n + 1):
        for b in range(1, a):
            sa, sb = sigma(a), sigma(b)
            ina, inb = sa in I, sb in I
            if r == "00":
                ok = ina and not inb
            elif r == "10":
                ok = ina
            elif r == "01":
                ok = not inb
            else:
                ok = ina or (not ina and not inb)
            if ok:
                out.append(Weight(sa, sb, 1))
    return out


def club_weights(n: int, sigma: Permutation, I: Subset) -> list[Weight]:
    """Factors z_sigma(b) - z_sigma(a) over a < b with sigma(a) in I, sigma(b) not in I."""
    return [
        Weight(sigma(b), sigma(a), 0)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if sigma(a) in I and sigma(b) not in I
    ]


# -- the R-matrix recursion --------------------------------------------------------


@dataclass
class RecursionCheck:
    r: str
    n: int
    sigma: Permutation
    a: int
    I: Subset
    case: str
    holds: bool
    method: str

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "sigma": self.sigma.to_json(),
            "a": self.a,
            "I": self.I.to_json(),
            "case": self.case,
            "holds": self.holds,
            "method": self.method,
        }


def _coefficient(ring: Ring, num: dict, num_const, u: int, v: int) -> LinearFactorProduct:
    """num / (z_v - z_u + h) as a LinearFactorProduct."""
    items = [(*_form(ring, {f"z{v}": 1, f"z{u}": -1, "h": 1}), -1)]
    if num:
        items.append((*_form(ring, num), 1))
        return LinearFactorProduct.build(ring, 1, items)
    return LinearFactorProduct.build(ring, num_const, items)


def recursion_sides(r: str, n: int, sigma: Permutation, a: int, I: Subset):
    """(case, lhs, [(coefficient, W), ...]) for the recursion at (sigma, a, I)."""
    r = check_version(r)
    if not 1 <= a < n:
        raise ValueError(f"need 1 <= a <= n-1, got a={a}")
    u, v = sigma(a), sigma(a + 1)
    ring = Ring.grassmann(I.k, n)
    s = Permutation.transposition(n, a, a + 1)
    lhs = weight_function(r, n, compose(sigma, s), I)
    W = weight_function(r, n, sigma, I)
    ratio = LinearFactorProduct.build(
        ring,
        1,
        [
            (*_form(ring, {f"z{u}": 1, f"z{v}": -1, "h": 1}), 1),
            (*_form(ring, {f"z{v}": 1, f"z{u}": -1, "h": 1}), -1),
        ],
    )
    one = LinearFactorProduct(ring, 1)
    if (u in I) != (v in I):
        c1 = _coefficient(ring, {f"z{u}": 1, f"z{v}": -1}, 0, u, v)
        c2 = _coefficient(ring, {"h": 1}, 0, u, v)
        other = weight_function(r, n, sigma, apply_transposition(I, u, v))
        return "mixed", lhs, [(c1, W), (c2, other)]
    if u in I:
        return "both-in", lhs, [(ratio if r in ("10", "11") else one, W)]
    return "both-out", lhs, [(ratio if r in ("01", "11") else one, W)]


def _random_point(ring: Ring, rng: random.Random):
    return {name: Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 997)) for name in ring.names}


def recursion_precheck(lhs, rhs, ring: Ring, rng: random.Random, points: int = 20) -> bool:
    done = 0
    attempts = 0
    while done < points:
        attempts += 1
        if attempts > 20 * points:
            raise RuntimeError("could not find evaluation points avoiding the poles")
        pt = _random_point(ring, rng)
        try:
            left = lhs.evaluate(pt)
            right = sum((c.evaluate(pt) * W.evaluate(pt) for c, W in rhs), Fraction(0))
        except ZeroDivisionError:
            continue
        if left != right:
            return False
        done += 1
    return True


def recursion_difference_terms(lhs: SymmetrizedRF, rhs, index: int) -> list[LinearFactorProduct]:
    """The index-th symmetrization term of lhs - sum(c * W)."""
    terms = [lhs.terms[index]]
    for c, W in rhs:
        terms.append(-(c * W.terms[index]))
    return terms


def recursion_exact(lhs: SymmetrizedRF, rhs) -> tuple[bool, str]:
    """Exact zero test of lhs - sum(c * W), organized by symmetrization term.

    Writing the difference as Sym_k(F), it suffices that F vanishes, or that
    F + (t_c <-> t_d)F vanishes for some transposition; otherwise all k!
    terms are combined.
    """
    taus = lhs.taus
    k = len(taus[0]) if taus and taus[0] else 0
    F0 = recursion_difference_terms(lhs, rhs, 0)
    if sum_is_zero(F0):
        return True, "termwise"
    index = {tau: i for i, tau in enumerate(taus)}
    for c in range(1, k + 1):
        for d in range(c + 1, k + 1):
            tau = list(range(1, k + 1))
            tau[c - 1], tau[d - 1] = d, c
            j = index[tuple(tau)]
            if sum_is_zero(F0 + recursion_difference_terms(lhs, rhs, j)):
                return True, f"paired(t{c},t{d})"
    everything = []
    for i in range(len(taus)):
        everything.extend(recursion_difference_terms(lhs, rhs, i))
    return sum_is_zero(everything), "full"


def check_recursion(r: str, n: int, sigma: Permutation, a: int, I: Subset, seed: int = 0, exact: bool = True) -> RecursionCheck:
    case, lhs, rhs = recursion_sides(r, n, sigma, a, I)
    rng = random.Random(f"{seed}:{r}:{sigma}:{a}:{I.key()}")
    ring = Ring.grassmann(I.k, n)
    if not recursion_precheck(lhs, rhs, ring, rng):
        return RecursionCheck(r, n, sigma, a, I, case, False, "random-points")
    if not exact:
        return RecursionCheck(r, n, sigma, a, I, case, True, "random-points")
    ok, method = recursion_exact(lhs, rhs)
    return RecursionCheck(r, n, sigma, a, I, case, ok, method)


# -- rendering ----------------------------------------------------------------------


def _oriented(form):
    """(sign, polynomial) with the factor read the way the tables print it:
    +h when h occurs, otherwise the last variable with a positive coefficient."""
    p = form.to_polynomial()
    ring = form.ring
    if "h" in ring.index and form.coefficient("h"):
        sign = 1 if form.coefficient("h") > 0 else -1
    else:
        last = max(i for i, c in enumerate(form.coeffs) if c)
        sign = 1 if form.coeffs[last] > 0 else -1
    return sign, (p if sign == 1 else -p)


def factored_str(term: LinearFactorProduct, fmt: str = "text") -> str:
    """Factored rendering of a single term."""
    latex = fmt == "latex"
    render = (lambda p: p.to_latex()) if latex else str
    scalar = term.scalar
    num, den = [], []
    for f, e in term.factors:
        sign, p = _oriented(f)
        scalar *= sign ** abs(e)
        (num if e > 0 else den).append((p, abs(e)))

    def wrap(pe):
        p, e = pe
        body = render(p) if len(p) == 1 else f"({render(p)})"
        if e == 1:
            return body
        return f"{body}^{{{e}}}" if latex else f"{body}^{e}"

    top = (" " if latex else "*").join(wrap(p) for p in num)
    if scalar != 1:
        if scalar == -1 and top:
            top = "-" + top
        else:
            c = RationalFunction.constant(term.ring, scalar)
            coeff = c.to_latex() if latex else str(c)
            top = (coeff + (" " if latex else "*") + top) if top else coeff
    elif not top:
        top = "1"
    if not den:
        return top
    if latex:
        return f"\\frac{{{top}}}{{{' '.join(wrap(p) for p in den)}}}"
    bottom = "*".join(wrap(p) for p in den)
    if len(den) > 1:
        bottom = f"({bottom})"
    if len(num) > 1 or scalar != 1 or (num and num[0][1] > 1):
        top = f"({top})"
    return f"{top}/{bottom}"


def format_weight(W: SymmetrizedRF, fmt: str = "text") -> str:
    k = W.spec.k
    first = W.terms[0]
    if k <= 1:
        if first.is_polynomial() and fmt == "text":
            return str(first.numerator())
        if first.is_polynomial():
            return first.numerator().to_latex()
        return factored_str(first, fmt)
    total = None
    if k <= 3:
        total = W.expand()
        try:
            total = RationalFunction(total.as_polynomial())
        except ArithmeticError:
            total = None
    if fmt == "latex":
        body = f"\\mathrm{{Sym}}_{{{k}}} {factored_str(first, fmt)}"
        return body + (f" = {total.to_latex()}" if total is not None else "")
    body = f"Sym_{k} {factored_str(first)}"
    return body + (f" = {total}" if total is not None else "")


def weight_to_json(W: SymmetrizedRF, expanded: bool = False) -> dict:
    spec = W.spec
    out = {
        "r": spec.r,
        "n": spec.n,
        "k": spec.k,
        "sigma": spec.sigma.to_json(),
        "I": spec.I.to_json(),
        "terms": [t.to_json() for t in W.terms],
    }
    if expanded:
        out["expanded"] = W.expand().to_json()
    return out
