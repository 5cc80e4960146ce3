"""GKM classes, super stable envelope axioms, and polynomial representatives."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinat import Permutation, Subset, enumerate_subsets, gale_leq, gkm_pairs
from .exactalg import LinearForm, Polynomial, Ring, divides_linear, linear_multiplicity
from .fixedpoints import check_version, dimension_d, repelling_euler, split_by_sigma, tangent_weights
from .weightfn import WeightFunctionSpec, restriction


class NoSolution(Exception):
    """No homogeneous S_k-invariant polynomial of the requested degree interpolates the class."""


@dataclass
class GKMClass:
    n: int
    k: int
    components: dict  # Subset -> Polynomial in z1..zn, h

    def __post_init__(self):
        expected = set(enumerate_subsets(self.n, self.k))
        if set(self.components) != expected:
            raise ValueError("a GKM class needs exactly one component per k-subset")

    @property
    def ring(self) -> Ring:
        return Ring.equivariant(self.n)

    def ordered(self):
        return [(J, self.components[J]) for J in enumerate_subsets(self.n, self.k)]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components.values())

    def __eq__(self, other):
        return (
            isinstance(other, GKMClass)
            and (self.n, self.k) == (other.n, other.k)
            and all(self.components[J] == other.components[J] for J in self.components)
        )

    def to_json(self) -> dict:
        return {J.key(): p.to_json() for J, p in self.ordered()}

    @classmethod
    def from_json(cls, data: dict, n: int) -> GKMClass:
        comps = {Subset.parse(key, n): Polynomial.from_json(v) for key, v in data.items()}
        k = next(iter(comps)).k
        ring = Ring.equivariant(n)
        return cls(n, k, {J: p.to_ring(ring) for J, p in comps.items()})

    @classmethod
    def from_tuple(cls, n: int, k: int, polys) -> GKMClass:
        subsets = enumerate_subsets(n, k)
        polys = list(polys)
        if len(polys) != len(subsets):
            raise ValueError(f"expected {len(subsets)} components, got {len(polys)}")
        return cls(n, k, dict(zip(subsets, polys)))


def _z_difference(ring: Ring, i: int, j: int) -> LinearForm:
    coeffs = [0] * ring.nvars
    coeffs[ring.index[f"z{i}"]] = 1
    coeffs[ring.index[f"z{j}"]] = -1
    return LinearForm.make(ring, coeffs)[1]


def gkm_check(c: GKMClass):
    """(ok, violations): z_i - z_j must divide f_I - f_J for every GKM pair."""
    ring = c.ring
    violations = []
    for I, J, i, j in gkm_pairs(c.n, c.k):
        diff = c.components[I] - c.components[J]
        if diff.is_zero():
            continue
        # z_i - z_j divides diff iff diff vanishes after renaming z_i to z_j
        if not diff.rename({f"z{i}": f"z{j}"}).is_zero():
            violations.append((I, J))
    return not violations, violations


@dataclass
class StabClass:
    spec: WeightFunctionSpec
    gkm: GKMClass


def stab(r: str, n: int, k: int, sigma: Permutation, I: Subset) -> StabClass:
    r = check_version(r)
    if I.k != k:
        raise ValueError("|I| must equal k")
    comps = {J: restriction(r, n, sigma, I, J) for J in enumerate_subsets(n, k)}
    return StabClass(WeightFunctionSpec(r, n, k, sigma, I), GKMClass(n, k, comps))


@dataclass
class AxiomResult:
    passed: bool
    witness: object = None

    def to_json(self) -> dict:
        return {"pass": self.passed, "witness": self.witness}


@dataclass
class AxiomReport:
    results: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(res.passed for res in self.results.values())

    def __getitem__(self, key) -> AxiomResult:
        return self.results[key]

    def to_json(self) -> dict:
        return {name: res.to_json() for name, res in self.results.items()}


def _form_multiset(weights, ring: Ring) -> dict:
    forms: dict = {}
    for w in weights:
        _, form = w.form(ring)
        forms[form] = forms.get(form, 0) + 1
    return forms


def verify_axioms(c: StabClass) -> AxiomReport:
    spec = c.spec
    r, n, k, sigma, I = spec.r, spec.n, spec.k, spec.sigma, spec.I
    ring = Ring.equivariant(n)
    d = dimension_d(r, n, k)
    comps = c.gkm.components
    report = AxiomReport()

    bad = [
        {"J": J.key(), "degree": p.degree(), "homogeneous": p.is_homogeneous()}
        for J, p in c.gkm.ordered()
        if not p.is_zero() and not p.is_homogeneous(d)
    ]
    report.results["A0"] = AxiomResult(not bad, bad[0] if bad else {"degree": d})

    e_ver, e_hor = repelling_euler(r, n, k, I, sigma, ring)
    expected = e_ver * e_hor
    actual = comps[I]
    report.results["A1"] = AxiomResult(
        actual == expected, {"expected": str(expected), "actual": str(actual)}
    )

    h = LinearForm.make(ring, [0] * n + [1])[1]
    not_div = [J.key() for J, p in c.gkm.ordered() if J != I and not divides_linear(p, h)]
    report.results["A2"] = AxiomResult(not not_div, {"failing": not_div})

    failures = []
    for J, p in c.gkm.ordered():
        _, ver = tangent_weights(r, n, k, J)
        need = _form_multiset(split_by_sigma(ver, sigma)[1], ring)
        if p.is_zero():
            continue
        for form, m in need.items():
            got = linear_multiplicity(p, form, limit=m)
            if got < m:
                failures.append({"J": J.key(), "factor": str(form), "needed": m, "found": got})
    report.results["A3"] = AxiomResult(not failures, {"failing": failures})
    return report


def triangularity_violations(r: str, n: int, sigma: Permutation, I: Subset):
    """Restriction points J with a nonzero restriction but sigma^-1(J) not below sigma^-1(I).

    This is an observed property, reported rather than asserted.
    """
    inv = sigma.inverse()
    top = inv.apply_to(I)
    out = []
    for J in enumerate_subsets(n, I.k):
        if not restriction(r, n, sigma, I, J).is_zero() and not gale_leq(inv.apply_to(J), top):
            out.append(J)
    return out


# -- polynomial representatives ------------------------------------------------------


def _partitions(total: int, parts: int, largest: int | None = None):
    """Partitions of ``total`` into at most ``parts`` parts (weakly decreasing, padded with 0)."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _monomial_symmetric_at(lam, values: list[str], ring: Ring) -> Polynomial:
    """m_lambda evaluated at t_s = values[s] (as a polynomial in ``ring``)."""
    k = len(lam)
    seen = set()
    terms: dict = {}
    from itertools import permutations

    for perm in permutations(range(k)):
        exps = tuple(lam[perm[s]] for s in range(k))
        if exps in seen:
            continue
        seen.add(exps)
        m = 0
        for s, e in enumerate(exps):
            if e:
                m += e * ring.unit(ring.index[values[s]])
        terms[m] = terms.get(m, 0) + 1
    return Polynomial(ring, terms)


def _monomial_symmetric(lam, ring: Ring) -> Polynomial:
    return _monomial_symmetric_at(lam, [f"t{s}" for s in range(1, len(lam) + 1)], ring)


def _solve_sparse(rows, nvars: int):
    """Exact RREF solve of sparse rows [(dict var->coeff, rhs)]; free variables are 0.

    The pivot of each row is its largest variable index.  Returns the
    solution list, or None when the system is inconsistent.
    """
    pivots: dict[int, tuple[dict, Fraction]] = {}
    for coeffs, rhs in rows:
        row = {v: Fraction(c) for v, c in coeffs.items() if c}
        rhs = Fraction(rhs)
        for p in sorted(set(row) & set(pivots), reverse=True):
            if p not in row:
                continue
            f = row[p]
            prow, prhs = pivots[p]
            for v, c in prow.items():
                nv = row.get(v, 0) - f * c
                if nv:
                    row[v] = nv
                else:
                    row.pop(v, None)
            rhs -= f * prhs
            # eliminating p may introduce other pivot variables only if pivot
            # rows were not reduced; they are, so one pass suffices
        if not row:
            if rhs != 0:
                return None
            continue
        p = max(row)
        lead = row[p]
        row = {v: c / lead for v, c in row.items()}
        rhs = rhs / lead
        for q, (qrow, qrhs) in list(pivots.items()):
            f = qrow.get(p)
            if f:
                for v, c in row.items():
                    nv = qrow.get(v, 0) - f * c
                    if nv:
                        qrow[v] = nv
                    else:
                        qrow.pop(v, None)
                pivots[q] = (qrow, qrhs - f * rhs)
        pivots[p] = (row, rhs)
    solution = [Fraction(0)] * nvars
    for p, (row, rhs) in pivots.items():
        solution[p] = rhs  # free variables are zero, so the pivot equals rhs
    return solution


def find_representative(c: GKMClass, degree_bound: int) -> Polynomial:
    """A homogeneous S_k-symmetric polynomial in t, z, h restricting to ``c``.

    Raises NoSolution when the class is not homogeneous, its degree exceeds
    ``degree_bound``, or no polynomial of that degree interpolates it.
    """
    n, k = c.n, c.k
    ring = Ring.grassmann(k, n)
    target = Ring.equivariant(n)
    if c.is_zero():
        return Polynomial(ring)
    degrees = {p.degree() for p in c.components.values() if not p.is_zero()}
    if len(degrees) != 1 or not all(p.is_homogeneous() for p in c.components.values()):
        raise NoSolution("the class is not homogeneous")
    d = degrees.pop()
    if d > degree_bound:
        raise NoSolution(f"the class has degree {d} > bound {degree_bound}")

    basis = []  # (lambda, zh exponents)
    for tdeg in range(d + 1):
        for lam in _partitions(tdeg, k):
            for zh in _compositions(d - tdeg, n + 1):
                basis.append((lam, zh))
    # column images at each fixed point
    columns = []
    for lam, zh in basis:
        zh_mono = target.pack(zh)
        images = {}
        for J in enumerate_subsets(n, k):
            m = _monomial_symmetric_at(lam, [f"z{j}" for j in J], target)
            images[J] = m.shift(zh_mono)
        columns.append(images)
    rows = []
    for J in enumerate_subsets(n, k):
        eqs: dict[int, dict[int, object]] = {}
        for col, images in enumerate(columns):
            for m, coeff in images[J].terms.items():
                eqs.setdefault(m, {})[col] = coeff
        rhs = c.components[J].terms
        for m in set(eqs) | set(rhs):
            rows.append((eqs.get(m, {}), rhs.get(m, 0)))
    solution = _solve_sparse(rows, len(basis))
    if solution is None:
        raise NoSolution(f"no degree-{d} symmetric polynomial interpolates the class")
    result = Polynomial(ring)
    for (lam, zh), coeff in zip(basis, solution):
        if coeff:
            mono = Polynomial(ring, {ring.pack((0,) * k + zh): 1})
            result = result + _monomial_symmetric(lam, ring) * mono * coeff
    return result


def restrict_polynomial(f: Polynomial, J: Subset) -> Polynomial:
    """Substitute t_s = z_{j_s} into a polynomial in t, z, h."""
    target = Ring.equivariant(J.n)
    bindings = {f"t{s}": Polynomial.var(target, f"z{j}") for s, j in enumerate(J.elements, 1)}
    for name in target.names:
        bindings[name] = Polynomial.var(target, name)
    return f.substitute(bindings, target)


def representative_matches(f: Polynomial, c: GKMClass) -> bool:
    return all(restrict_polynomial(f, J) == p for J, p in c.ordered())


def symmetric_in_t(f: Polynomial, k: int) -> bool:
    for a in range(1, k):
        if f.rename({f"t{a}": f"t{a + 1}", f"t{a + 1}": f"t{a}"}) != f:
            return False
    return True


__all__ = [
    "AxiomReport",
    "AxiomResult",
    "GKMClass",
    "NoSolution",
    "StabClass",
    "find_representative",
    "gkm_check",
    "representative_matches",
    "restrict_polynomial",
    "stab",
    "symmetric_in_t",
    "triangularity_violations",
    "verify_axioms",
]
