"""The acceptance suite: thirteen exact checks, run in tiers selected by max_n."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

from .combinat import Permutation, Subset, all_permutations, all_subsets, enumerate_subsets
from .envelope import gkm_check, restrict_polynomial, stab, verify_axioms
from .exactalg import (
    Polynomial,
    RationalFunction,
    RFMatrix,
    Ring,
    divides_linear,
    linear_multiplicity,
    parse_polynomial,
    parse_rational,
)
from .fixedpoints import VERSIONS, dimension_d, euler_product, repelling_euler, split_by_sigma, tangent_weights
from .rmatrix import (
    closed_form_R,
    geometric_R,
    ltc_check,
    yang_baxter_check,
    yangian_R,
    yangian_identification,
    yangian_mismatches,
)
from .weightfn import (
    NonCancellingDenominator,
    check_recursion,
    club_weights,
    restrict_terms,
    restrict_via_expansion,
    restriction,
    spade_weights,
    weight_function,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    scope: str = ""
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"[{status}] criterion {self.number:2d}: {self.title} ({self.scope}; {self.checked} checks, {self.elapsed:.1f}s)"
        if self.failures:
            msg += f"; {len(self.failures)} failing, first: {self.failures[0]}"
        return msg

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "pass": self.passed,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:20]],
            "failure_count": len(self.failures),
            "scope": self.scope,
            "seconds": round(self.elapsed, 3),
        }


def _sweep(max_n: int, cap: int):
    return range(2, min(max_n, cap) + 1)


def _scope(ns) -> str:
    ns = list(ns)
    return f"n={ns[0]}..{ns[-1]}" if len(ns) > 1 else (f"n={ns[0]}" if ns else "skipped")


ID2 = Permutation((1, 2))
S2 = Permutation((2, 1))

# -- displayed n=2 data -------------------------------------------------------------

_TABLE_K01 = {
    "00": {
        ("id", ()): "1",
        ("s", ()): "1",
        ("id", (1,)): "z2 - t1",
        ("s", (1,)): "t1 - z2 + h",
        ("id", (2,)): "t1 - z1 + h",
        ("s", (2,)): "z1 - t1",
    },
    "01": {
        ("id", ()): "z2 - z1 + h",
        ("s", ()): "z1 - z2 + h",
        ("id", (1,)): "h*(z2 - t1)*(z2 - z1 + h)/((z1 - t1 + h)*(z2 - t1 + h))",
        ("s", (1,)): "h*(z1 - z2 + h)/(z1 - t1 + h)",
        ("id", (2,)): "h*(z2 - z1 + h)/(z2 - t1 + h)",
        ("s", (2,)): "h*(z1 - t1)*(z1 - z2 + h)/((z1 - t1 + h)*(z2 - t1 + h))",
    },
}
_TABLE_K01["10"] = _TABLE_K01["00"]
_TABLE_K01["11"] = _TABLE_K01["01"]

# (expression, symmetrized?) for I = {1,2}
_BOTH_IN = "h^2*(z2 - z1 + h)*(z1 - z2 + h)/((z1 - t1 + h)*(z1 - t2 + h)*(z2 - t1 + h)*(z2 - t2 + h))"
_TABLE_K2 = {
    "00": {
        "id": [("(t2 - z1 + h)*(z2 - t1)/((t2 - t1 + h)*(t2 - t1))", True)],
        "s": [("(t2 - z2 + h)*(z1 - t1)/((t2 - t1 + h)*(t2 - t1))", True)],
    },
    "10": {
        "id": [("(t2 - z1 + h)*(z2 - t1)/(t2 - t1)", True), ("z2 - z1 + h", False)],
        "s": [("(t2 - z2 + h)*(z1 - t1)/(t2 - t1)", True), ("z1 - z2 + h", False)],
    },
    "01": {"id": [(_BOTH_IN, False)], "s": [(_BOTH_IN, False)]},
    "11": {
        "id": [("h^2*(z2 - z1 + h)*(t2 - t1 + h)*(z2 - t1)/((t2 - t1)*(z1 - t1 + h)*(z2 - t1 + h)*(z2 - t2 + h))", True)],
        "s": [("h^2*(z1 - z2 + h)*(t2 - t1 + h)*(z1 - t1)/((t2 - t1)*(z1 - t1 + h)*(z1 - t2 + h)*(z2 - t1 + h))", True)],
    },
}

# restrictions at t = (z1, z2) stated alongside the n=2 tables
_FULL_RESTRICTIONS = {
    "00": ("1", "1"),
    "01": ("1", "1"),
    "11": ("z2 - z1 + h", "z1 - z2 + h"),
}


def displayed_weight(r: str, sigma_name: str, I: tuple):
    """The displayed n=2 weight functions, as a list of rational functions."""
    k = len(I)
    ring = Ring.grassmann(k, 2)
    if k < 2:
        return [parse_rational(_TABLE_K01[r][(sigma_name, I)], ring)]
    out = []
    for text, sym in _TABLE_K2[r][sigma_name]:
        f = parse_rational(text, ring)
        if sym:
            f = f + f.rename({"t1": "t2", "t2": "t1"})
        out.append(f)
    return out


def displayed_matrix(r: str) -> RFMatrix:
    ring = Ring.equivariant(2)
    corner = parse_rational("(z1 - z2 + h)/(z2 - z1 + h)", ring)
    one = RationalFunction.constant(ring, 1)
    zero = RationalFunction.constant(ring, 0)
    diag = parse_rational("(z1 - z2)/(z2 - z1 + h)", ring)
    off = parse_rational("h/(z2 - z1 + h)", ring)
    top = corner if r in ("01", "11") else one
    bottom = corner if r in ("10", "11") else one
    return RFMatrix(ring, [[top, zero, zero, zero], [zero, diag, off, zero], [zero, off, diag, zero], [zero, zero, zero, bottom]])


P1_PAIRS = {
    ("id", (1,)): ("z2 - z1", "0", "z2 - t1"),
    ("id", (2,)): ("h", "z2 - z1 + h", "t1 - z1 + h"),
    ("s", (1,)): ("z1 - z2 + h", "h", "t1 - z2 + h"),
    ("s", (2,)): ("0", "z1 - z2", "z1 - t1"),
}

THATONE = (
    "(z3 - z1)*(z4 - z1)*(z3 - z2 + h)*(z4 - z2 + h)*(z4 - z3)",
    "(z3 - z2)*(z4 - z2)*(z2 - z1 + h)*(z3 - z1 + h)*(z4 - z1 + h)*(z4 - z3 + h)",
    "0",
    "0",
)
THATONE_PRODUCT = (
    "(t1 - z1 + h)*(z3 - t1)*(z4 - t1)*(z4 - z3 + h)*"
    "(-t1^2 + t1*(z3 + z4 + 2*h) + h^2 + h*(-2*z1 - 2*z2 + z3 + z4) + z1^2 + z2^2 + z3*z4 - (z1 + z2)*(z3 + z4))"
)
THATONE_RATIONAL = "h*(z3 - t1)*(z4 - t1)*(z2 - z1 + h)*(z3 - z1 + h)*(z4 - z1 + h)*(z3 - z2 + h)*(z4 - z2 + h)*(z4 - z3 + h)/((z2 - t1 + h)*(z3 - t1 + h)*(z4 - t1 + h))"


def _sigma(name: str) -> Permutation:
    return ID2 if name == "id" else S2


# -- criteria -------------------------------------------------------------------------


def criterion_1(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    for r in VERSIONS:
        for name in ("id", "s"):
            for I in all_subsets(2):
                W = weight_function(r, 2, _sigma(name), I).expand()
                for expected in displayed_weight(r, name, I.elements):
                    checked += 1
                    if W != expected:
                        failures.append(f"r={r} W_{{{name},{I}}}: computed {W}, displayed {expected}")
    return CriterionResult(1, "n=2 weight function tables", not failures, checked, failures, "n=2")


def criterion_2(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    for r in VERSIONS:
        M = displayed_matrix(r)
        basis = all_subsets(2)
        for row, I in enumerate(basis):
            ring = Ring.grassmann(I.k, 2)
            rhs = RationalFunction.constant(ring, 0)
            for col, J in enumerate(basis):
                if J.k == I.k and not M[row, col].is_zero():
                    rhs = rhs + M[row, col].to_ring(ring) * weight_function(r, 2, ID2, J).expand()
            checked += 1
            if weight_function(r, 2, S2, I).expand() != rhs:
                failures.append(f"r={r}: row {I} of the displayed relation")
        checked += 1
        G = geometric_R(r, 2, ID2, 1)
        bad = G.mismatches(M)
        if bad:
            failures.append(f"r={r}: geometric_R differs from the displayed matrix at {bad}")
        if r in _FULL_RESTRICTIONS:
            full = Subset(2, (1, 2))
            for sigma, text in zip((ID2, S2), _FULL_RESTRICTIONS[r]):
                checked += 1
                want = parse_polynomial(text, Ring.equivariant(2))
                if restriction(r, 2, sigma, full, full) != want:
                    failures.append(f"r={r}: restriction of W_{{{sigma},{{1,2}}}} at t=(z1,z2) is not {text}")
    return CriterionResult(2, "n=2 matrix relations and geometric R", not failures, checked, failures, "n=2")


def criterion_3(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    ring = Ring.equivariant(2)
    for r in VERSIONS:
        for (name, I), (first, second, rep) in P1_PAIRS.items():
            c = stab(r, 2, 1, _sigma(name), Subset(2, I))
            want = (parse_polynomial(first, ring), parse_polynomial(second, ring))
            got = tuple(p for _, p in c.gkm.ordered())
            checked += 1
            if got != want:
                failures.append(f"r={r} kappa_{{{name},{I}}}: {tuple(map(str, got))} != {(first, second)}")
            f = parse_polynomial(rep, Ring.grassmann(1, 2))
            checked += 1
            if tuple(restrict_polynomial(f, J) for J in enumerate_subsets(2, 1)) != want:
                failures.append(f"r={r} kappa_{{{name},{I}}}: [{rep}] has other restrictions")
    return CriterionResult(3, "P^1 classes", not failures, checked, failures, "n=2")


def thatone_data():
    ring = Ring.equivariant(4)
    return tuple(parse_polynomial(t, ring) for t in THATONE)


def criterion_4(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    want = thatone_data()
    I = Subset(4, (2,))
    sigma = Permutation.identity(4)
    points = enumerate_subsets(4, 1)
    for r in ("01", "11"):
        got = tuple(restriction(r, 4, sigma, I, J) for J in points)
        for J, g, w in zip(points, got, want):
            checked += 1
            if g != w:
                failures.append(
                    f"r={r} component {J}: computed (degree {g.degree()}) differs from displayed (degree {w.degree()})"
                )
    product = parse_polynomial(THATONE_PRODUCT, Ring.grassmann(1, 4))
    computed = tuple(restriction("01", 4, sigma, I, J) for J in points)
    for J, c in zip(points, computed):
        checked += 1
        if restrict_polynomial(product, J) != c:
            failures.append(f"degree-6 product at {J} differs from the computed restriction")
    W = weight_function("01", 4, sigma, I).expand()
    checked += 1
    if W != parse_rational(THATONE_RATIONAL, Ring.grassmann(1, 4)):
        failures.append("the closed rational form of W^(01)_{id,{2}} differs")
    return CriterionResult(4, "the n=4 example tuple", not failures, checked, failures, "n=4")


def _stab_sweep(ns):
    for n in ns:
        for r in VERSIONS:
            for sigma in all_permutations(n):
                for I in all_subsets(n):
                    yield r, n, sigma, I


def criterion_5(max_n: int = 4, seed: int = 0) -> CriterionResult:
    ns = _sweep(max_n, 4)
    failures, checked = [], 0
    for r, n, sigma, I in _stab_sweep(ns):
        checked += 1
        try:
            report = verify_axioms(stab(r, n, I.k, sigma, I))
        except NonCancellingDenominator as exc:
            failures.append(f"r={r} n={n} sigma={sigma} I={I}: {exc}")
            continue
        if not report.passed:
            bad = [name for name, res in report.results.items() if not res.passed]
            failures.append(f"r={r} n={n} sigma={sigma} I={I}: {bad}")
    return CriterionResult(5, "axioms A0-A3 for every stab class", not failures, checked, failures, _scope(ns))


def _spade_divides(p: Polynomial, weights, ring: Ring) -> bool:
    need: dict = {}
    for w in weights:
        _, form = w.form(ring)
        need[form] = need.get(form, 0) + 1
    return all(linear_multiplicity(p, form, limit=m) >= m for form, m in need.items())


def criterion_6(max_n: int = 4, seed: int = 0) -> CriterionResult:
    ns = _sweep(max_n, 4)
    failures, checked = [], 0
    for n in ns:
        ring = Ring.equivariant(n)
        h = Polynomial.var(ring, "h")
        from .exactalg import LinearForm

        h_form = LinearForm.from_polynomial(h)[1]
        for r in VERSIONS:
            for sigma in all_permutations(n):
                for I in all_subsets(n):
                    k = I.k
                    tag = f"r={r} n={n} sigma={sigma} I={I}"
                    try:
                        comps = {J: restriction(r, n, sigma, I, J) for J in enumerate_subsets(n, k)}
                    except NonCancellingDenominator as exc:
                        failures.append(f"{tag}: not a polynomial ({exc})")
                        continue
                    checked += 1
                    principal = euler_product(club_weights(n, sigma, I), ring) * euler_product(
                        spade_weights(r, n, sigma, I), ring
                    )
                    e_ver, e_hor = repelling_euler(r, n, k, I, sigma, ring)
                    if not (comps[I] == principal == e_ver * e_hor):
                        failures.append(f"{tag}: principal formula")
                    terms = restrict_terms(weight_function(r, n, sigma, I), I)
                    if sum(t is not None for t in terms) != 1:
                        failures.append(f"{tag}: more than one term survives at I")
                    for J, p in comps.items():
                        checked += 1
                        if J != I and not divides_linear(p, h_form):
                            failures.append(f"{tag} J={J}: not divisible by h")
                        if not p.is_zero() and not _spade_divides(p, spade_weights(r, n, sigma, J), ring):
                            failures.append(f"{tag} J={J}: spade product does not divide")
    return CriterionResult(6, "polynomiality, principal formula, h- and spade-divisibility", not failures, checked, failures, _scope(ns))


def criterion_7(max_n: int = 4, seed: int = 0) -> CriterionResult:
    ns = _sweep(max_n, 5)
    failures, checked = [], 0
    for n in ns:
        for r in VERSIONS:
            for sigma in all_permutations(n):
                for a in range(1, n):
                    for I in all_subsets(n):
                        checked += 1
                        res = check_recursion(r, n, sigma, a, I, seed=seed)
                        if not res.holds:
                            failures.append(f"r={r} n={n} sigma={sigma} a={a} I={I} ({res.case}, {res.method})")
    return CriterionResult(7, "R-matrix recursion of weight functions", not failures, checked, failures, _scope(ns))


def criterion_8(max_n: int = 4, seed: int = 0) -> CriterionResult:
    ns = _sweep(max_n, 5)
    failures, checked = [], 0
    for r, n, sigma, I in _stab_sweep(ns):
        checked += 1
        ok, bad = gkm_check(stab(r, n, I.k, sigma, I).gkm)
        if not ok:
            failures.append(f"r={r} n={n} sigma={sigma} I={I}: {[(str(a), str(b)) for a, b in bad]}")
    return CriterionResult(8, "GKM condition for every stab class", not failures, checked, failures, _scope(ns))


def criterion_9(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    for r in VERSIONS:
        for label, R in (("geometric", closed_form_R(r)), ("yangian", yangian_R(r)[0])):
            checked += 1
            if not yang_baxter_check(R):
                failures.append(f"{label} r={r}")
    return CriterionResult(9, "Yang-Baxter equation", not failures, checked, failures, "8x8")


def criterion_10(max_n: int = 4, seed: int = 0) -> CriterionResult:
    n = min(max(max_n, 2), 3)
    failures, checked = [], 0
    for r in VERSIONS:
        for sigma in all_permutations(n):
            for a in range(1, n):
                checked += 1
                ok, bad = ltc_check(r, n, sigma, a)
                if not ok:
                    failures.append(f"r={r} sigma={sigma} a={a}: entries {bad[:4]}")
    return CriterionResult(10, "local tensor coordinates from Stab matrices", not failures, checked, failures, f"n={n}")


def criterion_11(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    for r in VERSIONS:
        checked += 1
        if not yangian_identification(r):
            failures.append(f"r={r}: entries {yangian_mismatches(r)} differ")
    return CriterionResult(11, "Yangian R-check identification", not failures, checked, failures, "4x4")


def criterion_12(max_n: int = 4, seed: int = 0) -> CriterionResult:
    ns = _sweep(max_n, 4)
    failures, checked = [], 0
    for r, n, sigma, I in _stab_sweep(ns):
        for J in enumerate_subsets(n, I.k):
            checked += 1
            if restriction(r, n, sigma, I, J) != restrict_via_expansion(r, n, sigma, I, J):
                failures.append(f"r={r} n={n} sigma={sigma} I={I} J={J}")
    return CriterionResult(12, "two-path restriction oracle", not failures, checked, failures, _scope(ns))


def _closed_form_d(r: str, n: int, k: int) -> int:
    base = k * (n - k)
    return {
        "00": base,
        "10": base + comb(k, 2),
        "01": base + comb(n - k, 2),
        "11": base + comb(k, 2) + comb(n - k, 2),
    }[r]


def criterion_13(max_n: int = 4, seed: int = 0) -> CriterionResult:
    failures, checked = [], 0
    for n in range(0, 9):
        for k in range(0, n + 1):
            for r in VERSIONS:
                checked += 1
                d = dimension_d(r, n, k)
                if d != _closed_form_d(r, n, k) or (r == "11" and d != comb(n, 2)):
                    failures.append(f"r={r} n={n} k={k}: {d}")
    # cheap enough to count exhaustively at n <= 5 in every tier but the fast one
    ns = range(1, (5 if max_n >= 4 else max(max_n, 2)) + 1)
    for n in ns:
        for r in VERSIONS:
            for sigma in all_permutations(n):
                for I in all_subsets(n):
                    hor, ver = tangent_weights(r, n, I.k, I)
                    count = len(split_by_sigma(hor, sigma)[1]) + len(split_by_sigma(ver, sigma)[1])
                    checked += 1
                    if count != dimension_d(r, n, I.k):
                        failures.append(f"r={r} n={n} sigma={sigma} I={I}: {count} repelling weights")
    return CriterionResult(13, "dimension table", not failures, checked, failures, f"k<=n<=8; counts {_scope(ns)}")


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
    12: criterion_12,
    13: criterion_13,
}


def run_criterion(number: int, max_n: int = 4, seed: int = 0) -> CriterionResult:
    start = time.perf_counter()
    result = CRITERIA[number](max_n, seed)
    result.elapsed = time.perf_counter() - start
    return result


def run_suite(max_n: int = 4, seed: int = 0, only=None, progress=None) -> list[CriterionResult]:
    results = []
    for number in sorted(only or CRITERIA):
        res = run_criterion(number, max_n, seed)
        if progress is not None:
            progress(res)
        results.append(res)
    return results
