"""Geometric and Yangian R-matrices, Stab matrices and the tensor-coordinate checks.

Basis conventions: the 4x4 matrices use v1(x)v1, v1(x)v2, v2(x)v1, v2(x)v2.
On (C^2)^(x)n the basis vector of a subset I has v2 exactly in the slots of
I, and subsets are ordered by (size, lexicographic).
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import Permutation, Subset, all_subsets, compose, enumerate_subsets
from .exactalg import Polynomial, RationalFunction, RFMatrix, Ring, rf_solve
from .fixedpoints import check_version
from .weightfn import GuardViolation, restriction

FLAVORS = ("geometric-R", "geometric-Rcheck", "yangian-R", "yangian-Rcheck")

ZETA_RING = Ring(("zeta", "h"))
U_RING = Ring(("u",))

# parity of (v1, v2) per version
PARITY = {"00": (0, 0), "10": (0, 1), "01": (1, 0), "11": (1, 1)}


@dataclass
class RMatrix:
    entries: RFMatrix
    flavor: str
    version: str

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        m = self.entries
        if (m.rows, m.cols) != (4, 4):
            raise ValueError("an RMatrix is 4x4")
        for i in range(4):
            for j in range(4):
                if _block(i) != _block(j) and not m[i, j].is_zero():
                    raise ValueError("entry outside the 1+2+1 block diagonal")

    @property
    def variable(self) -> str:
        return "u" if self.flavor.startswith("yangian") else "zeta"

    @property
    def ring(self) -> Ring:
        return self.entries.ring

    def __getitem__(self, ij):
        return self.entries[ij]

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.entries == other.entries

    def to_json(self) -> dict:
        return {"flavor": self.flavor, "version": self.version, "entries": self.entries.to_json()}


def _block(i: int) -> int:
    return (0, 1, 1, 2)[i]


def _rf(text_num: Polynomial, text_den: Polynomial | None = None) -> RationalFunction:
    return RationalFunction(text_num, text_den)


def closed_form_R(r: str) -> RMatrix:
    r = check_version(r)
    z = Polynomial.var(ZETA_RING, "zeta")
    h = Polynomial.var(ZETA_RING, "h")
    one = RationalFunction.constant(ZETA_RING, 1)
    zero = RationalFunction.constant(ZETA_RING, 0)
    den = h - z
    diag = _rf(z, den)
    off = _rf(h, den)
    corner = _rf(h + z, den)
    c11 = corner if r in ("01", "11") else one
    c22 = corner if r in ("10", "11") else one
    grid = [
        [c11, zero, zero, zero],
        [zero, diag, off, zero],
        [zero, off, diag, zero],
        [zero, zero, zero, c22],
    ]
    return RMatrix(RFMatrix(ZETA_RING, grid), "geometric-R", r)


def _yangian_grid(r: str, check: bool):
    u = Polynomial.var(U_RING, "u")
    one = Polynomial.constant(U_RING, 1)
    plus, minus = one + u, one - u
    # displayed matrices, written out entry by entry
    if not check:
        corners = {"00": (plus, plus), "10": (plus, minus), "01": (minus, plus), "11": (minus, minus)}[r]
        diag, off = one, (-u if r == "11" else u)
    else:
        corners = {
            "00": (plus, plus),
            "10": (plus, u - one),
            "01": (u - one, plus),
            "11": (u - one, u - one),
        }[r]
        diag, off = u, (-one if r == "11" else one)
    zero = Polynomial(U_RING)
    return [
        [corners[0], zero, zero, zero],
        [zero, diag, off, zero],
        [zero, off, diag, zero],
        [zero, zero, zero, corners[1]],
    ]


def yangian_R(r: str) -> tuple[RMatrix, RMatrix]:
    """(R_r(u), Rcheck_r(u)) as displayed for the four parity splittings."""
    r = check_version(r)
    R = RMatrix(RFMatrix(U_RING, _yangian_grid(r, False)), "yangian-R", r)
    Rc = RMatrix(RFMatrix(U_RING, _yangian_grid(r, True)), "yangian-Rcheck", r)
    return R, Rc


def super_permutation(r: str | None, ring: Ring) -> RFMatrix:
    """P on C^2 (x) C^2; with a version tag, odd-odd swaps carry a minus sign."""
    parity = PARITY[check_version(r)] if r is not None else (0, 0)
    grid = [[0] * 4 for _ in range(4)]
    for x in (0, 1):
        for y in (0, 1):
            sign = -1 if parity[x] and parity[y] else 1
            grid[y * 2 + x][x * 2 + y] = sign
    return RFMatrix(ring, grid)


def one_plus_uP(r: str) -> RFMatrix:
    """1 + u P_super, an independent derivation of the Yangian R_r(u)."""
    u = RationalFunction(Polynomial.var(U_RING, "u"))
    P = super_permutation(r, U_RING)
    return RFMatrix.identity(U_RING, 4) + P.map(lambda x: x * u)


_CHECK = {"geometric-R": "geometric-Rcheck", "geometric-Rcheck": "geometric-R",
          "yangian-R": "yangian-Rcheck", "yangian-Rcheck": "yangian-R"}


def check_matrix(R: RMatrix) -> RMatrix:
    """P o R, with the super sign rule for the Yangian flavors."""
    P = super_permutation(R.version if R.flavor.startswith("yangian") else None, R.ring)
    return RMatrix(P @ R.entries, _CHECK[R.flavor], R.version)


def _as_rf(arg, target: Ring) -> Polynomial:
    if isinstance(arg, RationalFunction):
        if not arg.den.is_constant():
            raise ValueError("spectral arguments must be polynomial")
        arg = arg.num
    if isinstance(arg, str):
        from .exactalg import parse_polynomial

        arg = parse_polynomial(arg, target)
    if arg.ring is not target:
        arg = arg.to_ring(target)
    return arg


def embed(
    R: RMatrix | RFMatrix, n: int, u: int, v: int, arg, target: Ring | None = None, parity=None
) -> RFMatrix:
    """R_{u,v}(arg) acting on (C^2)^(x)n, rows/columns in subset order.

    With ``parity`` (the parities of v1, v2) the embedding is the graded one:
    the slot-v component of an elementary tensor picks up a sign for every
    odd vector it passes between slots u and v.
    """
    if u == v or not (1 <= u <= n and 1 <= v <= n):
        raise ValueError(f"need distinct slots u, v in 1..{n}")
    M = R.entries if isinstance(R, RMatrix) else R
    target = target or Ring.equivariant(n)
    var = "u" if "u" in M.ring.index else "zeta"
    bindings = {var: _as_rf(arg, target)}
    if "h" in M.ring.index:
        bindings["h"] = Polynomial.var(target, "h")
    local = M.substitute(bindings, target)
    basis = all_subsets(n)
    slots = [S.tensor_slots() for S in basis]
    zero = RationalFunction.constant(target, 0)
    grid = []
    for J in slots:
        row = []
        for I in slots:
            if any(J[s] != I[s] for s in range(n) if s + 1 not in (u, v)):
                row.append(zero)
                continue
            ri = (J[u - 1] - 1) * 2 + (J[v - 1] - 1)
            ci = (I[u - 1] - 1) * 2 + (I[v - 1] - 1)
            entry = local[ri, ci]
            if parity is not None and not entry.is_zero():
                lo, hi = min(u, v), max(u, v)
                moved = parity[J[hi - 1] - 1] + parity[I[hi - 1] - 1]
                between = sum(parity[I[s] - 1] for s in range(lo, hi - 1))
                if moved * between % 2:
                    entry = -entry
            row.append(entry)
        grid.append(row)
    return RFMatrix(target, grid)


def _common_denominator(M: RFMatrix) -> Polynomial:
    out = Polynomial.constant(M.ring, 1)
    seen = []
    for row in M.entries:
        for x in row:
            if not x.den.is_constant() and all(x.den != d for d in seen):
                seen.append(x.den)
                out = out * x.den
    return out


def _polynomial_matrix(M: RFMatrix) -> RFMatrix:
    d = _common_denominator(M)
    return RFMatrix(M.ring, [[(x * d).as_polynomial() for x in row] for row in M.entries])


def spectral_argument(R: RMatrix | RFMatrix, i: int, j: int, target: Ring):
    """The argument substituted for R_{i,j}: z_i - z_j for zeta, -h/(z_i - z_j) for u.

    The Yangian matrices 1 + uP depend on the inverse spectral parameter,
    tied to zeta by u = -h/zeta.
    """
    M = R.entries if isinstance(R, RMatrix) else R
    diff = Polynomial.var(target, f"z{i}") - Polynomial.var(target, f"z{j}")
    if "u" in M.ring.index:
        return RationalFunction(-Polynomial.var(target, "h"), diff)
    return diff


def _yangian_in_zeta(M: RFMatrix) -> RFMatrix:
    return RFMatrix(ZETA_RING, [[_u_to_zeta(x.as_polynomial()) for x in row] for row in M.entries])


def yang_baxter_sides(R: RMatrix | RFMatrix, literal: bool = False):
    """Both sides of the Yang-Baxter equation, each scaled by the same polynomial.

    R is first multiplied by the product of its distinct denominators, so the
    comparison is an identity between 8x8 polynomial matrices.  Yangian
    matrices are embedded with their super signs and evaluated at
    u = -h/(z_i - z_j); ``literal`` substitutes u = z_i - z_j and drops the
    grading instead.
    """
    M = R.entries if isinstance(R, RMatrix) else R
    parity = None
    if "u" in M.ring.index and not literal:
        if isinstance(R, RMatrix):
            parity = PARITY[R.version]
        M = _yangian_in_zeta(M)
    Mp = _polynomial_matrix(M)
    target = Ring.equivariant(3)
    z = [None] + [Polynomial.var(target, f"z{i}") for i in (1, 2, 3)]
    R12 = embed(Mp, 3, 1, 2, z[1] - z[2], target, parity)
    R13 = embed(Mp, 3, 1, 3, z[1] - z[3], target, parity)
    R23 = embed(Mp, 3, 2, 3, z[2] - z[3], target, parity)
    return R12 @ R13 @ R23, R23 @ R13 @ R12


def yang_baxter_check(R: RMatrix | RFMatrix, literal: bool = False) -> bool:
    lhs, rhs = yang_baxter_sides(R, literal)
    return lhs == rhs


def yang_baxter_mismatches(R: RMatrix | RFMatrix, literal: bool = False):
    lhs, rhs = yang_baxter_sides(R, literal)
    return lhs.mismatches(rhs)


def _guard_n(n: int):
    if n > 3:
        raise GuardViolation("stab-matrix-size", f"Stab matrices are built for n <= 3 only (got n={n})")


def stab_block(r: str, n: int, sigma: Permutation, k: int) -> RFMatrix:
    """The k-sector: column I holds the restrictions of W_{sigma,I} at each J."""
    subsets = enumerate_subsets(n, k)
    ring = Ring.equivariant(n)
    return RFMatrix(ring, [[restriction(r, n, sigma, I, J) for I in subsets] for J in subsets])


def _assemble(n: int, blocks) -> RFMatrix:
    ring = Ring.equivariant(n)
    size = 2**n
    grid = [[RationalFunction.constant(ring, 0)] * size for _ in range(size)]
    offset = 0
    for B in blocks:
        for i in range(B.rows):
            for j in range(B.cols):
                grid[offset + i][offset + j] = B[i, j]
        offset += B.rows
    return RFMatrix(ring, grid)


def stab_matrix(r: str, n: int, sigma: Permutation) -> RFMatrix:
    r = check_version(r)
    _guard_n(n)
    return _assemble(n, [stab_block(r, n, sigma, k) for k in range(n + 1)])


def _relative(r: str, n: int, left: Permutation, right: Permutation) -> RFMatrix:
    """Stab(left)^-1 Stab(right), solved block by block."""
    r = check_version(r)
    _guard_n(n)
    blocks = [rf_solve(stab_block(r, n, left, k), stab_block(r, n, right, k)) for k in range(n + 1)]
    return _assemble(n, [B.map(simplify) for B in blocks])


def _check_a(n: int, a: int):
    if not 1 <= a <= n - 1:
        raise ValueError(f"need 1 <= a <= n-1, got a={a}")


def geometric_R(r: str, n: int, sigma: Permutation, a: int) -> RFMatrix:
    """Stab(sigma)^-1 Stab(sigma s_a): the matrix expressing the sigma s_a classes in the sigma basis.

    For n=2, sigma=id, a=1 this is the displayed relation between the
    weight functions of s and of id.  It equals R(z_{sigma(a)} - z_{sigma(a+1)}).
    """
    _check_a(n, a)
    return _relative(r, n, sigma, compose(sigma, Permutation.transposition(n, a, a + 1)))


def ltc_operator(r: str, n: int, sigma: Permutation, a: int) -> RFMatrix:
    """Stab(sigma s_a)^-1 Stab(sigma), the left side of the tensor-coordinate identity."""
    _check_a(n, a)
    return _relative(r, n, compose(sigma, Permutation.transposition(n, a, a + 1)), sigma)


def ltc_expected(r: str, n: int, sigma: Permutation, a: int) -> RFMatrix:
    ring = Ring.equivariant(n)
    u, v = sigma(a), sigma(a + 1)
    arg = Polynomial.var(ring, f"z{v}") - Polynomial.var(ring, f"z{u}")
    return embed(closed_form_R(r), n, u, v, arg, ring)


def ltc_check(r: str, n: int, sigma: Permutation, a: int):
    """(ok, mismatching index pairs) for the tensor-coordinate identity."""
    got = ltc_operator(r, n, sigma, a)
    want = ltc_expected(r, n, sigma, a)
    bad = got.mismatches(want)
    return not bad, bad


def unitarity_check(r: str, n: int, sigma: Permutation, a: int) -> bool:
    """geometric_R(sigma s_a, a) geometric_R(sigma, a) is the identity."""
    sigma_s = compose(sigma, Permutation.transposition(n, a, a + 1))
    prod = geometric_R(r, n, sigma_s, a) @ geometric_R(r, n, sigma, a)
    return prod == RFMatrix.identity(prod.ring, prod.rows)


def preserves_sectors(M: RFMatrix, n: int) -> bool:
    basis = all_subsets(n)
    return all(
        M[i, j].is_zero()
        for i, J in enumerate(basis)
        for j, I in enumerate(basis)
        if J.k != I.k
    )


# -- identification with the Yangian ------------------------------------------------


def _u_to_zeta(p: Polynomial) -> RationalFunction:
    """p(u) at u = -h/zeta, as a rational function in (zeta, h)."""
    zeta = Polynomial.var(ZETA_RING, "zeta")
    h = Polynomial.var(ZETA_RING, "h")
    d = p.degree() if not p.is_zero() else 0
    num = Polynomial(ZETA_RING)
    for m, c in p.terms.items():
        (e,) = U_RING.unpack(m)
        num = num + (-h) ** e * zeta ** (d - e) * c
    return RationalFunction(num, zeta**d)


def yangian_substituted(r: str) -> RFMatrix:
    """Rcheck_r(u) / (1 + u) with u = -h/zeta."""
    _, Rc = yangian_R(r)
    one_plus = _u_to_zeta(Polynomial.var(U_RING, "u") + 1)
    return RFMatrix(
        ZETA_RING,
        [[simplify(_u_to_zeta(x.as_polynomial()) / one_plus) for x in row] for row in Rc.entries.entries],
    )


def yangian_identification(r: str) -> bool:
    target = check_matrix(closed_form_R(r)).entries
    return yangian_substituted(r) == target


def yangian_mismatches(r: str):
    return yangian_substituted(r).mismatches(check_matrix(closed_form_R(r)).entries)


def sign_conjugate(M: RFMatrix, signs) -> RFMatrix:
    """D M D^-1 for the diagonal sign matrix D = diag(signs)."""
    return RFMatrix(
        M.ring,
        [[M[i, j] * (signs[i] * signs[j]) for j in range(M.cols)] for i in range(M.rows)],
    )


def yangian_identification_up_to_signs(r: str, signs=(1, 1, -1, 1)) -> bool:
    """The identification after conjugating by a diagonal sign matrix."""
    target = check_matrix(closed_form_R(r)).entries
    return sign_conjugate(yangian_substituted(r), signs) == target


# -- display helpers -----------------------------------------------------------------


def _candidate_factors(ring: Ring):
    zs = [Polynomial.var(ring, name) for name in ring.names if name.startswith("z")]
    h = Polynomial.var(ring, "h") if "h" in ring.index else None
    out = []
    for i in range(len(zs)):
        for j in range(len(zs)):
            if i != j:
                if i < j:
                    out.append(zs[i] - zs[j])
                if h is not None:
                    out.append(zs[i] - zs[j] + h)
    if "zeta" in ring.index:
        zeta = Polynomial.var(ring, "zeta")
        out.append(zeta)
        if h is not None:
            out += [h - zeta, h + zeta]
    if h is not None:
        out.append(h)
    return out


def simplify(f: RationalFunction) -> RationalFunction:
    """Cancel common linear factors of the shapes that occur here; fix the sign."""
    if f.den.is_constant():
        return f
    for p in _candidate_factors(f.ring):
        if f.den.is_constant():
            break
        f = f.reduce_by(p)
    # prefer a positive h^d coefficient, otherwise a positive leading term
    ring = f.ring
    sign = 0
    if "h" in ring.index:
        exps = [0] * ring.nvars
        exps[ring.index["h"]] = f.den.degree()
        c = f.den.terms.get(ring.pack(exps), 0)
        sign = (c > 0) - (c < 0)
    if not sign:
        terms = f.den._display_terms()
        sign = -1 if terms and terms[0][1] < 0 else 1
    if sign < 0:
        f = RationalFunction(-f.num, -f.den)
    return f


def basis_labels(n: int) -> list[str]:
    return [S.key() if S.elements else "none" for S in all_subsets(n)]


def tensor_labels(n: int) -> list[str]:
    return ["".join(f"v{j}" for j in S.tensor_slots()) for S in all_subsets(n)]


def render_matrix(M: RFMatrix, fmt: str = "text", n: int | None = None) -> str:
    if fmt == "latex":
        return M.to_latex()
    if fmt == "json":
        import json

        return json.dumps(M.to_json(), sort_keys=True)
    text = str(M)
    if n is not None:
        text = "basis: " + ", ".join(tensor_labels(n)) + "\n" + text
    return text


__all__ = [
    "FLAVORS",
    "PARITY",
    "RMatrix",
    "check_matrix",
    "closed_form_R",
    "embed",
    "geometric_R",
    "ltc_check",
    "ltc_expected",
    "ltc_operator",
    "one_plus_uP",
    "preserves_sectors",
    "render_matrix",
    "sign_conjugate",
    "simplify",
    "stab_block",
    "stab_matrix",
    "super_permutation",
    "unitarity_check",
    "yang_baxter_check",
    "yang_baxter_mismatches",
    "yangian_R",
    "yangian_identification",
    "yangian_identification_up_to_signs",
    "yangian_mismatches",
    "yangian_substituted",
]

_ = Subset
