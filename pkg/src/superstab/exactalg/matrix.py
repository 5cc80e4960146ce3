"""Dense matrices over the rational-function field and exact solving."""

from __future__ import annotations

from .polynomial import Polynomial
from .ratfunc import RationalFunction
from .ring import Ring


class SingularMatrix(ArithmeticError):
    pass


class RFMatrix:
    """A rows x cols grid of RationalFunction entries over a single ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries):
        self.ring = ring
        grid = [[RationalFunction.lift(x, ring) for x in row] for row in entries]
        if not grid or not grid[0]:
            raise ValueError("a matrix needs at least one row and column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged matrix")
        self.rows = len(grid)
        self.cols = width
        self.entries = grid

    @classmethod
    def identity(cls, ring: Ring, n: int) -> RFMatrix:
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> RFMatrix:
        return cls(ring, [[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))
        )

    __hash__ = None

    def mismatches(self, other: RFMatrix):
        """Index pairs where the two matrices differ."""
        return [
            (i, j)
            for i in range(self.rows)
            for j in range(self.cols)
            if not self.entries[i][j] == other.entries[i][j]
        ]

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def __add__(self, other: RFMatrix) -> RFMatrix:
        return RFMatrix(self.ring, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: RFMatrix) -> RFMatrix:
        return RFMatrix(self.ring, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __matmul__(self, other: RFMatrix) -> RFMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = None
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = a * b if acc is None else acc + a * b
                row.append(acc if acc is not None else RationalFunction(Polynomial(self.ring)))
            out.append(row)
        return RFMatrix(self.ring, out)

    def scale(self, c) -> RFMatrix:
        return RFMatrix(self.ring, [[x * c for x in row] for row in self.entries])

    def transpose(self) -> RFMatrix:
        return RFMatrix(self.ring, [list(col) for col in zip(*self.entries)])

    def map(self, fn) -> RFMatrix:
        return RFMatrix(self.ring, [[fn(x) for x in row] for row in self.entries])

    def submatrix(self, rows, cols) -> RFMatrix:
        return RFMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows])

    def substitute(self, bindings, target: Ring | None = None) -> RFMatrix:
        target = target or self.ring
        return RFMatrix(target, [[x.substitute(bindings, target) for x in row] for row in self.entries])

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.entries]
        width = [max(len(r[j]) for r in cells) for j in range(self.cols)]
        return "\n".join("[ " + "  ".join(c.ljust(w) for c, w in zip(r, width)) + " ]" for r in cells)

    def to_latex(self) -> str:
        rows = [" & ".join(x.to_latex() for x in row) for row in self.entries]
        return "\\begin{bmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{bmatrix}"

    def to_json(self) -> list:
        return [[x.to_json() for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> RFMatrix:
        grid = [[RationalFunction.from_json(x) for x in row] for row in data]
        return cls(grid[0][0].ring, grid)


def _distinct_product(polys) -> Polynomial:
    seen: list[Polynomial] = []
    for p in polys:
        if not p.is_constant() and all(p != q for q in seen):
            seen.append(p)
    out = None
    for p in seen:
        out = p if out is None else out * p
    return out


def clear_row_denominators(row: list[RationalFunction]) -> list[Polynomial]:
    """Multiply a row of rational functions by the product of its distinct denominators."""
    ring = row[0].ring
    d = _distinct_product(x.den for x in row)
    if d is None:
        return [x.num for x in row]
    out = []
    for x in row:
        if x.is_zero():
            out.append(Polynomial(ring))
        elif x.den.is_constant():
            out.append(x.num * d)
        else:
            out.append(x.num * d.exact_div(x.den))
    return out


def bareiss_jordan(A: list[list[Polynomial]], ncols: int):
    """Fraction-free Gauss-Jordan on the augmented polynomial matrix ``A``.

    The first ``ncols`` columns form the square system.  Returns
    ``(det, A')`` where the left block of ``A'`` is ``det`` times the identity
    (up to the row permutation already applied), so that the solution is
    ``A'[:, ncols:] / det``.  Every division performed is exact.
    """
    n = ncols
    A = [list(row) for row in A]
    prev = None
    for k in range(n):
        candidates = [i for i in range(k, n) if not A[i][k].is_zero()]
        if not candidates:
            raise SingularMatrix(f"no pivot in column {k + 1}")
        p = min(candidates, key=lambda i: (len(A[i][k]), i))
        if p != k:
            A[k], A[p] = A[p], A[k]
        piv = A[k][k]
        for i in range(len(A)):
            if i == k:
                continue
            f = A[i][k]
            row_i = A[i]
            row_k = A[k]
            new = []
            for j in range(len(row_i)):
                v = piv * row_i[j] - f * row_k[j] if not f.is_zero() else piv * row_i[j]
                if prev is not None:
                    v = v.exact_div(prev)
                new.append(v)
            A[i] = new
        # rows above the pivot already carry the factor prev; keep the
        # Jordan invariant by giving every row the same scale.
        prev = piv
    det = prev
    return det, A


def rf_solve(M: RFMatrix, B: RFMatrix, verify: bool = True) -> RFMatrix:
    """Solve ``M X = B`` exactly over the rational-function field."""
    if M.rows != M.cols:
        raise ValueError("rf_solve needs a square coefficient matrix")
    if B.rows != M.rows:
        raise ValueError("right-hand side has the wrong number of rows")
    n = M.rows
    rows = [clear_row_denominators(M.entries[i] + B.entries[i]) for i in range(n)]
    det, A = bareiss_jordan(rows, n)
    X = []
    for i in range(n):
        diag = A[i][i]
        X.append([RationalFunction(A[i][n + j], diag) for j in range(B.cols)])
    X = RFMatrix(M.ring, X)
    if verify and not (M @ X - B).is_zero():
        raise ArithmeticError("back-substitution check failed")
    return X


def rf_inverse(M: RFMatrix) -> RFMatrix:
    return rf_solve(M, RFMatrix.identity(M.ring, M.rows))
