"""Tangent weights at the torus fixed points p_I and their sigma-splitting."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinat import Permutation, Subset
from .exactalg import LinearForm, Polynomial, Ring

VERSIONS = ("00", "10", "01", "11")


def check_version(r: str) -> str:
    r = str(r)
    if r not in VERSIONS:
        raise ValueError(f"unknown version {r!r}; expected one of {', '.join(VERSIONS)}")
    return r


@dataclass(frozen=True)
class Weight:
    """The weight z_i - z_j + eps*h (i == j means the neutral weight h)."""

    i: int
    j: int
    eps: int

    def form(self, ring: Ring):
        """(scale, LinearForm) in the given ring."""
        coeffs = [0] * ring.nvars
        if self.i != self.j:
            coeffs[ring.index[f"z{self.i}"]] += 1
            coeffs[ring.index[f"z{self.j}"]] -= 1
        coeffs[ring.index["h"]] += self.eps
        return LinearForm.make(ring, coeffs, 0)

    def polynomial(self, ring: Ring) -> Polynomial:
        p = Polynomial.constant(ring, 0)
        if self.i != self.j:
            p = Polynomial.var(ring, f"z{self.i}") - Polynomial.var(ring, f"z{self.j}")
        if self.eps:
            p = p + Polynomial.var(ring, "h") * self.eps
        return p

    def __str__(self):
        if self.i == self.j:
            return "h" if self.eps == 1 else f"{self.eps}*h"
        s = f"z{self.i} - z{self.j}"
        return s + (" + h" if self.eps == 1 else "")

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "eps": self.eps, "form": str(self)}


def tangent_weights(r: str, n: int, k: int, I: Subset):
    """(horizontal, vertical) weight lists at p_I; both are multisets (lists)."""
    r = check_version(r)
    if I.k != k or I.n != n:
        raise ValueError("subset does not match (n, k)")
    Ib = I.complement()
    horizontal = [Weight(j, i, 0) for i in I for j in Ib]
    everything = range(1, n + 1)
    if r == "00":
        vertical = [Weight(i, j, 1) for i in I for j in Ib]
    elif r == "10":
        vertical = [Weight(i, s, 1) for i in I for s in everything]
    elif r == "01":
        vertical = [Weight(s, j, 1) for j in Ib for s in everything]
    else:
        vertical = (
            [Weight(i, j, 1) for i in I for j in I]
            + [Weight(i, j, 1) for i in Ib for j in Ib]
            + [Weight(i, j, 1) for i in I for j in Ib]
        )
    return horizontal, vertical


def split_by_sigma(weights, sigma: Permutation):
    """(attracting, repelling, neutral) according to sigma^-1(i) vs sigma^-1(j)."""
    inv = sigma.inverse()
    attracting, repelling, neutral = [], [], []
    for w in weights:
        if not isinstance(w, Weight):
            raise TypeError(f"{w!r} is not a weight of the form z_i - z_j + eps*h")
        a, b = inv(w.i), inv(w.j)
        if a > b:
            repelling.append(w)
        elif a < b:
            attracting.append(w)
        else:
            neutral.append(w)
    return attracting, repelling, neutral


def euler_product(weights, ring: Ring | None = None) -> Polynomial:
    if ring is None:
        n = max((max(w.i, w.j) for w in weights), default=0)
        ring = Ring.equivariant(n)
    p = Polynomial.constant(ring, 1)
    for w in weights:
        p = p * w.polynomial(ring)
    return p


def repelling_euler(r: str, n: int, k: int, I: Subset, sigma: Permutation, ring: Ring | None = None):
    """(e^{ver,sigma-}_I, e^{hor,sigma-}_I) as polynomials in z, h."""
    ring = ring or Ring.equivariant(n)
    hor, ver = tangent_weights(r, n, k, I)
    return (
        euler_product(split_by_sigma(ver, sigma)[1], ring),
        euler_product(split_by_sigma(hor, sigma)[1], ring),
    )


def dimension_d(r: str, n: int, k: int) -> int:
    r = check_version(r)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    base = k * (n - k)
    if r == "00":
        return base
    if r == "10":
        return base + comb(k, 2)
    if r == "01":
        return base + comb(n - k, 2)
    return comb(n, 2)
