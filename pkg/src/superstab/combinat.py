"""Subsets, permutations and the subset <-> tensor basis dictionary.

Everything here speaks 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations


@dataclass(frozen=True, order=True)
class Subset:
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        if list(els) != sorted(set(els)):
            raise ValueError(f"subset elements must be strictly increasing: {els}")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise ValueError(f"subset {els} is not inside 1..{self.n}")
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, n: int, elements) -> Subset:
        return cls(n, tuple(sorted(elements)))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __contains__(self, i):
        return i in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def complement(self) -> Subset:
        return Subset(self.n, tuple(i for i in range(1, self.n + 1) if i not in self.elements))

    def key(self) -> str:
        """Comma list, or "none" for the empty set (the CLI spelling)."""
        return ",".join(map(str, self.elements)) if self.elements else "none"

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"

    def to_json(self) -> list[int]:
        return list(self.elements)

    def tensor_slots(self) -> tuple[int, ...]:
        """j_1..j_n with j_s = 2 iff s is in the subset."""
        return tuple(2 if s in self.elements else 1 for s in range(1, self.n + 1))

    @classmethod
    def from_slots(cls, slots) -> Subset:
        return cls(len(slots), tuple(s for s, j in enumerate(slots, 1) if j == 2))

    @classmethod
    def parse(cls, text: str, n: int) -> Subset:
        text = text.strip()
        if text.lower() in ("none", "", "{}"):
            return cls(n, ())
        parts = [int(p) for p in text.strip("{}").split(",") if p.strip()]
        return cls.of(n, parts)


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, u: int, v: int) -> Permutation:
        imgs = list(range(1, n + 1))
        imgs[u - 1], imgs[v - 1] = v, u
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(tuple(int(p) for p in text.split(",") if p.strip()))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, s in enumerate(self.images, 1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def apply_to(self, I: Subset) -> Subset:
        """The image set sigma(I)."""
        return Subset.of(I.n, (self(i) for i in I))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def __str__(self):
        return ",".join(map(str, self.images))

    def to_json(self) -> list[int]:
        return list(self.images)


def compose(sigma: Permutation, omega: Permutation) -> Permutation:
    """(sigma omega)(i) = sigma(omega(i))."""
    if sigma.n != omega.n:
        raise ValueError("permutation sizes differ")
    return Permutation(tuple(sigma(omega(i)) for i in range(1, sigma.n + 1)))


@lru_cache(maxsize=None)
def enumerate_subsets(n: int, k: int) -> tuple[Subset, ...]:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return tuple(Subset(n, c) for c in combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def all_subsets(n: int) -> tuple[Subset, ...]:
    """All subsets of 1..n ordered by (size, lexicographic): the tensor basis order."""
    return tuple(S for k in range(n + 1) for S in enumerate_subsets(n, k))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in permutations(range(1, n + 1)))


def apply_transposition(I: Subset, u: int, v: int) -> Subset:
    """s_{u,v}(I): swap u and v if exactly one of them is in I."""
    if u == v:
        raise ValueError("a transposition needs two distinct indices")
    swap = {u: v, v: u}
    return Subset.of(I.n, (swap.get(i, i) for i in I))


def gkm_pairs(n: int, k: int):
    """Unordered pairs (I, J, i, j) with I = K+{i}, J = K+{j}."""
    subsets = enumerate_subsets(n, k)
    out = []
    for x in range(len(subsets)):
        for y in range(x + 1, len(subsets)):
            I, J = subsets[x], subsets[y]
            only_i = set(I) - set(J)
            if len(only_i) == 1:
                (i,) = only_i
                (j,) = set(J) - set(I)
                out.append((I, J, i, j))
    return out


def gale_leq(A: Subset, B: Subset) -> bool:
    """Componentwise a_s <= b_s of the sorted element lists."""
    return all(a <= b for a, b in zip(A, B))
