"""Variable contexts and packed monomials.

A monomial is stored as a single Python int: the exponent of variable ``i``
lives in a 16-bit field, variable 0 in the most significant field.  Integer
comparison of packed monomials is therefore lexicographic order, and monomial
multiplication is integer addition.  The top bit of every field is kept free
as a guard bit so divisibility can be tested with one subtraction.
"""

from __future__ import annotations

from functools import lru_cache

BITS = 16
FIELD = (1 << BITS) - 1
MAX_EXP = (1 << (BITS - 1)) - 1


class Ring:
    """An ordered tuple of variable names.  Instances are interned."""

    __slots__ = ("names", "nvars", "index", "_shift", "guard", "__weakref__")

    _interned: dict[tuple[str, ...], Ring] = {}

    def __new__(cls, names):
        names = tuple(names)
        ring = cls._interned.get(names)
        if ring is not None:
            return ring
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        ring = super().__new__(cls)
        ring.names = names
        ring.nvars = len(names)
        ring.index = {name: i for i, name in enumerate(names)}
        ring._shift = tuple((ring.nvars - 1 - i) * BITS for i in range(ring.nvars))
        ring.guard = sum(1 << (s + BITS - 1) for s in ring._shift)
        cls._interned[names] = ring
        return ring

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def __reduce__(self):
        return (Ring, (self.names,))

    # -- monomials ---------------------------------------------------------

    def pack(self, exps) -> int:
        m = 0
        for e, s in zip(exps, self._shift):
            if e < 0 or e > MAX_EXP:
                raise OverflowError(f"exponent {e} outside 0..{MAX_EXP}")
            m |= e << s
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> s) & FIELD for s in self._shift)

    def unit(self, i: int) -> int:
        """Packed monomial of the i-th variable."""
        return 1 << self._shift[i]

    def divides(self, small: int, big: int) -> bool:
        g = self.guard
        return ((big | g) - small) & g == g

    def degree(self, m: int) -> int:
        return sum(self.unpack(m))

    # -- standard contexts -------------------------------------------------

    @staticmethod
    def grassmann(k: int, n: int) -> Ring:
        """Variables t1..tk, z1..zn, h in the canonical order."""
        return _grassmann(k, n)

    @staticmethod
    def equivariant(n: int) -> Ring:
        """Variables z1..zn, h: the ring fixed-point restrictions live in."""
        return _grassmann(0, n)


@lru_cache(maxsize=None)
def _grassmann(k: int, n: int) -> Ring:
    return Ring([f"t{a}" for a in range(1, k + 1)] + [f"z{b}" for b in range(1, n + 1)] + ["h"])
