"""Bit-packed GF(2) linear algebra and symplectic spaces with a circular basis.

Vectors live in coordinates e_1..e_D and are stored as Python ints: bit i-1
of a mask is the e_i coordinate.  The extra circular vector e_{D+1} equals
e_1 + ... + e_D and is kept as derived data, so that e_1 + ... + e_{D+1} = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

# Cap on the ambient dimension: the function space has 2**D coordinates and
# every check here is meant to run exactly at desk scale.
MAX_DIM = 14


def bits_of(mask: int) -> Iterator[int]:
    """Yield the 0-based positions of the set bits of a mask."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vector_from_coords(coords: Iterable[int]) -> int:
    """Pack an ordered 0/1 coordinate sequence (e_1 first) into a mask."""
    mask = 0
    for pos, c in enumerate(coords):
        if c & 1:
            mask |= 1 << pos
    return mask


def coords_of(mask: int, dim: int) -> tuple[int, ...]:
    """Unpack a mask into its D coordinates with respect to (e_1,...,e_D)."""
    return tuple((mask >> i) & 1 for i in range(dim))


class SymplecticSpace:
    """GF(2) space of even dimension D with the circularly-adjacent pairing.

    The Gram matrix in coordinates e_1..e_D has (e_i, e_j) = 1 exactly when
    i - j = +-1 mod D+1; it is alternating and nondegenerate.
    """

    def __init__(self, dim: int) -> None:
        if dim < 0 or dim % 2 != 0:
            raise ValueError(f"dimension must be even and >= 0, got {dim}")
        if dim > MAX_DIM:
            raise ValueError(f"dimension {dim} exceeds the configured cap {MAX_DIM}")
        self.dim = dim
        self.half = dim // 2
        n = dim + 1
        self.gram = tuple(
            vector_from_coords(
                1 if (i - j) % n in (1, n - 1) else 0 for j in range(dim)
            )
            for i in range(dim)
        )

    def __repr__(self) -> str:
        return f"SymplecticSpace(dim={self.dim})"

    def circular(self, i: int) -> int:
        """The circular vector e_i, 1 <= i <= D+1 (indices taken cyclically)."""
        i = (i - 1) % (self.dim + 1) + 1
        if i <= self.dim:
            return 1 << (i - 1)
        return (1 << self.dim) - 1  # e_{D+1} = e_1 + ... + e_D

    def circular_vectors(self) -> tuple[int, ...]:
        return tuple(self.circular(i) for i in range(1, self.dim + 2))

    def gram_apply(self, v: int) -> int:
        """The mask of the linear functional (., v): bit i-1 is (e_i, v)."""
        out = 0
        for j in bits_of(v):
            out ^= self.gram[j]
        return out

    def pairing(self, u: int, v: int) -> int:
        """The symplectic pairing (u, v) as a bit."""
        if u >> self.dim or v >> self.dim:
            raise ValueError("vector does not fit in this space")
        return (u & self.gram_apply(v)).bit_count() & 1

    def interval_vector(self, a: int, b: int) -> int:
        """e_I for the interval I = [a, b] with 1 <= a <= b <= D."""
        if not 1 <= a <= b <= self.dim:
            raise ValueError(f"interval [{a},{b}] out of range [1,{self.dim}]")
        return ((1 << b) - 1) ^ ((1 << (a - 1)) - 1)


@lru_cache(maxsize=None)
def make_space(dim: int) -> SymplecticSpace:
    """Shared-instance constructor for the ambient space of dimension D."""
    return SymplecticSpace(dim)


def pairing(space: SymplecticSpace, u: int, v: int) -> int:
    return space.pairing(u, v)


def interval_vector(space: SymplecticSpace, a: int, b: int) -> int:
    return space.interval_vector(a, b)


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form of the span, pivots scanned from bit 0 up.

    The result is a canonical function of the span: two generating sets with
    equal span produce identical tuples.  Rows are returned sorted by pivot.
    """
    piv: dict[int, int] = {}
    for v0 in vectors:
        v = v0
        while v:
            p = (v & -v).bit_length() - 1
            if p in piv:
                v ^= piv[p]
            else:
                piv[p] = v
                break
    for p in sorted(piv, reverse=True):
        for q in piv:
            if q != p and (piv[q] >> p) & 1:
                piv[q] ^= piv[p]
    return tuple(piv[p] for p in sorted(piv))


@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace held as its canonical reduced-echelon basis rows."""

    rows: tuple[int, ...]

    @staticmethod
    def span(vectors: Iterable[int]) -> "Subspace":
        return Subspace(rref(vectors))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: int) -> bool:
        for row in self.rows:
            p = (row & -row).bit_length() - 1
            if (v >> p) & 1:
                v ^= row
        return v == 0

    def __contains__(self, v: int) -> bool:
        return self.contains(v)

    def vectors(self) -> Iterator[int]:
        """All 2**dim elements of the subspace."""
        vecs = [0]
        for row in self.rows:
            vecs += [v ^ row for v in vecs]
        return iter(vecs)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.rows + other.rows)

    def extend(self, v: int) -> "Subspace":
        return Subspace.span(self.rows + (v,))


ZERO_SUBSPACE = Subspace(())


def canonical_subspace(vectors: Iterable[int]) -> Subspace:
    """Canonical representation of the span of the given vectors."""
    return Subspace.span(vectors)


def kernel_of(constraints: Iterable[int], dim: int) -> Subspace:
    """Solution space of parity(x & c) = 0 for every constraint mask c."""
    rows = rref(constraints)
    pivots = [(row & -row).bit_length() - 1 for row in rows]
    pivot_set = set(pivots)
    basis = []
    for f in range(dim):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, row in zip(pivots, rows):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return Subspace.span(basis)


def perp(space: SymplecticSpace, sub: Subspace) -> Subspace:
    """The orthogonal complement {x : (x, u) = 0 for all u in sub}."""
    return kernel_of((space.gram_apply(row) for row in sub.rows), space.dim)


def is_isotropic(space: SymplecticSpace, sub: Subspace) -> bool:
    """True iff the pairing vanishes on the subspace (alternating: i<j only)."""
    rows = sub.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if space.pairing(rows[i], rows[j]):
                return False
    return True


@dataclass(frozen=True, order=True)
class IntervalLabel:
    """The interval I = [a, b] inside [1, D], with its normalized print form.

    The normalized set I' is I itself when |I| is odd and the complement
    [1, D+1] - I when |I| is even; |I'| is always odd and I' is a single
    circular run of consecutive vertices mod D+1.
    """

    a: int
    b: int

    @property
    def length(self) -> int:
        return self.b - self.a + 1

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    def vector(self, space: SymplecticSpace) -> int:
        return space.interval_vector(self.a, self.b)

    def iprime(self, dim: int) -> tuple[int, ...]:
        """I' as a run of vertices in circular order, starting vertex first."""
        n = dim + 1
        if not self.is_even:
            return tuple(range(self.a, self.b + 1))
        run_len = n - self.length
        start = self.b + 1
        return tuple((start - 1 + k) % n + 1 for k in range(run_len))


def all_intervals(dim: int) -> Iterator[IntervalLabel]:
    for a in range(1, dim + 1):
        for b in range(a, dim + 1):
            yield IntervalLabel(a, b)
