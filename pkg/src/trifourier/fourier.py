"""The exact Fourier transform on GF(2) function space and its triangular form.

Functions V -> Q are dense vectors of length 2^D indexed by the integer
encoding of the argument.  The transform is
    (phi f)(x) = 2^-d * sum_y (-1)^((x,y)) f(y),
an involution of trace 2^d.  On the characteristic function of a subspace E
it evaluates in closed form to 2^(dim E - d) times the characteristic
function of the orthogonal complement, which is what makes the exact
change of basis cheap.

All heavy arithmetic is integer-only: the inverse of the 0/1 basis matrix
is found modulo word-sized primes and then certified by an exact integer
product check, so no rounding can enter anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .family import Family, delta
from .gf2 import Subspace, SymplecticSpace, perp
from .report import Report
from .taumaps import tau

# The largest primes below 2^31; pivoting products stay within int64.
_PRIMES31 = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)
# Primes below 2^20 for residue comparisons: n * p^2 stays far inside int64
# for every matrix size this package can produce.
_PRIMES20 = (
    1048573, 1048571, 1048559, 1048549, 1048517, 1048507, 1048447, 1048433,
    1048423, 1048391, 1048387, 1048367, 1048361, 1048357, 1048343, 1048309,
)


def characteristic(space: SymplecticSpace, subset) -> list[int]:
    """0/1 indicator vector of a Subspace or an iterable of vectors."""
    values = [0] * (1 << space.dim)
    if isinstance(subset, Subspace):
        subset = subset.vectors()
    for v in subset:
        values[v] = 1
    return values


def delta_function(space: SymplecticSpace, x: int) -> list[int]:
    values = [0] * (1 << space.dim)
    values[x] = 1
    return values


def sign_matrix(space: SymplecticSpace) -> np.ndarray:
    """The 2^D x 2^D matrix of (-1)^((x,y)) as int64."""
    size = 1 << space.dim
    xs = np.arange(size, dtype=np.int64)
    ga = np.array([space.gram_apply(y) for y in range(size)], dtype=np.int64)
    par = np.bitwise_count(xs[:, None] & ga[None, :]).astype(np.int64) & 1
    return 1 - 2 * par


def phi(space: SymplecticSpace, values: Sequence) -> list[Fraction]:
    """The transform of an exact function vector, as Fractions."""
    size = 1 << space.dim
    if len(values) != size:
        raise ValueError(f"function vector must have length {size}")
    den = 1 << space.half
    signs = sign_matrix(space)
    out = []
    for x in range(size):
        row = signs[x]
        acc = sum(int(row[y]) * values[y] for y in range(size))
        out.append(Fraction(acc, den))
    return out


def z_map(space: SymplecticSpace, sub_space: SymplecticSpace, i: int, f_prime: Sequence) -> list:
    """Push a function on the smaller space up through the i-th embedding.

    The image of a point mass at y is the sum of the point masses at
    tau_i(y) and tau_i(y) + e_i.
    """
    emb = tau(space, sub_space, i)
    ei = space.circular(i)
    size_small = 1 << sub_space.dim
    if len(f_prime) != size_small:
        raise ValueError(f"function vector must have length {size_small}")
    out = [0] * (1 << space.dim)
    for y in range(size_small):
        t = emb.apply(y)
        out[t] += f_prime[y]
        out[t ^ ei] += f_prime[y]
    return out


def z_matrix(space: SymplecticSpace, sub_space: SymplecticSpace, i: int) -> np.ndarray:
    """The 0/1 matrix of the i-th push-up map on point masses."""
    emb = tau(space, sub_space, i)
    ei = space.circular(i)
    size_small = 1 << sub_space.dim
    mat = np.zeros((1 << space.dim, size_small), dtype=np.int64)
    for y in range(size_small):
        t = emb.apply(y)
        mat[t, y] += 1
        mat[t ^ ei, y] += 1
    return mat


def basis_matrix(family: Family) -> np.ndarray:
    """Columns are the characteristic functions of the family members."""
    size = 1 << family.dim
    mat = np.zeros((size, len(family)), dtype=np.int64)
    for j, ent in enumerate(family.entries):
        for v in ent.subspace.vectors():
            mat[v, j] = 1
    return mat


# -- certified integer linear algebra ---------------------------------------


def _mod_inverse(mat: np.ndarray, p: int) -> np.ndarray:
    """Inverse of an integer matrix modulo a word-sized prime, or raises."""
    n = mat.shape[0]
    aug = np.concatenate([mat % p, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        pivots = np.nonzero(aug[col:, col])[0]
        if pivots.size == 0:
            raise ZeroDivisionError(f"matrix is singular modulo {p}")
        r = col + int(pivots[0])
        if r != col:
            aug[[col, r]] = aug[[r, col]]
        inv = pow(int(aug[col, col]), p - 2, p)
        aug[col] = (aug[col] * inv) % p
        factors = aug[:, col].copy()
        factors[col] = 0
        nz = np.nonzero(factors)[0]
        if nz.size:
            aug[nz] = (aug[nz] - factors[nz, None] * aug[col][None, :]) % p
    return aug[:, n:]


def matmul_equals(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> bool:
    """Exact test x @ y == z for integer matrices, immune to overflow.

    Uses a direct int64 product when entry bounds make overflow impossible,
    otherwise compares modulo enough small primes that the residues
    determine the bounded integers uniquely (20-bit residues keep every
    modular product sum far inside int64).
    """
    if x.size == 0:
        return z.size == 0 or not z.any()
    bound_terms = int(np.abs(x).astype(object).sum(axis=1).max()) * int(np.abs(y).max(initial=0))
    bound = max(bound_terms, int(np.abs(z).max(initial=0)))
    if x.dtype != object and y.dtype != object and bound < 2**62:
        return bool(np.array_equal(x @ y, z))
    modulus = 1
    for p in _PRIMES20:
        xr = (x % p).astype(np.int64)
        yr = (y % p).astype(np.int64)
        zr = (z % p).astype(np.int64)
        if not np.array_equal((xr @ yr) % p, zr):
            return False
        modulus *= p
        if modulus > 2 * bound:
            return True
    raise ArithmeticError("entry bounds exceed the available prime pool")


def integer_inverse(mat: np.ndarray) -> np.ndarray:
    """Exact integer inverse of a unimodular integer matrix.

    Candidate inverses are built modulo one or more primes and CRT-lifted to
    the symmetric range; the return value is certified by the exact product
    check A @ mat == I, which also proves det(mat) = +-1.  Raises ValueError
    when no integer inverse exists.
    """
    n = mat.shape[0]
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    residues: list[np.ndarray] = []
    modulus = 1
    for p in _PRIMES31:
        try:
            residues.append(_mod_inverse(mat, p))
        except ZeroDivisionError:
            # det = +-1 is invertible mod every prime; witness non-unimodularity
            raise ValueError(f"matrix is singular modulo {p}; not unimodular")
        prev = modulus
        modulus *= p
        if len(residues) == 1:
            combined = residues[0].astype(object)
        else:
            # CRT step: combined' = combined + prev * ((r - combined) * inv(prev) mod p)
            inv_prev = pow(prev % p, p - 2, p)
            diff = (residues[-1].astype(object) - combined) % p
            combined = combined + prev * ((diff * inv_prev) % p)
        lifted = np.where(combined > modulus // 2, combined - modulus, combined)
        cand = lifted.astype(np.int64) if int(np.abs(lifted).max()) < 2**62 else lifted
        try:
            if matmul_equals(cand, mat, ident):
                return cand
        except ArithmeticError:
            pass  # candidate too large to certify; a further prime may shrink it
    raise ValueError("no integer inverse found; matrix is not unimodular")


# -- the change of basis -----------------------------------------------------


@dataclass
class CobMatrix:
    """Exact change-of-basis matrix in the family basis.

    num[r, c] / den is the coefficient of member c in the transform of the
    characteristic function of member r.  The basis order is the family's
    canonical order: dimension ascending, ties by echelon rows.
    """

    family: Family
    num: np.ndarray
    den: int

    @property
    def size(self) -> int:
        return len(self.family)

    def entry(self, r: int, c: int) -> Fraction:
        return Fraction(int(self.num[r, c]), self.den)

    def diagonal(self) -> list[Fraction]:
        return [self.entry(i, i) for i in range(self.size)]

    def row(self, r: int) -> list[Fraction]:
        return [self.entry(r, c) for c in range(self.size)]

    def trace(self) -> Fraction:
        return Fraction(int(np.trace(self.num.astype(object))), self.den)

    def to_json(self) -> dict:
        fam = self.family
        from .family import entry_compact

        return {
            "dim": fam.dim,
            "order": [
                {"index": e.index, "dim": e.dim, "label": entry_compact(e, fam.dim)}
                for e in fam.entries
            ],
            "entries": [
                [str(self.entry(r, c)) for c in range(self.size)] for r in range(self.size)
            ],
        }

    def to_csv(self) -> str:
        from .family import entry_compact

        labels = [entry_compact(e, self.family.dim) for e in self.family.entries]
        lines = ["," + ",".join(f'"{lab}"' for lab in labels)]
        for r in range(self.size):
            lines.append(f'"{labels[r]}",' + ",".join(str(self.entry(r, c)) for c in range(self.size)))
        return "\n".join(lines) + "\n"


def change_of_basis(family: Family) -> CobMatrix:
    """Solve for the transform's matrix in the family basis, exactly.

    The transform of member r's characteristic function is
    2^(dim - d) * (indicator of the orthogonal complement); expanding those
    indicators in the family basis via the certified integer inverse of the
    basis matrix gives integer numerators over the single denominator 2^d.
    """
    space = family.space
    b = basis_matrix(family)
    a = integer_inverse(b)
    size = 1 << family.dim
    w = np.zeros((size, len(family)), dtype=np.int64)
    for j, ent in enumerate(family.entries):
        comp = perp(space, ent.subspace)
        scale = 1 << ent.dim
        for v in comp.vectors():
            w[v, j] = scale
    if a.dtype == object:
        prod = a @ w.astype(object)
    else:
        bound = int(np.abs(a).astype(object).sum(axis=1).max()) * int(w.max())
        prod = (a @ w) if bound < 2**62 else (a.astype(object) @ w.astype(object))
    return CobMatrix(family, prod.T, 1 << family.half)


def verify_change_of_basis(cob: CobMatrix) -> Report:
    """Triangularity, diagonal signs, trace, eigenvalue count, involution."""
    fam = cob.family
    d = fam.half
    rep = Report(f"change-of-basis D={fam.dim}")
    num = cob.num
    dims = [e.dim for e in fam.entries]
    bad = [
        (r, c)
        for r in range(cob.size)
        for c in range(cob.size)
        if num[r, c] != 0 and r != c and dims[c] <= dims[r]
    ]
    rep.require("triangular", not bad, f"violations at {bad[:3]}")
    diag_ok = all(int(num[i, i]) == delta(d - dims[i]) * cob.den for i in range(cob.size))
    rep.require("diagonal signs", diag_ok)
    rep.require("trace", cob.trace() == 2**d, f"trace={cob.trace()}")
    plus = sum(1 for i in range(cob.size) if int(num[i, i]) == cob.den)
    expect_plus = 2 ** (fam.dim - 1) + 2 ** (d - 1) if fam.dim else 1
    rep.require("plus-count", plus == expect_plus, f"{plus} != {expect_plus}")
    ident = np.zeros((cob.size, cob.size), dtype=np.int64)
    np.fill_diagonal(ident, cob.den * cob.den)
    nn = num if num.dtype != object else num
    rep.require("involution", matmul_equals(nn, nn, ident))
    return rep


def verify_z_commutation(dim: int) -> Report:
    """The push-up maps intertwine the two transforms: G Z = 2 Z G'."""
    from .gf2 import make_space

    rep = Report(f"z-commutation D={dim}")
    v = make_space(dim)
    vp = make_space(dim - 2)
    g = sign_matrix(v)
    gp = sign_matrix(vp)
    for i in range(1, dim + 2):
        z = z_matrix(v, vp, i)
        rep.require(f"i={i}", bool(np.array_equal(g @ z, 2 * (z @ gp))))
    return rep


def verify_involution(space: SymplecticSpace) -> bool:
    """G @ G == 2^D * I for the sign matrix (the transform squares to one)."""
    g = sign_matrix(space)
    size = 1 << space.dim
    return matmul_equals(g, g, (1 << space.dim) * np.eye(size, dtype=np.int64))
