"""Form-compatible embeddings between circular-basis spaces of dimensions D-2 and D.

For each vertex index i of the larger circle there is an embedding sending
the D-1 circular vectors of the smaller space to a sequence of circular
vectors of the larger one, with one triple sum e_{i-1}+e_i+e_{i+1} inserted.
The generic form takes an arbitrary vertex pair (one per circle) and walks
both circles consistently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import Subspace, SymplecticSpace, bits_of, kernel_of, rref
from .report import Report


@dataclass(frozen=True)
class LinearEmbedding:
    """An injective, form-compatible linear map between two spaces.

    `images` lists the images of the src_dim+1 circular vectors of the
    source; the underlying matrix acts on the src_dim coordinate vectors.
    """

    src_dim: int
    dst_dim: int
    images: tuple[int, ...]

    def apply(self, v: int) -> int:
        out = 0
        for j in bits_of(v):
            out ^= self.images[j]
        return out

    def apply_subspace(self, sub: Subspace) -> Subspace:
        return Subspace.span(self.apply(row) for row in sub.rows)

    def coordinate_images(self) -> tuple[int, ...]:
        return self.images[: self.src_dim]

    def image_subspace(self) -> Subspace:
        return Subspace.span(self.coordinate_images())


def _validate_embedding(emb: LinearEmbedding, src: SymplecticSpace, dst: SymplecticSpace) -> None:
    total = 0
    for img in emb.images:
        total ^= img
    if total != 0:
        raise AssertionError("circular images do not sum to zero")
    if len(rref(emb.coordinate_images())) != emb.src_dim:
        raise AssertionError("embedding is not injective")
    circ = src.circular_vectors()
    for i in range(len(circ)):
        for j in range(i + 1, len(circ)):
            if src.pairing(circ[i], circ[j]) != dst.pairing(emb.images[i], emb.images[j]):
                raise AssertionError("embedding is not form compatible")


def tau(space: SymplecticSpace, sub_space: SymplecticSpace, i: int) -> LinearEmbedding:
    """The i-th embedding of the (D-2)-space into the D-space, i in [1, D+1].

    Image sequence of the D-1 circular vectors of the source:
      1 < i <= D : e_1,...,e_{i-2}, e_{i-1}+e_i+e_{i+1}, e_{i+2},...,e_{D+1}
      i = 1      : e_3,...,e_D, e_{D+1}+e_1+e_2
      i = D+1    : e_2,...,e_{D-1}, e_D+e_{D+1}+e_1
    For D = 2 the source is the zero space and the map is zero.
    """
    d_big = space.dim
    if d_big < 2 or d_big % 2 != 0:
        raise ValueError(f"target dimension must be even and >= 2, got {d_big}")
    if sub_space.dim != d_big - 2:
        raise ValueError("source space must have dimension D-2")
    if not 1 <= i <= d_big + 1:
        raise ValueError(f"index {i} out of range [1,{d_big + 1}]")
    if d_big == 2:
        return LinearEmbedding(0, 2, (0,))
    e = space.circular
    if i == 1:
        images = [e(j + 2) for j in range(1, d_big - 1)]
        images.append(e(d_big + 1) ^ e(1) ^ e(2))
    elif i == d_big + 1:
        images = [e(j + 1) for j in range(1, d_big - 1)]
        images.append(e(d_big) ^ e(d_big + 1) ^ e(1))
    else:
        images = [e(j) for j in range(1, i - 1)]
        images.append(e(i - 1) ^ e(i) ^ e(i + 1))
        images += [e(j + 2) for j in range(i, d_big)]
    emb = LinearEmbedding(d_big - 2, d_big, tuple(images))
    _validate_embedding(emb, sub_space, space)
    return emb


def tau_prime(sub_space: SymplecticSpace, subsub_space: SymplecticSpace, i: int) -> LinearEmbedding:
    """Same shape as tau with all dimensions shifted down by two (zero for D=4)."""
    if sub_space.dim < 2:
        raise ValueError("tau_prime needs a source chain starting at dimension >= 4")
    return tau(sub_space, subsub_space, i)


def pushed_subspace(space: SymplecticSpace, emb: LinearEmbedding, sub: Subspace, i: int) -> Subspace:
    """tau_i(E') + F2.e_i, the one-dimension-up member produced by an embedding."""
    return emb.apply_subspace(sub).extend(space.circular(i))


def check_complement(space: SymplecticSpace, i: int) -> bool:
    """tau_i's image is a complement of the line F2.e_i inside the perp of e_i."""
    sub_space = SymplecticSpace(space.dim - 2)
    emb = tau(space, sub_space, i)
    image = emb.image_subspace()
    ei = space.circular(i)
    if image.contains(ei) and ei != 0:
        return False
    total = image.extend(ei)
    perp_line = kernel_of([space.gram_apply(ei)], space.dim)
    return total == perp_line and total.dim == space.dim - 1


def compose(outer: LinearEmbedding, inner: LinearEmbedding) -> tuple[int, ...]:
    """Coordinate images of outer . inner (a map from the inner source space)."""
    return tuple(outer.apply(img) for img in inner.coordinate_images())


def verify_composition_identity(dim: int) -> Report:
    """Check the two-step compositions and the matching subspace identity.

    As matrices, tau_{D+1} . tau'_i = tau_j . tau'_{D-1} for i in [1, D-2];
    at i = 1 both j = 1 and j = 2 satisfy it (the two maps agree on the
    image of tau'_{D-1}).  The subspace identity

      tau_{D+1}(tau'_i(E'') + F2 e'_i) + F2 e_{D+1}
        = tau_j(tau'_{D-1}(E'') + F2 e'_{D-1}) + F2 e_j

    over every E'' in the family of the twice-smaller space holds only for
    j = i+1, including at i = 1: with j = 1 the two sides already differ as
    plain spans, since <e_2, e_{D+1}> != <e_{D+1}+e_1+e_2, e_1>.
    """
    from .family import family_subspaces

    if dim < 4 or dim % 2 != 0:
        raise ValueError("identity requires even D >= 4")
    rep = Report(f"composition-identity D={dim}")
    v = SymplecticSpace(dim)
    vp = SymplecticSpace(dim - 2)
    vpp = SymplecticSpace(dim - 4)
    members = family_subspaces(dim - 4)
    tau_top = tau(v, vp, dim + 1)
    tau_last = tau_prime(vp, vpp, dim - 1)
    for i in range(1, dim - 1):
        ti = tau_prime(vp, vpp, i)
        lhs = compose(tau_top, ti)
        for j in ({1, 2} if i == 1 else {i + 1}):
            rhs = compose(tau(v, vp, j), tau_last)
            rep.require(f"matrix i={i} j={j}", lhs == rhs, f"lhs={lhs} rhs={rhs}")
        j = i + 1
        tj = tau(v, vp, j)
        bad = []
        for sub in members:
            left = pushed_subspace(v, tau_top, pushed_subspace(vp, ti, sub, i), dim + 1)
            right = pushed_subspace(v, tj, pushed_subspace(vp, tau_last, sub, dim - 1), j)
            if left != right:
                bad.append(sub)
        rep.require(f"subspaces i={i}", not bad, f"{len(bad)} violating members, first={bad[:1]}")
    return rep


def generic_tau(
    space: SymplecticSpace,
    sub_space: SymplecticSpace,
    gamma_p: int,
    gamma: int,
    orientation: int = 1,
) -> LinearEmbedding:
    """Embedding determined by a vertex of each circle, walking both circles.

    The chosen source vertex gamma_p maps to the sum over the closed
    neighborhood of gamma; the remaining source vertices map bijectively,
    in circular order, onto the vertices outside that neighborhood.  The
    two walk directions (orientation +-1) produce the same map; walking the
    circles in opposite directions would give the reflected map instead,
    which fails the pinning identities against the numbered embeddings.
    """
    d_big = space.dim
    if d_big < 4:
        raise ValueError("generic embedding requires D >= 4")
    if sub_space.dim != d_big - 2:
        raise ValueError("source space must have dimension D-2")
    n_src = d_big - 1
    n_dst = d_big + 1
    if not 1 <= gamma_p <= n_src:
        raise ValueError(f"source vertex {gamma_p} out of range [1,{n_src}]")
    if not 1 <= gamma <= n_dst:
        raise ValueError(f"target vertex {gamma} out of range [1,{n_dst}]")
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    e = space.circular
    images: list[int] = [0] * n_src
    images[gamma_p - 1] = e(gamma - 1) ^ e(gamma) ^ e(gamma + 1)
    for k in range(1, n_src):
        src = (gamma_p - 1 + orientation * k) % n_src
        dst = (gamma - 1 + orientation * (k + 1)) % n_dst
        images[src] = e(dst + 1)
    emb = LinearEmbedding(d_big - 2, d_big, tuple(images))
    _validate_embedding(emb, sub_space, space)
    return emb


def numbered_pair(dim: int, i: int) -> tuple[int, int]:
    """The (gamma_p, gamma) pair whose generic embedding equals tau_i."""
    if 2 <= i <= dim:
        return i - 1, i
    if i == 1:
        return dim - 1, 1
    if i == dim + 1:
        return dim - 1, dim + 1
    raise ValueError(f"index {i} out of range [1,{dim + 1}]")
