"""Rotation and reflection of the circular basis and their action on the family."""

from __future__ import annotations

from dataclasses import dataclass

from .family import Family
from .gf2 import Subspace, SymplecticSpace, bits_of
from .report import Report


@dataclass(frozen=True)
class SympAuto:
    """A linear automorphism given by the images of the coordinate vectors."""

    cols: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.cols)

    def apply(self, v: int) -> int:
        out = 0
        for j in bits_of(v):
            out ^= self.cols[j]
        return out

    def apply_subspace(self, sub: Subspace) -> Subspace:
        return Subspace.span(self.apply(row) for row in sub.rows)

    def compose(self, other: "SympAuto") -> "SympAuto":
        return SympAuto(tuple(self.apply(c) for c in other.cols))

    def power(self, n: int) -> "SympAuto":
        out = identity_auto(self.dim)
        base = self
        while n:
            if n & 1:
                out = out.compose(base)
            base = base.compose(base)
            n >>= 1
        return out

    def is_identity(self) -> bool:
        return all(c == 1 << j for j, c in enumerate(self.cols))


def identity_auto(dim: int) -> SympAuto:
    return SympAuto(tuple(1 << j for j in range(dim)))


def preserves_form(space: SymplecticSpace, auto: SympAuto) -> bool:
    d = space.dim
    for i in range(d):
        for j in range(i + 1, d):
            if space.pairing(auto.cols[i], auto.cols[j]) != space.pairing(1 << i, 1 << j):
                return False
    return True


def rotation(space: SymplecticSpace) -> SympAuto:
    """R: sends each circular vector e_i to e_{i+1} (cyclically)."""
    return SympAuto(tuple(space.circular(i + 2) for i in range(space.dim)))


def reflection(space: SymplecticSpace) -> SympAuto:
    """S: sends e_i to e_{D+1-i}, fixing e_{D+1}."""
    return SympAuto(tuple(space.circular(space.dim + 1 - (i + 1)) for i in range(space.dim)))


def verify_relations(space: SymplecticSpace) -> Report:
    """R and S generate a dihedral action: R^(D+1)=1, S^2=1, SRS=R^-1."""
    rep = Report(f"dihedral-relations D={space.dim}")
    r = rotation(space)
    s = reflection(space)
    rep.require("R symplectic", preserves_form(space, r))
    rep.require("S symplectic", preserves_form(space, s))
    rep.require("R^(D+1)=1", r.power(space.dim + 1).is_identity())
    rep.require("S^2=1", s.compose(s).is_identity())
    rep.require("SRS=R^-1", s.compose(r).compose(s) == r.power(space.dim))
    return rep


def verify_embedding_equivariance(dim: int) -> Report:
    """How rotation and reflection intertwine the embeddings.

    R tau_i = tau_{i+1} R' for i in [1, D-1]; at the wrap-around indices the
    source twist disappears: R tau_D = tau_{D+1} and R tau_{D+1} = tau_1
    (checked plain, without R', which is what holds).
    S tau_i = tau_{D+1-i} S' for i in [1, D], and S tau_{D+1} = tau_{D+1} S'.
    """
    from .gf2 import make_space
    from .taumaps import tau

    rep = Report(f"embedding-equivariance D={dim}")
    v = make_space(dim)
    vp = make_space(dim - 2)
    r, s = rotation(v), reflection(v)
    rp, sp = rotation(vp), reflection(vp)
    for i in range(1, dim + 2):
        t_i = tau(v, vp, i)
        lhs_r = tuple(r.apply(img) for img in t_i.coordinate_images())
        lhs_s = tuple(s.apply(img) for img in t_i.coordinate_images())
        t_next = tau(v, vp, i + 1 if i <= dim else 1)
        if i <= dim - 1:
            rhs_r = tuple(t_next.apply(rp.apply(1 << j)) for j in range(dim - 2))
        else:
            rhs_r = t_next.coordinate_images()
        t_refl = tau(v, vp, dim + 1 - i if i <= dim else dim + 1)
        rhs_s = tuple(t_refl.apply(sp.apply(1 << j)) for j in range(dim - 2))
        rep.require(f"R-tau i={i}", lhs_r == rhs_r)
        rep.require(f"S-tau i={i}", lhs_s == rhs_s)
    return rep


def family_permutation(family: Family, auto: SympAuto) -> list[int]:
    """The permutation induced on family entries; raises if a member escapes."""
    perm = []
    for ent in family.entries:
        image = auto.apply_subspace(ent.subspace)
        if image not in family.index_of:
            raise ValueError(f"image of entry {ent.index} is not a family member")
        perm.append(family.index_of[image])
    return perm


def orbits_of(perms: list[list[int]], size: int) -> list[list[int]]:
    seen = [False] * size
    orbits = []
    for start in range(size):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt = []
            for i in frontier:
                for perm in perms:
                    j = perm[i]
                    if not seen[j]:
                        seen[j] = True
                        orbit.append(j)
                        nxt.append(j)
            frontier = nxt
        orbits.append(sorted(orbit))
    return orbits


def generated_permutation_group(perms: list[list[int]]) -> set[tuple[int, ...]]:
    """Closure of the given permutations under composition."""
    if not perms:
        return set()
    n = len(perms[0])
    group = {tuple(range(n))}
    frontier = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for p in frontier:
            if p in group:
                continue
            group.add(p)
            for g in perms:
                nxt.append(tuple(g[p[i]] for i in range(n)))
                nxt.append(tuple(p[g[i]] for i in range(n)))
        frontier = nxt
    return group


def verify_family_stability(family: Family) -> Report:
    """Both generators keep the family stable; the induced permutation group
    has order dividing 2(D+1), and so do all orbit sizes."""
    rep = Report(f"family-stability D={family.dim}")
    space = family.space
    try:
        perm_r = family_permutation(family, rotation(space))
        perm_s = family_permutation(family, reflection(space))
    except ValueError as exc:
        rep.add("stability", False, str(exc))
        return rep
    rep.add("stability", True)
    orbits = orbits_of([perm_r, perm_s], len(family))
    total = sum(len(o) for o in orbits)
    rep.require("orbits partition", total == len(family), f"{total} != {len(family)}")
    group_order = 2 * (family.dim + 1)
    bad = [o for o in orbits if group_order % len(o)]
    rep.require("orbit sizes divide 2(D+1)", not bad, f"sizes: {[len(o) for o in bad]}")
    induced = len(generated_permutation_group([perm_r, perm_s]))
    rep.require(
        "induced group order divides 2(D+1)",
        group_order % induced == 0,
        f"order {induced}",
    )
    sizes = sorted(len(o) for o in orbits)
    rep.add("orbit sizes", True, ",".join(map(str, sizes)))
    return rep


def orbit_report(family: Family) -> dict:
    """Orbit decomposition in JSON form (representatives in compact notation)."""
    from .family import entry_compact

    space = family.space
    perms = [
        family_permutation(family, rotation(space)),
        family_permutation(family, reflection(space)),
    ]
    orbits = orbits_of(perms, len(family))
    orbits.sort(key=lambda o: (len(o), o))
    return {
        "dim": family.dim,
        "orbit_count": len(orbits),
        "orbits": [
            {
                "size": len(o),
                "representative": entry_compact(family.entries[o[0]], family.dim),
                "members": [entry_compact(family.entries[i], family.dim) for i in o],
            }
            for o in orbits
        ],
    }
