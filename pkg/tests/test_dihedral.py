import pytest

from trifourier.dihedral import (
    family_permutation,
    orbit_report,
    orbits_of,
    preserves_form,
    reflection,
    rotation,
    verify_embedding_equivariance,
    verify_family_stability,
    verify_relations,
)
from trifourier.family import build_family
from trifourier.gf2 import canonical_subspace, make_space


def test_rotation_d2_action():
    sp = make_space(2)
    r = rotation(sp)
    assert r.apply(sp.circular(1)) == sp.circular(2)
    assert r.apply(sp.circular(2)) == sp.circular(3)
    assert r.apply(sp.circular(3)) == sp.circular(1)


def test_reflection_values_d4():
    sp = make_space(4)
    s = reflection(sp)
    assert s.apply(sp.circular(2)) == sp.circular(3)
    assert s.apply(sp.circular(5)) == sp.circular(5)


@pytest.mark.parametrize("dim", [0, 2, 4, 6, 8, 10])
def test_relations(dim):
    rep = verify_relations(make_space(dim))
    assert rep.ok, rep.summary()


def test_form_preservation():
    for dim in (2, 4, 6, 8, 10):
        sp = make_space(dim)
        assert preserves_form(sp, rotation(sp))
        assert preserves_form(sp, reflection(sp))


@pytest.mark.parametrize("dim", [2, 4, 6, 8])
def test_equivariance(dim):
    rep = verify_embedding_equivariance(dim)
    assert rep.ok, rep.summary()


def test_stability_and_orbits_d2():
    fam = build_family(2)
    perm_r = family_permutation(fam, rotation(fam.space))
    zero_idx = fam.index_of[canonical_subspace([])]
    assert perm_r[zero_idx] == zero_idx
    lines = [fam.index_of[canonical_subspace([m])] for m in (1, 2, 3)]
    # rotation cycles the three lines
    assert sorted(perm_r[i] for i in lines) == sorted(lines)
    assert all(perm_r[i] != i for i in lines)
    orbits = orbits_of([perm_r, family_permutation(fam, reflection(fam.space))], 4)
    assert sorted(len(o) for o in orbits) == [1, 3]


@pytest.mark.parametrize("dim", [2, 4, 6, 8])
def test_stability(dim):
    rep = verify_family_stability(build_family(dim))
    assert rep.ok, rep.summary()


def test_induced_group_is_full_dihedral_d4():
    from trifourier.dihedral import family_permutation, generated_permutation_group

    fam = build_family(4)
    perms = [
        family_permutation(fam, rotation(fam.space)),
        family_permutation(fam, reflection(fam.space)),
    ]
    assert len(generated_permutation_group(perms)) == 10


def test_orbit_sizes_partition_d4():
    fam = build_family(4)
    doc = orbit_report(fam)
    sizes = [o["size"] for o in doc["orbits"]]
    assert sum(sizes) == 16
    assert all(10 % s == 0 for s in sizes)


def test_orbit_report_is_deterministic():
    fam = build_family(4)
    assert orbit_report(fam) == orbit_report(fam)
