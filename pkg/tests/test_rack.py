import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nichols_dm.dihedral import DihedralGroup, class_of, conjugacy_classes
from nichols_dm.errors import DomainError
from nichols_dm.rack import (
    affine_rack,
    conjugation_rack,
    dihedral_rack,
    is_type_D,
    rack_isomorphism,
)


def test_dihedral_rack_formula():
    r3 = dihedral_rack(3)
    assert r3.op(0, 1) == 2
    for n in (1, 2, 5, 8):
        rk = dihedral_rack(n)
        assert all(rk.op(i, i) == i for i in range(n))


def test_dihedral_rack_is_affine_inversion():
    for n in (3, 5, 6, 12):
        assert affine_rack(n, n - 1).table == dihedral_rack(n).table


def test_affine_rack_examples():
    assert affine_rack(5, 1).table == tuple(
        tuple(y for y in range(5)) for _ in range(5)
    )  # identity automorphism: x > y = y
    # Z/5 with doubling: 1 > 3 = 2*3 + (1 - 2) = 0
    assert affine_rack(5, 2).op(1, 3) == 0
    with pytest.raises(DomainError):
        affine_rack(6, 2)  # 2 is not invertible mod 6
    with pytest.raises(DomainError):
        affine_rack(5, lambda x: 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 20), st.integers(1, 19))
def test_affine_rack_axioms_random(n, mult):
    from math import gcd

    if gcd(mult, n) != 1:
        with pytest.raises(DomainError):
            affine_rack(n, mult)
    else:
        affine_rack(n, mult)  # Rack.__post_init__ verifies both axioms


def test_conjugation_rack_rotations_trivial():
    G = DihedralGroup(12)
    rk = conjugation_rack(G, class_of(G, G.r(2)))
    assert rk.size == 2
    assert all(rk.op(i, j) == j for i in range(2) for j in range(2))


def test_conjugation_rack_reflections():
    G = DihedralGroup(12)
    rk = conjugation_rack(G, class_of(G, G.s()))
    assert rk.size == 6
    iso = rack_isomorphism(rk, dihedral_rack(6))
    assert iso is not None


def test_conjugation_rack_equivariance():
    # relabeling a class by the group automorphism r -> r^5, s -> s gives an isomorphic rack
    G = DihedralGroup(12)
    phi = {g: G.element(g.eps, 5 * g.rot) for g in G.elements()}
    for rep in (G.s(), G.s(1)):
        cls = class_of(G, rep)
        image = [phi[g] for g in cls.elements]
        assert rack_isomorphism(conjugation_rack(G, cls), conjugation_rack(G, image)) is not None


def test_rack_isomorphism_negative():
    assert rack_isomorphism(dihedral_rack(4), dihedral_rack(5)) is None
    G = DihedralGroup(8)
    trivial4 = conjugation_rack(G, [G.r(b) for b in (1, 3, 5, 7)])
    assert rack_isomorphism(trivial4, dihedral_rack(4)) is None


def test_type_d_reflection_classes_d12():
    G = DihedralGroup(12)
    verdict, witness = is_type_D(G, class_of(G, G.s()))
    assert verdict
    p, q = witness.first, witness.second
    assert (p * q) * (p * q) != (q * p) * (q * p)
    verdict_sr, _ = is_type_D(G, class_of(G, G.s(1)))
    assert verdict_sr


def test_type_d_rotation_classes_false():
    G = DihedralGroup(12)
    for cls in conjugacy_classes(G):
        if not cls.is_reflection_class:
            verdict, witness = is_type_D(G, cls)
            assert not verdict and witness is None


def test_type_d_witness_is_deterministic_lex_first():
    G = DihedralGroup(12)
    verdict, witness = is_type_D(G, class_of(G, G.s()))
    assert verdict
    assert (witness.first, witness.second) == (G.s(), G.s(2))


def test_embedded_dihedral_rack_type_d():
    # the full reflection set of D_m realizes the dihedral rack D_m inside Z/m x| Z/2
    for k in (3, 4, 5):
        G = DihedralGroup(2 * k)
        reflections = [g for g in G.elements() if g.eps == 1]
        rk = conjugation_rack(G, reflections)
        assert rack_isomorphism(rk, dihedral_rack(2 * k)) is not None
        verdict, _ = is_type_D(G, reflections)
        assert verdict


def test_rack_validation():
    with pytest.raises(DomainError):
        dihedral_rack(0)
