import pytest

from nichols_dm.cyclo import CycloNumber, RootPower
from nichols_dm.dihedral import (
    CyclicCharacter,
    DihedralGroup,
    GroupElement,
    KleinFourCharacter,
    centralizer,
    centralizer_representations,
    class_of,
    conjugacy_classes,
    irreps,
)
from nichols_dm.errors import DomainError


@pytest.fixture
def d12():
    return DihedralGroup(12)


def test_presentation_relations(d12):
    e = d12.identity
    s, r = d12.s(), d12.r()
    assert s * s == e
    assert prod(r, 12) == e
    assert s * r * s == r.inverse()
    # s.r = r^(m-1).s as products; in normal form both equal s r^1
    assert s * r == d12.r(11) * s
    assert s * r == GroupElement(12, 1, 1)


def prod(g, n):
    out = GroupElement(g.m, 0, 0)
    for _ in range(n):
        out = out * g
    return out


def test_identity_and_rotation_product(d12):
    e = d12.identity
    for a in d12.elements():
        assert e * a == a
        assert a * e == a
    assert d12.r(5) * d12.r(9) == d12.r(2)


@pytest.mark.parametrize("m", [3, 4, 7, 12])
def test_group_axioms_exhaustive(m):
    G = DihedralGroup(m)
    elems = list(G.elements())
    for a in elems:
        assert a * a.inverse() == G.identity
        assert a.inverse() * a == G.identity
    for a in elems:
        for b in elems:
            for c in elems[:: max(1, len(elems) // 8)]:
                assert (a * b) * c == a * (b * c)


def test_conjugacy_classes_d12(d12):
    classes = conjugacy_classes(d12)
    by_name = {c.name: c for c in classes}
    assert class_of(d12, d12.r(6)).elements == (d12.r(6),)
    assert set(class_of(d12, d12.r(1)).elements) == {d12.r(1), d12.r(11)}
    assert class_of(d12, d12.s()).size == 6
    assert set(class_of(d12, d12.s())) == {d12.s(2 * j) for j in range(6)}
    assert set(by_name["sr"].elements) == {d12.s(2 * j + 1) for j in range(6)}
    # partition of the group
    seen = [g for c in classes for g in c.elements]
    assert len(seen) == len(set(seen)) == 24


@pytest.mark.parametrize("m", [8, 12, 16])
def test_class_size_times_centralizer(m):
    G = DihedralGroup(m)
    for cls in conjugacy_classes(G):
        cent = centralizer(G, cls.representative)
        assert cls.size * cent.order == 2 * m


def test_centralizers_d12(d12):
    assert set(centralizer(d12, d12.r(6)).elements) == set(d12.elements())
    cent_r = centralizer(d12, d12.r(1))
    assert set(cent_r.elements) == {d12.r(b) for b in range(12)}
    cent_s = centralizer(d12, d12.s())
    assert set(cent_s.elements) == {d12.identity, d12.s(), d12.r(6), d12.s(6)}


def test_irrep_inventory_and_dimension_count(d12):
    reps = irreps(d12)
    two_dim = [p for p in reps if p.kind == "two_dim"]
    linear = [p for p in reps if p.kind == "linear"]
    assert len(two_dim) == d12.n - 1 == 5
    assert len(linear) == 4
    assert sum(p.degree**2 for p in reps) == 24


def test_two_dim_matrices(d12):
    rho = next(p for p in irreps(d12) if p.kind == "two_dim" and p.index == 1)
    w = CycloNumber.root(12, 1)
    mat_r = rho.evaluate(d12.r())
    assert mat_r[0][0] == w and mat_r[1][1] == w.inverse()
    assert not mat_r[0][1] and not mat_r[1][0]
    mat_s = rho.evaluate(d12.s())
    assert mat_s[0][1] == CycloNumber.one(12) and mat_s[1][0] == CycloNumber.one(12)
    assert not mat_s[0][0] and not mat_s[1][1]


def test_linear_character_table(d12):
    chi = {p.index: p for p in irreps(d12) if p.kind == "linear"}
    one = CycloNumber.one(12)
    for b in range(12):
        assert chi[1].character(d12.r(b)) == one
        assert chi[2].character(d12.r(b)) == one
        assert chi[3].character(d12.r(b)) == (one if b % 2 == 0 else -one)
        assert chi[4].character(d12.r(b)) == (one if b % 2 == 0 else -one)
    assert chi[3].character(d12.s()) == one
    assert chi[3].character(d12.s(1)) == -one
    assert chi[4].character(d12.s()) == -one
    assert chi[4].character(d12.s(1)) == one


@pytest.mark.parametrize("m", [8, 12, 24])
def test_irreps_are_homomorphisms(m):
    G = DihedralGroup(m)
    elems = list(G.elements())
    for rho in irreps(G):
        d = rho.degree
        mats = {a: rho.evaluate(a) for a in elems}
        for a in elems:
            ma = mats[a]
            for b in elems:
                mb, mab = mats[b], mats[a * b]
                for i in range(d):
                    for j in range(d):
                        acc = CycloNumber.zero(m)
                        for k in range(d):
                            acc = acc + ma[i][k] * mb[k][j]
                        assert acc == mab[i][j]


@pytest.mark.parametrize("m", [8, 12])
def test_character_orthogonality(m):
    G = DihedralGroup(m)
    reps = irreps(G)
    order = CycloNumber.from_rational(m, 2 * m)
    zero = CycloNumber.zero(m)
    for i, p in enumerate(reps):
        for q in reps[i:]:
            total = zero
            for g in G.elements():
                total = total + p.character(g) * q.character(g.inverse())
            assert total == (order if p == q else zero)


def test_cyclic_character(d12):
    chi = CyclicCharacter(d12, 5)
    assert chi.value(d12.r()) == RootPower(12, 5)
    assert chi.value(d12.r(3)) == RootPower(12, 15)
    with pytest.raises(DomainError):
        chi.value(d12.s())


def test_klein_four_characters(d12):
    sigma = d12.s()
    values = set()
    for chi in centralizer_representations(d12, class_of(d12, sigma)):
        assert isinstance(chi, KleinFourCharacter)
        vals = tuple(chi.value(g).exponent for g in centralizer(d12, sigma).elements)
        values.add(vals)
    assert len(values) == 4
    chi = KleinFourCharacter(d12, sigma, -1, 1)
    assert chi.value(sigma) == RootPower(12, 6)
    assert chi.value(d12.r(6)) == RootPower(12, 0)
    with pytest.raises(DomainError):
        chi.value(d12.r(3))


def test_centralizer_representations_rotation(d12):
    cls = class_of(d12, d12.r(2))
    reps = centralizer_representations(d12, cls)
    assert len(reps) == 12
    assert all(isinstance(p, CyclicCharacter) for p in reps)
    central = class_of(d12, d12.r(6))
    assert len(centralizer_representations(d12, central)) == 9


def test_modulus_guards():
    with pytest.raises(DomainError):
        DihedralGroup(2)
    G = DihedralGroup(12)
    G.require_classification_modulus()
    for m in (4, 8, 14):
        with pytest.raises(DomainError):
            DihedralGroup(m).require_classification_modulus()
