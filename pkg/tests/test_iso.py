import pytest

from nichols_dm.classify import are_equivalent, support_J
from nichols_dm.errors import DomainError
from nichols_dm.iso import (
    UnitModM,
    act_I,
    act_L,
    act_ell,
    act_pair,
    is_isomorphic_A,
    is_isomorphic_B,
    is_isomorphic_L,
    iso_classes,
    units,
)
from nichols_dm.lifting import LiftingDatum


def test_unit_validation():
    with pytest.raises(DomainError):
        UnitModM(12, 2)
    assert [u.value for u in units(12)] == [1, 5, 7, 11]
    assert UnitModM(12, 5).inverse == 5
    assert UnitModM(12, 7).inverse == 7


def test_act_pair_examples():
    one = UnitModM(12, 1)
    for pair in support_J(12):
        assert act_pair(one, pair) == pair
    assert act_pair(UnitModM(12, 5), (1, 6)) == (5, 6)
    assert act_pair(UnitModM(12, 7), (1, 6)) == (5, 6)
    with pytest.raises(DomainError):
        act_pair(one, (1, 5))


def test_act_ell_examples():
    assert act_ell(UnitModM(12, 1), 3) == 3
    assert act_ell(UnitModM(12, 5), 1) == 5
    assert act_ell(UnitModM(12, 5), 3) == 3
    assert act_ell(UnitModM(12, 7), 1) == 5
    with pytest.raises(DomainError):
        act_ell(UnitModM(12, 5), 2)


@pytest.mark.parametrize("m", [12, 16, 20, 36, 48, 64])
def test_act_pair_is_group_action_preserving_J(m):
    J = support_J(m)
    us = units(m)
    for u1 in us:
        for u2 in us:
            for pair in J:
                step = act_pair(u2, pair)
                assert step in J
                assert act_pair(u1, step) == act_pair(u1 * u2, pair)


@pytest.mark.parametrize("m", [12, 16, 20, 36, 48, 64])
def test_act_ell_is_group_action_preserving_range(m):
    n = m // 2
    odd = [r for r in range(1, n) if r % 2]
    us = units(m)
    for u1 in us:
        for u2 in us:
            for r in odd:
                step = act_ell(u2, r)
                assert 1 <= step < n and step % 2 == 1
                assert act_ell(u1, step) == act_ell(u1 * u2, r)


@pytest.mark.parametrize("m", [12, 20, 48])
def test_action_preserves_relation(m):
    J = support_J(m)
    for unit in units(m):
        for p in J:
            for q in J:
                if are_equivalent(p, q, m):
                    assert are_equivalent(act_pair(unit, p), act_pair(unit, q), m)


def test_is_isomorphic_A_identity_and_zero():
    verdict, witness = is_isomorphic_A(12, [(1, 6)], 1, None, [(1, 6)], 1, None)
    assert verdict and witness.value == 1
    # zero datum is never isomorphic to a nonzero one
    verdict, _ = is_isomorphic_A(12, [(1, 6)], 0, None, [(1, 6)], 1, None)
    assert not verdict
    verdict, _ = is_isomorphic_A(12, [(1, 6)], 1, None, [(1, 6)], "w^4", None)
    assert not verdict


def test_is_isomorphic_A_transport():
    # (1,6) with lambda moves to (5,6) with the same lambda through l = 5
    verdict, witness = is_isomorphic_A(12, [(1, 6)], 1, None, [(5, 6)], 1, None)
    assert verdict and witness.value == 5
    verdict, _ = is_isomorphic_A(12, [(1, 6)], 1, None, [(5, 6)], 0, None)
    assert not verdict
    # different underlying families never match
    verdict, _ = is_isomorphic_A(12, [(1, 6)], 0, None, [(3, 6)], 0, None)
    assert not verdict


def test_is_isomorphic_B_cases():
    d_mu = LiftingDatum.build(12, [(2, 3)], [3], mu=1)
    d_mu0 = LiftingDatum.zero(12, [(2, 3)], [3])
    d_th = LiftingDatum.build(12, [(2, 9)], [3], theta=1)
    d_th0 = LiftingDatum.zero(12, [(2, 9)], [3])
    ok, w = is_isomorphic_B(12, ([(2, 3)], [3], d_mu), ([(2, 3)], [3], d_mu))
    assert ok and w.value == 1
    ok, _ = is_isomorphic_B(12, ([(2, 3)], [3], d_mu0), ([(2, 3)], [3], d_mu))
    assert not ok
    # mu on (2,3) side corresponds to theta on the (2,9) side through l = 7
    ok, w = is_isomorphic_B(12, ([(2, 3)], [3], d_mu), ([(2, 9)], [3], d_th))
    assert ok and w.value == 7
    ok, _ = is_isomorphic_B(12, ([(2, 3)], [3], d_mu), ([(2, 9)], [3], d_th0))
    assert not ok


def test_stabilizer_of_K_instance():
    # units fixing (I, L) = ({(2,3)}, {3}): l in {1, 5}
    I, L = ((2, 3),), (3,)
    stab = [
        u.value
        for u in units(12)
        if act_I(u, I) == I and act_L(u, L) == L
    ]
    assert stab == [1, 5]
    # the zero datum is fixed by the whole stabilizer; mu = 1 only by l = 1
    d0 = LiftingDatum.zero(12, I, L)
    d1 = LiftingDatum.build(12, I, L, mu=1)
    ok, w = is_isomorphic_B(12, (I, L, d0), (I, L, d0))
    assert ok and w.value == 1
    from nichols_dm.iso import _lambda_gamma_match, _theta_mu_match

    fixing_d1 = [
        u.value
        for u in units(12)
        if act_I(u, I) == I
        and act_L(u, L) == L
        and _lambda_gamma_match(12, I, u, d1, d1)
        and _theta_mu_match(12, I, L, u, d1, d1)
    ]
    assert fixing_d1 == [1]


def test_is_isomorphic_L_orbits():
    ok, w = is_isomorphic_L(12, [1], [5])
    assert ok and w.value == 5
    ok, _ = is_isomorphic_L(12, [1], [3])
    assert not ok
    ok, _ = is_isomorphic_L(12, [3], [3])
    assert ok


def test_iso_classes_L_singletons():
    orbits = [o for o in iso_classes(12, 1, families="b")]
    reps = sorted(tuple(o["representative"]["L"]) for o in orbits)
    assert reps == [(1,), (3,)]
    sizes = {tuple(o["representative"]["L"]): o["orbit_size"] for o in orbits}
    assert sizes[(1,)] == 2 and sizes[(3,)] == 1


def test_iso_classes_family_a():
    orbits = iso_classes(12, 1, families="a")
    reps = sorted(tuple(map(tuple, o["representative"]["I"])) for o in orbits)
    assert reps == [((2, 3),), ((3, 2),)]
    assert all(o["orbit_size"] == 2 for o in orbits)


def test_iso_classes_bosonization_criterion():
    # family (c) singles at m = 12 on the {0,1} grid: lambda = 0 and lambda = 1
    # always fall in different orbits
    orbits = iso_classes(12, 1, families="c")
    for orbit in orbits:
        params = [m["parameters"] for m in orbit["members"]]
        zero_flags = {not p for p in params}
        assert len(zero_flags) == 1


def test_iso_classes_family_d():
    orbits = iso_classes(12, 2, families="d")
    assert len(orbits) == 2
    assert all(o["orbit_size"] == 2 for o in orbits)
    # one orbit is the pair of bosonizations, the other the deformed pair
    sizes = sorted(len(o["representative"]["parameters"]) for o in orbits)
    assert sizes == [0, 1]


def test_is_isomorphic_A_is_equivalence_on_grid():
    # reflexive/symmetric/transitive across the {0,1} grid of family-(c) singles
    instances = []
    for I in [((1, 6),), ((3, 6),), ((5, 6),)]:
        for lam in (0, 1):
            instances.append((I, LiftingDatum.build(12, I, lam=lam)))
    verdicts = {}
    for a, (I1, d1) in enumerate(instances):
        for b, (I2, d2) in enumerate(instances):
            verdicts[(a, b)], _ = is_isomorphic_A(12, I1, d1, None, I2, d2, None)
    for a in range(len(instances)):
        assert verdicts[(a, a)]
        for b in range(len(instances)):
            assert verdicts[(a, b)] == verdicts[(b, a)]
            for c in range(len(instances)):
                if verdicts[(a, b)] and verdicts[(b, c)]:
                    assert verdicts[(a, c)]


def test_iso_dimension_cross_validation():
    # isomorphic A-type presentations certify the same dimension
    from nichols_dm.lifting import presentation_A
    from nichols_dm.rewrite import compile_presentation, dimension

    verdict, _ = is_isomorphic_A(12, [(1, 6)], 1, None, [(5, 6)], 1, None)
    assert verdict
    d1 = dimension(compile_presentation(presentation_A(12, [(1, 6)], lam=1)))
    d2 = dimension(compile_presentation(presentation_A(12, [(5, 6)], lam=1)))
    assert d1.dimension == d2.dimension == 96
