"""Isomorphism classes of the lifting families under the (Z/m)^x action.

A unit l acts on J-pairs by (i,k) -> (li, l^-1 k), folded into the range
1 <= i < n by i -> m - i when li lands at or above n, and on odd l-labels
through l^-1 with the same folding.  Two presentations in one family are
isomorphic exactly when some unit matches the index data and the
delta-guarded parameter identities (with lambda/gamma and theta/mu
crossing over according to which side of n the indices land on).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Optional, Sequence

from .classify import Pair, enumerate_I, enumerate_K, enumerate_L, in_J
from .cyclo import CycloNumber
from .errors import DomainError
from .lifting import LiftingDatum, free_parameter_keys

__all__ = [
    "UnitModM",
    "act_I",
    "act_L",
    "act_ell",
    "act_pair",
    "is_isomorphic_A",
    "is_isomorphic_B",
    "is_isomorphic_L",
    "iso_classes",
    "units",
]


@dataclass(frozen=True)
class UnitModM:
    m: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.m)
        if gcd(self.value, self.m) != 1:
            raise DomainError(f"{self.value} is not a unit mod {self.m}")

    @property
    def inverse(self) -> int:
        return pow(self.value, -1, self.m)

    def __mul__(self, other: "UnitModM") -> "UnitModM":
        if self.m != other.m:
            raise DomainError("units over different moduli")
        return UnitModM(self.m, self.value * other.value)


def units(m: int) -> list[UnitModM]:
    return [UnitModM(m, v) for v in range(1, m) if gcd(v, m) == 1]


def act_pair(unit: UnitModM, pair: Pair) -> Pair:
    """l . (i,k) = (li, l^-1 k) folded below n; stays inside J."""
    m = unit.m
    n = m // 2
    if not in_J(m, pair):
        raise DomainError(f"{pair} is not in J for m = {m}")
    i, k = pair
    li = (unit.value * i) % m
    lk = (unit.inverse * k) % m
    if li == 0 or li == n:
        raise RuntimeError(f"unit action degenerated on {pair}: li = {li}")
    folded = (li, lk) if li < n else ((m - li) % m, lk)
    return folded


def act_ell(unit: UnitModM, r: int) -> int:
    """l . r = l^-1 r folded below n; preserves odd labels in [1, n)."""
    m = unit.m
    n = m // 2
    if not (1 <= r < n and r % 2 == 1):
        raise DomainError(f"l-label must be odd in [1, n), got {r}")
    v = (unit.inverse * r) % m
    return v if v < n else m - v


def act_I(unit: UnitModM, I: Sequence[Pair]) -> tuple[Pair, ...]:
    return tuple(sorted(act_pair(unit, p) for p in I))


def act_L(unit: UnitModM, L: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(act_ell(unit, r) for r in L))


def _as_datum(m, I, L, lam, gamma, theta=None, mu=None) -> LiftingDatum:
    if isinstance(lam, LiftingDatum):
        return lam
    return LiftingDatum.build(m, I, L, lam=lam, gamma=gamma, theta=theta, mu=mu)


def _lambda_gamma_match(
    m: int, I, unit: UnitModM, d1: LiftingDatum, d2: LiftingDatum
) -> bool:
    n = m // 2
    zero = CycloNumber.zero(m)
    for pq in set(I):
        for ik in set(I):
            p, q = pq
            i, k = ik
            img = act_pair(unit, pq) + act_pair(unit, ik)
            same_side = (((unit.value * p) % m) < n) == (((unit.value * i) % m) < n)
            guard_l = (q + k) % m == 0  # delta_{q, m-k}
            guard_g = (q - k) % m == 0  # delta_{q, k}
            lam = d1.lam_value(pq + ik) if guard_l else zero
            gam = d1.gam_value(pq + ik) if guard_g else zero
            lam2 = d2.lam_value(img) if guard_l else zero
            gam2 = d2.gam_value(img) if guard_g else zero
            if same_side:
                if lam != lam2 or gam != gam2:
                    return False
            else:
                if lam != gam2 or gam != lam2:
                    return False
    return True


def _theta_mu_match(
    m: int, I, L, unit: UnitModM, d1: LiftingDatum, d2: LiftingDatum
) -> bool:
    n = m // 2
    zero = CycloNumber.zero(m)
    for pq in set(I):
        for r in set(L):
            p, q = pq
            img = act_pair(unit, pq) + (act_ell(unit, r),)
            p_low = ((unit.value * p) % m) < n
            r_low = ((unit.inverse * r) % m) < n
            guard_t = (q + r) % m == 0  # delta_{q, m-r}
            guard_m = (q - r) % m == 0  # delta_{q, r}
            th = d1.theta_value(pq + (r,)) if guard_t else zero
            mu = d1.mu_value(pq + (r,)) if guard_m else zero
            th2 = d2.theta_value(img)
            mu2 = d2.mu_value(img)
            if p_low and r_low:
                ok = th == (th2 if guard_t else zero) and mu == (mu2 if guard_m else zero)
            elif not p_low and not r_low:
                ok = th == (th2 if guard_m else zero) and mu == (mu2 if guard_t else zero)
            elif p_low and not r_low:
                ok = th == (mu2 if guard_t else zero) and mu == (th2 if guard_m else zero)
            else:
                ok = th == (mu2 if guard_m else zero) and mu == (th2 if guard_t else zero)
            if not ok:
                return False
    return True


def is_isomorphic_A(
    m: int, I, lam, gamma, I2, lam2, gamma2
) -> tuple[bool, Optional[UnitModM]]:
    """Lemma-style criterion for A-type presentations; returns the first witness unit."""
    I = tuple(sorted(I))
    I2 = tuple(sorted(I2))
    d1 = _as_datum(m, I, (), lam, gamma)
    d2 = _as_datum(m, I2, (), lam2, gamma2)
    for unit in units(m):
        if act_I(unit, I) != I2:
            continue
        if _lambda_gamma_match(m, I, unit, d1, d2):
            return True, unit
    return False, None


def is_isomorphic_B(
    m: int, first: tuple, second: tuple
) -> tuple[bool, Optional[UnitModM]]:
    """Criterion for B-type data (I, L, datum) vs (I', L', datum')."""
    I, L, d1 = first
    I2, L2, d2 = second
    I, L = tuple(sorted(I)), tuple(sorted(L))
    I2, L2 = tuple(sorted(I2)), tuple(sorted(L2))
    if not isinstance(d1, LiftingDatum) or not isinstance(d2, LiftingDatum):
        raise DomainError("B-type comparison expects LiftingDatum instances")
    for unit in units(m):
        if act_I(unit, I) != I2 or act_L(unit, L) != L2:
            continue
        if _lambda_gamma_match(m, I, unit, d1, d2) and _theta_mu_match(
            m, I, L, unit, d1, d2
        ):
            return True, unit
    return False, None


def is_isomorphic_L(m: int, L, L2) -> tuple[bool, Optional[UnitModM]]:
    """Bosonizations of M_L are isomorphic iff some unit carries L to L'."""
    L = tuple(sorted(L))
    L2 = tuple(sorted(L2))
    for unit in units(m):
        if act_L(unit, L) == L2:
            return True, unit
    return False, None


# -- orbit enumeration --------------------------------------------------------


def _grid_data(m: int, I, L, grid) -> list[LiftingDatum]:
    keys = free_parameter_keys(m, I, L)
    if not keys:
        return [LiftingDatum.zero(m, I, L)]
    out = []
    for values in product(grid, repeat=len(keys)):
        params: dict = {"lambda": {}, "gamma": {}, "theta": {}, "mu": {}}
        for (name, key), value in zip(keys, values):
            params[name][key] = value
        out.append(
            LiftingDatum.build(
                m,
                I,
                L,
                lam=params["lambda"],
                gamma=params["gamma"],
                theta=params["theta"],
                mu=params["mu"],
            )
        )
    return out


def _datum_desc(d: LiftingDatum) -> dict:
    from .cyclo import format_scalar

    out = {}
    for name, items in (
        ("lambda", d.lam),
        ("gamma", d.gam),
        ("theta", d.theta),
        ("mu", d.mu),
    ):
        if items:
            out[name] = {
                ",".join(str(x) for x in key): format_scalar(v) for key, v in items
            }
    return out


def iso_classes(
    m: int,
    r_max: int,
    parameter_grid: Sequence = (0, 1),
    families: str = "abcd",
) -> list[dict]:
    """Orbit decomposition of the graded family instances under the unit action.

    The parameter grid is applied to the free parameters of each family
    member; members are grouped by pairwise isomorphism and reported with
    a canonical representative, the orbit size and witnessing units.
    """
    n = m // 2
    instances: list[tuple] = []
    if "a" in families:
        for I in enumerate_I(m, 1):
            if I[0][1] % m != n:
                instances.append(("a", I, (), LiftingDatum.zero(m, I, ())))
    if "b" in families:
        for L in enumerate_L(m, r_max):
            instances.append(("b", (), L, LiftingDatum.zero(m, (), L)))
    if "c" in families:
        for I in enumerate_I(m, r_max):
            if len(I) == 1 and I[0][1] % m != n:
                continue
            for datum in _grid_data(m, I, (), parameter_grid):
                instances.append(("c", I, (), datum))
    if "d" in families:
        for I, L in enumerate_K(m, r_max):
            for datum in _grid_data(m, I, L, parameter_grid):
                instances.append(("d", I, L, datum))

    def related(a, b) -> tuple[bool, Optional[UnitModM]]:
        fam, I, L, d1 = a
        fam2, I2, L2, d2 = b
        if fam != fam2:
            return False, None
        if fam == "b":
            return is_isomorphic_L(m, L, L2)
        if fam in ("a", "c"):
            return is_isomorphic_A(m, I, d1, None, I2, d2, None)
        return is_isomorphic_B(m, (I, L, d1), (I2, L2, d2))

    orbits: list[dict] = []
    assigned = [False] * len(instances)
    for idx, inst in enumerate(instances):
        if assigned[idx]:
            continue
        members = [(inst, UnitModM(m, 1))]
        assigned[idx] = True
        for jdx in range(idx + 1, len(instances)):
            if assigned[jdx]:
                continue
            verdict, witness = related(inst, instances[jdx])
            if verdict:
                members.append((instances[jdx], witness))
                assigned[jdx] = True
        fam, I, L, datum = inst
        orbits.append(
            {
                "family": fam,
                "representative": {
                    "I": [list(p) for p in I],
                    "L": list(L),
                    "parameters": _datum_desc(datum),
                },
                "orbit_size": len(members),
                "members": [
                    {
                        "I": [list(p) for p in mem_inst[1]],
                        "L": list(mem_inst[2]),
                        "parameters": _datum_desc(mem_inst[3]),
                        "witness_unit": unit.value,
                    }
                    for mem_inst, unit in members
                ],
            }
        )
    return orbits
