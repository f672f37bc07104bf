"""The dihedral group D_m of order 2m and its representation theory.

Elements are kept in the normal form s^eps r^rot (reflection first), with
s^2 = 1 = r^m and s r s = r^-1.  Group operations work for any m >= 3;
the classification pipeline elsewhere additionally requires m = 4t with
t >= 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterator

from .cyclo import CycloNumber, RootPower
from .errors import DomainError

__all__ = [
    "CyclicCharacter",
    "ConjugacyClass",
    "DihedralGroup",
    "GroupElement",
    "Irrep",
    "KleinFourCharacter",
    "centralizer",
    "centralizer_representations",
    "conjugacy_classes",
    "irreps",
]


@dataclass(frozen=True, order=True)
class GroupElement:
    """s^eps r^rot in D_m; ordering is lexicographic in (eps, rot)."""

    m: int
    eps: int
    rot: int

    def __post_init__(self):
        if self.m < 3:
            raise DomainError(f"dihedral modulus must be >= 3, got {self.m}")
        object.__setattr__(self, "eps", self.eps & 1)
        object.__setattr__(self, "rot", self.rot % self.m)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.m != other.m:
            raise DomainError("elements of different dihedral groups")
        # s^a r^b . s^c r^d = s^(a+c) r^((-1)^c b + d)
        rot = (other.rot - self.rot) if other.eps else (self.rot + other.rot)
        return GroupElement(self.m, self.eps ^ other.eps, rot)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.m, self.eps, self.rot if self.eps else -self.rot)

    def conjugated_by(self, g: "GroupElement") -> "GroupElement":
        return g * self * g.inverse()

    @property
    def is_identity(self) -> bool:
        return self.eps == 0 and self.rot == 0

    def order(self) -> int:
        if self.eps:
            return 2
        if self.rot == 0:
            return 1
        return self.m // gcd(self.rot, self.m)

    def __str__(self):
        if self.eps == 0:
            return "e" if self.rot == 0 else f"r^{self.rot}"
        return "s" if self.rot == 0 else f"s r^{self.rot}"

    def __repr__(self):
        return f"GroupElement(D_{self.m}: {self})"


class DihedralGroup:
    """D_m = <s, r | s^2 = 1 = r^m, s r s = r^-1>, of order 2m."""

    def __init__(self, m: int):
        if m < 3:
            raise DomainError(f"dihedral group needs m >= 3, got {m}")
        self.m = m

    @property
    def order(self) -> int:
        return 2 * self.m

    @property
    def n(self) -> int:
        if self.m % 2:
            raise DomainError(f"n = m/2 needs even m, got {self.m}")
        return self.m // 2

    @property
    def t(self) -> int:
        if self.m % 4:
            raise DomainError(f"t = m/4 needs m divisible by 4, got {self.m}")
        return self.m // 4

    @property
    def is_classification_modulus(self) -> bool:
        return self.m % 4 == 0 and self.m >= 12

    def require_classification_modulus(self):
        if not self.is_classification_modulus:
            raise DomainError(
                f"classification requires m = 4t with t >= 3, got m = {self.m}"
            )

    def element(self, eps: int, rot: int) -> GroupElement:
        return GroupElement(self.m, eps, rot)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self.m, 0, 0)

    def r(self, b: int = 1) -> GroupElement:
        return GroupElement(self.m, 0, b)

    def s(self, b: int = 0) -> GroupElement:
        return GroupElement(self.m, 1, b)

    def elements(self) -> Iterator[GroupElement]:
        for eps in (0, 1):
            for rot in range(self.m):
                yield GroupElement(self.m, eps, rot)

    def __eq__(self, other):
        return isinstance(other, DihedralGroup) and other.m == self.m

    def __hash__(self):
        return hash(("DihedralGroup", self.m))

    def __repr__(self):
        return f"DihedralGroup(m={self.m})"


@dataclass(frozen=True)
class ConjugacyClass:
    representative: GroupElement
    elements: tuple[GroupElement, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def name(self) -> str:
        rep = self.representative
        if rep.is_identity:
            return "e"
        if rep.eps == 0:
            return f"r^{rep.rot}"
        return "s" if rep.rot == 0 else "sr"

    @property
    def is_reflection_class(self) -> bool:
        return self.representative.eps == 1

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.elements)


def class_of(G: DihedralGroup, sigma: GroupElement) -> ConjugacyClass:
    """Conjugacy class of sigma, with the canonical representative first."""
    orbit = sorted({sigma.conjugated_by(g) for g in G.elements()})
    rep = _canonical_representative(G, orbit)
    return ConjugacyClass(rep, tuple(orbit))


def _canonical_representative(G, orbit) -> GroupElement:
    # canonical choices: e, r^i with 1 <= i <= n (m even), s, s r
    rotations = [g for g in orbit if g.eps == 0]
    if rotations:
        if G.m % 2 == 0:
            preferred = [g for g in rotations if 1 <= g.rot <= G.m // 2]
            if preferred:
                return min(preferred)
        return min(rotations)
    return min(orbit)


def conjugacy_classes(G: DihedralGroup) -> list[ConjugacyClass]:
    """All conjugacy classes, identity first, then rotations, then reflections."""
    seen: set[GroupElement] = set()
    classes = []
    for g in sorted(G.elements()):
        if g in seen:
            continue
        cls = class_of(G, g)
        seen.update(cls.elements)
        classes.append(cls)
    classes.sort(key=lambda c: (c.representative.eps, c.representative.rot))
    return classes


@dataclass(frozen=True)
class Centralizer:
    sigma: GroupElement
    elements: tuple[GroupElement, ...]
    generators: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.elements


def centralizer(G: DihedralGroup, sigma: GroupElement) -> Centralizer:
    elems = tuple(sorted(g for g in G.elements() if g * sigma == sigma * g))
    gens = _minimal_generators(elems)
    return Centralizer(sigma, elems, gens)


def _minimal_generators(elems: tuple[GroupElement, ...]) -> tuple[GroupElement, ...]:
    chosen: list[GroupElement] = []
    span = {e for e in elems if e.is_identity}
    for g in sorted(elems, key=lambda x: (-x.order(), x)):
        if g in span:
            continue
        chosen.append(g)
        span = _closure(span | {g})
        if len(span) == len(elems):
            break
    return tuple(chosen)


def _closure(gens: set[GroupElement]) -> set[GroupElement]:
    elems = set(gens)
    if not elems:
        return elems
    m = next(iter(elems)).m
    elems.add(GroupElement(m, 0, 0))
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for c in (a * b, b * a):
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return elems


# -- irreducible representations --------------------------------------------


class Irrep:
    """An irreducible representation of D_m (m even): 4 linear + (n-1) two-dim."""

    def __init__(self, G: DihedralGroup, kind: str, index: int):
        if G.m % 2:
            raise DomainError("irrep tables are implemented for even m")
        if kind == "linear":
            if index not in (1, 2, 3, 4):
                raise DomainError(f"linear characters are indexed 1..4, got {index}")
        elif kind == "two_dim":
            if not 1 <= index < G.n:
                raise DomainError(f"two-dim irreps need 1 <= l < n, got {index}")
        else:
            raise DomainError(f"unknown irrep kind {kind!r}")
        self.group = G
        self.kind = kind
        self.index = index

    @property
    def degree(self) -> int:
        return 1 if self.kind == "linear" else 2

    @property
    def name(self) -> str:
        return f"chi_{self.index}" if self.kind == "linear" else f"rho_{self.index}"

    def monomial_action(self, a: GroupElement) -> tuple[tuple[int, RootPower], ...]:
        """Column j of the matrix as (row, scalar); all irreps here are monomial."""
        m = self.group.m
        if self.kind == "linear":
            half = m // 2
            exp = 0
            if self.index in (2, 4) and a.eps:
                exp += half
            if self.index in (3, 4) and a.rot % 2:
                exp += half
            return ((0, RootPower(m, exp)),)
        ell = self.index
        cols = [(0, RootPower(m, ell * a.rot)), (1, RootPower(m, -ell * a.rot))]
        if a.eps:
            cols = [(1 - row, scalar) for row, scalar in cols]
        return tuple(cols)

    def evaluate(self, a: GroupElement) -> tuple[tuple[CycloNumber, ...], ...]:
        """Dense row-major matrix over CycloNumber."""
        d = self.degree
        m = self.group.m
        rows = [[CycloNumber.zero(m) for _ in range(d)] for _ in range(d)]
        for col, (row, scalar) in enumerate(self.monomial_action(a)):
            rows[row][col] = scalar.to_cyclo()
        return tuple(tuple(r) for r in rows)

    def character(self, a: GroupElement) -> CycloNumber:
        total = CycloNumber.zero(self.group.m)
        for col, (row, scalar) in enumerate(self.monomial_action(a)):
            if row == col:
                total = total + scalar.to_cyclo()
        return total

    def domain_matches(self, elements) -> bool:
        return set(elements) == set(self.group.elements())

    def __eq__(self, other):
        return (
            isinstance(other, Irrep)
            and (other.group, other.kind, other.index) == (self.group, self.kind, self.index)
        )

    def __hash__(self):
        return hash(("Irrep", self.group.m, self.kind, self.index))

    def __repr__(self):
        return f"Irrep(D_{self.group.m}, {self.name})"


def irreps(G: DihedralGroup) -> list[Irrep]:
    """The 4 linear characters of Table-style and the n-1 two-dimensional irreps."""
    out = [Irrep(G, "linear", i) for i in (1, 2, 3, 4)]
    out.extend(Irrep(G, "two_dim", ell) for ell in range(1, G.n))
    return out


class CyclicCharacter:
    """Character chi_(k) of the rotation subgroup <r> = Z/m, chi_(k)(r) = w^k."""

    def __init__(self, G: DihedralGroup, k: int):
        self.group = G
        self.k = k % G.m

    degree = 1

    @property
    def name(self) -> str:
        return f"chi_({self.k})"

    def value(self, a: GroupElement) -> RootPower:
        if a.eps:
            raise DomainError(f"{a} is not in the rotation subgroup")
        return RootPower(self.group.m, self.k * a.rot)

    def monomial_action(self, a: GroupElement) -> tuple[tuple[int, RootPower], ...]:
        return ((0, self.value(a)),)

    def domain_matches(self, elements) -> bool:
        G = self.group
        return set(elements) == {GroupElement(G.m, 0, b) for b in range(G.m)}

    def __eq__(self, other):
        return (
            isinstance(other, CyclicCharacter)
            and (other.group, other.k) == (self.group, self.k)
        )

    def __hash__(self):
        return hash(("CyclicCharacter", self.group.m, self.k))

    def __repr__(self):
        return f"CyclicCharacter(D_{self.group.m}, k={self.k})"


class KleinFourCharacter:
    """Character of the centralizer <sigma> x <r^n> = Z/2 x Z/2 of a reflection.

    sign_sigma and sign_central are the values (+1 or -1) on sigma and on
    the central rotation r^n.
    """

    def __init__(self, G: DihedralGroup, sigma: GroupElement, sign_sigma: int, sign_central: int):
        if G.m % 2:
            raise DomainError("reflection centralizers of this shape need even m")
        if sigma.eps != 1:
            raise DomainError(f"{sigma} is not a reflection")
        if sign_sigma not in (1, -1) or sign_central not in (1, -1):
            raise DomainError("signs must be +1 or -1")
        self.group = G
        self.sigma = sigma
        self.sign_sigma = sign_sigma
        self.sign_central = sign_central

    degree = 1

    @property
    def name(self) -> str:
        tag = {1: "e", -1: "s"}
        return f"{tag[self.sign_sigma]}x{tag[self.sign_central]}"

    def value(self, a: GroupElement) -> RootPower:
        G = self.group
        half = G.m // 2
        exp = 0
        rot = a.rot
        if a.eps:
            if self.sign_sigma < 0:
                exp += half
            rot = (rot - self.sigma.rot) % G.m
        if rot == half:
            if self.sign_central < 0:
                exp += half
        elif rot != 0:
            raise DomainError(f"{a} is not in the centralizer of {self.sigma}")
        return RootPower(G.m, exp)

    def monomial_action(self, a: GroupElement) -> tuple[tuple[int, RootPower], ...]:
        return ((0, self.value(a)),)

    def domain_matches(self, elements) -> bool:
        G = self.group
        half = G.m // 2
        expected = {
            G.identity,
            self.sigma,
            G.r(half),
            self.sigma * G.r(half),
        }
        return set(elements) == expected

    def __eq__(self, other):
        return isinstance(other, KleinFourCharacter) and (
            other.group,
            other.sigma,
            other.sign_sigma,
            other.sign_central,
        ) == (self.group, self.sigma, self.sign_sigma, self.sign_central)

    def __hash__(self):
        return hash(
            ("KleinFourCharacter", self.group.m, self.sigma, self.sign_sigma, self.sign_central)
        )

    def __repr__(self):
        return f"KleinFourCharacter(D_{self.group.m}, {self.sigma}, {self.name})"


def centralizer_representations(G: DihedralGroup, cls: ConjugacyClass) -> list:
    """All irreducible representations of the centralizer of cls.representative."""
    sigma = cls.representative
    if sigma.eps == 0:
        central = sigma.rot == 0 or (G.m % 2 == 0 and sigma.rot == G.m // 2)
        if central:
            return irreps(G)
        return [CyclicCharacter(G, k) for k in range(G.m)]
    return [
        KleinFourCharacter(G, sigma, a, b)
        for a in (1, -1)
        for b in (1, -1)
    ]


@lru_cache(maxsize=None)
def group(m: int) -> DihedralGroup:
    return DihedralGroup(m)
