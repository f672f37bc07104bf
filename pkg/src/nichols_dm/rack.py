"""Finite racks and the type-D criterion for conjugacy classes.

A rack is a set with a self-distributive operation x > y whose left
translations are bijections.  Conjugacy classes are racks under
x > y = x y x^-1; a class is of type D when it contains elements p, q
with (pq)^2 != (qp)^2 that are not conjugate in the subgroup <p, q>.
Type-D classes force infinite-dimensional Nichols algebras, so the
witness pair doubles as a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Sequence

from .dihedral import ConjugacyClass, DihedralGroup, GroupElement
from .errors import DomainError

__all__ = [
    "Rack",
    "TypeDWitness",
    "affine_rack",
    "conjugation_rack",
    "dihedral_rack",
    "is_type_D",
    "rack_isomorphism",
]


@dataclass(frozen=True)
class Rack:
    """Rack on indices 0..size-1; table[i][j] = i > j."""

    size: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple = ()

    def __post_init__(self):
        if len(self.table) != self.size or any(len(row) != self.size for row in self.table):
            raise DomainError("rack table shape does not match size")
        for i, row in enumerate(self.table):
            if sorted(row) != list(range(self.size)):
                raise DomainError(f"left translation by {i} is not a bijection")
        for i in range(self.size):
            for j in range(self.size):
                for k in range(self.size):
                    if self.table[i][self.table[j][k]] != self.table[self.table[i][j]][self.table[i][k]]:
                        raise DomainError(
                            f"self-distributivity fails at ({i}, {j}, {k})"
                        )

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def left_translation_cycle_type(self, i: int) -> tuple[int, ...]:
        perm = self.table[i]
        seen = [False] * self.size
        cycles = []
        for start in range(self.size):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            cycles.append(length)
        return tuple(sorted(cycles))


def dihedral_rack(n: int) -> Rack:
    """The rack on Z/n with i > j = 2i - j."""
    if n < 1:
        raise DomainError(f"dihedral rack needs n >= 1, got {n}")
    table = tuple(tuple((2 * i - j) % n for j in range(n)) for i in range(n))
    return Rack(n, table, labels=tuple(range(n)))


def affine_rack(n: int, aut: int | Callable[[int], int]) -> Rack:
    """Affine rack on Z/n: x > y = g(y) + (x - g(x)) for an automorphism g."""
    if n < 1:
        raise DomainError(f"affine rack needs n >= 1, got {n}")
    if isinstance(aut, int):
        mult = aut % n
        if gcd(mult, n) != 1:
            raise DomainError(f"multiplication by {aut} is not an automorphism of Z/{n}")
        g = lambda x: (mult * x) % n
    else:
        g = lambda x: aut(x) % n
        images = [g(x) for x in range(n)]
        if sorted(images) != list(range(n)):
            raise DomainError("map is not a bijection of Z/n")
        for x in range(n):
            for y in range(n):
                if g((x + y) % n) != (g(x) + g(y)) % n:
                    raise DomainError("map is not additive on Z/n")
    table = tuple(
        tuple((g(y) + x - g(x)) % n for y in range(n)) for x in range(n)
    )
    return Rack(n, table, labels=tuple(range(n)))


def conjugation_rack(G: DihedralGroup, cls: ConjugacyClass | Sequence[GroupElement]) -> Rack:
    """The conjugation rack on a conjugacy class (or any conjugation-closed set)."""
    elems = tuple(sorted(cls.elements if isinstance(cls, ConjugacyClass) else cls))
    index = {g: i for i, g in enumerate(elems)}
    table = []
    for x in elems:
        row = []
        for y in elems:
            z = x * y * x.inverse()
            if z not in index:
                raise DomainError(f"set is not closed under conjugation: {x} > {y} = {z}")
            row.append(index[z])
        table.append(tuple(row))
    return Rack(len(elems), tuple(table), labels=elems)


def rack_isomorphism(a: Rack, b: Rack) -> Optional[dict[int, int]]:
    """A rack isomorphism a -> b as an index map, or None.

    Backtracking on images, pruned by left-translation cycle types.
    """
    if a.size != b.size:
        return None
    types_a = [a.left_translation_cycle_type(i) for i in range(a.size)]
    types_b = [b.left_translation_cycle_type(i) for i in range(b.size)]
    if sorted(types_a) != sorted(types_b):
        return None
    mapping: dict[int, int] = {}
    used = [False] * b.size

    def consistent(i: int, img: int) -> bool:
        for j, jm in mapping.items():
            if a.op(i, j) in mapping and mapping[a.op(i, j)] != b.op(img, jm):
                return False
            if a.op(j, i) in mapping and mapping[a.op(j, i)] != b.op(jm, img):
                return False
        return True

    def extend(i: int) -> bool:
        if i == a.size:
            for x in range(a.size):
                for y in range(a.size):
                    if mapping[a.op(x, y)] != b.op(mapping[x], mapping[y]):
                        return False
            return True
        for img in range(b.size):
            if used[img] or types_a[i] != types_b[img]:
                continue
            if not consistent(i, img):
                continue
            mapping[i] = img
            used[img] = True
            if extend(i + 1):
                return True
            del mapping[i]
            used[img] = False
        return False

    return dict(mapping) if extend(0) else None


@dataclass(frozen=True)
class TypeDWitness:
    first: GroupElement
    second: GroupElement


def is_type_D(
    G: DihedralGroup, cls: ConjugacyClass | Sequence[GroupElement]
) -> tuple[bool, Optional[TypeDWitness]]:
    """Search for p, q in the class with (pq)^2 != (qp)^2, non-conjugate in <p, q>.

    Conjugacy is decided inside <p, q> itself: if p and q are conjugate
    there, they are conjugate in every subgroup containing both, so this
    search settles the existential quantifier over subgroups.  The witness
    is the lexicographically first pair, for reproducible certificates.
    """
    elems = sorted(cls.elements if isinstance(cls, ConjugacyClass) else cls)
    for p in elems:
        for q in elems:
            pq, qp = p * q, q * p
            if pq * pq == qp * qp:
                continue
            subgroup = _generated_subgroup(p, q)
            if not any(h * p * h.inverse() == q for h in subgroup):
                return True, TypeDWitness(p, q)
    return False, None


def _generated_subgroup(*gens: GroupElement) -> list[GroupElement]:
    elems = {GroupElement(gens[0].m, 0, 0)}
    frontier = list(elems)
    gen_list = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for g in gen_list:
                c = a * g
                if c not in elems:
                    elems.add(c)
                    new.append(c)
        frontier = new
    return sorted(elems)
