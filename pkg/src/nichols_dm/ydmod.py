"""Yetter-Drinfeld modules over D_m: induction, braidings, and finiteness.

An irreducible module M(O, rho) is induced from a conjugacy class O and an
irreducible representation rho of the centralizer of its canonical
representative sigma.  The basis is indexed by (coset, vector) pairs, the
coaction sends the i-th block to sigma_i = g_i sigma g_i^-1, and the group
acts through the coset factorization g g_i = g_j gamma.  The braiding is
c(u (x) v) = deg(u).v (x) u.

Every centralizer representation used here is monomial, so group actions
and braidings are scaled permutations of the basis; coefficients stay in
the exponent-only RootPower fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cyclo import RootKind, RootPower
from .dihedral import (
    ConjugacyClass,
    DihedralGroup,
    GroupElement,
    centralizer,
    class_of,
)
from .errors import DomainError
from .rack import is_type_D

__all__ = [
    "BraidingData",
    "DynkinDiagram",
    "Finite",
    "Infinite",
    "YDModule",
    "braiding",
    "direct_sum",
    "dynkin_diagram",
    "induce",
    "nichols_dimension",
    "yang_baxter_holds",
]


@dataclass(frozen=True)
class YDSummand:
    cls: ConjugacyClass
    rep: object
    sigmas: tuple[GroupElement, ...]
    coset_reps: tuple[GroupElement, ...]
    label: str

    @property
    def dim(self) -> int:
        return len(self.sigmas) * self.rep.degree


class YDModule:
    """A finite direct sum of irreducible Yetter-Drinfeld modules over D_m."""

    def __init__(self, group: DihedralGroup, summands: Sequence[YDSummand]):
        self.group = group
        self.summands = tuple(summands)
        basis = []
        for si, summand in enumerate(self.summands):
            for ci in range(len(summand.sigmas)):
                for vi in range(summand.rep.degree):
                    basis.append((si, ci, vi))
        self.basis = tuple(basis)
        self._index = {b: i for i, b in enumerate(basis)}
        self._sigma_index = [
            {sig: i for i, sig in enumerate(s.sigmas)} for s in self.summands
        ]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def label(self) -> str:
        return " + ".join(s.label for s in self.summands)

    def degree(self, idx: int) -> GroupElement:
        si, ci, _ = self.basis[idx]
        return self.summands[si].sigmas[ci]

    def act(self, g: GroupElement, idx: int) -> tuple[int, RootPower]:
        """g . e_idx as (target index, coefficient); actions here are monomial."""
        si, ci, vi = self.basis[idx]
        summand = self.summands[si]
        u = g * summand.coset_reps[ci]
        sigma = summand.sigmas[0]
        target_sigma = u * sigma * u.inverse()
        cj = self._sigma_index[si][target_sigma]
        gamma = summand.coset_reps[cj].inverse() * u
        row, scalar = summand.rep.monomial_action(gamma)[vi]
        return self._index[(si, cj, row)], scalar

    def braid(self, a: int, b: int) -> tuple[tuple[int, int], RootPower]:
        """c(e_a (x) e_b) = coeff * (e_b' (x) e_a)."""
        b2, coeff = self.act(self.degree(a), b)
        return (b2, a), coeff

    def summand_scalar(self, si: int) -> RootPower:
        """The scalar by which sigma acts on its own block (Schur's lemma)."""
        summand = self.summands[si]
        sigma = summand.sigmas[0]
        action = summand.rep.monomial_action(sigma)
        scalars = set()
        for col, (row, scalar) in enumerate(action):
            if row != col:
                raise DomainError(
                    f"{summand.label}: sigma does not act diagonally on the block"
                )
            scalars.add(scalar)
        if len(scalars) != 1:
            raise DomainError(f"{summand.label}: sigma does not act by a scalar")
        return scalars.pop()

    def basis_range(self, si: int) -> range:
        start = self._index[(si, 0, 0)]
        return range(start, start + self.summands[si].dim)

    def __repr__(self):
        return f"YDModule(D_{self.group.m}, {self.label}, dim={self.dim})"


def induce(G: DihedralGroup, cls: ConjugacyClass, rep) -> YDModule:
    """The irreducible module M(O, rho); rho must represent the centralizer of O."""
    cent = centralizer(G, cls.representative)
    if not hasattr(rep, "monomial_action") or not rep.domain_matches(cent.elements):
        raise DomainError(
            f"{rep!r} is not a representation of the centralizer of {cls.representative}"
        )
    sigma = cls.representative
    sigmas = (sigma,) + tuple(x for x in cls.elements if x != sigma)
    coset_reps = []
    for target in sigmas:
        g = next(g for g in sorted(G.elements()) if g * sigma * g.inverse() == target)
        coset_reps.append(g)
    label = f"M({cls.name}, {rep.name})"
    summand = YDSummand(cls, rep, sigmas, tuple(coset_reps), label)
    return YDModule(G, (summand,))


def direct_sum(modules: Sequence[YDModule]) -> YDModule:
    if not modules:
        raise DomainError("direct sum needs at least one module")
    group = modules[0].group
    if any(mod.group != group for mod in modules):
        raise DomainError("summands live over different groups")
    summands = [s for mod in modules for s in mod.summands]
    return YDModule(group, summands)


@dataclass(frozen=True)
class BraidingData:
    module: YDModule
    is_diagonal: bool
    matrix: Optional[tuple[tuple[RootPower, ...], ...]]


def braiding(M: YDModule) -> BraidingData:
    """Braiding on all basis pairs; matrix Q is set when c is diagonal."""
    d = M.dim
    rows = []
    diagonal = True
    for a in range(d):
        row = []
        for b in range(d):
            (b2, _a2), coeff = M.braid(a, b)
            if b2 != b:
                diagonal = False
            row.append(coeff)
        rows.append(tuple(row))
    return BraidingData(M, diagonal, tuple(rows) if diagonal else None)


@dataclass(frozen=True)
class DynkinDiagram:
    vertices: tuple[RootPower, ...]
    edges: tuple[tuple[int, int, RootPower], ...]


def dynkin_diagram(Q: BraidingData | Sequence[Sequence[RootPower]]) -> DynkinDiagram:
    """Vertices q_ii and edges (i, j, q_ij q_ji) whenever that product is not 1."""
    if isinstance(Q, BraidingData):
        if not Q.is_diagonal:
            raise DomainError("generalized Dynkin diagram needs a diagonal braiding")
        matrix = Q.matrix
    else:
        matrix = Q
    d = len(matrix)
    vertices = tuple(matrix[i][i] for i in range(d))
    edges = []
    for i in range(d):
        for j in range(i + 1, d):
            label = matrix[i][j] * matrix[j][i]
            if not label.is_one:
                edges.append((i, j, label))
    return DynkinDiagram(vertices, tuple(edges))


def yang_baxter_holds(M: YDModule) -> bool:
    """Exact check of c1 c2 c1 = c2 c1 c2 on M (x) M (x) M."""
    d = M.dim

    def c12(state):
        (a, b, c), coeff = state
        (b2, a2), k = M.braid(a, b)
        return (b2, a2, c), coeff * k

    def c23(state):
        (a, b, c), coeff = state
        (c2, b2), k = M.braid(b, c)
        return (a, c2, b2), coeff * k

    one = RootPower(M.group.m, 0)
    for a in range(d):
        for b in range(d):
            for c in range(d):
                start = ((a, b, c), one)
                if c12(c23(c12(start))) != c23(c12(c23(start))):
                    return False
    return True


@dataclass(frozen=True)
class Finite:
    dimension: int

    @property
    def is_finite(self) -> bool:
        return True


@dataclass(frozen=True)
class Infinite:
    rule: str  # RealClassScalar | TypeD | RomboDiagram
    summands: tuple[str, ...]
    witness: object

    @property
    def is_finite(self) -> bool:
        return False


def nichols_dimension(M: YDModule) -> Finite | Infinite:
    """Decide dim B(M) for M over D_m, m = 4t >= 12.

    Finite(2^dim M) exactly when the braiding is -flip; otherwise the
    certificate names the rule that forces infinite dimension: a type-D
    class, a real-class scalar different from -1, or an edge in the
    generalized Dynkin diagram (a 4-cycle of the excluded shape).
    """
    G = M.group
    G.require_classification_modulus()
    if not M.summands:
        raise DomainError("empty module")

    for si, summand in enumerate(M.summands):
        if summand.cls.is_reflection_class:
            verdict, witness = is_type_D(G, summand.cls)
            if not verdict:
                raise RuntimeError(
                    f"reflection class {summand.cls.name} unexpectedly not of type D"
                )
            return Infinite("TypeD", (summand.label,), witness)

    for si, summand in enumerate(M.summands):
        scalar = M.summand_scalar(si)
        # every conjugacy class of D_m is real, so the scalar must be -1
        if scalar.classify() is not RootKind.MINUS_ONE:
            return Infinite("RealClassScalar", (summand.label,), scalar)

    data = braiding(M)
    if not data.is_diagonal:
        raise RuntimeError("rotation-class braiding unexpectedly non-diagonal")
    Q = data.matrix
    for i in range(M.dim):
        if not Q[i][i].is_minus_one:
            return Infinite(
                "RealClassScalar", (M.summands[M.basis[i][0]].label,), Q[i][i]
            )
    for i in range(M.dim):
        for j in range(i + 1, M.dim):
            label = Q[i][j] * Q[j][i]
            if not label.is_one:
                si, sj = M.basis[i][0], M.basis[j][0]
                return Infinite(
                    "RomboDiagram",
                    (M.summands[si].label, M.summands[sj].label),
                    label,
                )
    return Finite(2**M.dim)


def module_for_class_rep(G: DihedralGroup, sigma: GroupElement, rep) -> YDModule:
    """Convenience: induce from the class of sigma."""
    return induce(G, class_of(G, sigma), rep)
