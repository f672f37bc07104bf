"""Combinatorics of the finite-dimensional classification over D_m, m = 4t.

The support set J = {(i, k) : w^(ik) = -1} indexes the two-dimensional
modules M_{i,k} over the rotation pair classes; the equivalence
(i,k) ~ (p,q) <=> w^(iq+pk) = 1 controls which direct sums stay
finite-dimensional.  Families:

  I-families: multisets of pairwise-equivalent J-pairs          (dim 4^|I|)
  L-families: multisets of odd l with 1 <= l < n                (dim 4^|L|)
  K-families: (I, L) with every k odd and (i, l) in J throughout (dim 4^(|I|+|L|))

Multiset reading: repeats are allowed, entries are kept sorted; pass
distinct_only=True for the set-only variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .dihedral import CyclicCharacter, DihedralGroup, Irrep, class_of
from .errors import DomainError
from .ydmod import Finite, YDModule, direct_sum, induce, nichols_dimension

__all__ = [
    "LabeledModule",
    "N_i",
    "are_equivalent",
    "build_M_I",
    "build_M_IL",
    "build_M_L",
    "enumerate_I",
    "enumerate_K",
    "enumerate_L",
    "equivalence_ball",
    "in_J",
    "support_J",
    "theorem_A_report",
]

Pair = tuple[int, int]


def _require_modulus(m: int) -> DihedralGroup:
    G = DihedralGroup(m)
    G.require_classification_modulus()
    return G


def in_J(m: int, pair: Pair) -> bool:
    i, k = pair
    n = m // 2
    return 1 <= i <= n - 1 and 1 <= k <= m - 1 and (i * k) % m == n


def support_J(m: int) -> list[Pair]:
    """All (i, k), 1 <= i <= n-1, 1 <= k <= m-1, with ik = n mod m."""
    _require_modulus(m)
    n = m // 2
    return [(i, k) for i in range(1, n) for k in range(1, m) if (i * k) % m == n]


def N_i(m: int, i: int) -> set[int]:
    """{k : 0 <= k <= m-1, chi_(k)(r^i) = -1} = solutions of ik = n mod m."""
    n = m // 2
    if not 1 <= i <= n - 1:
        raise DomainError(f"need 1 <= i <= n-1 = {n - 1}, got {i}")
    return {k for k in range(m) if (i * k) % m == n}


def are_equivalent(p1: Pair, p2: Pair, m: int) -> bool:
    """(i,k) ~ (p,q) iff iq + pk = 0 mod m; both pairs must lie in J."""
    for p in (p1, p2):
        if not in_J(m, p):
            raise DomainError(f"{p} is not in J for m = {m}")
    (i, k), (p, q) = p1, p2
    return (i * q + p * k) % m == 0


def equivalence_ball(m: int, pair: Pair) -> list[Pair]:
    """[i,k] = all J-pairs related to the given one.

    Caution: ~ is reflexive and symmetric on J but not transitive in
    general (m = 12 already has (3,2) ~ (3,6) ~ (1,6) with
    (3,2) !~ (1,6)), so these balls need not partition J.  Families are
    therefore enumerated as pairwise-related multisets, never via balls.
    """
    return [q for q in support_J(m) if are_equivalent(pair, q, m)]


def _sorted_multisets(items, compatible, size, distinct_only):
    def grow(prefix: tuple, start: int):
        if len(prefix) == size:
            yield prefix
            return
        for idx in range(start, len(items)):
            candidate = items[idx]
            if all(candidate in compatible[p] for p in prefix):
                yield from grow(prefix + (candidate,), idx + 1 if distinct_only else idx)

    yield from grow((), 0)


def enumerate_I(m: int, r_max: int, distinct_only: bool = False) -> Iterator[tuple[Pair, ...]]:
    """All I-families of size 1..r_max in canonical (size, lexicographic) order.

    An I-family is a multiset of J-pairs that are pairwise related under ~;
    the search extends sorted prefixes by pairwise-compatible entries.
    """
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1, got {r_max}")
    pairs = support_J(m)
    compatible = {p: {q for q in pairs if are_equivalent(p, q, m)} for p in pairs}
    for size in range(1, r_max + 1):
        yield from _sorted_multisets(pairs, compatible, size, distinct_only)


def enumerate_L(m: int, r_max: int, distinct_only: bool = False) -> Iterator[tuple[int, ...]]:
    """All L-families (multisets of odd 1 <= l < n) of size 1..r_max."""
    _require_modulus(m)
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1, got {r_max}")
    odd = [ell for ell in range(1, m // 2) if ell % 2]
    for size in range(1, r_max + 1):
        for combo in combinations_with_replacement(odd, size):
            if distinct_only and len(set(combo)) != size:
                continue
            yield tuple(combo)


def enumerate_K(
    m: int, r_max: int, distinct_only: bool = False
) -> Iterator[tuple[tuple[Pair, ...], tuple[int, ...]]]:
    """All (I, L) with |I|, |L| >= 1 and |I| + |L| <= r_max satisfying the K conditions."""
    if r_max < 2:
        return
    for I in enumerate_I(m, r_max - 1, distinct_only):
        if any(k % 2 == 0 for _, k in I):
            continue
        for L in enumerate_L(m, r_max - len(I), distinct_only):
            if all(in_J(m, (i, ell)) for i, _ in I for ell in L):
                yield I, L


def is_valid_I(m: int, I: Sequence[Pair]) -> bool:
    pairs = list(I)
    return bool(pairs) and all(in_J(m, p) for p in pairs) and all(
        are_equivalent(a, b, m) for a in pairs for b in pairs
    )


def is_valid_L(m: int, L: Sequence[int]) -> bool:
    n = m // 2
    return bool(L) and all(1 <= ell < n and ell % 2 for ell in L)


def is_valid_K(m: int, I: Sequence[Pair], L: Sequence[int]) -> bool:
    return (
        is_valid_I(m, I)
        and is_valid_L(m, L)
        and all(k % 2 for _, k in I)
        and all(in_J(m, (i, ell)) for i, _ in I for ell in L)
    )


@dataclass(frozen=True)
class LabeledModule:
    """A direct sum with named generators: a/b per J-pair, c/d per odd l."""

    module: YDModule
    labels: tuple[tuple[str, int], ...]
    I: tuple[Pair, ...]
    L: tuple[int, ...]

    def index_of(self, name: str) -> int:
        for label, idx in self.labels:
            if label == name:
                return idx
        raise KeyError(name)

    @property
    def label_map(self) -> dict[str, int]:
        return dict(self.labels)


def _occurrence_names(entries, base_names):
    """Names like a(1,6), with #2, #3 suffixes for repeated multiset entries."""
    counts: dict = {}
    out = []
    for entry in entries:
        counts[entry] = counts.get(entry, 0) + 1
        suffix = "" if counts[entry] == 1 else f"#{counts[entry]}"
        out.append([f"{base}{entry_str(entry)}{suffix}" for base in base_names])
    return out


def entry_str(entry) -> str:
    if isinstance(entry, tuple):
        return f"({entry[0]},{entry[1]})"
    return f"({entry})"


def _labeled(m: int, I: Sequence[Pair], L: Sequence[int]) -> LabeledModule:
    G = _require_modulus(m)
    I = tuple(sorted(I))
    L = tuple(sorted(L))
    blocks = []
    for i, k in I:
        blocks.append(induce(G, class_of(G, G.r(i)), CyclicCharacter(G, k)))
    for ell in L:
        blocks.append(induce(G, class_of(G, G.r(G.n)), Irrep(G, "two_dim", ell)))
    module = direct_sum(blocks)
    labels = []
    names_I = _occurrence_names(I, ("a", "b"))
    for bi, (a_name, b_name) in enumerate(names_I):
        base = module.basis_range(bi).start
        labels.append((a_name, base))
        labels.append((b_name, base + 1))
    names_L = _occurrence_names(L, ("c", "d"))
    for bj, (c_name, d_name) in enumerate(names_L):
        base = module.basis_range(len(I) + bj).start
        labels.append((c_name, base))
        labels.append((d_name, base + 1))
    return LabeledModule(module, tuple(labels), I, L)


def build_M_I(m: int, I: Sequence[Pair]) -> LabeledModule:
    if not is_valid_I(m, I):
        raise DomainError(f"{tuple(I)} is not an I-family for m = {m}")
    return _labeled(m, I, ())


def build_M_L(m: int, L: Sequence[int]) -> LabeledModule:
    if not is_valid_L(m, L):
        raise DomainError(f"{tuple(L)} is not an L-family for m = {m}")
    return _labeled(m, (), L)


def build_M_IL(m: int, I: Sequence[Pair], L: Sequence[int]) -> LabeledModule:
    if not is_valid_K(m, I, L):
        raise DomainError(f"({tuple(I)}, {tuple(L)}) is not a K-family for m = {m}")
    return _labeled(m, I, L)


def irreducible_survey(m: int) -> list[dict]:
    """Finite/infinite verdict for every irreducible M(O, rho) over D_m."""
    from .dihedral import centralizer_representations, conjugacy_classes

    G = _require_modulus(m)
    rows = []
    for cls in conjugacy_classes(G):
        for rep in centralizer_representations(G, cls):
            result = nichols_dimension(induce(G, cls, rep))
            row = {
                "class": cls.name,
                "class_size": cls.size,
                "rep": rep.name,
                "rep_degree": rep.degree,
            }
            if isinstance(result, Finite):
                row["verdict"] = "finite"
                row["dimension"] = result.dimension
            else:
                row["verdict"] = "infinite"
                row["certificate"] = result.rule
                row["witness"] = _witness_str(result.witness)
            rows.append(row)
    return rows


def _witness_str(witness) -> str:
    from .rack import TypeDWitness

    if isinstance(witness, TypeDWitness):
        return f"({witness.first}, {witness.second})"
    return str(witness)


def theorem_A_report(m: int, r_max: int) -> dict:
    """The full classification report: J, the N_i, all families, and Table-style verdicts."""
    G = _require_modulus(m)
    n, t = G.n, G.t
    families_I = [
        {"I": list(I), "dim_module": 2 * len(I), "dim_nichols": 4 ** len(I)}
        for I in enumerate_I(m, r_max)
    ]
    families_L = [
        {"L": list(L), "dim_module": 2 * len(L), "dim_nichols": 4 ** len(L)}
        for L in enumerate_L(m, r_max)
    ]
    families_K = [
        {
            "I": list(I),
            "L": list(L),
            "dim_module": 2 * (len(I) + len(L)),
            "dim_nichols": 4 ** (len(I) + len(L)),
        }
        for I, L in enumerate_K(m, r_max)
    ]
    return {
        "m": m,
        "n": n,
        "t": t,
        "J": support_J(m),
        "N": {i: sorted(N_i(m, i)) for i in range(1, n)},
        "odd_ells": [ell for ell in range(1, n) if ell % 2],
        "families": {"I": families_I, "L": families_L, "K": families_K},
        "irreducibles": irreducible_survey(m),
    }
