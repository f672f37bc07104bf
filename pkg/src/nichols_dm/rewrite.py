"""Diamond-lemma verifier: confluent rewriting, dimension, Hopf checks.

Monomials are pairs (w, gamma): w a word in the skew-primitive letters,
gamma an element of D_m.  Multiplication moves group elements to the
right through the commutation rules (g v g^-1 = partner(v),
h v h^-1 = w^e v), so the group and commutation relations of a
presentation hold identically in this model; compile() verifies that and
orients only the quadratic relations.  Rewrite rules have pure skew-word
left-hand sides and strictly deglex-smaller right-hand sides under the
declared generator precedence, so reduction terminates and Bergman's
diamond lemma applies: once every overlap/inclusion ambiguity reduces to
zero, the irreducible monomials (square-free sorted words times group
elements) form a basis and their count certifies the dimension.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .cyclo import CycloNumber
from .dihedral import GroupElement
from .errors import CompletionError
from .lifting import Presentation, Relation

__all__ = [
    "CompletionCertificate",
    "DimensionResult",
    "HopfReport",
    "NormalBasis",
    "RewriteSystem",
    "certificate_json",
    "compile",
    "dimension",
    "hopf_check",
    "normal_basis",
    "skew_primitives",
]

Word = tuple[int, ...]
Monomial = tuple[Word, int]  # (skew word, encoded group element eps*m + rot)
Element = dict  # Monomial -> CycloNumber


@dataclass(frozen=True)
class CompletionCertificate:
    rule_count: int
    ambiguities_checked: int
    added_rules: int
    passes: int
    all_resolved: bool


class RewriteSystem:
    """A completed rewriting system for one presentation."""

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        self.m = presentation.m
        self.letters = tuple(v.name for v in presentation.skew_generators)
        self.letter_index = {name: i for i, name in enumerate(self.letters)}
        self.partner = tuple(
            self.letter_index[v.partner] for v in presentation.skew_generators
        )
        self.h_exp = tuple(v.h_exp for v in presentation.skew_generators)
        self.cop_exp = tuple(v.cop_exp for v in presentation.skew_generators)
        self.rules: dict[Word, Element] = {}
        self.certificate: Optional[CompletionCertificate] = None
        self._nf_cache: dict[Monomial, Element] = {}

    # -- group element encoding ------------------------------------------

    @property
    def group_order(self) -> int:
        return 2 * self.m

    def g_encode(self, eps: int, rot: int) -> int:
        return (eps & 1) * self.m + rot % self.m

    def g_mul(self, a: int, b: int) -> int:
        m = self.m
        e1, b1 = divmod(a, m)
        e2, b2 = divmod(b, m)
        rot = (b2 - b1) if e2 else (b1 + b2)
        return (e1 ^ e2) * m + rot % m

    def g_inv(self, a: int) -> int:
        eps, rot = divmod(a, self.m)
        return a if eps else (-rot) % self.m

    def g_element(self, a: int) -> GroupElement:
        eps, rot = divmod(a, self.m)
        return GroupElement(self.m, eps, rot)

    def conj_word(self, g: int, word: Word) -> tuple[int, Word]:
        """g . word = w^exp . word' . g; returns (exp, word')."""
        eps, rot = divmod(g, self.m)
        exp = 0
        out = []
        for letter in word:
            exp += self.h_exp[letter] * rot
            out.append(self.partner[letter] if eps else letter)
        return exp % self.m, tuple(out)

    # -- element arithmetic ------------------------------------------------

    def zero_el(self) -> Element:
        return {}

    def monomial(self, word: Iterable, eps: int = 0, rot: int = 0) -> Element:
        return {(tuple(word), self.g_encode(eps, rot)): CycloNumber.one(self.m)}

    def add_into(self, acc: Element, mono: Monomial, coeff: CycloNumber):
        new = acc.get(mono, CycloNumber.zero(self.m)) + coeff
        if new:
            acc[mono] = new
        else:
            acc.pop(mono, None)

    def el_add(self, a: Element, b: Element, scale=None) -> Element:
        out = dict(a)
        for mono, coeff in b.items():
            self.add_into(out, mono, coeff if scale is None else coeff * scale)
        return out

    def el_scale(self, a: Element, scale: CycloNumber) -> Element:
        if not scale:
            return {}
        return {mono: coeff * scale for mono, coeff in a.items()}

    def el_mul(self, a: Element, b: Element) -> Element:
        out: Element = {}
        for (w1, g1), c1 in a.items():
            for (w2, g2), c2 in b.items():
                exp, moved = self.conj_word(g1, w2)
                coeff = c1 * c2
                if exp:
                    coeff = coeff * CycloNumber.root(self.m, exp)
                self.add_into(out, (w1 + moved, self.g_mul(g1, g2)), coeff)
        return out

    # -- reduction ---------------------------------------------------------

    def _find_redex(self, word: Word, rightmost: bool = False):
        positions = range(len(word))
        if rightmost:
            positions = reversed(positions)
        for pos in positions:
            for length in self._lhs_lengths:
                if pos + length <= len(word) and word[pos : pos + length] in self.rules:
                    return pos, word[pos : pos + length]
        return None

    @property
    def _lhs_lengths(self):
        lengths = sorted({len(l) for l in self.rules}, reverse=True)
        return lengths

    def normal_form_monomial(self, mono: Monomial) -> Element:
        cached = self._nf_cache.get(mono)
        if cached is not None:
            return cached
        word, g = mono
        match = self._find_redex(word)
        if match is None:
            result = {mono: CycloNumber.one(self.m)}
        else:
            pos, lhs = match
            prefix, suffix = word[:pos], word[pos + len(lhs) :]
            result = {}
            for (v, delta), c in self.rules[lhs].items():
                exp, moved = self.conj_word(delta, suffix)
                coeff = c
                if exp:
                    coeff = coeff * CycloNumber.root(self.m, exp)
                new_mono = (prefix + v + moved, self.g_mul(delta, g))
                for m3, c3 in self.normal_form_monomial(new_mono).items():
                    self.add_into(result, m3, coeff * c3)
        self._nf_cache[mono] = result
        return result

    def reduce(self, el: Element) -> Element:
        out: Element = {}
        for mono, coeff in el.items():
            for m2, c2 in self.normal_form_monomial(mono).items():
                self.add_into(out, m2, coeff * c2)
        return out

    def reduce_with_strategy(self, el: Element, rightmost: bool) -> Element:
        """Uncached single-strategy reduction; used to cross-check confluence."""
        out: Element = {}
        work = list(el.items())
        while work:
            (word, g), coeff = work.pop()
            if not coeff:
                continue
            match = self._find_redex(word, rightmost=rightmost)
            if match is None:
                self.add_into(out, (word, g), coeff)
                continue
            pos, lhs = match
            prefix, suffix = word[:pos], word[pos + len(lhs) :]
            for (v, delta), c in self.rules[lhs].items():
                exp, moved = self.conj_word(delta, suffix)
                c2 = coeff * c
                if exp:
                    c2 = c2 * CycloNumber.root(self.m, exp)
                work.append(((prefix + v + moved, self.g_mul(delta, g)), c2))
        return out

    # -- rule management ---------------------------------------------------

    def _lead_word(self, el: Element) -> Word:
        return max((word for word, _ in el), key=lambda w: (len(w), w))

    def _orient(self, el: Element) -> tuple[Word, Element]:
        lead = self._lead_word(el)
        lead_terms = {g: c for (w, g), c in el.items() if w == lead}
        if len(lead_terms) != 1:
            raise CompletionError(
                "leading word carries a non-invertible group combination; "
                "cannot orient as a word rewrite rule",
                ambiguity=(lead, tuple(sorted(lead_terms))),
            )
        (gamma, coeff), = lead_terms.items()
        rhs: Element = {}
        inv_gamma = self.g_inv(gamma)
        inv_coeff = coeff.inverse()
        for (w, g), c in el.items():
            if w == lead:
                continue
            # divide on the right by coeff * gamma
            self.add_into(rhs, (w, self.g_mul(g, inv_gamma)), -(c * inv_coeff))
        for w, _ in rhs:
            if (len(w), w) >= (len(lead), lead):
                raise CompletionError(
                    f"oriented rule does not decrease the term order at {w}",
                    ambiguity=(lead, w),
                )
        return lead, rhs

    def _add_rule(self, lhs: Word, rhs: Element) -> list[Element]:
        """Install a rule; returns displaced rules re-queued as relations."""
        requeue = []
        shadowed = [
            l for l in self.rules if l != lhs and _contains(l, lhs)
        ]
        for l in shadowed:
            old_rhs = self.rules.pop(l)
            requeue.append(self.el_add(self.monomial(l), old_rhs, scale=-CycloNumber.one(self.m)))
        self.rules[lhs] = rhs
        self._nf_cache.clear()
        return requeue


def _contains(word: Word, sub: Word) -> bool:
    if len(sub) > len(word):
        return False
    return any(word[p : p + len(sub)] == sub for p in range(len(word) - len(sub) + 1))


def _relation_element(sys: RewriteSystem, rel: Relation) -> Element:
    el = sys.zero_el()
    for coeff, word in rel.lhs:
        term = sys.monomial(())
        for name in word:
            if name == "g":
                factor = sys.monomial((), eps=1)
            elif name == "h":
                factor = sys.monomial((), rot=1)
            else:
                factor = sys.monomial((sys.letter_index[name],))
            term = sys.el_mul(term, factor)
        el = sys.el_add(el, term, scale=coeff)
    for coeff, (eps, rot) in rel.rhs:
        sys.add_into(el, ((), sys.g_encode(eps, rot)), -coeff)
    return el


def _ambiguities(rules: dict) -> list[tuple]:
    words = sorted(rules, key=lambda w: (len(w), w))
    out = []
    for l1 in words:
        for l2 in words:
            for c in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - c :] == l2[:c]:
                    out.append(("overlap", l1, l2, c))
            if len(l2) < len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos : pos + len(l2)] == l2:
                        out.append(("inclusion", l1, l2, pos))
    return out


def _ambiguity_residue(sys: RewriteSystem, amb: tuple) -> Element:
    kind, l1, l2, c = amb
    if kind == "overlap":
        # w = l1 + tail = head + l2
        tail = l2[c:]
        head = l1[: len(l1) - c]
        left = sys.el_mul(sys.rules[l1], sys.monomial(tail))
        right = sys.el_mul(sys.monomial(head), sys.rules[l2])
    else:
        pos = c
        left = sys.rules[l1]
        right = sys.el_mul(
            sys.el_mul(sys.monomial(l1[:pos]), sys.rules[l2]),
            sys.monomial(l1[pos + len(l2) :]),
        )
    diff = sys.el_add(sys.reduce(left), sys.reduce(right), scale=-CycloNumber.one(sys.m))
    return sys.reduce(diff)


def compile(P: Presentation, overlap_budget: Optional[int] = None) -> RewriteSystem:
    """Orient the quadratic relations and complete until all ambiguities resolve.

    The group and commutation relations hold identically in the monomial
    model; compile() verifies that they evaluate to zero and then runs
    Knuth-Bendix/Buchberger style completion on the rest.  Completion
    failure (a hit budget, an unorientable residue) raises CompletionError;
    it is never silent.
    """
    sys = RewriteSystem(P)
    agenda: deque[Element] = deque()
    for rel in P.relations:
        el = _relation_element(sys, rel)
        structural = rel.label.startswith("group:") or rel.label.startswith("comm:")
        if structural:
            if el:
                raise CompletionError(
                    f"structural relation {rel.label} does not vanish in the "
                    "monomial model; presentation metadata is inconsistent",
                    ambiguity=rel.label,
                )
            continue
        agenda.append(el)

    added_rules = 0
    checked = 0
    passes = 0
    first_drain = True
    while True:
        passes += 1
        if passes > 64:
            raise CompletionError("completion did not stabilize within 64 passes")
        while agenda:
            el = sys.reduce(agenda.popleft())
            if not el:
                continue
            lhs, rhs = sys._orient(el)
            if lhs in sys.rules:
                residual = sys.el_add(sys.rules[lhs], rhs, scale=-CycloNumber.one(sys.m))
                if residual:
                    agenda.append(residual)
                continue
            agenda.extend(sys._add_rule(lhs, rhs))
            if not first_drain:
                added_rules += 1
        first_drain = False
        unresolved = 0
        for amb in _ambiguities(sys.rules):
            checked += 1
            if overlap_budget is not None and checked > overlap_budget:
                raise CompletionError(
                    "overlap budget exceeded during completion", ambiguity=amb
                )
            residue = _ambiguity_residue(sys, amb)
            if residue:
                unresolved += 1
                agenda.append(residue)
        if not unresolved:
            break
    sys.certificate = CompletionCertificate(
        rule_count=len(sys.rules),
        ambiguities_checked=checked,
        added_rules=added_rules,
        passes=passes,
        all_resolved=True,
    )
    return sys


compile_presentation = compile


@dataclass(frozen=True)
class NormalBasis:
    words: tuple[Word, ...]
    m: int

    @property
    def dimension(self) -> int:
        return len(self.words) * 2 * self.m

    def monomials(self) -> Iterable[Monomial]:
        for word in self.words:
            for g in range(2 * self.m):
                yield (word, g)


def normal_basis(R: RewriteSystem, budget: int = 1 << 20) -> NormalBasis:
    """Enumerate all irreducible words; raises if the count exceeds the budget."""
    if R.certificate is None or not R.certificate.all_resolved:
        raise CompletionError("rewriting system is not certified confluent")
    lhs = set(R.rules)
    maxlen = max((len(l) for l in lhs), default=1)
    words: list[Word] = []

    def extend(word: Word):
        if len(words) > budget:
            raise CompletionError(
                "normal-word enumeration exceeded the budget; "
                "the quotient is not finite-dimensional within bounds"
            )
        words.append(word)
        for letter in range(len(R.letters)):
            new = word + (letter,)
            if any(
                new[max(0, len(new) - L) :] in lhs for L in range(1, maxlen + 1)
            ):
                continue
            extend(new)

    extend(())
    return NormalBasis(tuple(words), R.m)


class DimensionResult(NamedTuple):
    dimension: int
    certificate: CompletionCertificate


def dimension(R: RewriteSystem) -> DimensionResult:
    """Dimension of the presented algebra, with the confluence certificate."""
    basis = normal_basis(R)
    return DimensionResult(basis.dimension, R.certificate)


# -- Hopf structure checks ---------------------------------------------------

Tensor = dict  # (Monomial, Monomial) -> CycloNumber


def _tensor_mul(R: RewriteSystem, t1: Tensor, t2: Tensor) -> Tensor:
    out: Tensor = {}
    for (a1, a2), c1 in t1.items():
        for (b1, b2), c2 in t2.items():
            leg1 = R.reduce(R.el_mul({a1: CycloNumber.one(R.m)}, {b1: CycloNumber.one(R.m)}))
            leg2 = R.reduce(R.el_mul({a2: CycloNumber.one(R.m)}, {b2: CycloNumber.one(R.m)}))
            for m1, d1 in leg1.items():
                for m2, d2 in leg2.items():
                    key = (m1, m2)
                    new = out.get(key, CycloNumber.zero(R.m)) + c1 * c2 * d1 * d2
                    if new:
                        out[key] = new
                    else:
                        out.pop(key, None)
    return out


def _delta_letter(R: RewriteSystem, name: str) -> Tensor:
    one = CycloNumber.one(R.m)
    if name == "g":
        g = ((), R.g_encode(1, 0))
        return {(g, g): one}
    if name == "h":
        h = ((), R.g_encode(0, 1))
        return {(h, h): one}
    v = R.letter_index[name]
    unit = ((), R.g_encode(0, 0))
    vm = ((v,), R.g_encode(0, 0))
    grp = ((), R.g_encode(0, R.cop_exp[v]))
    return {(vm, unit): one, (grp, vm): one}


def _delta_word(R: RewriteSystem, word: tuple[str, ...]) -> Tensor:
    unit = ((), R.g_encode(0, 0))
    out: Tensor = {(unit, unit): CycloNumber.one(R.m)}
    for name in word:
        out = _tensor_mul(R, out, _delta_letter(R, name))
    return out


def _delta_residue(R: RewriteSystem, rel: Relation) -> Tensor:
    out: Tensor = {}
    for coeff, word in rel.lhs:
        for key, c in _delta_word(R, word).items():
            new = out.get(key, CycloNumber.zero(R.m)) + coeff * c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    for coeff, (eps, rot) in rel.rhs:
        gm = ((), R.g_encode(eps, rot))
        key = (gm, gm)
        new = out.get(key, CycloNumber.zero(R.m)) - coeff
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def _antipode_letter(R: RewriteSystem, name: str) -> Element:
    if name == "g":
        return R.monomial((), eps=1)
    if name == "h":
        return R.monomial((), rot=-1)
    v = R.letter_index[name]
    el = R.el_mul(R.monomial((), rot=-R.cop_exp[v]), R.monomial((v,)))
    return R.el_scale(el, -CycloNumber.one(R.m))


def _antipode_word(R: RewriteSystem, word: tuple[str, ...]) -> Element:
    out = R.monomial(())
    for name in reversed(word):
        out = R.el_mul(out, _antipode_letter(R, name))
    return out


def _antipode_element(R: RewriteSystem, el: Element) -> Element:
    out: Element = {}
    for (word, g), coeff in el.items():
        term = {((), R.g_inv(g)): coeff}
        for letter in reversed(word):
            term = R.el_mul(term, _antipode_letter(R, R.letters[letter]))
        for mono, c in term.items():
            R.add_into(out, mono, c)
    return out


@dataclass(frozen=True)
class HopfReport:
    delta_ok: bool
    counit_ok: bool
    antipode_ok: bool
    failures: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return self.delta_ok and self.counit_ok and self.antipode_ok


def hopf_check(P: Presentation, R: RewriteSystem) -> HopfReport:
    """Verify that Delta, the counit and the antipode descend to the quotient."""
    if R.certificate is None or not R.certificate.all_resolved:
        raise CompletionError("hopf_check needs a certified system")
    failures = []
    delta_ok = True
    for rel in P.relations:
        residue = _delta_residue(R, rel)
        if residue:
            delta_ok = False
            failures.append(f"delta:{rel.label}:{_tensor_str(R, residue)}")
    counit_ok = True
    for rel in P.relations:
        residue = P.counit_residue(rel)
        if residue:
            counit_ok = False
            failures.append(f"counit:{rel.label}:{residue}")
    antipode_ok = True
    for rel in P.relations:
        el = R.zero_el()
        for coeff, word in rel.lhs:
            el = R.el_add(el, _antipode_word(R, word), scale=coeff)
        for coeff, (eps, rot) in rel.rhs:
            R.add_into(el, ((), R.g_inv(R.g_encode(eps, rot))), -coeff)
        residue = R.reduce(el)
        if residue:
            antipode_ok = False
            failures.append(f"antipode:{rel.label}:{_element_str(R, residue)}")
    # S(ab) = S(b) S(a) on all generator pairs, through normal forms
    gens = [R.monomial((), eps=1), R.monomial((), rot=1)] + [
        R.monomial((v,)) for v in range(len(R.letters))
    ]
    for a in gens:
        for b in gens:
            lhs = _antipode_element(R, R.reduce(R.el_mul(a, b)))
            rhs = R.el_mul(_antipode_element(R, b), _antipode_element(R, a))
            diff = R.el_add(R.reduce(lhs), R.reduce(rhs), scale=-CycloNumber.one(R.m))
            if R.reduce(diff):
                antipode_ok = False
                failures.append("antipode:antimultiplicative:generator pair")
    return HopfReport(delta_ok, counit_ok, antipode_ok, tuple(failures))


def _element_str(R: RewriteSystem, el: Element) -> str:
    parts = []
    for (word, g), coeff in sorted(el.items()):
        name = "*".join(R.letters[l] for l in word) or "1"
        parts.append(f"({coeff})*{name}*{R.g_element(g)}")
    return " + ".join(parts)


def _tensor_str(R: RewriteSystem, t: Tensor) -> str:
    parts = []
    for (m1, m2), coeff in sorted(t.items()):
        parts.append(f"({coeff})*[{m1}(x){m2}]")
    return " + ".join(parts)


def skew_primitives(R: RewriteSystem, degree: GroupElement) -> list[Element]:
    """Basis of the (degree, 1)-skew-primitive space on words of length <= 2.

    The trivial line k(1 - degree) and all pure-group monomials are
    quotiented away, so the group algebra alone yields the zero space.
    """
    if R.certificate is None or not R.certificate.all_resolved:
        raise CompletionError("skew_primitives needs a certified system")
    basis = normal_basis(R)
    d_enc = R.g_encode(degree.eps, degree.rot)
    unit = ((), R.g_encode(0, 0))
    d_mono = ((), d_enc)
    unknowns = [
        (word, g)
        for word in basis.words
        if 1 <= len(word) <= 2
        for g in range(2 * R.m)
    ]
    columns: dict[Monomial, Tensor] = {}
    for mono in unknowns:
        word, g = mono
        names = tuple(R.letters[l] for l in word)
        gamma = ((), g)
        t = _tensor_mul(R, _delta_word(R, names), {(gamma, gamma): CycloNumber.one(R.m)})
        # subtract mono (x) 1 and degree (x) mono
        for key in ((mono, unit), (d_mono, mono)):
            new = t.get(key, CycloNumber.zero(R.m)) - CycloNumber.one(R.m)
            if new:
                t[key] = new
            else:
                t.pop(key, None)
        columns[mono] = t
    coords = sorted({key for t in columns.values() for key in t})
    rows = []
    for coord in coords:
        row = {
            mono: t[coord]
            for mono, t in columns.items()
            if coord in t
        }
        if row:
            rows.append(row)
    return _nullspace(R.m, unknowns, rows)


def _nullspace(m: int, unknowns: list, rows: list[dict]) -> list[Element]:
    position = {u: i for i, u in enumerate(unknowns)}
    pivots: dict = {}  # pivot unknown -> normalized row
    for row in rows:
        row = dict(row)
        for pivot, prow in pivots.items():
            if pivot in row:
                factor = row.pop(pivot)
                for u, c in prow.items():
                    if u == pivot:
                        continue
                    new = row.get(u, CycloNumber.zero(m)) - factor * c
                    if new:
                        row[u] = new
                    else:
                        row.pop(u, None)
        if not row:
            continue
        pivot = min(row, key=position.__getitem__)
        inv = row[pivot].inverse()
        row = {u: c * inv for u, c in row.items()}
        # eliminate the new pivot from previous rows
        for prev_pivot, prow in list(pivots.items()):
            if pivot in prow:
                factor = prow.pop(pivot)
                for u, c in row.items():
                    if u == pivot:
                        continue
                    new = prow.get(u, CycloNumber.zero(m)) - factor * c
                    if new:
                        prow[u] = new
                    else:
                        prow.pop(u, None)
        pivots[pivot] = row
    free = [u for u in unknowns if u not in pivots]
    out = []
    for f in free:
        vec: Element = {f: CycloNumber.one(m)}
        for pivot, prow in pivots.items():
            if f in prow:
                vec[pivot] = -prow[f]
        out.append(vec)
    return out


def certificate_json(R: RewriteSystem) -> dict:
    """Serializable confluence certificate: rules, counts, dimension."""
    from .cyclo import format_scalar

    basis = normal_basis(R)
    rules = []
    for lhs in sorted(R.rules, key=lambda w: (len(w), w)):
        rhs = [
            [
                format_scalar(coeff),
                [R.letters[l] for l in word],
                [g // R.m, g % R.m],
            ]
            for (word, g), coeff in sorted(R.rules[lhs].items())
        ]
        rules.append({"lhs": [R.letters[l] for l in lhs], "rhs": rhs})
    cert = R.certificate
    return {
        "m": R.m,
        "letters": list(R.letters),
        "rules": rules,
        "rule_count": cert.rule_count,
        "ambiguities_checked": cert.ambiguities_checked,
        "added_rules": cert.added_rules,
        "all_resolved": cert.all_resolved,
        "normal_words": len(basis.words),
        "dimension": basis.dimension,
    }
