"""Exact computation with Nichols algebras and pointed Hopf algebras over D_m.

Scope: dihedral groups of order 2m with m = 4t, t >= 3.  The package
classifies the finite-dimensional Nichols algebras of Yetter-Drinfeld
modules over D_m, builds the quadratic Hopf-algebra presentations that
lift them, certifies dimensions by noncommutative rewriting (diamond
lemma), and computes isomorphism classes under the unit-group action.
All arithmetic is exact: rationals and roots of unity in Q(w_m).
"""

from .classify import (
    N_i,
    are_equivalent,
    build_M_I,
    build_M_IL,
    build_M_L,
    enumerate_I,
    enumerate_K,
    enumerate_L,
    support_J,
    theorem_A_report,
)
from .cyclo import (
    CycloNumber,
    RootKind,
    RootPower,
    cyclo_add,
    cyclo_inv,
    cyclo_mul,
    cyclotomic_polynomial,
    root_classify,
)
from .dihedral import (
    CyclicCharacter,
    DihedralGroup,
    GroupElement,
    Irrep,
    KleinFourCharacter,
    centralizer,
    class_of,
    conjugacy_classes,
    irreps,
)
from .errors import CompletionError, DomainError
from .iso import (
    UnitModM,
    act_ell,
    act_pair,
    is_isomorphic_A,
    is_isomorphic_B,
    iso_classes,
)
from .lifting import (
    LiftingDatum,
    Presentation,
    bosonization,
    presentation_A,
    presentation_B,
    theorem_B_catalogue,
)
from .rack import Rack, affine_rack, conjugation_rack, dihedral_rack, is_type_D
from .rewrite import (
    RewriteSystem,
    compile_presentation,
    dimension,
    hopf_check,
    normal_basis,
    skew_primitives,
)
from .ydmod import (
    Finite,
    Infinite,
    YDModule,
    braiding,
    direct_sum,
    dynkin_diagram,
    induce,
    nichols_dimension,
    yang_baxter_holds,
)

__all__ = [
    "CompletionError",
    "CyclicCharacter",
    "CycloNumber",
    "DihedralGroup",
    "DomainError",
    "Finite",
    "GroupElement",
    "Infinite",
    "Irrep",
    "KleinFourCharacter",
    "LiftingDatum",
    "N_i",
    "Presentation",
    "Rack",
    "RewriteSystem",
    "RootKind",
    "RootPower",
    "UnitModM",
    "YDModule",
    "act_ell",
    "act_pair",
    "affine_rack",
    "are_equivalent",
    "bosonization",
    "braiding",
    "build_M_I",
    "build_M_IL",
    "build_M_L",
    "centralizer",
    "class_of",
    "compile_presentation",
    "conjugacy_classes",
    "conjugation_rack",
    "cyclo_add",
    "cyclo_inv",
    "cyclo_mul",
    "cyclotomic_polynomial",
    "dihedral_rack",
    "dimension",
    "direct_sum",
    "dynkin_diagram",
    "enumerate_I",
    "enumerate_K",
    "enumerate_L",
    "hopf_check",
    "induce",
    "irreps",
    "is_isomorphic_A",
    "is_isomorphic_B",
    "is_type_D",
    "iso_classes",
    "nichols_dimension",
    "normal_basis",
    "presentation_A",
    "presentation_B",
    "root_classify",
    "skew_primitives",
    "support_J",
    "theorem_A_report",
    "theorem_B_catalogue",
    "yang_baxter_holds",
]

__version__ = "0.1.0"
