"""Mod-2 cohomology rings and Borsuk-Ulam indices of closed Sol^3-manifolds.

Entry points: build a SolGroupSpec (mapping_torus or twisted_union),
then classify() for the ring, bu_rules() for the index table, and
verify() for the independent oracle run.
"""

from .buindex import (
    BUEntry,
    BUTable,
    CrossCheckMismatchError,
    ZeroClassError,
    bu_generic,
    bu_rules,
)
from .classify import CaseLabel, ClassifiedRing, classify
from .intlat import AbelianGroup, Mat2Z, SmithForm, cokernel, smith_normal_form, solve_mod
from .oracle import (
    ExtensionGroup,
    NotApplicableError,
    OracleReport,
    QuadraticCocycle,
    h2_kernel,
    relation_vanishes,
    triple_solutions,
    verify,
)
from .ringalg import (
    BadDimsError,
    GradedRingF2,
    NonHomogeneousError,
    StructureConstants,
    cube_table,
    normalize,
    pd_check,
    wu_check,
)
from .solgroup import (
    MAPPING_TORUS,
    UNION,
    BadShapeError,
    GroupInvariants,
    H1Basis,
    NotAClassError,
    NotSolError,
    NotUnionError,
    Presentation,
    SolGroupSpec,
    abelianization,
    double_cover_factorization,
    h1_basis,
    induced_monodromy,
    iter_valid_specs,
    presentation,
    realizable_trace,
    square_test,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "BUEntry", "BUTable", "BadDimsError", "BadShapeError",
    "CaseLabel", "ClassifiedRing", "CrossCheckMismatchError", "ExtensionGroup",
    "GradedRingF2", "GroupInvariants", "H1Basis", "MAPPING_TORUS", "Mat2Z",
    "NonHomogeneousError", "UNION",
    "NotAClassError", "NotApplicableError", "NotSolError", "NotUnionError",
    "OracleReport", "Presentation", "QuadraticCocycle", "SmithForm",
    "SolGroupSpec", "StructureConstants", "ZeroClassError", "abelianization",
    "bu_generic", "bu_rules", "classify", "cokernel", "cube_table",
    "double_cover_factorization", "h1_basis", "h2_kernel", "induced_monodromy",
    "iter_valid_specs", "normalize", "pd_check", "presentation",
    "realizable_trace", "relation_vanishes", "smith_normal_form", "solve_mod",
    "square_test", "triple_solutions", "validate", "verify", "wu_check",
]
