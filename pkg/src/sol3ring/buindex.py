"""Borsuk-Ulam indices of degree-1 classes, two ways.

The generic definition: BU = 1 iff the class is the mod-2 reduction of
an integral class, BU = 3 iff its cube is nonzero, else BU = 2.  The
rule table reproduces the same values from per-case criteria; the two
computations run independently and any mismatch is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import ClassifiedRing
from .intlat import f2_in_span, f2_invert, smith_normal_form
from .ringalg import square_of
from .solgroup import MAPPING_TORUS, SolGroupSpec, h1_basis, presentation, square_test, validate


class ZeroClassError(ValueError):
    """The zero class has no Borsuk-Ulam index here."""


class CrossCheckMismatchError(AssertionError):
    def __init__(self, spec, case_id: str, name: str, rule_index: int, generic_index: int):
        super().__init__(
            f"{spec} [{case_id}] class {name}: rule table says {rule_index}, "
            f"generic definition says {generic_index}")
        self.spec = spec
        self.case_id = case_id
        self.name = name
        self.rule_index = rule_index
        self.generic_index = generic_index


@dataclass(frozen=True)
class BUEntry:
    coeffs: tuple[int, ...]
    name: str
    index: int
    rule_id: int
    generic_index: int


@dataclass(frozen=True)
class BUTable:
    entries: tuple[BUEntry, ...]

    def by_name(self) -> dict:
        return {e.name: e.index for e in self.entries}

    def indices(self) -> tuple[int, ...]:
        return tuple(e.index for e in self.entries)


def _integral_span_mod2(spec: SolGroupSpec) -> list[int]:
    """Mod-2 reductions of Hom(pi, Z), as generator-valuation bitmasks.

    With U A V = D for the abelianized relator matrix A, the integral
    null space of phi . A = 0 is spanned by the rows of U past the rank,
    so reducing those rows mod 2 spans the liftable classes.
    """
    A = presentation(spec).abelianized()
    sf = smith_normal_form(A)
    n = len(A)
    rows = []
    for i in range(n):
        d = sf.diag[i] if i < len(sf.diag) else 0
        if d == 0:
            rows.append(sum((sf.left[i][g] & 1) << g for g in range(n)))
    return rows


def _ring_coords(classified: ClassifiedRing, coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """Convert H^1-basis coefficients to ring-generator coefficients."""
    beta = len(coeffs)
    rows = [sum(classified.h1_map[i][j] << j for j in range(beta))
            for i in range(beta)]
    inv_rows = f2_invert(rows, beta)
    # p = r . M, so r = p . M^-1; inv_rows[i] is row i of M^-1
    out = 0
    for j in range(beta):
        if coeffs[j]:
            out ^= inv_rows[j]
    return tuple((out >> i) & 1 for i in range(beta))


def cube_of_class(classified: ClassifiedRing, coeffs: tuple[int, ...]) -> int:
    """phi^3 for phi given by H^1-basis coefficients."""
    r = _ring_coords(classified, coeffs)
    return classified.sc.cube[r]


def square_is_zero(classified: ClassifiedRing, coeffs: tuple[int, ...]) -> bool:
    r = _ring_coords(classified, coeffs)
    return not any(square_of(classified.sc, r))


def bu_generic(spec: SolGroupSpec, classified: ClassifiedRing,
               coeffs: tuple[int, ...]) -> int:
    """Index from the definition: 1 if integrally liftable, 3 if the cube
    is nonzero, else 2."""
    if not any(coeffs):
        raise ZeroClassError("BU index is defined for nonzero classes only")
    basis = h1_basis(spec)
    vec = basis.combine(coeffs)
    mask = sum(vec[g] << g for g in range(len(vec)))
    if f2_in_span(mask, _integral_span_mod2(spec)):
        return 1
    if cube_of_class(classified, coeffs):
        return 3
    return 2


def _rule_torus(spec: SolGroupSpec, classified: ClassifiedRing, inv,
                coeffs: tuple[int, ...], basis) -> tuple[int, int]:
    case = classified.label.case_id
    if coeffs == tuple([1] + [0] * (inv.beta - 1)):
        return 1, 1
    if case == "C2":
        return 2, 3
    if case in ("C3", "C4"):
        return 3, 2
    if case == "C5":
        lifts = square_test(spec, basis.combine(coeffs))
        return 4, 2 if lifts else 3
    if case == "C7":
        return 5, 2
    if case in ("C6a", "C6b", "C6c"):
        return 6, 2 if cube_of_class(classified, coeffs) == 0 else 3
    if case in ("C8a", "C8b", "C8c"):
        return 7, 2 if cube_of_class(classified, coeffs) == 0 else 3
    assert case == "C9"
    return 8, 3


def _rule_union(spec: SolGroupSpec, classified: ClassifiedRing,
                coeffs: tuple[int, ...], basis) -> tuple[int, int]:
    case = classified.label.case_id
    if case == "Ub-odd":
        return 9, 2
    if case == "Ub-0mod4":
        return 10, 2
    vec = basis.combine(coeffs)
    return 11, 2 if vec[2] == 0 else 3


def bu_rules(spec: SolGroupSpec, classified: ClassifiedRing) -> BUTable:
    """Full index table from the per-case rules, cross-checked against the
    generic definition class by class."""
    inv = validate(spec)
    basis = h1_basis(spec)
    entries = []
    for mask in range(1, 1 << inv.beta):
        coeffs = tuple((mask >> i) & 1 for i in range(inv.beta))
        if spec.family == MAPPING_TORUS:
            rule_id, index = _rule_torus(spec, classified, inv, coeffs, basis)
        else:
            rule_id, index = _rule_union(spec, classified, coeffs, basis)
        generic = bu_generic(spec, classified, coeffs)
        name = basis.combo_name(coeffs)
        if index != generic:
            raise CrossCheckMismatchError(spec, classified.label.case_id,
                                          name, index, generic)
        entries.append(BUEntry(coeffs, name, index, rule_id, generic))
    table = BUTable(tuple(entries))
    _check_counts(spec, classified, table)
    return table


def _check_counts(spec: SolGroupSpec, classified: ClassifiedRing, table: BUTable) -> None:
    case = classified.label.case_id
    non_rho = [e for e in table.entries if e.rule_id != 1]
    twos = sum(1 for e in non_rho if e.index == 2)
    threes = sum(1 for e in non_rho if e.index == 3)
    if case in ("C5", "C6a", "C6b", "C6c"):
        assert (twos, threes) == (2, 4), (spec, case, twos, threes)
    elif case in ("C8a", "C8b", "C8c"):
        assert (twos, threes) == (4, 2), (spec, case, twos, threes)
    if spec.family == MAPPING_TORUS:
        ones = [e.name for e in table.entries if e.index == 1]
        assert ones == ["rho"], (spec, ones)
    else:
        assert all(e.index != 1 for e in table.entries), spec
