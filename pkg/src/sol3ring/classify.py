"""Decision tree from group data to the mod-2 cohomology ring.

Each valid input lands in exactly one case; the case determines a
presentation of H^*(pi; F2) in coordinates adapted to the fixed H^1
basis.  Two reorientations can occur, both recorded in basis_note: in
case 5 the degree-1 generators sigma and psi are relabeled so that the
unique square-zero class among {sigma, psi, sigma+psi} is named psi,
and for non-orientable inputs with a = 3 mod 4 the classification runs
on the x-y swapped monodromy, with the resulting relations restated in
the caller's original coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ringalg import (
    GradedRingF2,
    StructureConstants,
    normalize,
    pd_check,
    poly,
    wu_check,
)
from .solgroup import (
    UNION,
    GroupInvariants,
    SolGroupSpec,
    h1_basis,
    square_test,
    validate,
)


@dataclass(frozen=True)
class CaseLabel:
    family: str
    case_id: str
    basis_note: str


@dataclass(frozen=True)
class ClassifiedRing:
    spec: SolGroupSpec
    label: CaseLabel
    ring: GradedRingF2
    sc: StructureConstants
    w1: tuple[int, ...]
    h1_map: tuple[tuple[int, ...], ...]
    """Rows express each degree-1 ring generator over the H1Basis classes."""


_G_RHO_XI = (("rho", 1), ("Xi", 2))
_G_RHO_SIGMA_XI = (("rho", 1), ("sigma", 1), ("Xi", 2))
_G_RHO_SIGMA_XI_OMEGA = (("rho", 1), ("sigma", 1), ("Xi", 2), ("Omega", 2))
_G_RSP = (("rho", 1), ("sigma", 1), ("psi", 1))
_G_UV_XI_OMEGA = (("U", 1), ("V", 1), ("Xi", 2), ("Omega", 2))
_G_UVY = (("U", 1), ("V", 1), ("Y", 1))


def _ring_c1() -> GradedRingF2:
    return GradedRingF2(_G_RHO_XI, (poly((0, 0)), poly((1, 1))))


def _ring_c2() -> GradedRingF2:
    return GradedRingF2(_G_RHO_SIGMA_XI, (
        poly((0, 0)), poly((0, 1)), poly((1, 2)),
        poly((0, 2), (1, 1, 1)), poly((2, 2)),
    ))


def _ring_c3() -> GradedRingF2:
    return GradedRingF2(_G_RHO_SIGMA_XI_OMEGA, (
        poly((0, 0)), poly((0, 1)), poly((1, 1)),
        poly((0, 3)), poly((1, 2)), poly((0, 2), (1, 3)),
        poly((2, 2)), poly((3, 3)), poly((2, 3)),
    ))


def _ring_beta3(*relations) -> GradedRingF2:
    return GradedRingF2(_G_RSP, tuple(relations))


def _ring_c4() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((1, 1)), poly((2, 2)))


def _ring_c5() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((0, 2), (1, 1)), poly((2, 2)))


def _ring_c6a() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((0, 2), (1, 1)), poly((0, 1), (2, 2)))


def _ring_c6b() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((0, 1), (1, 1)),
                       poly((0, 2), (1, 1), (2, 2)))


def _ring_c6c() -> GradedRingF2:
    return _mirror_sigma_psi(_ring_c6b())


def _ring_c7() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((0, 1), (1, 1)), poly((0, 2), (2, 2)))


def _ring_c8a() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((1, 1)), poly((0, 2), (2, 2)))


def _ring_c8b() -> GradedRingF2:
    # the degree-3 relation is redundant but kept as given
    return _ring_beta3(poly((0, 0)), poly((1, 1), (2, 2)),
                       poly((0, 2), (2, 2)), poly((1, 1, 2)))


def _ring_c8c() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((1, 1)),
                       poly((2, 2), (0, 1), (0, 2)))


def _ring_c9() -> GradedRingF2:
    return _ring_beta3(poly((0, 0)), poly((1, 1), (0, 2)),
                       poly((2, 2), (0, 1), (0, 2)))


def _ring_union_b_odd() -> GradedRingF2:
    # U*Omega and V*Xi vanish by duality, completing the degree-3 cut
    return GradedRingF2(_G_UV_XI_OMEGA, (
        poly((0, 0)), poly((0, 1)), poly((1, 1)),
        poly((0, 2), (1, 3)), poly((0, 3)), poly((1, 2)),
        poly((2, 2)), poly((3, 3)), poly((2, 3)),
    ))


def _ring_union_b_0mod4() -> GradedRingF2:
    return GradedRingF2(_G_UVY, (
        poly((0, 1)), poly((0, 0), (1, 1)),
        poly((0, 2), (1, 2), (2, 2)),
    ))


def _ring_union_b_2mod4() -> GradedRingF2:
    return GradedRingF2(_G_UVY, (
        poly((0, 1)), poly((0, 0), (1, 1)),
        poly((0, 2), (1, 2), (0, 0), (2, 2)),
    ))


def _mirror_sigma_psi(ring: GradedRingF2) -> GradedRingF2:
    """Exchange the roles of sigma and psi (generator indices 1 and 2)."""
    sub = {0: 0, 1: 2, 2: 1}
    rels = tuple(
        frozenset(tuple(sorted(sub[i] for i in m)) for m in r)
        for r in ring.relations
    )
    return GradedRingF2(ring.generators, rels)


def _identity_map(beta: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(beta)) for i in range(beta))


def _torus_case(spec: SolGroupSpec, inv: GroupInvariants):
    a, b, c = spec.a, spec.b, spec.c
    tau, eps = inv.tau, inv.eps
    if tau % 2 == 1:
        return "C1", _ring_c1(), "", _identity_map(1)
    if inv.delta2 % 2 == 1:
        if (tau - (eps - 1)) % 4 == 0:
            return "C2", _ring_c2(), "", _identity_map(2)
        return "C3", _ring_c3(), "", _identity_map(2)
    # delta2 even: beta = 3 and tau = eps + 1 mod 4
    assert (tau - (eps + 1)) % 4 == 0
    if inv.l >= 2:
        return "C4", _ring_c4(), "", _identity_map(3)
    if eps == 1:
        if inv.delta1 % 8 == 0:
            return ("C5",) + _orient_c5(spec)
        assert inv.delta1 % 8 == 4
        if a % 4 == 1:
            assert b % 4 == 2 and c % 4 == 2
            return "C6a", _ring_c6a(), "", _identity_map(3)
        if (b % 4, c % 4) == (2, 0):
            return "C6b", _ring_c6b(), "", _identity_map(3)
        if (b % 4, c % 4) == (0, 2):
            return "C6c", _ring_c6c(), "", _identity_map(3)
        assert b % 4 == 0 and c % 4 == 0
        return "C7", _ring_c7(), "", _identity_map(3)
    # eps = -1: l = 1 always, exactly one of a, d is 1 mod 4
    assert inv.l == 1 and tau % 4 == 0
    if a % 4 == 1:
        bt, ct = b % 4, c % 4
        note = ""
        mirror = False
    else:
        assert spec.d % 4 == 1
        bt, ct = c % 4, b % 4
        note = "classified via the x-y swap (a = 3 mod 4); relations restated in the original basis"
        mirror = True
    case_id, ring = {
        (0, 0): ("C8a", _ring_c8a()),
        (0, 2): ("C8b", _ring_c8b()),
        (2, 0): ("C8c", _ring_c8c()),
        (2, 2): ("C9", _ring_c9()),
    }[(bt, ct)]
    if mirror:
        ring = _mirror_sigma_psi(ring)
    return case_id, ring, note, _identity_map(3)


def _orient_c5(spec: SolGroupSpec):
    """Relabel so the square-zero class among sigma, psi, sigma+psi is psi."""
    basis = h1_basis(spec)
    zero = [coeffs for coeffs in ((0, 1, 0), (0, 0, 1), (0, 1, 1))
            if square_test(spec, basis.combine(coeffs))]
    assert len(zero) == 1, (spec, zero)
    which = zero[0]
    if which == (0, 0, 1):
        return _ring_c5(), "", _identity_map(3)
    if which == (0, 1, 0):
        note = "square-zero class is sigma; sigma and psi exchanged so it is named psi"
        h1_map = ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    else:
        note = "square-zero class is sigma+psi, renamed psi; ring basis is (rho, sigma, sigma+psi)"
        h1_map = ((1, 0, 0), (0, 1, 0), (0, 1, 1))
    return _ring_c5(), note, h1_map


def _union_case(spec: SolGroupSpec):
    if spec.b % 2 == 1:
        return "Ub-odd", _ring_union_b_odd(), _identity_map(2)
    if spec.b % 4 == 0:
        return "Ub-0mod4", _ring_union_b_0mod4(), _identity_map(3)
    return "Ub-2mod4", _ring_union_b_2mod4(), _identity_map(3)


def classify(spec: SolGroupSpec) -> ClassifiedRing:
    inv = validate(spec)
    if spec.family == UNION:
        case_id, ring, h1_map = _union_case(spec)
        note = ""
    else:
        case_id, ring, note, h1_map = _torus_case(spec, inv)
    sc = normalize(ring)
    assert sc.dims == (1, inv.beta, inv.beta, 1), (spec, sc.dims)
    w1 = inv.w1
    assert pd_check(sc), spec
    assert wu_check(sc, w1), spec
    return ClassifiedRing(spec, CaseLabel(spec.family, case_id, note),
                          ring, sc, w1, h1_map)


def case_predicates(spec: SolGroupSpec, inv: GroupInvariants) -> list[tuple[str, bool]]:
    """Each case predicate evaluated independently of the decision tree,
    for partition testing: exactly one should hold per valid spec."""
    if spec.family == UNION:
        b = spec.b
        return [
            ("Ub-odd", b % 2 == 1),
            ("Ub-0mod4", b % 4 == 0),
            ("Ub-2mod4", b % 2 == 0 and b % 4 == 2),
        ]
    a, b, c = spec.a, spec.b, spec.c
    tau, eps, d1, d2 = inv.tau, inv.eps, inv.delta1, inv.delta2
    even = d2 % 2 == 0
    if even and eps == -1:
        bt, ct = (b % 4, c % 4) if a % 4 == 1 else (c % 4, b % 4)
    else:
        bt = ct = None
    beta3_e1 = even and eps == 1
    return [
        ("C1", tau % 2 == 1),
        ("C2", tau % 2 == 0 and not even and (tau - eps + 1) % 4 == 0),
        ("C3", tau % 2 == 0 and not even and (tau - eps - 1) % 4 == 0),
        ("C4", even and inv.l >= 2),
        ("C5", beta3_e1 and inv.l == 1 and d1 % 8 == 0),
        ("C6a", beta3_e1 and inv.l == 1 and d1 % 8 == 4 and a % 4 == 1),
        ("C6b", beta3_e1 and inv.l == 1 and d1 % 8 == 4 and a % 4 == 3
         and (b % 4, c % 4) == (2, 0)),
        ("C6c", beta3_e1 and inv.l == 1 and d1 % 8 == 4 and a % 4 == 3
         and (b % 4, c % 4) == (0, 2)),
        ("C7", beta3_e1 and inv.l == 1 and d1 % 8 == 4 and a % 4 == 3
         and (b % 4, c % 4) == (0, 0)),
        ("C8a", even and eps == -1 and inv.l == 1 and (bt, ct) == (0, 0)),
        ("C8b", even and eps == -1 and inv.l == 1 and (bt, ct) == (0, 2)),
        ("C8c", even and eps == -1 and inv.l == 1 and (bt, ct) == (2, 0)),
        ("C9", even and eps == -1 and inv.l == 1 and (bt, ct) == (2, 2)),
    ]
