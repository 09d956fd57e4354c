"""The case decision tree: every exemplar lands on its displayed ring,
the cases partition the input space, and basis renamings are recorded."""

from sol3ring import SolGroupSpec, iter_valid_specs, validate
from sol3ring.classify import case_predicates, classify
from sol3ring.ringalg import GradedRingF2, mono, normalize, poly

torus = SolGroupSpec.mapping_torus
union = SolGroupSpec.twisted_union

RSP = (("rho", 1), ("sigma", 1), ("psi", 1))

# displayed relation ideals, keyed by case id; monomial indices follow the
# generator order given alongside
DISPLAYED = {
    "C1": ((("rho", 1), ("Xi", 2)),
           (poly(mono(0, 0)), poly(mono(1, 1)))),
    "C2": ((("rho", 1), ("sigma", 1), ("Xi", 2)),
           (poly(mono(0, 0)), poly(mono(0, 1)), poly(mono(1, 2)),
            poly(mono(0, 2), mono(1, 1, 1)), poly(mono(2, 2)))),
    "C3": ((("rho", 1), ("sigma", 1), ("Xi", 2), ("Omega", 2)),
           (poly(mono(0, 0)), poly(mono(0, 1)), poly(mono(1, 1)),
            poly(mono(0, 3)), poly(mono(1, 2)),
            poly(mono(0, 2), mono(1, 3)),
            poly(mono(2, 2)), poly(mono(3, 3)), poly(mono(2, 3)))),
    "C4": (RSP, (poly(mono(0, 0)), poly(mono(1, 1)), poly(mono(2, 2)))),
    "C5": (RSP, (poly(mono(0, 0)), poly(mono(0, 2), mono(1, 1)),
                 poly(mono(2, 2)))),
    "C6a": (RSP, (poly(mono(0, 0)), poly(mono(0, 2), mono(1, 1)),
                  poly(mono(0, 1), mono(2, 2)))),
    "C6b": (RSP, (poly(mono(0, 0)), poly(mono(0, 1), mono(1, 1)),
                  poly(mono(0, 2), mono(1, 1), mono(2, 2)))),
    "C6c": (RSP, (poly(mono(0, 0)), poly(mono(0, 2), mono(2, 2)),
                  poly(mono(0, 1), mono(1, 1), mono(2, 2)))),
    "C7": (RSP, (poly(mono(0, 0)), poly(mono(0, 1), mono(1, 1)),
                 poly(mono(0, 2), mono(2, 2)))),
    "C8a": (RSP, (poly(mono(0, 0)), poly(mono(1, 1)),
                  poly(mono(0, 2), mono(2, 2)))),
    "C8b": (RSP, (poly(mono(0, 0)), poly(mono(1, 1), mono(2, 2)),
                  poly(mono(0, 2), mono(2, 2)), poly(mono(1, 1, 2)))),
    "C8c": (RSP, (poly(mono(0, 0)), poly(mono(1, 1)),
                  poly(mono(0, 1), mono(0, 2), mono(2, 2)))),
    "C9": (RSP, (poly(mono(0, 0)), poly(mono(0, 2), mono(1, 1)),
                 poly(mono(0, 1), mono(0, 2), mono(2, 2)))),
    "Ub-odd": ((("U", 1), ("V", 1), ("Xi", 2), ("Omega", 2)),
               (poly(mono(0, 0)), poly(mono(0, 1)), poly(mono(1, 1)),
                poly(mono(0, 2), mono(1, 3)), poly(mono(0, 3)),
                poly(mono(1, 2)),
                poly(mono(2, 2)), poly(mono(3, 3)), poly(mono(2, 3)))),
    "Ub-0mod4": ((("U", 1), ("V", 1), ("Y", 1)),
                 (poly(mono(0, 1)), poly(mono(0, 0), mono(1, 1)),
                  poly(mono(0, 2), mono(1, 2), mono(2, 2)))),
    "Ub-2mod4": ((("U", 1), ("V", 1), ("Y", 1)),
                 (poly(mono(0, 1)), poly(mono(0, 0), mono(1, 1)),
                  poly(mono(0, 0), mono(0, 2), mono(1, 2), mono(2, 2)))),
}


def expected_ring(case):
    gens, rels = DISPLAYED[case]
    return GradedRingF2(generators=tuple(gens), relations=tuple(rels))


def test_exemplars_match_displayed_presentations(exemplars):
    for spec, case in exemplars:
        classified = classify(spec)
        assert classified.label.case_id == case, spec
        if spec == torus(3, 2, 2, 1):
            continue  # swap variant, checked separately below
        want = expected_ring(case)
        assert classified.ring.generators == want.generators, spec
        assert set(classified.ring.relations) == set(want.relations), spec
        assert classified.sc == normalize(want), spec


def test_swap_variant_restates_relations_in_original_basis():
    classified = classify(torus(3, 2, 2, 1))
    assert classified.label.case_id == "C9"
    assert "x-y swap" in classified.label.basis_note
    assert classified.h1_map == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    want = GradedRingF2(
        generators=RSP,
        relations=(poly(mono(0, 0)),
                   poly(mono(0, 1), mono(2, 2)),
                   poly(mono(0, 1), mono(0, 2), mono(1, 1))))
    assert set(classified.ring.relations) == set(want.relations)


def test_c5_basis_renamings():
    # psi already square-zero: identity map, no note
    classified = classify(torus(-7, -8, -6, -7))
    assert classified.label.case_id == "C5"
    assert classified.label.basis_note == ""
    assert classified.h1_map == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    # sigma is square-zero: sigma and psi trade places
    classified = classify(torus(5, 6, 4, 5))
    assert classified.label.case_id == "C5"
    assert "sigma and psi exchanged" in classified.label.basis_note
    assert classified.h1_map == ((1, 0, 0), (0, 0, 1), (0, 1, 0))

    # sigma+psi is square-zero: it is renamed psi
    classified = classify(torus(-5, -2, -2, -1))
    assert classified.label.case_id == "C5"
    assert "renamed psi" in classified.label.basis_note
    assert classified.h1_map == ((1, 0, 0), (0, 1, 0), (0, 1, 1))


def test_dims_and_w1():
    classified = classify(torus(0, 1, 1, 1))
    assert classified.label.case_id == "C1"
    assert classified.sc.dims == (1, 1, 1, 1)
    assert classified.w1 == (1,)

    classified = classify(union(1, 2, 1, 3))
    assert classified.sc.dims == (1, 3, 3, 1)
    assert classified.w1 == (0, 0, 0)


def test_cases_partition_the_inputs():
    for spec in iter_valid_specs(4):
        inv = validate(spec)
        fired = [case for case, hit in case_predicates(spec, inv) if hit]
        assert len(fired) == 1, (spec, fired)
        assert classify(spec).label.case_id == fired[0]


def test_beta_matches_case_shape():
    for spec in list(iter_valid_specs(3))[::5]:
        inv = validate(spec)
        classified = classify(spec)
        assert classified.sc.dims == (1, inv.beta, inv.beta, 1)
        assert len(classified.h1_map) == inv.beta
