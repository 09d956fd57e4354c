"""Classifier-independent verification.

The key mechanism: a sum of cup products of degree-1 classes vanishes
in H^2 of a group exactly when the corresponding pulled-back central
extension by Z/2 splits, i.e. when the generator images lift to the
finite extension group.  This turns each candidate relation into a
finite, exact solvability question about the presentation, with no
resolutions and no coset enumeration.

The kernel of the cup map on the symmetric square of H^1 is found by
testing every nonzero candidate; triple products are then pinned by
linear constraints (kernel compatibility, the Wu identity) plus
nondegeneracy of the duality pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import ClassifiedRing
from .intlat import (
    AbelianGroup,
    cokernel,
    f2_in_span,
    f2_invert,
    f2_rank,
    f2_rref,
    solve_mod,
)
from .ringalg import (
    h1_square_relations,
    mul_h1_h2,
    pd_check,
    sym2_pairs,
    wu_check,
)
from .solgroup import (
    NotAClassError,
    Presentation,
    SolGroupSpec,
    abelianization,
    h1_basis,
    presentation,
    validate,
)


class NotApplicableError(ValueError):
    """Triple-product solving needs dim H^1 = 3."""


@dataclass(frozen=True)
class QuadraticCocycle:
    """Bilinear 2-cocycle c(v, w) = sum of v_i w_j over coeffs pairs
    (i <= j) on V = F2^k, encoding the candidate relation
    sum of phi_i phi_j."""

    k: int
    coeffs: frozenset[tuple[int, int]]

    def value(self, v: int, w: int) -> int:
        out = 0
        for i, j in self.coeffs:
            out ^= (v >> i) & (w >> j) & 1
        return out


@lru_cache(maxsize=4096)
def _cocycle_table(k: int, coeffs: frozenset) -> tuple[tuple[int, ...], ...]:
    c = QuadraticCocycle(k, coeffs)
    size = 1 << k
    return tuple(tuple(c.value(v, w) for w in range(size)) for v in range(size))


class ExtensionGroup:
    """Central extension of F2^k by Z/2 with multiplication twisted by a
    quadratic cocycle.  Elements are ints packing (v, s) as v | s << k;
    every element has order dividing 4."""

    def __init__(self, cocycle: QuadraticCocycle):
        self.k = cocycle.k
        self.cocycle = cocycle
        self._table = _cocycle_table(cocycle.k, cocycle.coeffs)
        self._vmask = (1 << cocycle.k) - 1

    def element(self, v: int, s: int) -> int:
        return (v & self._vmask) | ((s & 1) << self.k)

    def v_part(self, e: int) -> int:
        return e & self._vmask

    def s_part(self, e: int) -> int:
        return e >> self.k

    @property
    def identity(self) -> int:
        return 0

    def elements(self):
        return range(1 << (self.k + 1))

    def mul(self, e1: int, e2: int) -> int:
        v1, v2 = e1 & self._vmask, e2 & self._vmask
        s = (e1 >> self.k) ^ (e2 >> self.k) ^ self._table[v1][v2]
        return (v1 ^ v2) | (s << self.k)

    def inv(self, e: int) -> int:
        v = e & self._vmask
        s = (e >> self.k) ^ self._table[v][v]
        return v | (s << self.k)

    def pow(self, e: int, n: int) -> int:
        out = self.identity
        for _ in range(n % 4):
            out = self.mul(out, e)
        return out

    def order(self, e: int) -> int:
        out, n = e, 1
        while out != self.identity:
            out = self.mul(out, e)
            n += 1
        return n

    def evaluate_word(self, word, images) -> int:
        """Product over (generator, exponent) syllables, exponents mod 4."""
        out = self.identity
        for g, e in word:
            out = self.mul(out, self.pow(images[g], e))
        return out


def _check_genuine(pres: Presentation, gen_images, k: int) -> None:
    A = pres.abelianized()
    for bit in range(k):
        phi = [(gen_images[g] >> bit) & 1 for g in range(len(pres.generators))]
        for j in range(len(pres.relators)):
            if sum(A[g][j] * phi[g] for g in range(len(A))) % 2:
                raise NotAClassError(
                    f"component {bit} of the generator images is not a class")


def relation_vanishes(pres: Presentation, gen_images, c: QuadraticCocycle) -> bool:
    """Whether the pulled-back class of c vanishes, i.e. some lift of the
    generator images to the extension group kills every relator.

    Lifts differ from a base lift by central factors z^{s_g}, and z is
    central of order 2, so changing lifts shifts each relator value by
    z to the (sum of s_g times the exponent sum of g) power.  One
    evaluation per relator at the base lift plus F2 linear solvability
    therefore decides the question; the brute-force scan over all 2^n
    lifts gives the same answer and is kept as a test reference.
    """
    _check_genuine(pres, gen_images, c.k)
    G = ExtensionGroup(c)
    ngens = len(pres.generators)
    A = pres.abelianized()
    rows = []
    for j, word in enumerate(pres.relators):
        base = G.evaluate_word(word, [G.element(gen_images[g], 0) for g in range(ngens)])
        assert G.v_part(base) == 0
        shift = sum(((A[g][j] & 1) << g) for g in range(ngens))
        rows.append((shift, G.s_part(base)))
    # solvable iff augmenting by the constants does not raise the rank
    plain = f2_rank([r for r, _ in rows])
    augmented = f2_rank([r | (b << ngens) for r, b in rows])
    return plain == augmented


def relation_vanishes_bruteforce(pres: Presentation, gen_images,
                                 c: QuadraticCocycle) -> bool:
    _check_genuine(pres, gen_images, c.k)
    G = ExtensionGroup(c)
    ngens = len(pres.generators)
    for mask in range(1 << ngens):
        images = [G.element(gen_images[g], (mask >> g) & 1) for g in range(ngens)]
        if all(G.evaluate_word(w, images) == G.identity for w in pres.relators):
            return True
    return False


def _basis_images(pres: Presentation, vectors) -> list[int]:
    """Per generator, the bitmask whose bit i is the value of class i."""
    return [sum(vectors[i][g] << i for i in range(len(vectors)))
            for g in range(len(pres.generators))]


def kernel_of_squares(pres: Presentation, vectors) -> tuple[int, ...]:
    """Basis (rref masks over sym2_pairs) of the vanishing relations among
    the classes given by vectors, found by exhaustive candidate testing."""
    k = len(vectors)
    pairs = sym2_pairs(k)
    images = _basis_images(pres, vectors)
    vanishing = []
    for mask in range(1, 1 << len(pairs)):
        coeffs = frozenset(p for t, p in enumerate(pairs) if (mask >> t) & 1)
        if relation_vanishes(pres, images, QuadraticCocycle(k, coeffs)):
            vanishing.append(mask)
    span = f2_rref(vanishing)
    # the vanishing set must be exactly the nonzero part of a subspace
    assert len(vanishing) == (1 << len(span)) - 1, (vanishing, span)
    assert all(f2_in_span(v, span) for v in vanishing)
    return tuple(span)


def h2_kernel(spec: SolGroupSpec) -> tuple[int, ...]:
    """Kernel of the cup map on the symmetric square of H^1, in the fixed
    H^1 basis coordinates."""
    basis = h1_basis(spec)
    return kernel_of_squares(presentation(spec), basis.vectors)


def triple_solutions(spec: SolGroupSpec, kernel: tuple[int, ...],
                     w: tuple[int, ...]) -> tuple[int, ...]:
    """All symmetric trilinear forms on H^1 (as masks over degree-3
    monomials i <= j <= k) consistent with the kernel, the Wu identity
    for w, and nondegeneracy of the H^1 x H^2 pairing."""
    basis = h1_basis(spec)
    beta = len(basis.classes)
    if beta != 3:
        raise NotApplicableError(f"beta = {beta}, triple products need beta = 3")
    pairs = sym2_pairs(3)
    monos = [(i, j, k) for i in range(3) for j in range(i, 3) for k in range(j, 3)]
    mono_index = {m: t for t, m in enumerate(monos)}

    def mono_bit(i: int, j: int, k: int) -> int:
        return 1 << mono_index[tuple(sorted((i, j, k)))]

    constraint_rows = []
    for rel in kernel:
        for k in range(3):
            row = 0
            for t, (i, j) in enumerate(pairs):
                if (rel >> t) & 1:
                    row ^= mono_bit(i, j, k)
            constraint_rows.append(row)
    for j in range(3):
        for k in range(3):
            row = mono_bit(j, j, k) ^ mono_bit(j, k, k)
            for i in range(3):
                if w[i]:
                    row ^= mono_bit(i, j, k)
            constraint_rows.append(row)

    span = f2_rref(kernel)
    pivots = {r & -r for r in span}
    free_pairs = [pairs[t] for t in range(len(pairs)) if (1 << t) not in pivots]
    assert len(free_pairs) == 3

    survivors = []
    for mu in range(1 << len(monos)):
        if any((mu & row).bit_count() & 1 for row in constraint_rows):
            continue
        rows = []
        for k in range(3):
            rows.append(sum(
                ((mu >> mono_index[tuple(sorted((i, j, k)))]) & 1) << col
                for col, (i, j) in enumerate(free_pairs)))
        if f2_rank(rows) == 3:
            survivors.append(mu)
    return tuple(survivors)


@dataclass(frozen=True)
class OracleReport:
    h1_dim: int
    h1_agree: bool
    abelianization: AbelianGroup
    ab_agree: bool
    h2_kernel: tuple[int, ...]
    h2_classifier: tuple[int, ...]
    h2_agree: bool
    triple_status: str
    triple_count: int
    triple_agree: bool | None
    pd_ok: bool
    wu_ok: bool

    @property
    def agree(self) -> bool:
        checks = [self.h1_agree, self.ab_agree, self.h2_agree,
                  self.pd_ok, self.wu_ok]
        if self.triple_agree is not None:
            checks.append(self.triple_agree)
        return all(checks)


def _sym2_transform(mask: int, h1_map, beta: int) -> int:
    """Rewrite a quadratic form from ring-generator coordinates to
    H^1-basis coordinates through the linear map h1_map."""
    pairs = sym2_pairs(beta)
    pair_index = {p: t for t, p in enumerate(pairs)}
    out = 0
    for t, (i, j) in enumerate(pairs):
        if not (mask >> t) & 1:
            continue
        u, v = h1_map[i], h1_map[j]
        for p in range(beta):
            for q in range(beta):
                if u[p] & v[q]:
                    out ^= 1 << pair_index[(min(p, q), max(p, q))]
    return out


def _classifier_mu(classified: ClassifiedRing) -> int:
    """The classifier's trilinear form in H^1-basis coordinates, as a mask
    over degree-3 monomials."""
    sc = classified.sc
    beta = sc.dims[1]
    rows = [sum(classified.h1_map[i][j] << j for j in range(beta))
            for i in range(beta)]
    inv_rows = f2_invert(rows, beta)
    inv = [[(inv_rows[i] >> j) & 1 for j in range(beta)] for i in range(beta)]

    def mu_ring(i: int, j: int, k: int) -> int:
        ek = tuple(1 if t == k else 0 for t in range(beta))
        return mul_h1_h2(sc, ek, sc.mul12[i][j])[0]

    monos = [(i, j, k) for i in range(3) for j in range(i, 3) for k in range(j, 3)]
    mask = 0
    for t, (p, q, r) in enumerate(monos):
        val = 0
        for i in range(beta):
            if not inv[p][i]:
                continue
            for j in range(beta):
                if not inv[q][j]:
                    continue
                for k in range(beta):
                    if inv[r][k] and mu_ring(i, j, k):
                        val ^= 1
        if val:
            mask |= 1 << t
    return mask


def verify(spec: SolGroupSpec, classified: ClassifiedRing,
           triples: bool = True) -> OracleReport:
    """Recompute everything the classifier asserts, by independent means,
    and report agreement; disagreements are entries, not exceptions."""
    inv = validate(spec)
    basis = h1_basis(spec)
    pres = presentation(spec)
    A = pres.abelianized()
    At = [[A[g][j] for g in range(len(A))] for j in range(len(A[0]))]
    hom_basis = solve_mod(At, 2)
    h1_dim = len(hom_basis)
    masks = [sum(v[g] << g for g in range(len(v))) for v in basis.vectors]
    h1_agree = (h1_dim == len(basis.classes) == inv.beta
                and f2_rank(masks) == inv.beta)

    ab_smith = cokernel(A)
    ab_agree = ab_smith == inv.abelianization == abelianization(spec)

    kern = h2_kernel(spec)
    classifier_masks = [
        _sym2_transform(m, classified.h1_map, inv.beta)
        for m in h1_square_relations(classified.ring, inv.beta)
    ]
    h2_classifier = tuple(f2_rref(classifier_masks))
    h2_agree = h2_classifier == kern

    if triples and inv.beta == 3:
        w_orig = tuple(inv.w1)
        survivors = triple_solutions(spec, kern, w_orig)
        mu = _classifier_mu(classified)
        triple_count = len(survivors)
        triple_agree = mu in survivors
        triple_status = "unique" if triple_count == 1 else "multiple"
    else:
        triple_count = 0
        triple_agree = None
        triple_status = "not-applicable"

    return OracleReport(
        h1_dim=h1_dim,
        h1_agree=h1_agree,
        abelianization=ab_smith,
        ab_agree=ab_agree,
        h2_kernel=kern,
        h2_classifier=h2_classifier,
        h2_agree=h2_agree,
        triple_status=triple_status,
        triple_count=triple_count,
        triple_agree=triple_agree,
        pd_ok=pd_check(classified.sc),
        wu_ok=wu_check(classified.sc, classified.w1),
    )


def check_group_axioms(c: QuadraticCocycle) -> bool:
    """Exhaustive group-axiom check: associativity on all triples,
    two-sided identity and inverses, and every order dividing 4."""
    G = ExtensionGroup(c)
    els = list(G.elements())
    for e in els:
        if G.mul(G.identity, e) != e or G.mul(e, G.identity) != e:
            return False
        if G.mul(e, G.inv(e)) != G.identity or G.mul(G.inv(e), e) != G.identity:
            return False
        if 4 % G.order(e):
            return False
    return all(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
               for x in els for y in els for z in els)


def d8_presentation() -> Presentation:
    return Presentation(
        generators=("t", "y"),
        relators=(
            ((0, 2),),
            ((1, 4),),
            ((0, 1), (1, 1), (0, -1), (1, 1)),
        ),
    )


def e_presentation() -> Presentation:
    """The almost extraspecial group of order 16."""
    return Presentation(
        generators=("t", "u", "v"),
        relators=(
            ((0, 2),),
            ((1, 2), (2, -2)),
            ((0, 1), (1, 1), (0, -1), (1, 1)),
            ((0, 1), (2, 1), (0, -1), (2, -1)),
            ((1, 1), (2, 1), (1, -1), (2, -1)),
        ),
    )


def d8_kernel() -> tuple[int, ...]:
    return kernel_of_squares(d8_presentation(), ((1, 0), (0, 1)))


def e_kernel() -> tuple[int, ...]:
    return kernel_of_squares(e_presentation(), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
