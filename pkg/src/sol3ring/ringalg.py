"""Bounded-degree engine for graded-commutative algebras over F2.

A ring is presented by generators of degree 1 or 2 and homogeneous
relations.  Since only degrees 0..3 are ever needed (top degree of a
closed 3-manifold), each graded piece is computed exactly: the span of
degree-n monomials modulo the span of all products (monomial times
relation) landing in degree n.  No Groebner machinery, just F2 row
reduction on bitmasks.

Monomials are sorted tuples of generator indices, so rho*sigma^2 with
rho = 0, sigma = 1 is (0, 1, 1).  A polynomial is a frozenset of
monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .intlat import f2_rank, f2_reduce, f2_rref

Monomial = tuple[int, ...]
Poly = frozenset[Monomial]


class NonHomogeneousError(ValueError):
    """A relation mixes monomials of different degrees."""


class BadDimsError(ValueError):
    """Structure constants do not have the (1, beta, beta, 1) shape."""


def mono(*indices: int) -> Monomial:
    return tuple(sorted(indices))


def poly(*monomials) -> Poly:
    return frozenset(tuple(sorted(m)) for m in monomials)


@dataclass(frozen=True)
class GradedRingF2:
    generators: tuple[tuple[str, int], ...]
    relations: tuple[Poly, ...]

    def degree_of(self, m: Monomial) -> int:
        return sum(self.generators[i][1] for i in m)

    def check_homogeneous(self) -> None:
        for r in self.relations:
            degs = {self.degree_of(m) for m in r}
            if len(degs) != 1:
                raise NonHomogeneousError(f"relation {poly_str(self, r)} mixes degrees {sorted(degs)}")

    def gen_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    def degree1_indices(self) -> tuple[int, ...]:
        return tuple(i for i, (_, d) in enumerate(self.generators) if d == 1)


def mono_str(ring: GradedRingF2, m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for i in sorted(set(m)):
        e = m.count(i)
        name = ring.generators[i][0]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def poly_str(ring: GradedRingF2, p: Poly) -> str:
    if not p:
        return "0"
    return " + ".join(mono_str(ring, m) for m in sorted(p))


def monomials_of_degree(ring: GradedRingF2, n: int) -> tuple[Monomial, ...]:
    """All degree-n monomials in graded lexicographic order."""
    if n == 0:
        return ((),)
    found = set()
    for size in range(1, n + 1):
        for combo in combinations_with_replacement(range(len(ring.generators)), size):
            if ring.degree_of(combo) == n:
                found.add(combo)
    return tuple(sorted(found))


@dataclass(frozen=True)
class StructureConstants:
    """Bases for degrees 0..3 and the multiplication tables in those bases.

    mul12[i][j] is the H^2 coordinate vector of gen_i * gen_j (both of
    degree 1); mul13[i][k] the H^3 coordinates of gen_i * basis2[k].
    cube maps each nonzero coefficient vector over the degree-1
    generators to the value of its cube in H^3, when dim H^3 = 1.
    """

    dims: tuple[int, int, int, int]
    monomials: tuple[tuple[Monomial, ...], ...]
    bases: tuple[tuple[str, ...], ...]
    mul12: tuple[tuple[tuple[int, ...], ...], ...]
    mul13: tuple[tuple[tuple[int, ...], ...], ...]
    cube: dict

    def pairing_matrix(self) -> list[list[int]]:
        d1 = self.dims[1]
        return [[self.mul13[i][k][0] if self.dims[3] == 1 else 0
                 for k in range(self.dims[2])] for i in range(d1)]


def _component(ring: GradedRingF2, n: int):
    """Quotient basis of degree n: (monomial list, rref of relation span,
    free monomial indices)."""
    monos = monomials_of_degree(ring, n)
    index = {m: i for i, m in enumerate(monos)}
    multiples = []
    for r in ring.relations:
        if not r:
            continue
        dr = ring.degree_of(next(iter(r)))
        if dr > n:
            continue
        for mult in monomials_of_degree(ring, n - dr):
            mask = 0
            for term in r:
                mask ^= 1 << index[tuple(sorted(mult + term))]
            multiples.append(mask)
    rref = f2_rref(multiples)
    pivots = {r & -r for r in rref}
    free = tuple(i for i in range(len(monos)) if (1 << i) not in pivots)
    return monos, rref, free


def _coords(index, rref, free, p: Poly) -> tuple[int, ...]:
    mask = 0
    for m in p:
        mask ^= 1 << index[m]
    mask = f2_reduce(mask, rref)
    return tuple((mask >> i) & 1 for i in free)


def normalize(ring: GradedRingF2) -> StructureConstants:
    """Structure constants of the presented ring through degree 3."""
    ring.check_homogeneous()
    per_degree = []
    for n in range(4):
        monos, rref, free = _component(ring, n)
        index = {m: i for i, m in enumerate(monos)}
        per_degree.append((monos, index, rref, free))
    dims = tuple(len(free) for _, _, _, free in per_degree)
    basis_monos = tuple(tuple(monos[i] for i in free)
                        for (monos, _, _, free) in per_degree)
    labels = tuple(tuple(mono_str(ring, m) for m in bm) for bm in basis_monos)

    deg1 = ring.degree1_indices()
    assert basis_monos[1] == tuple((g,) for g in deg1)
    _, idx2, rref2, free2 = per_degree[2]
    _, idx3, rref3, free3 = per_degree[3]
    mul12 = tuple(
        tuple(_coords(idx2, rref2, free2, poly((gi, gj))) for gj in deg1)
        for gi in deg1
    )
    mul13 = tuple(
        tuple(_coords(idx3, rref3, free3, poly(tuple(sorted((gi,) + m))))
              for m in basis_monos[2])
        for gi in deg1
    )
    cube = {}
    if dims[3] == 1:
        for v in range(1, 1 << dims[1]):
            coeffs = tuple((v >> i) & 1 for i in range(dims[1]))
            sq = _combine_rows([mul12[i][i] for i in range(dims[1]) if coeffs[i]],
                              dims[2])
            val = 0
            for i in range(dims[1]):
                if coeffs[i]:
                    for k in range(dims[2]):
                        if sq[k]:
                            val ^= mul13[i][k][0]
            cube[coeffs] = val
    return StructureConstants(dims, basis_monos, labels, mul12, mul13, cube)


def _combine_rows(rows, width: int) -> tuple[int, ...]:
    out = [0] * width
    for r in rows:
        out = [(x + y) % 2 for x, y in zip(out, r)]
    return tuple(out)


def mul_h1_h2(sc: StructureConstants, coeffs1, coeffs2) -> tuple[int, ...]:
    """H^3 coordinates of (sum coeffs1 over deg-1 gens) * (H^2 vector)."""
    out = [0] * sc.dims[3]
    for i in range(sc.dims[1]):
        if coeffs1[i]:
            for k in range(sc.dims[2]):
                if coeffs2[k]:
                    for s in range(sc.dims[3]):
                        out[s] ^= sc.mul13[i][k][s]
    return tuple(out)


def square_of(sc: StructureConstants, coeffs) -> tuple[int, ...]:
    """H^2 coordinates of phi^2; squaring is additive in characteristic 2."""
    return _combine_rows([sc.mul12[i][i] for i in range(sc.dims[1]) if coeffs[i]],
                         sc.dims[2])


def pd_check(sc: StructureConstants) -> bool:
    """Nondegeneracy of the H^1 x H^2 pairing into H^3."""
    d0, d1, d2, d3 = sc.dims
    if not (d0 == 1 and d3 == 1 and d1 == d2):
        raise BadDimsError(f"dims {sc.dims} are not (1, beta, beta, 1)")
    P = sc.pairing_matrix()
    rows = [sum(P[i][k] << k for k in range(d2)) for i in range(d1)]
    return f2_rank(rows) == d1


def wu_check(sc: StructureConstants, w) -> bool:
    """The degree-1 characteristic identity w*a*b = a^2 b + a b^2 on all
    basis pairs (bilinearity extends it to every pair of classes)."""
    d1 = sc.dims[1]
    assert len(w) == d1
    for i in range(d1):
        ei = tuple(1 if t == i else 0 for t in range(d1))
        for j in range(d1):
            ej = tuple(1 if t == j else 0 for t in range(d1))
            lhs = mul_h1_h2(sc, w, sc.mul12[i][j])
            rhs = tuple((x + y) % 2 for x, y in zip(
                mul_h1_h2(sc, ej, sc.mul12[i][i]),
                mul_h1_h2(sc, ei, sc.mul12[j][j])))
            if lhs != rhs:
                return False
    return True


def cube_table(sc: StructureConstants) -> dict:
    assert sc.dims[3] == 1
    return dict(sc.cube)


def sym2_pairs(beta: int) -> tuple[tuple[int, int], ...]:
    """Coordinate order on the symmetric square of H^1."""
    return tuple((i, j) for i in range(beta) for j in range(i, beta))


def h1_square_relations(ring: GradedRingF2, beta: int) -> tuple[int, ...]:
    """Relations lying in the symmetric square of H^1, as bitmasks over
    sym2_pairs(beta).  Relations involving degree-2 generators are not
    expressible there and are skipped."""
    deg1 = ring.degree1_indices()
    assert deg1 == tuple(range(beta))
    pair_index = {p: i for i, p in enumerate(sym2_pairs(beta))}
    out = []
    for r in ring.relations:
        if not r:
            continue
        if ring.degree_of(next(iter(r))) != 2:
            continue
        if not all(len(m) == 2 and m[0] < beta and m[1] < beta for m in r):
            continue
        mask = 0
        for m in r:
            mask ^= 1 << pair_index[m]
        out.append(mask)
    return tuple(out)
