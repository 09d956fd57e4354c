"""The two Sol^3 group families: validation, presentations, H^1, and the
degree-one matrix constructions.

A mapping torus is determined by its monodromy, given as the action
t x t^-1 = x^a y^b, t y t^-1 = x^c y^d; the twisted union of two
I-bundles over the Klein bottle is determined by the gluing data
(a, b, c, d) with ad - bc = +-1 and abcd != 0.  Everything downstream
(classification, oracles, Borsuk-Ulam indices) consumes the types
defined here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intlat import (
    AbelianGroup,
    Mat2Z,
    Matrix,
    cokernel,
    solve_mod,
)

MAPPING_TORUS = "mapping-torus"
UNION = "union"


class NotSolError(ValueError):
    """Monodromy data does not define a Sol mapping torus."""


class NotUnionError(ValueError):
    """Gluing data does not define a Sol twisted union."""


class NotAClassError(ValueError):
    """A purported H^1 class fails to kill the relators mod 2."""


class BadShapeError(ValueError):
    """Matrix not of the congruence form required for double covers."""


Word = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SolGroupSpec:
    family: str
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def mapping_torus(cls, a: int, b: int, c: int, d: int) -> "SolGroupSpec":
        return cls(MAPPING_TORUS, a, b, c, d)

    @classmethod
    def twisted_union(cls, a: int, b: int, c: int, d: int) -> "SolGroupSpec":
        return cls(UNION, a, b, c, d)

    def theta(self) -> Mat2Z:
        return Mat2Z(self.a, self.b, self.c, self.d)

    def params(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"{self.family}({self.a}, {self.b}, {self.c}, {self.d})"


@dataclass(frozen=True)
class Presentation:
    """Finite presentation with relators as words in the generators.

    A word is a sequence of (generator index, exponent) syllables,
    multiplied left to right.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def abelianized(self) -> Matrix:
        """Exponent-sum matrix, one row per generator, one column per relator."""
        rows = len(self.generators)
        A = [[0] * len(self.relators) for _ in range(rows)]
        for j, word in enumerate(self.relators):
            for g, e in word:
                A[g][j] += e
        return A


@dataclass(frozen=True)
class GroupInvariants:
    family: str
    eps: int
    tau: int | None
    delta1: int | None
    delta2: int | None
    k: int | None
    l: int | None
    orientable: bool
    abelianization: AbelianGroup
    beta: int
    w1: tuple[int, ...]


@dataclass(frozen=True)
class H1Basis:
    """Ordered basis of Hom(pi, F2), each class as its values on the
    presentation's generators."""

    classes: tuple[tuple[str, tuple[int, ...]], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.classes)

    @property
    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(v for _, v in self.classes)

    def combine(self, coeffs: tuple[int, ...]) -> tuple[int, ...]:
        """Generator-valuation vector of sum(coeffs[i] * basis[i])."""
        assert len(coeffs) == len(self.classes)
        n = len(self.classes[0][1])
        out = [0] * n
        for c, (_, v) in zip(coeffs, self.classes):
            if c & 1:
                out = [(x + y) % 2 for x, y in zip(out, v)]
        return tuple(out)

    def combo_name(self, coeffs: tuple[int, ...]) -> str:
        parts = [n for c, n in zip(coeffs, self.names) if c & 1]
        return "+".join(parts) if parts else "0"


def _v2(n: int) -> int:
    n = abs(n)
    assert n > 0
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def presentation(spec: SolGroupSpec) -> Presentation:
    a, b, c, d = spec.params()
    if spec.family == MAPPING_TORUS:
        return Presentation(
            generators=("t", "x", "y"),
            relators=(
                ((0, 1), (1, 1), (0, -1), (1, -a), (2, -b)),
                ((0, 1), (2, 1), (0, -1), (1, -c), (2, -d)),
                ((1, 1), (2, 1), (1, -1), (2, -1)),
            ),
        )
    return Presentation(
        generators=("u", "v", "y"),
        relators=(
            ((0, 1), (2, 1), (0, -1), (2, 1)),
            ((1, -2), (0, 2 * a), (2, b)),
            ((1, 1), (0, 2 * c), (2, d), (1, -1), (2, d), (0, 2 * c)),
        ),
    )


def _check_valid(spec: SolGroupSpec) -> None:
    a, b, c, d = spec.params()
    det = a * d - b * c
    if spec.family == MAPPING_TORUS:
        tau = a + d
        if det not in (1, -1):
            raise NotSolError(f"det {det} is not +-1 for {spec}")
        if det == 1 and abs(tau) <= 2:
            raise NotSolError(f"trace {tau} with det 1 is virtually nilpotent for {spec}")
        if det == -1 and tau == 0:
            raise NotSolError(f"trace 0 with det -1 is virtually nilpotent for {spec}")
    elif spec.family == UNION:
        if det not in (1, -1):
            raise NotUnionError(f"det {det} is not +-1 for {spec}")
        if a * b * c * d == 0:
            raise NotUnionError(f"zero entry makes {spec} flat, not Sol")
    else:
        raise ValueError(f"unknown family {spec.family!r}")


def is_valid(spec: SolGroupSpec) -> bool:
    try:
        _check_valid(spec)
    except (NotSolError, NotUnionError):
        return False
    return True


def abelianization(spec: SolGroupSpec) -> AbelianGroup:
    """H_1 in canonical form, computed from the closed form and from the
    Smith form of the abelianized relator matrix; the two must agree."""
    _check_valid(spec)
    a, b, c, d = spec.params()
    if spec.family == MAPPING_TORUS:
        eps = a * d - b * c
        tau = a + d
        delta1 = 1 - tau + eps
        delta2 = gcd(gcd(a - 1, b), gcd(c, d - 1))
        torsion = [t for t in (abs(delta2), abs(delta1) // abs(delta2)) if t >= 2]
        closed = AbelianGroup(1, tuple(torsion))
    else:
        if b % 2 == 1:
            closed = AbelianGroup(0, (4, 4 * abs(c)))
        else:
            closed = AbelianGroup(0, (2, 2, 4 * abs(c)))
    smith = cokernel(presentation(spec).abelianized())
    assert smith == closed, (spec, smith, closed)
    return closed


def validate(spec: SolGroupSpec) -> GroupInvariants:
    _check_valid(spec)
    a, b, c, d = spec.params()
    det = a * d - b * c
    ab = abelianization(spec)
    beta = ab.free_rank + sum(1 for t in ab.torsion if t % 2 == 0)
    assert beta in (1, 2, 3)
    if spec.family == MAPPING_TORUS:
        tau = a + d
        delta1 = 1 - tau + det
        delta2 = gcd(gcd(a - 1, b), gcd(c, d - 1))
        assert delta1 % (delta2 * delta2) == 0
        k = _v2(delta1)
        l = _v2(delta2)
        if delta2 % 2 == 0:
            assert 0 < l and 2 * l <= k
        orientable = det == 1
        w1 = tuple([0 if orientable else 1] + [0] * (beta - 1))
        return GroupInvariants(spec.family, det, tau, delta1, delta2, k, l,
                               orientable, ab, beta, w1)
    return GroupInvariants(spec.family, det, None, None, None, None, None,
                           True, ab, beta, tuple([0] * beta))


def h1_basis(spec: SolGroupSpec) -> H1Basis:
    """Basis of Hom(pi, F2) in the fixed naming convention.

    Mapping torus: rho is dual to t; with beta = 3 the triple
    (rho, sigma, psi) is dual to (t, x, y); with beta = 2 sigma spans
    the classes vanishing on t, cut out by (Theta - I)^T v = 0 mod 2.
    Union: b odd gives (U, V) with U(u) = 1, U(v) = a mod 2, V(v) = 1;
    b even gives the dual basis (U, V, Y).
    """
    inv = validate(spec)
    a = spec.a
    if spec.family == MAPPING_TORUS:
        if inv.beta == 1:
            classes = (("rho", (1, 0, 0)),)
        elif inv.beta == 3:
            classes = (("rho", (1, 0, 0)), ("sigma", (0, 1, 0)), ("psi", (0, 0, 1)))
        else:
            M = [[spec.a - 1, spec.b], [spec.c, spec.d - 1]]
            kernel = solve_mod(M, 2)
            assert len(kernel) == 1
            v = kernel[0]
            classes = (("rho", (1, 0, 0)), ("sigma", (0, v[0], v[1])))
    else:
        if spec.b % 2 == 1:
            classes = (("U", (1, a % 2, 0)), ("V", (0, 1, 0)))
        else:
            classes = (("U", (1, 0, 0)), ("V", (0, 1, 0)), ("Y", (0, 0, 1)))
    A = presentation(spec).abelianized()
    for _, vec in classes:
        assert _kills_relators_mod2(A, vec)
    return H1Basis(classes)


def _kills_relators_mod2(A: Matrix, phi) -> bool:
    cols = len(A[0]) if A else 0
    return all(sum(A[g][j] * phi[g] for g in range(len(A))) % 2 == 0
               for j in range(cols))


def square_test(spec: SolGroupSpec, phi: tuple[int, ...]) -> bool:
    """Whether phi^2 = 0 in H^2, i.e. whether phi lifts to a map to Z/4.

    phi is given by its values on the presentation's generators.  A lift
    assigns each generator one of the two preimages of phi(g) in Z/4;
    it is a homomorphism iff it kills the abelianized relators mod 4,
    so at most 2^#generators exact checks decide the question.
    """
    _check_valid(spec)
    A = presentation(spec).abelianized()
    n = len(A)
    if not _kills_relators_mod2(A, phi):
        raise NotAClassError(f"{phi} does not kill the relators of {spec} mod 2")
    cols = len(A[0])
    for mask in range(1 << n):
        lift = [phi[g] % 2 + 2 * ((mask >> g) & 1) for g in range(n)]
        if all(sum(A[g][j] * lift[g] for g in range(n)) % 4 == 0 for j in range(cols)):
            return True
    return False


def induced_monodromy(spec: SolGroupSpec) -> Mat2Z:
    """Monodromy of the double cover of a union: the action of uv on the
    translation subgroup spanned by x = u^2 and y."""
    _check_valid(spec)
    if spec.family != UNION:
        raise NotUnionError(f"{spec} is not a union")
    a, b, c, d = spec.params()
    eta = a * d - b * c
    s = a * d + b * c
    psi = Mat2Z(a=eta * s, b=eta * 2 * b * d, c=eta * 2 * a * c, d=eta * s)
    assert psi.det() == 1
    assert psi.a % 2 == 1 and psi.d % 2 == 1 and psi.b % 2 == 0 and psi.c % 2 == 0
    tr = psi.trace()
    assert tr % 4 == 2
    assert abs(tr) >= 6
    return psi


def double_cover_factorization(P: Mat2Z) -> SolGroupSpec:
    """Union data whose double cover has monodromy conjugate to P.

    P must be (2k+1, 2m; 2n, 2k+1) in SL(2,Z) with mn != 0, which
    forces k(k+1) = mn.  Splitting m = m1 m2 and n = n1 n2 with
    k = m1 n1 and k+1 = m2 n2 yields the gluing data
    (a, b, c, d) = (m1, -n2, -m2, n1); the smallest (m1, n1) in
    lexicographic order is returned.
    """
    if P.det() != 1:
        raise BadShapeError(f"{P} is not in SL(2,Z)")
    if P.a != P.d or P.a % 2 == 0 or P.b % 2 or P.c % 2:
        raise BadShapeError(f"{P} is not of the form (2k+1, 2m; 2n, 2k+1)")
    k = (P.a - 1) // 2
    m = P.c // 2
    n = P.b // 2
    if m * n == 0:
        raise BadShapeError(f"{P} has mn = 0 (virtually nilpotent)")
    assert k * (k + 1) == m * n
    # factorizations come in +- pairs, so positive m1 loses nothing
    for m1 in (x for x in range(1, abs(m) + 1) if m % x == 0):
        if k % m1:
            continue
        n1 = k // m1
        if n1 == 0 or n % n1:
            continue
        m2, n2 = m // m1, n // n1
        if m2 * n2 != k + 1:
            continue
        spec = SolGroupSpec.twisted_union(m1, -n2, -m2, n1)
        if is_valid(spec):
            return spec
    raise BadShapeError(f"no factorization of {P} found")


def realizable_trace(tau: int, eps: int) -> bool:
    """Whether some union's double-cover monodromy has trace tau, det eps."""
    return eps == 1 and abs(tau) > 2 and tau % 4 == 2


def iter_valid_specs(bound: int, family: str | None = None):
    """All valid specs with |a|,|b|,|c|,|d| <= bound, lexicographic in
    (a, b, c, d), mapping tori before unions when both families run."""
    families = [family] if family else [MAPPING_TORUS, UNION]
    r = range(-bound, bound + 1)
    for fam in families:
        for a in r:
            for b in r:
                for c in r:
                    for d in r:
                        spec = SolGroupSpec(fam, a, b, c, d)
                        if is_valid(spec):
                            yield spec
