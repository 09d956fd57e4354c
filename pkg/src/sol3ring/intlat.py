"""Exact integer and mod-m linear algebra on small dense matrices.

Everything here runs on plain Python ints (arbitrary precision), with a
matrix held as a list of row lists.  Shapes stay tiny in this package
(nothing bigger than 4x4), so the implementations favour clarity and
verifiability over asymptotics.  The F2 helpers at the bottom pack row
vectors into ints, one bit per coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Matrix = list[list[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    assert all(len(row) == k for row in A)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_det(A: Matrix) -> int:
    """Determinant by cofactor expansion; fine for the n <= 4 used here."""
    n = len(A)
    if n == 0:
        return 1
    if n == 1:
        return A[0][0]
    total = 0
    for j in range(n):
        if A[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * mat_det(minor)
        total += term if j % 2 == 0 else -term
    return total


@dataclass(frozen=True)
class Mat2Z:
    """2x2 integer matrix with first row (a, c) and second row (b, d).

    The layout matches the torus-automorphism convention used throughout
    the package: acting on the standard generators of Z^2, the matrix
    sends x to x^a y^b and y to x^c y^d.  So (a, b) is the first column
    and (c, d) the second.
    """

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def rows(self) -> Matrix:
        return [[self.a, self.c], [self.b, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a}, {self.c}], [{self.b}, {self.d}]]"


@dataclass(frozen=True)
class SmithForm:
    """Diagonalization U * A * V = diag with unimodular U, V.

    diag holds the full diagonal of the reduced matrix: nonnegative,
    each entry divides the next, zeros trailing.  rank counts the
    nonzero entries.
    """

    diag: tuple[int, ...]
    rank: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion entries are >= 2 and each divides the next; unit factors
    are dropped.
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        assert all(t >= 2 for t in self.torsion)
        assert all(self.torsion[i + 1] % self.torsion[i] == 0
                   for i in range(len(self.torsion) - 1))

    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"


def _swap_rows(D: Matrix, U: Matrix, i: int, j: int) -> None:
    D[i], D[j] = D[j], D[i]
    U[i], U[j] = U[j], U[i]


def _add_row(D: Matrix, U: Matrix, i: int, src: int, q: int) -> None:
    # row_i += q * row_src
    D[i] = [x + q * y for x, y in zip(D[i], D[src])]
    U[i] = [x + q * y for x, y in zip(U[i], U[src])]


def _negate_row(D: Matrix, U: Matrix, i: int) -> None:
    D[i] = [-x for x in D[i]]
    U[i] = [-x for x in U[i]]


def _swap_cols(D: Matrix, V: Matrix, i: int, j: int) -> None:
    for row in D:
        row[i], row[j] = row[j], row[i]
    for row in V:
        row[i], row[j] = row[j], row[i]


def _add_col(D: Matrix, V: Matrix, j: int, src: int, q: int) -> None:
    # col_j += q * col_src
    for row in D:
        row[j] += q * row[src]
    for row in V:
        row[j] += q * row[src]


def smith_normal_form(A: Matrix) -> SmithForm:
    """Smith normal form with both transforms.

    Returns SmithForm(diag, rank, U, V) with U * A * V equal to the
    diagonal matrix; U and V are unimodular.  Classical pivoting: pull
    the smallest nonzero entry to the pivot, clear its row and column
    with exact quotients (remainders shrink the pivot), then repair
    divisibility by folding in any offending row.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    assert all(len(row) == n for row in A)
    D = [[int(x) for x in row] for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (piv is None or abs(D[i][j]) < abs(D[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv != (t, t):
            if piv[0] != t:
                _swap_rows(D, U, t, piv[0])
            if piv[1] != t:
                _swap_cols(D, V, t, piv[1])
        dirty = False
        for i in range(t + 1, m):
            if D[i][t]:
                q = D[i][t] // D[t][t]
                _add_row(D, U, i, t, -q)
                if D[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if D[t][j]:
                q = D[t][j] // D[t][t]
                _add_col(D, V, j, t, -q)
                if D[t][j]:
                    dirty = True
        if dirty:
            continue
        offender = None
        for i in range(t + 1, m):
            if any(D[i][j] % D[t][t] for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            _add_row(D, U, t, offender, 1)
            continue
        t += 1
    for i in range(min(m, n)):
        if D[i][i] < 0:
            _negate_row(D, U, i)
    diag = tuple(D[i][i] for i in range(min(m, n)))
    rank = sum(1 for x in diag if x)
    return SmithForm(diag, rank,
                     tuple(tuple(row) for row in U),
                     tuple(tuple(row) for row in V))


def cokernel(A: Matrix) -> AbelianGroup:
    """Cokernel of A acting on columns: Z^rows / (column span of A)."""
    m = len(A)
    sf = smith_normal_form(A)
    torsion = tuple(x for x in sf.diag if x >= 2)
    return AbelianGroup(m - sf.rank, torsion)


def solve_mod(A: Matrix, m: int) -> tuple[tuple[int, ...], ...]:
    """Generating set for the null space {v : A v = 0 mod m}.

    Works through the Smith form: with U A V = D the condition becomes
    d_i w_i = 0 mod m on w = V^-1 v, so each coordinate contributes the
    generator (m / gcd(d_i, m)) V e_i when that scale is nonzero mod m.
    Over F2 the result is a basis.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    rows = len(A)
    cols = len(A[0]) if rows else 0
    sf = smith_normal_form(A)
    V = sf.right
    gens = []
    for j in range(cols):
        d = sf.diag[j] if j < len(sf.diag) else 0
        scale = m // gcd(d, m)
        if scale % m == 0:
            continue
        gens.append(tuple((V[i][j] * scale) % m for i in range(cols)))
    return tuple(gens)


# ---------------------------------------------------------------------------
# F2 row vectors packed into ints, bit i = coordinate i.

def f2_reduce(v: int, rref: list[int]) -> int:
    for r in rref:
        if v & (r & -r):
            v ^= r
    return v


def f2_rref(rows) -> list[int]:
    """Reduced echelon basis of the span, pivots on lowest set bits."""
    piv: dict[int, int] = {}
    for v in rows:
        for b, r in piv.items():
            if v & b:
                v ^= r
        if v:
            b = v & -v
            for pb in list(piv):
                if piv[pb] & b:
                    piv[pb] ^= v
            piv[b] = v
    return [piv[b] for b in sorted(piv)]


def f2_rank(rows) -> int:
    return len(f2_rref(rows))


def f2_span_equal(rows1, rows2) -> bool:
    return f2_rref(rows1) == f2_rref(rows2)


def f2_in_span(v: int, rows) -> bool:
    return f2_reduce(v, f2_rref(rows)) == 0


def f2_invert(rows: list[int], n: int) -> list[int]:
    """Inverse of an n x n F2 matrix given as bitmask rows."""
    work = [rows[i] | (1 << (n + i)) for i in range(n)]
    used = [False] * n
    pivot_row = [0] * n
    for col in range(n):
        p = next((i for i in range(n) if not used[i] and (work[i] >> col) & 1), None)
        if p is None:
            raise ValueError("matrix is singular over F2")
        used[p] = True
        pivot_row[col] = p
        for i in range(n):
            if i != p and (work[i] >> col) & 1:
                work[i] ^= work[p]
    return [work[pivot_row[col]] >> n for col in range(n)]
