"""Exact integer matrices: Smith normal form, lattice arithmetic, symplectic pairing.

Everything is plain ``int`` arithmetic, so entries never overflow.  Matrices
here are small (a few dozen rows at most), and the algorithms favour
exactness and deterministic output over asymptotics.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence
from fractions import Fraction


class IntMatrix:
    """Immutable dense integer matrix stored as a tuple of row tuples."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        rows = tuple(tuple(int(e) for e in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows have unequal lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"rows have {width} entries, ncols={ncols}")
            ncols = width
        elif ncols is None:
            raise ValueError("a matrix with no rows needs an explicit ncols")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    def transpose(self) -> "IntMatrix":
        if self.nrows == 0:
            return IntMatrix([()] * self.ncols, 0)
        return IntMatrix(list(zip(*self.rows)) if self.ncols else [], self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        rows = [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows]
        return IntMatrix(rows, other.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        if not self.rows:
            return f"IntMatrix([], ncols={self.ncols})"
        return "IntMatrix(%r)" % [list(r) for r in self.rows]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def determinant(self) -> int:
        """Exact determinant (fraction-free Bareiss elimination)."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def stack_rows(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.ncols != b.ncols:
        raise ValueError(f"cannot stack {a.ncols}-column and {b.ncols}-column matrices")
    return IntMatrix(a.rows + b.rows, a.ncols)


def _smith_with_inverses(mat: IntMatrix):
    """Return (U, D, V, Uinv, Vinv) with U*mat*V = D in Smith normal form.

    Pivots are chosen by smallest nonzero absolute value, ties broken by
    lowest row then column, so the output is deterministic.
    """
    m, n = mat.nrows, mat.ncols
    d = [list(r) for r in mat.rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    uinv = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, q):
        # row_i += q * row_j
        di, dj = d[i], d[j]
        for k in range(n):
            di[k] += q * dj[k]
        ui, uj = u[i], u[j]
        for k in range(m):
            ui[k] += q * uj[k]
        for r in uinv:
            r[j] -= q * r[i]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(i, j, q):
        # col_i += q * col_j
        for r in d:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]
        vj, vi = vinv[j], vinv[i]
        for k in range(n):
            vj[k] -= q * vi[k]

    def find_pivot(t):
        best = None
        bi = bj = -1
        for i in range(t, m):
            row = d[i]
            for j in range(t, n):
                e = row[j]
                if e and (best is None or abs(e) < best):
                    best = abs(e)
                    bi, bj = i, j
        return None if best is None else (bi, bj)

    t = 0
    limit = min(m, n)
    while t < limit and find_pivot(t) is not None:
        while True:
            i, j = find_pivot(t)
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            if d[t][t] < 0:
                row_negate(t)
            p = d[t][t]
            for i in range(t + 1, m):
                if d[i][t]:
                    row_add(i, t, -(d[i][t] // p))
            for j in range(t + 1, n):
                if d[t][j]:
                    col_add(j, t, -(d[t][j] // p))
            if any(d[i][t] for i in range(t + 1, m)) or any(d[t][j] for j in range(t + 1, n)):
                continue  # leftover remainders become the next, smaller pivot
            bad = None
            for i in range(t + 1, m):
                row = d[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)  # pull the offending row up so gcd reduction kicks in
        t += 1
    return (
        IntMatrix(u, m),
        IntMatrix(d, n),
        IntMatrix(v, n),
        IntMatrix(uinv, m),
        IntMatrix(vinv, n),
    )


def smith_normal_form(mat: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """(U, D, V) with U, V unimodular and U*mat*V = D = diag(d1 | d2 | ...) >= 0."""
    u, d, v, _, _ = _smith_with_inverses(mat)
    return u, d, v


def _rank_of_smith(d: IntMatrix) -> int:
    return sum(1 for x in d.diagonal() if x)


def quotient_invariants(ambient_rank: int, mat: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion divisors of Z^ambient_rank / rowspan(mat)."""
    if mat.ncols != ambient_rank:
        raise ValueError(f"matrix has {mat.ncols} columns, ambient rank is {ambient_rank}")
    _, d, _ = smith_normal_form(mat)
    divisors = [x for x in d.diagonal() if x]
    return ambient_rank - len(divisors), tuple(x for x in divisors if x > 1)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b), g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def lattice_basis(mat: IntMatrix) -> IntMatrix:
    """Canonical basis (row Hermite form) of the lattice spanned by the rows.

    Rows are in pivot-column order with positive pivots; entries above a
    pivot are reduced into [0, pivot).  Two matrices span the same lattice
    iff their canonical bases are equal.
    """
    n = mat.ncols
    basis: list[list[int]] = []
    pivcol: list[int] = []
    for row in mat.rows:
        vec = list(row)
        while True:
            j = next((k for k, x in enumerate(vec) if x), None)
            if j is None:
                break
            pos = bisect_left(pivcol, j)
            if pos < len(pivcol) and pivcol[pos] == j:
                b = basis[pos]
                a, c = b[j], vec[j]
                if c % a == 0:
                    q = c // a
                    for k in range(j, n):
                        vec[k] -= q * b[k]
                else:
                    g, x, y = _xgcd(a, c)
                    qa, qc = a // g, c // g
                    basis[pos] = [x * b[k] + y * vec[k] for k in range(n)]
                    vec = [qa * vec[k] - qc * b[k] for k in range(n)]
            else:
                basis.insert(pos, vec)
                pivcol.insert(pos, j)
                break
    for idx in range(len(basis)):
        if basis[idx][pivcol[idx]] < 0:
            basis[idx] = [-x for x in basis[idx]]
    for idx in range(len(basis)):
        p = pivcol[idx]
        dpv = basis[idx][p]
        for above in range(idx):
            q = basis[above][p] // dpv
            if q:
                basis[above] = [basis[above][k] - q * basis[idx][k] for k in range(n)]
    return IntMatrix(basis, n)


def lattice_contains(mat: IntMatrix, vec: Sequence[int]) -> bool:
    """Is ``vec`` in the integer row span of ``mat``?"""
    if len(vec) != mat.ncols:
        raise ValueError(f"vector has length {len(vec)}, lattice lives in rank {mat.ncols}")
    basis = lattice_basis(mat)
    v = [int(x) for x in vec]
    pivots = {next(k for k, x in enumerate(r) if x): r for r in basis.rows}
    for j in range(len(v)):
        if not v[j]:
            continue
        r = pivots.get(j)
        if r is None or v[j] % r[j]:
            return False
        q = v[j] // r[j]
        for k in range(j, len(v)):
            v[k] -= q * r[k]
    return not any(v)


def left_kernel(mat: IntMatrix) -> IntMatrix:
    """Canonical basis of the integer solutions of x @ mat = 0."""
    u, d, _, _, _ = _smith_with_inverses(mat)
    r = _rank_of_smith(d)
    return lattice_basis(IntMatrix(u.rows[r:], mat.nrows))


def lattice_sum(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Canonical basis of rowspan(a) + rowspan(b)."""
    return lattice_basis(stack_rows(a, b))


def lattice_intersect(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Canonical basis of rowspan(a) ∩ rowspan(b).

    Solves x@a = y@b through the kernel of the stacked matrix, so the result
    is exact over the integers.
    """
    if a.ncols != b.ncols:
        raise ValueError("column counts differ")
    n = a.ncols
    if a.nrows == 0 or b.nrows == 0:
        return IntMatrix([], n)
    kern = left_kernel(stack_rows(a, b))
    rows = []
    for z in kern.rows:
        rows.append([sum(z[i] * a.rows[i][j] for i in range(a.nrows)) for j in range(n)])
    return lattice_basis(IntMatrix(rows, n))


def saturate(a: IntMatrix) -> IntMatrix:
    """Canonical basis of the saturation (Q-span ∩ Z^n) of the row lattice."""
    if a.nrows == 0:
        return IntMatrix([], a.ncols)
    _, d, _, _, vinv = _smith_with_inverses(a)
    r = _rank_of_smith(d)
    return lattice_basis(IntMatrix(vinv.rows[:r], a.ncols))


def solve_left_rational(mat: IntMatrix, vec: Sequence[int | Fraction]):
    """One rational solution x of x @ mat = vec, or None if inconsistent.

    Free variables are set to 0; pivoting is deterministic, so the returned
    solution is a function of the input alone.
    """
    m, n = mat.nrows, mat.ncols
    if len(vec) != n:
        raise ValueError(f"vector has length {len(vec)}, expected {n}")
    # one equation per column of mat, unknowns x_0..x_{m-1}
    aug = [[Fraction(mat.rows[i][j]) for i in range(m)] + [Fraction(vec[j])] for j in range(n)]
    row = 0
    pivots: list[tuple[int, int]] = []
    for col in range(m):
        sel = next((r for r in range(row, n) if aug[r][col]), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pr = [x / aug[row][col] for x in aug[row]]
        aug[row] = pr
        for r2 in range(n):
            if r2 != row and aug[r2][col]:
                f = aug[r2][col]
                aug[r2] = [a - f * b for a, b in zip(aug[r2], pr)]
        pivots.append((col, row))
        row += 1
        if row == n:
            break
    x = [Fraction(0)] * m
    for col, r in pivots:
        x[col] = aug[r][m]
    for j in range(n):
        if sum(x[i] * mat.rows[i][j] for i in range(m)) != vec[j]:
            return None
    return tuple(x)


def symplectic_form(genus: int) -> IntMatrix:
    """Gram matrix J of the intersection pairing in the (a-block, b-block) basis."""
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(genus):
        rows[i][genus + i] = 1
        rows[genus + i][i] = -1
    return IntMatrix(rows, n)


def symplectic_pairing(u: Sequence[int], v: Sequence[int], genus: int) -> int:
    """u^T J v, the algebraic intersection number of two homology classes."""
    if len(u) != 2 * genus or len(v) != 2 * genus:
        raise ValueError(f"vectors must have length {2 * genus}")
    return sum(u[i] * v[genus + i] - u[genus + i] * v[i] for i in range(genus))
