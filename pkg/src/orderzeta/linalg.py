"""Exact linear algebra: Fraction matrices, Hermite normal form, mod-p kernels.

Matrices are lists of rows.  Lattices are handled through column-style HNF:
the columns of the returned matrix generate the lattice, the matrix is upper
triangular with positive diagonal and off-diagonal entries reduced modulo the
diagonal entry of their row, which makes it a canonical label.
"""
from __future__ import annotations

from fractions import Fraction


def mat_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            ait = ai[t]
            if ait == 0:
                continue
            bt = b[t]
            for j in range(m):
                oi[j] += ait * bt[j]
    return out


def mat_vec(a, v):
    return [sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a))]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scalar(c, a):
    return [[c * x for x in row] for row in a]


def mat_fraction(a) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a]


def det_fraction(mat) -> Fraction:
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            f = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= f * m[col][c]
    return det


def inv_fraction(mat) -> list[list[Fraction]]:
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_fraction(mat, rhs) -> list[Fraction]:
    """Solve mat * x = rhs exactly (mat square nonsingular)."""
    inv = inv_fraction(mat)
    return mat_vec(inv, [Fraction(x) for x in rhs])


def hnf_columns(cols: list[list[int]], n: int) -> list[list[int]]:
    """Canonical column HNF of the lattice generated by the given columns.

    Input columns live in Z^n and must generate a finite-index sublattice.
    Returns an n x n upper triangular matrix H (rows indexed by coordinate)
    with H[i][i] > 0 and 0 <= H[i][j] < H[i][i] for j > i; its columns
    generate the same lattice.
    """
    work = [list(c) for c in cols]  # list of columns
    hnf: list[list[int] | None] = [None] * n

    for row in range(n):
        # reduce all working columns so that entries above `row` vanish
        # (they do by construction), then gcd-combine at position `row`
        piv = None
        for c in work:
            if c[row] != 0:
                if piv is None:
                    piv = c
                else:
                    # gcd step on (piv[row], c[row])
                    a, b = piv[row], c[row]
                    while b:
                        q = a // b
                        for i in range(n):
                            piv[i], c[i] = c[i], piv[i] - q * c[i]
                        a, b = b, a - q * b
                    if piv[row] == 0:
                        piv, c = c, piv
        if piv is None:
            raise ValueError("columns do not span full rank at row %d" % row)
        if piv[row] < 0:
            for i in range(n):
                piv[i] = -piv[i]
        hnf[row] = piv
        work = [c for c in work if c is not piv and any(c)]
        # clear entry `row` of remaining columns
        for c in work:
            if c[row] != 0:
                q = c[row] // piv[row]
                for i in range(n):
                    c[i] -= q * piv[i]
        work = [c for c in work if any(c)]

    cols_out = [list(h) for h in hnf]  # cols_out[r] has pivot at row r
    # reduce column j above its pivot using earlier pivot columns
    for j in range(n):
        for r in range(j - 1, -1, -1):
            q = cols_out[j][r] // cols_out[r][r]
            if q:
                for i in range(n):
                    cols_out[j][i] -= q * cols_out[r][i]
    # return as matrix with columns cols_out
    return [[cols_out[j][i] for j in range(n)] for i in range(n)]


def hnf_det(h) -> int:
    d = 1
    for i in range(len(h)):
        d *= h[i][i]
    return d


def lattice_key(h) -> bytes:
    return repr(h).encode()


def lattice_contains(h, vec) -> bool:
    """Does the lattice with column-HNF h contain vec (back substitution)?"""
    n = len(vec)
    v = list(vec)
    for i in range(n - 1, -1, -1):
        if v[i] % h[i][i] != 0:
            return False
        q = v[i] // h[i][i]
        for r in range(i + 1):
            v[r] -= q * h[r][i]
    return all(x == 0 for x in v)


def lattice_contains_lattice(h_outer, h_inner) -> bool:
    n = len(h_outer)
    return all(lattice_contains(h_outer, [h_inner[i][j] for i in range(n)])
               for j in range(n))


def kernel_mod_p(mat, p: int) -> list[list[int]]:
    """Basis of the right kernel of mat over F_p (row-reduced echelon)."""
    rows = [[x % p for x in row] for row in mat]
    nrows, ncols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] % p != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][fc]) % p
        basis.append(v)
    return basis


def rank_mod_p(mat, p: int) -> int:
    ncols = len(mat[0])
    return ncols - len(kernel_mod_p(mat, p))


def row_space_basis_mod_p(rows, p: int) -> list[list[int]]:
    """Reduced row echelon basis of the span of the given rows over F_p."""
    work = [[x % p for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    out = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(x - f * y) % p for x, y in zip(work[i], work[r])]
        r += 1
    out = [row for row in work[:r]]
    return out


def solve_mod_pk(mat, rhs, p: int, k: int) -> list[int] | None:
    """Solve mat x = rhs mod p^k for mat invertible mod p (unique solution)."""
    q = p ** k
    n = len(mat)
    m = [[x % q for x in row] + [rhs[i] % q] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], -1, q)
        m[col] = [(x * inv) % q for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % q for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def det_mod_pk(mat, p: int, k: int) -> int:
    """Determinant mod p^k via an exact integer determinant of the lift."""
    d = det_fraction(mat)
    assert d.denominator == 1
    return int(d) % (p ** k)
