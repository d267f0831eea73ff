"""Exact linear systems over GF(2)[d] and over GF(2^k).

Matrices are lists of rows of ints.  Over GF(2)[d] the entries are bit-mask
polynomials (see :mod:`hhbv.coeff`); over GF(2^k) they are field residues.
"""

from __future__ import annotations

from .coeff import GF2k, poly_divmod, poly_mul


def _copy(m):
    return [list(row) for row in m]


def diagonalize(matrix: list[list[int]], rhs: list[list[int]]):
    """Reduce ``matrix`` to a diagonal form ``S M T`` over the Euclidean ring
    GF(2)[d] with unimodular ``S`` and ``T``.

    The row operations ``S`` are applied to every column vector in ``rhs``
    (each a list of length ``len(matrix)``) in place of being returned.
    Returns ``(diag, T, transformed_rhs)``.
    """
    a = _copy(matrix)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    b = [list(v) for v in rhs]
    t = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        for v in b:
            v[i], v[j] = v[j], v[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in t:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        rs, rd = a[src], a[dst]
        for c in range(cols):
            if rs[c]:
                rd[c] ^= poly_mul(q, rs[c])
        for v in b:
            if v[src]:
                v[dst] ^= poly_mul(q, v[src])

    def add_col(src, dst, q):
        for row in a:
            if row[src]:
                row[dst] ^= poly_mul(q, row[src])
        for row in t:
            if row[src]:
                row[dst] ^= poly_mul(q, row[src])

    diag = []
    for p in range(min(rows, cols)):
        while True:
            best = None
            for i in range(p, rows):
                for j in range(p, cols):
                    v = a[i][j]
                    if v and (best is None or v.bit_length() < best[0]):
                        best = (v.bit_length(), i, j)
                        if best[0] == 1:
                            break
                if best and best[0] == 1:
                    break
            if best is None:
                return diag, t, b
            _, i, j = best
            swap_rows(p, i)
            swap_cols(p, j)
            piv = a[p][p]
            clean = True
            for i in range(p + 1, rows):
                if a[i][p]:
                    q, r = poly_divmod(a[i][p], piv)
                    add_row(p, i, q)
                    clean &= r == 0
            for j in range(p + 1, cols):
                if a[p][j]:
                    q, r = poly_divmod(a[p][j], piv)
                    add_col(p, j, q)
                    clean &= r == 0
            if clean:
                break
        diag.append(a[p][p])
    return diag, t, b


def solve_poly(matrix: list[list[int]], rhs: list[int]) -> list[int] | None:
    """A solution of ``matrix @ x == rhs`` with entries in GF(2)[d], or
    ``None`` when no polynomial solution exists."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if cols == 0:
        return [] if not any(rhs) else None
    diag, t, (g,) = diagonalize(matrix, [rhs])
    y = [0] * cols
    for i, piv in enumerate(diag):
        q, r = poly_divmod(g[i], piv)
        if r:
            return None
        y[i] = q
    if any(g[len(diag):]):
        return None
    x = [0] * cols
    for i in range(cols):
        acc = 0
        for j in range(cols):
            if t[i][j] and y[j]:
                acc ^= poly_mul(t[i][j], y[j])
        x[i] = acc
    return x


def invert_poly(matrix: list[list[int]]) -> list[list[int]]:
    """Inverse over GF(2)[d]; raises ``ValueError`` if it has non-polynomial
    entries (determinant not a unit)."""
    n = len(matrix)
    columns = []
    for k in range(n):
        e = [int(i == k) for i in range(n)]
        col = solve_poly(matrix, e)
        if col is None:
            raise ValueError("matrix is not invertible over GF(2)[d]")
        columns.append(col)
    return [[columns[j][i] for j in range(n)] for i in range(n)]


def rank_field(matrix: list[list[int]], field: GF2k) -> int:
    return len(_echelon(_copy(matrix), None, field)[1])


def solve_field(matrix: list[list[int]], rhs: list[int], field: GF2k) -> list[int] | None:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if cols == 0:
        return [] if not any(rhs) else None
    a, pivots, b = _echelon(_copy(matrix), list(rhs), field)
    if any(b[len(pivots):]):
        return None
    x = [0] * cols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = b[r]
        for j in range(c + 1, cols):
            if a[r][j] and x[j]:
                acc ^= field.mul(a[r][j], x[j])
        x[c] = acc  # pivots are normalised to 1
    return x


def _echelon(a, b, field):
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        if b is not None:
            b[r], b[piv] = b[piv], b[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, v) for v in a[r]]
        if b is not None:
            b[r] = field.mul(inv, b[r])
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi ^ field.mul(f, vr) for vi, vr in zip(a[i], a[r])]
                if b is not None:
                    b[i] ^= field.mul(f, b[r])
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots, b
