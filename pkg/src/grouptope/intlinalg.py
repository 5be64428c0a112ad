"""Integer matrix helpers: Hermite-style row reduction and exact lattice solves.

Everything here is exact big-integer arithmetic on lists of lists; matrices
involved are small (at most a few hundred rows).
"""

from __future__ import annotations

Matrix = list[list[int]]


def row_hnf(rows, transform: bool = False):
    """Row Hermite normal form of an integer matrix.

    Returns the list of nonzero rows ``H`` (echelon, positive pivots, entries
    above a pivot reduced into ``[0, pivot)``).  With ``transform=True`` also
    returns a unimodular ``U`` (full height) with ``U @ A`` equal to ``H``
    padded by zero rows.
    """
    a: Matrix = [list(map(int, r)) for r in rows]
    m = len(a)
    ncols = len(a[0]) if m else 0
    u: Matrix = [[int(i == j) for j in range(m)] for i in range(m)]

    def addmul(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        ad, asrc = a[dst], a[src]
        for j in range(ncols):
            ad[j] -= q * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(m):
            ud[j] -= q * usrc[j]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def negate(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    r = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(r, m) if a[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(a[i][col]), i))
            for i in nz:
                if i != i0:
                    addmul(i, i0, a[i][col] // a[i0][col])
            if all(a[i][col] == 0 for i in range(r, m) if i != i0):
                swap(r, i0)
                break
        if r < m and a[r][col] != 0:
            if a[r][col] < 0:
                negate(r)
            for i in range(r):
                addmul(i, r, a[i][col] // a[r][col])
            r += 1
            if r == m:
                break

    h = a[:r]
    if transform:
        return h, u
    return h


def rank(rows) -> int:
    return len(row_hnf(rows))


def _pivots(h: Matrix) -> list[int]:
    cols = []
    for row in h:
        for j, x in enumerate(row):
            if x != 0:
                cols.append(j)
                break
    return cols


def solve_in_rowspan(h: Matrix, x) -> list[int] | None:
    """Integer coefficients ``c`` with ``c @ h == x``, or None.

    ``h`` must already be in row HNF (as produced by :func:`row_hnf`).
    """
    rem = list(map(int, x))
    coeffs = []
    for row, piv in zip(h, _pivots(h)):
        q, r = divmod(rem[piv], row[piv])
        if r != 0:
            return None
        if q != 0:
            rem = [v - q * w for v, w in zip(rem, row)]
        coeffs.append(q)
    if any(rem):
        return None
    return coeffs


def lattice_contains(h: Matrix, x) -> bool:
    return solve_in_rowspan(h, x) is not None


def solve_left(rows, x) -> list[int] | None:
    """Integer ``c`` with ``c @ rows == x``, for an arbitrary integer matrix."""
    h, u = row_hnf(rows, transform=True)
    ch = solve_in_rowspan(h, x)
    if ch is None:
        return None
    m = len(u)
    out = [0] * m
    for q, urow in zip(ch, u):
        if q:
            for j in range(m):
                out[j] += q * urow[j]
    return out


def lattices_equal(rows_a, rows_b) -> bool:
    """Whether two integer row families generate the same lattice."""
    return row_hnf(rows_a) == row_hnf(rows_b)
