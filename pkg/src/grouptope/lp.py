"""Exact rational feasibility for small equality-form linear programs.

Solves "does A x = b admit x >= 0" over the rationals with a phase-I simplex
(Bland's rule, ``fractions.Fraction`` arithmetic).  No floating point is used
anywhere, so answers are exact and reproducible.
"""

from __future__ import annotations

from fractions import Fraction


def feasible_point(a_rows, b) -> list[Fraction] | None:
    """A rational ``x >= 0`` with ``A x = b``, or None if infeasible.

    ``a_rows`` is a list of equality rows; entries may be ints or Fractions.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    rows = []
    rhs = []
    for row, bi in zip(a_rows, b):
        r = [Fraction(v) for v in row]
        bi = Fraction(bi)
        if bi < 0:
            r = [-v for v in r]
            bi = -bi
        rows.append(r)
        rhs.append(bi)
    if m == 0:
        return []

    # Tableau columns: n structural vars then m artificials.  Basis starts as
    # the artificials; phase-I objective is their sum.
    for i in range(m):
        rows[i] = rows[i] + [Fraction(int(i == j)) for j in range(m)]
    basis = [n + i for i in range(m)]

    # Reduced-cost row for minimizing the artificial sum: cost[j] < 0 marks an
    # improving column.  obj equals minus the current artificial sum.
    cost = [Fraction(0)] * (n + m)
    obj = Fraction(0)
    for i in range(m):
        for j in range(n):
            cost[j] -= rows[i][j]
        obj -= rhs[i]

    while True:
        enter = next((j for j in range(n) if cost[j] < 0), None)
        if enter is None:
            break
        # Bland ratio test: smallest ratio, ties by smallest basis variable.
        leave = None
        best = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                ratio = rhs[i] / coef
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave is None:
            # Unbounded phase-I cannot happen (objective bounded below by 0),
            # but guard against it to fail loudly on a logic error.
            raise RuntimeError("phase-I simplex reported an unbounded column")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[leave])]
                rhs[i] -= f * rhs[leave]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [v - f * w for v, w in zip(cost, rows[leave])]
            obj -= f * rhs[leave]
        basis[leave] = enter

    if obj != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rhs[i]
    return x
