"""Facet enumeration for the cone over the polytope (double description).

Used purely as an accelerator: the degree scans reject candidates violating a
facet inequality before running the expensive decomposition search.  Every
inequality emitted here is re-verified exactly against the full vertex list,
so the filter is sound even if the facet list were incomplete; verdicts never
depend on completeness (non-decomposable survivors are still confirmed by
the exact rational membership solve).
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import gcd

from .polytope import PolytopeModel, to_lattice_coords


def _primitive(vec) -> tuple[int, ...]:
    denom = 1
    for x in vec:
        f = Fraction(x)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(Fraction(x) * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def _independent_subset(rays, r):
    """Indices of r linearly independent rays (fraction-free elimination)."""
    chosen = []
    basis_rows: list[list[Fraction]] = []
    for i, ray in enumerate(rays):
        row = [Fraction(v) for v in ray]
        for b in basis_rows:
            piv = next(j for j, v in enumerate(b) if v != 0)
            if row[piv] != 0:
                f = row[piv] / b[piv]
                row = [x - f * y for x, y in zip(row, b)]
        if any(row):
            basis_rows.append(row)
            chosen.append(i)
            if len(chosen) == r:
                return chosen
    raise ValueError("rays do not span the expected dimension")


def _invert(matrix):
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [v / f for v in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                g = a[i][col]
                a[i] = [v - g * w for v, w in zip(a[i], a[col])]
    return [row[n:] for row in a]


def cone_facets(
    rays: list[tuple[int, ...]], time_budget: float | None = None
) -> list[tuple[int, ...]]:
    """Facet normals f (primitive integer) of cone(rays), with f.ray >= 0.

    Incremental double description with the combinatorial adjacency test;
    assumes the rays span R^dim (true for our vertex cones in lattice
    coordinates).

    With a ``time_budget`` (seconds) the incremental insertion stops early
    once exceeded and the inequalities accumulated so far are returned.  They
    are then valid only for the sub-cone of the processed rays; callers that
    need soundness for the full cone must re-verify each one (as
    :func:`ambient_facet_forms` does).
    """
    deadline = None if time_budget is None else time.monotonic() + time_budget
    dim = len(rays[0])
    init = _independent_subset(rays, dim)
    inv = _invert([rays[i] for i in init])
    # Columns of the inverse are valid on the initial simplicial cone.
    facets = [
        _primitive([inv[i][j] for i in range(dim)]) for j in range(dim)
    ]
    processed = list(init)
    tight = []
    for f in facets:
        tight.append(
            frozenset(
                i for i in processed
                if sum(a * b for a, b in zip(f, rays[i])) == 0
            )
        )

    rest = [i for i in range(len(rays)) if i not in set(init)]
    for idx in rest:
        if deadline is not None and time.monotonic() > deadline:
            break
        ray = rays[idx]
        vals = [sum(a * b for a, b in zip(f, ray)) for f in facets]
        if all(v >= 0 for v in vals):
            processed.append(idx)
            tight = [
                t | {idx} if v == 0 else t for t, v in zip(tight, vals)
            ]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]

        new_facets = []
        new_tight = []
        for ip in pos:
            for im in neg:
                common = tight[ip] & tight[im]
                if len(common) < dim - 2:
                    continue
                adjacent = True
                for k, t in enumerate(tight):
                    if k != ip and k != im and common <= t:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                f = _primitive(
                    [
                        vals[ip] * a - vals[im] * b
                        for a, b in zip(facets[im], facets[ip])
                    ]
                )
                new_facets.append(f)
                new_tight.append(common | {idx})

        facets = (
            [facets[i] for i in zero]
            + [facets[i] for i in pos]
            + new_facets
        )
        tight = (
            [tight[i] | {idx} for i in zero]
            + [tight[i] for i in pos]
            + new_tight
        )
        processed.append(idx)

    # Deduplicate (adjacency bookkeeping can produce repeats).
    seen = {}
    for f, t in zip(facets, tight):
        if f not in seen:
            seen[f] = t
    return list(seen)


def ambient_facet_forms(
    model: PolytopeModel, time_budget: float | None = None
) -> list[tuple[int, ...]]:
    """Vertex-valid integer inequality forms on ambient coordinates.

    For any nonnegative combination x of vertices (any dilation) each form
    satisfies form . x >= 0; candidates violating one are outside every
    dilation.  Forms are validated exactly against all vertices before being
    returned, so even a partial list (time-capped enumeration) is a sound
    rejection filter.
    """
    rays = [tuple(to_lattice_coords(v, model)) for v in model.vertices]
    facets = cone_facets(rays, time_budget)
    r = len(model.lattice_basis)
    ncols = len(model.lattice_basis[0])

    # Rational right-inverse P with coords(x) = x . P on the span: then an
    # ambient form is P . f, cleared to integers.
    b = [list(row) for row in model.lattice_basis]
    gram = [
        [sum(bi * bj for bi, bj in zip(b[i], b[j])) for j in range(r)]
        for i in range(r)
    ]
    gram_inv = _invert(gram)
    forms = []
    for f in facets:
        # coef = B^T (G^-1 f)
        gf = [
            sum(gram_inv[i][j] * f[j] for j in range(r)) for i in range(r)
        ]
        amb = [
            sum(gf[i] * b[i][c] for i in range(r)) for c in range(ncols)
        ]
        form = _primitive(amb)
        if all(
            sum(a * v for a, v in zip(form, vert)) >= 0
            for vert in model.vertices
        ):
            forms.append(form)
    return forms
