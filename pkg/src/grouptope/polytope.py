"""The tripod/claw-tree model polytopes: vertices, lattice, exact membership.

For a finite abelian group G and an n-claw tree, the polytope lives in
R^{n|G|} with coordinates indexed by (block j, group element g).  Its vertices
are the indicator points of n-tuples of group elements summing to zero, and
the lattice of interest is the one generated by those vertices: integer
vectors whose group-weighted sum vanishes and whose per-block coordinate sums
all agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

from . import intlinalg, lp
from .groups import Element, GroupSpec

AmbientPoint = tuple[int, ...]


class PolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class GPresentation:
    """A nonnegative ambient vector written as one multiset of group elements
    per block; all blocks share the same cardinality (the degree)."""

    blocks: tuple[tuple[Element, ...], ...]

    @property
    def degree(self) -> int:
        return len(self.blocks[0])

    def validate(self, group: GroupSpec) -> None:
        k = self.degree
        for block in self.blocks:
            if len(block) != k:
                raise PolytopeError("all blocks must have the same cardinality")
            for g in block:
                group.check(g)

    def canonical(self, group: GroupSpec) -> "GPresentation":
        """Blocks re-sorted by element index (the serialized form)."""
        return GPresentation(
            tuple(tuple(sorted(b, key=group.index)) for b in self.blocks)
        )

    def to_point(self, group: GroupSpec) -> AmbientPoint:
        n_elem = group.order
        coords = [0] * (len(self.blocks) * n_elem)
        for j, block in enumerate(self.blocks):
            base = j * n_elem
            for g in block:
                coords[base + group.index(g)] += 1
        return tuple(coords)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "blocks": [[list(g) for g in block] for block in self.blocks],
        }

    @staticmethod
    def from_json(data: dict, group: GroupSpec) -> "GPresentation":
        pres = GPresentation(
            tuple(
                tuple(tuple(int(r) for r in g) for g in block)
                for block in data["blocks"]
            )
        )
        pres.validate(group)
        if pres.degree != int(data["degree"]):
            raise PolytopeError("degree field does not match block cardinality")
        return pres


def presentation(group: GroupSpec, *blocks) -> GPresentation:
    """Convenience builder; blocks given as iterables of elements or ints
    (ints are promoted to 1-factor elements)."""
    norm = []
    for block in blocks:
        elems = []
        for g in block:
            if isinstance(g, int):
                g = (g,)
            elems.append(tuple(g))
        norm.append(tuple(sorted(elems, key=group.index)))
    pres = GPresentation(tuple(norm))
    pres.validate(group)
    return pres


def point_to_presentation(x: AmbientPoint, group: GroupSpec, n: int) -> GPresentation:
    n_elem = group.order
    if len(x) != n * n_elem:
        raise PolytopeError(f"expected length {n * n_elem}, got {len(x)}")
    if any(v < 0 for v in x):
        raise PolytopeError("presentations require nonnegative coordinates")
    elems = group.elements()
    blocks = []
    for j in range(n):
        block = []
        for i, g in enumerate(elems):
            block.extend([g] * x[j * n_elem + i])
        blocks.append(tuple(block))
    return GPresentation(tuple(blocks))


def vertices(group: GroupSpec, n: int) -> list[AmbientPoint]:
    """All |G|^(n-1) vertices, lexicographic in the first n-1 group elements."""
    if n < 3:
        raise PolytopeError("claw trees need n >= 3 leaves")
    n_elem = group.order
    elems = group.elements()
    out = []
    for combo in product(range(n_elem), repeat=n - 1):
        last = group.zero()
        for idx in combo:
            last = group.add(last, elems[idx])
        last_idx = group.index(group.neg(last))
        coords = [0] * (n * n_elem)
        for j, idx in enumerate(combo):
            coords[j * n_elem + idx] = 1
        coords[(n - 1) * n_elem + last_idx] = 1
        out.append(tuple(coords))
    return out


def in_lattice(x, group: GroupSpec, n: int) -> bool:
    """Zero group-weighted sum and equal block sums (entries may be negative)."""
    n_elem = group.order
    if len(x) != n * n_elem:
        raise PolytopeError(f"expected length {n * n_elem}, got {len(x)}")
    elems = group.elements()
    block_sums = [sum(x[j * n_elem : (j + 1) * n_elem]) for j in range(n)]
    if any(s != block_sums[0] for s in block_sums[1:]):
        return False
    acc = group.zero()
    for j in range(n):
        for i, g in enumerate(elems):
            c = x[j * n_elem + i]
            if c:
                acc = group.add(acc, group.scale(c, g))
    return acc == group.zero()


def lattice_basis(group: GroupSpec, n: int) -> list[list[int]]:
    """Row basis (Hermite form) of the lattice generated by the vertices."""
    return intlinalg.row_hnf(vertices(group, n))


@dataclass(frozen=True)
class PolytopeModel:
    """Immutable bundle of group, leaf count, vertex list and lattice data."""

    group: GroupSpec
    n: int
    vertices: tuple[AmbientPoint, ...]
    lattice_basis: tuple[tuple[int, ...], ...]
    dim: int

    @cached_property
    def vertex_index(self) -> dict[AmbientPoint, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def vertex_tuples(self) -> tuple[tuple[int, ...], ...]:
        """Each vertex as its n-tuple of group element indices."""
        n_elem = self.group.order
        out = []
        for v in self.vertices:
            out.append(
                tuple(
                    next(i for i in range(n_elem) if v[j * n_elem + i])
                    for j in range(self.n)
                )
            )
        return tuple(out)

    def vertex_of_tuple(self, elem_indices) -> int:
        """Index of the vertex with the given per-block element indices."""
        n_elem = self.group.order
        idx = 0
        for i in elem_indices[:-1]:
            idx = idx * n_elem + i
        return idx


def build_model(group: GroupSpec, n: int = 3) -> PolytopeModel:
    verts = vertices(group, n)
    basis = lattice_basis(group, n)
    # All vertices share block sums 1, so the affine hull misses the origin
    # and the affine dimension is one below the lattice rank.
    return PolytopeModel(
        group=group,
        n=n,
        vertices=tuple(verts),
        lattice_basis=tuple(tuple(r) for r in basis),
        dim=len(basis) - 1,
    )


def to_lattice_coords(x, model: PolytopeModel) -> list[int]:
    coeffs = intlinalg.solve_in_rowspan([list(r) for r in model.lattice_basis], x)
    if coeffs is None:
        raise PolytopeError("point is not in the lattice spanned by the vertices")
    return coeffs


def from_lattice_coords(coeffs, model: PolytopeModel) -> AmbientPoint:
    ncols = len(model.lattice_basis[0])
    out = [0] * ncols
    for c, row in zip(coeffs, model.lattice_basis):
        if c:
            for j in range(ncols):
                out[j] += c * row[j]
    return tuple(out)


def _support_tuples(model: PolytopeModel, supports: list[list[int]]):
    """Vertex tuples (as element indices) whose blocks all draw from the given
    per-block supports.  Any vertex carrying positive weight in a membership
    witness must be of this kind."""
    group = model.group
    elems = group.elements()
    supp_last = set(supports[-1])
    out = []
    for combo in product(*supports[:-1]):
        acc = group.zero()
        for i in combo:
            acc = group.add(acc, elems[i])
        last = group.index(group.neg(acc))
        if last in supp_last:
            out.append(combo + (last,))
    return out


def dilation_weights(x, k: int, model: PolytopeModel):
    """Exact rational vertex weights placing ``x`` in the k-th dilation.

    Returns a list of (vertex_index, Fraction) pairs with nonnegative weights
    summing to ``k``, or None if ``x`` is outside ``kP``.
    """
    if k < 1:
        raise PolytopeError("dilation degree must be >= 1")
    group, n = model.group, model.n
    n_elem = group.order
    if len(x) != n * n_elem:
        raise PolytopeError(f"expected length {n * n_elem}, got {len(x)}")
    if any(v < 0 for v in x):
        return None
    if any(
        sum(x[j * n_elem : (j + 1) * n_elem]) != k for j in range(n)
    ):
        return None

    supports = [
        [i for i in range(n_elem) if x[j * n_elem + i] > 0] for j in range(n)
    ]
    cand = _support_tuples(model, supports)
    if not cand:
        return None

    # One equality per (block, supported element); the weight-sum constraint
    # is implied because each block's rows add up to k.
    row_index = {}
    rows = []
    rhs = []
    for j in range(n):
        for i in supports[j]:
            row_index[(j, i)] = len(rows)
            rows.append([0] * len(cand))
            rhs.append(x[j * n_elem + i])
    for col, tup in enumerate(cand):
        for j, i in enumerate(tup):
            rows[row_index[(j, i)]][col] = 1

    sol = lp.feasible_point(rows, rhs)
    if sol is None:
        return None
    out = []
    for tup, w in zip(cand, sol):
        if w != 0:
            out.append((model.vertex_of_tuple(tup), w))
    assert sum(w for _, w in out) == k
    return out


def in_dilation(x, k: int, model: PolytopeModel) -> bool:
    """Exact membership of a nonnegative integer vector in ``kP``."""
    return dilation_weights(x, k, model) is not None


def halve(x, group: GroupSpec, n: int) -> AmbientPoint:
    """x/2 for an even lattice point over an odd-order group (stays in the
    lattice: doubling is injective when no nonzero element is 2-torsion)."""
    if group.order % 2 == 0:
        raise PolytopeError("halving requires a group of odd order")
    if any(v % 2 for v in x):
        raise PolytopeError("all coordinates must be even")
    if not in_lattice(x, group, n):
        raise PolytopeError("point is not in the lattice")
    return tuple(v // 2 for v in x)
