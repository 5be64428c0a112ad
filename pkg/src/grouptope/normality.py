"""Degree-by-degree normality checking with machine-checkable certificates.

The polytope is normal iff for every degree k up to dim-1 each lattice point
of the k-th dilation splits as a sum of k vertices (the degree bound is the
standard generation bound for the integral closure of the cone over a lattice
polytope; it is an external fact, independent of the model construction).

The degree-k scan enumerates lattice points of the degree-k slice up to the
symmetry group (block translations with zero total shift, block
permutations), tries an exhaustive integer decomposition first, and falls
back to exact rational membership only for the points that do not decompose.
A point inside the dilation with no decomposition is a hole: it yields a
non-normality certificate that can be re-verified from its serialized form
alone.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product

from .groups import GroupSpec, make_group
from .polytope import (
    GPresentation,
    PolytopeModel,
    PolytopeError,
    build_model,
    dilation_weights,
    in_lattice,
    point_to_presentation,
    presentation,
)

SCHEMA_VERSION = 1

# Explicit degree-8 hole of the Z11 tripod polytope (three blocks of eight
# residues each).  Packaged manually, it verifies end to end like any
# searched witness.
Z11_WITNESS_BLOCKS = (
    (0, 0, 1, 2, 4, 4, 5, 10),
    (1, 1, 1, 3, 5, 5, 6, 8),
    (0, 2, 5, 6, 6, 6, 8, 10),
)


class CertificateError(ValueError):
    """Malformed or self-inconsistent serialized certificate."""


# ---------------------------------------------------------------------------
# symmetry action
# ---------------------------------------------------------------------------


def translate_presentation(
    pres: GPresentation, shifts, group: GroupSpec
) -> GPresentation:
    """Shift block j by shifts[j]; the shifts must sum to zero in the group
    so that the zero-group-sum condition (hence the vertex set) is preserved."""
    total = group.zero()
    for s in shifts:
        total = group.add(total, s)
    if total != group.zero():
        raise PolytopeError("translation shifts must sum to zero")
    return GPresentation(
        tuple(
            tuple(sorted((group.add(g, s) for g in block), key=group.index))
            for block, s in zip(pres.blocks, shifts)
        )
    )


def permute_blocks(pres: GPresentation, perm) -> GPresentation:
    return GPresentation(tuple(pres.blocks[i] for i in perm))


def symmetry_orbit(pres: GPresentation, group: GroupSpec):
    """All images under block permutations and zero-sum translations."""
    n = len(pres.blocks)
    elems = group.elements()
    seen = set()
    out = []
    for perm in permutations(range(n)):
        base = permute_blocks(pres, perm)
        for partial in product(elems, repeat=n - 1):
            last = group.zero()
            for s in partial:
                last = group.add(last, s)
            shifts = partial + (group.neg(last),)
            img = translate_presentation(base, shifts, group)
            if img.blocks not in seen:
                seen.add(img.blocks)
                out.append(img)
    return out


def canonical_presentation(pres: GPresentation, group: GroupSpec) -> GPresentation:
    """Lexicographically minimal serialized form over the symmetry orbit."""
    key = lambda p: tuple(tuple(group.index(g) for g in b) for b in p.blocks)
    return min(symmetry_orbit(pres, group), key=key)


# ---------------------------------------------------------------------------
# witnesses and certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionWitness:
    """Multiset of vertex indices summing exactly to the target point."""

    vertex_indices: tuple[int, ...]


@dataclass
class NonNormalityCertificate:
    point: GPresentation
    degree: int
    membership: list[tuple[int, Fraction]]
    attestation: str
    search_stats: dict

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "non_normality_certificate",
            "degree": self.degree,
            "point": self.point.to_json(),
            "membership": [[i, str(w)] for i, w in self.membership],
            "attestation": self.attestation,
            "search_stats": {
                k: v for k, v in self.search_stats.items() if k != "runtime_seconds"
            },
        }

    @staticmethod
    def from_json(data: dict, group: GroupSpec) -> "NonNormalityCertificate":
        try:
            if data["kind"] != "non_normality_certificate":
                raise CertificateError(f"unexpected kind {data['kind']!r}")
            point = GPresentation.from_json(data["point"], group)
            membership = [
                (int(i), Fraction(w)) for i, w in data["membership"]
            ]
            return NonNormalityCertificate(
                point=point,
                degree=int(data["degree"]),
                membership=membership,
                attestation=str(data["attestation"]),
                search_stats=dict(data.get("search_stats", {})),
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from exc


@dataclass
class NormalityReport:
    group: GroupSpec
    n: int
    dim: int
    max_degree: int
    checked_degrees: list[dict]
    verdict: str  # "normal" | "non-normal" | "inconclusive"
    certificate: NonNormalityCertificate | None = None

    def to_json(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": "normality_report",
            "group": list(self.group.orders),
            "n": self.n,
            "dim": self.dim,
            "max_degree": self.max_degree,
            "checked_degrees": self.checked_degrees,
            "verdict": self.verdict,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


# ---------------------------------------------------------------------------
# exhaustive decomposition search
# ---------------------------------------------------------------------------


class _Tables:
    """Index-level group tables shared by the scan and the decomposer."""

    def __init__(self, group: GroupSpec):
        elems = group.elements()
        n_elem = group.order
        idx = {g: i for i, g in enumerate(elems)}
        self.n_elem = n_elem
        self.add = [
            [idx[group.add(a, b)] for b in elems] for a in elems
        ]
        self.neg = [idx[group.neg(a)] for a in elems]


_TABLE_CACHE: dict[tuple[int, ...], _Tables] = {}


def _tables(group: GroupSpec) -> _Tables:
    t = _TABLE_CACHE.get(group.orders)
    if t is None:
        t = _TABLE_CACHE[group.orders] = _Tables(group)
    return t


def _dec(counts: tuple[int, ...], i: int) -> tuple[int, ...]:
    return counts[:i] + (counts[i] - 1,) + counts[i + 1 :]


class _Decomposer:
    def __init__(self, model: PolytopeModel):
        self.model = model
        self.t = _tables(model.group)
        self.nodes = 0

    def search(self, marginals, k):
        """Multiset of zero-sum tuples covering the marginals, or None.

        Pivots on the most-constrained element of block 1 (largest remaining
        multiplicity, ties by element index); failed remainder states are
        memoized so exhaustion is certified without rework.
        """
        memo: set = set()
        if self.model.n == 3:
            return self._search3(marginals[0], marginals[1], marginals[2], k, memo)
        return self._searchn(tuple(marginals), k, memo)

    def _search3(self, m1, m2, m3, k, memo):
        if k == 0:
            return []
        key = (m1, m2, m3)
        if key in memo:
            return None
        self.nodes += 1
        add, neg = self.t.add, self.t.neg
        n_elem = self.t.n_elem
        a = max(range(n_elem), key=lambda i: (m1[i], -i))
        row = add[a]
        m1n = _dec(m1, a)
        for b in range(n_elem):
            if m2[b]:
                c = neg[row[b]]
                if m3[c]:
                    rest = self._search3(m1n, _dec(m2, b), _dec(m3, c), k - 1, memo)
                    if rest is not None:
                        rest.append((a, b, c))
                        return rest
        memo.add(key)
        return None

    def _searchn(self, ms, k, memo):
        if k == 0:
            return []
        if ms in memo:
            return None
        self.nodes += 1
        add, neg = self.t.add, self.t.neg
        n_elem = self.t.n_elem
        n = len(ms)
        a = max(range(n_elem), key=lambda i: (ms[0][i], -i))
        supports = [[i for i in range(n_elem) if ms[j][i]] for j in range(1, n - 1)]
        for mids in product(*supports):
            acc = a
            for b in mids:
                acc = add[acc][b]
            last = neg[acc]
            if ms[n - 1][last]:
                tup = (a,) + mids + (last,)
                nxt = tuple(_dec(ms[j], tup[j]) for j in range(n))
                rest = self._searchn(nxt, k - 1, memo)
                if rest is not None:
                    rest.append(tup)
                    return rest
        memo.add(ms)
        return None


def _counts_of(pres: GPresentation, group: GroupSpec) -> tuple[tuple[int, ...], ...]:
    n_elem = group.order
    out = []
    for block in pres.blocks:
        c = [0] * n_elem
        for g in block:
            c[group.index(g)] += 1
        out.append(tuple(c))
    return tuple(out)


def _presentation_of_counts(counts, group: GroupSpec) -> GPresentation:
    elems = group.elements()
    return GPresentation(
        tuple(
            tuple(g for i, g in enumerate(elems) for _ in range(block[i]))
            for block in counts
        )
    )


def decompose(
    x: GPresentation, k: int, model: PolytopeModel
) -> DecompositionWitness | None:
    """Exhaustive search for k vertices summing to ``x``; None if impossible."""
    x.validate(model.group)
    if len(x.blocks) != model.n:
        raise PolytopeError(f"expected {model.n} blocks, got {len(x.blocks)}")
    if x.degree != k:
        raise PolytopeError(f"block sums are {x.degree}, expected degree {k}")
    counts = _counts_of(x, model.group)
    found = _Decomposer(model).search(counts, k)
    if found is None:
        return None
    indices = tuple(sorted(model.vertex_of_tuple(tup) for tup in found))
    total = [0] * (model.n * model.group.order)
    for i in indices:
        for j, v in enumerate(model.vertices[i]):
            total[j] += v
    assert tuple(total) == x.to_point(model.group), "unsound decomposition"
    return DecompositionWitness(vertex_indices=indices)


# ---------------------------------------------------------------------------
# degree scan
# ---------------------------------------------------------------------------


@dataclass
class DegreeScan:
    degree: int
    candidates: int = 0
    members: int = 0
    decompose_calls: int = 0
    decompose_nodes: int = 0
    lp_calls: int = 0
    facet_rejects: int = 0
    holes: list[GPresentation] = field(default_factory=list)

    def merge(self, other: "DegreeScan") -> None:
        self.candidates += other.candidates
        self.members += other.members
        self.decompose_calls += other.decompose_calls
        self.decompose_nodes += other.decompose_nodes
        self.lp_calls += other.lp_calls
        self.facet_rejects += other.facet_rejects


# Facet inequality prefilter.  Every form is verified nonnegative on every
# vertex (see dd.ambient_facet_forms), hence nonnegative on all dilations, so
# rejecting a violating candidate is exact; the filter only removes work, all
# surviving non-decomposable candidates still get the rational membership
# solve.  Enumeration is attempted once per (group, n) and time-capped; a
# partial list just filters less.
_FACET_CACHE: dict[tuple, list | None] = {}
_FACET_ORDER_LIMIT = 9
_FACET_TIME_BUDGET = 90.0


def _load_precomputed_facets(model: PolytopeModel):
    """Facet forms shipped as package data (scripts/precompute_facets.py).

    Each form is re-verified against the vertex list on load, so a stale or
    corrupted data file can only weaken the filter, never falsify it.
    """
    from importlib import resources

    name = f"facets_{model.group.label}_n{model.n}.json"
    try:
        path = resources.files("grouptope.data").joinpath(name)
        data = json.loads(path.read_text())
    except (FileNotFoundError, ModuleNotFoundError, OSError):
        return None
    forms = [tuple(int(c) for c in row) for row in data["forms"]]
    ncols = model.n * model.group.order
    return [
        f
        for f in forms
        if len(f) == ncols
        and all(sum(a * v for a, v in zip(f, vert)) >= 0 for vert in model.vertices)
    ]


def _facet_forms(model: PolytopeModel):
    key = (model.group.orders, model.n)
    if key not in _FACET_CACHE:
        forms = _load_precomputed_facets(model)
        if forms is None and model.n == 3 and model.group.order <= _FACET_ORDER_LIMIT:
            from .dd import ambient_facet_forms

            forms = ambient_facet_forms(model, time_budget=_FACET_TIME_BUDGET)
        _FACET_CACHE[key] = forms or None
    return _FACET_CACHE[key]


def _multiset_tables(group: GroupSpec, k: int):
    """Per-degree data: every size-k multiset of element indices with its
    count vector, group sum and translation-class key, grouped by sum."""
    t = _tables(group)
    n_elem = t.n_elem
    add, neg = t.add, t.neg
    multisets = list(combinations_with_replacement(range(n_elem), k))
    by_sum: dict[int, list] = {s: [] for s in range(n_elem)}
    classes = []
    for ms in multisets:
        counts = [0] * n_elem
        s = 0
        for i in ms:
            counts[i] += 1
            s = add[s][i]
        key = min(
            tuple(sorted(add[i][g] for i in ms)) for g in range(n_elem)
        )
        entry = (ms, tuple(counts), key)
        by_sum[s].append(entry)
        if key == ms:
            classes.append(entry)
    return t, classes, by_sum


def _classify(m1, m2, m3, k, model, pairs1, pairs2, reach3, scan: DegreeScan):
    """'witness' | 'hole' | 'outside' for one candidate lattice point."""
    # Cheap support-cover rejection: every supported element of each block
    # must occur in some zero-sum tuple drawn from the three supports.
    for a, pairs in pairs1:
        if m1[a] and not any(m2[b] and m3[c] for b, c in pairs):
            return "outside"
    for b, pairs in pairs2:
        if m2[b] and not any(m1[a] and m3[c] for a, c in pairs):
            return "outside"
    for c in range(len(m3)):
        if m3[c] and not any(m1[a] and m2[b] for a, b in reach3[c]):
            return "outside"

    scan.decompose_calls += 1
    dec = _Decomposer(model)
    found = dec.search((m1, m2, m3), k)
    scan.decompose_nodes += dec.nodes
    if found is not None:
        return "witness"
    scan.lp_calls += 1
    ambient = m1 + m2 + m3
    if dilation_weights(ambient, k, model) is not None:
        return "hole"
    return "outside"


def _scan_degree_tripod(
    model: PolytopeModel,
    k: int,
    *,
    stop_on_hole: bool,
    on_member=None,
    class_range=None,
    facet_forms="auto",
) -> DegreeScan:
    group = model.group
    t, classes, by_sum = _multiset_tables(group, k)
    n_elem = t.n_elem
    add, neg = t.add, t.neg
    scan = DegreeScan(degree=k)

    if facet_forms == "auto":
        facet_forms = _facet_forms(model)
    d1 = d2 = d3_by_sum = None
    if facet_forms:
        import numpy as np

        f = np.asarray(facet_forms, dtype=np.int64)
        # Integer dot products stay far below the int64 range: coefficients
        # are small and each candidate block has k entries.
        if int(np.abs(f).max()) * k * 3 * n_elem >= 2**62:
            raise PolytopeError("facet coefficients too large for exact filter")
        f1, f2, f3 = (f[:, j * n_elem : (j + 1) * n_elem].T for j in range(3))
        class_counts = np.asarray([c for _, c, _ in classes], dtype=np.int64)
        d1 = class_counts @ f1
        d2 = class_counts @ f2
        d3_by_sum = {
            s: np.asarray([c for _, c, _ in entries], dtype=np.int64) @ f3
            for s, entries in by_sum.items()
            if entries
        }

    lo, hi = (0, len(classes)) if class_range is None else class_range
    for i1 in range(lo, hi):
        ms1, m1, _ = classes[i1]
        supp1 = [a for a in range(n_elem) if m1[a]]
        s1 = 0
        for i in ms1:
            s1 = add[s1][i]
        for i2 in range(i1, len(classes)):
            ms2, m2, _ = classes[i2]
            supp2 = [b for b in range(n_elem) if m2[b]]
            s2 = 0
            for i in ms2:
                s2 = add[s2][i]
            target = neg[add[s1][s2]]

            pairs1 = [
                (a, [(b, neg[add[a][b]]) for b in supp2]) for a in supp1
            ]
            pairs2 = [
                (b, [(a, neg[add[a][b]]) for a in supp1]) for b in supp2
            ]
            reach3 = [[] for _ in range(n_elem)]
            for a in supp1:
                row = add[a]
                for b in supp2:
                    reach3[neg[row[b]]].append((a, b))

            if d3_by_sum is not None:
                mask = ((d3_by_sum[target] + (d1[i1] + d2[i2])) >= 0).all(axis=1)
            for j3, (ms3, m3, key3) in enumerate(by_sum[target]):
                if key3 < ms2:
                    continue
                scan.candidates += 1
                if d3_by_sum is not None and not mask[j3]:
                    scan.facet_rejects += 1
                    continue
                status = _classify(m1, m2, m3, k, model, pairs1, pairs2, reach3, scan)
                if status == "outside":
                    continue
                scan.members += 1
                pres = _presentation_of_counts((m1, m2, m3), group)
                if status == "hole":
                    scan.holes.append(pres)
                    if stop_on_hole:
                        return scan
                elif on_member is not None:
                    on_member(pres)
    return scan


def _scan_shard(args):
    orders, n, k, lo, hi, stop_on_hole, forms = args
    model = build_model(make_group(orders), n)
    return _scan_degree_tripod(
        model, k, stop_on_hole=stop_on_hole, class_range=(lo, hi), facet_forms=forms
    )


def _scan_degree_generic(
    model: PolytopeModel, k: int, *, stop_on_hole: bool, on_member=None
) -> DegreeScan:
    """No symmetry reduction; used for n > 3 and for oracle-style scans."""
    group = model.group
    t = _tables(group)
    n_elem, add, neg = t.n_elem, t.add, t.neg
    _, _, by_sum = _multiset_tables(group, k)
    all_ms = [e for entries in by_sum.values() for e in entries]
    all_ms.sort()
    scan = DegreeScan(degree=k)

    for combo in product(all_ms, repeat=model.n - 1):
        s = 0
        for ms, _, _ in combo:
            for i in ms:
                s = add[s][i]
        target = neg[s]
        for ms_last, m_last, _ in by_sum[target]:
            marginals = tuple(c for _, c, _ in combo) + (m_last,)
            scan.candidates += 1
            scan.decompose_calls += 1
            dec = _Decomposer(model)
            found = dec.search(marginals, k)
            scan.decompose_nodes += dec.nodes
            if found is not None:
                status = "witness"
            else:
                scan.lp_calls += 1
                ambient = tuple(v for m in marginals for v in m)
                status = (
                    "hole"
                    if dilation_weights(ambient, k, model) is not None
                    else "outside"
                )
            if status == "outside":
                continue
            scan.members += 1
            pres = _presentation_of_counts(marginals, group)
            if status == "hole":
                scan.holes.append(pres)
                if stop_on_hole:
                    return scan
            elif on_member is not None:
                on_member(pres)
    return scan


def scan_degree(
    model: PolytopeModel,
    k: int,
    *,
    stop_on_hole: bool = True,
    on_member=None,
    workers: int = 1,
) -> DegreeScan:
    if k < 1:
        raise PolytopeError("degree must be >= 1")
    if model.n != 3:
        return _scan_degree_generic(
            model, k, stop_on_hole=stop_on_hole, on_member=on_member
        )
    if workers <= 1 or on_member is not None:
        return _scan_degree_tripod(
            model, k, stop_on_hole=stop_on_hole, on_member=on_member
        )

    _, classes, _ = _multiset_tables(model.group, k)
    n_classes = len(classes)
    bounds = [
        (n_classes * i // workers, n_classes * (i + 1) // workers)
        for i in range(workers)
    ]
    forms = _facet_forms(model)
    merged = DegreeScan(degree=k)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(
            pool.map(
                _scan_shard,
                [
                    (model.group.orders, model.n, k, lo, hi, stop_on_hole, forms)
                    for lo, hi in bounds
                ],
            )
        )
    # Shards are merged in canonical (class-range) order so hole ordering is
    # identical to a single-worker run.
    for part in results:
        merged.merge(part)
        merged.holes.extend(part.holes)
    if stop_on_hole and merged.holes:
        merged.holes = merged.holes[:1]
    return merged


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def enumerate_degree(k: int, model: PolytopeModel, canonical: bool = False):
    """All degree-k lattice points of the k-th dilation, as presentations.

    With ``canonical=True`` exactly one representative per symmetry orbit is
    returned (the orbit-minimal serialization), in sorted order.
    """
    group = model.group
    found: list[GPresentation] = []
    scan_members: list[GPresentation] = []
    scan = scan_degree(
        model, k, stop_on_hole=False, on_member=scan_members.append
    )
    scan_members.extend(scan.holes)
    key = lambda p: tuple(tuple(group.index(g) for g in b) for b in p.blocks)
    if canonical or model.n == 3:
        seen = set()
        for pres in scan_members:
            canon = canonical_presentation(pres, group)
            if canon.blocks not in seen:
                seen.add(canon.blocks)
                found.append(canon)
        if not canonical:
            expanded = []
            for pres in found:
                expanded.extend(symmetry_orbit(pres, group))
            found = expanded
    else:
        found = scan_members
    return sorted(set(found), key=key)


def check_degree(k: int, model: PolytopeModel, *, workers: int = 1):
    """('verified', scan) if every degree-k point decomposes, else
    ('failed', scan) with the first hole recorded in the scan."""
    if k == 1:
        return "verified", DegreeScan(degree=1)
    scan = scan_degree(model, k, stop_on_hole=True, workers=workers)
    return ("failed" if scan.holes else "verified"), scan


def certificate_for(
    point: GPresentation, k: int, model: PolytopeModel, search_stats=None
) -> NonNormalityCertificate:
    """Package a hole as a certificate (exact membership + non-decomposition)."""
    point = point.canonical(model.group)
    weights = dilation_weights(point.to_point(model.group), k, model)
    if weights is None:
        raise CertificateError("point is not in the k-th dilation")
    if decompose(point, k, model) is not None:
        raise CertificateError("point decomposes; not a hole")
    return NonNormalityCertificate(
        point=point,
        degree=k,
        membership=weights,
        attestation=(
            f"exhaustive backtracking over zero-sum tuples found no multiset "
            f"of {k} vertices summing to the point"
        ),
        search_stats=dict(search_stats or {}),
    )


def check_normality(
    model: PolytopeModel, max_degree: int, *, workers: int = 1
) -> NormalityReport:
    if max_degree < 2:
        raise PolytopeError("max_degree must be >= 2")
    bound = min(max_degree, model.dim - 1)
    checked = []
    for k in range(2, bound + 1):
        status, scan = check_degree(k, model, workers=workers)
        checked.append(
            {
                "degree": k,
                "candidates": scan.candidates,
                "members": scan.members,
                "status": status,
            }
        )
        if status == "failed":
            hole = scan.holes[0]
            cert = certificate_for(
                hole,
                k,
                model,
                search_stats={
                    "candidates": scan.candidates,
                    "decompose_calls": scan.decompose_calls,
                    "decompose_nodes": scan.decompose_nodes,
                    "lp_calls": scan.lp_calls,
                },
            )
            return NormalityReport(
                group=model.group,
                n=model.n,
                dim=model.dim,
                max_degree=max_degree,
                checked_degrees=checked,
                verdict="non-normal",
                certificate=cert,
            )
    verdict = "normal" if max_degree >= model.dim - 1 else "inconclusive"
    return NormalityReport(
        group=model.group,
        n=model.n,
        dim=model.dim,
        max_degree=max_degree,
        checked_degrees=checked,
        verdict=verdict,
    )


def find_witness(
    model: PolytopeModel, k_min: int, k_max: int, *, workers: int = 1
) -> NonNormalityCertificate | None:
    """First hole by ascending degree, then scan order, as a certificate."""
    if not 2 <= k_min <= k_max:
        raise PolytopeError("need 2 <= k_min <= k_max")
    for k in range(k_min, min(k_max, model.dim - 1) + 1):
        status, scan = check_degree(k, model, workers=workers)
        if status == "failed":
            return certificate_for(
                scan.holes[0],
                k,
                model,
                search_stats={
                    "candidates": scan.candidates,
                    "decompose_calls": scan.decompose_calls,
                    "decompose_nodes": scan.decompose_nodes,
                    "lp_calls": scan.lp_calls,
                },
            )
    return None


def z11_witness_certificate(model: PolytopeModel) -> NonNormalityCertificate:
    """Certificate for the explicit Z11 degree-8 hole."""
    if model.group.orders != (11,) or model.n != 3:
        raise PolytopeError("the explicit witness is specific to the Z11 tripod")
    point = presentation(model.group, *Z11_WITNESS_BLOCKS)
    return certificate_for(point, 8, model, search_stats={"source": "explicit"})


def verify_certificate(cert: NonNormalityCertificate, model: PolytopeModel) -> bool:
    """Re-check a certificate from its data alone: exact membership weights
    and a fresh exhaustive decomposition run."""
    group = model.group
    try:
        cert.point.validate(group)
    except (PolytopeError, ValueError) as exc:
        raise CertificateError(f"bad certificate point: {exc}") from exc
    if len(cert.point.blocks) != model.n or cert.point.degree != cert.degree:
        raise CertificateError("certificate degree does not match its point")
    k = cert.degree
    target = cert.point.to_point(group)
    if not in_lattice(target, group, model.n):
        return False
    total_w = Fraction(0)
    acc = [Fraction(0)] * len(target)
    for i, w in cert.membership:
        if not 0 <= i < len(model.vertices):
            raise CertificateError(f"vertex index {i} out of range")
        if w < 0:
            return False
        total_w += w
        for j, v in enumerate(model.vertices[i]):
            if v:
                acc[j] += w * v
    if total_w != k or [Fraction(v) for v in target] != acc:
        return False
    return decompose(cert.point, k, model) is None


def load_certificate(data: dict, group: GroupSpec) -> NonNormalityCertificate:
    return NonNormalityCertificate.from_json(data, group)


def dumps(obj: dict) -> str:
    """Canonical JSON serialization (sorted keys, stable separators)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"
