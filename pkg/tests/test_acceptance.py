"""Acceptance suite: one pass/fail line per criterion.

Each criterion prints exactly one line `[PASS] criterion N: ...` or
`[FAIL] criterion N: ...` (run pytest with -s or read the captured output).
All checks are exact; no tolerances beyond stated runtime targets.
"""

import json
import time
from contextlib import contextmanager

from grouptope.groups import abelian_groups_of_order, make_group
from grouptope.normality import (
    Z11_WITNESS_BLOCKS,
    check_normality,
    decompose,
    verify_certificate,
    z11_witness_certificate,
)
from grouptope.polytope import (
    build_model,
    dilation_weights,
    halve,
    in_lattice,
    point_to_presentation,
    presentation,
    vertices,
)
from grouptope import graphs
from grouptope.cli import main as cli_main

# Degrees at which the ascending search first finds a hole; discovered by
# scripts/ascending_search.py and frozen here.
EXPECTED_HOLE_DEGREES = {
    (9,): 6,
    (3, 3): 6,
}

NORMAL_SMALL = ([2], [3], [4], [2, 2])

STRONG_TUPLES = {
    (19,): (1, 1, 7, 15, 0, 1),
    (21,): (3, 3, 1, 9, 0, 3),
    (5, 5): ((1, 2), (0, 1), (1, 1), (2, 2), (0, 0), (1, 4)),
    (9, 3): ((5, 2), (2, 2), (3, 1), (1, 0), (0, 0), (5, 2)),
}
TRIANGLE_TUPLES = {
    (3, 3, 3): (
        ((1, 1, 0), (0, 0, 1), (0, 2, 2), (2, 2, 0), (0, 0, 0), (1, 1, 0)),
        1,
    ),
    (17,): ((3, 2, 2, 6, 0, 3), 1),
    (15,): ((3, 10, 1, 1, 0, 8), 2),
    (13,): ((1, 1, 1, 9, 0, 1), 4),
}


# One line per criterion; conftest.py echoes these into the terminal
# summary so they are visible under plain `pytest -v`.
RESULT_LINES: list[str] = []


def _emit(line):
    RESULT_LINES.append(line)
    print(line, flush=True)


@contextmanager
def criterion(n, description):
    try:
        yield
    except Exception:
        _emit(f"[FAIL] criterion {n}: {description}")
        raise
    _emit(f"[PASS] criterion {n}: {description}")


def elems_of(group, h):
    return tuple(
        (v % group.orders[0],) if isinstance(v, int) else tuple(v) for v in h
    )


def test_criterion_1_vertex_counts():
    with criterion(1, "vertex counts |G|^2 for the nine tripod groups, <1s each"):
        for orders in ([2], [3], [4], [2, 2], [5], [7], [9], [3, 3], [11]):
            group = make_group(orders)
            t0 = time.time()
            vs = vertices(group, 3)
            assert len(vs) == group.order**2, group.label
            assert time.time() - t0 < 1.0, group.label


def test_criterion_2_normality_verdicts():
    with criterion(
        2,
        "Z2/Z3/Z4/Z2xZ2/Z5 normal by complete scans; Z9 and Z3xZ3 non-normal "
        "at degree 6 with verified ascending-search certificates; Z7 verified "
        "through degree 4 with an honest inconclusive report (full check "
        "beyond desk scale, normality accepted as external)",
    ):
        for orders in NORMAL_SMALL:
            group = make_group(orders)
            model = build_model(group, 3)
            t0 = time.time()
            report = check_normality(model, max_degree=model.dim - 1)
            assert report.verdict == "normal", group.label
            assert time.time() - t0 < 600, group.label

        model = build_model(make_group([5]), 3)
        report = check_normality(model, max_degree=model.dim - 1)
        assert report.verdict == "normal"
        assert [d["degree"] for d in report.checked_degrees] == list(
            range(2, model.dim)
        )

        for orders, expected_degree in EXPECTED_HOLE_DEGREES.items():
            group = make_group(list(orders))
            model = build_model(group, 3)
            t0 = time.time()
            report = check_normality(model, max_degree=expected_degree)
            assert report.verdict == "non-normal", group.label
            cert = report.certificate
            assert cert.degree == expected_degree, group.label
            assert verify_certificate(cert, model), group.label
            assert time.time() - t0 < 3600, group.label

        model = build_model(make_group([7]), 3)
        report = check_normality(model, max_degree=4)
        assert report.verdict == "inconclusive"
        assert [d["degree"] for d in report.checked_degrees] == [2, 3, 4]
        assert all(d["status"] == "verified" for d in report.checked_degrees)


def test_criterion_3_z11_certificate():
    with criterion(
        3,
        "Z11 explicit point: in lattice, in 8P exactly, non-decomposable "
        "(exhaustive), within 5 minutes",
    ):
        t0 = time.time()
        group = make_group([11])
        model = build_model(group, 3)
        pres = presentation(group, *Z11_WITNESS_BLOCKS)
        x = pres.to_point(group)
        assert in_lattice(x, group, 3)
        weights = dilation_weights(x, 8, model)
        assert weights is not None and sum(w for _, w in weights) == 8
        assert decompose(pres, 8, model) is None
        cert = z11_witness_certificate(model)
        assert verify_certificate(cert, model)
        assert time.time() - t0 < 300


def test_criterion_4_lemma_pipeline():
    with criterion(
        4,
        "all eight published h-tuples pass their stated hypothesis with the "
        "stated extra-zero-triple counts and halve to degree-6 holes",
    ):
        t_spec = graphs.main_triangle()
        t_ids = set(t_spec.edge_ids())
        cases = [
            (orders, h, "strong", 0) for orders, h in STRONG_TUPLES.items()
        ] + [
            (orders, h, "triangle", n_extra)
            for orders, (h, n_extra) in TRIANGLE_TUPLES.items()
        ]
        for orders, h, kind, n_extra in cases:
            group = make_group(list(orders))
            t0 = time.time()
            f = graphs.good_from_h_tuple(elems_of(group, h), group)
            extras = graphs.extra_zero_triples(f)
            if kind == "strong":
                assert graphs.check_condition(f), group.label
                assert extras == [], group.label
            else:
                ok, violations = graphs.check_condition2(f, t_spec)
                assert ok, (group.label, violations)
                assert len(extras) == n_extra, group.label
                assert all(len(set(tr) & t_ids) != 1 for tr in extras)
            x = halve(graphs.point_of(f), group, 3)
            model = build_model(group, 3)
            assert decompose(point_to_presentation(x, group, 3), 6, model) is None
            assert time.time() - t0 < 60, group.label


def test_criterion_5_counting_argument():
    with criterion(
        5,
        "condition counts (1,15,27,43), every form has a unit coefficient "
        "mod all odd orders, Z45 random search succeeds within 10^4 trials",
    ):
        g = graphs.truncated_tetrahedron()
        t_spec = graphs.main_triangle()
        assert graphs.count_conditions(g, t_spec) == (1, 15, 27, 43)
        forms = graphs.condition_forms(g, t_spec)
        assert len(forms) == 43
        assert all(graphs.has_odd_unit_coefficient(f) for _, f in forms)
        result = graphs.search_h(
            make_group([45]), mode="random", seed=0, max_trials=10_000
        )
        assert result is not None and result.trials <= 10_000


def test_criterion_6_integer_window():
    with criterion(
        6,
        "window [-26,21], 23/25 absent, zeros only at vertices; reductions "
        "pass for odd n in 23..41 (mod 21 is impossible on this graph and "
        "Z21 is covered by its own tuple; see docs)",
    ):
        h = (7, 7, -4, -6, 0, 7)
        w = graphs.integer_window_check(h)
        assert w.integral
        assert (w.low, w.high) == (-26, 21)
        assert -23 not in w.attained and -25 not in w.attained
        assert w.zeros_only_at_vertices
        for n in range(23, 42, 2):
            group = make_group([n])
            f = graphs.good_from_h_tuple(graphs.reduce_h_mod(h, group), group)
            assert graphs.check_condition(f), n
        # Z21 via its dedicated tuple
        group = make_group([21])
        f = graphs.good_from_h_tuple(
            elems_of(group, STRONG_TUPLES[(21,)]), group
        )
        assert graphs.check_condition(f)


def test_criterion_7_property_suites():
    with criterion(
        7,
        "property suites active: decompose soundness/completeness, halving "
        "lemma (1000 even points per odd group), symmetry, certificate "
        "round-trip (see test_normality.py / test_polytope.py hypothesis "
        "suites for the generative versions)",
    ):
        import random

        # halving lemma: 1000 random even lattice points per odd-order group
        for orders in ([3], [5], [9], [3, 3]):
            group = make_group(orders)
            elems = group.elements()
            rng = random.Random(42)
            for _ in range(1000):
                k = rng.randint(1, 5)
                blocks = []
                acc = group.zero()
                for _j in range(3):
                    block = [rng.choice(elems) for _ in range(k)]
                    blocks.append(block)
                    for e in block:
                        acc = group.add(acc, e)
                blocks[2][-1] = group.sub(blocks[2][-1], acc)
                x = tuple(
                    2 * v
                    for v in presentation(group, *blocks).to_point(group)
                )
                assert in_lattice(x, group, 3)
                assert in_lattice(halve(x, group, 3), group, 3)

        # decompose completeness vs brute force at tiny scale
        from itertools import combinations_with_replacement

        model = build_model(make_group([2]), 3)
        group = model.group
        n_elem = group.order
        for k in (2, 3, 4):
            for c1 in combinations_with_replacement(range(n_elem), k):
                for c2 in combinations_with_replacement(range(n_elem), k):
                    if (sum(c1) + sum(c2)) % 2:
                        continue
                    for c3 in combinations_with_replacement(range(n_elem), k):
                        if (sum(c2) + sum(c3)) % 2:
                            continue
                        x = [0] * 6
                        for i in c1:
                            x[i] += 1
                        for i in c2:
                            x[2 + i] += 1
                        for i in c3:
                            x[4 + i] += 1
                        if (sum(c1) + sum(c2) + sum(c3)) % 2:
                            continue
                        pres = point_to_presentation(tuple(x), group, 3)
                        got = decompose(pres, k, model) is not None
                        brute = False
                        for combo in combinations_with_replacement(
                            range(len(model.vertices)), k
                        ):
                            tot = [0] * 6
                            for i in combo:
                                for j, v in enumerate(model.vertices[i]):
                                    tot[j] += v
                            if tot == x:
                                brute = True
                                break
                        assert got == brute

        # symmetry action: translation permutes the vertex set and
        # decomposability is constant on symmetry orbits (sampled)
        from grouptope.normality import symmetry_orbit, translate_presentation

        group = make_group([3])
        model = build_model(group, 3)
        elems = group.elements()
        for g in elems:
            shifts = (g, g, group.neg(group.add(g, g)))
            translated = {
                translate_presentation(
                    point_to_presentation(v, group, 3), shifts, group
                ).to_point(group)
                for v in model.vertices
            }
            assert translated == set(model.vertices)
        rng = random.Random(7)
        for _ in range(25):
            k = rng.randint(2, 4)
            blocks = []
            acc = group.zero()
            for _j in range(3):
                block = [rng.choice(elems) for _ in range(k)]
                blocks.append(block)
                for e in block:
                    acc = group.add(acc, e)
            blocks[2][-1] = group.sub(blocks[2][-1], acc)
            pres = presentation(group, *blocks)
            base = decompose(pres, k, model) is not None
            for other in symmetry_orbit(pres, group):
                assert (decompose(other, k, model) is not None) == base

        # certificate round-trip through serialization
        from grouptope.normality import (
            NonNormalityCertificate,
            certificate_for,
            check_degree,
            dumps,
        )

        group6 = make_group([6])
        model6 = build_model(group6, 3)
        status, scan = check_degree(4, model6)
        assert status == "failed"
        cert = certificate_for(scan.holes[0], 4, model6)
        blob = json.loads(dumps({"certificate": cert.to_json()}))
        back = NonNormalityCertificate.from_json(blob["certificate"], group6)
        assert verify_certificate(back, model6)


def test_criterion_8_classification_table(tmp_path):
    with criterion(
        8,
        "classification for all abelian groups of order <= 11: normal "
        "exactly {Z2, Z3, Z2xZ2, Z4, Z5, Z7-with-caveat}",
    ):
        out = tmp_path / "classification.json"
        code = cli_main(["classify", "--max-order", "11", "--out", str(out)])
        assert code == 0
        rows = json.loads(out.read_text())["rows"]
        labels = {tuple(r["group"]): r for r in rows}
        expected_groups = set()
        for order in range(2, 12):
            for g in abelian_groups_of_order(order):
                expected_groups.add(g.orders)
        assert set(labels) == expected_groups
        normal = {g for g, r in labels.items() if r["verdict"] == "normal"}
        assert normal == {(2,), (3,), (4,), (2, 2), (5,), (7,)}
        assert labels[(7,)]["method"] == "scan-to-degree-4+accepted-external"
        for g, r in labels.items():
            if r["verdict"] == "non-normal":
                assert r["witness_degree"] is not None
