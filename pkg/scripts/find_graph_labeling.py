#!/usr/bin/env python3
"""Search for the frozen truncated-tetrahedron labeling convention.

The graph machinery fixes three conventions: a proper 3-edge-coloring of the
triangle-replacement graph, the order in which the six connecting edges take
the values h1..h6, and a distinguished triangle for the triangle-relative
hypothesis.  This script searches all valid combinations for the
lexicographically first one under which the whole validation suite passes:

  * the four strong-hypothesis tuples (Z19, Z21, Z5xZ5, Z9xZ3) produce good
    labelings whose zero-sum tricolor triples all meet at a vertex;
  * the four triangle-hypothesis tuples (Z3xZ3xZ3, Z17, Z15, Z13) pass the
    triangle conditions with their expected numbers of extra zero triples,
    none of which uses exactly one triangle edge;
  * the integer tuple (7, 7, -4, -6, 0, 7) is integral with tricolor sums in
    [-26, 21] and zero sums only at vertices;
  * the condition count for the distinguished triangle is (1, 15, 27, 43).

The winning constants are printed in the exact form frozen in
src/grouptope/graphs.py.
"""

from __future__ import annotations

from itertools import permutations

from grouptope.graphs import (
    COLORS,
    GraphError,
    _EXTERNAL_PAIRS,
    _build_graph,
    check_condition,
    check_condition2,
    count_conditions,
    extra_zero_triples,
    good_from_externals,
    triangle_spec,
)
from grouptope.groups import make_group

STRONG_CASES = [
    ([19], (1, 1, 7, 15, 0, 1)),
    ([21], (3, 3, 1, 9, 0, 3)),
    ([5, 5], ((1, 2), (0, 1), (1, 1), (2, 2), (0, 0), (1, 4))),
    ([9, 3], ((5, 2), (2, 2), (3, 1), (1, 0), (0, 0), (5, 2))),
]

# (orders, h, expected number of extra zero triples)
TRIANGLE_CASES = [
    ([3, 3, 3], ((1, 1, 0), (0, 0, 1), (0, 2, 2), (2, 2, 0), (0, 0, 0), (1, 1, 0)), 1),
    ([17], (3, 2, 2, 6, 0, 3), 1),
    ([15], (3, 10, 1, 1, 0, 8), 2),
    ([13], (1, 1, 1, 9, 0, 1), 4),
]

WINDOW_H = (7, 7, -4, -6, 0, 7)
WINDOW = (-26, 21)
EXPECTED_COUNTS = (1, 15, 27, 43)


def as_elements(group, h):
    out = []
    for v in h:
        if isinstance(v, int):
            v = (v % group.orders[0],)
        out.append(tuple(v))
    return tuple(out)


def mod_reductions_ok(graph, assignment, moduli):
    for n in moduli:
        group = make_group([n])
        f = good_from_externals(
            graph,
            dict(zip(assignment, as_elements(group, WINDOW_H))),
            group,
        )
        if not check_condition(f):
            return False
    return True


def integer_window_ok(graph, assignment):
    f = good_from_externals(graph, dict(zip(assignment, WINDOW_H)), None)
    if not all(isinstance(v, int) for v in f.values):
        return False
    by_color = graph.edges_by_color
    lo = hi = 0
    for e1 in by_color["B"]:
        for e2 in by_color["Y"]:
            partial = f.values[e1] + f.values[e2]
            for e3 in by_color["R"]:
                s = partial + f.values[e3]
                lo, hi = min(lo, s), max(hi, s)
                if s == 0:
                    sets = [set(graph.endpoints(e)) for e in (e1, e2, e3)]
                    if not (sets[0] & sets[1] & sets[2]):
                        return False
    return (lo, hi) == WINDOW


def strong_cases_ok(graph, assignment):
    for orders, h in STRONG_CASES:
        group = make_group(orders)
        f = good_from_externals(
            graph, dict(zip(assignment, as_elements(group, h))), group
        )
        if not check_condition(f):
            return False
    return True


def triangle_cases_ok(graph, assignment, tri_index):
    spec = triangle_spec(graph, graph.triangles[tri_index])
    for orders, h, n_extra in TRIANGLE_CASES:
        group = make_group(orders)
        f = good_from_externals(
            graph, dict(zip(assignment, as_elements(group, h))), group
        )
        ok, _ = check_condition2(f, spec)
        if not ok or len(extra_zero_triples(f)) != n_extra:
            return False
    return count_conditions(graph, spec) == EXPECTED_COUNTS


def search(moduli):
    from itertools import product

    valid = 0
    checked = 0
    for combo in product(permutations(COLORS), repeat=4):
        try:
            graph = _build_graph(combo)
        except GraphError:
            continue
        valid += 1
        ext_ids = graph.external_edge_ids
        for assignment in permutations(ext_ids):
            checked += 1
            if not integer_window_ok(graph, assignment):
                continue
            if not mod_reductions_ok(graph, assignment, moduli):
                continue
            if not strong_cases_ok(graph, assignment):
                continue
            for tri_index in range(len(graph.triangles)):
                if triangle_cases_ok(graph, assignment, tri_index):
                    return combo, assignment, tri_index, valid, checked
    return None


def main() -> None:
    # Strictest first: also demand the mod-21 reduction keeps zero sums at
    # vertices.  The published window argument only needs odd n >= 23 (the
    # nonzero multiples of n in [-26, 21] are -23 and -25), so fall back to
    # that requirement if the strict variant is unsatisfiable.
    strict = list(range(21, 42, 2))
    relaxed = list(range(23, 42, 2))
    found = search(strict)
    if found is None:
        print("no labeling passes the mod-21 reduction; relaxing to n >= 23")
        found = search(relaxed)
    if found is None:
        print("no labeling found")
        return
    combo, assignment, tri_index, valid, checked = found
    print(f"valid colorings: {valid}, assignments checked: {checked}")
    print("_COLORING = (")
    for tri in combo:
        print(f"    {tri!r},")
    print(")")
    print(f"_H_EDGE_IDS = {assignment!r}")
    print(f"_MAIN_TRIANGLE_INDEX = {tri_index}")


if __name__ == "__main__":
    main()
