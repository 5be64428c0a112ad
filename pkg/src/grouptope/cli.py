"""Command-line front end.

Subcommands: vertices, normality, verify, search, classify.  All outputs are
deterministic JSON (CSV additionally for classify) carrying the full run
configuration as a provenance header.

Exit codes: 0 = success / normal, 10 = non-normal (certificate emitted),
20 = inconclusive, 30 = search exhausted without a witness, 2 = usage or
format error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import asdict, dataclass

from .groups import GroupError, GroupSpec, abelian_groups_of_order, make_group
from .normality import (
    SCHEMA_VERSION,
    CertificateError,
    NonNormalityCertificate,
    check_normality,
    dumps,
    find_witness,
    verify_certificate,
    z11_witness_certificate,
)
from .polytope import PolytopeError, build_model

EXIT_OK = 0
EXIT_NON_NORMAL = 10
EXIT_INCONCLUSIVE = 20
EXIT_EXHAUSTED = 30
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce a run; serialized into every output."""

    command: str
    group: tuple[int, ...] | None = None
    leaves: int = 3
    max_degree: int | None = None
    seed: int = 0
    workers: int = 1
    mode: str = "exhaustive"
    max_order: int | None = None

    def header(self) -> dict:
        cfg = {k: v for k, v in asdict(self).items() if v is not None}
        if "group" in cfg:
            cfg["group"] = list(cfg["group"])
        return {"schema_version": SCHEMA_VERSION, "run_config": cfg}


def _parse_group(text: str) -> GroupSpec:
    try:
        orders = [int(p) for p in text.replace("x", ",").split(",") if p]
        return make_group(orders)
    except (ValueError, GroupError) as exc:
        raise SystemExit(f"error: invalid group {text!r}: {exc}")


def _write(out_path: str | None, text: str) -> None:
    if out_path is None or out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


def cmd_vertices(args) -> int:
    group = _parse_group(args.group)
    config = RunConfig(command="vertices", group=group.orders, leaves=args.leaves)
    model = build_model(group, args.leaves)
    payload = config.header()
    payload.update(
        {
            "kind": "vertices",
            "group_label": group.label,
            "vertex_count": len(model.vertices),
            "dim": model.dim,
            "vertices": [list(v) for v in model.vertices],
            "lattice_basis": [list(r) for r in model.lattice_basis],
        }
    )
    _write(args.out, dumps(payload))
    return EXIT_OK


def cmd_normality(args) -> int:
    group = _parse_group(args.group)
    model = build_model(group, args.leaves)
    max_degree = args.max_degree if args.max_degree is not None else model.dim - 1
    config = RunConfig(
        command="normality",
        group=group.orders,
        leaves=args.leaves,
        max_degree=max_degree,
        workers=args.workers,
    )
    report = check_normality(model, max_degree=max_degree, workers=args.workers)
    payload = config.header()
    payload.update(report.to_json())
    payload["group_label"] = group.label
    _write(args.out, dumps(payload))
    if report.verdict == "normal":
        return EXIT_OK
    if report.verdict == "non-normal":
        return EXIT_NON_NORMAL
    return EXIT_INCONCLUSIVE


def cmd_verify(args) -> int:
    try:
        with open(args.path) as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"error: not valid JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE

    cert_data = data.get("certificate", data)
    try:
        orders = data.get("group") or cert_data.get("group")
        if orders is None:
            raise CertificateError("no group field in certificate file")
        group = make_group([int(o) for o in orders])
        n = int(data.get("n", 3))
        cert = NonNormalityCertificate.from_json(cert_data, group)
        model = build_model(group, n)
        ok = verify_certificate(cert, model)
    except (CertificateError, GroupError, PolytopeError) as exc:
        print(f"error: malformed certificate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ok:
        print(f"certificate valid: {group.label} degree {cert.degree}")
        return EXIT_OK
    print(f"certificate INVALID: {group.label} degree {cert.degree}")
    return 1


def _graph_search(group: GroupSpec, args):
    """Graph-based h-tuple search (odd order only); returns payload or None."""
    from . import graphs
    from .normality import certificate_for
    from .polytope import halve, point_to_presentation

    if group.order % 2 == 0:
        return None
    result = graphs.search_h(
        group, mode=args.mode, seed=args.seed, max_trials=args.max_trials
    )
    if result is None:
        return None
    graph = graphs.truncated_tetrahedron()
    f = graphs.good_from_h_tuple(result.h, group)
    point = graphs.point_of(f)
    model = build_model(group, 3)
    half_pres = point_to_presentation(halve(point, group, 3), group, 3)
    cert = certificate_for(
        half_pres,
        graph.vertex_count // 2,
        model,
        search_stats={"source": "graph", "trials": result.trials},
    )
    payload = {
        "kind": "h_search_result",
        "group_label": group.label,
        "group": list(group.orders),
        "n": 3,
        "h": [list(v) for v in result.h],
        "triangle_index": result.triangle_index,
        "trials": result.trials,
        "point": list(point),
        "graph": graph.to_json(),
        "certificate": cert.to_json(),
    }
    return payload


def cmd_search(args) -> int:
    group = _parse_group(args.group)
    config = RunConfig(
        command="search",
        group=group.orders,
        leaves=args.leaves,
        max_degree=args.max_degree,
        seed=args.seed,
        workers=args.workers,
        mode=args.mode,
    )
    payload = config.header()
    payload["group_label"] = group.label

    if args.strategy in ("graph", "auto") and group.order % 2 == 1:
        found = _graph_search(group, args)
        if found is not None:
            payload.update(found)
            _write(args.out, dumps(payload))
            return EXIT_OK
        if args.strategy == "graph":
            payload.update({"kind": "search_exhausted", "witness": None})
            _write(args.out, dumps(payload))
            return EXIT_EXHAUSTED

    model = build_model(group, args.leaves)
    k_max = args.max_degree if args.max_degree is not None else model.dim - 1
    cert = find_witness(model, 2, k_max, workers=args.workers)
    if cert is None:
        payload.update({"kind": "search_exhausted", "witness": None})
        _write(args.out, dumps(payload))
        return EXIT_EXHAUSTED
    payload.update({"kind": "witness", "certificate": cert.to_json()})
    payload["group"] = list(group.orders)
    payload["n"] = args.leaves
    _write(args.out, dumps(payload))
    return EXIT_OK


# Classification shortcuts: the packaged explicit degree-8 point decides
# Z11, and the full Z7 check (degrees up to 17) is beyond desk scale, so Z7
# is scanned through degree 4 and the known "normal" status is accepted as
# externally computed; the method column records this.
_CLASSIFY_DEGREE_CAPS: dict[tuple[int, ...], int] = {(7,): 4}
_ACCEPTED_NORMAL: dict[tuple[int, ...], str] = {
    (7,): "scan-to-degree-4+accepted-external"
}


def _classify_one(group: GroupSpec, max_degree: int | None, workers: int):
    model = build_model(group, 3)
    if group.orders == (11,):
        cert = z11_witness_certificate(model)
        return "non-normal", cert.degree, "explicit-point"
    bound = model.dim - 1 if max_degree is None else min(max_degree, model.dim - 1)
    bound = min(bound, _CLASSIFY_DEGREE_CAPS.get(group.orders, bound))
    report = check_normality(model, max_degree=bound, workers=workers)
    if report.verdict == "non-normal":
        return "non-normal", report.certificate.degree, "scan"
    if report.verdict == "normal":
        return "normal", None, "scan"
    if group.orders in _ACCEPTED_NORMAL:
        return "normal", None, _ACCEPTED_NORMAL[group.orders]
    return "inconclusive", None, f"scan-through-degree-{bound}"


def cmd_classify(args) -> int:
    max_order = args.max_order
    config = RunConfig(
        command="classify",
        max_order=max_order,
        max_degree=args.max_degree,
        workers=args.workers,
    )
    rows = []
    for order in range(2, max_order + 1):
        for group in abelian_groups_of_order(order):
            verdict, degree, how = _classify_one(group, args.max_degree, args.workers)
            rows.append(
                {
                    "group": list(group.orders),
                    "label": group.label,
                    "order": order,
                    "verdict": verdict,
                    "witness_degree": degree,
                    "method": how,
                }
            )
    payload = config.header()
    payload.update({"kind": "classification", "rows": rows})
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("label,order,verdict,witness_degree,method\n")
        for r in rows:
            deg = "" if r["witness_degree"] is None else r["witness_degree"]
            buf.write(
                f"{r['label']},{r['order']},{r['verdict']},{deg},{r['method']}\n"
            )
        _write(args.out, buf.getvalue())
    else:
        _write(args.out, dumps(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grouptope",
        description="Exact normality analysis of group-based claw-tree polytopes",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, group_required=True):
        p.add_argument("--group", required=group_required,
                       help="cyclic factor orders, e.g. 9 or 3,3")
        p.add_argument("--leaves", type=int, default=3)
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("vertices", help="emit vertex list and lattice basis")
    common(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("normality", help="degree-by-degree normality check")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("verify", help="re-verify a serialized certificate")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search for a non-normality witness")
    common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-trials", type=int, default=None)
    p.add_argument(
        "--strategy", choices=("auto", "graph", "polytope"), default="auto",
        help="graph-based h-tuple search, direct polytope scan, or both",
    )
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="classification table up to a group order")
    p.add_argument("--max-order", type=int, default=11)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_classify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupError, PolytopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
