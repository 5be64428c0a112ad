"""Ascending-degree hole search for one or more groups.

Scans degrees 2, 3, ... (up to dim(P)-1 or --max-degree) and stops at the
first degree with a lattice hole, emitting a machine-checkable certificate.
This is the experiment that discovered the failing degrees frozen in
tests/test_acceptance.py.

Usage:
    python3 scripts/ascending_search.py Z9 Z3xZ3 --out-dir results/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from grouptope.groups import make_group
from grouptope.normality import certificate_for, check_degree, dumps
from grouptope.polytope import build_model


@dataclass(frozen=True)
class SearchConfig:
    labels: tuple[str, ...]
    leaves: int = 3
    max_degree: int | None = None
    workers: int = 1
    out_dir: Path | None = None


def parse_group(label: str):
    return make_group([int(p) for p in label.replace("Z", "").split("x")])


def run_one(label: str, cfg: SearchConfig) -> int | None:
    group = parse_group(label)
    model = build_model(group, cfg.leaves)
    top = cfg.max_degree if cfg.max_degree is not None else model.dim - 1
    for k in range(2, top + 1):
        t0 = time.time()
        status, scan = check_degree(k, model, workers=cfg.workers)
        print(
            f"{group.label} k={k} {status} candidates={scan.candidates} "
            f"members={scan.members} facet_rejects={scan.facet_rejects} "
            f"lp_calls={scan.lp_calls} {time.time() - t0:.1f}s",
            flush=True,
        )
        if status == "failed":
            cert = certificate_for(scan.holes[0], k, model)
            text = dumps(
                {"group": list(group.orders), "n": cfg.leaves, "certificate": cert.to_json()}
            )
            if cfg.out_dir is not None:
                cfg.out_dir.mkdir(parents=True, exist_ok=True)
                path = cfg.out_dir / f"hole_{group.label}_n{cfg.leaves}.json"
                path.write_text(text)
                print(f"certificate -> {path}")
            else:
                print(text)
            return k
    print(f"{group.label}: no hole found through degree {top}")
    return None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="+", help="labels like Z9 or Z3xZ3")
    ap.add_argument("--leaves", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out-dir", type=Path, default=None)
    args = ap.parse_args()
    cfg = SearchConfig(
        labels=tuple(args.groups),
        leaves=args.leaves,
        max_degree=args.max_degree,
        workers=args.workers,
        out_dir=args.out_dir,
    )
    for label in cfg.labels:
        run_one(label, cfg)


if __name__ == "__main__":
    main()
