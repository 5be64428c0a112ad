#!/usr/bin/env python3
"""Precompute facet inequality lists for the scan prefilter.

Runs the double-description facet enumeration for the requested groups and
stores the resulting ambient integer forms under src/grouptope/data/, where
the normality scans pick them up automatically.  A time budget makes the
output a verified partial list for big groups; partial lists are sound (every
form is vertex-checked on load) and merely filter less.

Usage:
    python3 scripts/precompute_facets.py Z5 Z7 --budget 600
"""

from __future__ import annotations

import argparse
import json
import pathlib
import time

from grouptope import build_model, make_group
from grouptope.dd import ambient_facet_forms

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "src/grouptope/data"


def parse_group(label: str):
    orders = [int(p.lstrip("Zz")) for p in label.replace("×", "x").split("x")]
    return make_group(orders)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("groups", nargs="+", help="group labels, e.g. Z5 Z3x3 Z9")
    ap.add_argument("--leaves", type=int, default=3)
    ap.add_argument("--budget", type=float, default=None,
                    help="time budget in seconds per group (default: none)")
    args = ap.parse_args()

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for label in args.groups:
        group = parse_group(label)
        model = build_model(group, args.leaves)
        t0 = time.time()
        forms = ambient_facet_forms(model, time_budget=args.budget)
        elapsed = time.time() - t0
        out = DATA_DIR / f"facets_{group.label}_n{args.leaves}.json"
        payload = {
            "group": list(group.orders),
            "n": args.leaves,
            "count": len(forms),
            "complete": args.budget is None,
            "forms": [list(f) for f in sorted(forms)],
        }
        out.write_text(json.dumps(payload) + "\n")
        print(f"{group.label}: {len(forms)} forms in {elapsed:.1f}s -> {out.name}")


if __name__ == "__main__":
    main()
