#!/usr/bin/env python3
"""Recompute the general-type classification table and diff it against the
published one.

Writes the rows as CSV (same format as `hmsurf table --out`), optionally the
full discrepancy report as JSON, and prints a one-screen summary.  Exits 0
even when discrepancies exist - they are findings, not failures.
"""

import argparse
import json
import sys
import time

from hmsurf.chern import table_diff, theorem_table
from hmsurf.cli import _rows_csv


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=853,
                    help="largest discriminant to include (default 853)")
    ap.add_argument("--out", default="computed_table.csv",
                    help="CSV output path (default computed_table.csv)")
    ap.add_argument("--diff", default=None,
                    help="also write the discrepancy report as JSON here")
    ap.add_argument("--strict-n", action="store_true",
                    help="only consider degrees n with n-1 an achievable norm")
    ap.add_argument("--zeta-mode", choices=("exact", "bound"), default=None,
                    help="force one volume-term variant instead of the default")
    ap.add_argument("--precision", type=int, default=128)
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    rows = theorem_table(dmax=args.dmax, strict_n=args.strict_n,
                         zeta_mode=args.zeta_mode,
                         precision_bits=args.precision)
    diff = table_diff(rows, precision_bits=args.precision)
    elapsed = time.perf_counter() - t0

    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(_rows_csv(rows))
    if args.diff:
        with open(args.diff, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(diff, sort_keys=True, indent=2) + "\n")

    print(f"{len(rows)} rows in {elapsed:.1f}s -> {args.out}")
    print(f"published comparison: {diff['agree']}/{diff['compared']} rows agree")
    for entry in diff["discrepancies"]:
        ours = entry["computed"]
        pub = entry["published"]
        alt = " (floor-zeta variant matches published)" \
            if entry["alt_agrees_with_published"] else ""
        print(f"  D={entry['D']}: computed n_min={ours['n_min']} "
              f"excl={[n for n, _ in ours['exclusions']]} vs published "
              f"n_min={pub['n_min']} excl={[n for n, _ in pub['exclusions']]}"
              f" - differs at n={entry['disagree_at']}{alt}")
    if diff["unmatched"]:
        print(f"  not in the published table: {diff['unmatched']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
