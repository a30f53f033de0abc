"""Verify catalogued claims exhaustively and print a one-line summary per claim.

Writes the full outcomes as JSON when --out is given.
"""

import argparse
import json
import os
import time

from fintopo.theoremlab import catalog, harness


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--claim", action="append", help="claim id (repeatable); default all")
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--shards", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=int(os.environ.get("FINTOPO_JOBS", os.cpu_count() or 1)))
    ap.add_argument("--budget", type=float, default=1800.0, help="seconds for the whole run")
    ap.add_argument("--out")
    args = ap.parse_args()

    ids = args.claim or catalog.claim_ids()
    start = time.monotonic()
    docs, failed = [], 0
    for cid in ids:
        claim = catalog.get_claim(cid)
        max_n = min(args.max_n, claim.max_n) if claim.kind == "relation" else args.max_n
        left = args.budget - (time.monotonic() - start)
        try:
            o = harness.verify(claim, max_n, shards=args.shards, jobs=args.jobs, budget=left)
        except harness.BudgetExceeded as exc:
            o = exc.outcome
        failed += not o.passed
        tag = "ok" if o.passed else "FAIL"
        vac = " (expected vacuous)" if o.expected_vacuous else ""
        print(f"{tag:4} {cid:10} n<={max_n} instances={o.instances} hits={o.hits}{vac} "
              f"violations={len(o.violations)} {o.wall_time:.1f}s", flush=True)
        docs.append(o.as_dict(timing=True))
    print(f"{len(ids) - failed}/{len(ids)} claims passed in {time.monotonic() - start:.0f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(docs, fh, indent=2, sort_keys=True, default=str)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
