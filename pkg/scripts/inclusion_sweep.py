"""Build every inclusion diagram for omega <= W and fillings p/q with p <= P, and compare the
diagram verdicts with the slope interval criteria.  Prints one JSON line per mismatch and a
summary line; exits non-zero on any mismatch."""
import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from oneone import braid as br
from oneone.lattice import ProjectiveSlope


def fillings(pmax):
    return [ProjectiveSlope(p, q) for p in range(1, pmax + 1) for q in range(p) if gcd(p, q) == 1]


def _one(job):
    K, f = job
    t0 = time.time()
    rec = br.inclusion_record(K, f)
    rec["seconds"] = round(time.time() - t0, 3)
    return rec


def sweep(wmax, pmax, jobs=1):
    braids, rejected = br.all_braids(wmax)
    work = [(K, f) for K in braids for f in fillings(pmax)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(_one, work, chunksize=4)), rejected
    return [_one(w) for w in work], rejected


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-winding", type=int, default=8)
    ap.add_argument("--max-p", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--all", action="store_true", help="print every record, not only mismatches")
    args = ap.parse_args()
    t0 = time.time()
    recs, rejected = sweep(args.max_winding, args.max_p, args.jobs)
    bad = [r for r in recs if not r["agree"] or r["coherence"] == "Incoherent"]
    for r in recs if args.all else bad:
        print(json.dumps(r))
    print(f"{len(recs)} inclusions, {sum(r['strict'] for r in recs)} strict, {len(bad)} mismatches, "
          f"{rejected} link closures skipped, {time.time() - t0:.1f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
