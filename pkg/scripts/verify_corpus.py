#!/usr/bin/env python3
"""Check every classification entry under each parameter profile and print a table.

usage: python3 scripts/verify_corpus.py [--field q|gf2|gf3] [--json OUT]
"""
import argparse
import json
import sys

from bihomdi.corpus import PROFILES, corpus_verify, report_json
from bihomdi.field import field_by_name


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", default="q")
    ap.add_argument("--json", help="write the per-profile reports here")
    args = ap.parse_args()
    F = field_by_name(args.field)

    reports = {p: corpus_verify(p, F) for p in PROFILES}
    ids = [e["id"] for e in reports[PROFILES[0]]["entries"]]
    print(f"{'entry':<14}" + "".join(f"{p:>22}" for p in PROFILES))
    for i, eid in enumerate(ids):
        cells = []
        for p in PROFILES:
            e = reports[p]["entries"][i]
            if e["status"] == "pass":
                c = e["cohomology"]
                cells.append(f"pass H2=({c['z2']},{c['b2']},{c['h2']})")
            else:
                failed = [a["axiom"] for a in e["axioms"] if not a["pass"]]
                cells.append("fails " + ",".join(failed))
        print(f"{eid:<14}" + "".join(f"{c:>22}" for c in cells))
    for p in PROFILES:
        print(f"{p}: {reports[p]['summary']}")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump({p: json.loads(report_json(r)) for p, r in reports.items()}, fh, indent=2, sort_keys=True)
    return 0 if all(r["summary"]["table_discrepancy"] == 0 for r in reports.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
