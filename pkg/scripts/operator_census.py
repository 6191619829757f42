#!/usr/bin/env python3
"""Count twisting operators of the small classification entries over GF(2) or GF(3).

For each entry of dimension <= 3 that passes the axioms, enumerate every
Rota-Baxter, Nijenhuis, injective averaging and centroid operator, twist
by it and confirm the result is again a dialgebra.  Then sample commuting
centroid pairs and compare the image condition with the forced twist.
"""
import argparse
import random
import time
from collections import Counter

from bihomdi import linalg as la
from bihomdi.constructions import (
    averaging_twist,
    centroid_image_condition,
    centroid_twist_pair,
    force_centroid_twist,
    nijenhuis_twist,
    rota_baxter_twist,
)
from bihomdi.core import check_axioms
from bihomdi.corpus import corpus_build, corpus_ids
from bihomdi.field import GF
from bihomdi import search


def census(D):
    kinds = {
        "rb": (search.rota_baxter_operators(D), lambda t: rota_baxter_twist(t, D)),
        "nij": (search.nijenhuis_operators(D), lambda t: nijenhuis_twist(t, D)),
        "avg": (search.averaging_operators(D), lambda t: averaging_twist(t, 0, 0, D)),
        "cen": (search.centroid_operators(D), lambda t: centroid_twist_pair(D, t, t)),
    }
    counts, broken = {}, 0
    for name, (ops, twist) in kinds.items():
        counts[name] = len(ops)
        broken += sum(not check_axioms(twist(t)).passed for t in ops)
    return counts, broken, kinds["cen"][0]


def main():
    ap = argparse.ArgumentParser(description="operator census")
    ap.add_argument("--p", type=int, default=2, choices=(2, 3))
    ap.add_argument("--pairs", type=int, default=200, help="centroid pairs to sample")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    F = GF(args.p)
    rng = random.Random(args.seed)

    print(f"{'entry':<14}{'rb':>6}{'nij':>6}{'avg':>6}{'cen':>6}  broken twists")
    centroids = []
    for eid in corpus_ids():
        D = corpus_build(eid, field=F)
        if D.n > 3 or not check_axioms(D).passed:
            continue
        t0 = time.perf_counter()
        counts, broken, cen = census(D)
        centroids.append((D, cen))
        print(f"{eid:<14}" + "".join(f"{counts[k]:>6}" for k in ("rb", "nij", "avg", "cen"))
              + f"  {broken}   ({time.perf_counter() - t0:.2f}s)")

    # image condition vs the forced twist
    tally = Counter()
    for _ in range(args.pairs):
        D, ops = rng.choice(centroids)
        phi, psi = rng.choice(ops), rng.choice(ops)
        if not la.commutes(phi, psi):
            continue
        cond = centroid_image_condition(D, phi, psi)
        passes = check_axioms(force_centroid_twist(D, phi, psi)).passed
        tally[(cond, passes)] += 1
    print("\ncentroid pairs (image condition, forced twist passes): count")
    for key in sorted(tally):
        print(f"  {key}: {tally[key]}")


if __name__ == "__main__":
    main()
