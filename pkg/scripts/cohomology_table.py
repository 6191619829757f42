#!/usr/bin/env python3
"""Second cohomology of the classification entries with trivial coefficients.

Prints dim Z2, dim B2, dim H2 for module dimensions 1..M over the chosen
field, plus the zero-product algebras as a sanity row (expect 2 n^2 m, 0, 2 n^2 m).
"""
import argparse

from bihomdi.cohomology import BiHomModule, cohomology_dims
from bihomdi.core import Dialgebra, check_axioms
from bihomdi.corpus import corpus_build, corpus_ids
from bihomdi.field import field_by_name


def main():
    ap = argparse.ArgumentParser(description="H2 table")
    ap.add_argument("--field", default="q")
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--profile", default="ones")
    args = ap.parse_args()
    F = field_by_name(args.field)
    ms = range(1, args.max_m + 1)

    print(f"{'algebra':<14}{'ok':>4}" + "".join(f"{'m=' + str(m):>16}" for m in ms))
    rows = [(eid, corpus_build(eid, field=F, profile=args.profile)) for eid in corpus_ids()]
    rows += [(f"zero{n}", Dialgebra.zero(n, F)) for n in (1, 2, 3)]
    for name, D in rows:
        ok = "y" if check_axioms(D).passed else "n"
        cells = []
        for m in ms:
            d = cohomology_dims(D, BiHomModule.trivial(m, F))
            cells.append(f"({d.z2},{d.b2},{d.h2})")
        print(f"{name:<14}{ok:>4}" + "".join(f"{c:>16}" for c in cells))


if __name__ == "__main__":
    main()
