"""Where do the sign changes of edge-deletion deltas first appear?

Counts sign patterns over all connected graphs up to --n-max, then searches
uniform-neighbour configurations for the two patterns that small graphs do
not show: a pendant edge whose removal raises GA, and an ascending edge
whose removal raises AG.

    python scripts/edge_sign_phenomena.py
"""

import argparse

from agindex.edge_effects import (
    ag_delta_local,
    check_t13,
    classify_edges,
    delta_global,
    ga_delta_local,
    realize_context,
    scan_uniform_contexts,
)
from agindex.enumeration import enumerate_connected


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    args = ap.parse_args()

    counts = dict(pend_neg=0, pend_pos=0, asc_neg=0, asc_pos=0, desc_neg=0, desc_pos=0)
    min_pend, min_asc = float("inf"), float("inf")
    for n in range(2, args.n_max + 1):
        for g in enumerate_connected(n):
            for r in classify_edges(g):
                ga, ag = r.local.ga_delta, r.local.ag_delta
                if r.context.pendant:
                    counts["pend_neg" if ga < 0 else "pend_pos"] += 1
                    min_pend = min(min_pend, ga)
                if r.ascending:
                    counts["asc_neg" if ag < 0 else "asc_pos"] += 1
                    min_asc = min(min_asc, ag)
                if r.descending:
                    counts["desc_neg" if ag < 0 else "desc_pos"] += 1
    print(f"n <= {args.n_max}: {counts}")
    print(f"  smallest pendant gaDelta {min_pend:.4f}, smallest ascending agDelta {min_asc:.4f}")

    pendant = scan_uniform_contexts([1], range(2, 120), [], range(1, 16),
                                    lambda c: ga_delta_local(c) < 0)
    ascending = scan_uniform_contexts(range(2, 6), range(2, 6), range(2, 30), range(2, 30),
                                      lambda c: check_t13(c).cond_i and ag_delta_local(c) < 0)
    for label, found in (("pendant edge, GA rises", pendant), ("ascending edge, AG rises", ascending)):
        if not found:
            print(f"{label}: none in the grid")
            continue
        ctx = found[0]
        g = realize_context(ctx)
        d = delta_global(g, 0, 1)
        print(f"{label}: {len(found)} contexts; smallest witness n={g.n} "
              f"context={ctx.to_json()} gaDelta={d.ga_delta:.6f} agDelta={d.ag_delta:.6f}")


if __name__ == "__main__":
    main()
