"""Run every bound and relation over all connected graphs up to a given order.

Anomalies are re-evaluated at 50 significant digits so that rounding can be
told apart from genuine near-equality.

    python scripts/sweep_bounds.py --n-max 7
"""

import argparse
from collections import Counter

from agindex.bounds import BOUNDS, high_precision_slack, verify_bounds
from agindex.enumeration import enumerate_connected
from agindex.graph_io import write_graph6
from agindex.relations import verify_relations


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    applicable, tight = Counter(), Counter()
    anomalies = []
    graphs = 0
    for n in range(2, args.n_max + 1):
        for g in enumerate_connected(n):
            graphs += 1
            for r in verify_bounds(g, args.tol) + verify_relations(g, args.tol):
                if not r.applicable:
                    continue
                applicable[r.check_id] += 1
                tight[r.check_id] += r.equality
                if r.anomaly:
                    anomalies.append((g, r))

    print(f"{graphs} connected graphs on 2..{args.n_max} vertices")
    print(f"{'check':<10}{'applicable':>12}{'tight':>8}")
    for cid in applicable:
        print(f"{cid:<10}{applicable[cid]:>12}{tight[cid]:>8}")
    print(f"\n{len(anomalies)} anomalies")
    for g, r in anomalies:
        line = f"  {r.check_id} {write_graph6(g)} degrees={sorted(g.degrees)} slack={r.slack:.6e} ({r.anomaly})"
        if r.check_id in BOUNDS:
            line += f" slack@50={float(high_precision_slack(g, r.check_id)):.12e}"
        print(line)


if __name__ == "__main__":
    main()
