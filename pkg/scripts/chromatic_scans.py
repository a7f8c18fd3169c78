"""Chromatic-number scans: threshold for L(n,k) and the chi > 2 AG / Delta question.

    python scripts/chromatic_scans.py --n-max 7
"""

import argparse

from agindex.chromatic import ag_delta_open_question, lnk_open_question_sweep, theorem8_scan
from agindex.enumeration import enumerate_connected
from agindex.graph_io import parse_graph6


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--lnk-n-max", type=int, default=2000)
    args = ap.parse_args()

    print("L(n,k): smallest n* with chi <= 2 GA / dbar on [n*, n_max]")
    for k in range(2, 6):
        rep = theorem8_scan(k, args.lnk_n_max)
        half = args.lnk_n_max // 2
        print(f"  k={k} n*={rep.threshold} residual(n_max)={rep.residual_at(args.lnk_n_max):.3f} "
              f"residual/sqrt(n): {rep.residual_at(half) / half ** 0.5:.4f} -> "
              f"{rep.residual_at(args.lnk_n_max) / args.lnk_n_max ** 0.5:.4f}")

    print("\nchi > 2 AG / Delta, by order")
    for n in range(2, args.n_max + 1):
        rep = ag_delta_open_question(enumerate_connected(n))
        print(f"  n={n}: {len(rep.findings)} of {rep.graphs_scanned}, max ratio {rep.max_ratio:.4f} "
              f"({rep.max_witness})")
        for g6, chi, ratio in rep.findings[:3]:
            g = parse_graph6(g6)
            print(f"      {g6} chi={chi} ratio={ratio:.4f} edges={list(g.edges)}")
    worst = max(lnk_open_question_sweep(200), key=lambda t: t[2])
    print(f"\nL(n,k), n <= 200: max chi Delta / (2 AG) = {worst[2]:.6f} at n={worst[0]}, k={worst[1]}")


if __name__ == "__main__":
    main()
