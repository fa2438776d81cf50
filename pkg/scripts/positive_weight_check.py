"""Positive-weight monochromatic search at n=6, d=3.

    python scripts/positive_weight_check.py [--restarts 12] [--seed 0]
"""

import argparse

from bicolor.experiments import fidelity_curve, positive_weight_check


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--d", type=int, default=3)
    parser.add_argument("--restarts", type=int, default=12, help="restarts per topology")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    report = positive_weight_check(args.n, args.d, args.restarts, seed=args.seed)
    print(report.summary())
    print()
    print("explicit positive family, F = 1 / (1 + eps^4 / 3):")
    for eps, f in fidelity_curve([1.0, 0.5, 0.2, 0.1, 0.01]):
        print(f"  eps {eps:<6g} F {f:.12g}")


if __name__ == "__main__":
    main()
