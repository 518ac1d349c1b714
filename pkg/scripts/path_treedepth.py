"""Table of alpha-treedepth on paths: exact search, median construction, formula."""

import argparse
import time

from alphawidth.graph import path_graph
from alphawidth.treedepth import alpha_depth, alpha_td_exact, alpha_td_path_formula, path_elimination_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=24, help="largest path for the exact search")
    ap.add_argument("--max-construction", type=int, default=100)
    args = ap.parse_args()
    print(f"{'k':>4} {'formula':>7} {'built':>5} {'exact':>5} {'secs':>6}")
    for k in range(1, args.max_construction + 1):
        built = alpha_depth(path_graph(k), path_elimination_tree(k))
        exact, secs = "-", ""
        if k <= args.max_k:
            t = time.perf_counter()
            exact = alpha_td_exact(path_graph(k))[0]
            secs = f"{time.perf_counter() - t:.2f}"
        print(f"{k:>4} {alpha_td_path_formula(k):>7} {built:>5} {exact:>5} {secs:>6}")


if __name__ == "__main__":
    main()
