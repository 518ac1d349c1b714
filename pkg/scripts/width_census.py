"""Distribution of (alpha-tw, alpha-td) over all graphs up to a given order,
optionally restricted to claw-free graphs, with wheel presence per class."""

import argparse
from collections import Counter

from alphawidth.enumerate import all_graphs
from alphawidth.induced_minor import find_induced_minor, wheel_graph
from alphawidth.treedepth import alpha_td_exact
from alphawidth.width import alpha_tw_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("max_n", type=int, nargs="?", default=6)
    ap.add_argument("--claw-free", action="store_true")
    ap.add_argument("--connected", action="store_true")
    ap.add_argument("--wheel", type=int, default=4, help="wheel size to test for, 0 to skip")
    args = ap.parse_args()
    counts = Counter()
    wheels = Counter()
    W = wheel_graph(args.wheel) if args.wheel else None
    for G in all_graphs(args.max_n, connected=args.connected, hereditary="claw-free" if args.claw_free else None):
        key = (G.n, alpha_tw_exact(G)[0], alpha_td_exact(G)[0])
        counts[key] += 1
        if W is not None and find_induced_minor(G, W) is not None:
            wheels[key] += 1
    head = f"{'n':>3} {'a-tw':>5} {'a-td':>5} {'graphs':>7}"
    print(head + (f" {'W' + str(args.wheel):>6}" if W else ""))
    for key in sorted(counts):
        row = f"{key[0]:>3} {key[1]:>5} {key[2]:>5} {counts[key]:>7}"
        print(row + (f" {wheels[key]:>6}" if W else ""))


if __name__ == "__main__":
    main()
