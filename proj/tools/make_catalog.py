#!/usr/bin/env python3
"""Write all non-isomorphic graphs of order 1..N (N <= 7) as graph6, one per line.

Uses the networkx graph atlas, which lists every graph up to 7 vertices.
"""
import argparse
import sys

import networkx as nx


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("max_order", type=int, choices=range(1, 8))
    parser.add_argument("--exact", action="store_true", help="only graphs of exactly max_order vertices")
    args = parser.parse_args()

    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > args.max_order or (args.exact and n != args.max_order):
            continue
        sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode("ascii"))


if __name__ == "__main__":
    main()
