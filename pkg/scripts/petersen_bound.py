#!/usr/bin/env python3
"""Certified stability-number bounds for a graph via simplex grid sweeps.

Minimizes x^T (I + A) x over grids of increasing denominator and rounds the
reciprocal up to a lower bound on the stability number; compares against the
exact branch-and-bound value when the graph is small enough.

Usage: python scripts/petersen_bound.py [--graph data/petersen.edges] [--r-max 6]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from simplex_grid_opt import alpha_lower_bound, exact_alpha, load_graph

DEFAULT_GRAPH = Path(__file__).resolve().parent.parent / "data" / "petersen.edges"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--graph", default=str(DEFAULT_GRAPH))
    parser.add_argument("--r-max", type=int, default=6)
    args = parser.parse_args()

    g = load_graph(args.graph)
    print(f"graph: {g.n} vertices, {len(g.edges)} edges")
    print("r  grid_value  alpha_lb  evaluations")
    for r in range(1, args.r_max + 1):
        bound = alpha_lower_bound(g, r)
        print(f"{r:<2} {str(bound.grid_value):<11} {bound.alpha_lb:<9} {bound.evaluations}")
    if g.n <= 25:
        print(f"exact stability number: {exact_alpha(g)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
