"""2-adic census of det W_Q and Q-cospectral mate counts over all graphs of small order."""

import argparse
import json
from collections import Counter

from qwalk.certify import certify_family, family_exponent
from qwalk.factor import two_adic_valuation
from qwalk.graphs import enumerate_graphs
from qwalk.oracle import find_mates
from qwalk.walk import det_walk


def census(n: int, allow_large: bool) -> dict:
    graphs = list(enumerate_graphs(n, allow_large=allow_large))
    vals = Counter()
    members = 0
    for g in graphs:
        d = det_walk(g)
        if d:
            vals[two_adic_valuation(d)] += 1
            members += certify_family(g).certified
    groups = find_mates(graphs)
    return {
        "n": n,
        "graphs": len(graphs),
        "controllable": sum(vals.values()),
        "v2_histogram": dict(sorted(vals.items())),
        "bound": family_exponent(n),
        "below_bound": sum(c for v, c in vals.items() if v < family_exponent(n)),
        "family_members": members,
        "mate_groups": len(groups),
        "graphs_with_mates": sum(map(len, groups)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--allow-n8", action="store_true")
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        print(json.dumps(census(n, args.allow_n8)), flush=True)


if __name__ == "__main__":
    main()
