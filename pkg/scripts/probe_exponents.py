"""Measured |a0| exponents of det W_Q(G o P_k) for k beyond 3, plus tower valuations.

Nothing is asserted; the output is a JSON report under reports/.
"""

import argparse
from pathlib import Path

from qwalk.certify import probe_tower
from qwalk.graphs import enumerate_graphs
from qwalk.report import dumps, envelope
from qwalk.walk import det_walk, q_constant_term, verify_det_identity


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, nargs="+", default=[6, 7])
    ap.add_argument("-k", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--tower-t", type=int, default=2)
    ap.add_argument("--tower-cap", type=int, default=64)
    ap.add_argument("--out", type=Path, default=Path("reports/probe_exponents.json"))
    args = ap.parse_args()
    items = []
    for n in args.n:
        for g in enumerate_graphs(n):
            if not det_walk(g) or abs(q_constant_term(g)) < 2:
                continue
            for k in args.k:
                items.append({"check": "det", **verify_det_identity(g, k).to_json()})
            for k in (2, 3):
                for t in range(1, args.tower_t + 1):
                    if n * k**t <= args.tower_cap:
                        items.append(probe_tower(g, k, t, args.tower_cap))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(dumps(envelope("identities", items, {"count": len(items)})))
    print(f"{len(items)} records -> {args.out}")


if __name__ == "__main__":
    main()
