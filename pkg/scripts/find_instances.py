"""Locate example graphs: family members by quotient, and per-prime evidence for G o P_2."""

import argparse
import json

from qwalk.certify import certify_family, p2_analysis
from qwalk.graphs import enumerate_graphs, serialize_graph6


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=7)
    ap.add_argument("--allow-n8", action="store_true")
    ap.add_argument("--quotient", type=int, action="append", default=[], help="report graphs with this |quotient|")
    ap.add_argument("--p2", action="store_true", help="per-prime evidence for every family member of even order")
    args = ap.parse_args()
    for g in enumerate_graphs(args.n, allow_large=args.allow_n8):
        c = certify_family(g)
        q = c.evidence.get("quotient")
        rec = {"graph": serialize_graph6(g), "quotient": q, "verdict": c.verdict.value}
        if q is not None and abs(int(q)) in args.quotient:
            print(json.dumps(rec))
        if args.p2 and c.certified and g.n % 2 == 0:
            full = p2_analysis(g, use_fast_path=False)
            fast = p2_analysis(g, use_fast_path=True)
            rec["conditions_hold"] = full["conditions_hold"]
            rec["fast_path"] = fast["conditions_hold"] if fast["method"] == "fast-path-3-mod-4" else None
            rec["per_prime"] = [
                {k: r[k] for k in ("p", "dim_nullspace", "alpha_norm_mod_p", "cond_i", "cond_ii")} for r in full["per_prime"]
            ]
            print(json.dumps(rec))


if __name__ == "__main__":
    main()
