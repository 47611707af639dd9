"""``qwalk`` command line.

Exit codes: 0 success, 1 identity violation, 2 parse error, 3 internal
contradiction, 64 usage error, 65 oversize input.
"""

from __future__ import annotations

import argparse
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import certify as cz
from .config import RunConfig, default_jobs
from .factor import DEFAULT_BUDGET
from .graphs import Graph, GraphError, UnsupportedSize, enumerate_graphs, parse_edge_list_text, parse_graph6
from .oracle import cross_validate, find_mates, gq_spectrum_key
from .report import dumps, envelope, table
from .walk import IdentityViolation, graph_id, q_constant_term, verify_charpoly_resultant, verify_det_identity, verify_eigen_product, walk_report

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_CONTRADICTION, EXIT_USAGE, EXIT_OVERSIZE = 0, 1, 2, 3, 64, 65

THEOREMS = {
    "4.1": "family", "family": "family",
    "4.4": "rooted", "rooted": "rooted",
    "4.6": "tower", "tower": "tower",
    "5.5": "p2", "p2": "p2",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    def __init__(self, diagnostics: list[str]):
        super().__init__("\n".join(diagnostics))
        self.diagnostics = diagnostics


_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def load_graphs(inline: Sequence[str], files: Sequence[Path]) -> list[Graph]:
    graphs: list[Graph] = []
    diags: list[str] = []
    for i, word in enumerate(inline):
        try:
            graphs.append(parse_graph6(word))
        except GraphError as exc:
            diags.append(f"-g[{i}]: {exc}")
    for path in files:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            diags.append(f"{path}: {exc}")
            continue
        lines = text.splitlines()
        first = next((ln for ln in lines if ln.strip()), "")
        if _EDGE_HEADER.match(first):
            try:
                graphs.append(parse_edge_list_text(text))
            except GraphError as exc:
                diags.append(f"{path}: {exc}")
            continue
        for lineno, ln in enumerate(lines, 1):
            if not ln.strip():
                continue
            try:
                graphs.append(parse_graph6(ln))
            except GraphError as exc:
                diags.append(f"{path}:{lineno}: {exc}")
    if diags:
        raise InputError(diags)
    return graphs


def run_jobs(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _emit(cfg: RunConfig, kind: str, items: list[dict], columns: list[str], summary: dict | None = None) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(dumps(envelope(kind, items, summary)))
    else:
        sys.stdout.write(table(items, columns))
        if summary:
            sys.stdout.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")


def _parse_range(text: str) -> tuple[int, ...]:
    m = re.fullmatch(r"(\d+)(?:\.\.(\d+))?", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected K or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return tuple(range(lo, hi + 1))


# --- per-graph workers (module level so they pickle) ---------------------------

def _walk_item(g: Graph) -> dict:
    return walk_report(g).to_json()


def _certify_item(g: Graph, theorem: str, k: int, t: int, budget: int, verify_cap: int) -> dict:
    if theorem == "family":
        c = cz.certify_family(g, budget)
    elif theorem == "rooted":
        c = cz.certify_rooted(g, k, verify_cap)
    elif theorem == "tower":
        c = cz.certify_tower(g, k, t, verify_cap)
    else:
        c = cz.certify_p2_family(g, budget)
    return c.to_json()


def _det_item(g: Graph, k: int, cap: int) -> dict:
    try:
        rep = verify_det_identity(g, k, cap)
    except IdentityViolation as exc:
        return {"graph": graph_id(g), "check": "det", "k": k, "lhs": str(exc.lhs), "rhs": str(exc.rhs), "holds": False}
    return {"check": "det", **rep.to_json()}


def _charpoly_item(g: Graph, k: int) -> dict:
    return {"graph": graph_id(g), "check": "charpoly", "k": k, "holds": verify_charpoly_resultant(g, k)}


def _eigen_item(g: Graph, tol: float) -> dict:
    r = verify_eigen_product(g, tol)
    return {
        "graph": graph_id(g), "check": "eigen", "det_WQ": str(r.exact), "estimate": r.estimate,
        "residual": r.residual, "absolute_rule": r.absolute, "holds": r.ok,
    }


def _a0_item(g: Graph, k: int, t: int, cap: int) -> dict:
    a0t = cz.tower_constant_term(g, k, t, cap)
    a0 = q_constant_term(g)
    return {
        "graph": graph_id(g), "check": "a0", "k": k, "t": t, "a0": str(a0), "lhs": str(a0t),
        "holds": abs(a0t) == 2 if abs(a0) == 2 else None,
    }


def _probe_item(g: Graph, k: int, t: int | None, cap: int) -> dict:
    if t:
        return cz.probe_tower(g, k, t, cap)
    return {"check": "det", **verify_det_identity(g, k, cap).to_json()}


# --- subcommands ---------------------------------------------------------------

def cmd_walk(args, cfg: RunConfig) -> int:
    graphs = load_graphs(cfg.graphs, cfg.files)
    items = run_jobs(_walk_item, graphs, cfg.jobs)
    _emit(cfg, "walk", items, ["graph", "n", "det_WQ", "det_WQtilde", "v2", "a0", "controllable"])
    return EXIT_OK


def cmd_certify(args, cfg: RunConfig) -> int:
    theorem = THEOREMS.get(args.theorem)
    if theorem is None:
        raise UsageError(f"unknown --theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    if theorem in ("rooted", "tower") and args.k not in (2, 3):
        raise UsageError("-k must be 2 or 3 for this criterion")
    graphs = load_graphs(cfg.graphs, cfg.files)
    fn = partial(_certify_item, theorem=theorem, k=args.k, t=args.t, budget=cfg.budget, verify_cap=cfg.verify_cap)
    items = run_jobs(fn, graphs, cfg.jobs)
    counts: dict[str, int] = {}
    for it in items:
        counts[it["verdict"]] = counts.get(it["verdict"], 0) + 1
    if cfg.fmt == "table" and theorem == "p2":
        rows = []
        for it in items:
            for pp in it["evidence"].get("per_prime", []):
                rows.append({"graph": it["graph"], "verdict": it["verdict"], **pp})
            if not it["evidence"].get("per_prime"):
                rows.append({"graph": it["graph"], "verdict": it["verdict"], "p": None})
        sys.stdout.write(table(rows, ["graph", "verdict", "p", "dim_nullspace", "alpha_norm_mod_p", "cond_i", "cond_ii"]))
        sys.stdout.write(" ".join(f"{k}={v}" for k, v in counts.items()) + "\n")
        return EXIT_OK
    _emit(cfg, "certificates", items, ["graph", "theorem", "verdict", "certified_graph", "reason"], counts)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    graphs = load_graphs(cfg.graphs, cfg.files)
    if args.exhaustive_n is not None:
        graphs += list(enumerate_graphs(args.exhaustive_n))
    if not graphs:
        raise UsageError("no input graphs (use -g, -f or --exhaustive-n)")
    if cfg.probe_k:
        fns = [partial(_probe_item, k=k, t=args.t, cap=cfg.verify_cap if args.t else cfg.tower_cap) for k in cfg.probe_k]
        items = [it for fn in fns for it in run_jobs(fn, graphs, cfg.jobs)]
        _emit(cfg, "identities", items, ["graph", "check", "k", "t", "exponent", "exponent_exact", "v2", "family_verdict", "note"],
              {"count": len(items)})
        return EXIT_OK
    ident = args.identity or "det"
    k = args.k
    if ident == "det":
        fn = partial(_det_item, k=k, cap=cfg.tower_cap)
        cols = ["graph", "k", "holds", "lhs", "rhs", "a0"]
    elif ident == "charpoly":
        fn = partial(_charpoly_item, k=k)
        cols = ["graph", "k", "holds"]
    elif ident == "eigen":
        fn = partial(_eigen_item, tol=args.tol)
        cols = ["graph", "holds", "residual", "det_WQ", "estimate"]
    else:
        fn = partial(_a0_item, k=k, t=args.t or 1, cap=cfg.verify_cap)
        cols = ["graph", "k", "t", "a0", "lhs", "holds"]
    items = run_jobs(fn, graphs, cfg.jobs)
    violations = [it for it in items if it["holds"] is False]
    _emit(cfg, "identities", items, cols, {"count": len(items), "violations": len(violations)})
    for it in violations:
        sys.stderr.write(f"violation: {it['graph']} lhs={it.get('lhs')} rhs={it.get('rhs')}\n")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_mates(args, cfg: RunConfig) -> int:
    if args.cross_validate is not None:
        rep = cross_validate(args.cross_validate, cfg.budget, raise_on_contradiction=False)
        doc = rep.to_json()
        _emit(cfg, "validation", [doc], ["n", "graphs", "certified", "confirmed", "unchecked"],
              {"contradictions": len(rep.contradictions)})
        return EXIT_CONTRADICTION if rep.contradictions else EXIT_OK
    corpus: list[Graph] = []
    if args.enumerate is not None:
        corpus += list(enumerate_graphs(args.enumerate, allow_large=args.allow_n8))
    corpus += load_graphs(cfg.graphs, cfg.files)
    groups = find_mates(corpus)
    items = []
    for grp in groups:
        key = gq_spectrum_key(grp[0])
        items.append({"n": grp[0].n, "key": key.to_json(), "members": [graph_id(g) for g in grp]})
    rows = [{"n": it["n"], "size": len(it["members"]), "members": " ".join(it["members"])} for it in items]
    if cfg.fmt == "json":
        sys.stdout.write(dumps(envelope("mates", items, {"graphs": len(corpus), "groups": len(items)})))
    else:
        sys.stdout.write(table(rows, ["n", "size", "members"]))
        sys.stdout.write(f"graphs={len(corpus)} groups={len(items)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", "--graph", action="append", default=[], help="inline graph6 word (repeatable)")
    common.add_argument("-f", "--file", action="append", default=[], type=Path, help="graph6 lines or an 'n m' edge-list file")
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default $QWALK_JOBS or 1)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="Pollard-rho iterations per composite")
    common.add_argument("--tower-cap", type=int, default=10_000)
    common.add_argument("--verify-cap", type=int, default=cz.DEFAULT_VERIFY_CAP, help="largest order for direct tower determinants")

    p = _Parser(prog="qwalk", description="Signless-Laplacian walk matrices, rooted products and DGQS certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("walk", parents=[common], help="walk-matrix determinants and a0")

    c = sub.add_parser("certify", parents=[common], help="arithmetic DGQS certificates")
    c.add_argument("--theorem", required=True, help="4.1|family, 4.4|rooted, 4.6|tower, 5.5|p2")
    c.add_argument("-k", type=int, default=2)
    c.add_argument("-t", type=int, default=1)

    v = sub.add_parser("verify", parents=[common], help="exact identity checks and exponent probes")
    v.add_argument("--identity", choices=["det", "charpoly", "eigen", "a0"])
    v.add_argument("-k", type=int, default=2)
    v.add_argument("-t", type=int, default=None, help="tower depth (a0 check, tower probe)")
    v.add_argument("--exhaustive-n", type=int, default=None, help="add every graph on N vertices")
    v.add_argument("--probe-k", type=_parse_range, default=(), help="K or A..B; report, never assert")
    v.add_argument("--tol", type=float, default=1e-6)

    m = sub.add_parser("mates", parents=[common], help="generalized Q-cospectral mates and cross-validation")
    m.add_argument("--enumerate", type=int, default=None, metavar="N")
    m.add_argument("--cross-validate", type=int, default=None, metavar="N")
    m.add_argument("--allow-n8", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            graphs=args.graph, files=args.file, fmt=args.format, jobs=args.jobs, budget=args.budget,
            tower_cap=args.tower_cap, verify_cap=args.verify_cap, probe_k=getattr(args, "probe_k", ()),
        )
    except ValueError as exc:
        sys.stderr.write(f"qwalk: {exc}\n")
        return EXIT_USAGE
    handler = {"walk": cmd_walk, "certify": cmd_certify, "verify": cmd_verify, "mates": cmd_mates}[args.command]
    try:
        return handler(args, cfg)
    except InputError as exc:
        for d in exc.diagnostics:
            sys.stderr.write(f"parse error: {d}\n")
        return EXIT_PARSE
    except UsageError as exc:
        sys.stderr.write(f"qwalk: {exc}\n")
        return EXIT_USAGE
    except UnsupportedSize as exc:
        sys.stderr.write(f"qwalk: {exc}\n")
        return EXIT_OVERSIZE
    except IdentityViolation as exc:
        sys.stderr.write(f"qwalk: {exc}\n")
        return EXIT_VIOLATION
    except cz.Contradiction as exc:
        sys.stderr.write(f"qwalk: internal contradiction: {exc}\n")
        return EXIT_CONTRADICTION
    except ValueError as exc:
        sys.stderr.write(f"qwalk: {exc}\n")
        return EXIT_OVERSIZE if "cap" in str(exc) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
