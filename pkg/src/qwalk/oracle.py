"""Brute-force ground truth: generalized Q-spectrum keys and cospectral mates."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .certify import (
    DEFAULT_VERIFY_CAP,
    Certificate,
    Contradiction,
    certify_family,
    certify_p2_family,
    certify_rooted,
    certify_tower,
)
from .factor import DEFAULT_BUDGET
from .graphs import CANON_MAX_N, ENUM_MAX_N, Graph, UnsupportedSize, canonical_graph6, complement, enumerate_graphs, parse_graph6
from .poly import IntPolynomial
from .walk import q_char_poly

ORACLE_MAX_N = ENUM_MAX_N


@dataclass(frozen=True)
class SpectrumKey:
    p_g: IntPolynomial
    p_gc: IntPolynomial

    def to_json(self) -> dict:
        return {"p_g": self.p_g.to_json(), "p_gc": self.p_gc.to_json()}


def gq_spectrum_key(g: Graph) -> SpectrumKey:
    return SpectrumKey(q_char_poly(g), q_char_poly(complement(g)))


def find_mates(corpus: Iterable[Graph]) -> list[list[Graph]]:
    """Groups of >= 2 non-isomorphic graphs with equal keys, as canonical forms.

    Duplicated isomorphism classes in the corpus are merged; groups and
    their members are ordered by canonical graph6.
    """
    buckets: dict[tuple, set[str]] = defaultdict(set)
    for g in corpus:
        if g.n > CANON_MAX_N:
            raise UnsupportedSize(f"find_mates supports n <= {CANON_MAX_N}, got {g.n}")
        key = gq_spectrum_key(g)
        buckets[(g.n, key.p_g.coeffs, key.p_gc.coeffs)].add(canonical_graph6(g))
    groups = [sorted(ws) for ws in buckets.values() if len(ws) > 1]
    groups.sort()
    return [[parse_graph6(w) for w in grp] for grp in groups]


@lru_cache(maxsize=None)
def _key_index(n: int, allow_large: bool) -> dict[SpectrumKey, tuple[str, ...]]:
    idx: dict[SpectrumKey, list[str]] = defaultdict(list)
    for g in enumerate_graphs(n, allow_large=allow_large):
        idx[gq_spectrum_key(g)].append(canonical_graph6(g))
    return {k: tuple(v) for k, v in idx.items()}


def generalized_mates(g: Graph, allow_large: bool = False) -> list[Graph]:
    cap = ORACLE_MAX_N + 1 if allow_large else ORACLE_MAX_N
    if g.n > cap:
        raise UnsupportedSize(f"brute-force oracle supports n <= {cap}, got {g.n}")
    mine = canonical_graph6(g)
    words = _key_index(g.n, allow_large).get(gq_spectrum_key(g), ())
    return [parse_graph6(w) for w in words if w != mine]


def brute_force_dgqs(g: Graph, allow_large: bool = False) -> bool:
    """True iff no other graph on n vertices shares both Q-spectra with ``g``."""
    return not generalized_mates(g, allow_large)


@dataclass
class ValidationReport:
    n: int
    graphs: int = 0
    certified: int = 0
    confirmed: int = 0
    unchecked: int = 0  # certified graphs above the oracle's order cap
    contradictions: list[dict] = field(default_factory=list)
    by_theorem: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "graphs": self.graphs,
            "certified": self.certified,
            "confirmed": self.confirmed,
            "unchecked": self.unchecked,
            "contradictions": self.contradictions,
            "by_theorem": dict(sorted(self.by_theorem.items())),
        }


def all_certificates(g: Graph, budget: int = DEFAULT_BUDGET, verify_cap: int = DEFAULT_VERIFY_CAP) -> list[Certificate]:
    certs = [certify_family(g, budget)]
    for k in (2, 3):
        certs.append(certify_rooted(g, k, verify_cap))
        for t in (1, 2):
            certs.append(certify_tower(g, k, t, verify_cap))
    certs.append(certify_p2_family(g, budget))
    return certs


def cross_validate(n: int, budget: int = DEFAULT_BUDGET, raise_on_contradiction: bool = True) -> ValidationReport:
    """Check every Certified verdict over all graphs of order n against the oracle."""
    if not 1 <= n <= ORACLE_MAX_N:
        raise UnsupportedSize(f"cross_validate supports 1 <= n <= {ORACLE_MAX_N}, got {n}")
    rep = ValidationReport(n)
    for g in enumerate_graphs(n):
        rep.graphs += 1
        for cert in all_certificates(g, budget):
            if not cert.certified:
                continue
            rep.certified += 1
            rep.by_theorem[cert.theorem] = rep.by_theorem.get(cert.theorem, 0) + 1
            target = cert.certified_graph
            if target is None or target.n > ORACLE_MAX_N:
                rep.unchecked += 1
                continue
            mates = generalized_mates(target)
            if mates:
                rep.contradictions.append(
                    {"graph": cert.graph, "theorem": cert.theorem, "mates": [canonical_graph6(m) for m in mates]}
                )
            else:
                rep.confirmed += 1
    if rep.contradictions and raise_on_contradiction:
        first = rep.contradictions[0]
        raise Contradiction(f"certified graph {first['graph']} ({first['theorem']}) has cospectral mates {first['mates']}")
    return rep
