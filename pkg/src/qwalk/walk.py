"""Signless-Laplacian walk matrices, their determinants, and exact identity checks."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .factor import two_adic_valuation
from .graphs import Graph, serialize_graph6, signless_laplacian, to_edge_list_text, GRAPH6_MAX_N
from .intmat import IntMatrix, char_poly_exact, det_exact
from .poly import IntPolynomial
from .rooted import TOWER_VERTEX_CAP, path_char_polys, rooted_product_path


class IdentityViolation(AssertionError):
    """An exact determinant identity failed; carries both sides."""

    def __init__(self, message: str, lhs: int, rhs: int):
        super().__init__(f"{message}: lhs={lhs} rhs={rhs}")
        self.lhs = lhs
        self.rhs = rhs


def graph_id(g: Graph) -> str:
    if g.n <= GRAPH6_MAX_N:
        return serialize_graph6(g)
    digest = hashlib.sha256(to_edge_list_text(g).encode()).hexdigest()[:16]
    return f"edges:{g.n}:{digest}"


def _walk_columns(g: Graph) -> list[list[int]]:
    q = IntMatrix.from_rows(signless_laplacian(g))
    col = [1] * g.n
    cols = [col]
    for _ in range(1, g.n):
        col = q.matvec(col)
        cols.append(col)
    return cols


def q_walk_matrix(g: Graph) -> IntMatrix:
    """[e, Qe, ..., Q^{n-1} e] built by repeated matrix-vector products."""
    return IntMatrix.from_columns(_walk_columns(g))


def modified_q_walk_matrix(g: Graph) -> IntMatrix:
    """[e, Qe/2, ..., Q^{n-1} e/2]; halving is exact because Qe = 2*degrees."""
    cols = _walk_columns(g)
    halved = [cols[0]]
    for c in cols[1:]:
        assert all(x % 2 == 0 for x in c), "odd entry in a walk column"
        halved.append([x // 2 for x in c])
    return IntMatrix.from_columns(halved)


@lru_cache(maxsize=4096)
def det_walk(g: Graph) -> int:
    return det_exact(q_walk_matrix(g))


@lru_cache(maxsize=4096)
def q_constant_term(g: Graph) -> int:
    """Constant term of det(xI - Q(G)), i.e. (-1)^n det Q(G)."""
    return (-1) ** g.n * det_exact(signless_laplacian(g))


@lru_cache(maxsize=4096)
def q_char_poly(g: Graph) -> IntPolynomial:
    return char_poly_exact(signless_laplacian(g))


@dataclass(frozen=True)
class WalkReport:
    graph: str
    n: int
    det_wq: int
    det_wq_tilde: int
    v2: Optional[int]  # None when det_wq == 0
    a0: int
    controllable: bool

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "det_WQ": str(self.det_wq),
            "det_WQtilde": str(self.det_wq_tilde),
            "v2": self.v2,
            "a0": str(self.a0),
            "controllable": self.controllable,
        }


def walk_report(g: Graph) -> WalkReport:
    d = det_walk(g)
    dt = det_exact(modified_q_walk_matrix(g))
    return WalkReport(
        graph=graph_id(g),
        n=g.n,
        det_wq=d,
        det_wq_tilde=dt,
        v2=two_adic_valuation(d) if d else None,
        a0=q_constant_term(g),
        controllable=d != 0,
    )


# --- rooted-product determinant identities -----------------------------------

@dataclass(frozen=True)
class IdentityReport:
    graph: str
    k: int
    mode: str  # "assert" for k in {2, 3}, "probe" otherwise
    lhs: int  # det W_Q(G o P_k)
    det_wq: int
    a0: int
    rhs: Optional[int]  # predicted |lhs|; None in probe mode
    holds: Optional[bool]
    exponent: Optional[str] = None  # probe: e with |lhs| = |a0|^e |det|^k
    exponent_exact: Optional[bool] = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "k": self.k,
            "mode": self.mode,
            "lhs": str(self.lhs),
            "det_WQ": str(self.det_wq),
            "a0": str(self.a0),
            "rhs": None if self.rhs is None else str(self.rhs),
            "holds": self.holds,
            "exponent": self.exponent,
            "exponent_exact": self.exponent_exact,
            "note": self.note,
        }


def _probe_exponent(lhs: int, a0: int, det: int, k: int) -> tuple[Optional[str], Optional[bool], str]:
    if abs(a0) < 2 or lhs == 0 or det == 0:
        return None, None, "indeterminate"
    base = abs(det) ** k
    ratio_num, ratio_den = abs(lhs), base
    g = math.gcd(ratio_num, ratio_den)
    ratio_num //= g
    ratio_den //= g
    a = abs(a0)
    if ratio_den == 1:
        e, r = 0, ratio_num
        while r % a == 0:
            r //= a
            e += 1
        if r == 1:
            return str(e), True, ""
    log_ratio = (math.log(ratio_num) - math.log(ratio_den)) / math.log(a)
    return f"{log_ratio:.12g}", False, "not an exact power of |a0|"


def verify_det_identity(g: Graph, k: int, cap: int = TOWER_VERTEX_CAP) -> IdentityReport:
    """Compare det W_Q(G o P_k) with |a0|^(k-1) |det W_Q(G)|^k for k = 2, 3.

    For k >= 4 nothing is asserted: the measured exponent of |a0| is reported.
    Raises IdentityViolation when k is 2 or 3 and the absolute values differ.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if g.n * k > cap:
        raise ValueError(f"G o P_{k} has {g.n * k} vertices, above the cap of {cap}")
    h = rooted_product_path(g, k)
    lhs = det_walk(h)
    d = det_walk(g)
    a0 = q_constant_term(g)
    gid = graph_id(g)
    if k in (2, 3):
        rhs = abs(a0) ** (k - 1) * abs(d) ** k
        if abs(lhs) != rhs:
            raise IdentityViolation(f"walk determinant identity fails for {gid}, k={k}", lhs, rhs)
        return IdentityReport(gid, k, "assert", lhs, d, a0, rhs, True)
    e, exact, note = _probe_exponent(lhs, a0, d, k)
    return IdentityReport(gid, k, "probe", lhs, d, a0, None, None, e, exact, note)


def rooted_char_poly_via_resultant(p_q: IntPolynomial, k: int) -> IntPolynomial:
    """Res_lam(P(lam), b_k(t) - lam a_{k-1}(t)) = a_{k-1}^n P(b_k / a_{k-1}) for monic P of degree n.

    Expanded as sum_i c_i b_k^i a_{k-1}^(n-i), which clears the denominators.
    """
    pp = path_char_polys(k)
    n = p_q.degree
    a_pows = [IntPolynomial((1,))]
    b_pows = [IntPolynomial((1,))]
    for _ in range(n):
        a_pows.append(a_pows[-1] * pp.a)
        b_pows.append(b_pows[-1] * pp.b)
    out = IntPolynomial(())
    for i, c in enumerate(p_q.coeffs):
        if c:
            out = out + (b_pows[i] * a_pows[n - i]).scale(c)
    return out


def verify_charpoly_resultant(g: Graph, k: int) -> bool:
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if g.n * k > 60:
        raise ValueError("verify_charpoly_resultant is limited to k*n <= 60")
    direct = q_char_poly(rooted_product_path(g, k))
    via = rooted_char_poly_via_resultant(q_char_poly(g), k)
    return direct == via or direct == -via


# --- floating-point eigenvector formula ----------------------------------------

@dataclass(frozen=True)
class EigenCheck:
    exact: int  # det W_Q(G)
    estimate: float  # |prod_{i<j}(l_i - l_j) prod_i e^T x_i|
    residual: float
    absolute: bool  # True when the small-value absolute rule applied
    ok: bool


def eigen_product(g: Graph, cluster_tol: float = 1e-8) -> float:
    """|prod_{i<j}(l_i - l_j) * prod_i e^T x_i| from a symmetric eigendecomposition of Q(G).

    Eigenvalues within ``cluster_tol`` (relative to the spectral radius) are
    one repeated eigenvalue, whose pairwise differences are exactly zero.
    """
    q = np.array(signless_laplacian(g), dtype=float)
    lam, vecs = np.linalg.eigh(q)
    scale = max(1.0, float(np.max(np.abs(lam))))
    n = g.n
    # group into eigenspaces; repeated eigenvalues make the product vanish
    if any(lam[i + 1] - lam[i] <= cluster_tol * scale for i in range(n - 1)):
        return 0.0
    proj = vecs.T @ np.ones(n)
    if np.any(np.abs(proj) <= cluster_tol):
        return 0.0
    log_abs = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            log_abs += math.log(abs(lam[i] - lam[j]))
        log_abs += math.log(abs(proj[i]))
    return math.exp(log_abs)


def verify_eigen_product(g: Graph, tol: float = 1e-6, small: float = 1e-9) -> EigenCheck:
    """Compare |det W_Q(G)| with its eigenvalue/eigenvector product formula.

    Relative difference, unless either side is below ``small`` in absolute
    value; then the other side must be below ``tol`` absolutely.
    """
    exact = det_walk(g)
    try:
        est = eigen_product(g)
    except np.linalg.LinAlgError as exc:
        raise ArithmeticError(f"eigendecomposition failed: {exc}") from None
    ex = float(abs(exact))
    if ex < small or est < small:
        res = max(ex, est)
        return EigenCheck(exact, est, res, True, res < tol)
    res = abs(est - ex) / ex
    return EigenCheck(exact, est, res, False, res < tol)
