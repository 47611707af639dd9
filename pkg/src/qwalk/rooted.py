"""Rooted products G o P_k with a path rooted at an endpoint, towers, and path polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, GraphError
from .poly import IntPolynomial

TOWER_VERTEX_CAP = 10_000


def rooted_product_path(g: Graph, k: int) -> Graph:
    """Glue a path on k vertices, by one endpoint, to every vertex of ``g``.

    Vertices come level-major: vertex ``s*n + i`` is the copy of ``i`` at
    distance ``s`` from its root, so level 0 carries ``g`` itself.
    """
    if k < 2:
        raise GraphError(f"path length k must be >= 2, got {k}")
    n = g.n
    rows = [0] * (k * n)
    for i, r in enumerate(g.rows):
        rows[i] = r
    for s in range(k - 1):
        for i in range(n):
            a, b = s * n + i, (s + 1) * n + i
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(k * n, tuple(rows))


def rooted_tower(g: Graph, k: int, t: int, cap: int = TOWER_VERTEX_CAP) -> Graph:
    if k < 2:
        raise GraphError(f"path length k must be >= 2, got {k}")
    if t < 0:
        raise GraphError(f"tower depth must be >= 0, got {t}")
    if g.n * k**t > cap:
        raise GraphError(f"tower would have {g.n * k**t} vertices, above the cap of {cap}")
    for _ in range(t):
        g = rooted_product_path(g, k)
    return g


def path_matrix_a(k: int) -> list[list[int]]:
    """(k-1)x(k-1) tridiagonal: 2 on the diagonal except a final 1, ones beside it."""
    m = k - 1
    out = [[0] * m for _ in range(m)]
    for i in range(m):
        out[i][i] = 2 if i < m - 1 else 1
        if i + 1 < m:
            out[i][i + 1] = out[i + 1][i] = 1
    return out


def path_matrix_b(k: int) -> list[list[int]]:
    """k x k tridiagonal with diagonal 1, 2, ..., 2, 1 (the signless Laplacian of a path)."""
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        out[i][i] = 1 if i in (0, k - 1) else 2
        if i + 1 < k:
            out[i][i + 1] = out[i + 1][i] = 1
    return out


@dataclass(frozen=True)
class PathPolys:
    """a = a_{k-1}, b = b_k and f = a_0 + ... + a_{k-1} for one path length k."""

    k: int
    a: IntPolynomial
    b: IntPolynomial
    f: IntPolynomial


@lru_cache(maxsize=None)
def _a_seq(m: int) -> tuple[IntPolynomial, ...]:
    """a_0 .. a_m from a_j = (t-2) a_{j-1} - a_{j-2}, a_0 = 1, a_1 = t-1."""
    seq = [IntPolynomial((1,)), IntPolynomial((-1, 1))]
    t_minus_2 = IntPolynomial((-2, 1))
    while len(seq) <= m:
        seq.append(t_minus_2 * seq[-1] - seq[-2])
    return tuple(seq[: m + 1])


def path_char_polys(k: int) -> PathPolys:
    if k < 1:
        raise ValueError(f"path length k must be >= 1, got {k}")
    a = _a_seq(k)
    if k == 1:
        b = IntPolynomial((-1, 1))
    else:
        b = IntPolynomial((-1, 1)) * a[k - 1] - a[k - 2]
    f = IntPolynomial(())
    for j in range(k):
        f = f + a[j]
    return PathPolys(k=k, a=a[k - 1], b=b, f=f)


def phi_coefficients(k: int) -> list[tuple[int, int]]:
    """(c_i, d_i) with phi(t) = b_k(t) - lam * a_{k-1}(t) = sum (c_i + d_i*lam) t^i."""
    pp = path_char_polys(k)
    c = list(pp.b.coeffs)
    d = [-x for x in pp.a.coeffs] + [0] * (len(c) - len(pp.a.coeffs))
    return list(zip(c, d))
