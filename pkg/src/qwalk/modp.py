"""Linear algebra over F_p for arbitrary-size primes."""

from __future__ import annotations

from typing import Sequence

from .factor import is_probable_prime
from .intmat import IntMatrix


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    a = [[x % p for x in r] for r in rows]
    nr, nc = len(a), len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank_mod_p(m: IntMatrix | Sequence[Sequence[int]], p: int) -> int:
    rows = m.tolist() if isinstance(m, IntMatrix) else [list(r) for r in m]
    return len(_rref_mod_p(rows, p)[1])


def nullspace_mod_p(m: IntMatrix | Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of {v : m v = 0 mod p}; each vector scaled so its first nonzero entry is 1."""
    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = m.tolist() if isinstance(m, IntMatrix) else [list(r) for r in m]
    nc = len(rows[0])
    a, pivots = _rref_mod_p(rows, p)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc] % p
        lead = next(x for x in v if x)
        inv = pow(lead, -1, p)
        basis.append([x * inv % p for x in v])
    return basis
