"""Dense integer matrices with exact determinants and characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import IntPolynomial


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise DimensionError("matrix dimensions must be positive")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise DimensionError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(zip(*cols)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def matvec(self, v: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(r, v) if a) for r in self.rows]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]


def _as_rows(m: IntMatrix | Sequence[Sequence[int]]) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.tolist()
    return [list(r) for r in m]


def det_exact(m: IntMatrix | Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Every division in the update is exact over the integers.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (piv * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def char_poly_exact(m: IntMatrix | Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - m) from its values at x = 0..n.

    With integer coefficients the k-th forward difference at 0 is divisible
    by k!, so the expansion in falling factorials x(x-1)...(x-k+1) stays
    integral throughout.
    """
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionError("characteristic polynomial of a non-square matrix")
    values = []
    for t in range(n + 1):
        shifted = [[(t if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
        values.append(det_exact(shifted))
    diffs = []
    cur = values
    for k in range(n + 1):
        diffs.append(cur[0])
        cur = [cur[i + 1] - cur[i] for i in range(len(cur) - 1)]
    result = IntPolynomial(())
    falling = IntPolynomial((1,))
    fact = 1
    for k in range(n + 1):
        if k:
            fact *= k
            falling = falling * IntPolynomial((-(k - 1), 1))
        c, r = divmod(diffs[k], fact)
        assert r == 0, "non-integral interpolation step"
        result = result + falling.scale(c)
    return result
