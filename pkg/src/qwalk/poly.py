"""Univariate integer polynomials, resultants and arithmetic over F_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _trim(cs: Iterable[int]) -> tuple[int, ...]:
    out = list(cs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Coefficients constant term first; the zero polynomial has no coefficients."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(c * x for x in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial((c,))
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else f"{c}*x" if i == 1 else f"{c}*x^{i}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


class ResultantError(ValueError):
    pass


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix."""
    from .intmat import det_exact

    if f.is_zero() or g.is_zero():
        raise ResultantError("resultant with the zero polynomial is undefined")
    return det_exact(sylvester_matrix(f, g))


# --- F_p ----------------------------------------------------------------------

def poly_mod(f: IntPolynomial | Sequence[int], p: int) -> list[int]:
    cs = f.coeffs if isinstance(f, IntPolynomial) else f
    return list(_trim(c % p for c in cs))


def _divmod_p(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, x in enumerate(b):
            a[shift + i] = (a[shift + i] - c * x) % p
        a = list(_trim(a))
    return q, a


def poly_rem_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _divmod_p(list(a), list(b), p)[1]


def poly_gcd_mod_p(f: IntPolynomial, g: IntPolynomial, p: int) -> IntPolynomial:
    """Monic gcd of f and g reduced mod p, coefficients in [0, p)."""
    from .factor import is_probable_prime

    if not is_probable_prime(p):
        raise ValueError(f"{p} is not prime")
    a, b = poly_mod(f, p), poly_mod(g, p)
    if not a and not b:
        raise ValueError("both polynomials vanish mod p")
    while b:
        a, b = b, poly_rem_p(a, b, p)
    inv = pow(a[-1], -1, p)
    return IntPolynomial(c * inv % p for c in a)


def roots_mod_p(f: IntPolynomial, p: int) -> list[int]:
    """All roots in F_p by direct evaluation (for small p only)."""
    cs = poly_mod(f, p)
    if not cs:
        return list(range(p))
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out
