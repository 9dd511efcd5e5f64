"""Binary sextics over Q with exact arithmetic.

A binary sextic f(x, z) = a0*x^6 + a1*x^5*z + ... + a6*z^6 is stored as the
coefficient tuple (a0, ..., a6) with a0 on x^6.  The curve it defines is
y^2 = f(x, 1).  All coefficients are `fractions.Fraction`; every operation
here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class DomainError(ValueError):
    """A precondition on exact-arithmetic input was violated."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class BinarySextic:
    """Homogeneous degree-6 form; immutable."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable) -> None:
        cs = tuple(_frac(c) for c in coeffs)
        if len(cs) != 7:
            raise DomainError("need exactly 7 coefficients a0..a6")
        if all(c == 0 for c in cs):
            raise DomainError("zero form")
        object.__setattr__(self, "coeffs", cs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_primitive(self) -> bool:
        if not self.is_integral():
            return False
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c.numerator))
        return g == 1

    def scaled(self, c) -> "BinarySextic":
        c = _frac(c)
        if c == 0:
            raise DomainError("zero scalar")
        return BinarySextic(tuple(c * a for a in self.coeffs))

    def reversed(self) -> "BinarySextic":
        """The form f(z, x); swaps the roles of the two variables."""
        return BinarySextic(tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class Mobius:
    """Invertible 2x2 matrix acting on (x, z) by substitution."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a, b, c, d) -> None:
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, _frac(v))
        if self.det == 0:
            raise DomainError("singular substitution")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @staticmethod
    def identity() -> "Mobius":
        return Mobius(1, 0, 0, 1)

    @staticmethod
    def diagonal(u, v) -> "Mobius":
        return Mobius(u, 0, 0, v)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def transform(f: BinarySextic, m: Mobius) -> BinarySextic:
    """f^M(X, Z) = f(a*X + b*Z, c*X + d*Z), expanded exactly.

    Right group action: transform(f, M @ N) == transform(transform(f, M), N).
    """
    if m.det == 0:
        raise DomainError("singular substitution")
    # powers of the two linear forms as coefficient vectors in (X, Z)
    out = [Fraction(0)] * 7
    xa = _binomial_powers(m.a, m.b)   # (a*X + b*Z)^k for k = 0..6
    zb = _binomial_powers(m.c, m.d)
    for i, coeff in enumerate(f.coeffs):
        if coeff == 0:
            continue
        u = xa[6 - i]
        v = zb[i]
        for j, cu in enumerate(u):
            if cu == 0:
                continue
            for k, cv in enumerate(v):
                if cv:
                    out[j + k] += coeff * cu * cv
    return BinarySextic(out)


def _binomial_powers(p: Fraction, q: Fraction) -> list[list[Fraction]]:
    """Coefficient vectors of (p*X + q*Z)^k for k = 0..6; index = power of Z."""
    rows = [[Fraction(1)]]
    for _ in range(6):
        prev = rows[-1]
        nxt = [Fraction(0)] * (len(prev) + 1)
        for j, c in enumerate(prev):
            nxt[j] += p * c
            nxt[j + 1] += q * c
        rows.append(nxt)
    return rows


def content_primitive(f: BinarySextic) -> tuple[Fraction, BinarySextic]:
    """Split f = c * g with g integral, primitive, leading nonzero coefficient > 0."""
    num_gcd = 0
    den_lcm = 1
    for c in f.coeffs:
        if c == 0:
            continue
        num_gcd = gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    content = Fraction(num_gcd, den_lcm)
    lead = next(c for c in f.coeffs if c != 0)
    if lead < 0:
        content = -content
    g = BinarySextic(tuple(c / content for c in f.coeffs))
    return content, g


def naive_height(f: BinarySextic) -> int:
    """max |a_i| of an integral primitive sextic."""
    if not f.is_integral() or not f.is_primitive():
        raise DomainError("normalize first")
    return max(abs(c.numerator) for c in f.coeffs)


def dehomogenize(f: BinarySextic) -> list[Fraction]:
    """Coefficients of f(X, 1) from the leading term down, degree trimmed."""
    cs = list(f.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    return cs


def sylvester_resultant(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    """Resultant of two univariate polynomials (coefficients leading-first).

    Fraction-free Bareiss elimination on the Sylvester matrix.
    """
    n = len(p) - 1
    m = len(q) - 1
    if n < 0 or m < 0 or (n == 0 and m == 0):
        raise DomainError("resultant needs nonconstant input")
    if n == 0:
        return _frac(p[0]) ** m
    if m == 0:
        return _frac(q[0]) ** n
    size = n + m
    rows = []
    for i in range(m):
        rows.append([Fraction(0)] * i + [_frac(c) for c in p] + [Fraction(0)] * (m - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + [_frac(c) for c in q] + [Fraction(0)] * (n - 1 - i))
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if rows[k][k] == 0:
            piv = next((r for r in range(k + 1, size) if rows[r][k] != 0), None)
            if piv is None:
                return Fraction(0)
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]) / prev
            rows[i][k] = Fraction(0)
        prev = rows[k][k]
    return sign * rows[size - 1][size - 1]


def resultant_with_derivative(f: BinarySextic) -> Fraction:
    """Res_X(f(X,1), f'(X,1)), computed exactly via Sylvester/Bareiss."""
    p = dehomogenize(f)
    if len(p) < 2:
        raise DomainError("dehomogenized form is constant")
    deg = len(p) - 1
    q = [c * (deg - i) for i, c in enumerate(p[:-1])]
    while q and q[0] == 0:
        q.pop(0)
    if not q:
        return Fraction(0)
    return sylvester_resultant(p, q)
