"""Rational points on nondegenerate ternary quadratic forms.

Pipeline: integerize, congruence-diagonalize over Q, strip square factors,
reduce to a pairwise-coprime squarefree diagonal form, then run Lagrange
descent on w^2 = A u^2 + B v^2.  Descent either produces a verified point
or proves none exists (Legendre's criterion).  Every returned point is
checked exactly against the original form.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy


def _factor(n: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in sympy.factorint(int(n)).items()}


def sqfree_split(n: int) -> tuple[int, int]:
    """|n| = s^2 * f with f squarefree; returns (s, sign(n) * f)."""
    if n == 0:
        return 1, 0
    s, f = 1, 1
    for p, e in _factor(abs(n)).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, (f if n > 0 else -f)


def _sqrt_mod(a: int, m: int):
    if m == 1:
        return 0
    r = sympy.ntheory.sqrt_mod(a % m, m)
    return None if r is None else int(r)


def lagrange_descent(A: int, B: int):
    """Nonzero (w, u, v) with w^2 = A u^2 + B v^2 for squarefree A, B, or None."""
    if abs(A) > abs(B):
        r = lagrange_descent(B, A)
        return None if r is None else (r[0], r[2], r[1])
    if B == 1:
        return (1, 0, 1)
    if A == 1:
        return (1, 1, 0)
    if A < 0 and B < 0:
        return None
    t = _sqrt_mod(A, abs(B))
    if t is None:
        return None
    if t > abs(B) // 2:
        t = abs(B) - t
    m, rem = divmod(t * t - A, B)
    assert rem == 0
    if m == 0:
        return None  # A square and squarefree means A = 1, handled above
    d, m1 = sqfree_split(m)
    sub = lagrange_descent(A, m1)
    if sub is None:
        return None
    w1, u1, v1 = sub
    # compose: (w1 t + A u1)^2 - A (w1 + t u1)^2 = (t^2 - A)(w1^2 - A u1^2)
    w = w1 * t + A * u1
    u = w1 + t * u1
    v = m1 * d * v1
    if w == 0 and u == 0:
        w = w1 * t - A * u1
        u = w1 - t * u1
    g = gcd(gcd(abs(w), abs(u)), abs(v))
    if g == 0:
        return None
    w, u, v = w // g, u // g, v // g
    assert w * w == A * u * u + B * v * v
    return None if (u == 0 and v == 0) else (w, u, v)


def solve_diagonal(a: int, b: int, c: int):
    """Nonzero rational (x, y, z) with a x^2 + b y^2 + c z^2 = 0, or None."""
    sa, a1 = sqfree_split(a)
    sb, b1 = sqfree_split(b)
    sc, c1 = sqfree_split(c)
    sol = _solve_sqfree(a1, b1, c1)
    if sol is None:
        return None
    x, y, z = sol
    out = (x / sa, y / sb, z / sc)
    assert a * out[0] ** 2 + b * out[1] ** 2 + c * out[2] ** 2 == 0
    return out


def _solve_sqfree(a: int, b: int, c: int):
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // g, b // g, c // g
    for (i, j, k) in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        abc = [a, b, c]
        p = gcd(abs(abc[i]), abs(abc[j]))
        if p > 1:
            # p | gcd(two coefficients) forces p | third variable
            abc[i] //= p
            abc[j] //= p
            abc[k] *= p
            sp, abc[k] = sqfree_split(abc[k])
            sub = _solve_sqfree(*abc)
            if sub is None:
                return None
            s = list(sub)
            s[k] = s[k] * p / sp
            return tuple(s)
    if (a > 0 and b > 0 and c > 0) or (a < 0 and b < 0 and c < 0):
        return None
    A, B = -a * c, -b * c   # squarefree: a, b, c pairwise coprime squarefree
    r = lagrange_descent(A, B)
    if r is None:
        return None
    w, u, v = r
    x, y, z = Fraction(u), Fraction(v), Fraction(w, c)
    assert a * x * x + b * y * y + c * z * z == 0
    return (x, y, z)


def integral_matrix(m) -> list[list[int]]:
    """Scale a symmetric rational 3x3 matrix to a primitive integer one."""
    den = 1
    for i in range(3):
        for j in range(3):
            d = Fraction(m[i][j]).denominator
            den = den * d // gcd(den, d)
    n = [[int(Fraction(m[i][j]) * den) for j in range(3)] for i in range(3)]
    g = 0
    for i in range(3):
        for j in range(3):
            g = gcd(g, n[i][j])
    if g:
        n = [[n[i][j] // g for j in range(3)] for i in range(3)]
    return n


def conic_value(m, x) -> Fraction:
    return sum(Fraction(m[i][j]) * x[i] * x[j] for i in range(3) for j in range(3))


def diagonalize(m):
    """Congruence diagonalization over Q: returns (diag, T) with x = T y."""
    M = [[Fraction(m[i][j]) for j in range(3)] for i in range(3)]
    T = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]

    def addcol(dst, src, lam):
        for r in range(3):
            T[r][dst] += lam * T[r][src]
        for r in range(3):
            M[r][dst] += lam * M[r][src]
        for cc in range(3):
            M[dst][cc] += lam * M[src][cc]

    def swapcol(i, j):
        for r in range(3):
            T[r][i], T[r][j] = T[r][j], T[r][i]
        for r in range(3):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        M[i], M[j] = M[j], M[i]

    for k in range(3):
        if M[k][k] == 0:
            sw = next((j for j in range(k + 1, 3) if M[j][j] != 0), None)
            if sw is not None:
                swapcol(k, sw)
            else:
                jj = next((j for j in range(k + 1, 3) if M[k][j] != 0), None)
                if jj is None:
                    continue
                addcol(k, jj, Fraction(1))
        for j in range(k + 1, 3):
            if M[k][j] != 0:
                addcol(j, k, -M[k][j] / M[k][k])
    return [M[i][i] for i in range(3)], T


def conic_point(m, small_bound: int = 10):
    """Primitive integer point on x^t M x = 0, or None if no rational point.

    M must be a nondegenerate symmetric rational 3x3 matrix.
    """
    n = integral_matrix(m)
    pt = _small_search(n, small_bound)
    if pt is not None:
        return pt
    diag, T = diagonalize(n)
    if any(d == 0 for d in diag):
        raise ValueError("degenerate conic")
    coeffs = []
    scal = []
    for d in diag:
        coeffs.append(int(d * d.denominator**2))
        scal.append(Fraction(d.denominator))
    g = gcd(gcd(abs(coeffs[0]), abs(coeffs[1])), abs(coeffs[2]))
    coeffs = [x // g for x in coeffs]
    sol = solve_diagonal(*coeffs)
    if sol is None:
        return None
    y = [sol[i] * scal[i] for i in range(3)]
    x = [sum(T[r][c] * y[c] for c in range(3)) for r in range(3)]
    den = 1
    for c in x:
        den = den * c.denominator // gcd(den, c.denominator)
    xi = [int(c * den) for c in x]
    g = gcd(gcd(abs(xi[0]), abs(xi[1])), abs(xi[2]))
    pt = tuple(Fraction(c // g) for c in xi)
    assert conic_value(m, pt) == 0
    return pt


def _small_search(n, bound: int):
    for x1 in range(0, bound + 1):
        for x2 in range(-bound, bound + 1):
            for x3 in range(-bound, bound + 1):
                if x1 == x2 == x3 == 0:
                    continue
                v = (x1, x2, x3)
                if sum(n[i][j] * v[i] * v[j] for i in range(3) for j in range(3)) == 0:
                    g = gcd(gcd(abs(x1), abs(x2)), abs(x3))
                    return (Fraction(x1 // g), Fraction(x2 // g), Fraction(x3 // g))
    return None
