"""Heights, prime-valuation reduction, and discriminant minimization.

The naive height of an integral primitive sextic is max |a_i|; the minimal
absolute height of a curve is the minimum over all integral primitive
models with the same moduli key.  The moduli height is the projective
height of the primitive integer representative of
[J2^5 : J4*J2^3 : J6*J2^2 : J10].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

import sympy

from .sextic import BinarySextic, DomainError, content_primitive, naive_height, transform, Mobius
from .invariants import InvariantVector, disc6, igusa
from .classify import DihedralInvariants, ModuliKey, key_of_invariants, moduli_key


@dataclass(frozen=True)
class HeightReport:
    naive: int
    minimal: int
    proven: bool            # False: "unknown above bound" (budget exceeded)
    witness: BinarySextic
    search_bound: int


def moduli_height(v: InvariantVector) -> int:
    """Height of the primitive representative of [J2^5 : J4 J2^3 : J6 J2^2 : J10]."""
    if v.J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    J2, J4, J6, J10 = v.astuple()
    tup = (J2**5, J4 * J2**3, J6 * J2**2, J10)
    den = 1
    for x in tup:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in tup]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return max(abs(x) // g for x in ints)


def reduce_at_prime(f: BinarySextic, p: int, orientation: str = "best") -> BinarySextic:
    """One round of p-valuation height reduction.

    Anchored at the constant term of y^2 = f(x, 1): with alpha_i the
    p-valuation of the x^i coefficient, substitute x -> p^m x for the
    largest m <= (alpha_0 - alpha_i)/i over nonzero coefficients, then clear
    content.  Both coefficient orientations are tried and the better kept.
    """
    if not f.is_integral():
        raise DomainError("reduce_at_prime expects an integral form")
    if orientation == "best":
        cands = [_reduce_anchored(f, p), _reduce_anchored(f.reversed(), p).reversed()]
        best = min(cands, key=lambda g: naive_height(content_primitive(g)[1]))
        return content_primitive(best)[1]
    if orientation == "a6":
        return content_primitive(_reduce_anchored(f, p))[1]
    if orientation == "a0":
        return content_primitive(_reduce_anchored(f.reversed(), p).reversed())[1]
    raise ValueError("orientation must be 'best', 'a0' or 'a6'")


def _reduce_anchored(f: BinarySextic, p: int) -> BinarySextic:
    # constant-term anchor: coefficient of x^i is coeffs[6-i]
    a = f.coeffs
    if a[6] == 0:
        return f
    alpha0 = _val(int(a[6]), p)
    if alpha0 == 0:
        return f
    m = None
    for i in range(1, 7):
        c = a[6 - i]
        if c == 0:
            continue
        bound = (alpha0 - _val(int(c), p)) // i
        m = bound if m is None else min(m, bound)
    if m is None or m <= 0:
        return f
    return transform(f, Mobius.diagonal(p**m, 1))


def _val(n: int, p: int) -> int:
    if n == 0:
        return 0
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def stage1_reduce(f: BinarySextic) -> BinarySextic:
    """Apply reduce_at_prime over all primes of both anchor coefficients
    until no substitution lowers the height."""
    _, g = content_primitive(f)
    while True:
        h0 = naive_height(g)
        anchors = {int(g.coeffs[6]), int(g.coeffs[0])}
        primes = set()
        for a in anchors:
            if a not in (0, 1, -1):
                primes.update(int(p) for p in sympy.factorint(abs(a)))
        best = g
        for p in sorted(primes):
            cand = reduce_at_prime(g, p)
            if naive_height(cand) < naive_height(best):
                best = cand
        if naive_height(best) >= h0:
            return g
        g = best


def enumerate_primitive(h: int):
    """All integral primitive 7-tuples with max|a_i| <= h, up to sign
    (first nonzero coefficient positive)."""
    rng = range(-h, h + 1)
    for tup in product(rng, repeat=7):
        if all(v == 0 for v in tup):
            continue
        first = next(v for v in tup if v != 0)
        if first < 0:
            continue
        g = 0
        for v in tup:
            g = gcd(g, abs(v))
        if g != 1:
            continue
        yield tup


def minimal_height(f: BinarySextic, budget: int = 10) -> HeightReport:
    """Two-stage minimal-height search.

    Stage 1 is prime-valuation reduction to a fixpoint.  Stage 2, entered
    when the reduced height is within the budget, exhaustively enumerates
    integral primitive sextics by increasing height shells and returns the
    first (hence smallest) key match; the result is then a proven minimum.
    Above the budget the stage-1 reduction is returned unproven.
    """
    v = igusa(f)
    if v.J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    _, f0 = content_primitive(f)
    naive = naive_height(f0)
    g = stage1_reduce(f0)
    h1 = naive_height(g)
    key = moduli_key(f0)
    if h1 > budget:
        return HeightReport(naive, h1, False, g, budget)
    for shell in range(1, h1):
        found = _shell_match(shell, key)
        if found is not None:
            return HeightReport(naive, shell, True, found, budget)
    return HeightReport(naive, h1, True, g, budget)


def _shell_match(h: int, key: ModuliKey):
    best = None
    for tup in enumerate_primitive(h):
        if max(abs(c) for c in tup) != h:
            continue
        if disc6(tup) == 0:
            continue
        cand = BinarySextic(tup)
        if moduli_key(cand) == key:
            if best is None or tup < best:
                best = tup
    return BinarySextic(best) if best is not None else None


def discriminant_value(f: BinarySextic) -> Fraction:
    """The integral invariant tracked for valuation bookkeeping: 2^12 * J10."""
    return 2**12 * Fraction(disc6(f.coeffs))


def decomposable_degree(f: BinarySextic) -> int:
    """Largest n in {3, 2} with f of the shape f(x^n, z^n), else 1."""
    a = f.coeffs
    if all(a[i] == 0 for i in (1, 2, 4, 5)):
        return 3
    if all(a[i] == 0 for i in (1, 3, 5)):
        return 2
    return 1


def minimal_discriminant(f: BinarySextic, allow_twists: bool = False) -> BinarySextic:
    """Reduce prime valuations of the discriminant by exact substitutions.

    Without twists only det-1-up-to-scaling GL2(Q) moves are used and a
    valuation >= 30 is attacked by x -> x/p in both orientations.  With
    twists and a decomposable shape f(x^n) the threshold drops to 15
    (n = 2) or 10 (n = 3) using substitutions rational on the x^n shape.
    """
    if not f.is_integral() or not f.is_primitive():
        raise DomainError("normalize first")
    n = decomposable_degree(f) if allow_twists else 1
    threshold = {1: 30, 2: 15, 3: 10}[n]
    g = f
    while True:
        d = discriminant_value(g)
        if d == 0:
            raise DomainError("J10 = 0: not a genus-2 curve")
        num = abs(d.numerator)
        moved = False
        for p in sorted(int(q) for q in sympy.factorint(num)):
            vp = _val(num, p)
            if vp < threshold:
                continue
            cand = _best_disc_move(g, p, n, vp)
            if cand is not None:
                g = cand
                moved = True
                break
        if not moved:
            return g


def _disc_val(g: BinarySextic, p: int) -> int:
    d = discriminant_value(g)
    return _val(abs(d.numerator), p) - _val(d.denominator, p)


def _best_disc_move(g: BinarySextic, p: int, n: int, vp: int):
    cands = []
    if n == 1:
        for m in (Mobius.diagonal(1, p), Mobius.diagonal(p, 1)):
            cands.append(content_primitive(transform(g, m))[1])
    else:
        # substitutions x -> p^(±1/n) x are rational on the x^n shape:
        # scale the x^(n*i) coefficient by p^(±i), then renormalize
        for direction in (1, -1):
            coeffs = list(g.coeffs)
            ok = True
            for idx in range(7):
                deg = 6 - idx
                if coeffs[idx] == 0:
                    continue
                if deg % n != 0:
                    ok = False
                    break
                coeffs[idx] = coeffs[idx] * Fraction(p) ** (direction * (deg // n))
            if ok:
                cands.append(content_primitive(BinarySextic(coeffs))[1])
    best = None
    for c in cands:
        val = _disc_val(c, p)
        if val < vp and (best is None or val < best[0]):
            best = (val, c)
    return best[1] if best else None


def v4_minimal_model(d: DihedralInvariants) -> BinarySextic:
    """Minimal-discriminant model of the extra-involution curve with
    dihedral invariants (u, v); defined over the field of moduli.

    Its discriminant is 2^6 (u^2+18u-4v-27)^2 (4u^3-v^2)^15.
    """
    u, v = d.astuple()
    if u == 0:
        raise DomainError("u = 0: model undefined, use the standard form")
    if 4 * u**3 == v**2:
        raise DomainError("order-8 dihedral sublocus: use the one-parameter model")
    q = 4 * u**3 - v**2
    b6 = -Fraction(2 * u**3 - u**2 * v - v**2) / (2**6 * u**6)
    b5 = -2 * Fraction((u**2 + 3 * v) * q) / (2**5 * u**5)
    b4 = Fraction((30 * u**3 + u**2 * v - 15 * v**2) * q) / (2**4 * u**4)
    b3 = -4 * Fraction((u**2 - 5 * v) * q**2) / (2**3 * u**3)
    b2 = -Fraction((30 * u**3 + u**2 * v - 15 * v**2) * q**2) / (2**2 * u**2)
    b1 = -Fraction((u**2 + 3 * v) * q**3) / u
    b0 = (2 * u**3 - u**2 * v - v**2) * q**3
    return BinarySextic((b6, b5, b4, b3, b2, b1, b0))


def v4_plain_model(d: DihedralInvariants) -> BinarySextic:
    """The polynomial (non-minimized) model of the same curve."""
    u, v = d.astuple()
    e = v**2 - 4 * u**3
    if e == 0:
        raise DomainError("order-8 dihedral sublocus: model degenerates")
    return BinarySextic((
        v**2 + u**2 * v - 2 * u**3,
        2 * (u**2 + 3 * v) * e,
        (15 * v**2 - u**2 * v - 30 * u**3) * e,
        4 * (5 * v - u**2) * e**2,
        e**2 * (15 * v**2 - u**2 * v - 30 * u**3),
        2 * e**3 * (u**2 + 3 * v),
        e**3 * (v**2 + u**2 * v - 2 * u**3),
    ))
