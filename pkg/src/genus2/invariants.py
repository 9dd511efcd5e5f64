"""Invariant systems of binary sextics: Igusa, Clebsch, absolute, t, j, a.

The canonical internal system is (J2, J4, J6, J10); everything else is
derived from it by exact conversions.  J10 is the discriminant of the
form (the specialization of the generic degree-6 discriminant polynomial,
so patterns with a0 = 0 or a6 = 0 need no special casing).

The arithmetic kernels at the bottom are polymorphic: fed plain ints they
stay in int arithmetic (the database builders rely on this), fed Fractions
they compute exactly over Q.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sextic import BinarySextic, DomainError
from .tables import DEG30_DENOMINATOR, DEG30_TERMS, DISC6_TERMS


@dataclass(frozen=True)
class InvariantVector:
    J2: Fraction
    J4: Fraction
    J6: Fraction
    J10: Fraction

    def astuple(self):
        return (self.J2, self.J4, self.J6, self.J10)

    def is_genus2(self) -> bool:
        return self.J10 != 0


@dataclass(frozen=True)
class ClebschVector:
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction

    def astuple(self):
        return (self.A, self.B, self.C, self.D)


@dataclass(frozen=True)
class AbsoluteInvariants:
    i1: Fraction
    i2: Fraction
    i3: Fraction

    def astuple(self):
        return (self.i1, self.i2, self.i3)


@dataclass(frozen=True)
class TInvariants:
    t1: Fraction
    t2: Fraction
    t3: Fraction

    def astuple(self):
        return (self.t1, self.t2, self.t3)


def igusa(f: BinarySextic) -> InvariantVector:
    """Exact (J2, J4, J6, J10) of a binary sextic."""
    a = f.coeffs
    return InvariantVector(
        Fraction(igusa_j2(*a)), Fraction(igusa_j4(*a)),
        Fraction(igusa_j6(*a)), Fraction(disc6(a)),
    )


def igusa_clebsch(v: InvariantVector) -> tuple:
    """The integral invariants (2^4*J2, 2^8*J4, 2^12*J6, 2^20*J10)."""
    return (2**4 * v.J2, 2**8 * v.J4, 2**12 * v.J6, 2**20 * v.J10)


def clebsch(f: BinarySextic) -> ClebschVector:
    return clebsch_from_igusa(igusa(f))


def clebsch_from_igusa(v: InvariantVector) -> ClebschVector:
    """(A, B, C, D) as polynomials in the J's; agrees with the transvectant
    definitions A = (f,f)_6 etc. exactly."""
    J2, J4, J6, J10 = v.astuple()
    A = -Fraction(1, 120) * J2
    B = Fraction(1, 2**3 * 3**3 * 5**4) * (J2**2 + 20 * J4)
    C = -Fraction(1, 2**5 * 3**5 * 5**6) * (J2**3 + 80 * J2 * J4 - 600 * J6)
    D = -Fraction(1, 2**8 * 3**9 * 5**10) * (
        9 * J2**5 + 700 * J2**3 * J4 - 3600 * J2**2 * J6
        - 12400 * J2 * J4**2 + 48000 * J4 * J6 + 10800000 * J10
    )
    return ClebschVector(A, B, C, D)


def igusa_from_clebsch(c: ClebschVector) -> InvariantVector:
    """Inverse conversion.  The J4 and J10 prefactors are 2*3^2*5 and 2*3^4
    (the common typeset variants 2^3*2^5 and 2^3*4 fail the round trip)."""
    A, B, C, D = c.astuple()
    J2 = -(2**3 * 3 * 5) * A
    J4 = 2 * 3**2 * 5 * (75 * B - 8 * A**2)
    J6 = 2**2 * 3**3 * 5 * (16 * A**3 - 200 * A * B + 375 * C)
    J10 = 2 * 3**4 * (
        -384 * A**5 + 6000 * A**3 * B + 10000 * A**2 * C
        - 18750 * A * B**2 - 37500 * B * C - 28125 * D
    )
    return InvariantVector(J2, J4, J6, J10)


def absolute_i(v: InvariantVector) -> AbsoluteInvariants:
    """(i1, i2, i3); defined only away from J2 = 0, invariant under GL2 and
    scalar rescaling of the form."""
    J2, J4, J6, J10 = v.astuple()
    if J2 == 0:
        raise DomainError("J2 = 0: use t-invariants")
    return AbsoluteInvariants(
        144 * J4 / J2**2,
        -1728 * (J2 * J4 - 3 * J6) / J2**3,
        486 * J10 / J2**5,
    )


def t_invariants(v: InvariantVector) -> TInvariants:
    """(t1, t2, t3) = (J2^5/J10, J4^5/J10^2, J6^5/J10^3); defined whenever
    J10 != 0, and t1 = 0 exactly on the J2 = 0 locus."""
    J2, J4, J6, J10 = v.astuple()
    if J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    return TInvariants(J2**5 / J10, J4**5 / J10**2, J6**5 / J10**3)


def j_invariants(v: InvariantVector) -> tuple[Fraction, Fraction, Fraction]:
    """(j1, j2, j3) built from the integral invariants; needs J2, J10 != 0."""
    J2, J4, J6, J10 = v.astuple()
    if J2 == 0:
        raise DomainError("J2 = 0: j-invariants undefined")
    if J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    IA, IB, IC, ID = igusa_clebsch(v)
    return (IA**5 / ID, IB * IA**3 / ID, IC * IA**2 / ID)


def a_invariants(v: InvariantVector) -> tuple[Fraction, Fraction]:
    """(a1, a2) for the J2 = 0 stratum with J4, J6 both nonzero."""
    J2, J4, J6, J10 = v.astuple()
    if J2 != 0:
        raise DomainError("J2 != 0: use absolute i-invariants")
    if J4 == 0:
        raise DomainError("J4 = 0: use the invariant J6^5/J10^3")
    if J6 == 0:
        raise DomainError("J6 = 0: use the invariant J4^5/J10^2")
    return (J4 * J6 / J10, J6 * J10 / J4**4)


def j16(v: InvariantVector) -> Fraction:
    """Degree-16 invariant; together with the degree-30 one it detects
    automorphism groups beyond an extra involution."""
    J2, J4, J6, J10 = v.astuple()
    return (
        15 * J2**3 * J4 * J6 - 4 * J2**4 * J4**2 - 175 * J2**2 * J4**3
        + 2430 * J10 * J2**3 - 9 * J2**2 * J6**2 + 1488 * J2 * J4**2 * J6
        - 64 * J4**4 + 113400 * J10 * J2 * J4 - 2880 * J4 * J6**2
        - 648000 * J10 * J6
    )


def clebsch_matrix(c: ClebschVector) -> tuple:
    """Symmetric 3x3 matrix M of the conic attached to a Clebsch vector."""
    A, B, C, D = c.astuple()
    m11 = 2 * C + A * B / 3
    m12 = Fraction(2, 3) * (B**2 + A * C)
    m13 = D
    m22 = D
    m23 = B * (B**2 + A * C) / 3 + C * (2 * C + A * B / 3) / 3
    m33 = B * D / 2 + Fraction(2, 9) * C * (B**2 + A * C)
    return ((m11, m12, m13), (m12, m22, m23), (m13, m23, m33))


def matrix_det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] ** 2)
        - m[0][1] * (m[0][1] * m[2][2] - m[1][2] * m[0][2])
        + m[0][2] * (m[0][1] * m[1][2] - m[1][1] * m[0][2])
    )


def j30(v: InvariantVector) -> Fraction:
    """det M; vanishes exactly when the curve has an extra involution."""
    num = deg30_numerator(*v.astuple())
    return Fraction(num) / DEG30_DENOMINATOR


# 1/(2^8 * 3^14 * 5^12): detS of the J2-normalized Clebsch matrix equals
# this multiple of J16/J2^8 (derived; the typeset constant 2^16/(3^6*5^4)
# is off by exactly 120^8).
_MINOR_CONST = Fraction(1, 2**8 * 3**14 * 5**12)


def j16_minor_check(v: InvariantVector) -> Fraction:
    """detS = A11*A22 - A12^2 of the normalized Clebsch matrix, computed two
    ways (matrix minor and the closed form via j16); raises if they differ."""
    if v.J2 == 0:
        raise DomainError("J2 = 0: normalized minor undefined")
    vn = normalized(v)
    m = clebsch_matrix(clebsch_from_igusa(vn))
    det_s = m[0][0] * m[1][1] - m[0][1] ** 2
    closed = _MINOR_CONST * j16(v) / v.J2**8
    if det_s != closed:
        raise ArithmeticError("minor/closed-form disagreement for detS")
    return det_s


def normalized(v: InvariantVector) -> InvariantVector:
    """Rescale so that J2 = 1 (weights 2, 4, 6, 10); needs J2 != 0."""
    J2, J4, J6, J10 = v.astuple()
    if J2 == 0:
        raise DomainError("J2 = 0 cannot be normalized to J2 = 1")
    return InvariantVector(Fraction(1), J4 / J2**2, J6 / J2**3, J10 / J2**5)


def weighted_integral_representative(v: InvariantVector) -> InvariantVector:
    """The minimal integral vector in the weighted orbit {(r^2 J2, r^4 J4,
    r^6 J6, r^10 J10) : r in Q*} with positive-rational r.

    Used to build conics and matrices with small integer entries.
    """
    import sympy

    J = list(v.astuple())
    weights = (2, 4, 6, 10)
    primes = set()
    for x in J:
        if x == 0:
            continue
        primes.update(int(p) for p in sympy.factorint(x.denominator))
        primes.update(int(p) for p in sympy.factorint(x.numerator))
    r_num, r_den = 1, 1
    for p in sorted(primes):
        vals = []
        for x, w in zip(J, weights):
            if x == 0:
                continue
            e = _padic_val(x, p)
            vals.append(Fraction(e, w))
        shift = -min(vals)
        # smallest integer exponent k with k >= shift works for all weights
        k = -(-shift.numerator // shift.denominator) if shift > 0 else 0
        if k > 0:
            r_num *= p**k
        else:
            # try shrinking: largest k with all valuations staying >= 0
            k = min(vals)
            k = k.numerator // k.denominator
            if k > 0:
                r_den *= p**k
    r = Fraction(r_num, r_den)
    return InvariantVector(*(x * r**w for x, w in zip(J, weights)))


def _padic_val(x: Fraction, p: int) -> int:
    e = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        e += 1
    if e:
        return e
    d = x.denominator
    while d % p == 0:
        d //= p
        e -= 1
    return e


# ---------------------------------------------------------------------------
# polymorphic arithmetic kernels (int in, int out; Fraction in, Fraction out)

def igusa_j2(a0, a1, a2, a3, a4, a5, a6):
    return 6 * a3 * a3 - 240 * a0 * a6 + 40 * a1 * a5 - 16 * a2 * a4


def igusa_j4(a0, a1, a2, a3, a4, a5, a6):
    return (
        48*a0*a4**3 + 48*a2**3*a6 + 4*a2**2*a4**2 + 1620*a0**2*a6**2
        + 36*a1*a3**2*a5 - 12*a1*a3*a4**2 - 12*a2**2*a3*a5 + 300*a1**2*a4*a6
        + 300*a0*a5**2*a2 + 324*a0*a6*a3**2 - 504*a0*a4*a2*a6
        - 180*a0*a4*a3*a5 - 180*a1*a3*a2*a6 + 4*a1*a4*a2*a5
        - 540*a0*a5*a1*a6 - 80*a1**2*a5**2
    )


def igusa_j6(a0, a1, a2, a3, a4, a5, a6):
    return (
        176*a1**2*a5**2*a3**2 + 64*a1**2*a5**2*a4*a2 + 1600*a1**3*a5*a4*a6
        + 1600*a1*a5**3*a0*a2 - 160*a0*a4**4*a2 - 96*a0**2*a4**3*a6
        + 60*a0*a4**3*a3**2 + 72*a1*a3**4*a5 - 24*a1*a3**3*a4**2
        - 119880*a0**3*a6**3 - 320*a1**3*a5**3 - 160*a2**4*a4*a6
        - 96*a2**3*a0*a6**2 + 60*a2**3*a3**2*a6 - 24*a2**2*a3**3*a5
        + 8*a2**2*a3**2*a4**2 - 900*a2**2*a1**2*a6**2 - 24*a2**3*a4**3
        - 36*a2**4*a5**2 - 36*a1**2*a4**4 + 424*a0*a4**2*a2**2*a6
        - 2240*a1**2*a5**2*a0*a6 + 2250*a1**3*a3*a6**2 + 492*a0*a4**2*a2*a3*a5
        + 20664*a0**2*a4*a6**2*a2 + 3060*a0**2*a4*a6*a3*a5
        - 468*a0*a4*a3**2*a2*a6 - 198*a0*a4*a3**3*a5 - 640*a0*a4*a2**2*a5**2
        + 3472*a0*a4*a2*a5*a1*a6 - 18600*a0*a4*a1**2*a6**2
        - 876*a0*a4**2*a1*a6*a3 + 492*a1*a3*a2**2*a4*a6
        - 238*a1*a3**2*a2*a4*a5 + 76*a1*a3*a2*a4**3 + 3060*a1*a3*a0*a6**2*a2
        + 1818*a1*a3**2*a0*a6*a5 + 26*a1*a3*a2**2*a5**2
        - 1860*a1**2*a3*a2*a5*a6 + 330*a1**2*a3**2*a6*a4 + 76*a2**3*a4*a3*a5
        - 876*a2**2*a0*a6*a3*a5 + 616*a2**3*a5*a1*a6 + 2250*a0**2*a5**3*a3
        - 10044*a0**2*a6**2*a3**2 + 28*a1*a4**2*a2**2*a5
        - 640*a1**2*a4**2*a2*a6 + 26*a1**2*a4**2*a3*a5
        - 1860*a1*a4*a0*a5**2*a3 + 616*a1*a4**3*a0*a5
        - 18600*a0**2*a5**2*a6*a2 + 59940*a0**2*a5*a6**2*a1
        + 330*a0*a5**2*a3**2*a2 + 162*a0*a6*a3**4 - 900*a0**2*a5**2*a4**2
        - 198*a1*a3**3*a2*a6
    )


def disc6(a):
    """Discriminant of a0*x^6 + ... + a6 (generic specialization)."""
    pw = [[1] * 7 for _ in range(7)]
    for i in range(7):
        ai = a[i]
        p = 1
        row = pw[i]
        for e in range(1, 7):
            p = p * ai
            row[e] = p
    s = 0
    for mono, c in DISC6_TERMS:
        t = c
        for i in range(7):
            e = mono[i]
            if e:
                t = t * pw[i][e]
        s = s + t
    return s


def deg30_numerator(J2, J4, J6, J10):
    """DEG30_DENOMINATOR * det(M); integer for integer input."""
    s = 0
    for (e2, e4, e6, e10), c in DEG30_TERMS:
        t = c
        if e2:
            t = t * J2**e2
        if e4:
            t = t * J4**e4
        if e6:
            t = t * J6**e6
        if e10:
            t = t * J10**e10
        s = s + t
    return s
