"""Moduli keys and automorphism-group classification.

A point of the moduli space is keyed by

    (-1, i1, i2, i3)   when J2 != 0,
    ( 0, t1, t2, t3)   when J2 == 0 (and then t1 = 0),

which identifies the curve up to isomorphism over the algebraic closure.
Classification proceeds by exact polynomial conditions in the key
coordinates: special points first, then the one-dimensional loci (order-8
and order-12 dihedral), then the extra-involution surface, else generic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .sextic import BinarySextic, DomainError
from .invariants import (
    InvariantVector,
    absolute_i,
    deg30_numerator,
    igusa,
    t_invariants,
)

# (order, small-group index) for every group that occurs in characteristic 0
GROUP_IDS = {
    "C2": (2, 1),
    "C10": (10, 2),
    "V4": (4, 2),
    "D4": (8, 3),
    "D6": (12, 4),
    "SL2(3)": (24, 3),
    "GL2(3)": (48, 29),
}


@dataclass(frozen=True)
class AutClass:
    group_id: tuple[int, int]
    name: str

    def __str__(self) -> str:
        return f"[{self.group_id[0]},{self.group_id[1]}] {self.name}"


def aut(name: str) -> AutClass:
    return AutClass(GROUP_IDS[name], name)


@dataclass(frozen=True)
class ModuliKey:
    r: int
    x1: Fraction
    x2: Fraction
    x3: Fraction

    def __post_init__(self):
        if self.r not in (-1, 0):
            raise DomainError("key discriminant flag must be -1 or 0")
        if self.r == 0 and self.x1 != 0:
            raise DomainError("J2 = 0 keys have first coordinate 0")

    def astuple(self):
        return (self.r, self.x1, self.x2, self.x3)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.astuple())


def moduli_key(f: BinarySextic) -> ModuliKey:
    return key_of_invariants(igusa(f))


def key_of_invariants(v: InvariantVector) -> ModuliKey:
    if v.J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    if v.J2 != 0:
        i = absolute_i(v)
        return ModuliKey(-1, i.i1, i.i2, i.i3)
    t = t_invariants(v)
    return ModuliKey(0, t.t1, t.t2, t.t3)


# exact moduli keys of the three isolated special points (J2 != 0 branch)
SL23_POINT = (Fraction(81, 20), Fraction(-729, 200), Fraction(729, 25600000))
GL23_POINT = (Fraction(-36, 5), Fraction(1512, 25), Fraction(243, 200000))


@lru_cache(maxsize=1)
def _j2zero_special_points():
    """(t2, t3) of the two J2 = 0 one-parameter-family members:
    y^2 = x^5 + x^3 - (3/20) x  and  y^2 = x^6 + x^3 - 1/40."""
    d4 = igusa(BinarySextic((0, 1, 0, 1, 0, Fraction(-3, 20), 0)))
    d6 = igusa(BinarySextic((1, 0, 0, 1, 0, 0, Fraction(-1, 40))))
    td4 = t_invariants(d4)
    td6 = t_invariants(d6)
    return (td4.t2, td4.t3), (td6.t2, td6.t3)


def involution_locus_j2zero(t2: Fraction, t3: Fraction) -> Fraction:
    """Vanishes on the J2 = 0 stratum exactly when |Aut| > 2."""
    return (
        t2**6*t3 - 15265260*t2**5*t3 - 27949860*t2**4*t3**2 - 118098*t2**3*t3**3
        + 14693280768*t2**5 + 93437786558880*t2**4*t3 - 878290475269680*t2**3*t3**2
        + 85811055510240*t2**2*t3**3 - 1139016237660*t2*t3**4 + 3486784401*t3**5
        - 223154201664000000*t2**4 - 287728673929542000000*t2**3*t3
        - 2469658010168691000000*t2**2*t3**2 - 109818018101695500000*t2*t3**3
        - 70607384120250000*t3**4 + 1355661775108800000000000*t2**3
        + 433843541357670112500000000*t2**2*t3 - 662569101476807962500000000*t2*t3**2
        + 571919811374025000000000*t3**3 - 4117822641892980000000000000000*t2**2
        - 327077365625983809843750000000000*t2*t3
        - 2316275236064801250000000000000*t3**2
        + 6253943137374963375000000000000000000*t2
        + 4690457353031222531250000000000000000*t3
        - 3799270455955290250312500000000000000000000
    )


def _d4_condition(i1, i2) -> bool:
    return -243*i1**2 + 80*i1**3 - 1458*i2 + 540*i2*i1 + 100*i2**2 == 0


def _d6_condition(i1, i2, i3) -> bool:
    return (
        3888*i1 + 432*i2 - 1188*i1**2 + 5*i1**3 - 25*i2**2 - 360*i2*i1 == 0
        and 26873856*i3 + 5184000*i3*i1**2 - 9331200*i3*i1 - 149299200000*i3**2
        - 729*i1**2 - 27*i1**4 + 243*i1**3 + i1**5 == 0
    )


def classify(k: ModuliKey) -> AutClass:
    """Automorphism group of the moduli point, by exact locus membership."""
    if k.r == -1:
        i1, i2, i3 = k.x1, k.x2, k.x3
        if (i1, i2, i3) == SL23_POINT:
            return aut("SL2(3)")
        if (i1, i2, i3) == GL23_POINT:
            return aut("GL2(3)")
        if not _on_involution_locus_i(i1, i2, i3):
            return aut("C2")
        if _d4_condition(i1, i2):
            return aut("D4")
        if _d6_condition(i1, i2, i3):
            return aut("D6")
        return aut("V4")
    t2, t3 = k.x2, k.x3
    if (t2, t3) == (0, 0):
        return aut("C10")
    d4key, d6key = _j2zero_special_points()
    if (t2, t3) == d4key:
        return aut("D4")
    if (t2, t3) == d6key:
        return aut("D6")
    if involution_locus_j2zero(t2, t3) == 0:
        return aut("V4")
    return aut("C2")


def _on_involution_locus_i(i1, i2, i3) -> bool:
    # the degree-30 invariant vanishes iff the extra-involution surface
    # passes through the point; evaluate on the J2=1 normalization
    J4 = i1 / 144
    J6 = (J4 + i2 / 1728) / 3
    J10 = i3 / 486
    return deg30_numerator(Fraction(1), J4, J6, J10) == 0


def classify_invariants(v: InvariantVector) -> AutClass:
    """Classification straight from an invariant vector.

    Fast path for enumeration: the degree-30 integer test settles the
    generic case without building the key.
    """
    if v.J10 == 0:
        raise DomainError("J10 = 0: not a genus-2 curve")
    if v.J2 != 0 and deg30_numerator(*v.astuple()) != 0:
        # not on the extra-involution locus; only the isolated specials remain
        i = absolute_i(v)
        if i.astuple() == SL23_POINT:
            return aut("SL2(3)")
        if i.astuple() == GL23_POINT:
            return aut("GL2(3)")
        return aut("C2")
    return classify(key_of_invariants(v))


@dataclass(frozen=True)
class DihedralInvariants:
    u: Fraction
    v: Fraction

    def astuple(self):
        return (self.u, self.v)


def dihedral_uv_from_standard(a, b) -> DihedralInvariants:
    """(u, v) = (a*b, a^3 + b^3) of y^2 = x^6 + a*x^4 + b*x^2 + 1."""
    a = Fraction(a)
    b = Fraction(b)
    f = standard_model(a, b)
    if igusa(f).J10 == 0:
        raise DomainError("degenerate standard form (J10 = 0)")
    return DihedralInvariants(a * b, a**3 + b**3)


def standard_model(a, b) -> BinarySextic:
    return BinarySextic((1, 0, Fraction(a), 0, Fraction(b), 0, 1))


def uv_curve_invariants(u, v) -> InvariantVector:
    """Igusa invariants shared by every curve with dihedral invariants (u, v)."""
    u = Fraction(u)
    v = Fraction(v)
    return InvariantVector(
        -16 * u - 240,
        4 * u**2 - 504 * u + 48 * v + 1620,
        -24 * u**3 + 424 * u**2 - 160 * u * v + 20664 * u - 96 * v - 119880,
        Fraction(-64) * (u**2 + 18 * u - 4 * v - 27) ** 2,
    )


def classify_uv(d: DihedralInvariants) -> AutClass:
    """Prop-style classification on the involution locus in (u, v) terms.

    The isolated big groups sit at (0,0), (225,6750) [order 24] and
    (25,-250) [order 48]; the order-8 locus is v^2 = 4u^3 and the order-12
    locus is 4v = u^2 - 110u + 1125.  (The irrational exceptional value
    u = 70 + 30*sqrt(5) on the order-12 line cannot occur over Q.)
    """
    u, v = d.astuple()
    if (u, v) in ((Fraction(0), Fraction(0)), (Fraction(225), Fraction(6750))):
        return aut("SL2(3)")
    if (u, v) == (Fraction(25), Fraction(-250)):
        return aut("GL2(3)")
    if v**2 == 4 * u**3:
        return aut("D4")
    if 4 * v == u**2 - 110 * u + 1125:
        return aut("D6")
    return aut("V4")


# closed-form inversion of (u, v) -> (i1, i2, i3), valid off the dihedral
# and special subloci (derived once by elimination; see tests for the
# round-trip validation)
_U_NUM = [
    ((6,0,0), -6561), ((5,1,0), -2538), ((5,0,0), -66339), ((4,2,0), -240),
    ((4,1,0), -109188), ((4,0,1), -521800704), ((4,0,0), 671409),
    ((3,2,0), -35559), ((3,1,1), -102021120), ((3,1,0), 503010),
    ((3,0,1), -21519240192), ((3,0,0), -1240029), ((2,3,0), -3834),
    ((2,2,0), -15309), ((2,1,1), -9150547968), ((2,1,0), 314928),
    ((2,0,2), -10319560704000), ((2,0,1), 405788507136), ((1,4,0), -120),
    ((1,3,0), -26892), ((1,2,1), -880865280), ((1,2,0), 798255),
    ((1,1,1), 115974125568), ((1,1,0), -2125764), ((1,0,2), -736816634265600),
    ((1,0,1), -1896521610240), ((0,4,0), -1944), ((0,3,1), -16588800),
    ((0,3,0), 109350), ((0,2,1), 6118281216), ((0,2,0), -1121931),
    ((0,1,2), -68797071360000), ((0,1,1), -289632983040),
    ((0,0,2), 2901447687536640), ((0,0,1), 2644790538240),
]
_U_DEN = [
    ((6,0,0), 567), ((5,1,0), 198), ((5,0,0), 25029), ((4,2,0), 16),
    ((4,1,0), 18684), ((4,0,1), 39564288), ((4,0,0), 729), ((3,2,0), 4257),
    ((3,1,1), 6801408), ((3,1,0), 110322), ((3,0,1), 4369241088),
    ((3,0,0), -242757), ((2,3,0), 342), ((2,2,0), 56619),
    ((2,1,1), 1431779328), ((2,1,0), -314928), ((2,0,2), 687970713600),
    ((2,0,1), -28278014976), ((1,4,0), 8), ((1,3,0), 8532),
    ((1,2,1), 95883264), ((1,2,0), -729), ((1,1,1), -6284003328),
    ((1,1,0), -236196), ((1,0,2), 125073075732480), ((1,0,1), -167188976640),
    ((0,4,0), 360), ((0,3,1), 1105920), ((0,3,0), 12150),
    ((0,2,1), -450883584), ((0,2,0), -229635), ((0,1,2), 8255648563200),
    ((0,1,1), -44543416320), ((0,0,2), 666478508507136), ((0,0,1), 607322271744),
]


def _poly3(terms, i1, i2, i3):
    s = Fraction(0)
    for (e1, e2, e3), c in terms:
        t = Fraction(c)
        if e1:
            t *= i1**e1
        if e2:
            t *= i2**e2
        if e3:
            t *= i3**e3
        s += t
    return s


def _v_from_u(i1, u):
    return (Fraction(16, 9) * i1 * (u + 15) ** 2 - 4 * u**2 + 504 * u - 1620) / 48


def dihedral_uv_from_key(k: ModuliKey) -> DihedralInvariants:
    """Dihedral invariants of a moduli point on the involution locus.

    Generic points use the hard-coded closed form; on the one-dimensional
    subloci (where its denominator vanishes) per-stratum formulas take over,
    and the J2 = 0 stratum is resolved exactly by root extraction.
    """
    g = classify(k)
    if g.name == "C2" or g.name == "C10":
        raise DomainError("moduli point has no extra involution")
    if g.name == "SL2(3)":
        return DihedralInvariants(Fraction(0), Fraction(0))
    if g.name == "GL2(3)":
        return DihedralInvariants(Fraction(25), Fraction(-250))
    if k.r == 0:
        return _uv_j2zero(k)
    i1, i2, i3 = k.x1, k.x2, k.x3
    if g.name == "D6":
        num = 15 * (-33*i1**2 - 5*i1*i2 + 945*i1 + 153*i2 - 2916)
        den = 9*i1**2 + 5*i1*i2 + 1431*i1 + 279*i2 - 4860
        if den != 0:
            u = Fraction(num) / den
            return DihedralInvariants(u, (u**2 - 110 * u + 1125) / 4)
    if g.name == "V4":
        den = _poly3(_U_DEN, i1, i2, i3)
        if den != 0:
            u = _poly3(_U_NUM, i1, i2, i3) / den
            return DihedralInvariants(u, _v_from_u(i1, u))
    return _uv_by_elimination(k)


def _uv_j2zero(k: ModuliKey) -> DihedralInvariants:
    """J2 = 0 involution locus: u = -15, v a rational root of exact equations."""
    import sympy

    t2, t3 = k.x2, k.x3
    v = sympy.symbols("v")
    J4 = 48 * v + 10080
    J6 = 2304 * v - 253440
    J10 = -64 * (4 * v + 72) ** 2
    e1 = sympy.expand(J4**5 - sympy.Rational(t2.numerator, t2.denominator) * J10**2)
    e2 = sympy.expand(J6**5 - sympy.Rational(t3.numerator, t3.denominator) * J10**3)
    for root in _common_rational_roots(e1, e2, v):
        cand = DihedralInvariants(Fraction(-15), root)
        vec = uv_curve_invariants(*cand.astuple())
        if vec.J10 != 0 and key_of_invariants(vec) == k:
            return cand
    raise DomainError("no rational dihedral invariants found for this key")


def _uv_by_elimination(k: ModuliKey) -> DihedralInvariants:
    """Exact fallback on the strata where the closed forms degenerate."""
    import sympy

    i1, i2, i3 = (sympy.Rational(x.numerator, x.denominator) for x in (k.x1, k.x2, k.x3))
    u = sympy.symbols("u")
    # substitute v(u) from the i1-equation into the i2- and i3-equations
    vu = (sympy.Rational(16, 9) * i1 * (u + 15) ** 2 - 4 * u**2 + 504 * u - 1620) / 48
    J2 = -16 * u - 240
    J4 = 4 * u**2 - 504 * u + 48 * vu + 1620
    J6 = -24 * u**3 + 424 * u**2 - 160 * u * vu + 20664 * u - 96 * vu - 119880
    J10 = -64 * (u**2 + 18 * u - 4 * vu - 27) ** 2
    e2 = sympy.fraction(sympy.together(-1728 * (J2 * J4 - 3 * J6) - i2 * J2**3))[0]
    e3 = sympy.fraction(sympy.together(486 * J10 - i3 * J2**5))[0]
    for root in _common_rational_roots(sympy.expand(e2), sympy.expand(e3), u):
        cand = DihedralInvariants(root, _v_from_u(k.x1, root))
        vec = uv_curve_invariants(*cand.astuple())
        if vec.J10 != 0 and vec.J2 != 0 and key_of_invariants(vec) == k:
            return cand
    raise DomainError("no rational dihedral invariants found for this key")


def _common_rational_roots(e1, e2, var):
    import sympy

    g = sympy.gcd(sympy.Poly(e1, var), sympy.Poly(e2, var))
    roots = set()
    for r in sympy.roots(g, var, filter="Q"):
        roots.add(Fraction(int(sympy.numer(r)), int(sympy.denom(r))))
    # gcd can be constant when one equation is redundant; fall back to e1
    if not roots:
        for r in sympy.roots(sympy.Poly(e1, var), var, filter="Q"):
            roots.add(Fraction(int(sympy.numer(r)), int(sympy.denom(r))))
    return sorted(roots)
