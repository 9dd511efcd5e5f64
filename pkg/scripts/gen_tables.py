#!/usr/bin/env python3
"""Regenerate src/genus2/tables.py (exact coefficient tables used by the core).

Both tables are derived symbolically with sympy:

  * DISC6_TERMS: the discriminant of a generic binary sextic
    a0*x^6 + a1*x^5 + ... + a6, as a 246-term integer polynomial in a0..a6.
  * DEG30_TERMS: the degree-30 invariant det(M) of the Clebsch matrix,
    as an integer polynomial in (J2, J4, J6, J10) over the common
    denominator 2^14 * 3^27 * 5^20.

Run from the repository root:  python scripts/gen_tables.py
"""
import sys
from pathlib import Path

import sympy as sp
from sympy import Rational as R


def disc6_terms():
    x = sp.symbols("x")
    a = sp.symbols("a0:7")
    f = sum(a[i] * x ** (6 - i) for i in range(7))
    P = sp.Poly(sp.discriminant(f, x), *a)
    return [(tuple(int(e) for e in mono), int(c)) for mono, c in P.terms()]


def deg30_terms():
    J2, J4, J6, J10 = sp.symbols("J2 J4 J6 J10")
    A = -R(1, 2**3 * 3 * 5) * J2
    B = R(1, 2**3 * 3**3 * 5**4) * (J2**2 + 20 * J4)
    C = -R(1, 2**5 * 3**5 * 5**6) * (J2**3 + 80 * J2 * J4 - 600 * J6)
    D = -R(1, 2**8 * 3**9 * 5**10) * (
        9 * J2**5 + 700 * J2**3 * J4 - 3600 * J2**2 * J6
        - 12400 * J2 * J4**2 + 48000 * J4 * J6 + 10800000 * J10
    )
    A11 = 2 * C + A * B / 3
    A12 = R(2, 3) * (B**2 + A * C)
    A13 = D
    A22 = D
    A23 = B * (B**2 + A * C) / 3 + C * (2 * C + A * B / 3) / 3
    A33 = B * D / 2 + R(2, 9) * C * (B**2 + A * C)
    M = sp.Matrix([[A11, A12, A13], [A12, A22, A23], [A13, A23, A33]])
    det = sp.expand(M.det())
    P = sp.Poly(det, J2, J4, J6, J10)
    cont = sp.gcd([c for c in P.coeffs()])
    den = sp.Rational(1) / cont
    assert den == 2**14 * 3**27 * 5**20, den
    Pi = sp.Poly(sp.expand(det / cont), J2, J4, J6, J10)
    assert all(c.is_Integer for c in Pi.coeffs())
    return [(tuple(int(e) for e in mono), int(c)) for mono, c in Pi.terms()]


def main():
    out = Path(__file__).resolve().parent.parent / "src" / "genus2" / "tables.py"
    d6 = disc6_terms()
    d30 = deg30_terms()
    with out.open("w") as fh:
        fh.write('"""Exact coefficient tables (generated by scripts/gen_tables.py).\n\n')
        fh.write("DISC6_TERMS: discriminant of a0*x^6 + ... + a6 as (exponents, coeff)\n")
        fh.write("pairs, exponents indexed by (a0, ..., a6).\n\n")
        fh.write("DEG30_TERMS: determinant of the Clebsch matrix times\n")
        fh.write("DEG30_DENOMINATOR, as (exponents, coeff) pairs indexed by\n")
        fh.write("(J2, J4, J6, J10).  Vanishes exactly on the extra-involution locus.\n")
        fh.write('"""\n\n')
        fh.write("DISC6_TERMS = [\n")
        for mono, c in d6:
            fh.write(f"    ({mono!r}, {c}),\n")
        fh.write("]\n\n")
        fh.write("DEG30_DENOMINATOR = 2**14 * 3**27 * 5**20\n\n")
        fh.write("DEG30_TERMS = [\n")
        for mono, c in d30:
            fh.write(f"    ({mono!r}, {c}),\n")
        fh.write("]\n")
    print(f"wrote {out} ({len(d6)} + {len(d30)} terms)")


if __name__ == "__main__":
    sys.exit(main())
