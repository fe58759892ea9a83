"""Univariate factorization over prime fields and the rationals, via sympy."""

from fractions import Fraction

from ..errors import NotSupported
from ..fieldcore import PrimeField, RationalField
from ..fieldcore import upoly


def factor(F, f):
    """Monic irreducible factors of f with multiplicities, in a canonical order.

    ``f`` is a coefficient list (lowest degree first) over a prime field or QQ.
    """
    f = upoly.monic(F, upoly.trim(F, f))
    if len(f) <= 1:
        return []
    if isinstance(F, PrimeField):
        from sympy import ZZ
        from sympy.polys.galoistools import gf_factor

        _, facs = gf_factor([int(c) for c in reversed(f)], F.p, ZZ)
        out = [([int(c) % F.p for c in reversed(g)], e) for g, e in facs]
    elif isinstance(F, RationalField):
        import sympy

        t = sympy.Symbol("t")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f)], t,
                          domain="QQ")
        _, facs = poly.factor_list()
        out = []
        for g, e in facs:
            coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
            out.append((upoly.monic(F, coeffs), e))
    else:
        raise NotSupported(f"factorization over {F} is not available", "findim", "factor")
    out.sort(key=lambda fe: (len(fe[0]), [F.sort_key(c) for c in reversed(fe[0])]))
    return out


def crt_idempotents(F, f, factors):
    """Polynomials q_i with q_i = 1 mod g_i^e_i and 0 mod the other prime powers of f."""
    f = upoly.monic(F, f)
    out = []
    for g, e in factors:
        ge = [F.one]
        for _ in range(e):
            ge = upoly.mul(F, ge, g)
        cof = upoly.divmod_(F, f, ge)[0]
        d, s, _ = upoly.xgcd(F, cof, ge)
        out.append(upoly.mod(F, upoly.mul(F, s, cof), f))
    return out
