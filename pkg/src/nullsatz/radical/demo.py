"""M_2(Q)[x] with xi = 0: the directional ideal for v = (1, sqrt 2) sits strictly inside
the one for u = (1, 0), so a directional ideal over a larger field need not be maximal."""

from ..fieldcore import QQ, make_extension
from ..findim import matrix_algebra, wedderburn
from ..leftideal import AlgPoly, DirectionalPoint, directional_ideal, kills


def sqrt2_demo(n=1):
    A = matrix_algebra(2, QQ, label="M2(Q)")
    W = wedderburn(A)
    E = W.factors[0].field
    K = make_extension(QQ, "s", [-2, 0, 1])
    xi_K = tuple(K.zero for _ in range(n))
    xi_E = tuple(E.zero for _ in range(n))
    v = DirectionalPoint(0, K, xi_K, (K.one, K.gen().value))
    u = DirectionalPoint(0, E, xi_E, (E.one, E.zero))
    J_v = directional_ideal(W, v, A, n)
    J_u = directional_ideal(W, u, A, n)
    one = AlgPoly.const(A, n, A.one())
    # theta is the identity on M_2(Q) up to the chosen basis; take the lift of E_12
    e12 = AlgPoly.const(A, n, W.matrix_unit(0, 0, 1))
    witness_in_both = AlgPoly.var(A, n, 0) * e12
    checks = {
        "J_v inside J_u": J_v <= J_u,
        "witness in J_u": J_u.contains(e12) and kills(W, u, e12),
        "witness not in J_v": not J_v.contains(e12) and not kills(W, v, e12),
        "J_u proper": not J_u.contains(one),
        "a(0) = 0 lies in both": J_u.contains(witness_in_both) and J_v.contains(witness_in_both),
    }
    return {
        "algebra": "M2(Q)",
        "nvars": n,
        "v": ["1", "s"],
        "u": ["1", "0"],
        "field_of_v": "Q[s]/(s^2 - 2)",
        "J_v": J_v.gb_strings(),
        "J_u": J_u.gb_strings(),
        "witness": e12.to_string(),
        "checks": checks,
        "strict": all(checks.values()),
    }
