"""Dense univariate polynomials over a field.

A polynomial is a list of raw field values, lowest degree first, with no
trailing zeros; ``[]`` is the zero polynomial.  All functions take the
field as their first argument.
"""

import random as _random


def trim(F, f):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def deg(f):
    return len(f) - 1


def add(F, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def neg(F, f):
    return [F.neg(c) for c in f]


def sub(F, f, g):
    return add(F, f, neg(F, g))


def scale(F, c, f):
    if F.is_zero(c):
        return []
    return [F.mul(c, a) for a in f]


def mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def monic(F, f):
    if not f:
        return []
    inv = F.inv(f[-1])
    return [F.mul(inv, c) for c in f]


def divmod_(F, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv = F.inv(g[-1])
    dg = len(g) - 1
    q = [F.zero] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = F.mul(f[-1], inv)
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = F.sub(f[shift + i], F.mul(c, b))
        f = trim(F, f)
    return trim(F, q), f


def mod(F, f, g):
    return divmod_(F, f, g)[1]


def gcd(F, f, g):
    while g:
        f, g = g, mod(F, f, g)
    return monic(F, f)


def xgcd(F, f, g):
    """Return (d, s, t) with s*f + t*g = d monic."""
    r0, r1 = f, g
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return [], [], []
    inv = F.inv(r0[-1])
    return scale(F, inv, r0), scale(F, inv, s0), scale(F, inv, t0)


def powmod(F, f, e, m):
    result = [F.one]
    base = mod(F, f, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        e >>= 1
        if e:
            base = mod(F, mul(F, base, base), m)
    return result


def derivative(F, f):
    return trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(f)][1:])


def evaluate(F, f, x):
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def evaluate_in(K, f, x, emb):
    """Evaluate f (coefficients in some field) at x in K, mapping coefficients by emb."""
    acc = K.zero
    for c in reversed(f):
        acc = K.add(K.mul(acc, x), emb(c))
    return acc


def x_power_mod(F, e, m):
    return powmod(F, [F.zero, F.one], e, m)


def frobenius_degrees(F, f):
    """Degrees of the distinct irreducible factors of f over the finite field F."""
    q = F.order
    x = [F.zero, F.one]
    r = monic(F, f)
    degrees = []
    h = x
    e = 0
    while deg(r) > 0:
        e += 1
        h = powmod(F, h, q, r)
        g = gcd(F, r, sub(F, h, x))
        if deg(g) > 0:
            degrees.append(e)
            while deg(g) > 0:
                r = divmod_(F, r, g)[0]
                g = gcd(F, r, g)
            if deg(r) > 0:
                h = mod(F, h, r)
    return degrees


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_finite(F, f):
    """Rabin's test over a finite field."""
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    f = monic(F, f)
    q = F.order
    x = [F.zero, F.one]
    if sub(F, powmod(F, x, q ** n, f), x):
        return False
    for r in _prime_factors(n):
        h = sub(F, powmod(F, x, q ** (n // r), f), x)
        if deg(gcd(F, f, h)) > 0:
            return False
    return True


def roots_finite(F, f, rng=None):
    """All distinct roots of f lying in the finite field F, sorted by F.sort_key."""
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if deg(f) <= 0:
        return []
    rng = rng or _random.Random(0)
    f = monic(F, f)
    q = F.order
    x = [F.zero, F.one]
    g = gcd(F, f, sub(F, x_power_mod(F, q, f), x))
    out = []
    _split_linear(F, g, rng, out)
    return sorted(out, key=F.sort_key)


def _split_linear(F, g, rng, out):
    d = deg(g)
    if d <= 0:
        return
    if d == 1:
        out.append(F.neg(F.mul(g[0], F.inv(g[1]))))
        return
    q = F.order
    while True:
        a, c = F.random(rng), F.random(rng)
        if F.is_zero(c):
            continue
        h = [a, c]
        if F.characteristic == 2:
            k = q.bit_length() - 1
            t, acc = mod(F, h, g), mod(F, h, g)
            for _ in range(k - 1):
                t = mod(F, mul(F, t, t), g)
                acc = add(F, acc, t)
            s = acc
        else:
            s = sub(F, powmod(F, h, (q - 1) // 2, g), [F.one])
        c = gcd(F, g, s)
        if 0 < deg(c) < d:
            _split_linear(F, c, rng, out)
            _split_linear(F, divmod_(F, g, c)[0], rng, out)
            return


def minpoly_of_matrix(F, M):
    """Monic minimal polynomial of a square matrix (list of rows)."""
    from .linalg import IncrementalBasis, identity, matmul

    n = len(M)
    if n == 0:
        return [F.one]
    basis = IncrementalBasis(F, n * n)
    P = identity(F, n)
    k = 0
    while True:
        flat = [c for row in P for c in row]
        dep = basis.add(flat, k)
        if dep is not None:
            coeffs = [F.zero] * (k + 1)
            coeffs[k] = F.one
            for tag, c in dep.items():
                coeffs[tag] = F.neg(c)
            return coeffs
        P = matmul(F, P, M)
        k += 1
