"""Gröbner bases of submodules of F[x_1..x_n]^k and what is built on them."""

import itertools
import math
import threading
from functools import reduce as _fold

from ..errors import (DegreeBoundTooSmall, DegreeBudgetExceeded, InfiniteBaseField, InputError,
                      NotZeroDimensional, RankMismatch)
from ..fieldcore import embed, finite_field
from ..fieldcore import upoly
from ..fieldcore.linalg import IncrementalBasis
from .poly import (DEFAULT_ORDER, ModVector, MPoly, degrevlex_key, divides, exp_add, exp_lcm,
                   exp_sub, term_key_function)

DEGREE_CAP = 40


# -- core reduction on term dictionaries ------------------------------------------------------


class _Reducer:
    """Leading-term index of a list of monic module elements."""

    def __init__(self, F, key):
        self.F = F
        self.key = key
        self.by_pos = {}

    def add(self, lead, terms):
        self.by_pos.setdefault(lead[0], []).append((lead[1], terms))

    def find(self, t):
        for lexp, g in self.by_pos.get(t[0], ()):
            if divides(lexp, t[1]):
                return lexp, g
        return None

    def reduce(self, f, full=True):
        """Normal form of f; with full=False stops at the first irreducible leading term."""
        F, key = self.F, self.key
        p = dict(f)
        r = {}
        while p:
            t = max(p, key=key)
            c = p[t]
            hit = self.find(t)
            if hit is None:
                if not full:
                    r.update(p)
                    return r
                r[t] = c
                del p[t]
                continue
            lexp, g = hit
            shift = exp_sub(t[1], lexp)
            for (pos, e), gc in g.items():
                tt = (pos, exp_add(e, shift))
                val = F.sub(p[tt], F.mul(c, gc)) if tt in p else F.neg(F.mul(c, gc))
                if F.is_zero(val):
                    p.pop(tt, None)
                else:
                    p[tt] = val
        return r


def _monic(F, terms, key):
    lt = max(terms, key=key)
    inv = F.inv(terms[lt])
    return lt, {t: F.mul(inv, c) for t, c in terms.items()}


def _shift(terms, shift):
    return {(pos, exp_add(e, shift)): c for (pos, e), c in terms.items()}


def _spoly(F, lead_i, gi, lead_j, gj):
    L = exp_lcm(lead_i[1], lead_j[1])
    a = _shift(gi, exp_sub(L, lead_i[1]))
    b = _shift(gj, exp_sub(L, lead_j[1]))
    out = dict(a)
    for t, c in b.items():
        v = F.sub(out[t], c) if t in out else F.neg(c)
        if F.is_zero(v):
            out.pop(t, None)
        else:
            out[t] = v
    return out


def groebner_terms(F, gens, order=DEFAULT_ORDER, degree_cap=DEGREE_CAP):
    """Reduced Gröbner basis (list of (lead, terms), leads descending) of the given term dicts."""
    key = term_key_function(order)
    G = []
    red = _Reducer(F, key)
    pairs = set()

    def insert(h):
        lead, h = _monic(F, h, key)
        if sum(lead[1]) > degree_cap:
            raise DegreeBudgetExceeded(f"basis element of degree {sum(lead[1])} exceeds cap {degree_cap}",
                                       "polymod", "module_groebner")
        idx = len(G)
        for i, (li, _) in enumerate(G):
            if li[0] == lead[0]:
                pairs.add((i, idx))
        G.append((lead, h))
        red.add(lead, h)

    for f in gens:
        if f:
            h = red.reduce(f)
            if h:
                insert(h)
    while pairs:
        i, j = min(pairs, key=lambda ij: (sum(exp_lcm(G[ij[0]][0][1], G[ij[1]][0][1])), ij))
        pairs.discard((i, j))
        li, lj = G[i][0], G[j][0]
        L = exp_lcm(li[1], lj[1])
        if sum(L) > degree_cap:
            raise DegreeBudgetExceeded(f"S-pair of degree {sum(L)} exceeds cap {degree_cap}",
                                       "polymod", "module_groebner")
        # product criterion holds only for ideals; for modules use the chain criterion
        chain = False
        for k, (lk, _) in enumerate(G):
            if k in (i, j) or lk[0] != li[0] or not divides(lk[1], L):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s = _spoly(F, li, G[i][1], lj, G[j][1])
        h = red.reduce(s)
        if h:
            insert(h)
    return _reduce_basis(F, G, key)


def _reduce_basis(F, G, key):
    G = sorted(G, key=lambda lg: key(lg[0]))
    minimal = []
    for idx, (lead, g) in enumerate(G):
        dominated = False
        for jdx, (l2, _) in enumerate(G):
            if jdx == idx or l2[0] != lead[0] or not divides(l2[1], lead[1]):
                continue
            if l2[1] != lead[1] or jdx < idx:
                dominated = True
                break
        if not dominated:
            minimal.append((lead, g))
    out = []
    for idx, (lead, g) in enumerate(minimal):
        red = _Reducer(F, key)
        for jdx, (l2, g2) in enumerate(minimal):
            if jdx != idx:
                red.add(l2, g2)
        h = red.reduce(g)
        lt, h = _monic(F, h, key)
        out.append((lt, h))
    out.sort(key=lambda lg: key(lg[0]), reverse=True)
    return out


# -- Submodule -----------------------------------------------------------------------------------


class Submodule:
    """Submodule of F[x_1..x_n]^rank given by generators, with a cached reduced Gröbner basis."""

    def __init__(self, field, nvars, rank, gens=(), order=DEFAULT_ORDER, degree_cap=DEGREE_CAP):
        self.field = field
        self.nvars = nvars
        self.rank = rank
        self.order = tuple(order)
        self.degree_cap = degree_cap
        self.key = term_key_function(self.order)
        self.gens = []
        for g in gens:
            if isinstance(g, ModVector):
                if g.rank != rank:
                    raise RankMismatch(f"generator of rank {g.rank} in rank {rank} module",
                                       "polymod", "Submodule")
                self.gens.append(g)
            else:
                self.gens.append(ModVector(field, nvars, rank, g))
        self._gb = None
        self._lock = threading.Lock()

    @classmethod
    def from_terms(cls, field, nvars, rank, term_dicts, **kw):
        return cls(field, nvars, rank, [ModVector(field, nvars, rank, t) for t in term_dicts], **kw)

    @classmethod
    def full(cls, field, nvars, rank):
        return cls(field, nvars, rank, [ModVector.unit(field, nvars, rank, i) for i in range(rank)])

    def gb_terms(self):
        with self._lock:
            if self._gb is None:
                self._gb = groebner_terms(self.field, [g.terms for g in self.gens], self.order,
                                          self.degree_cap)
            return self._gb

    @property
    def basis(self):
        return [ModVector(self.field, self.nvars, self.rank, t) for _, t in self.gb_terms()]

    def leads(self):
        return [lead for lead, _ in self.gb_terms()]

    def _reducer(self):
        red = _Reducer(self.field, self.key)
        for lead, g in self.gb_terms():
            red.add(lead, g)
        return red

    def normal_form_terms(self, terms):
        return self._reducer().reduce(terms)

    def normal_form(self, v):
        if v.rank != self.rank:
            raise RankMismatch("rank mismatch", "polymod", "normal_form")
        return ModVector(self.field, self.nvars, self.rank, self.normal_form_terms(v.terms))

    def contains(self, v):
        terms = v.terms if isinstance(v, ModVector) else v
        return not self.normal_form_terms(terms)

    def contains_module(self, other):
        return all(self.contains(g) for g in other.gens)

    def is_full(self):
        leads = self.leads()
        return all(any(l == (i, (0,) * self.nvars) for l in leads) for i in range(self.rank))

    def is_zero(self):
        return not self.gb_terms()

    def __eq__(self, other):
        return (isinstance(other, Submodule) and self.rank == other.rank
                and self.nvars == other.nvars and self.field == other.field
                and self.order == other.order and self.gb_terms() == other.gb_terms())

    def __hash__(self):
        return hash((self.rank, self.nvars, len(self.gb_terms())))

    def __repr__(self):
        return f"Submodule(rank={self.rank}, basis={self.basis})"


def module_groebner(S, order=None):
    """S with its reduced Gröbner basis computed (in the requested order)."""
    if order is not None and tuple(order) != S.order:
        S = Submodule(S.field, S.nvars, S.rank, S.gens, order=order, degree_cap=S.degree_cap)
    S.gb_terms()
    return S


def normal_form(v, S):
    return S.normal_form(v)


# -- elimination-based constructions -----------------------------------------------------------


def _eliminate(F, nvars, total_rank, gens, keep_from, degree_cap=DEGREE_CAP):
    """Elements of the generated module lying in positions >= keep_from, shifted down."""
    G = groebner_terms(F, gens, DEFAULT_ORDER, degree_cap)
    out = []
    for lead, g in G:
        if lead[0] >= keep_from:
            out.append({(pos - keep_from, e): c for (pos, e), c in g.items()})
    return out


def intersect_submodules(S1, S2):
    if S1.rank != S2.rank or S1.nvars != S2.nvars:
        raise RankMismatch("submodules live in different free modules", "polymod",
                           "intersect_submodules")
    k = S1.rank
    gens = []
    for g in S1.gens:
        t = dict(g.terms)
        t.update({(pos + k, e): c for (pos, e), c in g.terms.items()})
        gens.append(t)
    for h in S2.gens:
        gens.append(dict(h.terms))
    kept = _eliminate(S1.field, S1.nvars, 2 * k, gens, k, max(S1.degree_cap, S2.degree_cap))
    return Submodule.from_terms(S1.field, S1.nvars, k, kept, order=S1.order,
                                degree_cap=S1.degree_cap)


def intersect_all(modules, field, nvars, rank):
    if not modules:
        return Submodule.full(field, nvars, rank)
    return _fold(intersect_submodules, modules)


def colon_vector(S, v):
    """(S : v) = {f in R : f v in S}, as an ideal (rank-1 submodule)."""
    F, k = S.field, S.rank
    gens = [dict(g.terms) for g in S.gens]
    t = dict(v.terms)
    t[(k, (0,) * S.nvars)] = F.one
    gens.append(t)
    kept = _eliminate(F, S.nvars, k + 1, gens, k, S.degree_cap)
    return Submodule.from_terms(F, S.nvars, 1, kept, degree_cap=S.degree_cap)


def colon_unit(S, i):
    return colon_vector(S, ModVector.unit(S.field, S.nvars, S.rank, i))


def annihilator(S):
    """ann(R^k / S) = intersection of the colons (S : e_i)."""
    return intersect_all([colon_unit(S, i) for i in range(S.rank)], S.field, S.nvars, 1)


# -- finite-dimensional quotients -----------------------------------------------------------------


def _pure_power_check(S):
    leads = S.leads()
    n = S.nvars
    for pos in range(S.rank):
        for l in range(n):
            if not any(lp == pos and all(e == 0 for i, e in enumerate(exp) if i != l)
                       for lp, exp in leads):
                return False
    return True


class QuotientSpace:
    """F-basis of standard terms of F[x]^k / S with coordinates and multiplication matrices."""

    def __init__(self, S):
        if not _pure_power_check(S):
            raise NotZeroDimensional("quotient is infinite-dimensional", "polymod", "quotient")
        self.module = S
        self.field = S.field
        red = S._reducer()
        self._reducer = red
        n = S.nvars
        terms = []
        for pos in range(S.rank):
            seen = set()
            stack = [(0,) * n]
            while stack:
                e = stack.pop()
                if e in seen:
                    continue
                seen.add(e)
                if red.find((pos, e)) is not None:
                    continue
                terms.append((pos, e))
                for l in range(n):
                    stack.append(tuple(x + (1 if i == l else 0) for i, x in enumerate(e)))
        terms.sort(key=S.key, reverse=True)
        self.terms = terms
        self.index = {t: i for i, t in enumerate(terms)}
        self.dim = len(terms)

    def coords_of_terms(self, terms, reduced=False):
        F = self.field
        nf = terms if reduced else self._reducer.reduce(terms)
        v = [F.zero] * self.dim
        for t, c in nf.items():
            v[self.index[t]] = c
        return v

    def coords(self, vec):
        return self.coords_of_terms(vec.terms)

    def element(self, coords):
        return {t: c for t, c in zip(self.terms, coords) if not self.field.is_zero(c)}

    def mult_matrix(self, l):
        F = self.field
        n = self.module.nvars
        step = tuple(1 if i == l else 0 for i in range(n))
        M = [[F.zero] * self.dim for _ in range(self.dim)]
        for c, (pos, e) in enumerate(self.terms):
            col = self.coords_of_terms({(pos, exp_add(e, step)): F.one})
            for r in range(self.dim):
                M[r][c] = col[r]
        return M


def _factor_degrees(F, f):
    if F.order is not None:
        return upoly.frobenius_degrees(F, f)
    from ..findim.factor import factor

    return sorted({len(g) - 1 for g, _ in factor(F, f)})


def is_zero_dimensional(S):
    """(True, D) if F[x]^k/S is finite-dimensional, D bounding the degree of every point
    of the support over the base field; (False, None) otherwise."""
    if S.is_full():
        return True, 1
    if not _pure_power_check(S):
        return False, None
    Q = QuotientSpace(S)
    per_var = [_factor_degrees(S.field, upoly.minpoly_of_matrix(S.field, Q.mult_matrix(l)))
               for l in range(S.nvars)]
    if S.field.order is not None:
        return True, _fold(math.lcm, [d for ds in per_var for d in ds], 1)
    # residue fields are generated by the coordinates
    return True, math.prod(max(ds, default=1) for ds in per_var)


def eliminant(ideal, l, quotient=None):
    """Monic generator of ideal ∩ F[x_l], found from normal forms of powers of x_l."""
    F = ideal.field
    Q = quotient or QuotientSpace(ideal)
    inc = IncrementalBasis(F, Q.dim)
    k = 0
    while True:
        exp = tuple(k if i == l else 0 for i in range(ideal.nvars))
        dep = inc.add(Q.coords_of_terms({(0, exp): F.one}), k)
        if dep is not None:
            coeffs = [F.zero] * (k + 1)
            coeffs[k] = F.one
            for tag, c in dep.items():
                coeffs[tag] = F.neg(c)
            return coeffs
        k += 1


def _element_degree(L, F_order, x, e):
    """Degree over the subfield of order F_order of an element x of L (a divisor of e)."""
    for d in sorted(d for d in range(1, e + 1) if e % d == 0):
        if L.pow(x, F_order ** d) == x:
            return d
    return e


def enumerate_points(S, Dmax=None):
    """Points of the support of F[x]^k / S over extensions of degree <= Dmax.

    Returns a list of (L, xi) where L is the field of order |F|^e, e the exact
    degree of xi over F, and xi a tuple of raw elements of L.  All conjugates
    are listed.  Raises DegreeBoundTooSmall when a point of degree above
    Dmax exists.
    """
    F = S.field
    if F.order is None:
        raise InfiniteBaseField("point enumeration needs a finite base field", "polymod",
                                "enumerate_points")
    ann = annihilator(S)
    if ann.is_full():
        return []
    if not _pure_power_check(ann):
        raise NotZeroDimensional("support is positive-dimensional", "polymod", "enumerate_points")
    Q = QuotientSpace(ann)
    elims = [eliminant(ann, l, Q) for l in range(S.nvars)]
    bound = _fold(math.lcm, [d for f in elims for d in upoly.frobenius_degrees(F, f)], 1)
    if Dmax is None:
        Dmax = bound
    p = F.characteristic
    m = F.absolute_degree
    gens = [g for _, g in ann.gb_terms()]
    out = []
    for e in (d for d in range(1, bound + 1) if bound % d == 0):
        L = finite_field(p, e * m)
        emb = embed(F, L)
        root_lists = [upoly.roots_finite(L, [emb(c) for c in f]) for f in elims]
        for xi in itertools.product(*root_lists):
            if math.lcm(*[_element_degree(L, F.order, x, e) for x in xi]) != e:
                continue
            if all(_vanishes(g, xi, L, emb) for g in gens):
                if e > Dmax:
                    raise DegreeBoundTooSmall(f"point of degree {e} exceeds bound {Dmax}",
                                              "polymod", "enumerate_points")
                out.append((L, tuple(xi)))
    return out


def _vanishes(g, xi, L, emb):
    acc = L.zero
    for (_, e), c in g.items():
        v = emb(c)
        for x, k in zip(xi, e):
            if k:
                v = L.mul(v, L.pow(x, k))
        acc = L.add(acc, v)
    return L.is_zero(acc)


# -- Buchberger-Möller for kernels of linear maps ---------------------------------------------


def kernel_submodule(field, nvars, rank, value, target_dim, degree_cap=DEGREE_CAP):
    """Reduced POT/degrevlex Gröbner basis of the kernel of an F-linear map on F[x]^rank.

    ``value(pos, exp)`` returns the image of the module term as a length
    ``target_dim`` vector over ``field``.  The kernel must be a submodule of
    finite codimension.
    """
    F = field
    inc = IncrementalBasis(F, target_dim)
    standard = []
    gb = []
    leads = {}
    for pos in reversed(range(rank)):
        D = 0
        while True:
            level = sorted(_monomials(nvars, D), key=degrevlex_key)
            fresh = False
            for e in level:
                if any(divides(le, e) for le in leads.get(pos, ())):
                    continue
                fresh = True
                dep = inc.add(value(pos, e), len(standard))
                if dep is None:
                    standard.append((pos, e))
                else:
                    terms = {(pos, e): F.one}
                    for tag, c in dep.items():
                        terms[standard[tag]] = F.neg(c)
                    gb.append(terms)
                    leads.setdefault(pos, []).append(e)
            if not fresh:
                break
            D += 1
            if D > degree_cap:
                raise DegreeBudgetExceeded("kernel has no finite basis within the degree cap",
                                           "polymod", "kernel_submodule")
    return Submodule.from_terms(F, nvars, rank, gb, degree_cap=degree_cap)


def _monomials(n, D):
    if n == 0:
        if D == 0:
            yield ()
        return
    for first in range(D, -1, -1):
        for rest in _monomials(n - 1, D - first):
            yield (first,) + rest


def quotient_dimension(S):
    return QuotientSpace(S).dim
