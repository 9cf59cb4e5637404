"""Buchberger's algorithm for submodules of free modules ``R^rank``.

Vectors are dicts ``{(pos, exponents): coeff}``; an ideal is the case
``rank == 1``.  Module monomials are ordered position-over-term with smaller
positions larger, so the first components are eliminated first.

Pairs are chosen by the normal strategy with sugar (smallest sugar degree,
ties broken by the monomial order) and pruned by the Gebauer-Moeller criteria.
For homogeneous input the sugar of a pair is the weighted degree of its lcm.
The coprime-leading-monomial criterion is used only for ideals.
"""

from __future__ import annotations

import heapq
import itertools
from operator import add, sub

from ..config import degree_cap
from ..errors import DegreeCapExceeded

STRATEGIES = ("normal", "fifo")


class _Elt:
    __slots__ = ("lm", "terms", "mask", "deg", "sugar")

    def __init__(self, terms, mask, deg, sugar):
        self.terms = terms  # [(pos, exp, coeff)] decreasing, leading coeff 1
        self.lm = (terms[0][0], terms[0][1])
        self.mask = mask
        self.deg = deg
        self.sugar = sugar


def _mask(exp):
    m = 0
    for i, a in enumerate(exp):
        if a:
            m |= 1 << i
    return m


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class GBEngine:
    """Incremental Groebner basis computation.

    ``add`` feeds generators, ``run(limit)`` processes every pair of degree at
    most ``limit`` (all pairs when ``limit`` is None).  In the homogeneous case
    the basis is then complete through degree ``limit``.
    """

    def __init__(self, ring, order=None, rank: int = 1, shifts=None, strategy: str = "normal", cap: int | None = None):
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown pair strategy {strategy!r}")
        self.ring = ring
        self.order = order if order is not None else ring.order
        self.key = ring.order_key(self.order)
        self.field = ring.field
        self.p = ring.field.characteristic
        self.weights = ring.weights
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        self.strategy = strategy
        self.cap = degree_cap() if cap is None else cap
        self.elts: list[_Elt] = []
        self.active: list[int] = []
        self.pairs: dict = {}
        self.heap: list = []
        self._count = itertools.count()
        self._nk = {}
        self.reductions = 0

    # -- monomial helpers ---------------------------------------------------
    def negkey(self, mono):
        k = self._nk.get(mono)
        if k is None:
            pos, e = mono
            k = (pos,) + tuple([-x for x in self.key(e)])
            self._nk[mono] = k
        return k

    def mono_degree(self, mono):
        pos, e = mono
        return self.shifts[pos] + sum([a * w for a, w in zip(e, self.weights)])

    def sort_terms(self, vec: dict):
        """Terms of ``vec`` in decreasing order as ``[(pos, exp, coeff)]``."""
        nk = self.negkey
        return [(m[0], m[1], c) for m, c in sorted(vec.items(), key=lambda t: nk(t[0]))]

    # -- reduction ----------------------------------------------------------
    def find_divisor(self, mono, basis):
        pos, e = mono
        m = _mask(e)
        elts = self.elts
        for i in basis:
            g = elts[i]
            if g.lm[0] == pos and not (g.mask & ~m) and _divides(g.lm[1], e):
                return g
        return None

    def normal_form(self, vec: dict, basis=None, full: bool = True) -> dict:
        """Remainder of ``vec`` on division by the basis elements ``basis`` (indices)."""
        if basis is None:
            basis = self.active
        p = self.p
        cur = dict(vec)
        nk = self.negkey
        heap = [(nk(m), m) for m in cur]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = cur.pop(m, None)
            if c is None:
                continue
            g = self.find_divisor(m, basis)
            if g is None:
                rem[m] = c
                if not full:
                    rem.update(cur)
                    return rem
                continue
            self.reductions += 1
            q = tuple(map(sub, m[1], g.lm[1]))
            for pos2, e2, cg in g.terms[1:]:
                mono = (pos2, tuple(map(add, e2, q)))
                old = cur.get(mono)
                if old is None:
                    v = -c * cg
                    if p:
                        v %= p
                    cur[mono] = v
                    heapq.heappush(heap, (nk(mono), mono))
                else:
                    v = old - c * cg
                    if p:
                        v %= p
                    if v:
                        cur[mono] = v
                    else:
                        del cur[mono]
        return rem

    def _monic(self, vec: dict) -> list:
        terms = self.sort_terms(vec)
        lc = terms[0][2]
        if lc != 1:
            inv = self.field.inv(lc)
            p = self.p
            terms = [(a, e, (c * inv) % p if p else c * inv) for a, e, c in terms]
        return terms

    # -- pairs --------------------------------------------------------------
    def _lcm(self, i, j):
        return tuple(map(max, self.elts[i].lm[1], self.elts[j].lm[1]))

    def _push_pair(self, i, j, lcm):
        pos = self.elts[i].lm[0]
        mono = (pos, lcm)
        ld = self.mono_degree(mono)
        a, b = self.elts[i], self.elts[j]
        deg = max(a.sugar + ld - a.deg, b.sugar + ld - b.deg)
        if self.strategy == "normal":
            prio = (deg, pos, lcm, next(self._count))
        else:
            prio = (next(self._count),)
        self.pairs[(i, j)] = (deg, lcm)
        heapq.heappush(self.heap, prio + (deg, i, j))

    def _update(self, h: int):
        """Gebauer-Moeller update after appending element ``h``."""
        elts = self.elts
        hp, he = elts[h].lm
        ideal = self.rank == 1
        cands = [g for g in self.active if elts[g].lm[0] == hp]
        lcms = {g: tuple(map(max, he, elts[g].lm[1])) for g in cands}

        def coprime(g):
            return ideal and all(not (a and b) for a, b in zip(he, elts[g].lm[1]))

        # criterion M/F: drop (h, g) when another pair's lcm properly divides,
        # or equals it and was seen earlier
        keep = []
        for g in cands:
            L = lcms[g]
            dominated = False
            for g2 in cands:
                if g2 == g:
                    continue
                L2 = lcms[g2]
                if _divides(L2, L) and (L2 != L or g2 < g):
                    dominated = True
                    break
            if not dominated:
                keep.append(g)
        # criterion B on existing pairs
        for (i, j), (deg, L) in list(self.pairs.items()):
            if elts[i].lm[0] != hp:
                continue
            if _divides(he, L) and tuple(map(max, elts[i].lm[1], he)) != L and tuple(map(max, elts[j].lm[1], he)) != L:
                del self.pairs[(i, j)]
        for g in keep:
            if coprime(g):
                continue
            self._push_pair(g, h, lcms[g])
        self.active = [g for g in self.active if not (elts[g].lm[0] == hp and _divides(he, elts[g].lm[1]))]
        self.active.append(h)

    def _insert(self, terms, sugar=None):
        e = terms[0][1]
        deg = self.mono_degree((terms[0][0], e))
        if sugar is None:
            sugar = max(self.mono_degree((a, x)) for a, x, _ in terms)
        elt = _Elt(terms, _mask(e), deg, max(sugar, deg))
        self.elts.append(elt)
        self._update(len(self.elts) - 1)

    # -- public API ---------------------------------------------------------
    def add(self, vec: dict) -> bool:
        """Reduce ``vec`` and add it to the basis; False when it reduces to 0."""
        r = self.normal_form(vec)
        if not r:
            return False
        self._insert(self._monic(r))
        return True

    def pending_degree(self):
        """Smallest degree among unprocessed pairs, or None."""
        while self.heap:
            top = self.heap[0]
            i, j = top[-2], top[-1]
            if (i, j) in self.pairs:
                return top[-3]
            heapq.heappop(self.heap)
        return None

    def run(self, degree_limit=None):
        if degree_limit is not None and self.strategy != "normal":
            raise ValueError("degree-truncated runs need the normal strategy")
        while True:
            d = self.pending_degree()
            if d is None or (degree_limit is not None and d > degree_limit):
                return self
            prio = heapq.heappop(self.heap)
            i, j = prio[-2], prio[-1]
            deg, L = self.pairs.pop((i, j))
            if deg > self.cap:
                raise DegreeCapExceeded(deg, self.cap)
            s = self.spoly(i, j, L)
            r = self.normal_form(s)
            if r:
                self._insert(self._monic(r), deg)

    def spoly(self, i, j, L) -> dict:
        p = self.p
        out = {}
        for idx, sign in ((i, 1), (j, -1)):
            g = self.elts[idx]
            q = tuple(map(sub, L, g.lm[1]))
            for pos, e, c in g.terms[1:]:
                mono = (pos, tuple(map(add, e, q)))
                v = out.get(mono, 0) + sign * c
                if p:
                    v %= p
                if v:
                    out[mono] = v
                else:
                    out.pop(mono, None)
        return out

    def leading_monomials(self):
        return [self.elts[i].lm for i in self.active]

    def reduced_basis(self) -> list[list]:
        """Reduced basis as term lists, sorted by leading monomial (largest first)."""
        elts = self.elts
        act = []
        seen = set()
        for i in self.active:
            if elts[i].lm not in seen:
                seen.add(elts[i].lm)
                act.append(i)
        out = []
        for i in act:
            others = [k for k in act if k != i]
            g = elts[i]
            tail = {(a, e): c for a, e, c in g.terms[1:]}
            r = self.normal_form(tail, others)
            vec = {g.lm: self.field.one}
            vec.update(r)
            out.append(self.sort_terms(vec))
        out.sort(key=lambda t: self.negkey((t[0][0], t[0][1])))
        return out


def poly_to_vec(f, pos: int = 0) -> dict:
    return {(pos, e): c for e, c in f.items()}


def vec_to_poly(ring, terms) -> "Polynomial":
    from ..exactpoly import Polynomial

    return Polynomial._make(ring, {e: c for _, e, c in terms} if isinstance(terms, list) else {e: c for (_, e), c in terms.items()})


def groebner_basis(polys, ring, order=None, strategy: str = "normal", cap: int | None = None):
    """Reduced Groebner basis of the ideal generated by ``polys`` (list of Polynomials)."""
    eng = GBEngine(ring, order, strategy=strategy, cap=cap)
    for f in polys:
        if f:
            eng.add(poly_to_vec(f))
    eng.run()
    return [vec_to_poly(ring, t) for t in eng.reduced_basis()]


def is_groebner(polys, ring, order=None) -> bool:
    """Buchberger's criterion: every S-polynomial of ``polys`` reduces to 0 by ``polys``."""
    eng = reducer(ring, order, polys)
    idx = list(range(len(eng.elts)))
    for i, j in itertools.combinations(idx, 2):
        L = eng._lcm(i, j)
        s = eng.spoly(i, j, L)
        if eng.normal_form(s, idx):
            return False
    return True


def reducer(ring, order, polys, rank: int = 1) -> GBEngine:
    """Engine whose basis is exactly ``polys`` (no completion); for division only."""
    eng = GBEngine(ring, order, rank=rank, cap=10**9)
    for f in polys:
        vec = f if isinstance(f, dict) else poly_to_vec(f)
        if not vec:
            continue
        terms = eng._monic(vec)
        eng.elts.append(_Elt(terms, _mask(terms[0][1]), 0, 0))
    eng.active = list(range(len(eng.elts)))
    return eng
