"""Ideals with cached reduced Groebner bases and the standard ideal operations."""

from __future__ import annotations

import math
import threading

from ..exactpoly import GradedPolyRing, MonomialOrder, Polynomial, divide_exact, is_homogeneous, weighted_degree
from ..exactpoly.orders import elim
from .buchberger import GBEngine, poly_to_vec, reducer, vec_to_poly

#: Height of the unit ideal.
INFINITE_HEIGHT = math.inf


def fresh_name(ring: GradedPolyRing, base: str) -> str:
    if base not in ring:
        return base
    k = 0
    while f"{base}{k}" in ring:
        k += 1
    return f"{base}{k}"


class Ideal:
    """An ideal of ``ring`` given by generators.

    Reduced Groebner bases are computed on demand and cached per monomial
    order; the cache is guarded by a lock so an ideal may be shared between
    threads.
    """

    def __init__(self, ring: GradedPolyRing, gens):
        polys = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            elif not isinstance(g, Polynomial):
                g = ring.const(g)
            elif g.ring != ring:
                g = g.to_ring(ring)
            polys.append(g)
        self.ring = ring
        self.gens = tuple(polys)
        self._lock = threading.Lock()
        self._gb = {}
        self._red = {}

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]!r})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    @property
    def nonzero_gens(self):
        return [g for g in self.gens if g]

    # -- Groebner bases -----------------------------------------------------
    def groebner(self, order: MonomialOrder | None = None, strategy: str = "normal") -> list[Polynomial]:
        order = order or self.ring.order
        if strategy != "normal":
            return _compute_gb(self.ring, self.nonzero_gens, order, strategy)
        with self._lock:
            gb = self._gb.get(order)
        if gb is None:
            gb = _compute_gb(self.ring, self.nonzero_gens, order, strategy)
            with self._lock:
                self._gb.setdefault(order, gb)
                gb = self._gb[order]
        return list(gb)

    def _reducer(self, order):
        with self._lock:
            r = self._red.get(order)
        if r is None:
            r = reducer(self.ring, order, self.groebner(order))
            with self._lock:
                self._red.setdefault(order, r)
                r = self._red[order]
        return r

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
        order = order or self.ring.order
        f = self._coerce(f)
        red = self._reducer(order)
        with self._lock:
            r = red.normal_form(poly_to_vec(f))
        return vec_to_poly(self.ring, r)

    def _coerce(self, f):
        if isinstance(f, str):
            return self.ring.parse(f)
        if not isinstance(f, Polynomial):
            return self.ring.const(f)
        if f.ring != self.ring:
            return f.to_ring(self.ring)
        return f

    def contains(self, f) -> bool:
        return self.normal_form(f).is_zero

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def is_zero(self) -> bool:
        return not self.nonzero_gens

    def is_homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial for g in self.nonzero_gens)

    def leading_monomials(self, order: MonomialOrder | None = None) -> list[tuple]:
        order = order or self.ring.order
        key = self.ring.order_key(order)
        return [max(g.as_dict(), key=key) for g in self.groebner(order)]

    def initial_ideal(self, order: MonomialOrder | None = None) -> "Ideal":
        return Ideal(self.ring, [self.ring.monomial(e) for e in self.leading_monomials(order)])

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.gens + other.gens)
        return Ideal(self.ring, self.gens + tuple(other))

    def __mul__(self, other: "Ideal"):
        return Ideal(self.ring, [a * b for a in self.nonzero_gens for b in other.nonzero_gens])

    def power(self, k: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one])
        for _ in range(k):
            out = Ideal(self.ring, minimalize_monomials(out * self))
        return out

    def to_ring(self, ring: GradedPolyRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def minimal_gens(self) -> list[Polynomial]:
        from .modules import minimal_generators

        return minimal_generators(self.nonzero_gens)

    # -- operations ---------------------------------------------------------
    def eliminate(self, variables) -> "Ideal":
        return eliminate(self, variables)

    def quotient(self, other) -> "Ideal":
        return ideal_quotient(self, other)

    def saturate(self, other) -> "Ideal":
        return saturate(self, other)

    def intersect(self, other) -> "Ideal":
        return ideal_intersect(self, other)

    def radical_contains(self, f) -> bool:
        return radical_membership(f, self)

    def dimension(self) -> int:
        return dimension(self)

    def height(self):
        return height(self)


def minimalize_monomials(I: Ideal) -> list[Polynomial]:
    """Drop duplicate generators and, for monomial generators, those divisible by others."""
    seen = []
    for g in I.nonzero_gens:
        if g not in seen:
            seen.append(g)
    if not all(g.is_monomial for g in seen):
        return seen
    out = []
    for g in seen:
        e = g.lm
        if any(h is not g and all(a <= b for a, b in zip(h.lm, e)) and (h.lm != e or seen.index(h) < seen.index(g)) for h in seen):
            continue
        out.append(g)
    return out


def _compute_gb(ring, polys, order, strategy):
    homog = all(is_homogeneous(f) for f in polys)
    eng = GBEngine(ring, order, strategy=strategy)
    if homog and strategy == "normal":
        # feed generators degree by degree so redundant ones reduce away early
        polys = sorted(polys, key=lambda f: weighted_degree(f))
        for f in polys:
            eng.run(weighted_degree(f))
            eng.add(poly_to_vec(f))
    else:
        for f in polys:
            eng.add(poly_to_vec(f))
    eng.run()
    return tuple(vec_to_poly(ring, t) for t in eng.reduced_basis())


# -- module-level API -------------------------------------------------------
def groebner(I: Ideal, order: MonomialOrder | None = None, strategy: str = "normal") -> list[Polynomial]:
    return I.groebner(order, strategy)


def normal_form(f: Polynomial, I: Ideal, order: MonomialOrder | None = None) -> Polynomial:
    return I.normal_form(f, order)


def ideal_membership(f, I: Ideal) -> bool:
    return I.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.equals(J)


def eliminate(I: Ideal, variables) -> Ideal:
    """``I`` intersected with the subring omitting ``variables``."""
    ring = I.ring
    block = tuple(ring.resolve(v) or v for v in variables)
    for v in block:
        ring.index(v)
    sub = ring.drop(block)
    if not block:
        return Ideal(sub, I.gens)
    if not all(is_homogeneous(f) for f in I.nonzero_gens):
        return _eliminate_homogenized(I, block, sub)
    idx = [ring.index(v) for v in block]
    gb = I.groebner(elim(block))
    keep = [g for g in gb if all(e[i] == 0 for e in g.as_dict() for i in idx)]
    return Ideal(sub, [g.to_ring(sub) for g in keep] or [sub.zero])


def homogenize(f: Polynomial, big: GradedPolyRing) -> Polynomial:
    """Homogenize ``f`` with the last variable of ``big`` (weight 1)."""
    d = f.as_dict()
    top = max(f.ring.degree_of(e) for e in d)
    return big.poly({e + (top - f.ring.degree_of(e),): c for e, c in d.items()})


def _eliminate_homogenized(I: Ideal, block, sub) -> Ideal:
    # Inhomogeneous elimination orders suffer badly from coefficient swell;
    # eliminating from the homogenized generators and setting h = 1 afterwards
    # gives the same elimination ideal, since h^N g^h lies in the homogenized
    # ideal for every g in the elimination ideal.
    ring = I.ring
    h = fresh_name(ring, "h")
    big = GradedPolyRing(ring.names + (h,), ring.weights + (1,), ring.field)
    H = Ideal(big, [homogenize(f, big) for f in I.nonzero_gens])
    idx = [big.index(v) for v in block]
    gb = H.groebner(elim(block))
    keep = [g for g in gb if all(e[i] == 0 for e in g.as_dict() for i in idx)]
    out = [ring.poly(_drop_last(g)).to_ring(sub) for g in keep]
    return Ideal(sub, [g for g in out if g] or [sub.zero])


def _drop_last(g: Polynomial) -> dict:
    d = {}
    for e, c in g.as_dict().items():
        d[e[:-1]] = d.get(e[:-1], 0) + c
    return d


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [ring.zero])
    t = fresh_name(ring, "t")
    big = ring.extend([t])
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.nonzero_gens] + [(1 - tv) * g.to_ring(big) for g in J.nonzero_gens]
    out = eliminate(Ideal(big, gens), [t])
    return Ideal(ring, [g.to_ring(ring) for g in out.gens])


def _quotient_by_element(I: Ideal, g: Polynomial) -> Ideal:
    ring = I.ring
    if g.is_zero:
        return Ideal(ring, [ring.one])
    meet = ideal_intersect(I, Ideal(ring, [g]))
    return Ideal(ring, [divide_exact(h, g) for h in meet.nonzero_gens] or [ring.zero])


def ideal_quotient(I: Ideal, J) -> Ideal:
    """The colon ideal ``I : J``; ``J`` may be an Ideal or a single polynomial."""
    ring = I.ring
    if isinstance(J, Polynomial):
        return _quotient_by_element(I, J)
    gens = [g for g in J.gens if g]
    if not gens:
        return Ideal(ring, [ring.one])
    out = None
    for g in gens:
        q = _quotient_by_element(I, g)
        out = q if out is None else ideal_intersect(out, q)
    return Ideal(ring, out.groebner())


def saturate(I: Ideal, J) -> Ideal:
    cur = Ideal(I.ring, I.groebner())
    while True:
        nxt = ideal_quotient(cur, J)
        if cur.contains_ideal(nxt):
            return cur
        cur = nxt


def radical_membership(f, I: Ideal) -> bool:
    """``f`` lies in the radical of ``I``: ``1 in I + (1 - w f)`` in ``ring[w]``."""
    ring = I.ring
    f = I._coerce(f)
    if f.is_zero:
        return True
    w = fresh_name(ring, "w")
    big = ring.extend([w])
    extended = Ideal(big, [g.to_ring(big) for g in I.nonzero_gens] + [1 - big.var(w) * f.to_ring(big)])
    return extended.is_unit()


def dimension(I: Ideal) -> int:
    """Krull dimension of ``ring / I``; ``-1`` for the unit ideal."""
    ring = I.ring
    if I.is_zero():
        return ring.nvars
    if I.is_unit():
        return -1
    supports = []
    for e in I.leading_monomials():
        supports.append(frozenset(i for i, a in enumerate(e) if a))
    return ring.nvars - min_hitting_set(supports)


def height(I: Ideal):
    """Codimension of ``I``; ``INFINITE_HEIGHT`` for the unit ideal."""
    d = dimension(I)
    if d < 0:
        return INFINITE_HEIGHT
    return I.ring.nvars - d


def min_hitting_set(sets) -> int:
    """Size of a smallest set of indices meeting every set in ``sets``."""
    sets = sorted(set(sets), key=len)
    # keep inclusion-minimal sets only
    minimal = []
    for s in sets:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    best = [len({min(s) for s in minimal}) if minimal else 0]
    best[0] = min(best[0], len(set().union(*minimal))) if minimal else 0

    def go(remaining, size):
        if size >= best[0]:
            return
        if not remaining:
            best[0] = size
            return
        pick = min(remaining, key=len)
        for v in sorted(pick):
            go([s for s in remaining if v not in s], size + 1)

    go(minimal, 0)
    return best[0]
