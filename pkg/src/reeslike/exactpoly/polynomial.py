"""Operations on polynomials that need more than ring arithmetic."""

from __future__ import annotations

from operator import sub

from .ring import INHOMOGENEOUS, ZERO_DEGREE, GradedPolyRing, Polynomial


def weighted_degree(f: Polynomial, ring: GradedPolyRing | None = None):
    """Common weighted degree of the terms of ``f``.

    Returns an int, the tag ``"inhomogeneous"``, or ``ZERO_DEGREE`` for 0.
    """
    ring = ring or f.ring
    degs = {ring.degree_of(e) for e in f._t}
    if not degs:
        return ZERO_DEGREE
    if len(degs) > 1:
        return INHOMOGENEOUS
    return degs.pop()


def is_homogeneous(f: Polynomial) -> bool:
    return weighted_degree(f) != INHOMOGENEOUS


def max_weighted_degree(f: Polynomial):
    if not f._t:
        return ZERO_DEGREE
    return max(f.ring.degree_of(e) for e in f._t)


def homogeneous_components(f: Polynomial) -> dict:
    parts = {}
    for e, c in f._t.items():
        parts.setdefault(f.ring.degree_of(e), {})[e] = c
    return {d: Polynomial._make(f.ring, t) for d, t in sorted(parts.items())}


def partial_derivative(f: Polynomial, var: str) -> Polynomial:
    ring = f.ring
    i = ring.index(var)
    field = ring.field
    p = field.characteristic
    d = {}
    for e, c in f._t.items():
        a = e[i]
        if not a:
            continue
        v = c * a
        if p:
            v %= p
        if v:
            e2 = list(e)
            e2[i] = a - 1
            d[tuple(e2)] = v if p else field(v)
    return Polynomial._make(ring, d)


def substitute(f: Polynomial, mapping: dict, target: GradedPolyRing | None = None, carry: bool = True) -> Polynomial:
    """Ring map sending variable ``v`` to ``mapping[v]``.

    Variables of ``f`` missing from ``mapping`` are carried over by name into
    ``target`` when ``carry`` is set and the name exists there.
    """
    ring = f.ring
    images = {}
    for k, v in mapping.items():
        name = ring.resolve(k)
        if name is None:
            raise KeyError(f"unknown variable {k!r}")
        images[name] = v
    if target is None:
        target = next((v.ring for v in images.values() if isinstance(v, Polynomial)), ring)
    imgs = []
    for v in ring.names:
        if v in images:
            g = images[v]
            imgs.append(g.to_ring(target) if isinstance(g, Polynomial) else target.const(g))
        elif carry and v in target:
            imgs.append(target.var(v))
        else:
            imgs.append(None)
    used = set()
    for e in f._t:
        used.update(i for i, a in enumerate(e) if a)
    for i in used:
        if imgs[i] is None:
            raise ValueError(f"variable {ring.names[i]!r} is neither mapped nor present in the target ring")
    powers = [{} for _ in imgs]

    def power(i, a):
        cache = powers[i]
        if a not in cache:
            cache[a] = imgs[i] ** a
        return cache[a]

    out = target.zero
    for e, c in f._t.items():
        term = target.const(c if target.field == ring.field else ring.field.to_text(c))
        for i, a in enumerate(e):
            if a:
                term = term * power(i, a)
        out = out + term
    return out


def evaluate(f: Polynomial, point: dict):
    """Value of ``f`` at a point given as ``{name: field element}`` covering its variables."""
    ring = f.ring
    field = ring.field
    vals = [None] * ring.nvars
    for k, v in point.items():
        vals[ring.index(k)] = field(v)
    total = field.zero
    p = field.characteristic
    for e, c in f._t.items():
        t = c
        for i, a in enumerate(e):
            if a:
                if vals[i] is None:
                    raise ValueError(f"no value for {ring.names[i]!r}")
                t = t * vals[i] ** a
        total = total + t
    return total % p if p else total


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a, b) -> tuple:
    """``a / b`` for exponent tuples; caller guarantees divisibility."""
    return tuple(map(sub, a, b))


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises ``ValueError`` otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    field = ring.field
    lc_inv = field.inv(g.lc)
    lm = g.lm
    q = ring.zero
    r = f
    while r:
        c, e = r.lt
        if not monomial_divides(lm, e):
            raise ValueError("division is not exact")
        t = ring.monomial(monomial_quotient(e, lm), c * lc_inv)
        q = q + t
        r = r - t * g
    return q


def content_free_sign(f: Polynomial) -> Polynomial:
    """``f`` or ``-f``, whichever has a positive leading coefficient (rationals only)."""
    if f and f.ring.field.is_rational and f.lc < 0:
        return -f
    return f
