"""Deliberately naive reference implementations used as test oracles.

Polynomials are plain dicts ``{exponent tuple: Fraction}``.  Nothing here
imports the package's Groebner engine.
"""

from fractions import Fraction
from itertools import combinations


def lex_key(e):
    return tuple(e)


def grevlex_key(weights):
    def key(e):
        return (sum(a * w for a, w in zip(e, weights)), tuple(-a for a in reversed(e)))
    return key


def _lead(f, key):
    return max(f, key=key)


def _sub(f, g, c, shift):
    out = dict(f)
    for e, a in g.items():
        e2 = tuple(x + y for x, y in zip(e, shift))
        v = out.get(e2, 0) - c * a
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return out


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def reduce_full(f, basis, key):
    """Remainder of ``f`` on division by ``basis`` (every term reduced)."""
    f = dict(f)
    rem = {}
    while f:
        lm = _lead(f, key)
        lc = f[lm]
        for g in basis:
            glm = _lead(g, key)
            if _divides(glm, lm):
                shift = tuple(x - y for x, y in zip(lm, glm))
                f = _sub(f, g, Fraction(lc) / g[glm], shift)
                break
        else:
            rem[lm] = lc
            del f[lm]
    return rem


def spoly(f, g, key):
    a, b = _lead(f, key), _lead(g, key)
    l = tuple(max(x, y) for x, y in zip(a, b))
    sa = tuple(x - y for x, y in zip(l, a))
    sb = tuple(x - y for x, y in zip(l, b))
    out = {}
    for e, c in f.items():
        out[tuple(x + y for x, y in zip(e, sa))] = Fraction(c) / f[a]
    return _sub(out, g, Fraction(1) / g[b], sb)


def buchberger(polys, key):
    """Textbook Buchberger: every pair, no criteria, then inter-reduction."""
    G = [dict(p) for p in polys if p]
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        r = reduce_full(spoly(G[i], G[j], key), G, key)
        if r:
            G.append(r)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimal then reduced
    G = [g for g in G if g]
    minimal = []
    for i, g in enumerate(G):
        lg = _lead(g, key)
        if any(_divides(_lead(h, key), lg) and (_lead(h, key) != lg or j < i) for j, h in enumerate(G) if j != i):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm = _lead(g, key)
        lc = g[lm]
        tail = {e: c for e, c in g.items() if e != lm}
        r = reduce_full(tail, others, key)
        r[lm] = lc
        out.append({e: Fraction(c) / lc for e, c in r.items()})
    return sorted(out, key=lambda g: key(_lead(g, key)))


def as_dicts(polys):
    return [{e: Fraction(int(c.numerator), int(c.denominator)) for e, c in p.items()} for p in polys]


def canonical(gb):
    return sorted(tuple(sorted(g.items())) for g in gb)


def eliminate_first(polys, nvars, k):
    """Generators of the elimination ideal without the first ``k`` variables, via a lex basis."""
    G = buchberger(polys, lex_key)
    return [g for g in G if all(all(a == 0 for a in e[:k]) for e in g)]


def contains(gb, f, key):
    return not reduce_full(f, gb, key)
