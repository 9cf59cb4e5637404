"""Hilbert series data of graded quotients ``R/I`` in weighted gradings.

Polynomials in ``t`` are integer coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ideal import Ideal
from .resolution import FreeComplex, free_resolution


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def shift_up(a, k):
    return [0] * k + list(a) if a else []


def divide_by_one_minus_t(p):
    """``(q, r)`` with ``p = (1 - t) q + r`` and ``r`` constant."""
    # p(t) = sum p_i t^i; q_i = sum_{j <= i} p_j, r = p(1)
    if not p:
        return [], 0
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q), acc + p[-1]


def order_at_one(p):
    """``(k, q)`` with ``p = (1 - t)^k q`` and ``q(1) != 0``."""
    k = 0
    p = _trim(p)
    if not p:
        raise ValueError("zero polynomial")
    while True:
        q, r = divide_by_one_minus_t(p)
        if r != 0:
            return k, p
        p = q
        k += 1


@dataclass(frozen=True)
class HilbertData:
    """``HS(R/I; t) = numerator(t) / prod(1 - t^w for w in weights)``.

    ``multiplicity`` is ``q(1)`` where ``numerator = (1 - t)^codim * q``; it
    equals ``prod(weights)`` times ``normalized_limit``, the limit of
    ``(1 - t)^dimension * HS`` at ``t = 1``.
    """

    numerator: tuple
    weights: tuple
    dimension: int
    codimension: int
    multiplicity: int
    normalized_limit: Fraction

    def numerator_text(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                if not mono:
                    terms.append(str(c))
                elif c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def numerator_from_complex(cx: FreeComplex):
    """Alternating sum of ``t^shift`` over a graded free resolution."""
    top = max((d for s in cx.shifts for d in s), default=0)
    num = [0] * (top + 1)
    for i, s in enumerate(cx.shifts):
        for d in s:
            num[d] += (-1) ** i
    return _trim(num)


def hilbert_from_numerator(numerator, weights) -> HilbertData:
    weights = tuple(weights)
    n = len(weights)
    num = _trim(numerator)
    if not num:
        return HilbertData((), weights, -1, n + 1, 0, Fraction(0))
    k, q = order_at_one(num)
    mult = sum(q)
    prod = 1
    for w in weights:
        prod *= w
    return HilbertData(tuple(num), weights, n - k, k, mult, Fraction(mult, prod))


def hilbert_data(I: Ideal) -> HilbertData:
    """Hilbert data of ``R/I`` from its minimal free resolution."""
    cx = free_resolution(I)
    return hilbert_from_numerator(numerator_from_complex(cx), I.ring.weights)


def monomial_numerator(monomials, weights):
    """Numerator of ``R/(monomials)`` by the colon recursion.

    ``N(M + (m)) = N(M) - t^deg(m) N(M : m)``, an independent route to the
    numerator for initial ideals.
    """
    gens = _minimal(list(monomials))
    return _num(tuple(sorted(gens)), tuple(weights), {})


def _minimal(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for e in gens:
        if not any(all(a <= b for a, b in zip(g, e)) for g in out):
            out.append(e)
    return out


def _num(gens, weights, memo):
    if gens in memo:
        return memo[gens]
    if not gens:
        res = [1]
    elif all(sum(1 for a in g if a) == 1 for g in gens):
        # pure powers of distinct variables: a complete intersection
        res = [1]
        for g in gens:
            d = sum(a * w for a, w in zip(g, weights))
            res = poly_sub(res, shift_up(res, d))
    else:
        last = gens[-1]
        rest = gens[:-1]
        colon = tuple(sorted(_minimal([tuple(max(a - b, 0) for a, b in zip(g, last)) for g in rest])))
        d = sum(a * w for a, w in zip(last, weights))
        res = poly_sub(_num(rest, weights, memo), shift_up(_num(colon, weights, memo), d))
    memo[gens] = res
    return res


def hilbert_data_from_initial(I: Ideal) -> HilbertData:
    """Hilbert data of ``R/I`` through ``R/in(I)`` and :func:`monomial_numerator`."""
    if I.is_zero():
        return hilbert_from_numerator([1], I.ring.weights)
    lms = I.leading_monomials()
    return hilbert_from_numerator(monomial_numerator(lms, I.ring.weights), I.ring.weights)
