"""Linkage of ``RLP(I)`` through the complete intersection ``C`` and the canonical-module complex.

With ``C = (y_i^2 - z f_i^2)`` and ``Q = RLP(I)``, the link ``C : Q`` equals
``J = C + (g_even, g_odd)`` where

    g_even = sum over even |S| of  y^{~S} f^S z^{|S|/2}
    g_odd  = sum over odd  |S| of  y^{~S} f^S z^{(|S|-1)/2}

(``S`` ranging over subsets of ``{1..m}``, ``~S`` its complement).  The
canonical module ``(C:Q)/C`` is resolved by the complex ``D`` with
``D_i = T^{2 C(m,i)}`` and ``d_i = [[d_i^y, d_i^f], [z d_i^f, d_i^y]]``, built
from the Koszul differentials on ``y`` and on ``f``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import HypothesisError, InvariantViolation
from .exactpoly import GradedPolyRing, MonomialOrder, PolyMatrix, Polynomial, block, field_rank
from .gbengine import (
    FreeComplex,
    Ideal,
    ModuleGB,
    height,
    hilbert_data,
    ideal_intersect,
    ideal_quotient,
    is_groebner,
)
from .presentation import ReesLikePresentation, build_rees_like, kernel_oracle, y_names
from .singloc import minors_ideal

CONVENTIONS = "g_0^even = 1 and g_0^odd = 0 (empty products); g_1^even = y_1 and g_1^odd = f_1"


# -- C and the g elements -------------------------------------------------------
def complete_intersection_C(p: ReesLikePresentation) -> Ideal:
    z = p.z
    return Ideal(p.ring, [y * y - z * f * f for y, f in zip(p.y, p.f_in_T())])


def g_elements(fs, ys, z, method: str = "direct"):
    """``(g_even, g_odd)`` for the first ``len(fs)`` generators.

    ``direct`` sums over subsets; ``recursive`` applies
    ``g_j^odd = y_j g_{j-1}^odd + f_j g_{j-1}^even`` and
    ``g_j^even = y_j g_{j-1}^even + z f_j g_{j-1}^odd`` from ``g_0 = (1, 0)``.
    """
    fs, ys = list(fs), list(ys)
    j = len(fs)
    if j < 1 or len(ys) != j:
        raise ValueError("need j >= 1 generators and as many y variables")
    ring = z.ring
    if method == "recursive":
        ge, go = ring.one, ring.zero
        for f, y in zip(fs, ys):
            ge, go = y * ge + z * f * go, y * go + f * ge
        return ge, go
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    ge, go = ring.zero, ring.zero
    zpow = [ring.one]
    for _ in range(j):
        zpow.append(zpow[-1] * z)
    for size in range(j + 1):
        for S in combinations(range(j), size):
            term = zpow[size // 2]
            for k in range(j):
                term = term * (fs[k] if k in S else ys[k])
            if size % 2 == 0:
                ge = ge + term
            else:
                go = go + term
    return ge, go


def g_for(p: ReesLikePresentation, method: str = "direct"):
    return g_elements(p.f_in_T(), p.y, p.z, method)


def identity_residuals(j: int) -> list[Polynomial]:
    """Differences of the four recursion identities with generic indeterminates ``F1..Fj``."""
    names = y_names(j) + ["z"] + [f"F{i}" for i in range(1, j + 1)]
    R = GradedPolyRing(names)
    ys = [R.var(f"y{i}") for i in range(1, j + 1)]
    fs = [R.var(f"F{i}") for i in range(1, j + 1)]
    z = R.var("z")
    ge, go = g_elements(fs, ys, z)
    pe, po = g_elements(fs[:-1], ys[:-1], z) if j > 1 else (R.one, R.zero)
    y, f = ys[-1], fs[-1]
    q = y * y - z * f * f
    return [
        go - (y * po + f * pe),
        ge - (y * pe + z * f * po),
        y * ge - (z * f * go + q * pe),
        f * ge - (y * go - q * po),
    ]


# -- hypotheses -----------------------------------------------------------------
def require_link_hypotheses(p: ReesLikePresentation):
    if p.ring.field.characteristic == 2:
        raise HypothesisError("linkage of Rees-like primes needs characteristic different from 2")
    h = height(p.base_ideal())
    if h < 2:
        raise HypothesisError(f"linkage of Rees-like primes needs ht(I) >= 2, got {h}")


@dataclass(frozen=True)
class LinkData:
    C: Ideal
    Q: Ideal
    J: Ideal
    g_even: Polynomial
    g_odd: Polynomial
    signs: tuple
    colon: Ideal
    equal: bool


def link(p: ReesLikePresentation) -> LinkData:
    """Build ``J = C + (g_even, g_odd)`` and compare it with an independently computed ``C : Q``."""
    require_link_hypotheses(p)
    C = complete_intersection_C(p)
    Q = p.ideal
    ge, go = g_for(p)
    J = C + [ge, go]
    L = ideal_quotient(C, Q)
    eq = L.equals(J)
    data = LinkData(C, Q, J, ge, go, p.signs, L, eq)
    if not eq:
        raise InvariantViolation(
            "C : Q differs from C + (g_even, g_odd)",
            {"J": [str(g) for g in J.gens], "colon": [str(g) for g in L.groebner()]},
        )
    return data


def mixed_sign_membership(p: ReesLikePresentation) -> dict:
    """``g_even, g_odd`` lie in every mixed-sign kernel; ``g_even`` is not in ``RLP(f)`` itself."""
    m = p.m
    ge, go = g_for(p)
    out = {"mixed": [], "g_even_in_plain": p.ideal.contains(ge)}
    for signs in product((1, -1), repeat=m):
        if len(set(signs)) == 1:
            continue
        K = kernel_oracle(list(p.f), signs)
        out["mixed"].append({"signs": list(signs), "g_even": K.contains(ge), "g_odd": K.contains(go)})
    out["ok"] = all(r["g_even"] and r["g_odd"] for r in out["mixed"]) and not out["g_even_in_plain"]
    return out


def primary_decomposition_C_check(p: ReesLikePresentation) -> dict:
    """``C`` is the intersection of the ``2^(m-1)`` sign-variant kernels, and ``e(T/C) = 2^m prod(d_i+1)``."""
    m = p.m
    if m > 3:
        raise HypothesisError("the sign-variant intersection check is limited to m <= 3")
    C = complete_intersection_C(p)
    meet = None
    patterns = [(1,) + s for s in product((1, -1), repeat=m - 1)]
    for signs in patterns:
        K = kernel_oracle(list(p.f), signs)
        meet = K if meet is None else ideal_intersect(meet, K)
    expected = 2 ** m
    for d in p.degrees:
        expected *= d + 1
    e = hilbert_data(C).multiplicity
    eq = meet.equals(C)
    return {
        "sign_patterns": [list(s) for s in patterns],
        "intersection_equals_C": eq,
        "multiplicity": e,
        "expected_multiplicity": expected,
        "ok": eq and e == expected,
    }


def ses_checks(p: ReesLikePresentation) -> dict:
    """``Q = C : g_odd`` and ``IT + (y) = (C + (g_odd)) : g_even``."""
    require_link_hypotheses(p)
    C = complete_intersection_C(p)
    ge, go = g_for(p)
    Q = p.ideal
    first = ideal_quotient(C, go).equals(Q)
    IT = Ideal(p.ring, p.f_in_T() + p.y)
    second = ideal_quotient(C + [go], ge).equals(IT)
    return {"Q_equals_C_colon_g_odd": first, "IT_plus_y_equals_colon": second, "ok": first and second}


def yzx_lex_order(p: ReesLikePresentation) -> MonomialOrder:
    """Lex with ``y_1 > ... > y_m > z > x_1 > ... > x_n``."""
    return MonomialOrder("lex", tuple(y_names(p.m)) + ("z",) + tuple(p.base.names))


def init_ideal_check(p: ReesLikePresentation) -> dict:
    """Initial ideal of ``J`` under :func:`yzx_lex_order` against its closed form."""
    T = p.ring
    order = yzx_lex_order(p)
    C = complete_intersection_C(p)
    ge, go = g_for(p)
    gens = list(C.gens) + [ge, go]
    J = Ideal(T, gens)
    computed = Ideal(T, [T.monomial(e) for e in J.leading_monomials(order)])
    report = {"order": str(order), "computed": sorted(str(g) for g in computed.gens)}
    if p.m == 1:
        report.update(closed_form=None, match=None, listed_generators_form_gb=is_groebner(gens, T, order),
                      note="m = 1 is checked against the direct Groebner basis only")
        report["ok"] = True
        return report
    key = T.order_key(order)
    fm = p.f_in_T()[-1]
    in_fm = T.monomial(max(fm.as_dict(), key=key))
    ys = p.y
    prod_all = T.one
    for y in ys:
        prod_all = prod_all * y
    prod_but_last = T.one
    for y in ys[:-1]:
        prod_but_last = prod_but_last * y
    closed = Ideal(T, [y * y for y in ys] + [prod_all, prod_but_last * in_fm])
    match = closed.equals(computed)
    is_gb = is_groebner(gens, T, order)
    report.update(closed_form=[str(g) for g in closed.gens], match=match, listed_generators_form_gb=is_gb)
    report["ok"] = match and is_gb
    return report


# -- complexes ------------------------------------------------------------------
def koszul(elements, shifts=None) -> FreeComplex:
    """Koszul complex; ``K_i`` has the ``i``-subsets in lexicographic order as basis and
    ``d(e_S) = sum_k (-1)^(pos(k, S) + 1) a_k e_{S - k}`` with 1-based positions."""
    els = list(elements)
    m = len(els)
    ring = els[0].ring
    from .exactpoly import weighted_degree

    degs = []
    for a in els:
        d = weighted_degree(a)
        degs.append(d if isinstance(d, int) else 0)
    subsets = [list(combinations(range(m), i)) for i in range(m + 1)]
    diffs = []
    for i in range(1, m + 1):
        rows = {S: r for r, S in enumerate(subsets[i - 1])}
        mat = [[ring.zero] * len(subsets[i]) for _ in subsets[i - 1]]
        for c, S in enumerate(subsets[i]):
            for pos, k in enumerate(S):
                rest = S[:pos] + S[pos + 1:]
                mat[rows[rest]][c] = els[k] if pos % 2 == 0 else -els[k]
        diffs.append(PolyMatrix(ring, mat, len(subsets[i])))
    shifts = [[sum(degs[k] for k in S) for S in subsets[i]] for i in range(m + 1)]
    return FreeComplex(ring, [len(s) for s in subsets], shifts, diffs)


def d_complex(fs, ys, z) -> FreeComplex:
    """The complex ``D`` with ``d_i = [[d_i^y, d_i^f], [z d_i^f, d_i^y]]``."""
    Ky = koszul(ys)
    Kf = koszul(fs)
    m = len(ys)
    diffs = []
    for i in range(1, m + 1):
        dy, df = Ky.d(i), Kf.d(i)
        diffs.append(block([[dy, df], [df.scale(z), dy]]))
    ranks = [2 * comb(m, i) for i in range(m + 1)]
    cx = FreeComplex(z.ring, ranks, _d_shifts(diffs, fs, ys), diffs)
    bad = cx.composition_failures()
    if bad:
        raise InvariantViolation("D is not a complex", {"failing_indices": bad})
    return cx


def _d_shifts(diffs, fs, ys):
    """Shifts making each differential homogeneous.

    ``D_0 = T^2`` gets ``(0, deg f_1 - deg y_1)``; later shifts are read off the columns.
    """
    from .exactpoly import weighted_degree
    from .gbengine.modules import vector_degree

    shifts = [[0, weighted_degree(fs[0]) - weighted_degree(ys[0])]]
    for d in diffs:
        shifts.append([vector_degree(col, shifts[-1]) for col in d.columns()])
    return shifts


def d_complex_for(p: ReesLikePresentation) -> FreeComplex:
    return d_complex(p.f_in_T(), p.y, p.z)


# -- signed permutation matching ------------------------------------------------
def match_columns(A: PolyMatrix, B: PolyMatrix):
    """``(perm, signs)`` with ``A[:, c] == signs[c] * B[:, perm[c]]`` for a bijection, or ``None``."""
    if A.shape != B.shape:
        return None
    acols = A.columns()
    bcols = B.columns()
    cands = []
    for a in acols:
        opts = []
        neg = [-x for x in a]
        for k, b in enumerate(bcols):
            if b == a:
                opts.append((k, 1))
            if b == neg and any(a):
                opts.append((k, -1))
            elif not any(a) and not any(b) and (k, 1) not in opts:
                opts.append((k, 1))
        if not opts:
            return None
        cands.append(opts)
    order = sorted(range(len(acols)), key=lambda c: len(cands[c]))
    used = set()
    perm = [None] * len(acols)
    signs = [None] * len(acols)

    def go(idx):
        if idx == len(order):
            return True
        c = order[idx]
        for k, s in cands[c]:
            if k in used:
                continue
            used.add(k)
            perm[c], signs[c] = k, s
            if go(idx + 1):
                return True
            used.discard(k)
        return False

    return (perm, signs) if go(0) else None


def signed_permutation_equivalent(A: PolyMatrix, B: PolyMatrix):
    """Find signed permutation matrices ``P, R`` with ``A = P B R``.

    Returns ``(row_perm, row_signs, col_perm, col_signs)`` meaning
    ``A[i][j] = row_signs[i] * col_signs[j] * B[row_perm[i]][col_perm[j]]``, or ``None``.
    """
    if A.shape != B.shape:
        return None

    def profile(row):
        return sorted(str(e.monic()) if e else "0" for e in row)

    bprof = [profile(r) for r in B.rows]
    cands = []
    for r in A.rows:
        pr = profile(r)
        opts = [k for k, q in enumerate(bprof) if q == pr]
        if not opts:
            return None
        cands.append(opts)
    nrows = A.nrows
    used = set()
    perm = [None] * nrows
    found = []

    def try_perm():
        Bp = [B.rows[perm[i]] for i in range(nrows)]
        for signs in product((1, -1), repeat=nrows - 1):
            signs = (1,) + signs
            rows = [[e if s == 1 else -e for e in r] for r, s in zip(Bp, signs)]
            M = PolyMatrix(B.ring, rows, B.ncols)
            cm = match_columns(A, M)
            if cm is not None:
                found.append((list(perm), list(signs), cm[0], cm[1]))
                return True
        return False

    def go(i):
        if i == nrows:
            return try_perm()
        for k in cands[i]:
            if k in used:
                continue
            used.add(k)
            perm[i] = k
            if go(i + 1):
                return True
            used.discard(k)
        return False

    return found[0] if go(0) else None


# -- canonical module checks ----------------------------------------------------
def self_duality_certificate(cx: FreeComplex):
    """Signed permutation isomorphisms ``phi_j : D_j -> D*_j`` commuting with the differentials.

    ``D*_j = Hom(D_{L-j}, T)`` with ``d*_j = d_{L-j+1}^T``; ``phi_0`` is tried over all
    signed permutations and the others are forced by ``d*_j phi_j = phi_{j-1} d_j``.
    Returns a list of ``(perm, signs)`` or ``None``.
    """
    dual = cx.dual()
    r0 = cx.ranks[0]
    ring = cx.ring
    from itertools import permutations

    for perm in permutations(range(r0)):
        for signs in product((1, -1), repeat=r0):
            phis = [(list(perm), list(signs))]
            ok = True
            for j in range(1, cx.length + 1):
                pperm, psigns = phis[-1]
                # (phi_{j-1} d_j): row perm[i] of the image gets sign * row i
                d = cx.d(j)
                rows = [None] * d.nrows
                for i in range(d.nrows):
                    rows[pperm[i]] = [e if psigns[i] == 1 else -e for e in d.rows[i]]
                A = PolyMatrix(ring, rows, d.ncols)
                cm = match_columns(A, dual.d(j))
                if cm is None:
                    ok = False
                    break
                # phi_j sends basis c to signs[c] * e_{perm[c]}
                phis.append((cm[0], cm[1]))
            if ok:
                return phis
    return None


def _random_point(ring, seed):
    rng = random.Random(seed)
    return {v: rng.randint(-50, 50) or 1 for v in ring.names}


def canonical_module_checks(p: ReesLikePresentation, seed: int = 20261015) -> dict:
    require_link_hypotheses(p)
    m = p.m
    T = p.ring
    C = complete_intersection_C(p)
    ge, go = g_for(p)
    fm, ym, z = p.f_in_T()[-1], p.y[-1], p.z
    report = {"conventions": CONVENTIONS}
    a1 = ym * ge + z * fm * (-go)
    a2 = fm * ge + ym * (-go)
    report["augmentation"] = {"y_m identity in C": C.contains(a1), "f_m identity in C": C.contains(a2)}
    report["augmentation"]["ok"] = all(report["augmentation"].values())

    cx = d_complex_for(p)
    M = cx.d(1)
    mgb = ModuleGB(M)
    failures = []
    for q in p.generators:
        for k in range(2):
            vec = [q if i == k else T.zero for i in range(2)]
            if not mgb.contains(vec):
                failures.append({"generator": str(q), "basis": k + 1})
    report["annihilator"] = {"ok": not failures, "witnesses": failures}

    dual = cx.dual()
    sd = {
        "dual_is_complex": dual.is_complex(),
        "rank_sequences_match": list(dual.ranks) == list(cx.ranks),
        "d_squared_zero": cx.is_complex(),
    }
    if m <= 3:
        cert = self_duality_certificate(cx)
        sd["certificate"] = None if cert is None else [{"perm": c[0], "signs": c[1]} for c in cert]
        sd["ok"] = all(v for k, v in sd.items() if k != "certificate") and cert is not None
    else:
        sd["certificate"] = "skipped for m > 3"
        sd["ok"] = all(v for k, v in sd.items() if k != "certificate")
    report["self_duality"] = sd

    point = _random_point(T, seed)
    ranks = [cx.d(i).rank_at(point) for i in range(1, m + 1)] + [0]
    rank_ok = all(ranks[i - 1] + ranks[i] == 2 * comb(m, i) for i in range(1, m + 1))
    ex = {"point_seed": seed, "generic_ranks": ranks[:-1], "ranks_add_up": rank_ok}
    if m <= 2:
        hts = []
        for i in range(1, m + 1):
            h = height(minors_ideal(cx.d(i), ranks[i - 1]))
            hts.append(h)
        ex["minor_heights"] = hts
        ex["heights_ok"] = all(h >= i for i, h in enumerate(hts, start=1))
        ex["ok"] = rank_ok and ex["heights_ok"]
    else:
        ex["ok"] = rank_ok
    report["exactness"] = ex
    report["ok"] = all(report[k]["ok"] for k in ("augmentation", "annihilator", "self_duality", "exactness"))
    return report
