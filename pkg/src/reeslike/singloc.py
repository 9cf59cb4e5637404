"""Jacobian matrices, ideals of minors, and singular loci of Rees-like algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .config import MINOR_LIMIT
from .errors import HypothesisError, InputError, InvariantViolation, TooLargeError
from .exactpoly import PolyMatrix, Polynomial, partial_derivative
from .gbengine import Ideal, height, ideal_intersect, radical_membership
from .presentation import ReesLikePresentation, y_names


def jacobian(gens, ring=None) -> PolyMatrix:
    """Rows indexed by the ring variables, columns by ``gens`` in the given order."""
    if isinstance(gens, Ideal):
        ring = gens.ring
        gens = list(gens.gens)
    gens = list(gens)
    ring = ring or gens[0].ring
    rows = [[partial_derivative(g, v) for g in gens] for v in ring.names]
    return PolyMatrix(ring, rows, len(gens), row_labels=list(ring.names), col_labels=[str(g) for g in gens])


def minor_count(nrows: int, ncols: int, t: int) -> int:
    return comb(nrows, t) * comb(ncols, t)


def minors(M: PolyMatrix, t: int, limit: int | None = MINOR_LIMIT) -> list[Polynomial]:
    """All ``t x t`` minors, row subsets outer and column subsets inner, lexicographically.

    Determinants are expanded along the first row with memoized sub-determinants.
    """
    if not 1 <= t <= min(M.nrows, M.ncols):
        raise InputError(f"minor size {t} out of range for a {M.nrows} x {M.ncols} matrix")
    count = minor_count(M.nrows, M.ncols, t)
    if limit is not None and count > limit:
        raise TooLargeError(f"{count} minors of size {t} exceed the limit {limit}")
    ring = M.ring
    memo = {}

    def det(rows, cols):
        if len(rows) == 1:
            return M.rows[rows[0]][cols[0]]
        key = (rows, cols)
        v = memo.get(key)
        if v is not None:
            return v
        r0 = M.rows[rows[0]]
        acc = ring.zero
        for k, c in enumerate(cols):
            a = r0[c]
            if a:
                sub = det(rows[1:], cols[:k] + cols[k + 1:])
                if sub:
                    acc = acc + a * sub if k % 2 == 0 else acc - a * sub
        memo[key] = acc
        return acc

    out = []
    for rows in combinations(range(M.nrows), t):
        for cols in combinations(range(M.ncols), t):
            out.append(det(rows, cols))
    return out


def minors_ideal(M: PolyMatrix, t: int, limit: int | None = MINOR_LIMIT) -> Ideal:
    """Ideal generated by the ``t``-minors; zero and repeated (up to sign) minors are dropped."""
    seen = set()
    gens = []
    for f in minors(M, t, limit):
        if not f:
            continue
        g = f.monic()
        if g in seen:
            continue
        seen.add(g)
        gens.append(f)
    return Ideal(M.ring, gens or [M.ring.zero])


def singular_locus(I: Ideal, mode: str = "general", c=None, limit: int | None = MINOR_LIMIT) -> Ideal:
    """Jacobian ideal of the singular locus of ``V(I)``.

    ``prime-ambient`` returns ``I_c(Jac)``, meant for prime ``I`` of height ``c``;
    ``general`` returns ``I + I_c(Jac)``.
    """
    if mode not in ("prime-ambient", "general"):
        raise InputError(f"unknown mode {mode!r}")
    ring = I.ring
    p = ring.field.characteristic
    if mode == "prime-ambient" and p:
        from .exactpoly import weighted_degree

        bad = [str(g) for g in I.nonzero_gens if weighted_degree(g) % p == 0]
        if bad:
            raise HypothesisError(
                f"characteristic {p} divides the degree of generators {bad}; the Jacobian criterion needs p not dividing the degrees"
            )
    if c is None:
        c = height(I)
    jac = jacobian(I.nonzero_gens, ring)
    J = minors_ideal(jac, c, limit)
    if mode == "general":
        J = I + J
    return J


@dataclass(frozen=True)
class BlockJacobian:
    full: PolyMatrix
    blocks: dict
    syz_cols: int
    gen_cols: int


def block_jacobian(p: ReesLikePresentation) -> BlockJacobian:
    """Jacobian of ``RLP(I)`` with its blocks.

    Rows are ``x``-variables, then ``y``, then ``z``; columns the syzygy
    generators, then the products ``y_i y_j - z f_i f_j``.  The blocks are
    ``A`` (x-rows, syzygy columns), ``d1F`` (y-rows, syzygy columns, equal to
    the syzygy matrix), ``x_gen`` (``-z`` times x-derivatives of ``f_i f_j``),
    ``y_gen`` (y-derivatives of ``y_i y_j``), ``z_syz`` (zero row) and
    ``z_gen`` (the ``-f_i f_j``).
    """
    T = p.ring
    n, m = p.n, p.m
    full = jacobian(p.generators, T)
    s = len(p.syz_gens)
    g = len(p.gen_gens)
    xr = list(range(n))
    yr = list(range(n, n + m))
    zr = [n + m]
    sc = list(range(s))
    gc = list(range(s, s + g))
    blocks = {
        "A": full.submatrix(xr, sc),
        "d1F": full.submatrix(yr, sc),
        "z_syz": full.submatrix(zr, sc),
        "x_gen": full.submatrix(xr, gc),
        "y_gen": full.submatrix(yr, gc),
        "z_gen": full.submatrix(zr, gc),
    }
    bj = BlockJacobian(full, blocks, s, g)
    problems = check_blocks(p, bj)
    if problems:
        raise InvariantViolation("block Jacobian identities fail", {"problems": problems})
    return bj


def check_blocks(p: ReesLikePresentation, bj: BlockJacobian) -> list[str]:
    T = p.ring
    z = p.z
    ys = p.y
    f = [a * s for a, s in zip(p.f_in_T(), p.signs)]
    pairs = [(i, j) for i in range(p.m) for j in range(i, p.m)]
    problems = []
    ynames = set(y_names(p.m))
    yidx = [T.index(v) for v in ynames]
    for e in (e for r in bj.blocks["A"].rows for e in r):
        if any(all(exp[i] == 0 for i in yidx) for exp in e.as_dict()):
            problems.append(f"A entry {e} is not in the ideal of the y variables")
    if bj.syz_cols and not bj.blocks["z_syz"].is_zero():
        problems.append("the z-row of the syzygy columns is not zero")
    if bj.syz_cols and bj.blocks["d1F"] != p.syzygy_matrix.to_ring(T):
        problems.append("y-rows of the syzygy columns differ from the syzygy matrix")
    for k, (i, j) in enumerate(pairs):
        ff = f[i] * f[j]
        for a, v in enumerate(p.base.names):
            if bj.blocks["x_gen"][a, k] != -z * partial_derivative(ff, v):
                problems.append(f"x_gen entry ({v}, {i + 1}{j + 1}) mismatch")
        for a, v in enumerate(y_names(p.m)):
            if bj.blocks["y_gen"][a, k] != partial_derivative(ys[i] * ys[j], v):
                problems.append(f"y_gen entry ({v}, {i + 1}{j + 1}) mismatch")
        if bj.blocks["z_gen"][0, k] != -ff:
            problems.append(f"z_gen entry {i + 1}{j + 1} mismatch")
    return problems


def reassemble(bj: BlockJacobian) -> PolyMatrix:
    from .exactpoly import block

    b = bj.blocks
    if bj.syz_cols == 0:
        from .exactpoly import vstack

        return vstack(b["x_gen"], b["y_gen"], b["z_gen"])
    return block([[b["A"], b["x_gen"]], [b["d1F"], b["y_gen"]], [b["z_syz"], b["z_gen"]]])


def monomial_min_primes(I: Ideal) -> list[Ideal]:
    """Minimal primes of a monomial ideal: the minimal sets of variables meeting every generator."""
    ring = I.ring
    gens = I.nonzero_gens
    if not all(g.is_monomial for g in gens):
        raise InputError("monomial_min_primes needs monomial generators")
    if any(g.is_constant for g in gens):
        return []
    supports = sorted({frozenset(i for i, a in enumerate(g.lm) if a) for g in gens}, key=lambda s: (len(s), sorted(s)))
    covers = set()

    def go(chosen, remaining):
        if not remaining:
            covers.add(frozenset(chosen))
            return
        pick = remaining[0]
        for v in sorted(pick):
            go(chosen | {v}, [s for s in remaining if v not in s])

    go(frozenset(), supports)
    minimal = [c for c in covers if not any(o < c for o in covers)]
    minimal.sort(key=lambda c: (len(c), sorted(c)))
    return [Ideal(ring, [ring.var(ring.names[i]) for i in sorted(c)]) for c in minimal]


def verify_sing_description(p: ReesLikePresentation, min_primes, limit: int | None = MINOR_LIMIT) -> dict:
    """Check that the minimal primes of ``I_m(Jac(RLP(I)))`` are the ``P + (y)`` for ``P`` minimal over ``I``.

    (a) every generator of ``J = I_m(Jac)`` lies in each ``P + (y)``;
    (b) every generator of the intersection of the ``P + (y)`` lies in the radical of ``J``;
    (c) ``ht(J) = m + ht(I)``.
    """
    T = p.ring
    m = p.m
    J = minors_ideal(jacobian(p.generators, T), m, limit)
    ys = p.y
    extended = [Ideal(T, [g.to_ring(T) for g in P.gens] + ys) for P in min_primes]
    report = {"m": m, "minimal_primes": [[str(g) for g in P.gens] for P in extended], "checks": {}}
    bad_a = []
    for P in extended:
        for g in J.nonzero_gens:
            if not P.contains(g):
                bad_a.append({"prime": [str(h) for h in P.gens], "witness": str(g)})
                break
    report["checks"]["minors_in_primes"] = {"ok": not bad_a, "witnesses": bad_a}
    meet = extended[0]
    for P in extended[1:]:
        meet = ideal_intersect(meet, P)
    bad_b = [str(g) for g in meet.nonzero_gens if not radical_membership(g, J)]
    report["checks"]["intersection_in_radical"] = {"ok": not bad_b, "witnesses": bad_b}
    htJ = height(J)
    htI = height(p.base_ideal())
    report["height_minors"] = htJ
    report["height_I"] = htI
    report["checks"]["height"] = {"ok": htJ == m + htI, "expected": m + htI, "computed": htJ}
    report["ok"] = all(c["ok"] for c in report["checks"].values())
    return report
