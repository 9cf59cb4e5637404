"""Graded free complexes and minimal free resolutions."""

from __future__ import annotations

from collections import Counter

from ..errors import InputError
from ..exactpoly import PolyMatrix, Polynomial
from .ideal import Ideal
from .modules import minimal_generators, syzygies, vector_degree


class FreeComplex:
    """``F_0 <- F_1 <- ... <- F_L`` of graded free modules.

    ``ranks[i]`` is the rank of ``F_i``, ``shifts[i]`` the weighted degrees of
    its basis, and ``diffs[i - 1]`` the matrix of ``d_i : F_i -> F_{i-1}``
    (``ranks[i-1]`` rows, ``ranks[i]`` columns).
    """

    def __init__(self, ring, ranks, shifts, diffs):
        self.ring = ring
        self.ranks = tuple(ranks)
        self.shifts = tuple(tuple(s) for s in shifts)
        self.diffs = tuple(diffs)
        if len(self.diffs) != len(self.ranks) - 1:
            raise ValueError("need one differential between consecutive modules")
        for i, d in enumerate(self.diffs, start=1):
            if d.shape != (self.ranks[i - 1], self.ranks[i]):
                raise ValueError(f"d_{i} has shape {d.shape}, expected {(self.ranks[i - 1], self.ranks[i])}")
        for i, s in enumerate(self.shifts):
            if len(s) != self.ranks[i]:
                raise ValueError(f"F_{i} has {self.ranks[i]} basis vectors but {len(s)} shifts")

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def d(self, i: int) -> PolyMatrix:
        return self.diffs[i - 1]

    def composition_failures(self) -> list[int]:
        """Indices ``i`` with ``d_{i-1} d_i != 0``."""
        bad = []
        for i in range(2, self.length + 1):
            if not (self.d(i - 1) @ self.d(i)).is_zero():
                bad.append(i)
        return bad

    def is_complex(self) -> bool:
        return not self.composition_failures()

    def is_minimal(self) -> bool:
        return not any(e and e.is_constant for d in self.diffs for r in d.rows for e in r)

    def is_homogeneous(self) -> bool:
        for i, d in enumerate(self.diffs, start=1):
            for j, col in enumerate(d.columns()):
                deg = vector_degree(col, self.shifts[i - 1])
                if deg is not None and deg != self.shifts[i][j]:
                    return False
        return True

    def betti(self) -> dict:
        """Graded Betti numbers ``{(i, degree): count}``."""
        out = Counter()
        for i, s in enumerate(self.shifts):
            for d in s:
                out[(i, d)] += 1
        return dict(sorted(out.items()))

    def betti_table(self) -> dict:
        """Betti numbers keyed ``{row: {column: count}}`` with row = degree - index."""
        table = {}
        for (i, d), n in self.betti().items():
            table.setdefault(d - i, {})[i] = n
        return dict(sorted(table.items()))

    def projective_dimension(self) -> int:
        return max((i for i, r in enumerate(self.ranks) if r), default=0)

    def regularity(self) -> int:
        return max(d - i for (i, d) in self.betti())

    def dual(self) -> "FreeComplex":
        """``Hom(F, R)`` reindexed so ``F*_j = F_{L-j}``, with ``d*_j = d_{L-j+1}^T``."""
        L = self.length
        ranks = list(reversed(self.ranks))
        shifts = [[-d for d in s] for s in reversed(self.shifts)]
        diffs = [self.d(L - j + 1).transpose() for j in range(1, L + 1)]
        return FreeComplex(self.ring, ranks, shifts, diffs)

    def to_json(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "shifts": [list(s) for s in self.shifts],
            "differentials": [d.to_strings() for d in self.diffs],
        }

    def __repr__(self):
        return f"FreeComplex(ranks={list(self.ranks)})"


def free_resolution(obj, shifts=None, max_length: int | None = None) -> FreeComplex:
    """Minimal graded free resolution of ``R/I`` (for an Ideal) or ``coker(M)``.

    Each step takes a minimal generating set of the syzygies of the previous
    differential's columns.
    """
    if isinstance(obj, Ideal):
        ring = obj.ring
        if not obj.is_homogeneous():
            raise InputError("free resolutions need homogeneous input")
        gens = minimal_generators(obj.nonzero_gens)
        if any(g.is_constant for g in gens):
            # R/(1) = 0 has the zero resolution
            return FreeComplex(ring, [0], [[]], [])
        cols = [[g] for g in gens]
        shifts0 = [0]
    elif isinstance(obj, PolyMatrix):
        ring = obj.ring
        shifts0 = list(shifts) if shifts is not None else [0] * obj.nrows
        cols = [c for c in obj.columns() if any(c)]
        for c in cols:
            if vector_degree(c, shifts0) == "inhomogeneous":
                raise InputError("free resolutions need homogeneous input")
        cols = minimal_generators(cols, shifts0)
    else:
        raise TypeError("expected an Ideal or a PolyMatrix")
    ranks = [len(shifts0)]
    all_shifts = [shifts0]
    diffs = []
    prev_shifts = shifts0
    while cols:
        degs = [vector_degree(c, prev_shifts) for c in cols]
        m = PolyMatrix(ring, [[c[i] for c in cols] for i in range(len(prev_shifts))], len(cols))
        diffs.append(m)
        ranks.append(len(cols))
        all_shifts.append(degs)
        if max_length is not None and len(diffs) >= max_length:
            break
        syz = syzygies(cols, prev_shifts)
        prev_shifts = degs
        cols = syz.columns()
    return FreeComplex(ring, ranks, all_shifts, diffs)


def minimalize(cx: FreeComplex) -> FreeComplex:
    """Split off trivial summands ``R(-a) -> R(-a)`` until no differential has a constant entry."""
    ring = cx.ring
    field = ring.field
    mats = [[list(r) for r in d.rows] for d in cx.diffs]
    shifts = [list(s) for s in cx.shifts]
    changed = True
    while changed:
        changed = False
        for i in range(1, len(shifts)):
            d = mats[i - 1]
            pivot = None
            for r, row in enumerate(d):
                for c, e in enumerate(row):
                    if e and e.is_constant:
                        pivot = (r, c)
                        break
                if pivot:
                    break
            if pivot is None:
                continue
            r, c = pivot
            uinv = field.inv(d[r][c].constant_value())
            # Clear row r and column c of d_i by basis changes of F_i and F_{i-1}.
            # Only row c of d_{i+1} and column r of d_{i-1} see those changes, and
            # both vanish afterwards because the differentials compose to zero.
            for c2 in range(len(d[0])):
                if c2 != c and d[r][c2]:
                    a = d[r][c2] * uinv
                    for k in range(len(d)):
                        d[k][c2] = d[k][c2] - a * d[k][c]
            for r2 in range(len(d)):
                if r2 != r and d[r2][c]:
                    b = d[r2][c] * uinv
                    d[r2] = [x - b * y for x, y in zip(d[r2], d[r])]
            del d[r]
            for row in d:
                del row[c]
            if i < len(mats):
                del mats[i][c]
            if i >= 2:
                for row in mats[i - 2]:
                    del row[r]
            del shifts[i][c]
            del shifts[i - 1][r]
            changed = True
    while len(shifts) > 1 and not shifts[-1]:
        shifts.pop()
        mats.pop()
    diffs = [PolyMatrix(ring, m, len(shifts[i + 1])) for i, m in enumerate(mats)]
    return FreeComplex(ring, [len(s) for s in shifts], shifts, diffs)


def resolution_invariants(cx: FreeComplex, arity: int) -> dict:
    pd = cx.projective_dimension()
    return {"pd": pd, "reg": cx.regularity(), "depth": arity - pd}
