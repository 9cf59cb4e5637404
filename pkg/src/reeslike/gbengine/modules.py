"""Submodules of free modules: syzygies, membership, minimal generators.

A vector of ``R^r`` is a list of ``r`` Polynomials.  Weighted degrees of the
basis vectors of ``R^r`` are given as ``shifts`` (all 0 by default), so a
vector ``v`` is homogeneous of degree ``D`` when ``v[k]`` has degree
``D - shifts[k]`` for every nonzero entry.
"""

from __future__ import annotations

from ..exactpoly import INHOMOGENEOUS, PolyMatrix, Polynomial, weighted_degree
from .buchberger import GBEngine


def vector_to_dict(vec, offset: int = 0) -> dict:
    out = {}
    for k, f in enumerate(vec):
        for e, c in f.items():
            out[(k + offset, e)] = c
    return out


def dict_to_vector(ring, d: dict, rank: int, offset: int = 0) -> list[Polynomial]:
    parts = [{} for _ in range(rank)]
    for (k, e), c in d.items():
        parts[k - offset][e] = c
    return [Polynomial._make(ring, p) for p in parts]


def vector_degree(vec, shifts=None):
    """Weighted degree of a homogeneous vector; ``None`` for 0, ``INHOMOGENEOUS`` if mixed."""
    shifts = shifts or [0] * len(vec)
    degs = set()
    for f, s in zip(vec, shifts):
        if f:
            d = weighted_degree(f)
            if d == INHOMOGENEOUS:
                return INHOMOGENEOUS
            degs.add(d + s)
    if not degs:
        return None
    if len(degs) > 1:
        return INHOMOGENEOUS
    return degs.pop()


def _as_vectors(gens):
    out = []
    for g in gens:
        out.append([g] if isinstance(g, Polynomial) else list(g))
    return out


def syzygy_vectors(gens, shifts=None, order=None):
    """Generators (a module Groebner basis) of the syzygies of ``gens``.

    ``gens`` are Polynomials or vectors of a common rank; the returned vectors
    have one entry per generator.
    """
    vecs = _as_vectors(gens)
    if not vecs:
        return []
    ring = vecs[0][0].ring
    r = len(vecs[0])
    k = len(vecs)
    shifts = list(shifts) if shifts is not None else [0] * r
    degs = []
    for v in vecs:
        d = vector_degree(v, shifts)
        degs.append(0 if d in (None, INHOMOGENEOUS) else d)
    eng = GBEngine(ring, order, rank=r + k, shifts=shifts + degs)
    for j, v in enumerate(vecs):
        d = vector_to_dict(v)
        d[(r + j, (0,) * ring.nvars)] = ring.field.one
        eng.add(d)
    eng.run()
    out = []
    for terms in eng.reduced_basis():
        if terms[0][0] >= r:
            out.append(dict_to_vector(ring, {(a, e): c for a, e, c in terms}, k, r))
    return out


def syzygies(gens, shifts=None, minimal: bool = True) -> PolyMatrix:
    """Matrix whose columns generate the syzygy module of ``gens``.

    For homogeneous input the columns are pruned to a minimal generating set.
    """
    vecs = _as_vectors(gens)
    if not vecs:
        raise ValueError("no generators")
    ring = vecs[0][0].ring
    k = len(vecs)
    cols = syzygy_vectors(vecs, shifts)
    if minimal and cols:
        r = len(vecs[0])
        sh = list(shifts) if shifts is not None else [0] * r
        degs = [vector_degree(v, sh) for v in vecs]
        if all(isinstance(d, int) for d in degs):
            cols = minimal_generators(cols, degs)
    rows = [[c[i] for c in cols] for i in range(k)]
    return PolyMatrix(ring, rows, len(cols))


def minimal_generators(gens, shifts=None) -> list:
    """A minimal generating subset of a homogeneous submodule (or ideal).

    Generators are scanned by increasing degree; one is kept when it is not in
    the span of those kept before, tested against a Groebner basis completed
    through its degree.  Returns items in the form given (Polynomial or vector).
    """
    items = list(gens)
    if not items:
        return []
    scalar = isinstance(items[0], Polynomial)
    vecs = _as_vectors(items)
    ring = vecs[0][0].ring
    r = len(vecs[0])
    shifts = list(shifts) if shifts is not None else [0] * r
    tagged = []
    for idx, v in enumerate(vecs):
        d = vector_degree(v, shifts)
        if d is None:
            continue
        if d == INHOMOGENEOUS:
            raise ValueError("minimal generators need homogeneous input")
        tagged.append((d, idx, v))
    tagged.sort(key=lambda t: (t[0], t[1]))
    eng = GBEngine(ring, rank=r, shifts=shifts)
    keep = []
    for d, idx, v in tagged:
        eng.run(d)
        vd = vector_to_dict(v)
        if eng.normal_form(vd):
            eng.add(vd)
            keep.append(idx)
    return [items[i] for i in keep]


class ModuleGB:
    """Groebner basis of the column span of a matrix, for membership tests."""

    def __init__(self, matrix: PolyMatrix, shifts=None, order=None):
        self.ring = matrix.ring
        self.rank = matrix.nrows
        self.eng = GBEngine(self.ring, order, rank=self.rank, shifts=shifts)
        for col in matrix.columns():
            d = vector_to_dict(col)
            if d:
                self.eng.add(d)
        self.eng.run()
        self.basis = self.eng.reduced_basis()
        from .buchberger import reducer

        self._red = reducer(self.ring, order, [{(a, e): c for a, e, c in t} for t in self.basis], rank=self.rank)

    def normal_form(self, vec) -> list[Polynomial]:
        return dict_to_vector(self.ring, self._red.normal_form(vector_to_dict(vec)), self.rank)

    def contains(self, vec) -> bool:
        return not self._red.normal_form(vector_to_dict(vec))


def module_membership(vec, matrix: PolyMatrix) -> bool:
    """Whether ``vec`` lies in the column span of ``matrix``."""
    return ModuleGB(matrix).contains(vec)
