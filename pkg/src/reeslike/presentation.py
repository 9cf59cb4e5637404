"""Rees-like presentations ``RLP(I)`` of ``S[It, t^2]`` and their invariants.

For ``I = (f_1, ..., f_m)`` in ``S``, the ambient ring is
``T = S[y_1, ..., y_m, z]`` with ``deg y_i = deg f_i + 1`` and ``deg z = 2``.
The kernel of ``y_i -> f_i t, z -> t^2`` is generated by the contracted
syzygies ``sum_i c_i y_i`` and the products ``y_i y_j - z f_i f_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError, InputError, InvariantViolation
from .exactpoly import INHOMOGENEOUS, GradedPolyRing, PolyMatrix, Polynomial, substitute, weighted_degree
from .gbengine import Ideal, dimension, eliminate, fresh_name, free_resolution, height, hilbert_data, syzygies


def y_names(m: int) -> list[str]:
    return [f"y{i}" for i in range(1, m + 1)]


def ambient_ring(S: GradedPolyRing, degrees) -> GradedPolyRing:
    ys = y_names(len(degrees))
    clash = [v for v in ys + ["z"] if v in S]
    if clash:
        raise InputError(f"base ring variables {clash} collide with the reserved names y1..ym, z")
    return S.extend(ys + ["z"], [d + 1 for d in degrees] + [2])


def normalize_sign(col):
    """Negate a syzygy column unless its last nonzero entry has positive leading coefficient."""
    for f in reversed(col):
        if f:
            if f.ring.field.is_rational and f.lc < 0:
                return [-g for g in col]
            return list(col)
    return list(col)


@dataclass(frozen=True)
class ReesLikePresentation:
    base: GradedPolyRing
    f: tuple
    degrees: tuple
    ring: GradedPolyRing
    syz_gens: tuple
    gen_gens: tuple
    signs: tuple
    syzygy_matrix: PolyMatrix = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.f)

    @property
    def n(self) -> int:
        return self.base.nvars

    @property
    def generators(self) -> list[Polynomial]:
        return list(self.syz_gens) + list(self.gen_gens)

    @property
    def ideal(self) -> Ideal:
        return _ideal_of(self)

    @property
    def y(self) -> list[Polynomial]:
        return [self.ring.var(v) for v in y_names(self.m)]

    @property
    def z(self) -> Polynomial:
        return self.ring.var("z")

    def f_in_T(self) -> list[Polynomial]:
        return [f.to_ring(self.ring) for f in self.f]

    def base_ideal(self) -> Ideal:
        return Ideal(self.base, self.f)

    def to_json(self) -> dict:
        return {
            "base_ring": str(self.base),
            "ring": str(self.ring),
            "f": [str(g) for g in self.f],
            "degrees": list(self.degrees),
            "signs": list(self.signs),
            "syz_gens": [str(g) for g in self.syz_gens],
            "gen_gens": [str(g) for g in self.gen_gens],
        }


_IDEALS = {}


def _ideal_of(p: ReesLikePresentation) -> Ideal:
    # presentations are frozen, so the ideal (and its Groebner cache) is shared
    key = id(p)
    entry = _IDEALS.get(key)
    if entry is None or entry[0] is not p:
        entry = (p, Ideal(p.ring, p.generators))
        _IDEALS[key] = entry
    return entry[1]


def _check_inputs(fs, signs):
    fs = [f for f in fs]
    if not fs:
        raise InputError("need at least one generator")
    S = fs[0].ring
    degrees = []
    for f in fs:
        if f.ring != S:
            raise InputError("generators live in different rings")
        if f.is_zero:
            raise InputError("generators must be nonzero")
        d = weighted_degree(f)
        if d == INHOMOGENEOUS:
            raise InputError(f"generator {f} is not homogeneous")
        if d == 0:
            raise InputError(f"generator {f} is a constant")
        degrees.append(d)
    if signs is None:
        signs = (1,) * len(fs)
    signs = tuple(int(s) for s in signs)
    if len(signs) != len(fs) or any(s not in (1, -1) for s in signs):
        raise InputError("sign pattern must be one of +1/-1 per generator")
    return S, fs, degrees, signs


def check_minimal(fs) -> None:
    """Raise unless no ``f_i`` lies in the ideal of the others."""
    S = fs[0].ring
    for i, f in enumerate(fs):
        others = [g for j, g in enumerate(fs) if j != i]
        if others and Ideal(S, others).contains(f):
            raise InputError(f"generator {f} is redundant: it lies in the ideal of the others")


def build_rees_like(fs, signs=None, check: bool = True) -> ReesLikePresentation:
    S, fs, degrees, signs = _check_inputs(fs, signs)
    if check:
        check_minimal(fs)
    T = ambient_ring(S, degrees)
    m = len(fs)
    ys = [T.var(v) for v in y_names(m)]
    z = T.var("z")
    sf = [f * s for f, s in zip(fs, signs)]
    syz = syzygies(sf)
    cols = [normalize_sign(c) for c in syz.columns()]
    syz = PolyMatrix(S, [[c[i] for c in cols] for i in range(m)], len(cols))
    syz_gens = []
    for col in cols:
        r = T.zero
        for c, y in zip(col, ys):
            if c:
                r = r + c.to_ring(T) * y
        syz_gens.append(r)
    fT = [f.to_ring(T) for f in sf]
    gen_gens = []
    for i in range(m):
        for j in range(i, m):
            gen_gens.append(ys[i] * ys[j] - z * fT[i] * fT[j])
    return ReesLikePresentation(S, tuple(fs), tuple(degrees), T, tuple(syz_gens), tuple(gen_gens), signs, syz)


def parametrization(p: ReesLikePresentation, target: GradedPolyRing | None = None):
    """The map ``y_i -> eps_i f_i t, z -> t^2`` as a substitution into ``S[t]``."""
    S = p.base
    if target is None:
        target = S.extend([fresh_name(S, "t")])
    t = target.var(target.names[-1])
    mapping = {f"y{i + 1}": f.to_ring(target) * s * t for i, (f, s) in enumerate(zip(p.f, p.signs))}
    mapping["z"] = t * t
    return mapping, target


def maps_to_zero(p: ReesLikePresentation, g: Polynomial) -> bool:
    mapping, target = parametrization(p)
    return substitute(g, mapping, target).is_zero


def kernel_oracle(fs, signs=None) -> Ideal:
    """Kernel of ``T -> S[t]`` by eliminating ``t`` from ``(y_i - eps_i f_i t, z - t^2)``."""
    S, fs, degrees, signs = _check_inputs(fs, signs)
    T = ambient_ring(S, degrees)
    t = fresh_name(T, "t")
    Tt = T.extend([t])
    tv = Tt.var(t)
    gens = [Tt.var(y) - f.to_ring(Tt) * s * tv for y, f, s in zip(y_names(len(fs)), fs, signs)]
    gens.append(Tt.var("z") - tv * tv)
    out = eliminate(Ideal(Tt, gens), [t])
    return Ideal(T, [g.to_ring(T) for g in out.gens])


# -- invariants ---------------------------------------------------------------
INVARIANT_KEYS = ("maxdeg", "degree", "reg", "pd", "depth", "ht", "dim")


def base_invariants(p: ReesLikePresentation) -> dict:
    cx = free_resolution(p.base_ideal())
    pd = cx.projective_dimension()
    syz_degs = cx.shifts[2] if cx.length >= 2 else ()
    return {
        "reg": cx.regularity(),
        "pd": pd,
        "depth": p.n - pd,
        "maxdeg_gens": max(p.degrees),
        "maxdeg_syz": max(syz_degs) if syz_degs else None,
        "betti": cx.betti(),
    }


def formula_invariants(p: ReesLikePresentation, base: dict | None = None) -> dict:
    base = base or base_invariants(p)
    prod = 1
    for d in p.degrees:
        prod *= d + 1
    maxdeg = 2 * (base["maxdeg_gens"] + 1)
    if base["maxdeg_syz"] is not None:
        maxdeg = max(maxdeg, 1 + base["maxdeg_syz"])
    return {
        "maxdeg": maxdeg,
        "degree": 2 * prod,
        "reg": base["reg"] + 2 + sum(p.degrees),
        "pd": base["pd"] + p.m - 1,
        "depth": base["depth"] + 2,
        "ht": p.m,
        "dim": p.n + 1,
    }


def computed_invariants(p: ReesLikePresentation) -> dict:
    Q = p.ideal
    cx = free_resolution(Q)
    hd = hilbert_data(Q)
    pd = cx.projective_dimension()
    return {
        "maxdeg": max(cx.shifts[1]),
        "degree": hd.multiplicity,
        "reg": cx.regularity(),
        "pd": pd,
        "depth": p.ring.nvars - pd,
        "ht": height(Q),
        "dim": dimension(Q),
    }


def invariants(p: ReesLikePresentation, mode: str = "both") -> dict:
    """Invariants of ``T/RLP(I)`` by closed formulas, by computation, or both.

    In ``both`` mode a disagreement raises :class:`InvariantViolation` whose
    report lists both records.
    """
    if mode not in ("formula", "computed", "both"):
        raise InputError(f"unknown mode {mode!r}")
    out = {"mode": mode}
    if mode in ("formula", "both"):
        out["formula"] = formula_invariants(p)
    if mode in ("computed", "both"):
        out["computed"] = computed_invariants(p)
    if mode == "both":
        diff = [k for k in INVARIANT_KEYS if out["formula"][k] != out["computed"][k]]
        out["agree"] = not diff
        if diff:
            raise InvariantViolation(f"formula and computed invariants differ in {diff}", out)
    return out


# -- the regularity-versus-degree chain for Cohen-Macaulay base ideals ----------
def sum_product_inequality(ds) -> bool:
    """``sum(d) <= prod(d + 1) - m`` for positive integers ``d_1..d_m``."""
    ds = [int(d) for d in ds]
    if not ds or any(d < 1 for d in ds):
        raise InputError("need a nonempty tuple of positive integers")
    prod = 1
    for d in ds:
        prod *= d + 1
    return sum(ds) <= prod - len(ds)


def regularity_chain(p: ReesLikePresentation) -> dict:
    """Numeric chain bounding ``reg(T/RLP)`` by ``deg - ht`` when ``S/I`` is Cohen-Macaulay and m >= 2.

    Links: the closed-form regularity, the bound ``reg(S/I) <= sum(d_i - 1)``,
    ``m >= 2``, the integer inequality, and the closed forms of degree and height.
    """
    if p.m < 2:
        raise HypothesisError("the chain needs at least two generators")
    base = base_invariants(p)
    dim_base = dimension(p.base_ideal())
    if base["depth"] != dim_base:
        raise HypothesisError(f"S/I is not Cohen-Macaulay (depth {base['depth']}, dim {dim_base})")
    form = formula_invariants(p, base)
    ds = list(p.degrees)
    steps = [
        ("reg(T/RLP)", form["reg"]),
        ("reg(S/I) + 2 + sum d", base["reg"] + 2 + sum(ds)),
        ("sum(d - 1) + 2 + sum d", sum(d - 1 for d in ds) + 2 + sum(ds)),
        ("2 sum d", 2 * sum(ds)),
        ("2 prod(d + 1) - m", form["degree"] - p.m),
        ("deg - ht", form["degree"] - form["ht"]),
    ]
    relations = ["=", "<=", "<=", "<=", "="]
    holds = []
    for (_, a), (_, b), rel in zip(steps, steps[1:], relations):
        holds.append(a == b if rel == "=" else a <= b)
    return {
        "degrees": ds,
        "steps": [{"quantity": q, "value": v} for q, v in steps],
        "relations": relations,
        "holds": holds,
        "cm_regularity_bound": base["reg"] <= sum(d - 1 for d in ds),
        "integer_inequality": sum_product_inequality(ds),
        "ok": all(holds) and sum_product_inequality(ds),
    }
