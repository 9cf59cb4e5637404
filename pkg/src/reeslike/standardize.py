"""Standardizations: graded flat maps from weighted rings to (more) standard graded ones.

Two kinds are provided.  Step-by-step replaces a variable ``x`` of weight ``d``
by a product ``x1 * ... * xd`` of renamed weight-1 variables.  Prime
standardization replaces ``t_i`` of weight ``d_i`` by

    F_i = sum_{j=0..n} prod_{l=1..d_i} w_i_j_l

where ``n`` is the number of variables of the source ring; it can be applied to
all variables or only to a chosen subset.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .exactpoly import GradedPolyRing, Polynomial, partial_derivative, substitute, weighted_degree
from .gbengine import Ideal, height, ideal_quotient, INFINITE_HEIGHT
from .singloc import jacobian, minors_ideal, singular_locus


@dataclass(frozen=True)
class Standardization:
    source: GradedPolyRing
    target: GradedPolyRing
    mapping: dict = field(hash=False)
    kind: str
    selected: tuple = ()
    note: str = ""

    def apply(self, f: Polynomial) -> Polynomial:
        return substitute(f, self.mapping, self.target)

    def apply_ideal(self, I: Ideal) -> Ideal:
        return Ideal(self.target, [self.apply(g) for g in I.gens])

    def degree_preserving(self) -> bool:
        return all(weighted_degree(self.mapping[v]) == w for v, w in zip(self.source.names, self.source.weights))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "source_ring": str(self.source),
            "target_ring": str(self.target),
            "substitution": {v: str(self.mapping[v]) for v in self.source.names},
            "selected": list(self.selected),
            "note": self.note,
        }


def _check_names(names):
    seen = set()
    for v in names:
        if v in seen:
            raise InputError(f"standardization would create the variable name {v!r} twice")
        seen.add(v)


def step_by_step(ring: GradedPolyRing, ideal: Ideal | None = None):
    """Replace each variable ``x`` of weight ``d > 1`` by ``x1*...*xd``.

    Names ending in a digit get an underscore first (``y1`` -> ``y1_1, y1_2``).
    """
    names = []
    images = {}
    for v, w in zip(ring.names, ring.weights):
        if w == 1:
            names.append(v)
            continue
        base = v + "_" if v[-1].isdigit() else v
        parts = [f"{base}{k}" for k in range(1, w + 1)]
        names.extend(parts)
        images[v] = parts
    _check_names(names)
    try:
        target = GradedPolyRing(names, [1] * len(names), ring.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    mapping = {}
    for v in ring.names:
        if v in images:
            g = target.one
            for u in images[v]:
                g = g * target.var(u)
            mapping[v] = g
        else:
            mapping[v] = target.var(v)
    std = Standardization(
        ring, target, mapping, "step-by-step", tuple(images),
        "each weighted variable is replaced entirely by a product of renamed weight-1 variables",
    )
    return std, (std.apply_ideal(ideal) if ideal is not None else None)


def w_name(i: int, j: int, l: int) -> str:
    return f"w_{i}_{j}_{l}"


def prime_standardize(ring: GradedPolyRing, ideal: Ideal | None = None, variables=None):
    """Prime standardization of all variables (``variables=None``) or of a chosen subset.

    Variable ``t_i`` (1-based position ``i``) goes to ``F_i`` over fresh variables
    ``w_i_j_l``, ``0 <= j <= n``, ``1 <= l <= d_i``; unselected variables are kept.
    """
    n = ring.nvars
    if variables is None:
        selected = list(ring.names)
        kind = "prime-full"
    else:
        selected = []
        for v in variables:
            name = ring.resolve(v)
            if name is None:
                raise InputError(f"unknown variable {v!r}")
            selected.append(name)
        kind = "prime-full" if set(selected) == set(ring.names) else "prime-subset"
    names, weights, blocks = [], [], {}
    for i, (v, d) in enumerate(zip(ring.names, ring.weights), start=1):
        if v in selected:
            block = [[w_name(i, j, l) for l in range(1, d + 1)] for j in range(n + 1)]
            blocks[v] = block
            for row in block:
                names.extend(row)
                weights.extend([1] * len(row))
        else:
            names.append(v)
            weights.append(d)
    _check_names(names)
    try:
        target = GradedPolyRing(names, weights, ring.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    mapping = {}
    for v in ring.names:
        if v in blocks:
            F = target.zero
            for row in blocks[v]:
                term = target.one
                for u in row:
                    term = term * target.var(u)
                F = F + term
            mapping[v] = F
        else:
            mapping[v] = target.var(v)
    std = Standardization(ring, target, mapping, kind, tuple(v for v in ring.names if v in blocks))
    return std, (std.apply_ideal(ideal) if ideal is not None else None)


def block_variables(std: Standardization, var: str) -> list[str]:
    """The fresh variables used by the image of ``var``."""
    return sorted(std.mapping[var].support(), key=std.target.index)


# -- prime sequences ------------------------------------------------------------
def irreducibility_certificate(g: Polynomial):
    """A structural proof that ``g`` is irreducible, or ``None``.

    If ``g = v*a + b`` with ``v`` a variable absent from the monomial ``a`` and
    from ``b``, and no variable of ``a`` divides ``b`` (so ``gcd(a, b) = 1``),
    then ``g`` is primitive of degree 1 in ``v`` and hence irreducible.
    """
    ring = g.ring
    if g.is_zero or g.is_constant:
        return None
    for v in sorted(g.support(), key=ring.index):
        i = ring.index(v)
        if g.degree_in(v) != 1:
            continue
        a_terms = {}
        b_terms = {}
        for e, c in g.items():
            if e[i] == 1:
                e2 = list(e)
                e2[i] = 0
                a_terms[tuple(e2)] = c
            else:
                b_terms[e] = c
        if len(a_terms) != 1:
            continue
        (ae, _), = a_terms.items()
        avars = [k for k, x in enumerate(ae) if x]
        if not avars:
            return {"variable": v, "reason": "degree one in the variable with constant coefficient"}
        if not b_terms:
            continue
        if all(any(e[k] == 0 for e in b_terms) for k in avars):
            a = ring.monomial(ae)
            return {"variable": v, "coefficient": str(a), "reason": "degree one in the variable, monomial coefficient coprime to the rest"}
    return None


def prime_sequence_check(elements) -> dict:
    """Certify that ``elements`` form a prime sequence, find a counterexample, or refuse.

    Certificate: the sequence is regular (colon stability), the elements have
    pairwise disjoint supports, and each has a structural irreducibility
    certificate; then every quotient ``S/(g_1..g_i)`` is a tensor product of
    domains over the field.
    """
    gs = list(elements)
    ring = gs[0].ring
    report = {"elements": [str(g) for g in gs]}
    for g in gs:
        d = weighted_degree(g)
        if not isinstance(d, int) or d <= 0:
            raise InputError(f"{g} is not homogeneous of positive degree")
    for g in gs:
        if g.is_monomial and sum(g.lm) > 1:
            e = g.lm
            k = next(i for i, a in enumerate(e) if a)
            left = ring.var(ring.names[k])
            report.update(
                verdict="counterexample",
                reason="a nonlinear monomial is reducible, so its quotient is not a domain",
                witness={"element": str(g), "factors": [str(left), str(divide(g, left))]},
            )
            return report
    regular = []
    for i, g in enumerate(gs):
        prev = Ideal(ring, gs[:i] or [ring.zero])
        if i == 0:
            regular.append(not g.is_zero)
        else:
            regular.append(ideal_quotient(prev, g).equals(prev))
    report["regular_sequence"] = all(regular)
    supports = [g.support() for g in gs]
    disjoint = all(not (supports[a] & supports[b]) for a in range(len(gs)) for b in range(a + 1, len(gs)))
    report["disjoint_supports"] = disjoint
    certs = [irreducibility_certificate(g) for g in gs]
    report["irreducible"] = certs
    if not report["regular_sequence"]:
        bad = regular.index(False)
        report.update(verdict="counterexample", reason=f"element {bad + 1} is a zero divisor modulo the previous ones")
        return report
    if disjoint and all(certs):
        report.update(verdict="certificate", reason="regular sequence of irreducible elements in disjoint variables")
        return report
    report.update(verdict="refused", reason="no structural primality certificate; general primality testing is not supported")
    return report


def divide(f, g):
    from .exactpoly import divide_exact

    return divide_exact(f, g)


def partials_height_check(std: Standardization, var: str) -> dict:
    """Height of the ideal of partial derivatives of ``F = var^std`` against ``n + 1``.

    The partials by the first variable of each summand are monomials in disjoint
    variables, hence a regular sequence of length ``n + 1``.
    """
    n = std.source.nvars
    F = std.mapping[std.source.resolve(var) or var]
    target = std.target
    ws = block_variables(std, var)
    partials = [partial_derivative(F, w) for w in ws]
    P = Ideal(target, partials)
    ht = height(P)
    # one partial per summand: the derivative by its first variable
    firsts = []
    for e, _ in F.items():
        vs = [target.names[k] for k, a in enumerate(e) if a]
        firsts.append(partial_derivative(F, vs[0]))
    supports = [g.support() for g in firsts]
    disjoint = all(not (supports[a] & supports[b]) for a in range(len(firsts)) for b in range(a + 1, len(firsts)))
    return {
        "variable": var,
        "n": n,
        "height": ht,
        "bound": n + 1,
        "regular_sequence": [str(g) for g in firsts],
        "disjoint": disjoint,
        "ok": ht >= n + 1 and (disjoint or ht == INFINITE_HEIGHT),
    }


def _fmt_height(h):
    return "inf" if h == INFINITE_HEIGHT else h


def codim_preservation_harness(I: Ideal, std: Standardization, mode: str = "prime-ambient") -> dict:
    """Compare ``ht(Sing) - ht(I)`` before and after a standardization."""
    Is = std.apply_ideal(I)
    c = height(I)
    cs = height(Is)
    before = height(singular_locus(I, mode, c))
    after = height(singular_locus(Is, mode, cs))
    codim_before = before - c
    codim_after = after - cs
    return {
        "kind": std.kind,
        "mode": mode,
        "height_ideal": [_fmt_height(c), _fmt_height(cs)],
        "height_singular": [_fmt_height(before), _fmt_height(after)],
        "codim_singular": [_fmt_height(codim_before), _fmt_height(codim_after)],
        "heights_agree": c == cs,
        "preserved": codim_before == codim_after,
        "note": std.note,
    }
