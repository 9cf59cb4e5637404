"""Membership in ``RL(I) = S[It, t^2]``, seminormality probes and Fedder-style F-split checks.

Elements of ``S[t]`` are kept as a map ``j -> b_j`` from ``t``-exponents to
coefficients in ``S``.  Then ``sum b_j t^j`` lies in ``RL(I)`` exactly when
``b_j`` is in ``I`` for every odd ``j``, and in the Rees algebra ``S[It]``
exactly when ``b_j`` is in ``I^j`` for every ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .config import FEDDER_MAX_VARS, FEDDER_PRIMES, POWER_CAP, raised_degree_cap
from .errors import HypothesisError, InputError, TooLargeError
from .exactpoly import GradedPolyRing, Polynomial
from .gbengine import Ideal, ideal_quotient
from .gbengine.ideal import minimalize_monomials
from .presentation import build_rees_like


@dataclass(frozen=True)
class ReesLikeElement:
    """``sum_j coeffs[j] * t^j`` with coefficients in ``ring``."""

    ring: GradedPolyRing
    coeffs: dict = field(hash=False)

    @classmethod
    def of(cls, ring, coeffs) -> "ReesLikeElement":
        if isinstance(coeffs, (list, tuple)):
            coeffs = dict(enumerate(coeffs))
        out = {}
        for j, c in coeffs.items():
            if int(j) < 0:
                raise InputError("t-exponents must be nonnegative")
            c = ring(c) if not isinstance(c, Polynomial) else c
            if c:
                out[int(j)] = c
        return cls(ring, out)

    def __mul__(self, other: "ReesLikeElement") -> "ReesLikeElement":
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, self.ring.zero) + a * b
        return ReesLikeElement.of(self.ring, out)

    def __pow__(self, k: int) -> "ReesLikeElement":
        out = ReesLikeElement.of(self.ring, {0: self.ring.one})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, ReesLikeElement) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j in sorted(self.coeffs):
            c = str(self.coeffs[j])
            tt = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if not tt:
                parts.append(c)
            elif c == "1":
                parts.append(tt)
            else:
                parts.append(f"{c}*{tt}" if " " not in c else f"({c})*{tt}")
        return " + ".join(parts)


def rl_membership(e: ReesLikeElement, I: Ideal) -> bool:
    return all(I.contains(c) for j, c in e.coeffs.items() if j % 2 == 1)


def _monomials_of_degree(ring: GradedPolyRing, d: int):
    # standard (not weighted) degree; lexicographic in the variable order
    for combo in combinations_with_replacement(range(ring.nvars), d):
        e = [0] * ring.nvars
        for k in combo:
            e[k] += 1
        yield ring.monomial(e)


def seminormality_probe(I: Ideal, sigma: int = 3, bound: int | None = None, exponents=(1, 3)) -> dict:
    """Bounded search for ``b = a t^j`` (``j`` odd) with ``b^sigma`` in ``RL(I)`` but ``b`` not.

    ``a`` runs over monomials of degree ``1..bound`` and then the generators of
    ``I`` with repeated factors removed.  Since ``(a t^j)^sigma = a^sigma t^(j sigma)``
    with ``j sigma`` odd, the condition is ``a^sigma in I`` and ``a not in I``.
    The verdict is ``refuted`` with the first witness, or ``not refuted up to bound``.
    """
    if sigma < 3 or sigma % 2 == 0:
        raise InputError("sigma must be an odd integer greater than 1")
    ring = I.ring
    if bound is None:
        bound = max((sum(g.lm) for g in I.nonzero_gens), default=1)
    exps = [j for j in exponents if j % 2 == 1]
    checked = 0
    candidates = []
    for d in range(1, bound + 1):
        candidates.extend(_monomials_of_degree(ring, d))
    for g in I.nonzero_gens:
        if g.is_monomial:
            candidates.append(ring.monomial([min(a, 1) for a in g.lm]))
    for a in candidates:
        for j in exps:
            checked += 1
            b = ReesLikeElement.of(ring, {j: a})
            if rl_membership(b, I):
                continue
            if rl_membership(b ** sigma, I):
                return {
                    "verdict": "refuted",
                    "sigma": sigma,
                    "witness": str(b),
                    "witness_coefficient": str(a),
                    "witness_exponent": j,
                    "checked": checked,
                    "memberships": {f"({a})^{sigma} in I": True, f"{a} in I": False},
                }
    return {"verdict": "not refuted up to bound", "sigma": sigma, "bound": bound, "checked": checked}


def even_power_caveat(ring: GradedPolyRing, I: Ideal) -> dict:
    """``b = t`` has ``b^2 = t^2`` in ``RL(I)`` although ``t`` is not, for every proper ``I``."""
    b = ReesLikeElement.of(ring, {1: ring.one})
    return {"b": str(b), "b_in_RL": rl_membership(b, I), "b_squared_in_RL": rl_membership(b ** 2, I)}


def is_radical_monomial(I: Ideal) -> bool:
    """A monomial ideal is radical iff its minimal monomial generators are squarefree."""
    if not I.is_monomial():
        raise InputError("is_radical_monomial needs a monomial ideal")
    return all(max(g.lm) <= 1 for g in minimalize_monomials(I))


def seminormality_verdict(I: Ideal, radical: bool | None = None) -> dict:
    """Radicality of ``I`` and, through it, seminormality and weak normality of ``RL(I)``.

    Non-monomial ideals stay ``undetermined`` unless the caller passes ``radical``.
    Outside characteristic 2 the three properties coincide.
    """
    ring = I.ring
    if I.is_monomial():
        rad = is_radical_monomial(I)
        source = "monomial generators"
    elif radical is not None:
        rad = bool(radical)
        source = "caller"
    else:
        return {"radical": None, "seminormal": None, "weakly_normal": None, "verdict": "undetermined",
                "reason": "radicality of non-monomial ideals is not decided; pass radical=True/False"}
    if ring.field.characteristic == 2:
        return {"radical": rad, "seminormal": None, "weakly_normal": None, "verdict": "undetermined",
                "reason": "the radical criterion needs characteristic different from 2", "source": source}
    return {"radical": rad, "seminormal": rad, "weakly_normal": rad,
            "verdict": "seminormal" if rad else "not seminormal", "source": source}


class PowerCache:
    """Powers ``I^j`` built incrementally up to ``cap``."""

    def __init__(self, I: Ideal, cap: int = POWER_CAP):
        self.ideal = I
        self.cap = cap
        self._powers = [Ideal(I.ring, [I.ring.one])]

    def __getitem__(self, j: int) -> Ideal:
        if j > self.cap:
            raise TooLargeError(f"power {j} exceeds the cap {self.cap}")
        while len(self._powers) <= j:
            prev = self._powers[-1]
            self._powers.append(Ideal(self.ideal.ring, minimalize_monomials(prev * self.ideal)))
        return self._powers[j]


def rees_algebra_membership(e: ReesLikeElement, I: Ideal, cap: int = POWER_CAP, powers: PowerCache | None = None) -> dict:
    """``sum b_j t^j`` in ``S[It]`` iff ``b_j in I^j`` for each ``j``."""
    powers = powers or PowerCache(I, cap)
    per = {}
    for j in sorted(e.coeffs):
        per[j] = True if j == 0 else powers[j].contains(e.coeffs[j])
    return {"member": all(per.values()), "per_exponent": per}


# -- the monomial curve k[v^9, v^10, v^13] ---------------------------------------
CURVE_DEGREE_CAP = 400


def monomial_curve_example() -> dict:
    # weights 9, 10, 13 put p^6 in weighted degree around 250
    with raised_degree_cap(CURVE_DEGREE_CAP):
        return _curve_report()


def _curve_report() -> dict:
    """Check ``f notin S[pt]`` and ``f^2, f^3 in S[pt]`` two ways each.

    Route one reduces the coefficients of ``f^k`` modulo Groebner bases of the
    powers of the prime; route two checks the printed expressions in the
    generators as polynomial identities.
    """
    S = GradedPolyRing(["x", "y", "z"], [9, 10, 13])
    x, y, z = S.gens
    p1 = y ** 4 - x ** 3 * z
    p2 = x * y ** 3 - z ** 3
    p3 = x ** 4 - y * z ** 2
    P = Ideal(S, [p1, p2, p3])
    numerator = x ** 2 * p2 * p3 + z * p1 ** 2
    from .exactpoly import divide_exact

    quotient = divide_exact(numerator, y)
    fcoef = x ** 7 * y ** 2 - 3 * x ** 3 * y ** 3 * z ** 2 + x ** 2 * z ** 5 + y ** 7 * z
    f = ReesLikeElement.of(S, {2: fcoef})
    powers = PowerCache(P, 6)
    f2, f3 = f ** 2, f ** 3
    printed2 = -y * p1 ** 3 * p3 + x ** 2 * p1 * p3 ** 3 + y * p2 ** 4 - z * p2 ** 3 * p3 + x * z * p3 ** 4
    printed3 = (-z * p1 ** 5 * p3 + z * p1 ** 2 * p2 ** 4 + 3 * x * z * p1 ** 2 * p2 * p3 ** 3
                + z ** 2 * p1 * p2 * p3 ** 4 + x ** 3 * p2 ** 2 * p3 ** 4)
    minors_match = Ideal(S, _two_minors(S)).equals(P)
    report = {
        "ring": str(S),
        "prime": [str(g) for g in (p1, p2, p3)],
        "prime_is_2x2_minors": minors_match,
        "f": str(f),
        "quotient_matches_f": quotient == fcoef,
    }
    for key, e in (("f_in_rees", f), ("f2_in_rees", f2), ("f3_in_rees", f3)):
        report[key] = rees_algebra_membership(e, P, powers=powers)["member"]
    report.update({
        "f2_identity": f2.coeffs.get(4) == printed2 and set(f2.coeffs) == {4},
        "f3_identity": f3.coeffs.get(6) == printed3 and set(f3.coeffs) == {6},
    })
    report["ok"] = (
        report["prime_is_2x2_minors"] and report["quotient_matches_f"] and not report["f_in_rees"]
        and report["f2_in_rees"] and report["f3_in_rees"] and report["f2_identity"] and report["f3_identity"]
    )
    return report


def _two_minors(S):
    from .exactpoly import PolyMatrix
    from .singloc import minors

    M = PolyMatrix.parse(S, [["z", "-y", "x"], ["-y^3", "x^3", "-z^2"]])
    return minors(M, 2)


# -- Fedder ----------------------------------------------------------------------
def frobenius_power(I: Ideal, p: int) -> Ideal:
    return Ideal(I.ring, [g ** p for g in I.nonzero_gens] or [I.ring.zero])


def fedder_fsplit(I: Ideal, allow_large: bool = False) -> dict:
    """Fedder's criterion: ``R/I`` is F-split iff ``(I^[p] : I)`` is not inside ``m^[p]``."""
    ring = I.ring
    p = ring.field.characteristic
    if p == 0:
        raise HypothesisError("F-splitting needs a field of positive characteristic")
    if p == 2:
        raise HypothesisError("characteristic 2 is excluded")
    if not allow_large and (p not in FEDDER_PRIMES or ring.nvars > FEDDER_MAX_VARS):
        raise TooLargeError(
            f"Fedder checks are limited to p in {FEDDER_PRIMES} and at most {FEDDER_MAX_VARS} variables"
        )
    if not I.is_homogeneous():
        raise InputError("Fedder's criterion is applied to homogeneous ideals only")
    colon = ideal_quotient(frobenius_power(I, p), I)
    mp = Ideal(ring, [ring.var(v) ** p for v in ring.names])
    witness = None
    for g in colon.groebner():
        if not mp.contains(g):
            witness = g
            break
    return {
        "p": p,
        "ring": str(ring),
        "f_split": witness is not None,
        "witness": None if witness is None else str(witness),
        "colon_generators": len(colon.groebner()),
    }


def fedder_coherence(I: Ideal) -> dict:
    """Fedder's verdict for ``S/I`` against the one for ``T/RLP(I)``."""
    base = fedder_fsplit(I)
    p = build_rees_like(I.nonzero_gens)
    rl = fedder_fsplit(p.ideal)
    return {"base": base, "rees_like": rl, "agree": base["f_split"] == rl["f_split"]}
