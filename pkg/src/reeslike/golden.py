"""Built-in worked examples with their expected values embedded.

Each entry recomputes an example and compares against the stored golden data;
``run_example`` returns a report whose ``ok`` flag is false on any mismatch.
Example ids follow the numbering used by the ``examples --id`` command.
"""

from __future__ import annotations

import time

from .exactpoly import GradedPolyRing, PolyMatrix
from .gbengine import Ideal, height
from .presentation import build_rees_like, invariants, kernel_oracle

QUADRICS = ["x1^2", "x1*x2", "x2^2"]

RLP_LINEAR = ["-x2*y1 + x1*y2", "y1^2 - x1^2*z", "y1*y2 - x1*x2*z", "y2^2 - x2^2*z"]

JACOBIAN_LINEAR = [
    ["y2", "-2*x1*z", "-x2*z", "0"],
    ["-y1", "0", "-x1*z", "-2*x2*z"],
    ["-x2", "2*y1", "y2", "0"],
    ["x1", "0", "y1", "2*y2"],
    ["0", "-x1^2", "-x1*x2", "-x2^2"],
]

# keys: maxdeg, degree, reg, pd, depth, ht, dim
INVARIANTS_LINEAR = {
    "x1,x2": {"degree": 8, "reg": 4, "pd": 3, "depth": 2, "ht": 2, "dim": 3},
}

HEIGHTS_MINORS_2X3 = (2, 2, 6, 5)

F_WEIGHTED = ("(w_{1,0,1} + w_{1,1,1} + w_{1,2,1} + w_{1,3,1})^2"
         " - (w_{2,0,1}w_{2,0,2} + w_{2,1,1}w_{2,1,2} + w_{2,2,1}w_{2,2,2} + w_{2,3,1}w_{2,3,2})")
G_WEIGHTED = ("(w_{1,0,1} + w_{1,1,1} + w_{1,2,1} + w_{1,3,1})^3 - (w_{3,0,1}w_{3,0,2}w_{3,0,3}"
         " + w_{3,1,1}w_{3,1,2}w_{3,1,3} + w_{3,2,1}w_{3,2,2}w_{3,2,3} + w_{3,3,1}w_{3,3,2}w_{3,3,3})")

# reference text with a misprinted y2 term (x1^3*x2 where the subset sum gives x1^2*x2^2)
G_EVEN_QUADRICS_PRINTED = "y1*y2*y3 + x1*x2^3*y1*z + x1^3*x2*y2*z + x1^3*x2*y3*z"
G_EVEN_QUADRICS = "y1*y2*y3 + x1*x2^3*y1*z + x1^2*x2^2*y2*z + x1^3*x2*y3*z"
G_ODD_QUADRICS = "x2^2*y1*y2 + x1*x2*y1*y3 + x1^2*y2*y3 + x1^3*x2^3*z"

D1_QUADRICS = [
    ["y1", "y2", "y3", "x1^2", "x1*x2", "x2^2"],
    ["z*x1^2", "z*x1*x2", "z*x2^2", "y1", "y2", "y3"],
]
D2_QUADRICS = [
    ["-y2", "-y3", "0", "-x1*x2", "-x2^2", "0"],
    ["y1", "0", "-y3", "x1^2", "0", "-x2^2"],
    ["0", "y1", "y2", "0", "x1^2", "x1*x2"],
    ["-z*x1*x2", "-z*x2^2", "0", "-y2", "-y3", "0"],
    ["z*x1^2", "0", "-z*x2^2", "y1", "0", "-y3"],
    ["0", "z*x1^2", "z*x1*x2", "0", "y1", "y2"],
]
D3_QUADRICS = [
    ["-y3", "-x2^2"],
    ["y2", "x1*x2"],
    ["-y1", "-x1^2"],
    ["-z*x2^2", "-y3"],
    ["z*x1*x2", "y2"],
    ["-z*x1^2", "-y1"],
]


def plane():
    return GradedPolyRing(["x1", "x2"])


def _presentation(gens):
    S = plane()
    return build_rees_like([S(g) for g in gens])


def check_presentation_linear() -> dict:
    p = _presentation(["x1", "x2"])
    got = [str(g) for g in p.generators]
    return {"generators": got, "expected": RLP_LINEAR, "ok": got == RLP_LINEAR}


def check_jacobian_linear() -> dict:
    from .singloc import block_jacobian, reassemble

    p = _presentation(["x1", "x2"])
    bj = block_jacobian(p)
    expected = PolyMatrix.parse(p.ring, JACOBIAN_LINEAR)
    return {
        "matrix": bj.full.to_strings(),
        "row_labels": list(bj.full.row_labels or []),
        "matches": bj.full == expected,
        "reassembles": reassemble(bj) == bj.full,
        "ok": bj.full == expected and reassemble(bj) == bj.full,
    }


def check_invariants_linear() -> dict:
    p = _presentation(["x1", "x2"])
    inv = invariants(p, "both")
    want = INVARIANTS_LINEAR["x1,x2"]
    got = {k: inv["computed"][k] for k in want}
    oracle = kernel_oracle(list(p.f)).equals(p.ideal)
    return {"computed": got, "expected": want, "agree": inv["agree"], "kernel_oracle": oracle,
            "ok": got == want and inv["agree"] and oracle}


def check_sing_linear() -> dict:
    from .singloc import monomial_min_primes, verify_sing_description

    p = _presentation(["x1", "x2"])
    mins = monomial_min_primes(p.base_ideal())
    rep = verify_sing_description(p, mins)
    want = [["x1", "x2", "y1", "y2"]]
    return {"height": rep["height_minors"], "minimal_primes": rep["minimal_primes"],
            "ok": rep["ok"] and rep["height_minors"] == 4 and rep["minimal_primes"] == want}


def check_codim_drop() -> dict:
    from .singloc import singular_locus
    from .standardize import codim_preservation_harness, prime_standardize, step_by_step

    S = GradedPolyRing(["u", "v", "w", "x", "y", "z"], [1, 1, 1, 2, 2, 2])
    from .singloc import minors

    Q = Ideal(S, minors(PolyMatrix.parse(S, [["x", "y", "z"], ["u", "v", "w"]]), 2))
    std, Qs = step_by_step(S, Q)
    hQ, hQs = height(Q), height(Qs)
    heights = (hQ, hQs, height(singular_locus(Q, "prime-ambient", hQ)), height(singular_locus(Qs, "prime-ambient", hQs)))
    pstd, _ = prime_standardize(S, Q, ["x"])
    harness = codim_preservation_harness(Q, pstd)
    return {
        "heights": list(heights),
        "expected": list(HEIGHTS_MINORS_2X3),
        "Q_std": [str(g) for g in Qs.gens],
        "prime_subset": harness,
        "ok": heights == HEIGHTS_MINORS_2X3 and harness["preserved"],
    }


def check_prime_standardization() -> dict:
    from .standardize import partials_height_check, prime_sequence_check, prime_standardize

    T = GradedPolyRing(["x1", "x2", "x3"], [1, 2, 3])
    I = Ideal(T, ["x1^2 - x2", "x1^3 - x3"])
    std, Is = prime_standardize(T, I)
    R = std.target
    want = [str(R.parse(F_WEIGHTED)), str(R.parse(G_WEIGHTED))]
    got = [str(g) for g in Is.gens]
    seq = prime_sequence_check([std.mapping[v] for v in T.names])
    partial = partials_height_check(std, "x3")
    return {
        "generators": got,
        "expected": want,
        "prime_sequence": seq["verdict"],
        "partials_height": partial["height"],
        "ok": got == want and seq["verdict"] == "certificate" and partial["ok"],
    }


def check_monomial_curve() -> dict:
    from .normality import monomial_curve_example

    return monomial_curve_example()


def check_link() -> dict:
    from .linkcanon import link

    out = {}
    for name, gens in (("x1,x2", ["x1", "x2"]), ("quadrics", QUADRICS)):
        out[name] = link(_presentation(gens)).equal
    out["ok"] = all(out.values())
    return out


def check_d_complex_quadrics() -> dict:
    from .linkcanon import d_complex_for, g_for, signed_permutation_equivalent

    p = _presentation(QUADRICS)
    T = p.ring
    ge, go = g_for(p)
    printed = T.parse(G_EVEN_QUADRICS_PRINTED)
    y2, z, x1, x2 = (T.var(v) for v in ("y2", "z", "x1", "x2"))
    typo_gap = ge - printed == y2 * z * (x1 * x1 * x2 * x2 - x1 ** 3 * x2)
    cx = d_complex_for(p)
    mats = {}
    for i, rows in ((1, D1_QUADRICS), (2, D2_QUADRICS), (3, D3_QUADRICS)):
        want = PolyMatrix.parse(T, rows)
        mats[f"d{i}"] = {
            "identical": cx.d(i) == want,
            "negated": cx.d(i) == -want,
            "signed_permutation": signed_permutation_equivalent(cx.d(i), want) is not None,
        }
    ok = (
        str(ge) == G_EVEN_QUADRICS and str(go) == G_ODD_QUADRICS and typo_gap
        and all(m["signed_permutation"] for m in mats.values())
        and list(cx.ranks) == [2, 6, 6, 2]
    )
    return {"g_even": str(ge), "g_odd": str(go), "printed_g_even_differs_by_one_term": typo_gap,
            "ranks": list(cx.ranks), "matrices": mats, "ok": ok}


EXAMPLES = {
    "rlp-2.3": ("Rees-like presentation of (x1, x2)", check_presentation_linear),
    "jacobian-2.3": ("Jacobian of RLP((x1, x2))", check_jacobian_linear),
    "invariants-2.1": ("closed-form and computed invariants of RLP((x1, x2))", check_invariants_linear),
    "sing-2.7": ("singular locus of RLP((x1, x2))", check_sing_linear),
    "codim-3.3": ("step-by-step standardization lowers the codimension of the singular locus", check_codim_drop),
    "std-3.8": ("prime standardization of (x1^2 - x2, x1^3 - x3)", check_prime_standardization),
    "curve-5": ("Rees algebra of the monomial curve (9, 10, 13) is not seminormal", check_monomial_curve),
    "link-6.8": ("C : Q = C + (g_even, g_odd)", check_link),
    "dcomplex-6.10": ("resolution of the canonical module for (x1, x2)^2", check_d_complex_quadrics),
}


def run_example(eid: str) -> dict:
    if eid not in EXAMPLES:
        raise KeyError(eid)
    title, fn = EXAMPLES[eid]
    t0 = time.perf_counter()
    details = fn()
    return {"id": eid, "title": title, "ok": bool(details.get("ok")), "milliseconds": int(1000 * (time.perf_counter() - t0)),
            "details": details}


def run_all(ids=None) -> list[dict]:
    return [run_example(e) for e in (ids or EXAMPLES)]
