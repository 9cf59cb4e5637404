"""Command-line front end: ``reeslike <command> --ideal "..." [--ring "..."] [--json]``.

Exit codes: 0 on success, 1 on input errors (including unmet hypotheses and
size limits), 2 when a computed report contradicts an expected invariant.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .errors import DegreeCapExceeded, InputError, InvariantViolation, ParseError, TooLargeError
from .exactpoly import FF, QQ, GradedPolyRing, MonomialOrder, PolyMatrix, Polynomial, split_generators
from .exactpoly.parser import tokenize
from .exactpoly.fields import _mpq_type
from .gbengine import FreeComplex, Ideal

COMMANDS = (
    "present", "invariants", "jacobian", "singloc", "standardize", "link",
    "canonical", "seminormal", "fsplit", "gb", "resolve", "examples",
)
JOB_KEYS = {"ring", "ideal", "field", "order", "mode", "signs", "sigma", "bound", "vars", "kind", "id"}


# -- input -----------------------------------------------------------------------
_FIELD = re.compile(r"^\s*(QQ|FF\s*\(?\s*(\d+)\s*\)?)\s*$")


def parse_field(text: str):
    m = _FIELD.match(text)
    if not m:
        raise ParseError("expected QQ or FF p", text, 0)
    if m.group(2) is None:
        return QQ
    try:
        return FF(int(m.group(2)))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_ring(text: str) -> GradedPolyRing:
    """``"x1:1, x2:1, y:2 over QQ"``; weights default to 1 and the field to QQ."""
    body, field = text, QQ
    if " over " in f" {text} ":
        idx = text.rfind("over")
        body, field = text[:idx], parse_field(text[idx + 4:])
    names, weights = [], []
    offset = 0
    for part in body.split(","):
        item = part.strip()
        pos = offset + (len(part) - len(part.lstrip()))
        offset += len(part) + 1
        if not item:
            raise ParseError("empty variable declaration", text, pos)
        if ":" in item:
            name, w = (s.strip() for s in item.split(":", 1))
            if not w.isdigit():
                raise ParseError(f"weight of {name!r} must be a positive integer", text, pos)
            weights.append(int(w))
        else:
            name = item
            weights.append(1)
        names.append(name)
    try:
        return GradedPolyRing(names, weights, field)
    except ValueError as exc:
        raise InputError(f"bad ring declaration: {exc}") from None


def _natural(name: str):
    return [int(c) if c.isdigit() else c for c in re.split(r"(\d+)", name)]


def infer_ring(ideal_text: str, field=QQ) -> GradedPolyRing:
    """Standard-graded ring on the variable names used in ``ideal_text``, in natural order."""
    names = set()
    for gen in split_generators(ideal_text):
        for kind, tok, _ in tokenize(gen):
            if kind == "name":
                names.add(tok)
    if not names:
        names = {"x"}
    try:
        return GradedPolyRing(sorted(names, key=_natural), None, field)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_ideal(text: str, ring: GradedPolyRing) -> Ideal:
    gens = [g for g in (s.strip() for s in split_generators(text))]
    if not gens or any(not g for g in gens):
        raise InputError("the ideal needs a nonempty comma-separated list of generators")
    out = []
    for g in gens:
        try:
            out.append(ring.parse(g))
        except ParseError as exc:
            raise ParseError(f"in generator {g!r}: {exc.reason}", g, exc.position) from None
    return Ideal(ring, out)


def read_job(path: str) -> dict:
    """``key: value`` lines; indented lines continue the previous value; ``#`` starts a comment."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read job file: {exc}") from None
    job, last = {}, None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line[0].isspace() and last is not None:
            job[last] += " " + line.strip()
            continue
        if ":" not in line:
            raise InputError(f"{path}:{lineno}: expected 'key: value'")
        key, value = line.split(":", 1)
        key = key.strip().lower()
        if key not in JOB_KEYS:
            raise InputError(f"{path}:{lineno}: unknown key {key!r}")
        job[key] = value.strip()
        last = key
    return job


# -- output ----------------------------------------------------------------------
def jsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, _mpq_type):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Polynomial):
        return str(obj)
    if isinstance(obj, PolyMatrix):
        return obj.to_strings()
    if isinstance(obj, Ideal):
        return [str(g) for g in obj.gens]
    if isinstance(obj, GradedPolyRing):
        return str(obj)
    if isinstance(obj, FreeComplex):
        return jsonable(obj.to_json())
    if isinstance(obj, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return str(obj)


def render_text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(obj)}")
    return "\n".join(lines)


def _flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v) and len(str(v)) < 100
    return False


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return "none" if v is None else str(v)


# -- commands --------------------------------------------------------------------
def _signs(text):
    if not text:
        return None
    out = []
    for s in text.replace(",", " ").split():
        if s in ("+", "+1", "1"):
            out.append(1)
        elif s in ("-", "-1"):
            out.append(-1)
        else:
            raise InputError(f"bad sign {s!r}; use + or -")
    return out


def _presentation(I: Ideal, opts):
    from .presentation import build_rees_like

    return build_rees_like(I.nonzero_gens, _signs(opts.get("signs")))


def cmd_present(I, opts):
    p = _presentation(I, opts)
    out = p.to_json()
    out["syzygy_matrix"] = p.syzygy_matrix
    return out, True


def cmd_invariants(I, opts):
    from .presentation import invariants

    p = _presentation(I, opts)
    res = invariants(p, opts.get("mode") or "both")
    return {"presentation": p.generators, **res}, True


def cmd_jacobian(I, opts):
    from .singloc import block_jacobian, jacobian, reassemble

    if opts.get("mode") == "ideal":
        return {"rows": list(I.ring.names), "matrix": jacobian(I)}, True
    p = _presentation(I, opts)
    bj = block_jacobian(p)
    ok = reassemble(bj) == bj.full
    return {"generators": p.generators, "rows": list(bj.full.row_labels), "matrix": bj.full,
            "blocks": bj.blocks, "reassembles": ok}, ok


def cmd_singloc(I, opts):
    from .gbengine import height
    from .singloc import jacobian, minors_ideal, monomial_min_primes, verify_sing_description

    p = _presentation(I, opts)
    if I.is_monomial():
        rep = verify_sing_description(p, monomial_min_primes(p.base_ideal()))
        return rep, rep["ok"]
    J = minors_ideal(jacobian(p.generators, p.ring), p.m)
    hJ, hI = height(J), height(I)
    ok = hJ == p.m + hI
    return {"m": p.m, "height_minors": hJ, "height_I": hI, "expected": p.m + hI,
            "note": "minimal primes are verified for monomial ideals only", "ok": ok}, ok


def cmd_standardize(I, opts):
    from .standardize import codim_preservation_harness, prime_standardize, step_by_step

    kind = opts.get("kind") or "prime"
    vars_ = [v.strip() for v in opts["vars"].split(",")] if opts.get("vars") else None
    if kind == "step":
        std, Is = step_by_step(I.ring, I)
    elif kind == "prime":
        std, Is = prime_standardize(I.ring, I, vars_)
    else:
        raise InputError("--kind must be 'step' or 'prime'")
    out = {"standardization": std.to_json(), "image": Is, "degree_preserving": std.degree_preserving()}
    if opts.get("mode") == "harness":
        out["harness"] = codim_preservation_harness(I, std)
    return out, std.degree_preserving()


def cmd_link(I, opts):
    from .linkcanon import init_ideal_check, link, ses_checks

    p = _presentation(I, opts)
    d = link(p)
    ses = ses_checks(p)
    init = init_ideal_check(p)
    ok = d.equal and ses["ok"] and init["ok"]
    return {"C": d.C, "g_even": d.g_even, "g_odd": d.g_odd, "J": d.J, "J_equals_C_colon_Q": d.equal,
            "colon_checks": ses, "initial_ideal": init, "ok": ok}, ok


def cmd_canonical(I, opts):
    from .linkcanon import canonical_module_checks, d_complex_for

    p = _presentation(I, opts)
    cx = d_complex_for(p)
    rep = canonical_module_checks(p)
    return {"ranks": list(cx.ranks), "shifts": cx.shifts,
            "differentials": {f"d{i}": cx.d(i) for i in range(1, cx.length + 1)}, "checks": rep,
            "ok": rep["ok"]}, rep["ok"]


def _int_opt(opts, key, default):
    raw = opts.get(key)
    if raw is None or str(raw).strip() == "":
        return default
    try:
        return int(str(raw).strip())
    except ValueError:
        raise InputError(f"--{key} must be an integer, got {raw!r}") from None


def cmd_seminormal(I, opts):
    from .normality import even_power_caveat, seminormality_probe, seminormality_verdict

    sigma = _int_opt(opts, "sigma", 3)
    bound = _int_opt(opts, "bound", None)
    verdict = seminormality_verdict(I)
    probe = seminormality_probe(I, sigma, bound)
    ok = True
    if verdict["radical"] is True and probe["verdict"] == "refuted":
        ok = False
    if verdict["radical"] is False and I.is_monomial() and probe["verdict"] != "refuted" and bound is None:
        ok = False
    return {"verdict": verdict, "probe": probe, "even_exponent_caveat": even_power_caveat(I.ring, I),
            "consistent": ok}, ok


def cmd_fsplit(I, opts):
    from .normality import fedder_coherence

    rep = fedder_coherence(I)
    return rep, rep["agree"]


def _order(text, ring):
    if not text:
        return None
    kind = text.strip()
    if kind not in ("lex", "grevlex", "wlex"):
        raise InputError("--order must be lex, grevlex or wlex")
    return MonomialOrder(kind)


def cmd_gb(I, opts):
    order = _order(opts.get("order"), I.ring)
    gb = I.groebner(order)
    return {"order": str(order or I.ring.order), "basis": gb}, True


def cmd_resolve(I, opts):
    from .gbengine import free_resolution, hilbert_data

    cx = free_resolution(I)
    hd = hilbert_data(I)
    ok = cx.is_complex() and cx.is_minimal()
    return {
        "ranks": list(cx.ranks),
        "betti_table": cx.betti_table(),
        "projective_dimension": cx.projective_dimension(),
        "regularity": cx.regularity(),
        "hilbert_numerator": hd.numerator_text(),
        "dimension": hd.dimension,
        "multiplicity": hd.multiplicity,
        "normalized_multiplicity": hd.normalized_limit,
        "differentials": cx.diffs,
        "ok": ok,
    }, ok


HANDLERS = {
    "present": cmd_present,
    "invariants": cmd_invariants,
    "jacobian": cmd_jacobian,
    "singloc": cmd_singloc,
    "standardize": cmd_standardize,
    "link": cmd_link,
    "canonical": cmd_canonical,
    "seminormal": cmd_seminormal,
    "fsplit": cmd_fsplit,
    "gb": cmd_gb,
    "resolve": cmd_resolve,
}


def run(command: str, job: dict) -> tuple[dict, int]:
    """Execute one command; returns the JSON-ready report and the exit code."""
    report = {"command": command, "ok": False, "exit_code": 1, "ring": None, "ideal": None,
              "result": None, "error": None}
    try:
        if command == "examples":
            from .golden import EXAMPLES, run_all

            ids = [job["id"]] if job.get("id") else None
            if ids and ids[0] not in EXAMPLES:
                raise InputError(f"unknown example id {ids[0]!r}; known: {', '.join(EXAMPLES)}")
            results = run_all(ids)
            ok = all(r["ok"] for r in results)
            report["result"] = {"examples": results}
        else:
            if command not in HANDLERS:
                raise InputError(f"unknown command {command!r}")
            if not job.get("ideal"):
                raise InputError("an ideal is required (--ideal or a job file)")
            if job.get("ring"):
                ring = parse_ring(job["ring"])
            else:
                ring = infer_ring(job["ideal"], parse_field(job["field"]) if job.get("field") else QQ)
            I = parse_ideal(job["ideal"], ring)
            report["ring"] = str(ring)
            report["ideal"] = [str(g) for g in I.gens]
            result, ok = HANDLERS[command](I, job)
            report["result"] = result
        report["ok"] = bool(ok)
        report["exit_code"] = 0 if ok else 2
    except InvariantViolation as exc:
        report["error"] = {"kind": "invariant-violation", "message": str(exc), "report": exc.report}
        report["exit_code"] = 2
    except ParseError as exc:
        report["error"] = {"kind": "parse-error", "message": str(exc), "position": exc.position}
        report["exit_code"] = 1
    except (InputError, TooLargeError, DegreeCapExceeded) as exc:
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        report["exit_code"] = 1
    return jsonable(report), report["exit_code"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="reeslike", description="Rees-like algebras of polynomial ideals")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--ideal", help='comma-separated generators, e.g. "x1^2, x1*x2"')
    ap.add_argument("--ring", help='e.g. "x1:1, x2:1, x3:2 over QQ" or "... over FF 3"')
    ap.add_argument("--field", help="QQ or 'FF p' when the ring is inferred from the ideal")
    ap.add_argument("--file", help="job file with ring:/ideal: lines")
    ap.add_argument("--order", help="lex, grevlex or wlex (gb)")
    ap.add_argument("--mode", help="invariants: formula|computed|both; jacobian: ideal; standardize: harness")
    ap.add_argument("--signs", help="sign pattern such as '+,-,+'")
    ap.add_argument("--kind", help="standardize: step or prime")
    ap.add_argument("--vars", help="standardize: variables to replace (prime)")
    ap.add_argument("--sigma", help="seminormal: odd exponent, default 3")
    ap.add_argument("--bound", help="seminormal: degree bound of the search")
    ap.add_argument("--id", help="examples: run one example")
    ap.add_argument("--json", action="store_true", help="print the JSON report")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = {}
    code = None
    if args.file:
        try:
            job.update(read_job(args.file))
        except InputError as exc:
            report = {"command": args.command, "ok": False, "exit_code": 1, "ring": None, "ideal": None,
                      "result": None, "error": {"kind": "InputError", "message": str(exc)}}
            code = 1
    if code is None:
        for key in ("ideal", "ring", "field", "order", "mode", "signs", "kind", "vars", "sigma", "bound", "id"):
            val = getattr(args, key)
            if val is not None:
                job[key] = val
        report, code = run(args.command, job)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        if report.get("ring"):
            print(f"ring: {report['ring']}")
        if report.get("ideal"):
            print(f"ideal: {', '.join(report['ideal'])}")
        if report.get("result") is not None:
            print(render_text(report["result"]))
        if report.get("error"):
            print(f"error: {report['error']['message']}", file=sys.stderr)
        print(f"status: {'ok' if code == 0 else 'FAILED'} (exit {code})")
    return code


if __name__ == "__main__":
    sys.exit(main())
