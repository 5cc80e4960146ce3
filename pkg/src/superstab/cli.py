"""Command-line front end.

Exit status: 0 on success (or all checks passing), 1 when a verification
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinat import Permutation, Subset, enumerate_subsets
from .envelope import GKMClass, NoSolution, find_representative, gkm_check, stab, verify_axioms
from .exactalg import Ring, parse_polynomial
from .fixedpoints import VERSIONS, dimension_d
from .rmatrix import (
    check_matrix,
    closed_form_R,
    geometric_R,
    render_matrix,
    yang_baxter_check,
    yang_baxter_mismatches,
    yangian_identification,
    yangian_identification_up_to_signs,
    yangian_mismatches,
    yangian_R,
)
from .suite import run_suite
from .weightfn import GuardViolation, format_weight, weight_function, weight_to_json


class UsageError(Exception):
    pass


def _emit(out, text: str):
    out.write(text.rstrip("\n") + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.verb} needs {', '.join(missing)}")


def _sigma(args) -> Permutation:
    if args.sigma is None:
        return Permutation.identity(args.n)
    try:
        sigma = Permutation.parse(args.sigma)
    except ValueError as exc:
        raise UsageError(f"bad --sigma: {exc}") from None
    if sigma.n != args.n:
        raise UsageError(f"--sigma has {sigma.n} entries but --n is {args.n}")
    return sigma


def _subset(args) -> Subset:
    try:
        I = Subset.parse(args.subset, args.n)
    except ValueError as exc:
        raise UsageError(f"bad --subset: {exc}") from None
    if args.k is not None and args.k != I.k:
        raise UsageError(f"--k {args.k} disagrees with the subset size {I.k}")
    return I


def _versions(args):
    return [args.r] if args.r else list(VERSIONS)


# -- verbs ---------------------------------------------------------------------


def cmd_weight(args, out) -> int:
    _need(args, "r", "n", "subset")
    W = weight_function(args.r, args.n, _sigma(args), _subset(args))
    if args.format == "json":
        _emit(out, _dump(weight_to_json(W, expanded=args.n <= 3)))
    else:
        _emit(out, format_weight(W, args.format))
    return 0


def _class(args):
    _need(args, "r", "n", "subset")
    I = _subset(args)
    return stab(args.r, args.n, I.k, _sigma(args), I)


def cmd_restrict(args, out) -> int:
    c = _class(args)
    if args.format == "json":
        _emit(out, _dump(c.gkm.to_json()))
    elif args.format == "latex":
        body = ",\\\\\n".join(p.to_latex() for _, p in c.gkm.ordered())
        _emit(out, "\\Big(" + body + "\\Big)")
    else:
        for J, p in c.gkm.ordered():
            _emit(out, f"{J}: {p}")
    return 0


def cmd_axioms(args, out) -> int:
    c = _class(args)
    report = verify_axioms(c)
    if args.format == "json":
        _emit(out, _dump(report.to_json()))
    else:
        for name, res in report.results.items():
            _emit(out, f"{name}: {'pass' if res.passed else 'FAIL'}  {json.dumps(res.witness, sort_keys=True)}")
    return 0 if report.passed else 1


def cmd_gkm(args, out) -> int:
    _need(args, "n", "tuple")
    ring = Ring.equivariant(args.n)
    try:
        polys = [parse_polynomial(text, ring) for text in args.tuple.split(";")]
    except ValueError as exc:
        raise UsageError(f"bad --tuple: {exc}") from None
    k = args.k
    if k is None:
        candidates = [k for k in range(args.n + 1) if len(enumerate_subsets(args.n, k)) == len(polys)]
        if len(candidates) != 1:
            raise UsageError("cannot infer k from the tuple length; pass --k")
        k = candidates[0]
    try:
        c = GKMClass.from_tuple(args.n, k, polys)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok, bad = gkm_check(c)
    if args.format == "json":
        _emit(out, _dump({"pass": ok, "violations": [[I.key(), J.key()] for I, J in bad]}))
    else:
        _emit(out, "GKM condition holds" if ok else "violations: " + ", ".join(f"({I}, {J})" for I, J in bad))
    return 0 if ok else 1


def cmd_rmatrix(args, out) -> int:
    _need(args, "r")
    kind = args.kind
    if kind == "geometric":
        _need(args, "n", "a")
        M = geometric_R(args.r, args.n, _sigma(args), args.a)
        _emit(out, render_matrix(M, args.format, args.n))
        return 0
    if kind == "closed":
        R = closed_form_R(args.r)
    elif kind == "closed-check":
        R = check_matrix(closed_form_R(args.r))
    elif kind == "yangian":
        R = yangian_R(args.r)[0]
    else:
        R = yangian_R(args.r)[1]
    if args.format == "json":
        _emit(out, _dump(R.to_json()))
    else:
        _emit(out, render_matrix(R.entries, args.format, 2 if args.format == "text" else None))
    return 0


def cmd_yangbaxter(args, out) -> int:
    ok_all = True
    rows = []
    for r in _versions(args):
        for kind in ("geometric", "yangian") if args.kind == "all" else (args.kind,):
            R = closed_form_R(r) if kind == "geometric" else yangian_R(r)[0]
            ok = yang_baxter_check(R, literal=args.literal)
            ok_all &= ok
            bad = [] if ok else yang_baxter_mismatches(R, literal=args.literal)
            rows.append({"r": r, "matrix": kind, "pass": ok, "mismatches": bad[:8]})
    if args.format == "json":
        _emit(out, _dump(rows))
    else:
        for row in rows:
            extra = "" if row["pass"] else f"  first mismatching entries {row['mismatches']}"
            _emit(out, f"{row['matrix']:9s} r={row['r']}: {'pass' if row['pass'] else 'FAIL'}{extra}")
    return 0 if ok_all else 1


def cmd_yangian_compare(args, out) -> int:
    rows = []
    for r in _versions(args):
        rows.append(
            {
                "r": r,
                "pass": yangian_identification(r),
                "mismatches": yangian_mismatches(r),
                "pass_after_sign_conjugation": yangian_identification_up_to_signs(r),
            }
        )
    if args.format == "json":
        _emit(out, _dump(rows))
    else:
        for row in rows:
            line = f"r={row['r']}: {'pass' if row['pass'] else 'FAIL'}"
            if not row["pass"]:
                line += f" (entries {row['mismatches']} differ; after conjugating by diag(1,1,-1,1): "
                line += ("pass" if row["pass_after_sign_conjugation"] else "FAIL") + ")"
            _emit(out, line)
    return 0 if all(row["pass"] for row in rows) else 1


def cmd_representative(args, out) -> int:
    c = _class(args)
    bound = args.degree_bound if args.degree_bound is not None else dimension_d(args.r, args.n, c.spec.k)
    try:
        f = find_representative(c.gkm, bound)
    except NoSolution as exc:
        _emit(out, f"no solution: {exc}")
        return 1
    if args.format == "json":
        _emit(out, _dump(f.to_json()))
    elif args.format == "latex":
        _emit(out, f.to_latex())
    else:
        _emit(out, str(f))
    return 0


def cmd_suite(args, out) -> int:
    def progress(res):
        if args.format == "text":
            _emit(out, res.line())
            out.flush()

    only = [int(x) for x in args.only.split(",")] if args.only else None
    results = run_suite(args.max_n, args.seed, only, progress)
    if args.format == "json":
        _emit(out, _dump([res.to_json() for res in results]))
    else:
        passed = sum(res.passed for res in results)
        _emit(out, f"{passed}/{len(results)} criteria pass")
    return 0 if all(res.passed for res in results) else 1


VERBS = {
    "weight": cmd_weight,
    "restrict": cmd_restrict,
    "axioms": cmd_axioms,
    "gkm": cmd_gkm,
    "rmatrix": cmd_rmatrix,
    "yangbaxter": cmd_yangbaxter,
    "yangian-compare": cmd_yangian_compare,
    "representative": cmd_representative,
    "suite": cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superstab", description="Super weight functions and super stable envelopes.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, *, need_class=True):
        p.add_argument("--r", choices=VERSIONS, help="version tag")
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int, help="subset size (inferred from --subset)")
        if need_class:
            p.add_argument("--sigma", help="permutation in one-line notation, e.g. 2,1,3")
            p.add_argument("--subset", help='comma list, or "none" for the empty set')
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        return p

    common(sub.add_parser("weight", help="print W^(r)_{sigma,I}"))
    common(sub.add_parser("restrict", help="restrictions at all fixed points"))
    common(sub.add_parser("axioms", help="check A0-A3 for the stab class"))
    p = common(sub.add_parser("gkm", help="check the GKM condition for a tuple"), need_class=False)
    p.add_argument("--tuple", help="components separated by ';' in subset order")
    p = common(sub.add_parser("rmatrix", help="closed-form, geometric or Yangian R-matrices"))
    p.add_argument("--a", type=int)
    p.add_argument("--kind", choices=("closed", "closed-check", "geometric", "yangian", "yangian-check"), default="closed")
    p = common(sub.add_parser("yangbaxter", help="verify the Yang-Baxter equation"), need_class=False)
    p.add_argument("--kind", choices=("geometric", "yangian", "all"), default="all")
    p.add_argument("--literal", action="store_true", help="Yangian: substitute u = z_i - z_j without grading")
    common(sub.add_parser("yangian-compare", help="compare Yangian and geometric R-check matrices"), need_class=False)
    p = common(sub.add_parser("representative", help="polynomial representative of a stab class"))
    p.add_argument("--degree-bound", type=int)
    p = sub.add_parser("suite", help="run the acceptance suite")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", help="comma list of criterion numbers")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return VERBS[args.verb](args, out)
    except (UsageError, GuardViolation, ValueError) as exc:
        print(f"superstab {args.verb}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
