"""Command-line front end.

Exit codes: 0 for success / true verdicts, 1 for false verdicts (for
example a negative cut-check), 2 for input or usage errors.  ``--json``
emits a single JSON object on standard output; the human-readable output is
a pure function of that object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from fractions import Fraction

from .combinatorics import Multipartition, validate_params
from .cut import (
    CutSpec,
    InvalidCutError,
    admits_cut,
    diagonal_sets,
    lambda_set,
    split,
    split_pair,
    subquotient_graded_dim,
    verify_tableau_bijection,
)
from .exactpos import format_position
from .graded import GradedPoly, ext_table_from_json, ext_table_to_json, kunneth_combine
from .io_render import Problem, ProblemError, load_problem_file, render_russian, render_theta_diagram
from .loading import charged_loading, theta_dominates
from .tableaux import enumerate_sstd, tableau_degree


class InputError(Exception):
    pass


def _thread_cap() -> int:
    """Parallelism cap from CHERECUT_THREADS (0 = auto).  The current
    implementation is single-threaded, so any cap is honoured."""
    raw = os.environ.get("CHERECUT_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InputError(f"CHERECUT_THREADS must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise InputError("CHERECUT_THREADS must be >= 0")
    return cap


def _load(args: argparse.Namespace, check: bool = True) -> Problem:
    if not args.input:
        raise InputError("--input is required for this command")
    try:
        problem = load_problem_file(args.input)
    except (OSError, json.JSONDecodeError, ProblemError) as exc:
        raise InputError(str(exc)) from exc
    if check and (violation := validate_params(problem.params)) is not None:
        raise InputError(f"invalid parameters: {violation}")
    return problem


def _named(problem: Problem, name: str) -> Multipartition:
    if name not in problem.multipartitions:
        raise InputError(
            f"no multipartition named {name!r}; have "
            f"{sorted(problem.multipartitions)}"
        )
    return problem.multipartitions[name]


def _pair(problem: Problem, args: argparse.Namespace) -> tuple[str, str]:
    if args.left and args.right:
        return args.left, args.right
    names = list(problem.multipartitions)
    if len(names) == 2 and not args.left and not args.right:
        return names[0], names[1]
    raise InputError(
        "specify --left and --right (the document does not contain exactly "
        "two multipartitions)"
    )


def _cut(problem: Problem, args: argparse.Namespace) -> CutSpec:
    mode = args.mode or (problem.cut.mode if problem.cut else "lenient")
    if args.a is not None:
        try:
            return CutSpec.from_rational(Fraction(args.a), mode)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad cut abscissa {args.a!r}: {exc}") from exc
    if problem.cut is not None:
        return CutSpec(problem.cut.a, mode)
    raise InputError("no cut given: pass --a or put a \"cut\" in the document")


def _poly_arg(text: str, flag: str) -> GradedPoly:
    try:
        return GradedPoly.from_json(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(f"{flag}: {exc}") from exc


def _mp_json(mp: Multipartition) -> list[list[int]]:
    return [list(comp) for comp in mp.components]


# ---------------------------------------------------------------------------
# command handlers: each returns (exit_code, json_result, human_lines)


def cmd_validate(args) -> tuple[int, dict, list[str]]:
    problem = _load(args, check=False)
    violation = validate_params(problem.params)
    ok = violation is None
    result = {"command": "validate", "ok": ok, "violation": violation}
    return (0 if ok else 1), result, ["ok" if ok else f"violation: {violation}"]


def cmd_loading(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    if not args.shape:
        raise InputError("--shape is required")
    mp = _named(problem, args.shape)
    entries = charged_loading(mp, problem.params).entries
    result = {
        "command": "loading",
        "shape": args.shape,
        "entries": [
            {"pos": format_position(e.pos), "res": e.res, "node": list(e.node)}
            for e in entries
        ],
    }
    lines = [f"{e['pos']} : {e['res']}" for e in result["entries"]]
    return 0, result, lines


def cmd_dominance(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    lname, rname = _pair(problem, args)
    lam = _named(problem, lname)
    mu = _named(problem, rname)
    try:
        verdict = theta_dominates(lam, mu, problem.params)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = {
        "command": "dominance",
        "left": lname,
        "right": rname,
        "dominates": verdict,
    }
    return (0 if verdict else 1), result, [
        f"{lname} {'theta-dominates' if verdict else 'does not theta-dominate'} {rname}"
    ]


def cmd_sstd(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    if not args.shape or not args.weight:
        raise InputError("--shape and --weight are required")
    lam = _named(problem, args.shape)
    mu = _named(problem, args.weight)
    try:
        tableaux = enumerate_sstd(lam, mu, problem.params)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    degrees = [tableau_degree(t, problem.params) for t in tableaux]
    hist: dict[int, int] = {}
    for d in degrees:
        hist[d] = hist.get(d, 0) + 1
    result = {
        "command": "sstd",
        "shape": args.shape,
        "weight": args.weight,
        "count": len(tableaux),
        "degrees": {str(k): hist[k] for k in sorted(hist)},
    }
    lines = [f"count: {len(tableaux)}"]
    lines += [f"degree {k}: {hist[k]}" for k in sorted(hist)]
    if args.show_tableaux:
        result["tableaux"] = [
            [
                {"node": list(nd), "pos": format_position(e.pos), "res": e.res}
                for nd, e in t.assignment().items()
            ]
            for t in tableaux
        ]
        for i, t in enumerate(tableaux):
            lines.append(f"tableau {i} (degree {degrees[i]}):")
            lines.extend("  " + line for line in str(t).splitlines())
    return 0, result, lines


def cmd_cut_check(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    cut = _cut(problem, args)
    lname, rname = _pair(problem, args)
    lam, mu = _named(problem, lname), _named(problem, rname)
    try:
        verdict = admits_cut(lam, mu, cut, problem.params)
    except (ValueError, InvalidCutError) as exc:
        raise InputError(str(exc)) from exc
    dec = diagonal_sets(lam, cut, problem.params)
    result = {
        "command": "cut-check",
        "left": lname,
        "right": rname,
        "a": str(cut.a.base),
        "mode": cut.mode,
        "admits": verdict,
        "band_size": len(dec.I),
        "red_in_band": list(dec.red_in_band),
    }
    lines = ["admits" if verdict else "does not admit"]
    if dec.red_in_band:
        lines.append(
            f"note: red line(s) of component(s) {list(dec.red_in_band)} lie "
            "inside the diagonal band"
        )
    return (0 if verdict else 1), result, lines


def cmd_cut_split(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    cut = _cut(problem, args)
    p = problem.params
    pieces: dict[str, dict] = {}
    try:
        names = (
            [args.shape]
            if args.shape
            else list(problem.multipartitions)
        )
        for name in names:
            mp = _named(problem, name)
            left, right = split(mp, cut, p)
            pieces[name] = {
                "left": _mp_json(left),
                "right": _mp_json(right),
                "n_left": left.size(),
                "n_right": right.size(),
            }
        if len(names) == 2 and not args.shape:
            # exercise the pair contract so size mismatches are reported
            split_pair(
                problem.multipartitions[names[0]],
                problem.multipartitions[names[1]],
                cut,
                p,
            )
    except (ValueError, InvalidCutError) as exc:
        raise InputError(str(exc)) from exc
    result = {
        "command": "cut-split",
        "a": str(cut.a.base),
        "mode": cut.mode,
        "pieces": pieces,
    }
    lines = []
    for name, piece in pieces.items():
        lines.append(f"{name}^L = {piece['left']}  (n = {piece['n_left']})")
        lines.append(f"{name}^R = {piece['right']}  (n = {piece['n_right']})")
    return 0, result, lines


def cmd_lambda_set(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    cut = _cut(problem, args)
    if not args.shape:
        raise InputError("--shape is required")
    lam = _named(problem, args.shape)
    try:
        cs = lambda_set(lam, cut, problem.params)
    except InvalidCutError as exc:
        raise InputError(str(exc)) from exc
    result = {
        "command": "lambda-set",
        "shape": args.shape,
        "a": str(cut.a.base),
        "members": [_mp_json(mp) for mp in cs.members],
        "E_size": len(cs.E),
        "F_size": len(cs.F),
    }
    lines = [f"|Lambda| = {len(cs.members)}, |E| = {len(cs.E)}, |F| = {len(cs.F)}"]
    lines += [str(mp) for mp in cs.members]
    return 0, result, lines


def cmd_cut_verify(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    cut = _cut(problem, args)
    lname, rname = _pair(problem, args)
    mu, nu = _named(problem, lname), _named(problem, rname)
    try:
        report = verify_tableau_bijection(mu, nu, cut, problem.params)
    except (ValueError, InvalidCutError) as exc:
        raise InputError(str(exc)) from exc
    result = {
        "command": "cut-verify",
        "left": lname,
        "right": rname,
        "a": str(cut.a.base),
        "bijective": report.bijective,
        "degree_additive": report.degree_additive,
        "count": report.count,
        "count_left": report.count_left,
        "count_right": report.count_right,
    }
    ok = report.ok()
    lines = [
        f"bijective: {report.bijective}",
        f"degree additive: {report.degree_additive}",
        f"counts: {report.count} = {report.count_left} x {report.count_right}",
    ]
    return (0 if ok else 1), result, lines


def cmd_grdim(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    cut = _cut(problem, args)
    if not args.shape:
        raise InputError("--shape is required")
    lam = _named(problem, args.shape)
    p = problem.params
    try:
        cs = lambda_set(lam, cut, p)
        dim = subquotient_graded_dim(cs, p)
        lam_l, lam_r = split(lam, cut, p)
        cs_l = lambda_set(lam_l, cut, replace(p, n=lam_l.size()))
        cs_r = lambda_set(lam_r, cut, replace(p, n=lam_r.size()))
        dim_l = subquotient_graded_dim(cs_l, replace(p, n=lam_l.size()))
        dim_r = subquotient_graded_dim(cs_r, replace(p, n=lam_r.size()))
    except InvalidCutError as exc:
        raise InputError(str(exc)) from exc
    factorizes = dim == dim_l * dim_r
    result = {
        "command": "grdim",
        "shape": args.shape,
        "a": str(cut.a.base),
        "dim": dim.to_json(),
        "dim_left": dim_l.to_json(),
        "dim_right": dim_r.to_json(),
        "factorizes": factorizes,
    }
    lines = [
        f"dim = {dim}",
        f"dim_left = {dim_l}",
        f"dim_right = {dim_r}",
        f"factorizes: {factorizes}",
    ]
    return (0 if factorizes else 1), result, lines


def cmd_factor(args) -> tuple[int, dict, list[str]]:
    if args.left_poly is None or args.right_poly is None:
        raise InputError("--left and --right polynomial JSON are required")
    f = _poly_arg(args.left_poly, "--left")
    g = _poly_arg(args.right_poly, "--right")
    prod = f * g
    result = {"command": "factor", "product": prod.to_json()}
    return 0, result, [str(prod)]


def cmd_kunneth(args) -> tuple[int, dict, list[str]]:
    if args.left_poly is None or args.right_poly is None:
        raise InputError("--left and --right Ext-table JSON are required")
    try:
        tl = ext_table_from_json(json.loads(args.left_poly))
        tr = ext_table_from_json(json.loads(args.right_poly))
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    combined = kunneth_combine(tl, tr)
    result = {"command": "kunneth", "table": ext_table_to_json(combined)}
    lines = [f"Ext^{k}: {poly}" for k, poly in combined.items()]
    return 0, result, lines or ["(empty table)"]


def cmd_render(args) -> tuple[int, dict, list[str]]:
    problem = _load(args)
    p = problem.params
    cut = None
    if args.a is not None or problem.cut is not None:
        cut = _cut(problem, args)
    if args.kind == "russian":
        if not args.shape:
            raise InputError("--shape is required")
        fig = render_russian(_named(problem, args.shape), cut, p)
    else:
        if not args.shape or not args.weight:
            raise InputError("--shape and --weight are required for a theta diagram")
        tableaux = enumerate_sstd(
            _named(problem, args.shape), _named(problem, args.weight), p
        )
        if not tableaux:
            raise InputError("no semistandard tableaux of this shape and weight")
        fig = render_theta_diagram(tableaux[0], cut, p)
    svg = fig.to_svg()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        result = {"command": "render", "output": args.output, "bytes": len(svg)}
        return 0, result, [f"wrote {args.output} ({len(svg)} bytes)"]
    result = {"command": "render", "svg": svg}
    return 0, result, [svg]


_HANDLERS = {
    "validate": cmd_validate,
    "loading": cmd_loading,
    "dominance": cmd_dominance,
    "sstd": cmd_sstd,
    "cut-check": cmd_cut_check,
    "cut-split": cmd_cut_split,
    "lambda-set": cmd_lambda_set,
    "cut-verify": cmd_cut_verify,
    "grdim": cmd_grdim,
    "factor": cmd_factor,
    "kunneth": cmd_kunneth,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cherecut",
        description="Loadings, dominance, graded tableaux and diagonal cuts "
        "of multipartitions, with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", help="problem JSON document")
        sp.add_argument("--output", help="output file (render)")
        sp.add_argument("--json", action="store_true", help="emit JSON on stdout")
        sp.add_argument("--shape", help="name of the shape multipartition")
        sp.add_argument("--weight", help="name of the weight multipartition")
        sp.add_argument("--left", dest="left", help="name of the left multipartition")
        sp.add_argument("--right", dest="right", help="name of the right multipartition")
        sp.add_argument("--a", help="cut abscissa as an exact rational, e.g. 26/5")
        sp.add_argument("--mode", choices=["strict", "lenient"], help="cut mode")
        if name in ("factor", "kunneth"):
            # polynomial JSON is passed directly on these commands
            sp.set_defaults(left_poly=None, right_poly=None)
        if name == "render":
            sp.add_argument(
                "--kind", choices=["russian", "theta"], default="russian"
            )
        if name == "sstd":
            sp.add_argument("--show-tableaux", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("factor", "kunneth"):
        args.left_poly, args.right_poly = args.left, args.right
    if not hasattr(args, "show_tableaux"):
        args.show_tableaux = False
    try:
        _thread_cap()
        code, result, lines = _HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
