"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 solver budget exhausted
(result is a lower bound, not exact), 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import constructions, formulas, solver, suites
from .cache import ResultCache, cache_key
from .vectors import Profile, SignedVector, VectorFamily, enumerate_all

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BUDGET = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to the invalid-input code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", metavar="PATH", help="JSON result cache file")
    common.add_argument("--seed", type=int, help="seed for randomized checks")
    common.add_argument("--budget", type=float, help="time budget in seconds")
    common.add_argument(
        "--format",
        choices=["json", "csv"],
        dest="fmt",
        help="machine-readable output format (default: plain text)",
    )
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    return common


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="signedfam", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list a whole vector class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("solve", parents=[common], help="exact extremal family size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--target", choices=["g", "m"], default="g")
    p.add_argument(
        "--no-shift-pruning",
        action="store_true",
        help="search all families instead of shifted representatives",
    )
    p.add_argument(
        "--deterministic",
        action="store_true",
        help="accepted for compatibility; runs are always deterministic",
    )
    p.add_argument("--witness-out", metavar="FILE", help="write an optimal family here")
    p.add_argument("--vertex-cap", type=int, default=solver.DEFAULT_VERTEX_CAP)

    p = sub.add_parser("construct", parents=[common], help="build a named family")
    p.add_argument("kind", choices=["ekr", "split", "extend", "xy"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--plus-prefix", type=int, help="split: size of the plus side prefix")
    p.add_argument("--base", metavar="FILE", help="extend: family file to grow by one dimension")
    p.add_argument("--t", type=int, help="xy: window parameter")
    p.add_argument("--m", type=int, help="xy: window count parameter")
    p.add_argument("--side", choices=["x", "y"], help="xy: which class")

    p = sub.add_parser("classify", parents=[common], help="label vectors ending in +1")
    p.add_argument("--vector", help="single vector, e.g. '+0-+'")
    p.add_argument("--family", metavar="FILE", help="family file to partition and label")

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form")
    p.add_argument(
        "name",
        choices=[
            "family-size",
            "g-closed-l1",
            "g-bounds",
            "g-ekr",
            "increment",
            "p-split",
            "p-increment",
            "n0",
            "xy-sizes",
            "ratio-alpha",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("verify", parents=[common], help="run one verification suite")
    p.add_argument("suite", help="suite name, or 'list' to show the available names")
    p.add_argument("--trials", type=int, help="randomized suites: number of trials")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)

    p = sub.add_parser("report", parents=[common], help="run several suites together")
    p.add_argument(
        "--suites",
        default="default",
        help="comma-separated names, 'default' (all but eq111), or 'all'",
    )
    p.add_argument("--trials", type=int)

    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require(args, names: list[str]) -> None:
    missing = [name for name in names if getattr(args, name.replace("-", "_")) is None]
    if missing:
        raise ValueError(f"missing required arguments: {', '.join('--' + m for m in missing)}")


def _cmd_enumerate(args) -> int:
    fam = enumerate_all(Profile(args.n, args.k, args.l))
    _emit(fam.to_text(), args.out)
    return EXIT_OK


def _cmd_solve(args) -> int:
    profile = Profile(args.n, args.k, args.l)
    pruning = False if args.no_shift_pruning else None
    budget = args.budget if args.budget is not None else 60.0
    cache = ResultCache(args.cache) if args.cache else None

    effective_pruning = (
        pruning if pruning is not None else (args.target == "g" and profile.is_g_profile)
    )
    key = cache_key(args.n, args.k, args.l, args.target, effective_pruning)
    cached = cache.get(key) if cache else None
    if cached and cached["status"] == solver.STATUS_EXACT and not args.witness_out:
        payload = {
            "n": args.n,
            "k": args.k,
            "l": args.l,
            "target": args.target,
            "value": cached["value"],
            "status": cached["status"],
            "cached": True,
        }
        _emit(_solve_text(payload, args.fmt), args.out)
        return EXIT_OK

    result = solver.solve_extremal(
        profile,
        args.target,
        budget=budget,
        shifted_pruning=pruning,
        vertex_cap=args.vertex_cap,
    )
    if cache:
        cache.put(key, result.value, result.status)
        cache.save()
    if args.witness_out and result.witness is not None:
        result.witness.save(args.witness_out)

    payload = {
        "n": args.n,
        "k": args.k,
        "l": args.l,
        "target": args.target,
        "value": result.value,
        "status": result.status,
        "nodes": result.nodes_explored,
        "elapsed_seconds": round(result.elapsed, 3),
        "cached": False,
    }
    _emit(_solve_text(payload, args.fmt), args.out)
    return EXIT_OK if result.is_exact else EXIT_BUDGET


def _solve_text(payload: dict, fmt: Optional[str]) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        keys = list(payload)
        return ",".join(keys) + "\n" + ",".join(str(payload[k]) for k in keys) + "\n"
    lines = [f"{key}: {value}" for key, value in payload.items()]
    return "\n".join(lines) + "\n"


def _cmd_construct(args) -> int:
    profile = Profile(args.n, args.k, args.l)
    if args.kind == "ekr":
        fam = constructions.ekr_family(profile)
    elif args.kind == "split":
        x = args.plus_prefix
        if x is None:
            x = formulas.p_split(args.n, args.k, args.l).argmax
        fam = constructions.split_family(profile, range(1, x + 1))
    elif args.kind == "extend":
        if args.base:
            base = VectorFamily.load(args.base)
            if (base.profile.n, base.profile.k, base.profile.l) != (args.n, args.k, args.l):
                raise ValueError(
                    f"base family is over ({base.profile.n},{base.profile.k},{base.profile.l}), "
                    f"not ({args.n},{args.k},{args.l})"
                )
        else:
            base = constructions.ekr_family(profile)
        fam = constructions.inductive_extend(base)
    else:
        _require(args, ["t", "m", "side"])
        fam = constructions.family_xy_tm(profile, args.t, args.m, args.side)
    _emit(fam.to_text(), args.out)
    return EXIT_OK


def _label_dict(v: SignedVector) -> dict:
    label = constructions.classify_vector(v)
    out = {"vector": str(v), "kind": label.kind}
    if label.kind == "B1":
        out.update({"t": label.t, "m": label.m, "in_b1_prime": label.in_b1_prime})
    elif label.kind == "B2":
        out.update({"j": label.j, "jprime": label.jprime, "cond12": label.cond12})
    return out


def _cmd_classify(args) -> int:
    rows: list[dict] = []
    if args.vector:
        rows.append(_label_dict(SignedVector.parse(args.vector)))
    elif args.family:
        fam = VectorFamily.load(args.family)
        minus, zero, plus = constructions.partition_by_last(fam)
        rows.append(
            {
                "vector": "(partition)",
                "kind": f"last=-1:{len(minus)} last=0:{len(zero)} last=+1:{len(plus)}",
            }
        )
        rows.extend(_label_dict(v) for v in plus)
    else:
        raise ValueError("classify needs --vector or --family")

    if args.fmt == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        text = "".join(
            row["vector"]
            + ": "
            + row["kind"]
            + "".join(f" {k}={v}" for k, v in row.items() if k not in ("vector", "kind"))
            + "\n"
            for row in rows
        )
    _emit(text, args.out)
    return EXIT_OK


def _cmd_formula(args) -> int:
    name = args.name
    if name == "family-size":
        _require(args, ["n", "k", "l"])
        payload = {"value": formulas.family_size(args.n, args.k, args.l)}
    elif name == "g-closed-l1":
        _require(args, ["n", "k"])
        payload = {"value": formulas.g_closed_l1(args.n, args.k)}
    elif name == "g-bounds":
        _require(args, ["n", "k", "l"])
        lower, upper = formulas.g_bounds(args.n, args.k, args.l)
        payload = {"lower": lower, "upper": upper}
    elif name == "g-ekr":
        _require(args, ["n", "k", "l"])
        value = formulas.g_ekr_value(args.n, args.k, args.l)
        payload = {"value": value.value, "in_range": value.in_range}
    elif name == "increment":
        _require(args, ["n", "k", "l"])
        inc = formulas.increment_value(args.n, args.k, args.l)
        payload = {
            "value": inc.value,
            "applicable": inc.applicable,
            "conjectured_threshold": str(inc.conjectured_threshold),
        }
    elif name == "p-split":
        _require(args, ["n", "k", "l"])
        value, argmax = formulas.p_split(args.n, args.k, args.l)
        payload = {"value": value, "argmax": argmax}
    elif name == "p-increment":
        _require(args, ["n", "k", "l"])
        rep = formulas.p_increment_report(args.n, args.k, args.l)
        payload = {
            "increment": rep.increment,
            "candidate_lower_l": rep.candidate_lower_l,
            "candidate_lower_k": rep.candidate_lower_k,
            "average": str(rep.average),
            "equality_holds": rep.equality_holds,
            "ge_average_holds": rep.ge_average_holds,
            "le_min_holds": rep.le_min_holds,
        }
    elif name == "n0":
        _require(args, ["k", "l"])
        payload = {"value": formulas.n0_threshold(args.k, args.l)}
    elif name == "xy-sizes":
        _require(args, ["n", "k", "l", "t", "m"])
        x_size, y_size = formulas.xy_family_sizes(args.n, args.k, args.l, args.t, args.m)
        payload = {"x_size": x_size, "y_size": y_size}
    else:
        _require(args, ["n", "k", "l", "t", "m"])
        ra = formulas.ratio_and_alpha(args.n, args.k, args.l, args.t, args.m)
        payload = {
            "ratio": str(ra.ratio),
            "alpha": str(ra.alpha),
            "coefficient": str(ra.coefficient),
        }

    if args.fmt == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "".join(f"{key}: {value}\n" for key, value in payload.items())
    _emit(text, args.out)
    return EXIT_OK


def _suite_params(args) -> dict:
    params: dict = {}
    if args.seed is not None:
        params["seed"] = args.seed
    if args.budget is not None:
        params["budget"] = args.budget
    if getattr(args, "trials", None) is not None:
        params["trials"] = args.trials
    for name in ("n", "k", "l"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    return params


def _report_text(reports: list) -> str:
    lines = []
    for report in reports:
        passed, failed, info = report.counts
        lines.append(
            f"[{'PASS' if report.ok else 'FAIL'}] suite {report.suite}: "
            f"{passed} passed, {failed} failed, {info} informational"
        )
        for case in report.cases:
            status = "pass" if case.passed else ("info" if not case.required else "FAIL")
            lines.append(f"  {status:4} {case.case}: expected {case.expected}; got {case.actual}")
    return "\n".join(lines) + "\n"


def _emit_reports(reports: list, fmt: Optional[str], out: Optional[str]) -> None:
    if fmt == "json":
        payload = {
            "ok": all(r.ok for r in reports),
            "reports": [r.to_json_dict() for r in reports],
        }
        _emit(json.dumps(payload, indent=2) + "\n", out)
    elif fmt == "csv":
        chunks = []
        for i, report in enumerate(reports):
            text = report.to_csv_text()
            if i:
                text = text.split("\n", 1)[1]
            chunks.append(text)
        _emit("".join(chunks), out)
    else:
        _emit(_report_text(reports), out)


def _cmd_verify(args) -> int:
    if args.suite == "list":
        _emit("\n".join(suites.suite_names()) + "\n", args.out)
        return EXIT_OK
    report = suites.run_suite(args.suite, **_suite_params(args))
    _emit_reports([report], args.fmt, args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY_FAIL


def _cmd_report(args) -> int:
    if args.suites == "all":
        names = suites.suite_names()
    elif args.suites == "default":
        names = [name for name in suites.suite_names() if name != "eq111"]
    else:
        names = [name.strip() for name in args.suites.split(",") if name.strip()]
    params = _suite_params(args)
    reports = []
    for name in names:
        kwargs = dict(params)
        if name not in ("lemma3",):
            kwargs.pop("trials", None)
        if name not in ("lemma3", "precedes", "solver-oracle"):
            kwargs.pop("seed", None)
        if name not in ("theorem1", "eq111", "bounds"):
            kwargs.pop("budget", None)
        kwargs.pop("n", None), kwargs.pop("k", None), kwargs.pop("l", None)
        reports.append(suites.run_suite(name, **kwargs))
    _emit_reports(reports, args.fmt, args.out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY_FAIL


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "solve": _cmd_solve,
    "construct": _cmd_construct,
    "classify": _cmd_classify,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
