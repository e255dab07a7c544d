"""Command-line front end.

Exit codes: 0 success, 1 usage or configuration error, 2 a mathematical
cross-check failed. Data goes to stdout (or --out), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import charsums, dickson, necessary, permutation
from .exceptions import DicksonLabError, GuardExceeded
from .field import FieldElement, FieldSpec, make_field
from .suites import SUITES, SuiteOptions, run_suites

SURVEY_GUARD = 128

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int
    e: int = 1
    n_max: int | None = None
    method: str | None = None
    fmt: str = "json"
    out: str | None = None
    force: bool = False
    modulus: tuple[int, ...] | None = None

    def field(self) -> FieldSpec:
        return make_field(self.p, self.e, self.modulus, force=self.force)


@dataclass
class SurveyRow:
    n: int
    is_pp: bool
    agree_power_sum: bool
    agree_two_to_one: bool | None
    filter_overall: bool
    filters: dict[str, tuple[bool, bool]]
    reduced_index: int

    def flat(self) -> dict:
        out = {
            "n": self.n,
            "is_pp": self.is_pp,
            "agree_power_sum": self.agree_power_sum,
            "agree_two_to_one": self.agree_two_to_one,
            "filter_overall": self.filter_overall,
        }
        for name, (app, ok) in self.filters.items():
            out[f"{name}_applicable"] = app
            out[f"{name}_passed"] = ok
        out["reduced_index"] = self.reduced_index
        return out


# ---------------------------------------------------------------------------
# output


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_rows(rows: list[dict], fmt: str, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        names = list(rows[0]) if rows else []
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(names)
        for r in rows:
            w.writerow([_cell(r[k]) for k in names])
        return buf.getvalue()
    return json.dumps({**meta, "rows": rows}, indent=2) + "\n"


def emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _guard(spec: FieldSpec, limit: int, cfg: RunConfig, what: str) -> None:
    if spec.q > limit and not cfg.force:
        raise GuardExceeded(f"{what} is limited to q <= {limit}; pass --force to override")


# ---------------------------------------------------------------------------
# commands


def cmd_field_info(cfg: RunConfig) -> tuple[dict, int]:
    spec = cfg.field()
    doc = spec.to_json()
    doc["generator"] = list(spec.coeffs(spec.generator))
    doc["V_size"] = len(permutation.build_V(spec)) if spec.p != 2 else None
    return doc, EXIT_OK


def cmd_eval(cfg: RunConfig, n: int, x_text: str, a_text: str, family: str, k: int) -> tuple[list[dict], int]:
    spec = cfg.field()
    x = spec.element(spec.parse(x_text))
    a = spec.element(spec.parse(a_text))
    method = cfg.method or "all"
    rows = []
    fam = dickson.FamilyTag(dickson.Family(family), k)
    if fam != dickson.E_REVERSED:
        v = dickson.eval_direct(dickson.EvalRequest(n, a, x, fam))
        return [{"method": "direct", "family": family, "k": k, "n": n, "value": str(v)}], EXIT_OK
    routes = {
        "direct": lambda: dickson.eval_direct(dickson.EvalRequest(n, a, x)),
    }
    if a == 1:
        routes["recursive"] = lambda: dickson.eval_E1_recursive(n, x)
        routes["genfun"] = lambda: dickson.genfun_coeffs(x, n)[n]
        if spec.p != 2:
            routes["functional"] = lambda: dickson.eval_E1_functional(n, x)
            routes["via_f"] = lambda: dickson.eval_E1_via_f(n, x)
    if method != "all":
        if method not in routes:
            raise UsageError(f"method {method!r} is not available for this input")
        routes = {method: routes[method]}
    values = {}
    for name, fn in routes.items():
        try:
            values[name] = fn()
        except ValueError as exc:  # n too large for this route
            if method != "all":
                raise UsageError(str(exc)) from exc
            print(f"skipped {name}: {exc}", file=sys.stderr)
    if not values:
        raise UsageError(f"no evaluation route handles n = {n} for this input")
    for name, v in values.items():
        rows.append({"method": name, "family": family, "k": k, "n": n, "value": str(v)})
    agree = len(set(values.values())) <= 1
    return rows, EXIT_OK if agree else EXIT_VERIFY


def cmd_pp(cfg: RunConfig, n: int) -> tuple[list[dict], int]:
    spec = cfg.field()
    images = dickson.e1_sequences(spec, n)
    imgs = [images[x][n] for x in range(spec.q)]
    methods = ["exhaustive", "power_sum"] + (["two_to_one"] if spec.p != 2 else [])
    if cfg.method and cfg.method != "all":
        if cfg.method not in methods:
            raise UsageError(f"method {cfg.method!r} is not available here")
        methods = [cfg.method]
    rows = []
    for m in methods:
        if m == "exhaustive":
            v = permutation.verdict_from_images(imgs, spec)
        elif m == "power_sum":
            v = permutation.power_sum_from_images(imgs, spec)
        else:
            v = permutation.check_thm23(n, spec)
        w = v.witness
        if isinstance(w, tuple):
            w = " ".join(str(z) for z in w)
        rows.append({"n": n, "method": m, "is_pp": v.is_pp, "witness": None if w is None else str(w)})
    agree = len({r["is_pp"] for r in rows}) == 1
    return rows, EXIT_OK if agree else EXIT_VERIFY


def survey_rows(spec: FieldSpec, n_max: int) -> list[SurveyRow]:
    q, p = spec.q, spec.p
    table = dickson.e1_sequences(spec, n_max)
    V = permutation.build_V(spec) if p != 2 else None
    rows = []
    for n in range(n_max + 1):
        imgs = [table[x][n] for x in range(q)]
        ex = permutation.verdict_from_images(imgs, spec).is_pp
        ps = permutation.power_sum_from_images(imgs, spec).is_pp
        tt = permutation.check_thm23(n, spec, V).is_pp == ex if V is not None else None
        if n >= 1:
            rep = necessary.filter_report(n, q, p)
            flags, overall = rep.flags(), rep.overall
        else:
            flags = {name: (False, False) for name in necessary.FILTERS}
            overall = True
        rows.append(SurveyRow(n, ex, ps == ex, tt, overall, flags, dickson.reduce_index(n, q)))
    return rows


def cmd_survey(cfg: RunConfig) -> tuple[list[dict], int]:
    spec = cfg.field()
    _guard(spec, SURVEY_GUARD, cfg, "survey")
    n_max = spec.q**2 - 1 if cfg.n_max is None else cfg.n_max
    rows = survey_rows(spec, n_max)
    code = EXIT_OK
    for r in rows:
        if r.is_pp and not r.filter_overall:
            print(f"soundness violation: E_{r.n}(1,x) is a PP but a filter rejects it", file=sys.stderr)
            code = EXIT_VERIFY
        if not r.agree_power_sum or r.agree_two_to_one is False:
            print(f"criteria disagree at n = {r.n}", file=sys.stderr)
            code = EXIT_VERIFY
    return [r.flat() for r in rows], code


def cmd_filters(cfg: RunConfig) -> tuple[list[dict], int]:
    spec = cfg.field()
    n_max = spec.q**2 - 1 if cfg.n_max is None else cfg.n_max
    rows = []
    for rep in necessary.filter_candidates(spec.q, spec.p, n_max):
        row = {"n": rep.n, "overall": rep.overall}
        for name, (app, ok) in rep.flags().items():
            row[f"{name}_applicable"] = app
            row[f"{name}_passed"] = ok
        rows.append(row)
    return rows, EXIT_OK


def cmd_sums(cfg: RunConfig) -> tuple[list[dict], int]:
    spec = cfg.field()
    if spec.p == 2:
        raise UsageError("sums need odd characteristic: the table divides by 2 and 4")
    _guard(spec, charsums.SUMS_GUARD, cfg, "sums")
    thm = charsums.sum_table_thm41(spec, force=True)
    brute = charsums.sum_table_bruteforce(spec, force=True)
    rows = []
    code = EXIT_OK
    for n in range(1, spec.q**2):
        a, b = thm.S(n), brute.S(n)
        rows.append({"n": n, "S_thm41": str(a), "S_brute": str(b), "match": a == b})
        if a != b:
            code = EXIT_VERIFY
    return rows, code


def cmd_verify(cfg: RunConfig, suites: list[str] | None) -> tuple[dict, int]:
    spec = cfg.field()
    _guard(spec, SURVEY_GUARD, cfg, "verify")
    results = run_suites(spec, suites, SuiteOptions())
    for r in results:
        line = f"[{r.status.upper():4}] {r.name:<11} checked={r.checked}"
        if r.counterexample:
            line += f" counterexample={json.dumps(r.counterexample)}"
        if r.note:
            line += f" ({r.note})"
        print(line, file=sys.stderr)
    ok = all(r.ok for r in results)
    doc = {"field": spec.to_json(), "passed": ok, "suites": [r.to_json() for r in results]}
    return doc, EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _modulus(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad modulus {text!r}; expected 'c0,c1,...,1'")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="characteristic")
    common.add_argument("--e", type=int, default=1, help="extension degree")
    common.add_argument("--modulus", type=_modulus, help="little-endian monic modulus, e.g. '1,0,1'")
    common.add_argument("--force", action="store_true", help="override size guards")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="json")
    common.add_argument("--out", help="write data here instead of stdout")

    parser = _Parser(prog="dicksonlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("field-info", parents=[common], help="describe the field")

    ev = sub.add_parser("eval", parents=[common], help="evaluate E_n(a, x) by every route")
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--x", required=True, help="element, e.g. '2', '1.2' or '1/4'")
    ev.add_argument("--a", default="1")
    ev.add_argument("--method", choices=("all", "direct", "recursive", "functional", "via_f", "genfun"))
    ev.add_argument("--family", default="E_reversed", choices=[f.value for f in dickson.Family])
    ev.add_argument("--k", type=int, default=1)

    pp = sub.add_parser("pp", parents=[common], help="permutation test of E_n(1, x)")
    pp.add_argument("--n", type=int, required=True)
    pp.add_argument("--method", choices=("all", "exhaustive", "power_sum", "two_to_one"))

    for name, helptext in (
        ("survey", "PP verdicts and filters for n = 0..n-max"),
        ("filters", "necessary-condition screen for n = 1..n-max"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--n-max", type=int)

    sub.add_parser("sums", parents=[common], help="sum table by both routes")

    vf = sub.add_parser("verify", parents=[common], help="run the property suites")
    vf.add_argument("--suite", action="append", choices=sorted(SUITES))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        p=args.p,
        e=args.e,
        n_max=getattr(args, "n_max", None),
        method=getattr(args, "method", None),
        fmt=args.fmt,
        out=args.out,
        force=args.force,
        modulus=args.modulus,
    )
    if cfg.n_max is not None and cfg.n_max < 0:
        print("error: --n-max must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "field-info":
            doc, code = cmd_field_info(cfg)
            emit(json.dumps(doc, indent=2) + "\n", cfg)
            return code
        if args.command == "verify":
            doc, code = cmd_verify(cfg, args.suite)
            emit(json.dumps(doc, indent=2) + "\n", cfg)
            return code
        if args.command == "eval":
            if args.n < 0:
                raise UsageError("--n must be >= 0")
            rows, code = cmd_eval(cfg, args.n, args.x, args.a, args.family, args.k)
        elif args.command == "pp":
            if args.n < 0:
                raise UsageError("--n must be >= 0")
            rows, code = cmd_pp(cfg, args.n)
        elif args.command == "survey":
            rows, code = cmd_survey(cfg)
        elif args.command == "filters":
            if cfg.n_max == 0:
                raise UsageError("--n-max must be >= 1 for filters")
            rows, code = cmd_filters(cfg)
        else:
            rows, code = cmd_sums(cfg)
    except (DicksonLabError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    meta = {"command": args.command, "field": cfg.field().to_json()}
    emit(render_rows(rows, cfg.fmt, meta), cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
