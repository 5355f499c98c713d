"""Command-line entry point: ``bannai-ito verify`` and ``bannai-ito apply``.

Exit status: 0 when every selected identity passes, 1 when any fails,
2 for usage errors (bad flags, unknown suites or parameters, parse errors).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .exactring import as_rational
from .realization import KINDS, realize
from .suites import SUITES, suites_for, verify_suite
from .textform import ParseError, format_clifford_poly, parse_operator, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    realization: str = "b3-scalar"
    degree: int = 6
    suites: list[str] = field(default_factory=lambda: ["all"])
    params: dict[str, str] = field(default_factory=dict)
    out: str | None = None
    format: str = "json"
    jobs: int = 1
    timings: bool = True

    def resolved_suites(self) -> list[str]:
        available = suites_for(self.realization)
        if "all" in self.suites:
            return available
        chosen = []
        for name in self.suites:
            if name not in SUITES:
                raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
            if name not in available:
                raise UsageError(f"suite {name!r} does not apply to realization {self.realization}")
            if name not in chosen:
                chosen.append(name)
        return chosen

    def param_values(self) -> dict:
        try:
            return {k: as_rational(v) for k, v in self.params.items()}
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise UsageError(f"bad parameter value: {exc}") from None

    def validate(self) -> list[str]:
        if self.realization not in KINDS:
            raise UsageError(f"unknown realization {self.realization!r}")
        if self.degree < 0:
            raise UsageError("--degree must be >= 0")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        if self.format not in ("json", "markdown"):
            raise UsageError(f"unknown format {self.format!r}")
        suites = self.resolved_suites()
        try:
            realize(self.realization, self.param_values(), check_degree=None)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return suites

    def echo(self, suites: list[str]) -> dict:
        return {
            "realization": self.realization,
            "degree": self.degree,
            "suites": suites,
            "params": {k: str(as_rational(v)) for k, v in sorted(self.params.items())},
            "format": self.format,
            "jobs": self.jobs,
            "timings": self.timings,
        }


def _run_suite(kind: str, params: dict, suite: str, degree: int, timings: bool) -> dict:
    r = realize(kind, params, check_degree=None)
    return verify_suite(suite, r, degree, timings).to_dict()


def build_report(config: RunConfig) -> dict:
    suites = config.validate()
    params = config.param_values()
    if config.jobs > 1 and len(suites) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            futures = [pool.submit(_run_suite, config.realization, params, s, config.degree, config.timings) for s in suites]
            results = [f.result() for f in futures]
    else:
        # one realization shared across suites so memoised images are reused
        r = realize(config.realization, params, check_degree=None)
        results = [verify_suite(s, r, config.degree, config.timings).to_dict() for s in suites]
    passed = all(s["status"] == "pass" for s in results)
    return {
        "tool": "bannai-ito",
        "version": __version__,
        "config": config.echo(suites),
        "status": "pass" if passed else "fail",
        "summary": {
            "suites": len(results),
            "identities": sum(len(s["identities"]) for s in results),
            "failed": sum(i["status"] != "pass" for s in results for i in s["identities"]),
        },
        "suites": results,
    }


def _md_cell(text) -> str:
    return str(text).replace("|", "\\|")


def render_markdown(report: dict) -> str:
    cfg = report["config"]
    lines = [
        f"# Verification report ({report['status']})",
        "",
        f"- tool: {report['tool']} {report['version']}",
        f"- realization: {cfg['realization']}",
        f"- degree bound: {cfg['degree']}",
        f"- parameters: {', '.join(f'{k}={v}' for k, v in cfg['params'].items()) or 'symbolic'}",
        f"- identities: {report['summary']['identities']}, failed: {report['summary']['failed']}",
    ]
    for suite in report["suites"]:
        lines += ["", f"## {suite['name']} ({suite['status']})", "",
                  "| identity | anchor | status | degree | witness |", "|---|---|---|---|---|"]
        for item in suite["identities"]:
            w = item["witness"]
            wtext = f"at {w['basis']}: {w['lhs']} vs {w['rhs']}" if w else ""
            deg = "exact" if item["degree"] is None else item["degree"]
            lines.append(
                f"| `{_md_cell(item['label'])}` | {_md_cell(item['anchor'])} | {item['status']} | {deg} | {_md_cell(wtext)} |"
            )
    return "\n".join(lines) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "markdown":
        return render_markdown(report)
    return json.dumps(report, indent=2) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".report-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(config: RunConfig) -> int:
    report = build_report(config)
    text = render(report, config.format)
    if config.out:
        write_atomic(config.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


def apply_expression(expr: str, poly: str, kind: str = "b3-scalar", params: dict | None = None) -> str:
    r = realize(kind, params, check_degree=None)
    op = parse_operator(expr, r.ring, r.named_operator)
    f = parse_poly(poly, r.ring)
    if f.terms and not r.clifford and not f.is_scalar():
        raise ParseError("Clifford units need the b3-clifford realization", 0)
    return format_clifford_poly(op(f))


def _param(text: str) -> tuple[str, str]:
    name, sep, value = text.partition("=")
    if not sep or not name or not value:
        raise argparse.ArgumentTypeError(f"expected k=v, got {text!r}")
    return name.strip(), value.strip()


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bannai-ito", description="Exact verification of centralizer identities for osp(1,2) realizations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--realization", default="b3-scalar", choices=KINDS)
    common.add_argument("--param", action="append", type=_param, default=[], metavar="K=V",
                        help="specialize a parameter to a rational value (repeatable)")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--degree", type=int, default=6, help="degree bound for extensional equality (default 6)")
    v.add_argument("--suite", action="append", default=None,
                   help=f"suite to run (repeatable); one of {', '.join(SUITES)} or all")
    v.add_argument("--out", help="report path (written atomically); stdout if omitted")
    v.add_argument("--format", choices=("json", "markdown"), default="json")
    v.add_argument("--jobs", type=int, default=1, help="suites run in parallel worker processes")
    v.add_argument("--no-timings", action="store_true", help="omit wall times so reports are byte-stable")

    a = sub.add_parser("apply", parents=[common], help="apply an operator expression to a polynomial")
    a.add_argument("expr", help='operator expression, e.g. "[A_minus, A_plus]" or "C_12"')
    a.add_argument("poly", help='polynomial, e.g. "x1^2*x2 - 3*a*x3"')
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    params = dict(ns.param)
    try:
        if ns.command == "apply":
            try:
                values = {k: as_rational(v) for k, v in params.items()}
                print(apply_expression(ns.expr, ns.poly, ns.realization, values))
            except (ParseError, ValueError, ZeroDivisionError) as exc:
                raise UsageError(str(exc)) from None
            return EXIT_OK
        config = RunConfig(
            realization=ns.realization, degree=ns.degree, suites=ns.suite or ["all"], params=params,
            out=ns.out, format=ns.format, jobs=ns.jobs, timings=not ns.no_timings,
        )
        return run(config)
    except UsageError as exc:
        print(f"bannai-ito: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
