"""Command line front end.

Every command prints one JSON report on stdout. Exit codes: 0 success,
2 hypothesis violation (the hypothesis report is still printed), 3 parse or
config error, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import sys

from . import _accel
from .bounds import bound_for, corollary_report
from .config import load_config
from .errors import (
    ConfigError,
    ConstantBase,
    DivisionByZeroInExpression,
    HypothesisViolation,
    InvalidRecurrence,
    InvariantFailure,
    ParseError,
    PillaiError,
    ZeroF,
)
from .field import ONE
from .independence import is_mult_independent
from .parser import parse_expression
from .places import height
from .recurrences import (
    Recurrence,
    check_theorem1_hypotheses,
    check_theorem2_hypotheses,
    check_theorem3_hypotheses,
)
from .report import dumps
from .solver import STRATEGIES, corollary_solve, solve_double_rep, solve_fixed_f, verify_against_oracle

EXIT_OK, EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_INVARIANT = 0, 2, 3, 4
_INPUT_ERRORS = (ParseError, DivisionByZeroInExpression, ConfigError, ZeroF, ConstantBase, InvalidRecurrence)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _enumeration_options(p):
    p.add_argument("--strategy", choices=STRATEGIES, default="fingerprint")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the brute-force oracle on window_multiplier times the bound")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pillai-ff", description="Effective Pillai-type equations over Q(x).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="compute the effective bound for a config")
    p.add_argument("-c", "--config", required=True)

    p = sub.add_parser("solve", help="all solutions of G_n - H_m = f")
    p.add_argument("-c", "--config", required=True)
    _enumeration_options(p)

    p = sub.add_parser("double-rep", help="all f with two representations G_n - H_m")
    p.add_argument("-c", "--config", required=True)
    p.add_argument("--mode", choices=("T2", "T3"), help="override the config mode")
    _enumeration_options(p)

    p = sub.add_parser("check", help="hypothesis report for a config")
    p.add_argument("-c", "--config", required=True)

    p = sub.add_parser("height", help="height of a rational function")
    p.add_argument("expr")

    p = sub.add_parser("indep", help="multiplicative independence of two elements")
    p.add_argument("gamma")
    p.add_argument("delta")

    p = sub.add_parser("corollary", help="solve p^n - q^m = f")
    p.add_argument("-p", required=True)
    p.add_argument("-q", required=True)
    p.add_argument("-f", required=True)
    _enumeration_options(p)

    sub.add_parser("backend", help="report the active kernel backend")
    return parser


def _workers(args) -> int:
    if args.workers < 1:
        raise ConfigError("--workers must be positive")
    return args.workers


def _cmd_bound(args) -> dict:
    cfg = load_config(args.config)
    if cfg.mode == "COROLLARY":
        return corollary_report(*cfg.corollary_inputs()).to_dict()
    return bound_for(cfg.mode, cfg.G, cfg.H, cfg.f, cfg.genus).to_dict()


def _cmd_solve(args) -> dict:
    cfg = load_config(args.config)
    workers = _workers(args)
    if cfg.mode == "COROLLARY":
        p, q, f = cfg.corollary_inputs()
        result = corollary_solve(p, q, f, args.strategy, workers)
    elif cfg.mode == "T1":
        result = solve_fixed_f(cfg.G, cfg.H, cfg.f, args.strategy, workers, cfg.genus)
    else:
        raise ConfigError(f"solve needs mode T1 or COROLLARY, not {cfg.mode}")
    if args.verify:
        verify_against_oracle(result, cfg.G, cfg.H, cfg.f, cfg.window_multiplier)
    return result.to_dict()


def _cmd_double_rep(args) -> dict:
    cfg = load_config(args.config)
    mode = args.mode or cfg.mode
    if mode not in ("T2", "T3"):
        raise ConfigError(f"double-rep needs mode T2 or T3, not {mode}")
    result = solve_double_rep(cfg.G, cfg.H, mode, args.strategy, _workers(args), cfg.genus)
    if args.verify:
        verify_against_oracle(result, cfg.G, cfg.H, multiplier=cfg.window_multiplier)
    return result.to_dict()


def _cmd_check(args):
    cfg = load_config(args.config)
    checks = {"T1": check_theorem1_hypotheses, "T2": check_theorem2_hypotheses,
              "T3": check_theorem3_hypotheses}
    if cfg.mode not in checks:
        raise ConfigError("check needs mode T1, T2 or T3")
    report = checks[cfg.mode](cfg.G, cfg.H)
    return report.to_dict(), (EXIT_OK if report.passed else EXIT_HYPOTHESIS)


def _cmd_height(args) -> dict:
    f = parse_expression(args.expr)
    if not f:
        raise ConfigError("the height of 0 is infinite; give a nonzero expression")
    return {"expression": str(f), "height": height(f)}


def _cmd_indep(args) -> dict:
    gamma, delta = parse_expression(args.gamma), parse_expression(args.delta)
    if not gamma or not delta:
        raise ConfigError("independence is only defined for nonzero elements")
    return {"gamma": str(gamma), "delta": str(delta), "independent": is_mult_independent(gamma, delta)}


def _cmd_corollary(args) -> dict:
    p, q, f = (parse_expression(s) for s in (args.p, args.q, args.f))
    for name, v in (("p", p), ("q", q), ("f", f)):
        if not v.is_polynomial():
            raise ConfigError(f"{name} must be a polynomial")
    result = corollary_solve(p, q, f, args.strategy, _workers(args))
    if args.verify:
        verify_against_oracle(result, Recurrence.of((ONE, p)), Recurrence.of((ONE, q)), f)
    return result.to_dict()


def _cmd_backend(args) -> dict:
    return {"backend": _accel.backend_name()}


_COMMANDS = {
    "bound": _cmd_bound,
    "solve": _cmd_solve,
    "double-rep": _cmd_double_rep,
    "check": _cmd_check,
    "height": _cmd_height,
    "indep": _cmd_indep,
    "corollary": _cmd_corollary,
    "backend": _cmd_backend,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = _COMMANDS[args.command](args)
    except HypothesisViolation as exc:
        body = {"kind": "hypothesis_violation", "message": str(exc)}
        if exc.report is not None:
            body["report"] = exc.report.to_dict()
        out.write(dumps(body))
        print(f"error: {exc}", file=err)
        return EXIT_HYPOTHESIS
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except InvariantFailure as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INVARIANT
    except PillaiError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    out.write(dumps(result))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
