"""Batch command-line front end.

Subcommands: profile, minpoly, plcp-check, plcp-count, plcp-enum,
stable, height, lcsum, rueppel, gamma, verify.  Sequences come from
--seq (comma or whitespace separated digits) or --in (one sequence per
line); digits must already lie in [0, p), out-of-range values are
rejected rather than reduced.  --json swaps the table output for one
JSON object per input sequence.

Exit codes: 0 success, 2 input/usage error, 3 verification or engine
failure, 4 resource guard tripped.  The LCPROF_THREADS environment
variable sets the worker count for the verify sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import verify as verify_mod
from .analysis import (
    analysis_report,
    enumerate_plcp,
    height,
    is_stable,
    lc_sum,
    plcp_count,
)
from .engine import MPConfig, feedback_polynomial, mp_run, profile_steps
from .errors import (
    LcprofError,
    ResourceLimitError,
    SequenceParseError,
    UnsupportedDomainError,
)
from .fields import PrimeField
from .poly import Seq
from .rueppel import gamma, rueppel_terms

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_FAIL = 3
EXIT_RESOURCE = 4

_TOKEN_SPLIT = re.compile(r"[\s,]+")

SUITE_DEFAULTS = {
    "oracle": {"max_n": 10, "trials": 500},
    "bezout": {"max_n": 32, "trials": 1000},
    "wang-massey": {"max_n": 15, "trials": 0},
    "plcp-count": {"max_n": 14, "trials": 0},
    "plcp-equiv": {"max_n": 12, "trials": 0},
    "rueppel": {"max_n": 512, "trials": 0},
    "height": {"max_n": 14, "trials": 1000},
    "lcsum": {"max_n": 12, "trials": 500},
}


def worker_count() -> int:
    raw = os.environ.get("LCPROF_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parse_sequence(text: str, p: int) -> Seq:
    """Strict parse: integer tokens in [0, p); no wrapping."""
    dom = PrimeField(p)
    text = text.strip()
    if not text:
        return Seq(dom, ())
    terms = []
    for tok in _TOKEN_SPLIT.split(text):
        try:
            v = int(tok)
        except ValueError:
            raise SequenceParseError(f"not an integer: {tok!r}") from None
        if not 0 <= v < p:
            raise SequenceParseError(f"value {v} outside [0, {p})")
        terms.append(v)
    return Seq(dom, terms)


def _input_sequences(args) -> list[Seq]:
    if args.seq is not None and args.infile is not None:
        raise SequenceParseError("give either --seq or --in, not both")
    if args.seq is not None:
        return [parse_sequence(args.seq, args.field)]
    if args.infile is not None:
        with open(args.infile, encoding="utf-8") as fh:
            return [parse_sequence(line, args.field) for line in fh.read().splitlines()]
    raise SequenceParseError("no sequence given (use --seq or --in)")


def _emit(obj) -> None:
    print(json.dumps(obj))


def _render_table(headers, rows) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = []
    for row in [headers] + rows:
        line = "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row))
        lines.append(line.rstrip())
    return "\n".join(lines)


def render_profile_table(s: Seq, config: MPConfig) -> str:
    """The per-step table: j, Delta_j, e_{j-1}, mu^(j), mu'^(j).

    Row j lists the discrepancy consumed at step j (the conventional 1 at
    j = 0) and the exponent reached after the step (blank at j = 0).
    """
    rows = profile_steps(s, config)
    cells = [
        [
            str(r.j),
            str(r.delta),
            "" if r.j == 0 else str(r.e),
            str(r.mu),
            str(r.mu_prev),
        ]
        for r in rows
    ]
    return _render_table(["j", "Delta_j", "e_{j-1}", "mu^(j)", "mu'^(j)"], cells)


def cmd_profile(args) -> int:
    config = MPConfig(epsilon=args.epsilon)
    for s in _input_sequences(args):
        if args.json:
            _, rep = mp_run(s, config)
            _emit(rep.to_json_dict())
        else:
            print(render_profile_table(s, config))
    return EXIT_OK


def cmd_minpoly(args) -> int:
    config = MPConfig(epsilon=args.epsilon)
    for s in _input_sequences(args):
        _, rep = mp_run(s, config)
        fb, lc = feedback_polynomial(rep)
        if args.json:
            _emit({"mu": str(rep.minpoly), "lc": lc, "feedback": str(fb),
                   "nabla": rep.nabla})
        else:
            print(f"mu = {rep.minpoly}")
            print(f"lc = {lc}")
            print(f"feedback = {fb}")
            print(f"nabla = {rep.nabla}")
    return EXIT_OK


def cmd_plcp_check(args) -> int:
    for s in _input_sequences(args):
        report = analysis_report(s, epsilon=args.epsilon)
        if args.json:
            _emit(report)
        else:
            print(f"plcp = {str(report['plcp']).lower()}")
            for key, val in report["witnesses"].items():
                if key != "failures":
                    print(f"witness {key} = {str(val).lower()}")
    return EXIT_OK


def cmd_plcp_count(args) -> int:
    count = plcp_count(args.field, args.n)
    _emit({"count": count}) if args.json else print(count)
    return EXIT_OK


def cmd_plcp_enum(args) -> int:
    seqs = [list(s.terms) for s in enumerate_plcp(args.field, args.n)]
    if args.json:
        _emit(seqs)
    else:
        for terms in seqs:
            print(",".join(map(str, terms)))
    return EXIT_OK


def cmd_stable(args) -> int:
    for s in _input_sequences(args):
        flag = is_stable(s)
        _emit({"stable": flag}) if args.json else print(str(flag).lower())
    return EXIT_OK


def cmd_height(args) -> int:
    for s in _input_sequences(args):
        rep = height(s)
        if args.json:
            _emit({"height": rep.height, "argmax_j": rep.argmax_j,
                   "exponents": rep.exponents})
        else:
            print(f"height = {rep.height}")
            print(f"argmax_j = {rep.argmax_j}")
    return EXIT_OK


def cmd_lcsum(args) -> int:
    for s in _input_sequences(args):
        sigma, bound = lc_sum(s)
        if args.json:
            _emit({"lc_sum": sigma, "bound": bound})
        else:
            print(f"lc_sum = {sigma}")
            print(f"bound = {bound}")
    return EXIT_OK


def cmd_rueppel(args) -> int:
    terms = list(rueppel_terms(args.n).terms)
    if args.json:
        _emit({"terms": terms})
    else:
        print(",".join(map(str, terms)))
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = gamma(args.n)
    _emit({"gamma": str(g)}) if args.json else print(g)
    return EXIT_OK


def _run_suite(name: str, args, threads: int) -> verify_mod.VerifyResult:
    max_n = args.max_n if args.max_n is not None else SUITE_DEFAULTS[name]["max_n"]
    trials = args.trials if args.trials is not None else SUITE_DEFAULTS[name]["trials"]
    if name == "oracle":
        if args.field == 2:
            return verify_mod.verify_oracle(fields=(2,), exhaustive_n=max_n)
        return verify_mod.verify_oracle(
            fields=(args.field,), exhaustive_n=0, trials=trials, max_n=max_n)
    if name == "bezout":
        return verify_mod.verify_bezout(field=args.field, trials=trials, max_n=max_n)
    if name == "wang-massey":
        return verify_mod.verify_wang_massey(max_n=max_n, threads=threads)
    if name == "plcp-count":
        return verify_mod.verify_plcp_count(cases=((args.field, max_n),))
    if name == "plcp-equiv":
        return verify_mod.verify_plcp_equivalence(max_n=max_n, threads=threads)
    if name == "rueppel":
        return verify_mod.verify_rueppel(
            profile_n=8 * max_n,
            matrix_n=max_n,
            closed_n=2 * max_n + 1,
            gamma_n=2 * max_n,
            r0_k=max(1, (2 * max_n).bit_length() - 1),
        )
    if name == "height":
        return verify_mod.verify_height(
            exhaustive_n=min(max_n, 14), bound_trials=trials,
            cf_trials=max(1, trials // 5), threads=threads)
    if name == "lcsum":
        return verify_mod.verify_lcsum(max_n=max_n, trials=trials)
    raise AssertionError(name)


def cmd_verify(args) -> int:
    name = args.suite_pos or args.suite
    if args.suite_pos and args.suite and args.suite_pos != args.suite:
        print("conflicting suite names", file=sys.stderr)
        return EXIT_INPUT
    if name is None:
        name = "all"
    if name != "all" and name not in SUITE_DEFAULTS:
        print(f"unknown suite {name!r}; choose from "
              f"{', '.join(sorted(SUITE_DEFAULTS))} or all", file=sys.stderr)
        return EXIT_INPUT
    names = list(SUITE_DEFAULTS) if name == "all" else [name]
    threads = worker_count()
    all_ok = True
    for suite in names:
        result = _run_suite(suite, args, threads)
        print(result.line())
        all_ok &= result.ok
    return EXIT_OK if all_ok else EXIT_FAIL


def _add_seq_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seq", help="inline sequence, comma or space separated")
    p.add_argument("--in", dest="infile", help="file with one sequence per line")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcprof",
        description="Minimal polynomials and linear-complexity profiles "
                    "over prime fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, seq=False, n_arg=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--field", type=int, default=2, metavar="P",
                       help="field characteristic (prime, default 2)")
        p.add_argument("--epsilon", type=int, default=0, metavar="E",
                       help="seed element for the displaced row (default 0)")
        p.add_argument("--json", action="store_true", help="JSON output")
        if seq:
            _add_seq_options(p)
        if n_arg:
            p.add_argument("--n", type=int, required=True, help="size parameter")
        p.set_defaults(func=fn)
        return p

    add("profile", cmd_profile, "per-step profile table or report", seq=True)
    add("minpoly", cmd_minpoly, "minimal polynomial and feedback polynomial",
        seq=True)
    add("plcp-check", cmd_plcp_check, "perfect-profile analysis", seq=True)
    add("plcp-count", cmd_plcp_count, "closed-form perfect-profile count",
        n_arg=True)
    add("plcp-enum", cmd_plcp_enum, "enumerate perfect-profile sequences",
        n_arg=True)
    add("stable", cmd_stable, "binary stability check", seq=True)
    add("height", cmd_height, "sequence height", seq=True)
    add("lcsum", cmd_lcsum, "sum of the complexity profile", seq=True)
    add("rueppel", cmd_rueppel, "power-of-two indicator sequence terms",
        n_arg=True)
    add("gamma", cmd_gamma, "member of the jump-matrix polynomial family",
        n_arg=True)

    v = add("verify", cmd_verify, "run a verification suite")
    v.add_argument("suite_pos", nargs="?", metavar="SUITE",
                   help="suite name (or 'all')")
    v.add_argument("--suite", help="suite name (alternative to the positional)")
    v.add_argument("--max-n", dest="max_n", type=int, default=None)
    v.add_argument("--trials", type=int, default=None)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except SequenceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UnsupportedDomainError, LcprofError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
