"""Command-line front end.

Subcommands:

  validate   check construction parameters, print diagnostics
  build      materialize a code instance and write its JSON document
  verify     run the counting suites, one pass/fail line per item
  attack     compute the five deception probabilities exhaustively
  count      evaluate the subspace-count formulas for one (m, s, n)
  report     run everything and write one combined JSON/CSV document,
             rendering summary figures alongside it

Exit status is 0 only when every executed check passed; parameter or usage
problems exit 2.  All counts in emitted JSON are decimal strings and all
probabilities are reduced fractions, so no consumer needs more than string
handling to read them exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .field import GF2e
from .enumeration import (
    DEFAULT_ORACLE_BUDGET,
    OracleBudgetError,
    gaussian_binomial,
    symplectic_anzahl,
    symplectic_anzahl_bruteforce,
)
from .construction import (
    CodeParams,
    build_code,
    canonical_frame,
    code_json_text,
    parameter_notes,
    validate_params,
)
from .attacks import (
    AttackReport,
    CountCheck,
    IncidenceReport,
    IncidenceTables,
    PairReport,
    SizeReport,
    attack_probabilities,
    verify_incidence_counts,
    verify_parameters,
    verify_shared_rule_pairs,
)

REPORT_SCHEMA_VERSION = 1


def _int_literal(text: str) -> int:
    return int(text, 0)


def _add_field_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q-exp", type=int, default=1, metavar="E",
                        help="extension degree e of GF(2^e) (default 1)")
    parser.add_argument("--modulus", type=_int_literal, default=None, metavar="POLY",
                        help="irreducible modulus as packed bits, decimal or 0x/0b")


def _add_code_args(parser: argparse.ArgumentParser) -> None:
    _add_field_args(parser)
    parser.add_argument("--nu", type=int, required=True, help="index nu of the ambient space")
    parser.add_argument("--s", type=int, required=True, help="source-state index s")
    parser.add_argument("--m0", type=int, required=True, help="dimension of the fixed subspace P0")
    parser.add_argument("--s0", type=int, required=True, help="Gram index s0 of P0")
    parser.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                        metavar="N", help="max subspaces brute-force counting may enumerate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a2codes",
        description="Construct and exhaustively audit authentication codes "
                    "with arbitration from pseudo-symplectic geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check parameters and print diagnostics")
    _add_code_args(p)

    p = sub.add_parser("build", help="build a code instance and write it as JSON")
    _add_code_args(p)
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")

    p = sub.add_parser("verify", help="verify set sizes and containment counts")
    _add_code_args(p)

    p = sub.add_parser("attack", help="compute the five deception probabilities")
    _add_code_args(p)

    p = sub.add_parser("count", help="count subspaces of a symplectic type")
    _add_field_args(p)
    p.add_argument("--m", type=int, required=True, help="subspace dimension")
    p.add_argument("--s", type=int, default=None, help="Gram index s (omit for plain subspace count)")
    p.add_argument("--n", type=int, required=True, help="ambient symplectic dimension (even)")
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET, metavar="N")

    p = sub.add_parser("report", help="run all checks and write one combined document")
    _add_code_args(p)
    p.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--no-figures", action="store_true", help="skip figure rendering")

    return parser


def _make_params(args: argparse.Namespace) -> CodeParams:
    gf = GF2e(args.q_exp, args.modulus)
    return CodeParams(field=gf, nu=args.nu, s=args.s, m0=args.m0, s0=args.s0)


def _str_counts(value: int | None) -> str | None:
    return None if value is None else str(value)


def _fraction_fields(value: Fraction | None) -> tuple[str | None, str | None]:
    if value is None:
        return None, None
    return f"{value.numerator}/{value.denominator}", f"{float(value):.6f}"


def _count_check_json(check: CountCheck) -> dict:
    return {
        "expected": str(check.expected),
        "min": _str_counts(check.minimum),
        "max": _str_counts(check.maximum),
        "domain": str(check.domain),
        "histogram": None if check.histogram is None
        else {str(k): str(v) for k, v in check.histogram.items()},
        "ok": check.ok,
    }


def _size_json(report: SizeReport) -> dict:
    def entry(check):
        return {"expected": str(check.expected), "actual": str(check.actual), "ok": check.ok}

    return {
        "sources": entry(report.sources),
        "transmitterRules": entry(report.transmitter_rules),
        "receiverRules": entry(report.receiver_rules),
        "messages": entry(report.messages),
        "n1": str(report.n1),
        "n2": str(report.n2),
        "n3": str(report.n3),
        "ok": report.ok,
    }


def _pair_json(report: PairReport) -> dict:
    return {
        "qualifyingPairs": str(report.qualifying),
        "checked": str(report.checked),
        "kHistogram": {str(k): str(v) for k, v in report.k_histogram.items()},
        "violations": list(report.violations),
        "reason": report.reason,
        "ok": report.ok,
    }


def _attack_json(report: AttackReport) -> dict:
    out: dict = {}
    for key, check in report.checks.items():
        frac, dec = _fraction_fields(check.value)
        exp_frac, exp_dec = _fraction_fields(check.expected)
        out[key] = {
            "fraction": frac,
            "decimal": dec,
            "expectedFraction": exp_frac,
            "expectedDecimal": exp_dec,
            "match": check.match,
            "reason": check.reason,
            "witness": check.witness,
        }
    out["ok"] = report.ok
    return out


def _params_json(params: CodeParams) -> dict:
    return {
        "qExp": params.field.e,
        "modulus": params.field.modulus,
        "q": params.field.q,
        "nu": params.nu,
        "s": params.s,
        "m0": params.m0,
        "s0": params.s0,
    }


def _assemble_report(
    params: CodeParams,
    sizes: SizeReport,
    incidence: IncidenceReport,
    pairs: PairReport,
    attack: AttackReport,
    runtime_millis: int,
) -> dict:
    return {
        "schemaVersion": REPORT_SCHEMA_VERSION,
        "params": _params_json(params),
        "theorem1": _size_json(sizes),
        "lemma6": {
            "a": _count_check_json(incidence.et_per_message),
            "b": _count_check_json(incidence.er_per_message),
            "ok": incidence.et_per_message.ok and incidence.er_per_message.ok,
        },
        "lemma8": {
            "c": _count_check_json(incidence.er_per_et),
            "d": _count_check_json(incidence.et_per_er),
            "ok": incidence.er_per_et.ok and incidence.et_per_er.ok,
        },
        "lemma9": _count_check_json(incidence.et_between),
        "lemma10": _pair_json(pairs),
        "theorem2": _attack_json(attack),
        "runtimeMillis": runtime_millis,
    }


def _report_csv(doc: dict) -> str:
    """Flat table of every check; witnesses stay JSON-only."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["section", "item", "expected", "observed", "ok"])
    t1 = doc["theorem1"]
    for item in ("sources", "transmitterRules", "receiverRules", "messages"):
        writer.writerow(["theorem1", item, t1[item]["expected"], t1[item]["actual"], t1[item]["ok"]])
    for section, items in (("lemma6", ("a", "b")), ("lemma8", ("c", "d"))):
        for item in items:
            check = doc[section][item]
            observed = check["max"] if check["min"] == check["max"] else f"{check['min']}..{check['max']}"
            writer.writerow([section, item, check["expected"], observed, check["ok"]])
    check = doc["lemma9"]
    observed = check["max"] if check["min"] == check["max"] else f"{check['min']}..{check['max']}"
    writer.writerow(["lemma9", "between", check["expected"], observed, check["ok"]])
    pairs = doc["lemma10"]
    writer.writerow(["lemma10", "checkedPairs", "", pairs["checked"], pairs["ok"]])
    writer.writerow(["lemma10", "violations", "0", str(len(pairs["violations"])), pairs["ok"]])
    for key in ("pI", "pS", "pT", "pR0", "pR1"):
        entry = doc["theorem2"][key]
        writer.writerow([
            "theorem2", key, entry["expectedFraction"],
            entry["fraction"] if entry["fraction"] is not None else "n/a",
            entry["match"] if entry["match"] is not None else "skipped",
        ])
    return buf.getvalue()


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        out.write_text(text if text.endswith("\n") else text + "\n")


def _pass_line(ok: bool, label: str, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    print(f"{tag}  {label}" + (f": {detail}" if detail else ""))


def _print_verify(sizes: SizeReport, incidence: IncidenceReport, pairs: PairReport) -> None:
    for name, check in (
        ("sources |S|", sizes.sources),
        ("transmitter rules |E_T|", sizes.transmitter_rules),
        ("receiver rules |E_R|", sizes.receiver_rules),
        ("messages |M|", sizes.messages),
    ):
        _pass_line(check.ok, f"sizes {name}", f"expected {check.expected}, enumerated {check.actual}")
    for name, check in (
        ("a: transmitter rules per message", incidence.et_per_message),
        ("b: receiver rules per message", incidence.er_per_message),
        ("c: receiver rules per transmitter rule", incidence.er_per_et),
        ("d: transmitter rules per receiver rule", incidence.et_per_er),
        ("rules between receiver rule and message", incidence.et_between),
    ):
        if check.domain == 0:
            _pass_line(True, f"counts {name}", "empty domain")
        else:
            detail = f"= {check.expected} uniformly over {check.domain}" if check.ok else \
                f"expected {check.expected}, observed {check.minimum}..{check.maximum}"
            _pass_line(check.ok, f"counts {name}", detail)
    if pairs.reason is not None:
        _pass_line(True, "message pairs", pairs.reason)
    else:
        detail = (f"{pairs.checked} of {pairs.qualifying} pairs, "
                  f"k histogram {pairs.k_histogram}, {len(pairs.violations)} violations")
        _pass_line(pairs.ok, "message pairs", detail)
        for violation in pairs.violations[:10]:
            print(f"      {violation}")


def _print_attack(report: AttackReport) -> None:
    for key in ("pI", "pS", "pT", "pR0", "pR1"):
        check = report.checks[key]
        frac, dec = _fraction_fields(check.value)
        exp_frac, _ = _fraction_fields(check.expected)
        if check.value is None:
            print(f"SKIP  {key}: empty attack domain ({check.reason}); predicted {exp_frac}")
        else:
            tag = "PASS" if check.match else "FAIL"
            counts = ""
            if check.witness and "count" in check.witness:
                counts = f" [{check.witness['count']} of {check.witness['of']}]"
            print(f"{tag}  {key} = {frac} ({dec}), predicted {exp_frac}{counts}")


def _run_code_checks(params: CodeParams):
    code = build_code(params)
    tables = IncidenceTables.build(code)
    sizes = verify_parameters(code)
    incidence = verify_incidence_counts(code, tables)
    pairs = verify_shared_rule_pairs(code, tables=tables)
    attack = attack_probabilities(code, tables)
    return code, sizes, incidence, pairs, attack


def _cmd_validate(args: argparse.Namespace) -> int:
    params = _make_params(args)
    problems = validate_params(params)
    if not problems:
        try:
            canonical_frame(params)
        except ValueError as exc:
            problems = [str(exc)]
    for problem in problems:
        print(f"infeasible: {problem}")
    if problems:
        return 1
    print("parameters are buildable")
    for note in parameter_notes(params):
        print(f"note: {note}")
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    params = _make_params(args)
    problems = validate_params(params)
    if problems:
        for problem in problems:
            print(f"infeasible: {problem}", file=sys.stderr)
        return 1
    code = build_code(params)
    _emit(code_json_text(code), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    params = _make_params(args)
    problems = validate_params(params)
    if problems:
        for problem in problems:
            print(f"infeasible: {problem}", file=sys.stderr)
        return 1
    _, sizes, incidence, pairs, _ = _run_code_checks(params)
    _print_verify(sizes, incidence, pairs)
    return 0 if (sizes.ok and incidence.ok and pairs.ok) else 1


def _cmd_attack(args: argparse.Namespace) -> int:
    params = _make_params(args)
    problems = validate_params(params)
    if problems:
        for problem in problems:
            print(f"infeasible: {problem}", file=sys.stderr)
        return 1
    code = build_code(params)
    report = attack_probabilities(code)
    _print_attack(report)
    return 0 if report.ok else 1


def _cmd_count(args: argparse.Namespace) -> int:
    gf = GF2e(args.q_exp, args.modulus)
    if args.n % 2 != 0 or args.n < 0:
        print(f"error: --n must be even and >= 0, got {args.n}", file=sys.stderr)
        return 2
    binomial = gaussian_binomial(args.n, args.m, gf.q)
    if args.s is None:
        print(f"[{args.n} choose {args.m}]_{gf.q} = {binomial}")
        return 0
    value = symplectic_anzahl(args.m, args.s, args.n, gf)
    print(f"subspaces of type ({args.m},{args.s}) in dimension {args.n} over GF({gf.q}): {value}")
    print(f"[{args.n} choose {args.m}]_{gf.q} = {binomial}")
    try:
        oracle = symplectic_anzahl_bruteforce(args.m, args.s, args.n, gf, budget=args.oracle_budget)
    except OracleBudgetError as exc:
        print(f"oracle check skipped: {exc}")
        return 0
    agreed = oracle == value
    print(f"oracle enumeration of {binomial} subspaces: {oracle} "
          f"({'agrees' if agreed else 'DISAGREES'})")
    return 0 if agreed else 1


def _cmd_report(args: argparse.Namespace) -> int:
    params = _make_params(args)
    problems = validate_params(params)
    if problems:
        for problem in problems:
            print(f"infeasible: {problem}", file=sys.stderr)
        return 1
    started = time.perf_counter()
    _, sizes, incidence, pairs, attack = _run_code_checks(params)
    runtime_millis = int((time.perf_counter() - started) * 1000)
    doc = _assemble_report(params, sizes, incidence, pairs, attack, runtime_millis)

    if args.format == "json":
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = _report_csv(doc)
    _emit(text, args.out)

    if not args.no_figures:
        from .figures import render_report_figures

        stem = args.out.with_suffix("") if args.out is not None else Path("report")
        for path in render_report_figures(doc, stem):
            print(f"wrote {path}", file=sys.stderr)

    all_ok = (
        sizes.ok
        and incidence.ok
        and pairs.ok
        and attack.ok
    )
    return 0 if all_ok else 1


_COMMANDS = {
    "validate": _cmd_validate,
    "build": _cmd_build,
    "verify": _cmd_verify,
    "attack": _cmd_attack,
    "count": _cmd_count,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
