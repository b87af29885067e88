"""Command-line surface: classify, verify, fuzz, plotdata, example.

JSON output carries every mathematical quantity as an exact rational string;
the CSV plot data renders decimals at 12 significant digits from the exact
values.  Exit codes: 0 ok, 1 verdict mismatch (verify), 2 parse error,
3 domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction

from .harness import FIXTURES, FuzzConfig, Strategy, run_fuzz
from .polycore import Polynomial, format_polynomial, parse_polynomial
from .realroots import IsolatedRoot, refine
from .rootlocus import EventKind, InfiniteGainError, axis_events, breakaway_points, gain_at
from .shapiro import (
    ClassLabel,
    DeltaIdenticallyZeroError,
    Evidence,
    actual_verdict,
    build,
    classify,
    predict_verdict,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_polynomial(text: str, descending: bool) -> Polynomial:
    try:
        return parse_polynomial(text, descending=descending)
    except ValueError as exc:
        raise _CliError(EXIT_PARSE, str(exc)) from exc


def _build_instance(poly: Polynomial):
    try:
        return build(poly)
    except ValueError as exc:
        raise _CliError(EXIT_DOMAIN, str(exc)) from exc


def _frac(x: Fraction) -> str:
    return str(x)


def _root_json(root: IsolatedRoot) -> dict:
    return {
        "lo": _frac(root.interval.lo),
        "hi": _frac(root.interval.hi),
        "multiplicity": root.multiplicity,
    }


def _segment_json(segment) -> dict:
    return {
        "lo": _root_json(segment.lo_event.root) if segment.lo_event else "-inf",
        "hi": _root_json(segment.hi_event.root) if segment.hi_event else "+inf",
        "parity": segment.parity.value,
    }


def _evidence_json(evidence: Evidence) -> dict:
    findings = []
    for f in evidence.interval_findings:
        findings.append({
            "kind": f.kind.value,
            "interval": _segment_json(f.segment),
            "breakaways": [
                {
                    "location": _root_json(bf.breakaway.location),
                    "standard": bf.breakaway.standard,
                    "extremum": bf.breakaway.extremum.value,
                    "gain_vs_k0": bf.comparison.value if bf.comparison else None,
                }
                for bf in f.breakaways
            ],
            "decisive": _root_json(f.decisive.breakaway.location) if f.decisive else None,
        })
    return {
        "p0": _root_json(evidence.p0) if evidence.p0 else None,
        "p2_real_zeros": {
            "left_of_p0": evidence.p2_roots_left,
            "right_of_p0": evidence.p2_roots_right,
        },
        "interval_findings": findings,
    }


def _analyze(poly: Polynomial) -> dict:
    timings: dict[str, int] = {}
    t0 = time.perf_counter_ns()
    instance = _build_instance(poly)
    timings["build_ms"] = (time.perf_counter_ns() - t0) // 1_000_000
    t1 = time.perf_counter_ns()
    label, evidence = classify(instance)
    timings["classify_ms"] = (time.perf_counter_ns() - t1) // 1_000_000
    predicted = predict_verdict(label)
    t2 = time.perf_counter_ns()
    delta_zero = False
    try:
        actual = actual_verdict(instance)
        actual_value = actual.verdict.value
        nr_delta = {"distinct": actual.nr_delta.distinct,
                    "with_multiplicity": actual.nr_delta.with_multiplicity}
        nr_p = {"distinct": actual.nr_p.distinct,
                "with_multiplicity": actual.nr_p.with_multiplicity}
        agreement = predicted == actual.verdict
    except DeltaIdenticallyZeroError as exc:
        # Only p = c*(ax+b)^n lands here; p then has a real zero, so the
        # conjecture holds and the prediction must say so.
        delta_zero = True
        actual_value = "DELTA_IDENTICALLY_ZERO"
        nr_delta = None
        nr_p = {"distinct": exc.nr_p.distinct,
                "with_multiplicity": exc.nr_p.with_multiplicity}
        agreement = predicted.value == "HOLDS" and exc.nr_p.distinct > 0
    timings["verdict_ms"] = (time.perf_counter_ns() - t2) // 1_000_000
    return {
        "polynomial": format_polynomial(poly),
        "degree": instance.n,
        "k0": _frac(instance.k0),
        "delta": format_polynomial(instance.delta),
        "label": label.value,
        "predicted": predicted.value,
        "actual": actual_value,
        "delta_identically_zero": delta_zero,
        "nr_delta": nr_delta,
        "nr_p": nr_p,
        "agreement": agreement,
        "evidence": _evidence_json(evidence),
        "timings": timings,
    }


def _cmd_classify(args: argparse.Namespace) -> int:
    poly = _load_polynomial(args.polynomial, args.descending)
    report = _analyze(poly)
    print(json.dumps(report, indent=2))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    poly = _load_polynomial(args.polynomial, args.descending)
    report = _analyze(poly)
    print(json.dumps({
        "polynomial": report["polynomial"],
        "label": report["label"],
        "predicted": report["predicted"],
        "actual": report["actual"],
        "agreement": report["agreement"],
    }, indent=2))
    return EXIT_OK if report["agreement"] else EXIT_MISMATCH


def _parse_degrees(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise _CliError(EXIT_PARSE, f"malformed degree range: {text!r}") from exc


def _cmd_fuzz(args: argparse.Namespace) -> int:
    try:
        config = FuzzConfig(
            seed=args.seed,
            cases=args.cases,
            degree_range=_parse_degrees(args.degrees),
            coeff_bound=args.bound,
            strategy=Strategy(args.strategy),
        )
    except ValueError as exc:
        raise _CliError(EXIT_DOMAIN, str(exc)) from exc
    summary = run_fuzz(config)
    print(json.dumps(summary.to_json_dict(), indent=2))
    return EXIT_OK


def _decimal12(x: Fraction) -> str:
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = 12
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _approx_position(root: IsolatedRoot) -> Fraction:
    return refine(root, Fraction(1, 10 ** 24)).interval.midpoint


def _cmd_plotdata(args: argparse.Namespace) -> int:
    poly = _load_polynomial(args.polynomial, args.descending)
    try:
        lo_text, hi_text = args.range.split(":")
        lo, hi = Fraction(lo_text), Fraction(hi_text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(EXIT_PARSE, f"malformed range: {args.range!r}") from exc
    if lo >= hi or args.samples < 2:
        raise _CliError(EXIT_PARSE, "range must be increasing and samples >= 2")
    instance = _build_instance(poly)
    pp, delta = instance.pp, instance.delta

    # x -> event kind tag; None marks a plain grid sample.
    rows: dict[Fraction, EventKind | str | None] = {}
    step = (hi - lo) / (args.samples - 1)
    for i in range(args.samples):
        rows.setdefault(lo + step * i, None)
    for event in axis_events(pp):
        x = event.root.interval.lo if event.root.interval.is_point \
            else _approx_position(event.root)
        if lo <= x <= hi:
            rows[x] = event.kind
    for b in breakaway_points(pp):
        x = b.location.interval.lo if b.location.interval.is_point \
            else _approx_position(b.location)
        if lo <= x <= hi:
            rows.setdefault(x, "BREAKAWAY")
            if rows[x] is None:
                rows[x] = "BREAKAWAY"

    print("x,K,delta,parity,is_event")
    for x in sorted(rows):
        tag = rows[x]
        if tag is EventKind.ZERO:
            k_text = ""       # gain is +infinity at a zero of pp
        elif tag is EventKind.POLE:
            k_text = "0"
        else:
            try:
                k_text = _decimal12(gain_at(pp, x))
            except InfiniteGainError:
                k_text = ""
        sgn = pp.sign_of_value_at(x)
        is_event = tag is not None or sgn == 0
        parity = "" if is_event else ("EVEN" if sgn > 0 else "ODD")
        delta_text = _decimal12(Fraction(delta.eval_at(x)))
        print(f"{_decimal12(x)},{k_text},{delta_text},{parity},{'true' if is_event else 'false'}")
    return EXIT_OK


def _cmd_example(args: argparse.Namespace) -> int:
    try:
        label = ClassLabel(args.label)
    except ValueError as exc:
        valid = ", ".join(l.value for l in ClassLabel)
        raise _CliError(EXIT_PARSE, f"unknown class label {args.label!r}; one of: {valid}") from exc
    text = FIXTURES.get(label)
    if text is None:
        print("NOT_FOUND")
    else:
        print(text)
    return EXIT_OK


# Accept leading-minus polynomial texts ("-1,0,1") and ranges ("-3:3") as
# argument values rather than option names.
_VALUE_WITH_MINUS = re.compile(r"^-\d[\d,/:. -]*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _VALUE_WITH_MINUS


def _make_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="shapiro12",
        description="Classify real even-degree polynomials against Shapiro's "
                    "conjecture on (n-1)(p')^2 - n*p*p'' and verify the verdict "
                    "by exact root counting.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_poly(p: argparse.ArgumentParser) -> None:
        p.add_argument("polynomial", help="comma-separated ascending coefficients, e.g. 1,0,1")
        p.add_argument("--descending", action="store_true",
                       help="interpret the coefficients in descending order")

    p_classify = sub.add_parser("classify", help="full JSON report for one polynomial")
    add_poly(p_classify)
    p_classify.set_defaults(func=_cmd_classify)

    p_verify = sub.add_parser("verify", help="exit 0 iff predicted verdict matches the counted one")
    add_poly(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_fuzz = sub.add_parser("fuzz", help="randomized agreement run, JSON summary")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--cases", type=int, default=100)
    p_fuzz.add_argument("--degrees", default="2:8", help="even degree range lo:hi")
    p_fuzz.add_argument("--bound", type=int, default=12)
    p_fuzz.add_argument("--strategy", choices=[s.value for s in Strategy], default="uniform")
    p_fuzz.set_defaults(func=_cmd_fuzz)

    p_plot = sub.add_parser("plotdata", help="CSV samples of gain and delta along the axis")
    add_poly(p_plot)
    p_plot.add_argument("--range", default="-5:5", help="rational endpoints lo:hi")
    p_plot.add_argument("--samples", type=int, default=101)
    p_plot.set_defaults(func=_cmd_plotdata)

    p_example = sub.add_parser("example", help="print the seeded example for a class label")
    p_example.add_argument("label", help="class label, e.g. Gamma11")
    p_example.set_defaults(func=_cmd_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
