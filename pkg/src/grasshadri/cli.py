"""Command-line front end.

    grasshadri analyze|cones|seshadri|h0|prop1|sweep SPEC.json [options]

Exit codes: 0 success, 1 input error, 2 no criterion applies under
--strict (or r missing and not inferable), 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import oracle as oracle_mod
from .errors import GrasshadriError, HypothesisUnavailable, RankNotAligned
from .hn import tail_ranks
from .report import (
    BundleSpec,
    SpecError,
    analysis_section,
    cones_section,
    dumps,
    h0_section,
    load_spec,
    oracle_section,
    parse_rational,
    prop1_section,
    render_text,
    seshadri_section,
)
from .seshadri import BOUNDS_ONLY, STRATA, Stratum, analyze_level, seshadri_summary

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_HYPOTHESIS = 2
EXIT_DISAGREE = 3

COMMANDS = ("analyze", "cones", "seshadri", "h0", "prop1", "sweep")


class UsageError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grasshadri", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", type=Path, help="bundle spec JSON file")
    p.add_argument("--r", type=int, default=None, help="quotient rank (a tail rank of the HN filtration)")
    p.add_argument("--a", default=None, help="coefficient of L, 'p' or 'p/q'")
    p.add_argument("--b", default=None, help="coefficient of M, 'p' or 'p/q'")
    p.add_argument("--a-range", default=None, help="sweep values: 'lo:hi[:step]' or comma list")
    p.add_argument("--b-range", default=None, help="sweep values: 'lo:hi[:step]' or comma list")
    p.add_argument("--stratum", default="generic", help="generic | base-locus | gamma-s")
    p.add_argument("--oracle", nargs="?", type=int, const=0, default=None, metavar="BOX",
                   help=f"cross-check against the brute-force oracle (default box from "
                        f"{oracle_mod.BOX_ENV}, else {oracle_mod.DEFAULT_BOX})")
    p.add_argument("--json", default=None, metavar="PATH", help="write the JSON report here ('-' for stdout)")
    p.add_argument("--strict", action="store_true", help="exit 2 when no Seshadri criterion applies")
    return p


def parse_values(text: str) -> list[Fraction]:
    if ":" in text:
        parts = [parse_rational(t) for t in text.split(":")]
        if len(parts) not in (2, 3):
            raise ValueError(f"bad range {text!r}")
        lo, hi = parts[0], parts[1]
        step = parts[2] if len(parts) == 3 else Fraction(1)
        if step <= 0:
            raise ValueError("range step must be positive")
        out = []
        x = lo
        while x <= hi:
            out.append(x)
            x += step
        return out
    return sorted({parse_rational(t) for t in text.split(",")})


def resolve_r(spec: BundleSpec, cli_r: Optional[int]) -> int:
    r = cli_r if cli_r is not None else spec.r
    if r is not None:
        return r
    levels = tail_ranks(spec.hn)
    if len(levels) == 1:
        return next(iter(levels))
    raise UsageError(
        f"r is required: the HN filtration has {spec.hn.d} pieces, admissible r are {sorted(levels)}",
        EXIT_HYPOTHESIS,
    )


def _ab(args) -> tuple[Fraction, Fraction]:
    if args.a is None or args.b is None:
        raise UsageError("--a and --b are required for this command")
    try:
        return parse_rational(args.a), parse_rational(args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _box(args) -> int:
    return args.oracle if args.oracle else oracle_mod.default_box()


def _strict_check(args, criterion: str) -> None:
    if args.strict and criterion == BOUNDS_ONLY:
        raise UsageError("no Seshadri criterion applies to this bundle and level", EXIT_HYPOTHESIS)


def run(args) -> tuple[dict, int]:
    """Build the report for one invocation; returns (report, exit code)."""
    spec = load_spec(args.spec)
    r = resolve_r(spec, args.r)
    an = analyze_level(spec.hn, r)
    report: dict = {"command": args.command, "input": dict(spec.echo(), r=r)}
    code = EXIT_OK

    if args.command == "analyze":
        _strict_check(args, an.theorem)
        report.update(analysis_section(an))
    elif args.command == "cones":
        report["cones"] = cones_section(an)
    elif args.command == "h0":
        if spec.bundle is None:
            raise UsageError("h0 needs a 'summands' spec; HN data alone does not determine sections")
        report["h0"] = h0_section(spec, an)
    elif args.command == "prop1":
        report["prop1"] = prop1_section(spec, r)
    elif args.command == "seshadri":
        _strict_check(args, an.theorem)
        a, b = _ab(args)
        stratum = Stratum.parse(args.stratum)
        rep = seshadri_summary(spec.hn, r, a, b)
        sec = seshadri_section(rep)
        value = rep.strata[stratum].value
        sec["requested"] = {"stratum": stratum.value, "lower": str(value.lower),
                            "upper": str(value.upper), "exact": value.exact}
        report["seshadri"] = sec
        if args.oracle is not None:
            box = _box(args)
            res = None
            if rep.authoritative:
                res = oracle_mod.oracle_min_ratio(spec.hn, r, a, b, stratum, box)
            report["oracle"] = oracle_section(box, res, value)
            if res is not None and not report["oracle"]["agree"]:
                code = EXIT_DISAGREE
    elif args.command == "sweep":
        _strict_check(args, an.theorem)
        if args.a_range is None or args.b_range is None:
            raise UsageError("--a-range and --b-range are required for sweep")
        try:
            a_vals, b_vals = parse_values(args.a_range), parse_values(args.b_range)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        records = []
        for a in a_vals:
            for b in b_vals:
                rep = seshadri_summary(spec.hn, r, a, b)
                rec = seshadri_section(rep)
                if args.oracle is not None and rep.authoritative:
                    box = _box(args)
                    agree = True
                    for s in STRATA:
                        res = oracle_mod.oracle_min_ratio(spec.hn, r, a, b, s, box)
                        agree = agree and res.min == rep.strata[s].value.lower
                    rec["oracle_agree"] = agree
                    if not agree:
                        code = EXIT_DISAGREE
                records.append(rec)
        report["criterion"] = an.theorem
        report["records"] = records
    return report, code


def emit(report: dict, json_path: Optional[str], out=None) -> None:
    out = out or sys.stdout
    if json_path == "-":
        out.write(dumps(report))
        return
    out.write(render_text(report))
    if json_path:
        Path(json_path).write_text(dumps(report))


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        report, code = run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (GrasshadriError, ValueError) as exc:
        # RankNotAligned, NotAmple, bad stratum, bad box
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    emit(report, args.json)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
