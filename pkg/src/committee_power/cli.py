"""Command-line interface.

Subcommands: ``eval`` (winner of one profile), ``power exact`` (full
enumeration), ``power mc`` (seeded Monte Carlo), ``imf`` (embedded
executive-board case), ``map`` (ternary simplex maps).  Results go to
stdout or ``--out``; diagnostics go to stderr.  Exit codes: 0 success,
2 validation error, 3 enumeration-cap error.
"""

import argparse
import sys
from pathlib import Path

from . import imf, reporting
from .core import (RULES, borda_scores, copeland_scores, pairwise_tally,
                   plurality_scores, schulze_strengths, winner)
from .errors import EnumerationCapError, ValidationError
from .exact import influence_exact
from .files import load_committee
from .mc import McConfig, difference_significant, influence_mc
from .simplex import best_rule_map, classify_pairwise, scan_simplex
from .ternary import render_ternary

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAP = 3


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8")
        print(f"wrote {out_path}", file=sys.stderr)


def _matrix_lines(labels, matrix) -> list[str]:
    width = max(6, max(len(x) for x in labels) + 1)
    lines = [" " * width + "".join(f"{lab:>{width}}" for lab in labels)]
    for lab, row in zip(labels, matrix):
        lines.append(f"{lab:>{width}}" + "".join(f"{v:>{width}}" for v in row))
    return lines


def _cmd_eval(args) -> int:
    committee = load_committee(args.committee)
    profile = committee.parse_profile(args.rankings)
    chosen = winner(committee, profile)
    print(committee.label(chosen))
    if not args.verbose:
        return EXIT_OK
    labels = committee.labels
    rule = committee.rule
    if rule in ("plurality", "plurality-runoff"):
        scores = plurality_scores(committee, profile)
        print("plurality scores: "
              + " ".join(f"{lab}={s}" for lab, s in zip(labels, scores)))
    if rule == "borda":
        scores = borda_scores(committee, profile)
        print("borda scores: "
              + " ".join(f"{lab}={s}" for lab, s in zip(labels, scores)))
    if rule in ("plurality-runoff", "copeland", "schulze"):
        tally = pairwise_tally(committee, profile)
        print("pairwise tally:")
        print("\n".join(_matrix_lines(labels, tally)))
    if rule == "copeland":
        scores = copeland_scores(committee, profile)
        print("copeland scores: "
              + " ".join(f"{lab}={s}" for lab, s in zip(labels, scores)))
    if rule == "schulze":
        paths = schulze_strengths(pairwise_tally(committee, profile))
        print("path strengths:")
        print("\n".join(_matrix_lines(labels, paths)))
    return EXIT_OK


def _cmd_power_exact(args) -> int:
    committee = load_committee(args.committee)
    if args.all_rules:
        reports = {
            rule: influence_exact(committee.with_rule(rule), cap=args.cap,
                                  workers=args.workers)
            for rule in RULES
        }
        text = (reporting.rule_matrix_csv(reports) if args.format == "csv"
                else reporting.rule_matrix_table(reports))
    else:
        report = influence_exact(committee, cap=args.cap, workers=args.workers)
        text = (reporting.exact_report_csv(report) if args.format == "csv"
                else reporting.exact_report_table(report))
    _emit(text, args.out)
    return EXIT_OK


def _cmd_power_mc(args) -> int:
    committee = load_committee(args.committee)
    config = McConfig(samples=args.samples, seed=args.seed,
                      confidence=args.confidence, workers=args.workers)
    report = influence_mc(committee, config)
    text = (reporting.mc_report_csv(report) if args.format == "csv"
            else reporting.mc_report_table(report))
    _emit(text, args.out)
    return EXIT_OK


def _cmd_imf(args) -> int:
    if args.dump_dataset:
        _emit(imf.dataset_csv(), args.out)
        return EXIT_OK
    if args.rule not in ("plurality", "plurality-runoff", "copeland"):
        print(f"note: rule {args.rule} is not part of the published "
              "board comparison", file=sys.stderr)
    eras = ("pre", "post") if args.diff or args.era == "both" else (args.era,)
    reports = {}
    for era in eras:
        committee = imf.board_committee(args.rule, era)
        config = McConfig(samples=args.samples, seed=args.seed,
                          confidence=args.confidence, workers=args.workers)
        reports[era] = influence_mc(committee, config)
    diffs = None
    if args.diff:
        diffs = {
            i: difference_significant(reports["pre"], reports["post"], i)
            for i in range(len(imf.LABELS))
        }
    shares = {era: imf.shares_bp(era) for era in eras}
    _emit(reporting.imf_csv(args.rule, imf.LABELS, shares, reports, diffs),
          args.out)
    return EXIT_OK


def _cmd_map(args) -> int:
    if not args.best and not args.rules:
        raise ValidationError("choose either --best or --rules A B")
    player = args.player - 1
    if not 0 <= player < 3:
        raise ValidationError("player must be 1, 2, or 3")
    rules = RULES if args.best else tuple(args.rules)
    for rule in rules:
        if rule not in RULES:
            raise ValidationError(
                f"unknown rule {rule!r}; valid rules: {', '.join(RULES)}"
            )
    grid = scan_simplex(args.resolution, rules=rules,
                        cache_path=args.cache, workers=args.workers)
    if args.best:
        data = best_rule_map(grid, player)
        csv_text = reporting.best_map_csv(data)
    else:
        data = classify_pairwise(grid, args.rules[0], args.rules[1], player)
        csv_text = reporting.classification_csv(data)
    prefix = Path(args.out)
    svg_path = prefix.with_suffix(".svg")
    csv_path = prefix.with_suffix(".csv")
    render_ternary(data, svg_path)
    csv_path.write_text(csv_text, encoding="utf-8")
    print(f"wrote {svg_path} and {csv_path}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="committee-power",
        description="A priori voting power in weighted committees",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="winner of one preference profile")
    p_eval.add_argument("committee", help="committee spec file (JSON)")
    p_eval.add_argument("rankings", nargs="+",
                        help="one ranking string per player, e.g. bca")
    p_eval.add_argument("--verbose", action="store_true",
                        help="also print the rule's tallies")
    p_eval.set_defaults(func=_cmd_eval)

    p_power = sub.add_parser("power", help="influence of every player")
    power_sub = p_power.add_subparsers(dest="mode", required=True)

    p_exact = power_sub.add_parser("exact", help="full enumeration")
    p_exact.add_argument("committee")
    p_exact.add_argument("--all-rules", action="store_true",
                         help="matrix over all five rules")
    p_exact.add_argument("--cap", type=int, default=10 ** 8,
                         help="profile-count cap (default 1e8)")
    p_exact.add_argument("--workers", type=int, default=1)
    p_exact.add_argument("--format", choices=("csv", "table"), default="table")
    p_exact.add_argument("--out", default=None)
    p_exact.set_defaults(func=_cmd_power_exact)

    p_mc = power_sub.add_parser("mc", help="seeded Monte Carlo estimate")
    p_mc.add_argument("committee")
    p_mc.add_argument("--samples", type=int, required=True)
    p_mc.add_argument("--seed", type=int, default=0)
    p_mc.add_argument("--confidence", type=float, default=0.95)
    p_mc.add_argument("--workers", type=int, default=1)
    p_mc.add_argument("--format", choices=("csv", "table"), default="table")
    p_mc.add_argument("--out", default=None)
    p_mc.set_defaults(func=_cmd_power_mc)

    p_imf = sub.add_parser("imf", help="executive-board case study")
    p_imf.add_argument("--rule", choices=RULES, default="plurality")
    p_imf.add_argument("--era", choices=("pre", "post", "both"), default="both")
    p_imf.add_argument("--samples", type=int, default=1_000_000)
    p_imf.add_argument("--seed", type=int, default=0)
    p_imf.add_argument("--confidence", type=float, default=0.95)
    p_imf.add_argument("--diff", action="store_true",
                       help="add pre-vs-post significance flags")
    p_imf.add_argument("--workers", type=int, default=1)
    p_imf.add_argument("--dump-dataset", action="store_true",
                       help="print the embedded vote-share dataset")
    p_imf.add_argument("--out", default=None)
    p_imf.set_defaults(func=_cmd_imf)

    p_map = sub.add_parser("map", help="ternary simplex maps (n=m=3)")
    p_map.add_argument("--rules", nargs=2, metavar=("RULE_A", "RULE_B"),
                       default=None, help="pairwise comparison map")
    p_map.add_argument("--best", action="store_true",
                       help="map of influence-maximizing rule sets")
    p_map.add_argument("--player", type=int, default=1)
    p_map.add_argument("--resolution", type=int, default=60)
    p_map.add_argument("--cache", default=None,
                       help="JSON cache of computed grid values")
    p_map.add_argument("--workers", type=int, default=1)
    p_map.add_argument("--out", default="ternary_map")
    p_map.set_defaults(func=_cmd_map)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
