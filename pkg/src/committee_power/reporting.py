"""Text and CSV rendering of reports.

Output is byte-stable for fixed inputs: rows are ordered by player index,
floats use fixed-width formats with a '.' decimal separator, and every
document embeds the parameters that produced it in '#' comment lines.
"""

from .exact import ExactPowerReport
from .mc import McPowerReport, SignificanceTest
from .simplex import BestRuleMap, PairwiseClassification


def _weights_str(committee) -> str:
    return ",".join(str(w) for w in committee.weights)


def exact_report_csv(report: ExactPowerReport) -> str:
    c = report.committee
    lines = [
        f"# rule={c.rule} m={c.m} weights={_weights_str(c)}",
        "player,weight,swing_count,unnormalized_exact,normalized_exact,normalized_float",
    ]
    for i in range(c.n):
        lines.append(
            f"{i + 1},{c.weights[i]},{report.swing_counts[i]},"
            f"{report.unnormalized[i]},{report.normalized[i]},"
            f"{float(report.normalized[i]):.4f}"
        )
    return "\n".join(lines) + "\n"


def exact_report_table(report: ExactPowerReport) -> str:
    c = report.committee
    header = f"{'player':>6} {'weight':>8} {'swings':>10} {'influence':>10}"
    lines = [f"rule={c.rule} m={c.m} weights=({_weights_str(c)})", header]
    for i in range(c.n):
        lines.append(
            f"{i + 1:>6} {c.weights[i]:>8} {report.swing_counts[i]:>10} "
            f"{float(report.normalized[i]):>10.4f}"
        )
    return "\n".join(lines) + "\n"


def rule_matrix_csv(reports: dict[str, ExactPowerReport]) -> str:
    """Rules-by-players matrix of normalized influence, 4 decimals."""
    first = next(iter(reports.values())).committee
    n = first.n
    lines = [
        f"# m={first.m} weights={_weights_str(first)}",
        "rule," + ",".join(f"player_{i + 1}" for i in range(n)),
    ]
    for rule, report in reports.items():
        values = ",".join(f"{float(x):.4f}" for x in report.normalized)
        lines.append(f"{rule},{values}")
    return "\n".join(lines) + "\n"


def rule_matrix_table(reports: dict[str, ExactPowerReport]) -> str:
    first = next(iter(reports.values())).committee
    n = first.n
    lines = [f"m={first.m} weights=({_weights_str(first)})"]
    lines.append(f"{'rule':<18}" + "".join(f"{f'player {i + 1}':>10}" for i in range(n)))
    for rule, report in reports.items():
        row = "".join(f"{float(x):>10.4f}" for x in report.normalized)
        lines.append(f"{rule:<18}{row}")
    return "\n".join(lines) + "\n"


def mc_report_csv(report: McPowerReport) -> str:
    c = report.committee
    lines = [
        f"# rule={c.rule} m={c.m} weights={_weights_str(c)}",
        f"# samples={report.samples} seed={report.seed} "
        f"confidence={report.confidence} generator={report.generator}",
        "player,weight,hit_count,unnormalized_estimate,normalized_estimate,"
        "ci_half_width,overshoot",
    ]
    unnorm = report.unnormalized_estimates
    norm = report.normalized_estimates
    ci = report.ci_half_widths
    flags = report.overshoot_flags
    for i in range(c.n):
        lines.append(
            f"{i + 1},{c.weights[i]},{report.hit_counts[i]},"
            f"{unnorm[i]:.6f},{norm[i]:.6f},{ci[i]:.6f},{int(flags[i])}"
        )
    return "\n".join(lines) + "\n"


def mc_report_table(report: McPowerReport) -> str:
    c = report.committee
    lines = [
        f"rule={c.rule} m={c.m} weights=({_weights_str(c)})",
        f"samples={report.samples} seed={report.seed} "
        f"confidence={report.confidence} generator={report.generator}",
        f"{'player':>6} {'weight':>8} {'estimate':>10} {'ci':>10}",
    ]
    norm = report.normalized_estimates
    ci = report.ci_half_widths
    for i in range(c.n):
        mark = " !" if report.overshoot_flags[i] else ""
        lines.append(f"{i + 1:>6} {c.weights[i]:>8} {norm[i]:>10.4f} "
                     f"{ci[i]:>10.4f}{mark}")
    return "\n".join(lines) + "\n"


def imf_csv(rule: str, labels, shares: dict, reports: dict,
            diffs: dict[int, SignificanceTest] | None = None) -> str:
    """Board table: one row per seat, estimate and CI columns per era."""
    eras = tuple(reports)
    first = reports[eras[0]]
    lines = [
        f"# rule={rule} m={first.committee.m} samples={first.samples} "
        f"seed={first.seed} confidence={first.confidence} "
        f"generator={first.generator}",
    ]
    header = ["member"]
    for era in eras:
        header.append(f"share_{era}")
    for era in eras:
        header.extend([f"estimate_{era}", f"ci_{era}"])
    if diffs is not None:
        header.extend(["z_score", "significant"])
    lines.append(",".join(header))
    norms = {era: reports[era].normalized_estimates for era in eras}
    cis = {era: reports[era].ci_half_widths for era in eras}
    for i, label in enumerate(labels):
        row = [f'"{label}"']
        for era in eras:
            row.append(f"{shares[era][i] / 100:.2f}")
        for era in eras:
            row.append(f"{norms[era][i]:.4f}")
            row.append(f"{cis[era][i]:.4f}")
        if diffs is not None:
            test = diffs[i]
            row.append(f"{test.z_score:.3f}")
            row.append(str(int(test.significant)))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def classification_csv(cls: PairwiseClassification) -> str:
    lines = [
        f"# ruleA={cls.rule_a} ruleB={cls.rule_b} player={cls.player + 1} "
        f"resolution={cls.resolution}",
        "w1,w2,w3,class,diff_numerator,diff_denominator",
    ]
    for point, klass, diff in zip(cls.points, cls.classes, cls.diffs):
        lines.append(
            f"{point[0]},{point[1]},{point[2]},{klass.value},"
            f"{diff.numerator},{diff.denominator}"
        )
    return "\n".join(lines) + "\n"


def best_map_csv(bm: BestRuleMap) -> str:
    lines = [
        f"# player={bm.player + 1} resolution={bm.resolution}",
        "w1,w2,w3,best_rules",
    ]
    for point, rules in zip(bm.points, bm.best):
        lines.append(f"{point[0]},{point[1]},{point[2]},{'+'.join(rules)}")
    return "\n".join(lines) + "\n"
