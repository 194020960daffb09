# Copyright (c) 2026. smellplan developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Reports are plain ordered dicts with a fixed key order. Every section is
present; sections a command does not compute are null. JSON is the
canonical form and the text rendering is derived from it.
"""

import json
from collections import OrderedDict

import pandas as pd

from .line_stats import LINE_STATS_LABELS
from .provenance import compare_provenance
from .rounding import ratio_value, ratio_str
from .utils import AnalysisError, get_logger
from ._version import VERSION

logger = get_logger(__name__)

TOOL = "smellplan"

REPORT_KEYS = [
    "tool",
    "version",
    "command",
    "provenance",
    "input_digest",
    "line_stats",
    "metrics",
    "smells",
    "ordered_smells",
    "plan",
    "feature_metrics",
    "candidates",
    "suggested_moves",
    "dry_run",
    "warnings",
]


def empty_report(command):
    report = OrderedDict((key, None) for key in REPORT_KEYS)
    report["tool"] = TOOL
    report["version"] = VERSION
    report["command"] = command
    report["warnings"] = []
    return report


def metrics_section(metrics_report):
    return OrderedDict([
        ("avg_complexity", ratio_value(metrics_report.avg_complexity, 4)),
        ("methods", [OrderedDict(m._asdict()) for m in metrics_report.methods]),
        ("classes", [c.as_record() for c in metrics_report.classes]),
        ("rule_of_30", [OrderedDict(v._asdict()) for v in metrics_report.rule_of_30]),
    ])


def plan_section(plan, actions, seed):
    return OrderedDict([
        ("seed", seed),
        ("fitness", ratio_value(plan.fitness, 4)),
        ("generations", max(len(plan.history) - 1, 0)),
        ("order", list(plan.order)),
        ("steps", plan.steps(actions)),
    ])


def feature_metrics_section(before, after, trajectory):
    return OrderedDict([
        ("before", before.as_record()),
        ("after", after.as_record()),
        ("trajectory", [step.as_record() for step in trajectory]),
    ])


def _start(project, command):
    report = empty_report(command)
    summary = project.summarize_data_sources()
    report["provenance"] = summary["provenance"]
    report["input_digest"] = summary["input_digest"]
    return report


def _finish(project, report):
    report["warnings"] = project.warnings()
    return report


def analyze_report(project):
    report = _start(project, "analyze")
    report["line_stats"] = project.line_stats.as_record()
    report["metrics"] = metrics_section(project.metrics)
    return _finish(project, report)


def plan_report(project):
    report = _start(project, "plan")
    report["smells"] = project.smells.as_records()
    report["ordered_smells"] = list(project.ordered_smells)
    report["plan"] = plan_section(project.plan, project.actions, project.config.ga.seed)
    return _finish(project, report)


def remod_report(project):
    report = _start(project, "remod")
    result = project.remod
    report["feature_metrics"] = feature_metrics_section(
        result.before, result.after, result.trajectory)
    report["candidates"] = project.candidates.as_records()
    report["suggested_moves"] = result.moves.as_records()
    report["dry_run"] = True
    return _finish(project, report)


def compare_to_baseline(report, baseline_path):
    """
    Check `report` against an earlier JSON report. Differing package
    versions are appended to the report's warnings.

    Returns the number of provenance discrepancies.
    """
    with open(baseline_path) as f:
        try:
            baseline = json.load(f)
        except ValueError as e:
            raise AnalysisError("%s is not a JSON report: %s" % (baseline_path, e))
    if not isinstance(baseline, dict) or baseline.get("tool") != TOOL:
        raise AnalysisError("%s is not a %s report" % (baseline_path, TOOL))
    if baseline.get("input_digest") != report["input_digest"]:
        logger.info("Baseline {} was computed on different sources".format(baseline_path))
    discrepancies = compare_provenance(
        report["provenance"], baseline.get("provenance"),
        left_outer_diff="In this run but not the baseline",
        right_outer_diff="In the baseline but not this run")
    if discrepancies:
        report["warnings"].append("%d package versions differ from baseline %s" % (
            discrepancies, baseline_path))
    return discrepancies


def render_json(report):
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _table(records, columns=None):
    df = pd.DataFrame.from_records(records, columns=columns)
    if len(df) == 0:
        return "  (none)"
    return df.to_string(index=False)


def _line_stats_text(line_stats):
    lines = ["Statistics"]
    for field, label in LINE_STATS_LABELS.items():
        value = line_stats[field]
        lines.append("  %-34s %s" % (label, ratio_str(value) if isinstance(value, float) else value))
    return lines


def _metric_pair_text(before, after):
    rows = []
    for name in ("fsca", "ftang", "pcom", "pcoup"):
        rows.append((name.upper(), "%.4f" % before[name], "%.4f" % after[name]))
    return pd.DataFrame.from_records(rows, columns=["metric", "before", "after"]).to_string(
        index=False)


def render_text(report):
    """Human-readable rendering of a report dict."""
    lines = ["%s %s: %s" % (report["tool"], report["version"], report["command"]),
             "input %s" % report["input_digest"]]
    if report["line_stats"] is not None:
        lines.append("")
        lines.extend(_line_stats_text(report["line_stats"]))
    metrics = report["metrics"]
    if metrics is not None:
        lines.append("")
        lines.append("Average complexity: %.2f" % metrics["avg_complexity"])
        lines.append("")
        lines.append("Methods")
        lines.append(_table(metrics["methods"]))
        lines.append("")
        lines.append("Classes")
        lines.append(_table(metrics["classes"]))
        lines.append("")
        lines.append("Rule of 30 violations")
        lines.append(_table(metrics["rule_of_30"]))
    if report["smells"] is not None:
        lines.append("")
        lines.append("Smells")
        lines.append(_table(
            [OrderedDict((k, s[k]) for k in ("id", "rule")) for s in report["smells"]],
            columns=["id", "rule"]))
    if report["plan"] is not None:
        plan = report["plan"]
        lines.append("")
        lines.append("Refactoring plan (fitness %s, seed %d)" % (plan["fitness"], plan["seed"]))
        lines.append(_table(
            [OrderedDict((k, s[k]) for k in ("step", "kind", "location")) for s in plan["steps"]],
            columns=["step", "kind", "location"]))
    feature_metrics = report["feature_metrics"]
    if feature_metrics is not None:
        lines.append("")
        lines.append("Feature metrics")
        lines.append(_metric_pair_text(feature_metrics["before"], feature_metrics["after"]))
    if report["candidates"] is not None:
        lines.append("")
        lines.append("Restructuring candidates")
        lines.append(_table(report["candidates"]))
    if report["suggested_moves"] is not None:
        lines.append("")
        lines.append("Suggested moves (dry run, no file was changed)")
        lines.append(_table(report["suggested_moves"],
                            columns=["class_id", "from_package", "to_package"]))
    if report["warnings"]:
        lines.append("")
        lines.append("Warnings")
        lines.extend("  %s" % warning for warning in report["warnings"])
    return "\n".join(lines) + "\n"


def render(report, output_format="json"):
    if output_format == "text":
        return render_text(report)
    return render_json(report)
