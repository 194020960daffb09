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
Smell detection with metric/threshold rules.

A rule is a primary condition plus optional guard conditions, all of which
must hold (conjunction). A smell kind fires for an entity if any of its
rules fires (disjunction).
"""

import math
import operator
import re
from collections import namedtuple, OrderedDict

import pandas as pd

from .collection import Collection
from .duplicates import find_duplicates
from .rounding import safe_ratio, ratio_value
from .utils import AnalysisError, get_logger

logger = get_logger(__name__)

DEAD_CODE = "DeadCode"
DUPLICATE_CODE = "DuplicateCode"
LONG_METHOD = "LongMethod"
LONG_PARAMETER_LIST = "LongParameterList"
FEATURE_ENVY = "FeatureEnvy"

SMELL_KINDS = [DEAD_CODE, DUPLICATE_CODE, LONG_PARAMETER_LIST, FEATURE_ENVY, LONG_METHOD]

METHOD_METRICS = frozenset([
    "sloc", "mccabe", "param_count", "incoming_refs", "is_public", "is_entry_point",
    "foreign_access_ratio", "foreign_accesses", "own_accesses"])
PAIR_METRICS = frozenset(["duplicate_span"])
METRICS = METHOD_METRICS | PAIR_METRICS

COMPARATORS = OrderedDict([
    (">", operator.gt),
    (">=", operator.ge),
    ("<", operator.lt),
    ("<=", operator.le),
    ("=", operator.eq),
])
COMPARATOR_ALIASES = {"≥": ">=", "≤": "<=", "==": "="}

CONDITION_RE = re.compile(
    r"^\s*([a-z_]+)\s*(>=|<=|==|=|>|<|≥|≤)\s*([-+0-9.eE]+|inf|nan)\s*$")


class InvalidThresholdError(AnalysisError):
    def __init__(self, rule_id, threshold, reason="must be a finite, non-negative number"):
        self.rule_id = rule_id
        self.threshold = threshold
        AnalysisError.__init__(
            self, "Rule %s: threshold %r %s" % (rule_id, threshold, reason))


class InvalidRuleError(AnalysisError):
    pass


class SmellThresholds(namedtuple("SmellThresholds", [
        "long_method_sloc",
        "long_method_mccabe",
        "long_parameter_list",
        "duplicate_min_tokens",
        "feature_envy_min_accesses",
        "feature_envy_ratio"])):
    pass


SmellThresholds.__new__.__defaults__ = (30, 10, 4, 25, 3, 0.5)

Condition = namedtuple("Condition", ["metric", "comparator", "threshold"])


def _condition_str(condition):
    threshold = condition.threshold
    if float(threshold).is_integer():
        threshold = int(threshold)
    return "%s %s %s" % (condition.metric, condition.comparator, threshold)


class DetectionRule(namedtuple("DetectionRule", [
        "rule_id", "smell_kind", "metric", "comparator", "threshold", "guards"])):
    """
    Parameters
    ----------
    rule_id : str
    smell_kind : str
        One of `SMELL_KINDS`.
    metric, comparator, threshold
        The primary condition, e.g. ("sloc", ">", 30).
    guards : tuple of Condition
        Further conditions that must also hold.
    """
    @property
    def conditions(self):
        return (Condition(self.metric, self.comparator, self.threshold),) + tuple(self.guards)

    @property
    def metrics(self):
        return [c.metric for c in self.conditions]

    def describe(self):
        return " and ".join(_condition_str(c) for c in self.conditions)

    def holds(self, values):
        return all(COMPARATORS[c.comparator](values[c.metric], c.threshold)
                   for c in self.conditions)

    def __str__(self):
        return "%s: %s <= %s" % (self.rule_id, self.smell_kind, self.describe())


def make_rule(rule_id, smell_kind, conditions):
    """
    Validated `DetectionRule` from a kind and a list of
    (metric, comparator, threshold) conditions.
    """
    if smell_kind not in SMELL_KINDS:
        raise InvalidRuleError("Rule %s: unknown smell kind %r (expected one of %s)" % (
            rule_id, smell_kind, ", ".join(SMELL_KINDS)))
    if not conditions:
        raise InvalidRuleError("Rule %s has no conditions" % rule_id)
    normalized = []
    for metric, comparator, threshold in conditions:
        comparator = COMPARATOR_ALIASES.get(comparator, comparator)
        if metric not in METRICS:
            raise InvalidRuleError("Rule %s: unknown metric %r" % (rule_id, metric))
        if comparator not in COMPARATORS:
            raise InvalidRuleError("Rule %s: unknown comparator %r" % (rule_id, comparator))
        try:
            threshold = float(threshold)
        except (TypeError, ValueError):
            raise InvalidThresholdError(rule_id, threshold)
        if not math.isfinite(threshold) or threshold < 0:
            raise InvalidThresholdError(rule_id, threshold)
        normalized.append(Condition(metric, comparator, threshold))

    metrics = set(c.metric for c in normalized)
    if smell_kind == DUPLICATE_CODE:
        if not metrics <= PAIR_METRICS:
            raise InvalidRuleError(
                "Rule %s: DuplicateCode rules may only use duplicate_span" % rule_id)
        if any(c.comparator not in (">", ">=") for c in normalized):
            raise InvalidRuleError(
                "Rule %s: duplicate_span supports only > and >=" % rule_id)
    elif metrics & PAIR_METRICS:
        raise InvalidRuleError(
            "Rule %s: duplicate_span only applies to DuplicateCode" % rule_id)

    primary = normalized[0]
    return DetectionRule(
        rule_id=rule_id,
        smell_kind=smell_kind,
        metric=primary.metric,
        comparator=primary.comparator,
        threshold=primary.threshold,
        guards=tuple(normalized[1:]))


def parse_rule(rule_id, text):
    """
    Parse a rule written as `Kind: metric op value [and metric op value ...]`,
    e.g. `LongMethod: sloc > 50 and mccabe >= 5`.
    """
    if ":" not in text:
        raise InvalidRuleError(
            "Rule %s: expected 'Kind: metric op value [and ...]', got %r" % (rule_id, text))
    kind, body = text.split(":", 1)
    conditions = []
    for part in re.split(r"\band\b", body):
        match = CONDITION_RE.match(part)
        if match is None:
            raise InvalidRuleError("Rule %s: cannot parse condition %r" % (rule_id, part.strip()))
        conditions.append((match.group(1), match.group(2), match.group(3)))
    return make_rule(rule_id, kind.strip(), conditions)


def generate_rules(thresholds=None, extra_rules=(), replace_defaults=False):
    """
    The rule table: the six default rules built from `thresholds` (any
    object with the `SmellThresholds` attribute names) followed by
    `extra_rules`. With `replace_defaults`, only `extra_rules` are used.
    """
    t = thresholds if thresholds is not None else SmellThresholds()
    rules = []
    if not replace_defaults:
        if not 0 <= t.feature_envy_ratio <= 1:
            raise InvalidThresholdError(
                "feature_envy", t.feature_envy_ratio, "must lie in [0, 1]")
        rules = [
            make_rule("long_method_sloc", LONG_METHOD, [("sloc", ">", t.long_method_sloc)]),
            make_rule("long_method_mccabe", LONG_METHOD,
                      [("mccabe", ">", t.long_method_mccabe)]),
            make_rule("long_parameter_list", LONG_PARAMETER_LIST,
                      [("param_count", ">", t.long_parameter_list)]),
            make_rule("dead_code", DEAD_CODE, [
                ("incoming_refs", "=", 0), ("is_public", "=", 0), ("is_entry_point", "=", 0)]),
            make_rule("duplicate_code", DUPLICATE_CODE,
                      [("duplicate_span", ">=", t.duplicate_min_tokens)]),
            make_rule("feature_envy", FEATURE_ENVY, [
                ("foreign_access_ratio", ">", t.feature_envy_ratio),
                ("foreign_accesses", ">=", t.feature_envy_min_accesses)]),
        ]
    rules.extend(extra_rules)
    seen = set()
    for rule in rules:
        if rule.rule_id in seen:
            raise InvalidRuleError("Duplicate rule id %s" % rule.rule_id)
        seen.add(rule.rule_id)
    return rules


def rule_table(rules):
    """The active rules as a DataFrame (what `--explain` prints)."""
    return pd.DataFrame.from_records(
        [(r.rule_id, r.smell_kind, r.describe()) for r in rules],
        columns=["rule_id", "smell_kind", "condition"])


class SmellInstance(namedtuple("SmellInstance", [
        "kind", "location", "location2", "evidence", "rule_id"])):
    """
    A detected smell. `evidence` is a tuple of (metric, value) pairs;
    `location2` is the second method of a duplicate pair or the envied
    class of a feature envy, None otherwise.
    """
    @property
    def smell_id(self):
        if self.location2 is None:
            return "%s@%s" % (self.kind, self.location)
        return "%s@%s|%s" % (self.kind, self.location, self.location2)

    @property
    def evidence_dict(self):
        return OrderedDict(self.evidence)

    def locations(self):
        return [loc for loc in (self.location, self.location2) if loc is not None]

    def as_record(self):
        record = OrderedDict()
        record["id"] = self.smell_id
        record["kind"] = self.kind
        record["location"] = self.location
        record["location2"] = self.location2
        record["rule"] = self.rule_id
        record["evidence"] = OrderedDict(
            (metric, ratio_value(value, 4) if isinstance(value, float) else value)
            for metric, value in self.evidence)
        return record

    def __str__(self):
        return self.smell_id


class SmellCollection(Collection):
    def ids(self):
        return [smell.smell_id for smell in self.elements]

    def by_id(self):
        return OrderedDict((smell.smell_id, smell) for smell in self.elements)

    def of_kind(self, kind):
        return SmellCollection([s for s in self.elements if s.kind == kind])

    def counts(self):
        return OrderedDict((kind, len(self.of_kind(kind))) for kind in SMELL_KINDS)


def smell_sort_key(smell):
    return (smell.kind, smell.location, smell.location2 or "")


def envied_class(method):
    """(class id, accesses) of the most accessed foreign class, (None, 0) if none."""
    best = (None, 0)
    for class_id, count in method.foreign_access_counts:
        if count > best[1]:
            best = (class_id, count)
    return best


def method_metric_values(model, method_metrics, method):
    """Values of every method metric for `method`, plus its envied class."""
    envied, foreign = envied_class(method)
    own = method.own_access_count
    return {
        "sloc": method.sloc,
        "mccabe": method_metrics.mccabe,
        "param_count": method_metrics.param_count,
        "incoming_refs": model.incoming_refs(method.qualified_name),
        "is_public": 1 if method.visibility == "public" else 0,
        "is_entry_point": 1 if method.qualified_name in model.entry_points else 0,
        "foreign_access_ratio": safe_ratio(foreign, foreign + own),
        "foreign_accesses": foreign,
        "own_accesses": own,
    }, envied


def _evidence(rule, values, extra=()):
    metrics = []
    for metric in rule.metrics + list(extra):
        if metric not in metrics:
            metrics.append(metric)
    return tuple((metric, values[metric]) for metric in metrics)


def _min_duplicate_tokens(rules):
    lowest = None
    for rule in rules:
        for condition in rule.conditions:
            bound = condition.threshold
            if condition.comparator == ">":
                bound = math.floor(bound) + 1
            bound = max(1, int(math.ceil(bound)))
            lowest = bound if lowest is None else min(lowest, bound)
    return lowest


def detect_smells(model, report, rules):
    """
    Evaluate every rule over every applicable entity: methods for the
    method metrics, method pairs for duplicate_span.

    Each (kind, location, location2) is reported once, by the first rule
    of the table that fires for it. Output is sorted by (kind, location).
    """
    found = OrderedDict()
    method_rules = [r for r in rules if r.smell_kind != DUPLICATE_CODE]
    pair_rules = [r for r in rules if r.smell_kind == DUPLICATE_CODE]

    if method_rules:
        by_name = dict((m.qualified_name, m) for m in report.methods)
        for method in model.methods:
            values, envied = method_metric_values(model, by_name[method.qualified_name], method)
            for rule in method_rules:
                if not rule.holds(values):
                    continue
                location2 = None
                extra = ()
                if rule.smell_kind == FEATURE_ENVY:
                    if envied is None:
                        continue
                    location2 = envied
                    extra = ("foreign_accesses", "own_accesses")
                key = (rule.smell_kind, method.qualified_name, location2)
                if key not in found:
                    found[key] = SmellInstance(
                        kind=rule.smell_kind,
                        location=method.qualified_name,
                        location2=location2,
                        evidence=_evidence(rule, values, extra),
                        rule_id=rule.rule_id)
                    logger.debug("{} fired on {}".format(rule.rule_id, method.qualified_name))

    if pair_rules:
        min_tokens = _min_duplicate_tokens(pair_rules)
        for a, b, spans in find_duplicates(model.methods, min_tokens):
            values = {"duplicate_span": max(span.length for span in spans)}
            for rule in pair_rules:
                if not rule.holds(values):
                    continue
                key = (DUPLICATE_CODE, a.qualified_name, b.qualified_name)
                if key not in found:
                    found[key] = SmellInstance(
                        kind=DUPLICATE_CODE,
                        location=a.qualified_name,
                        location2=b.qualified_name,
                        evidence=_evidence(rule, values),
                        rule_id=rule.rule_id)

    smells = SmellCollection(sorted(found.values(), key=smell_sort_key))
    logger.info("Detected {} smells".format(len(smells)))
    return smells
