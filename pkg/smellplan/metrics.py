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

from collections import namedtuple, OrderedDict

import numpy as np
import pandas as pd

from .collection import Collection
from .rounding import ratio_value
from .utils import AnalysisError, get_logger

logger = get_logger(__name__)

HIGH = "H"
MEDIUM = "M"
LOW = "L"

DEFAULT_COHESION_HIGH = 1.0 / 3
DEFAULT_COHESION_MEDIUM = 2.0 / 3
DEFAULT_RULE_OF_30_LIMIT = 30

METHOD_LINES = "MethodLines"
CLASS_METHODS = "ClassMethods"
PACKAGE_CLASSES = "PackageClasses"

MethodMetrics = namedtuple(
    "MethodMetrics", ["qualified_name", "class_id", "mccabe", "sloc", "param_count"])


class ClassMetrics(namedtuple("ClassMetrics", [
        "class_id", "lcom", "cohesion_level", "method_count", "field_count"])):
    def as_record(self):
        record = OrderedDict(self._asdict())
        record["lcom"] = ratio_value(self.lcom, 4)
        return record


RuleOf30Violation = namedtuple("RuleOf30Violation", ["entity_id", "kind", "observed", "limit"])


class RuleOf30Report(Collection):
    """Entities above their rule-of-30 limit, in model order."""
    @property
    def violations(self):
        return list(self.elements)

    def entity_ids(self, kind=None):
        return set(v.entity_id for v in self.elements if kind is None or v.kind == kind)


class MetricsReport(namedtuple("MetricsReport", [
        "methods", "classes", "avg_complexity", "line_stats", "rule_of_30", "warnings"])):
    """
    Parameters
    ----------
    methods : list of MethodMetrics
    classes : list of ClassMetrics
    avg_complexity : float
        Mean McCabe complexity over all methods, 0.0 for a model without
        methods (flagged in `warnings`).
    line_stats : LineStats or None
    rule_of_30 : RuleOf30Report
    warnings : list of str
    """
    def method_metrics(self, qualified_name):
        for m in self.methods:
            if m.qualified_name == qualified_name:
                return m
        return None

    def class_metrics(self, class_id):
        for c in self.classes:
            if c.class_id == class_id:
                return c
        return None

    def methods_dataframe(self):
        return pd.DataFrame.from_records(
            [m._asdict() for m in self.methods], columns=MethodMetrics._fields)

    def classes_dataframe(self):
        return pd.DataFrame.from_records(
            [c.as_record() for c in self.classes], columns=ClassMetrics._fields)


def cyclomatic_complexity(method):
    """1 + decision points (if, loops, case labels, catch, &&, ||, ?:)."""
    return 1 + method.decision_points


def lcom(cls):
    """
    Henderson-Sellers lack of cohesion of methods, clamped to [0, 1].

    With m methods, a fields and mu(j) the number of methods accessing
    field j: ((1/a) * sum(mu) - m) / (1 - m). Classes with at most one
    method or without fields score 0.
    """
    m = len(cls.methods)
    a = len(cls.fields)
    if m <= 1 or a == 0:
        return 0.0
    own_fields = set(cls.fields)
    mu_total = 0
    for method in cls.methods:
        mu_total += len(method.own_field_accesses & own_fields)
    value = (float(mu_total) / a - m) / (1 - m)
    return min(1.0, max(0.0, value))


def cohesion_level(lcom_value, high=DEFAULT_COHESION_HIGH, medium=DEFAULT_COHESION_MEDIUM):
    if not 0.0 <= lcom_value <= 1.0:
        raise AnalysisError("LCOM must lie in [0, 1], got %r" % (lcom_value,))
    if lcom_value <= high:
        return HIGH
    if lcom_value <= medium:
        return MEDIUM
    return LOW


def rule_of_30(model,
               method_lines_limit=DEFAULT_RULE_OF_30_LIMIT,
               class_methods_limit=DEFAULT_RULE_OF_30_LIMIT,
               package_classes_limit=DEFAULT_RULE_OF_30_LIMIT):
    """
    Flag methods longer than `method_lines_limit` code lines, classes
    with more than `class_methods_limit` methods and packages with more
    than `package_classes_limit` classes. The limits themselves pass.
    """
    violations = []
    for package in model.packages:
        if len(package.classes) > package_classes_limit:
            violations.append(RuleOf30Violation(
                package.name, PACKAGE_CLASSES, len(package.classes), package_classes_limit))
        for cls in package.classes:
            if len(cls.methods) > class_methods_limit:
                violations.append(RuleOf30Violation(
                    cls.class_id, CLASS_METHODS, len(cls.methods), class_methods_limit))
            for method in cls.methods:
                if method.sloc > method_lines_limit:
                    violations.append(RuleOf30Violation(
                        method.qualified_name, METHOD_LINES, method.sloc, method_lines_limit))
    return RuleOf30Report(violations)


def build_metrics_report(model, line_stats=None,
                         cohesion_high=DEFAULT_COHESION_HIGH,
                         cohesion_medium=DEFAULT_COHESION_MEDIUM,
                         method_lines_limit=DEFAULT_RULE_OF_30_LIMIT,
                         class_methods_limit=DEFAULT_RULE_OF_30_LIMIT,
                         package_classes_limit=DEFAULT_RULE_OF_30_LIMIT):
    method_metrics = []
    class_metrics = []
    for cls in model.classes:
        for method in cls.methods:
            method_metrics.append(MethodMetrics(
                qualified_name=method.qualified_name,
                class_id=cls.class_id,
                mccabe=cyclomatic_complexity(method),
                sloc=method.sloc,
                param_count=len(method.params)))
        lcom_value = lcom(cls)
        class_metrics.append(ClassMetrics(
            class_id=cls.class_id,
            lcom=lcom_value,
            cohesion_level=cohesion_level(lcom_value, cohesion_high, cohesion_medium),
            method_count=len(cls.methods),
            field_count=len(cls.fields)))

    warnings = []
    if method_metrics:
        avg_complexity = float(np.mean([m.mccabe for m in method_metrics]))
    else:
        avg_complexity = 0.0
        warnings.append("model has no methods; average complexity reported as 0")
        logger.warning(warnings[-1])

    report = MetricsReport(
        methods=method_metrics,
        classes=class_metrics,
        avg_complexity=avg_complexity,
        line_stats=line_stats,
        rule_of_30=rule_of_30(
            model,
            method_lines_limit=method_lines_limit,
            class_methods_limit=class_methods_limit,
            package_classes_limit=package_classes_limit),
        warnings=warnings)
    logger.info("Metrics: {} methods, {} classes, average complexity {:.3f}".format(
        len(method_metrics), len(class_metrics), avg_complexity))
    return report
