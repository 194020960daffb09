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
Package-level modularity metrics and move-class restructuring.

    sca(f)  = (|P_f| - 1) / (|P| - 1)   packages touched by feature f
    tang(p) = (|F_p| - 1) / (|F| - 1)   features touching package p
    FSCA    = mean sca over features, FTANG = mean tang over touched packages
    PCOM    = mean intra-package dependency-pair density (1 for a single class)
    PCOUP   = share of class dependency edges that cross packages

Moves are only ever simulated; no source file is written.
"""

import time
from collections import namedtuple, OrderedDict, Counter

import numpy as np
import pandas as pd

from .code_model import relocate, class_id_for
from .collection import Collection
from .features import NoFeaturesError
from .metrics import LOW, METHOD_LINES, CLASS_METHODS, build_metrics_report
from .rounding import safe_ratio, ratio_value
from .utils import AnalysisError, EmptyModelError, get_logger, package_of, simple_name

logger = get_logger(__name__)

LOW_COHESION = "LowCohesion"
RULE_OF_30_VIOLATION = "RuleOf30Violation"
SCATTERING_CONTRIBUTOR = "ScatteringContributor"

TOLERANCE = 1e-12
DEFAULT_MAX_MOVES = 10


class UnknownClassError(AnalysisError):
    def __init__(self, class_id, from_package=None):
        self.class_id = class_id
        if from_package is None:
            message = "Unknown class %s" % class_id
        else:
            message = "Class %s is not in package %s" % (class_id, from_package)
        AnalysisError.__init__(self, message)


class UnknownPackageError(AnalysisError):
    def __init__(self, package):
        self.package = package
        AnalysisError.__init__(self, "Unknown package %s" % package)


class SamePackageError(AnalysisError):
    def __init__(self, package):
        self.package = package
        AnalysisError.__init__(self, "Class is already in package %s" % package)


class FeatureMetricsReport(namedtuple("FeatureMetricsReport", [
        "fsca", "ftang", "pcom", "pcoup", "per_feature_sca", "per_package_tang"])):
    @property
    def objective(self):
        return self.fsca + self.ftang

    def as_record(self):
        record = OrderedDict()
        for name in ("fsca", "ftang", "pcom", "pcoup"):
            record[name] = ratio_value(getattr(self, name), 4)
        record["per_feature_sca"] = OrderedDict(
            (k, ratio_value(v, 4)) for k, v in self.per_feature_sca.items())
        record["per_package_tang"] = OrderedDict(
            (k, ratio_value(v, 4)) for k, v in self.per_package_tang.items())
        return record


class MoveOp(namedtuple("MoveOp", ["class_id", "from_package", "to_package"])):
    @property
    def target_class_id(self):
        return class_id_for(self.to_package, simple_name(self.class_id))

    def as_record(self):
        return OrderedDict(self._asdict())

    def __str__(self):
        return "move %s: %s -> %s" % (self.class_id, self.from_package, self.to_package)


class RestructuringCandidate(namedtuple("RestructuringCandidate", [
        "class_id", "reasons", "dominant_feature", "suggested_target_package"])):
    def as_record(self):
        record = OrderedDict(self._asdict())
        record["reasons"] = list(self.reasons)
        return record


class MoveCollection(Collection):
    pass


RemodResult = namedtuple("RemodResult", [
    "moves", "before", "after", "trajectory", "elapsed", "model", "feature_map"])


def _require_features(feature_map):
    if feature_map is None or feature_map.is_empty():
        raise NoFeaturesError()


def _layout(model):
    return dict((cls.class_id, cls.package) for cls in model.classes)


def _scattering(feature_map, layout):
    packages = set(layout.values())
    per_feature = OrderedDict()
    for feature in feature_map.feature_names():
        touched = set(layout.get(c, package_of(c)) for c in feature_map.classes_of(feature))
        if len(packages) > 1:
            per_feature[feature] = float(len(touched) - 1) / (len(packages) - 1)
        else:
            per_feature[feature] = 0.0
    return per_feature


def _tangling(feature_map, layout):
    n_features = len(feature_map)
    hosted = {}
    for feature in feature_map.feature_names():
        for class_id in feature_map.classes_of(feature):
            hosted.setdefault(layout.get(class_id, package_of(class_id)), set()).add(feature)
    per_package = OrderedDict()
    for package in sorted(hosted):
        if n_features > 1:
            per_package[package] = float(len(hosted[package]) - 1) / (n_features - 1)
        else:
            per_package[package] = 0.0
    return per_package


def fsca(feature_map, model):
    """Mean normalized scattering of the features over the model's packages."""
    _require_features(feature_map)
    return float(np.mean(list(_scattering(feature_map, _layout(model)).values())))


def ftang(feature_map, model):
    """Mean normalized tangling over packages touched by at least one feature."""
    _require_features(feature_map)
    return float(np.mean(list(_tangling(feature_map, _layout(model)).values())))


def _objective(feature_map, layout):
    return (float(np.mean(list(_scattering(feature_map, layout).values()))) +
            float(np.mean(list(_tangling(feature_map, layout).values()))))


def package_densities(model):
    densities = OrderedDict()
    for package in model.packages:
        k = len(package.classes)
        if k < 2:
            densities[package.name] = 1.0
            continue
        members = set(cls.class_id for cls in package.classes)
        pairs = set()
        for cls in package.classes:
            for dependency in cls.dependencies & members:
                pairs.add(frozenset((cls.class_id, dependency)))
        densities[package.name] = len(pairs) / (k * (k - 1) / 2.0)
    return densities


def pcom(model):
    """Mean intra-package dependency-pair density."""
    densities = package_densities(model)
    if not densities:
        raise EmptyModelError("PCOM is undefined for a model without packages")
    return float(np.mean(list(densities.values())))


def pcoup(model):
    """Share of class-to-class dependency edges that cross a package boundary."""
    total = 0
    crossing = 0
    for cls in model.classes:
        for dependency in cls.dependencies:
            total += 1
            if package_of(dependency) != cls.package:
                crossing += 1
    return safe_ratio(crossing, total)


def feature_metrics(feature_map, model):
    _require_features(feature_map)
    layout = _layout(model)
    per_feature = _scattering(feature_map, layout)
    per_package = _tangling(feature_map, layout)
    return FeatureMetricsReport(
        fsca=float(np.mean(list(per_feature.values()))),
        ftang=float(np.mean(list(per_package.values()))),
        pcom=pcom(model) if model.packages else 0.0,
        pcoup=pcoup(model),
        per_feature_sca=per_feature,
        per_package_tang=per_package)


def _plurality(values):
    counts = Counter(values)
    if not counts:
        return None
    return sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0][0]


def dominant_feature(cls, feature_map):
    """
    Feature owning a strict majority of the class's feature methods (from
    annotations or traces), or None. Ties go to the smaller name.
    """
    counts = Counter()
    methods = set(m.qualified_name for m in cls.methods)
    tagged = set()
    for feature in feature_map.feature_names():
        hits = feature_map.methods_of(feature) & methods
        if hits:
            counts[feature] += len(hits)
            tagged |= hits
    if not counts:
        return None
    feature, count = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]
    return feature if count * 2 > len(tagged) else None


def restructuring_candidates(model, metrics_report, feature_map=None):
    """
    Classes worth relocating: low cohesion, a rule-of-30 violation on the
    class or one of its methods, or being the only class of some feature
    in its package while that feature also lives elsewhere.
    """
    low = set(c.class_id for c in metrics_report.classes if c.cohesion_level == LOW)
    oversized_classes = metrics_report.rule_of_30.entity_ids(CLASS_METHODS)
    long_methods = metrics_report.rule_of_30.entity_ids(METHOD_LINES)

    candidates = []
    for cls in model.classes:
        reasons = []
        if cls.class_id in low:
            reasons.append(LOW_COHESION)
        if cls.class_id in oversized_classes or any(
                m.qualified_name in long_methods for m in cls.methods):
            reasons.append(RULE_OF_30_VIOLATION)

        dominant = None
        target = None
        if feature_map is not None and not feature_map.is_empty():
            for feature in sorted(feature_map.features_of_class(cls.class_id)):
                classes = feature_map.classes_of(feature)
                same_package = [c for c in classes if package_of(c) == cls.package]
                if same_package == [cls.class_id] and len(feature_map.packages_of(feature)) >= 2:
                    reasons.append(SCATTERING_CONTRIBUTOR)
                    break
            dominant = dominant_feature(cls, feature_map)
            if dominant is not None:
                others = [package_of(c) for c in sorted(feature_map.classes_of(dominant))
                          if c != cls.class_id]
                target = _plurality(others)
                if target == cls.package:
                    target = None
        if reasons:
            candidates.append(RestructuringCandidate(
                class_id=cls.class_id,
                reasons=tuple(reasons),
                dominant_feature=dominant,
                suggested_target_package=target))
    logger.info("{} restructuring candidates".format(len(candidates)))
    return Collection(candidates)


def simulate_move(model, op):
    """
    The model with `op.class_id` relocated to `op.to_package`; `model`
    itself is unchanged.
    """
    cls = model.class_by_id(op.class_id)
    if cls is None:
        raise UnknownClassError(op.class_id)
    if cls.package != op.from_package:
        raise UnknownClassError(op.class_id, op.from_package)
    if op.to_package not in model.package_names:
        raise UnknownPackageError(op.to_package)
    if op.from_package == op.to_package:
        raise SamePackageError(op.to_package)
    logger.debug("simulating {}".format(op))
    return relocate(model, op.class_id, op.to_package)


def _possible_moves(model, movable, layout):
    packages = model.package_names
    names_by_package = {}
    for class_id, package in layout.items():
        names_by_package.setdefault(package, set()).add(simple_name(class_id))
    for class_id in sorted(movable):
        if class_id not in layout:
            continue
        for package in packages:
            if package == layout[class_id] or simple_name(class_id) in names_by_package[package]:
                continue
            yield MoveOp(class_id, layout[class_id], package)


def suggest_moves(model, feature_map, max_moves=DEFAULT_MAX_MOVES, constrain_pcom=False,
                  candidates=None):
    """
    Greedy hill climbing on J = FSCA + FTANG.

    Only restructuring candidates move, each at most once; `candidates`
    defaults to `restructuring_candidates` under default metric limits.
    Each step applies the single candidate move with the lowest resulting
    J, ties broken by (class id, target package), as long as J strictly
    decreases; it stops after `max_moves` moves. With `constrain_pcom`,
    moves that would lower PCOM are skipped.

    `elapsed` holds the seconds spent when each trajectory step was
    reached, starting at 0.0.
    """
    _require_features(feature_map)
    started = time.perf_counter()
    if candidates is None:
        candidates = restructuring_candidates(model, build_metrics_report(model), feature_map)
    movable = set(candidate.class_id for candidate in candidates)
    before = feature_metrics(feature_map, model)
    trajectory = [before]
    elapsed = [0.0]
    moves = []
    current_model, current_map = model, feature_map

    while len(moves) < max_moves and movable:
        layout = _layout(current_model)
        current_j = _objective(current_map, layout)
        scored = []
        for op in _possible_moves(current_model, movable, layout):
            moved = dict(layout)
            renamed = current_map.relocate(op.class_id, op.target_class_id)
            del moved[op.class_id]
            moved[op.target_class_id] = op.to_package
            j = _objective(renamed, moved)
            if j < current_j - TOLERANCE:
                scored.append((j, op.class_id, op.to_package, op))
        scored.sort(key=lambda item: item[:3])

        accepted = None
        for j, _, _, op in scored:
            next_model = simulate_move(current_model, op)
            if constrain_pcom and pcom(next_model) < pcom(current_model) - TOLERANCE:
                logger.debug("{} rejected: PCOM would drop".format(op))
                continue
            accepted = (op, next_model)
            break
        if accepted is None:
            break

        op, current_model = accepted
        current_map = current_map.relocate(op.class_id, op.target_class_id)
        movable.discard(op.class_id)
        moves.append(op)
        trajectory.append(feature_metrics(current_map, current_model))
        elapsed.append(time.perf_counter() - started)
        logger.debug("accepted {}: J {:.4f} -> {:.4f}".format(
            op, current_j, trajectory[-1].objective))

    after = trajectory[-1]
    if after.objective > before.objective + TOLERANCE:
        raise AnalysisError("Restructuring increased FSCA + FTANG")
    logger.info("Suggested {} moves: FSCA {:.4f} -> {:.4f}, FTANG {:.4f} -> {:.4f}".format(
        len(moves), before.fsca, after.fsca, before.ftang, after.ftang))
    return RemodResult(
        moves=MoveCollection(moves),
        before=before,
        after=after,
        trajectory=trajectory,
        elapsed=elapsed,
        model=current_model,
        feature_map=current_map)


def trajectory_dataframe(trajectory, elapsed=None):
    """
    One row per restructuring step with the four package metrics, plus
    `elapsed_s` when the step timings of a `RemodResult` are given.
    """
    df = pd.DataFrame.from_records(
        [(step, r.fsca, r.ftang, r.pcom, r.pcoup) for step, r in enumerate(trajectory)],
        columns=["step", "fsca", "ftang", "pcom", "pcoup"])
    if elapsed is not None:
        if len(elapsed) != len(trajectory):
            raise ValueError("Expected %d step timings, got %d" % (len(trajectory), len(elapsed)))
        df["elapsed_s"] = list(elapsed)
    return df
