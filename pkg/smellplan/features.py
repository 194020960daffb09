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

from collections import OrderedDict, defaultdict

import pandas as pd

from .io.traces import read_trace_file, TraceEntry
from .utils import AnalysisError, get_logger, class_id_of, package_of

logger = get_logger(__name__)


class NoFeaturesError(AnalysisError):
    def __init__(self):
        AnalysisError.__init__(
            self, "No features found: annotate methods with @feature(\"NAME\") "
                  "or pass a trace file")


class FeatureMap(object):
    """
    Feature name -> qualified names of the methods implementing it, with
    the classes and packages those methods live in derived from the
    names. Features without methods are not kept.
    """
    def __init__(self, features=None, warnings=()):
        features = features if features is not None else {}
        self.features = OrderedDict(
            (name, frozenset(methods))
            for name, methods in sorted(features.items()) if methods)
        self.warnings = list(warnings)

    def feature_names(self):
        return list(self.features)

    def methods_of(self, feature):
        return self.features[feature]

    def classes_of(self, feature):
        return frozenset(class_id_of(method) for method in self.features[feature])

    def packages_of(self, feature):
        return frozenset(package_of(class_id) for class_id in self.classes_of(feature))

    def features_of_class(self, class_id):
        return frozenset(name for name in self.features if class_id in self.classes_of(name))

    def class_features(self):
        """class id -> set of features with a method in it."""
        result = defaultdict(set)
        for name in self.features:
            for class_id in self.classes_of(name):
                result[class_id].add(name)
        return dict(result)

    def relocate(self, old_class_id, new_class_id):
        """A copy where every method of `old_class_id` is renamed into `new_class_id`."""
        renamed = {}
        for name, methods in self.features.items():
            renamed[name] = set(
                new_class_id + method[len(old_class_id):]
                if class_id_of(method) == old_class_id else method
                for method in methods)
        return FeatureMap(renamed, warnings=self.warnings)

    def as_dataframe(self):
        rows = []
        for name, methods in self.features.items():
            for method in sorted(methods):
                rows.append((name, method, class_id_of(method), package_of(class_id_of(method))))
        return pd.DataFrame.from_records(rows, columns=["feature", "method", "class", "package"])

    def is_empty(self):
        return len(self.features) == 0

    def __len__(self):
        return len(self.features)

    def __eq__(self, other):
        return isinstance(other, FeatureMap) and self.features == other.features

    def __hash__(self):
        return hash(tuple(self.features.items()))

    def __str__(self):
        return "FeatureMap(%s)" % ", ".join(
            "%s: %d methods" % (name, len(methods)) for name, methods in self.features.items())

    def __repr__(self):
        return str(self)


def _resolve_trace_method(model, name, by_short_name):
    if model.method_by_name(name) is not None:
        return name
    matches = by_short_name.get(name, [])
    if len(matches) == 1:
        return matches[0]
    return None


def build_feature_map(model, traces=None):
    """
    Union of the model's @feature annotations and trace entries.

    Parameters
    ----------
    model : CodeModel
    traces : list, optional
        Trace file paths, or `TraceEntry` lists already read. A trace may
        name a method by its qualified name with or without the
        parameter list, as long as the short form is unambiguous.

    Unresolved trace entries are skipped and reported in `warnings`.
    """
    features = defaultdict(set)
    for method in model.methods:
        for tag in method.feature_tags:
            features[tag].add(method.qualified_name)

    by_short_name = defaultdict(list)
    for method in model.methods:
        by_short_name[method.qualified_name.split("(", 1)[0]].append(method.qualified_name)

    warnings = []
    for trace in traces or []:
        entries = read_trace_file(trace) if not isinstance(trace, (list, tuple)) else trace
        for entry in entries:
            if not isinstance(entry, TraceEntry):
                entry = TraceEntry(entry[0], entry[1], "<trace>", 0)
            resolved = _resolve_trace_method(model, entry.method, by_short_name)
            if resolved is None:
                message = "%s:%d: trace names unknown method %s" % (
                    entry.path, entry.line, entry.method)
                logger.warning(message)
                warnings.append(message)
                continue
            features[entry.feature].add(resolved)

    feature_map = FeatureMap(features, warnings=warnings)
    logger.info("Built {}".format(feature_map))
    return feature_map
