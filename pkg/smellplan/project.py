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

from collections import OrderedDict

import pandas as pd

from .code_model import parse_source
from .collection import Collection
from .config import default_config
from .features import build_feature_map
from .genetic import evolve
from .io.corpus import load_corpus, corpus_digest, DEFAULT_EXTENSIONS
from .line_stats import line_statistics
from .metrics import build_metrics_report
from .ordering import pairwise_analysis, topological_sort
from .planner import candidate_actions, RefactoringPlan
from .provenance import generate_provenance
from .remod import feature_metrics, restructuring_candidates, suggest_moves, trajectory_dataframe
from .smells import detect_smells
from .utils import get_logger

logger = get_logger(__name__)

DATAFRAME_VIEWS = ("methods", "classes", "smells", "actions", "moves", "features", "trajectory")


class Project(Collection):
    """
    Represents a corpus of `SourceUnit`s and every analysis computed over
    it. Each stage is computed on first access and then kept.

    Parameters
    __________
    units : List
        A list of `SourceUnit`s.
    root : str
        (optional) Directory the units were discovered under.
    config : Config
        Thresholds, rules, precedence, GA and restructuring settings;
        defaults to `config.default_config()`.
    traces : List
        (optional) Trace file paths, or lists of `TraceEntry`, adding
        feature membership on top of `@feature` annotations.
    show_progress : bool
        Whether or not to show progress bars while parsing and evolving.
    """
    def __init__(self,
                 units,
                 root=None,
                 config=None,
                 traces=None,
                 show_progress=False):
        Collection.__init__(
            self,
            elements=sorted(units, key=lambda unit: unit.path))
        self.root = root
        self.config = config if config is not None else default_config()
        self.traces = list(traces) if traces is not None else []
        self.show_progress = show_progress
        self._cache = {}

    @classmethod
    def from_root(cls, root, extensions=DEFAULT_EXTENSIONS, **kwargs):
        """Discover and read every source file under `root`."""
        units = load_corpus(root, extensions)
        if len(units) == 0:
            logger.warning("No source files found under {}".format(root))
        return cls(units, root=root, **kwargs)

    def has_computed(self, name):
        return name in self._cache

    def _cached(self, name, compute):
        if name not in self._cache:
            self._cache[name] = compute()
        return self._cache[name]

    @property
    def units(self):
        return list(self.elements)

    @property
    def input_digest(self):
        return self._cached("input_digest", lambda: corpus_digest(self.elements))

    @property
    def line_stats(self):
        return self._cached("line_stats", lambda: line_statistics(self.elements))

    @property
    def model(self):
        return self._cached("model", lambda: parse_source(
            self.elements, show_progress=self.show_progress))

    @property
    def metrics(self):
        return self._cached("metrics", lambda: build_metrics_report(
            self.model, line_stats=self.line_stats, **self.config.thresholds.metric_limits()))

    @property
    def rules(self):
        return self._cached("rules", self.config.detection_rules)

    @property
    def smells(self):
        return self._cached("smells", lambda: detect_smells(self.model, self.metrics, self.rules))

    @property
    def precedence_graph(self):
        return self._cached("precedence_graph", lambda: pairwise_analysis(
            self.smells, self.config.precedence))

    @property
    def ordered_smells(self):
        """Smell ids in resolution order; raises `CycleDetectedError` on a cyclic graph."""
        return self._cached("ordered_smells", lambda: topological_sort(self.precedence_graph))

    @property
    def actions(self):
        return self._cached("actions", lambda: candidate_actions(self.smells, self.model))

    def _evolve_plan(self):
        # Ordering first, so a cyclic precedence matrix is reported as such.
        order = self.ordered_smells
        logger.debug("planning over {} ordered smells".format(len(order)))
        if len(self.actions) == 0:
            logger.info("No smells detected; the plan is empty")
            return RefactoringPlan(order=(), fitness=0.0)
        return evolve(self.actions, self.precedence_graph, cfg=self.config.ga,
                      show_progress=self.show_progress)

    @property
    def plan(self):
        return self._cached("plan", self._evolve_plan)

    @property
    def feature_map(self):
        return self._cached("feature_map", lambda: build_feature_map(self.model, self.traces))

    @property
    def feature_metrics(self):
        """`FeatureMetricsReport` of the corpus as written; raises `NoFeaturesError`."""
        return self._cached("feature_metrics", lambda: feature_metrics(
            self.feature_map, self.model))

    @property
    def candidates(self):
        return self._cached("candidates", lambda: restructuring_candidates(
            self.model, self.metrics, self.feature_map))

    @property
    def remod(self):
        return self._cached("remod", lambda: suggest_moves(
            self.model, self.feature_map,
            max_moves=self.config.remod.max_moves,
            constrain_pcom=self.config.remod.constrain_pcom,
            candidates=self.candidates))

    def warnings(self):
        """Warnings of every stage computed so far, in pipeline order."""
        warnings = []
        if len(self) == 0:
            warnings.append("no source files found%s" % (
                " under %s" % self.root if self.root is not None else ""))
        if self.has_computed("model"):
            warnings.extend(self.model.warnings)
        if self.has_computed("metrics"):
            warnings.extend(self.metrics.warnings)
        if self.has_computed("feature_map"):
            warnings.extend(self.feature_map.warnings)
        return warnings

    def as_dataframe(self, on="methods"):
        """
        A tabular view of one analysis stage.

        Parameters
        ----------
        on : str
            One of "methods", "classes", "smells", "actions", "moves",
            "features" or "trajectory".
        """
        if on == "methods":
            return self.metrics.methods_dataframe()
        if on == "classes":
            return self.metrics.classes_dataframe()
        if on == "smells":
            df = self.smells.as_dataframe()
            if len(df) > 0:
                df["evidence"] = df["evidence"].apply(dict)
            return df
        if on == "actions":
            return self.actions.as_dataframe()
        if on == "moves":
            return pd.DataFrame.from_records(
                self.remod.moves.as_records(), columns=["class_id", "from_package", "to_package"])
        if on == "features":
            return self.feature_map.as_dataframe()
        if on == "trajectory":
            return trajectory_dataframe(self.remod.trajectory, self.remod.elapsed)
        raise ValueError("Unknown view %r; expected one of %s" % (on, ", ".join(DATAFRAME_VIEWS)))

    def generate_provenance(self):
        return generate_provenance()

    def summarize_data_sources(self):
        """Utility function to summarize what an analysis was computed from

        Returns
        ----------
        Dictionary with
        - provenance: tool and package versions (see `provenance.generate_provenance`)
        - input_digest: content hash of the corpus (see `io.corpus.corpus_digest`)
        - files: number of source files
        """
        return OrderedDict([
            ("provenance", self.generate_provenance()),
            ("input_digest", self.input_digest),
            ("files", len(self))])

    def __str__(self):
        return "Project(root=%s, files=%d)" % (self.root, len(self))
