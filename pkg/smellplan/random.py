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
Seeded generators of synthetic corpora and planning instances, used by
the property tests and the scale check.
"""

import re

import numpy as np

from .io.corpus import SourceUnit
from .ordering import PrecedenceGraph
from .planner import RefactoringAction, ActionCollection, EXTRACT_METHOD


def random_plan_instance(n_actions, seed, edge_prob=0.3, inject_cycle=False):
    """
    Actions 0..n-1 over smells "s0".."s{n-1}" and a random
    precedence graph. Edges follow a random node order, so the graph is a
    DAG unless `inject_cycle` adds one back edge closing a cycle.

    Returns
    -------
    (ActionCollection, PrecedenceGraph)
    """
    rng = np.random.default_rng(seed)
    smell_ids = ["s%d" % i for i in range(n_actions)]
    actions = ActionCollection([
        RefactoringAction(action_id=i, kind=EXTRACT_METHOD, smell_id=smell_id,
                          location=smell_id, rationale="synthetic")
        for i, smell_id in enumerate(smell_ids)])
    order = [smell_ids[int(i)] for i in rng.permutation(n_actions)]
    edges = []
    for i in range(n_actions):
        for j in range(i + 1, n_actions):
            if rng.random() < edge_prob:
                edges.append((order[i], order[j]))
    if inject_cycle:
        if n_actions < 2:
            raise ValueError("A cycle needs at least two actions")
        i, j = sorted(int(k) for k in rng.choice(n_actions, size=2, replace=False))
        edges.append((order[i], order[j]))
        edges.append((order[j], order[i]))
    return actions, PrecedenceGraph.from_edges(smell_ids, edges)


def random_permutation_pair(n, rng):
    ids = list(range(n))
    return [ids[int(i)] for i in rng.permutation(n)], [ids[int(i)] for i in rng.permutation(n)]


def _literal(rng):
    return int(rng.integers(2, 100000))


def _method_text(rng, name, peer, peer_methods, feature, filler):
    # Every statement carries a random literal, so bodies of different
    # methods share no long token runs and are not reported as duplicates.
    lines = []
    if feature is not None:
        lines.append('    // @feature("%s")' % feature)
    lines.append("    public int %s(int a, int b) {" % name)
    lines.append("        int total = a * %d + count;" % _literal(rng))
    if rng.random() < 0.5:
        lines.append("        if (a > b && b > %d) {" % _literal(rng))
        lines.append("            total = total - b;")
        lines.append("        }")
    if peer is not None and rng.random() < 0.7:
        lines.append("        total = total + peer.%s(a, total) * %d;" % (
            peer_methods[int(rng.integers(0, len(peer_methods)))], _literal(rng)))
    for _ in range(filler):
        lines.append("        total = total * %d + b;" % _literal(rng))
    lines.append("        for (int i = %d; i < b; i++) {" % _literal(rng))
    lines.append("            total += i;")
    lines.append("        }")
    lines.append("        return total;")
    lines.append("    }")
    return lines


def random_corpus(n_packages=3, n_classes=9, methods_per_class=3, n_features=3, seed=0,
                  dependency_prob=0.4, feature_prob=0.5, filler_statements=0):
    """
    A corpus of `n_classes` classes with corpus-unique names spread over
    `n_packages` packages. Classes reference each other by simple name
    only, so moving a class between packages never changes how its
    references resolve.

    Parameters
    ----------
    dependency_prob : float
        Chance that a class holds a field of (and calls) another class.
    feature_prob : float
        Chance that a method carries a @feature annotation.
    filler_statements : int
        Extra straight-line statements per method, to grow the corpus.
    """
    rng = np.random.default_rng(seed)
    packages = ["p%d" % k for k in range(n_packages)]
    features = ["f%d" % k for k in range(n_features)]
    methods = ["m%d" % k for k in range(methods_per_class)]
    units = []
    for i in range(n_classes):
        package = packages[i % n_packages] if i < n_packages else packages[
            int(rng.integers(0, n_packages))]
        class_name = "C%d" % i
        peer = None
        if n_classes > 1 and rng.random() < dependency_prob:
            peer = "C%d" % int(rng.choice([j for j in range(n_classes) if j != i]))
        lines = ["package %s;" % package, "", "public class %s {" % class_name,
                 "    private int count;"]
        if peer is not None:
            lines.append("    private %s peer;" % peer)
        for name in methods:
            feature = None
            if features and rng.random() < feature_prob:
                feature = features[int(rng.integers(0, n_features))]
            lines.append("")
            lines.extend(_method_text(rng, name, peer, methods, feature, filler_statements))
        lines.append("}")
        text = "\n".join(lines) + "\n"
        units.append(SourceUnit.from_text("%s/%s.java" % (package, class_name), text))
    return units


PACKAGE_LINE_RE = re.compile(r"^(\s*package\s+)[A-Za-z_][\w.]*(\s*;)", re.MULTILINE)


def relocated_unit(unit, to_package):
    """The same file declaring `to_package` instead of its own package."""
    text = PACKAGE_LINE_RE.sub(lambda m: m.group(1) + to_package + m.group(2), unit.text, count=1)
    return SourceUnit.from_text(unit.path, text)
