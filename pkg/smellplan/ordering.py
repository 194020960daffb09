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
Resolution order of detected smells.

Kind-level rules (`KindPrecedence`) say which smell kind is resolved
before which; an instance edge is drawn only when the two smells also
touch a common class.
"""

from collections import OrderedDict

import networkx as nx

from .smells import (
    SMELL_KINDS, DEAD_CODE, DUPLICATE_CODE, LONG_METHOD, LONG_PARAMETER_LIST, FEATURE_ENVY)
from .utils import AnalysisError, get_logger, class_id_of

logger = get_logger(__name__)

DEFAULT_PRECEDENCE = OrderedDict([
    (DEAD_CODE, [DUPLICATE_CODE, LONG_METHOD, FEATURE_ENVY]),
    (DUPLICATE_CODE, [LONG_METHOD]),
    (LONG_PARAMETER_LIST, [LONG_METHOD]),
])


class CycleDetectedError(AnalysisError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        AnalysisError.__init__(
            self, "Precedence graph has a cycle: %s" % " -> ".join(
                [str(node) for node in self.cycle] + [str(self.cycle[0])]))


class InvalidPrecedenceError(AnalysisError):
    pass


def kind_rank(kind):
    """Position of a smell kind in the default order, unknown kinds last."""
    if kind in SMELL_KINDS:
        return SMELL_KINDS.index(kind)
    return len(SMELL_KINDS)


class KindPrecedence(object):
    """
    Matrix over smell kinds: `before(A, B)` is True when smells of kind A
    are resolved before smells of kind B.
    """
    def __init__(self, rows=None):
        if rows is None:
            rows = DEFAULT_PRECEDENCE
        pairs = set()
        for before, afters in rows.items():
            for after in afters:
                for kind in (before, after):
                    if kind not in SMELL_KINDS:
                        raise InvalidPrecedenceError("Unknown smell kind %r" % kind)
                if before == after:
                    raise InvalidPrecedenceError(
                        "A smell kind cannot precede itself (%s)" % before)
                pairs.add((before, after))
        self.pairs = frozenset(pairs)

    @classmethod
    def default(cls):
        return cls(DEFAULT_PRECEDENCE)

    def with_rows(self, rows):
        """A copy where every kind named in `rows` gets that row instead of its own."""
        merged = OrderedDict()
        for kind in SMELL_KINDS:
            current = [after for (before, after) in sorted(self.pairs) if before == kind]
            merged[kind] = list(rows[kind]) if kind in rows else current
        for kind in rows:
            if kind not in merged:
                merged[kind] = list(rows[kind])
        return KindPrecedence(merged)

    def before(self, first, second):
        return (first, second) in self.pairs

    def rows(self):
        table = OrderedDict()
        for kind in SMELL_KINDS:
            afters = [after for after in SMELL_KINDS if self.before(kind, after)]
            if afters:
                table[kind] = afters
        return table

    def is_acyclic(self):
        graph = nx.DiGraph()
        graph.add_edges_from(self.pairs)
        return nx.is_directed_acyclic_graph(graph)

    def __eq__(self, other):
        return isinstance(other, KindPrecedence) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __str__(self):
        return "KindPrecedence(%s)" % ", ".join(
            "%s -> %s" % pair for pair in sorted(self.pairs))


class PrecedenceGraph(object):
    """
    Directed graph over smell ids; an edge (x, y) means "resolve x before y".
    Node attributes `kind`, `location` and `location2` drive the
    deterministic tie-break of `topological_sort`.
    """
    def __init__(self, graph=None):
        self.graph = graph if graph is not None else nx.DiGraph()

    @classmethod
    def from_edges(cls, nodes, edges):
        graph = nx.DiGraph()
        graph.add_nodes_from(nodes)
        for before, after in edges:
            if before == after:
                raise InvalidPrecedenceError("Self-edge on %s" % before)
            graph.add_edge(before, after)
        return cls(graph)

    def nodes(self):
        return list(self.graph.nodes)

    def edges(self):
        return sorted(self.graph.edges)

    def prerequisites(self, node):
        return set(self.graph.predecessors(node))

    def sort_key(self, node):
        data = self.graph.nodes[node]
        if "kind" in data:
            return (kind_rank(data["kind"]), data["location"], data["location2"] or "")
        return (len(SMELL_KINDS), str(node), "")

    def __len__(self):
        return self.graph.number_of_nodes()

    def __contains__(self, node):
        return node in self.graph

    def __str__(self):
        return "PrecedenceGraph(nodes=%d, edges=%d)" % (
            self.graph.number_of_nodes(), self.graph.number_of_edges())

    def __repr__(self):
        return str(self)


def _smell_classes(smell):
    # FeatureEnvy's second location is a class, not a method
    locations = [smell.location]
    if smell.kind == DUPLICATE_CODE and smell.location2 is not None:
        locations.append(smell.location2)
    return set(class_id_of(location) for location in locations)


def pairwise_analysis(smells, kind_precedence=None):
    """
    Build the `PrecedenceGraph`: one node per smell, and an edge (x, y)
    when kind(x) precedes kind(y) and the two smells share a class
    (same method, same class, or a duplicate pair endpoint).
    """
    kp = kind_precedence if kind_precedence is not None else KindPrecedence.default()
    graph = nx.DiGraph()
    by_class = OrderedDict()
    for smell in smells:
        graph.add_node(smell.smell_id, kind=smell.kind, location=smell.location,
                       location2=smell.location2)
        for class_id in sorted(_smell_classes(smell)):
            by_class.setdefault(class_id, []).append(smell)
    for group in by_class.values():
        for x in group:
            for y in group:
                if x.smell_id != y.smell_id and kp.before(x.kind, y.kind):
                    graph.add_edge(x.smell_id, y.smell_id)
    result = PrecedenceGraph(graph)
    logger.info("Built {}".format(result))
    return result


def find_cycle(precedence_graph):
    """One cycle as a node list, or None."""
    try:
        edges = nx.find_cycle(precedence_graph.graph)
    except nx.NetworkXNoCycle:
        return None
    return [before for before, _ in edges]


def topological_sort(precedence_graph):
    """
    Kahn's algorithm; among ready nodes the one with the smallest
    (kind rank, location, second location) goes first.

    Raises `CycleDetectedError` naming one cycle.
    """
    try:
        return list(nx.lexicographical_topological_sort(
            precedence_graph.graph, key=precedence_graph.sort_key))
    except nx.NetworkXUnfeasible:
        raise CycleDetectedError(find_cycle(precedence_graph))


def is_valid_order(order, precedence_graph):
    """Is `order` a permutation of the nodes that respects every edge?"""
    position = dict((node, i) for i, node in enumerate(order))
    if len(position) != len(order) or set(position) != set(precedence_graph.graph.nodes):
        return False
    return all(position[before] < position[after] for before, after in precedence_graph.edges())
