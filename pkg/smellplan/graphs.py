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
DOT export for inspection with Graphviz. Node names are generated
("n0", "n1", ...) and the readable ids go into labels, since smell ids
contain characters DOT does not accept in bare names.
"""

import networkx as nx

from .utils import get_logger

logger = get_logger(__name__)


def _to_dot(graph, labels, name):
    relabeled = nx.DiGraph(name=name)
    node_names = {}
    for i, node in enumerate(sorted(graph.nodes, key=str)):
        node_names[node] = "n%d" % i
        relabeled.add_node(node_names[node], label='"%s"' % labels.get(node, node),
                           **graph.nodes[node].get("dot", {}))
    for before, after in sorted(graph.edges, key=lambda e: (str(e[0]), str(e[1]))):
        relabeled.add_edge(node_names[before], node_names[after])
    return nx.nx_pydot.to_pydot(relabeled).to_string()


def precedence_dot(precedence_graph):
    """The smell precedence graph: an edge means "resolve before"."""
    return _to_dot(precedence_graph.graph, {}, "precedence")


def feature_graph(feature_map):
    """Bipartite feature -> package graph (an edge per package a feature touches)."""
    graph = nx.DiGraph()
    for feature in feature_map.feature_names():
        feature_node = ("feature", feature)
        graph.add_node(feature_node, dot={"shape": "ellipse"})
        for package in sorted(feature_map.packages_of(feature)):
            package_node = ("package", package)
            graph.add_node(package_node, dot={"shape": "box"})
            graph.add_edge(feature_node, package_node)
    return graph


def feature_dot(feature_map):
    graph = feature_graph(feature_map)
    labels = dict((node, node[1]) for node in graph.nodes)
    return _to_dot(graph, labels, "features")


def write_dot(text, file_path):
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info("Wrote {}".format(file_path))
    return file_path
