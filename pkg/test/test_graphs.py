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

from smellplan import Project
from smellplan.graphs import precedence_dot, feature_graph, feature_dot, write_dot

from . import data_path

def test_precedence_dot():
    project = Project.from_root(data_path("chain"))
    text = precedence_dot(project.precedence_graph)
    header = text.split("{", 1)[0]
    assert "digraph" in header and "precedence" in header
    assert '"LongMethod@legacy.Report.build(int,int,int,int,int)"' in text
    assert text.count("->") == 2

def test_feature_graph():
    graph = feature_graph(Project.from_root(data_path("demo")).feature_map)
    assert sorted(graph.successors(("feature", "billing"))) == [
        ("package", "shop.billing"), ("package", "shop.catalog")]
    assert graph.number_of_edges() == 4

def test_write_feature_dot(tmp_path):
    text = feature_dot(Project.from_root(data_path("demo")).feature_map)
    file_path = write_dot(text, str(tmp_path / "features.dot"))
    with open(file_path) as f:
        content = f.read()
    assert content == text
    assert "shape=box" in content
