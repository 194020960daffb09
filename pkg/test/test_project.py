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

import json

import pytest

from smellplan import Project
from smellplan.config import load_config
from smellplan.io.corpus import load_corpus
from smellplan.ordering import CycleDetectedError
from smellplan.report import (
    analyze_report, plan_report, remod_report, render, render_json, render_text, REPORT_KEYS)

from . import data_path

def make_project(name, **kwargs):
    return Project.from_root(data_path(name), **kwargs)

def test_stages_are_cached():
    project = make_project("chain")
    assert not project.has_computed("model")
    model = project.model
    assert project.has_computed("model")
    assert project.model is model
    assert len(project) == 1
    assert str(project).endswith("files=1)")

def test_dataframe_views():
    project = make_project("demo")
    assert list(project.as_dataframe("methods").columns) == [
        "qualified_name", "class_id", "mccabe", "sloc", "param_count"]
    assert len(project.as_dataframe("classes")) == 7
    assert len(project.as_dataframe("features")) == 8
    moves = project.as_dataframe("moves")
    assert list(moves.class_id) == ["shop.catalog.TaxRule"]
    assert list(project.as_dataframe("trajectory").step) == [0, 1]
    assert "elapsed_s" in project.as_dataframe("trajectory").columns
    with pytest.raises(ValueError):
        project.as_dataframe("rows")

def test_smell_and_action_views():
    project = make_project("chain")
    smells = project.as_dataframe("smells")
    assert list(smells.kind) == ["DeadCode", "LongMethod", "LongParameterList"]
    assert len(project.as_dataframe("actions")) == 3

def test_plan_on_chain():
    project = make_project("chain")
    assert project.plan.order == (0, 2, 1)
    assert project.plan.fitness == 3.0

def test_plan_without_smells():
    project = make_project("calculator")
    assert project.plan.order == ()
    assert project.plan.fitness == 0.0

def test_cyclic_precedence():
    project = make_project("chain", config=load_config(data_path("config/cyclic.ini")))
    with pytest.raises(CycleDetectedError):
        project.plan

def test_traces_reach_the_feature_map():
    project = make_project("demo", traces=[data_path("traces/demo.tsv")])
    assert project.feature_map.feature_names() == ["billing", "catalog", "shipping"]
    assert len(project.warnings()) == 1

def test_analyze_report_sections():
    report = analyze_report(make_project("calculator"))
    assert list(report) == REPORT_KEYS
    assert report["command"] == "analyze"
    assert report["line_stats"]["total_lines"] == 8
    assert report["metrics"]["avg_complexity"] == 1.0
    for key in ("smells", "ordered_smells", "plan", "feature_metrics", "candidates",
                "suggested_moves", "dry_run"):
        assert report[key] is None
    assert report["warnings"] == []

def test_plan_report_sections():
    report = plan_report(make_project("chain"))
    assert report["line_stats"] is None
    assert len(report["smells"]) == 3
    assert report["ordered_smells"][0].startswith("DeadCode@")
    plan = report["plan"]
    assert plan["seed"] == 0
    assert plan["order"] == [0, 2, 1]
    assert [step["step"] for step in plan["steps"]] == [1, 2, 3]

def test_remod_report_sections():
    report = remod_report(make_project("demo"))
    assert report["dry_run"] is True
    assert report["feature_metrics"]["before"]["fsca"] == 0.1667
    assert report["feature_metrics"]["after"]["fsca"] == 0.0
    assert len(report["feature_metrics"]["trajectory"]) == 2
    assert report["suggested_moves"] == [{
        "class_id": "shop.catalog.TaxRule",
        "from_package": "shop.catalog",
        "to_package": "shop.billing"}]
    assert report["candidates"][0]["class_id"] == "shop.catalog.TaxRule"

def test_json_rendering():
    report = analyze_report(make_project("calculator"))
    text = render_json(report)
    assert text.endswith("}\n")
    assert list(json.loads(text)) == REPORT_KEYS
    assert render(report) == text

def test_text_rendering():
    text = render_text(plan_report(make_project("chain")))
    assert text.startswith("smellplan ")
    assert "Refactoring plan (fitness 3.0, seed 0)" in text
    assert "LongParameterList@legacy.Report.build" in text

    text = render(analyze_report(make_project("calculator")), "text")
    assert "Code/(Comment+Whitespace) Ratio" in text
    assert "3.00" in text

def test_empty_project(tmp_path):
    project = Project.from_root(str(tmp_path))
    report = analyze_report(project)
    assert report["line_stats"]["total_files"] == 0
    assert report["metrics"]["avg_complexity"] == 0.0
    assert report["warnings"][0].startswith("no source files found")
