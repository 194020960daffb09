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

import pytest

from smellplan.code_model import parse_source
from smellplan.features import build_feature_map, FeatureMap
from smellplan.io.corpus import load_corpus
from smellplan.io.traces import read_trace_file, parse_trace_lines, MalformedTraceLineError

from . import data_path

def demo_model():
    return parse_source(load_corpus(data_path("demo")))

def test_annotated_features():
    fm = build_feature_map(demo_model())
    assert fm.feature_names() == ["billing", "catalog", "shipping"]
    assert fm.classes_of("billing") == {
        "shop.billing.Invoice", "shop.billing.Payment", "shop.catalog.TaxRule"}
    assert fm.packages_of("billing") == {"shop.billing", "shop.catalog"}
    assert fm.packages_of("shipping") == {"shop.shipping"}
    assert fm.features_of_class("shop.catalog.TaxRule") == {"billing"}
    assert fm.warnings == []

def test_class_features():
    class_features = build_feature_map(demo_model()).class_features()
    assert len(class_features) == 7
    assert class_features["shop.catalog.Product"] == {"catalog"}

def test_trace_file():
    entries = read_trace_file(data_path("traces/demo.tsv"))
    assert [(e.feature, e.line) for e in entries] == [
        ("shipping", 2), ("billing", 4), ("catalog", 5)]

def test_traces_add_to_annotations_with_warnings():
    model = parse_source(load_corpus(data_path("calculator")))
    fm = build_feature_map(model, [[("math", "calc.Calculator.add")]])
    assert fm.methods_of("math") == {"calc.Calculator.add(int,int)"}

    fm = build_feature_map(demo_model(), [data_path("traces/demo.tsv")])
    assert fm == build_feature_map(demo_model())
    assert len(fm.warnings) == 1
    assert fm.warnings[0].endswith(":5: trace names unknown method shop.catalog.Missing.nothing()")

def test_malformed_trace():
    with pytest.raises(MalformedTraceLineError) as e:
        read_trace_file(data_path("traces/malformed.tsv"))
    assert e.value.line == 2
    with pytest.raises(MalformedTraceLineError):
        parse_trace_lines(["feature\t"])

def test_empty_map():
    model = parse_source(load_corpus(data_path("calculator")))
    fm = build_feature_map(model)
    assert fm.is_empty()
    assert len(fm.as_dataframe()) == 0

def test_relocate_renames_methods():
    fm = build_feature_map(demo_model())
    moved = fm.relocate("shop.catalog.TaxRule", "shop.billing.TaxRule")
    assert moved.packages_of("billing") == {"shop.billing"}
    assert moved.methods_of("billing") >= {"shop.billing.TaxRule.taxFor(double)"}
    assert moved.relocate("shop.billing.TaxRule", "shop.catalog.TaxRule") == fm

def test_features_without_methods_are_dropped():
    fm = FeatureMap({"empty": set(), "one": {"a.B.c()"}})
    assert fm.feature_names() == ["one"]
    df = fm.as_dataframe()
    assert list(df.columns) == ["feature", "method", "class", "package"]
    assert df["package"].iloc[0] == "a"
