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

from smellplan.annotations import (
    extract_feature_tags, annotation_name, MalformedAnnotationError)
from smellplan.code_model import parse_source
from smellplan.io.corpus import SourceUnit, load_corpus

from . import data_path

def test_stacked_and_single_annotations():
    fragment = extract_feature_tags(load_corpus(data_path("annotated")))
    assert fragment["sample"] == {"tags.Tagged.sample()"}
    assert fragment["checkout"] == {"tags.Tagged.pay()"}
    assert fragment["audit"] == {"tags.Tagged.pay()"}
    assert "lonely" not in fragment

def test_untagged_methods_carry_nothing():
    model = parse_source(load_corpus(data_path("annotated")))
    assert model.method_by_name("tags.Tagged.plain()").feature_tags == frozenset()
    assert model.method_by_name("tags.Tagged.pay()").feature_tags == frozenset(["checkout", "audit"])

def test_orphan_annotation_is_a_warning():
    model = parse_source(load_corpus(data_path("annotated")))
    assert len(model.warnings) == 1
    assert model.warnings[0].startswith("Tagged.java:16:")

def test_no_annotations():
    assert extract_feature_tags(load_corpus(data_path("calculator"))) == {}

def test_malformed_annotation():
    unit = SourceUnit.from_path(data_path("annotated/BadTag.java.txt"))
    with pytest.raises(MalformedAnnotationError) as e:
        extract_feature_tags([unit])
    assert e.value.line == 4

def test_annotation_forms():
    assert annotation_name('  // @feature("sample")\n') == "sample"
    assert annotation_name('/* @feature( "two words" ) */') == "two words"
    assert annotation_name("int x = 1;") is None
    with pytest.raises(MalformedAnnotationError):
        annotation_name("// @feature()")

def test_annotation_after_form_feed_in_string():
    model = parse_source(load_corpus(data_path("formfeed")))
    charge = model.method_by_name("pay.Till.charge(int)")
    assert charge.feature_tags == frozenset(["pay"])
    assert charge.sloc == 3
    assert charge.start_line == 6
