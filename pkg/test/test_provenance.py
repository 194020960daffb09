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

import warnings

from smellplan import Project
from smellplan.io.corpus import load_corpus
from smellplan.provenance import generate_provenance, compare_provenance, PROVENANCE_PACKAGES
from smellplan._version import VERSION

from . import data_path

def test_generate_provenance():
    provenance = generate_provenance()
    assert list(provenance) == ["smellplan"] + PROVENANCE_PACKAGES
    assert provenance["smellplan"] == VERSION

def test_compare_identical_provenance():
    provenance = generate_provenance()
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        assert compare_provenance(provenance, generate_provenance()) == 0
        assert len(w) == 0

def test_compare_changed_provenance():
    provenance = generate_provenance()
    changed = dict(provenance)
    changed["pandas"] = "0.0.1"
    changed["hello"] = "1.0.1"
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        # pandas differs on both sides, hello only on one
        assert compare_provenance(provenance, changed) == 3
        assert len(w) == 1

def test_compare_with_missing_provenance():
    assert compare_provenance(generate_provenance(), None) == 0
    assert compare_provenance({}, generate_provenance()) == 0

def test_summarize_data_sources():
    project = Project(load_corpus(data_path("calculator")))
    summary = project.summarize_data_sources()
    assert list(summary) == ["provenance", "input_digest", "files"]
    assert summary["files"] == 1
    assert summary["input_digest"].startswith("sha256:")
    assert compare_provenance(summary["provenance"], generate_provenance()) == 0
