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
Feature annotations are comment lines written directly above a method:

    // @feature("checkout")
    // @feature("audit")
    public void pay(Order order) { ... }

Stacked annotations all apply to the method that follows them.
"""

import re
from collections import defaultdict

from .utils import AnalysisError, get_logger

logger = get_logger(__name__)

ANNOTATION_RE = re.compile(
    r'^\s*(?://+|/\*+)\s*@feature\(\s*"([^"\s][^"]*)"\s*\)\s*(?:\*+/)?\s*$')
MARKER_RE = re.compile(r'^\s*(?://|/\*).*@feature\b')


class MalformedAnnotationError(AnalysisError):
    def __init__(self, path, line):
        self.path = path
        self.line = line
        AnalysisError.__init__(
            self, "%s:%d: malformed annotation, expected @feature(\"NAME\")" % (path, line))


def annotation_name(line, path="<source>", line_number=0):
    """
    Feature name on an annotation comment line, None for any other line.
    Raises `MalformedAnnotationError` for a comment that mentions @feature
    without a quoted name.
    """
    match = ANNOTATION_RE.match(line)
    if match:
        return match.group(1).strip()
    if MARKER_RE.match(line):
        raise MalformedAnnotationError(path, line_number)
    return None


def check_annotations(raw_lines, path="<source>"):
    """Validate every annotation comment in a file."""
    for index, line in enumerate(raw_lines):
        annotation_name(line, path, index + 1)


def feature_tags_above(raw_lines, start_row, path="<source>"):
    """
    Feature names of the annotation lines stacked directly above row
    `start_row` (0-based), nearest first.
    """
    tags = []
    row = start_row - 1
    while row >= 0:
        name = annotation_name(raw_lines[row], path, row + 1)
        if name is None:
            break
        tags.append(name)
        row -= 1
    return tags


def annotated_rows(raw_lines):
    """0-based rows holding a well-formed annotation."""
    return [index for index, line in enumerate(raw_lines)
            if ANNOTATION_RE.match(line)]


def extract_feature_tags(files):
    """
    Map of feature name -> set of qualified method names carrying that
    feature's annotation. Untagged methods appear nowhere.
    """
    from .code_model import parse_source

    model = parse_source(files)
    fragment = defaultdict(set)
    for method in model.methods:
        for tag in method.feature_tags:
            fragment[tag].add(method.qualified_name)
    return dict(fragment)
