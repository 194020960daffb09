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
Feature trace files: UTF-8 text, one `feature<TAB>qualified.method.name`
per line. Blank lines and lines starting with `#` are ignored.
"""

from collections import namedtuple

from ..utils import AnalysisError, get_logger

logger = get_logger(__name__)


class MalformedTraceLineError(AnalysisError):
    def __init__(self, path, line, text):
        self.path = path
        self.line = line
        AnalysisError.__init__(
            self,
            "%s:%d: expected 'feature<TAB>qualified.method.name', got %r" % (path, line, text))


TraceEntry = namedtuple("TraceEntry", ["feature", "method", "path", "line"])


def parse_trace_lines(lines, path="<trace>"):
    entries = []
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedTraceLineError(path, line_number, line)
        feature, method = parts[0].strip(), parts[1].strip()
        if not feature or not method:
            raise MalformedTraceLineError(path, line_number, line)
        entries.append(TraceEntry(feature, method, path, line_number))
    return entries


def read_trace_file(path):
    with open(path, "r", encoding="utf-8") as f:
        entries = parse_trace_lines(f.read().splitlines(), path=path)
    logger.debug("read {} trace entries from {}".format(len(entries), path))
    return entries
