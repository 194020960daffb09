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

from collections import namedtuple, OrderedDict

from .rounding import safe_ratio, ratio_value, ratio_str, round_half_up

CODE = "code"
COMMENT = "comment"
WHITESPACE = "whitespace"

LINE_STATS_FIELDS = [
    "total_files",
    "total_lines",
    "avg_line_length",
    "code_lines",
    "comment_lines",
    "whitespace_lines",
    "code_to_comment_plus_ws",
    "code_to_comment",
    "code_to_ws",
    "code_to_total",
    "code_lines_per_file",
    "comment_lines_per_file",
    "whitespace_lines_per_file",
]

RATIO_FIELDS = set([
    "code_to_comment_plus_ws", "code_to_comment", "code_to_ws", "code_to_total",
    "code_lines_per_file", "comment_lines_per_file", "whitespace_lines_per_file"])

# Row labels of the statistics table, in the order a code analyser prints them.
LINE_STATS_LABELS = OrderedDict([
    ("total_files", "Total Files"),
    ("total_lines", "Total Lines"),
    ("avg_line_length", "Avg Line Length"),
    ("code_lines", "Code Lines"),
    ("comment_lines", "Comment Lines"),
    ("whitespace_lines", "Whitespace Lines"),
    ("code_to_comment_plus_ws", "Code/(Comment+Whitespace) Ratio"),
    ("code_to_comment", "Code/Comment Ratio"),
    ("code_to_ws", "Code/Whitespace Ratio"),
    ("code_to_total", "Code/Total Lines Ratio"),
    ("code_lines_per_file", "Code Lines Per File"),
    ("comment_lines_per_file", "Comment Lines Per File"),
    ("whitespace_lines_per_file", "Whitespace Lines Per File"),
])


class LineStats(namedtuple("LineStats", LINE_STATS_FIELDS)):
    """
    Line statistics over a set of files. Ratios are kept at full
    precision; `as_record` rounds them half-up to two decimals.
    """
    def as_record(self):
        record = OrderedDict()
        for field in LINE_STATS_FIELDS:
            value = getattr(self, field)
            record[field] = ratio_value(value) if field in RATIO_FIELDS else value
        return record

    def as_table(self):
        """(label, rendered value) rows in the analyser's order."""
        rows = []
        for field, label in LINE_STATS_LABELS.items():
            value = getattr(self, field)
            rows.append((label, ratio_str(value) if field in RATIO_FIELDS else str(value)))
        return rows


def _strip_newline(line):
    return line.rstrip("\r\n")


def _scan_line(line, in_block):
    """
    Scan one line for code outside comments and string literals.

    Returns (has_code, in_block_after).
    """
    has_code = False
    i = 0
    n = len(line)
    while i < n:
        if in_block:
            end = line.find("*/", i)
            if end < 0:
                return has_code, True
            in_block = False
            i = end + 2
            continue
        c = line[i]
        if line.startswith("//", i):
            break
        if line.startswith("/*", i):
            in_block = True
            i += 2
            continue
        if c in "\"'":
            has_code = True
            i += 1
            while i < n and line[i] != c:
                i += 2 if line[i] == "\\" else 1
            i += 1
            continue
        if not c.isspace():
            has_code = True
        i += 1
    return has_code, in_block


def classify_lines(raw_lines):
    """
    Classify every line of a file as code, comment or whitespace.

    A line is whitespace when it holds only blanks or tabs, comment when
    everything on it lies inside comments, and code otherwise (a line
    with code and a trailing comment is code).
    """
    kinds = []
    in_block = False
    for raw in raw_lines:
        line = _strip_newline(raw)
        if not line.strip(" \t"):
            kinds.append(WHITESPACE)
            continue
        has_code, in_block = _scan_line(line, in_block)
        kinds.append(CODE if has_code else COMMENT)
    return kinds


def line_statistics(files):
    """
    Aggregate `LineStats` over a list of `SourceUnit`s. Empty input gives
    all-zero statistics.
    """
    total_files = len(files)
    code = comment = whitespace = 0
    total_chars = 0
    for unit in files:
        for raw, kind in zip(unit.raw_lines, classify_lines(unit.raw_lines)):
            total_chars += len(_strip_newline(raw))
            if kind == CODE:
                code += 1
            elif kind == COMMENT:
                comment += 1
            else:
                whitespace += 1
    total = code + comment + whitespace
    return LineStats(
        total_files=total_files,
        total_lines=total,
        avg_line_length=round_half_up(safe_ratio(total_chars, total)),
        code_lines=code,
        comment_lines=comment,
        whitespace_lines=whitespace,
        code_to_comment_plus_ws=safe_ratio(code, comment + whitespace),
        code_to_comment=safe_ratio(code, comment),
        code_to_ws=safe_ratio(code, whitespace),
        code_to_total=safe_ratio(code, total),
        code_lines_per_file=safe_ratio(code, total_files),
        comment_lines_per_file=safe_ratio(comment, total_files),
        whitespace_lines_per_file=safe_ratio(whitespace, total_files))
