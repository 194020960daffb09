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

import numpy as np

from smellplan.io.corpus import SourceUnit, load_corpus
from smellplan.line_stats import (
    line_statistics, classify_lines, CODE, COMMENT, WHITESPACE, LINE_STATS_LABELS)

from . import data_path

def test_calculator_statistics():
    stats = line_statistics(load_corpus(data_path("calculator")))
    assert stats.total_files == 1
    assert stats.total_lines == 8
    assert stats.code_lines == 6
    assert stats.comment_lines == 0
    assert stats.whitespace_lines == 2
    assert stats.avg_line_length == 12
    record = stats.as_record()
    assert record["code_to_comment_plus_ws"] == 3.0
    assert record["code_to_comment"] == 0.0
    assert record["code_to_ws"] == 3.0
    assert record["code_to_total"] == 0.75
    assert record["code_lines_per_file"] == 6.0

def test_calculator_table_rendering():
    stats = line_statistics(load_corpus(data_path("calculator")))
    table = dict(stats.as_table())
    assert table["Total Lines"] == "8"
    assert table["Code/(Comment+Whitespace) Ratio"] == "3.00"
    assert table["Code/Comment Ratio"] == "0.00"
    assert table["Code/Whitespace Ratio"] == "3.00"
    assert table["Code/Total Lines Ratio"] == "0.75"
    assert [label for label, _ in stats.as_table()] == list(LINE_STATS_LABELS.values())

def test_blank_file():
    stats = line_statistics(load_corpus(data_path("blank")))
    assert stats.code_lines == 0
    assert stats.whitespace_lines == 3
    for value in (stats.code_to_comment_plus_ws, stats.code_to_comment,
                  stats.code_to_ws, stats.code_to_total):
        assert value == 0.0

def test_mixed_file():
    stats = line_statistics(load_corpus(data_path("mixed")))
    assert stats.total_lines == 10
    assert (stats.code_lines, stats.comment_lines, stats.whitespace_lines) == (5, 3, 2)
    assert stats.as_record()["code_to_comment"] == 1.67
    assert stats.as_record()["code_to_total"] == 0.5

def test_empty_input():
    stats = line_statistics([])
    assert stats.total_files == 0
    assert stats.total_lines == 0
    assert stats.avg_line_length == 0
    assert stats.code_lines_per_file == 0.0

def test_line_classification():
    lines = [
        "int a = 1; // trailing\n",
        "   // only a comment\n",
        "/* opens\n",
        "   still inside */\n",
        "/* closed */ int b;\n",
        "\t \n",
        "String s = \"// not a comment\";\n",
        "/* a */ /* b */\n",
    ]
    assert classify_lines(lines) == [
        CODE, COMMENT, COMMENT, COMMENT, CODE, WHITESPACE, CODE, COMMENT]

def test_totals_add_up_on_random_line_mixes():
    rng = np.random.default_rng(11)
    pool = ["x = 1;", "// note", "/* a", "b */", "", "   ", "\t", "y(); /* c */", "\"/*\";"]
    for trial in range(200):
        lines = [pool[int(i)] + "\n" for i in rng.integers(0, len(pool), size=int(rng.integers(0, 40)))]
        stats = line_statistics([SourceUnit.from_text("f%d.java" % trial, "".join(lines))])
        assert stats.total_lines == stats.code_lines + stats.comment_lines + stats.whitespace_lines
        assert stats.total_lines == len(lines)

def test_form_feed_is_not_a_line_break():
    stats = line_statistics(load_corpus(data_path("formfeed")))
    assert stats.total_lines == 9
    assert (stats.code_lines, stats.comment_lines, stats.whitespace_lines) == (7, 1, 1)

def test_only_newline_splits_lines():
    unit = SourceUnit.from_text("F.java", "a\x0bb c\r\nd\x85e\nlast")
    assert unit.raw_lines == ("a\x0bb c\r\n", "d\x85e\n", "last")
    assert SourceUnit.from_text("E.java", "").raw_lines == ()
