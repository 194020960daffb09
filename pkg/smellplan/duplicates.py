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
Clone detection over normalized body tokens (identifiers already read as
"ID"), so renamed copies of a loop still match.
"""

from collections import namedtuple, defaultdict

import numpy as np

from .utils import get_logger

logger = get_logger(__name__)

DEFAULT_MIN_TOKENS = 25

Span = namedtuple("Span", ["start_a", "start_b", "length"])


def _encode(tokens_a, tokens_b):
    vocabulary = {}
    a = np.array([vocabulary.setdefault(t, len(vocabulary)) for t in tokens_a], dtype=np.int64)
    b = np.array([vocabulary.setdefault(t, len(vocabulary)) for t in tokens_b], dtype=np.int64)
    return a, b


def common_runs(tokens_a, tokens_b, min_tokens):
    """
    Every maximal common run (a run that cannot be extended at either
    end) of length >= `min_tokens`, as `Span`s.
    """
    a, b = _encode(tokens_a, tokens_b)
    n, m = len(a), len(b)
    runs = []
    if n == 0 or m == 0:
        return runs
    previous = np.zeros(m, dtype=np.int64)
    for i in range(n):
        equal = b == a[i]
        current = np.zeros(m, dtype=np.int64)
        current[0] = 1 if equal[0] else 0
        current[1:] = np.where(equal[1:], previous[:-1] + 1, 0)
        # a run ending at (i, j) is maximal when (i + 1, j + 1) does not extend it
        if i + 1 < n:
            extends = np.zeros(m, dtype=bool)
            extends[:-1] = b[1:] == a[i + 1]
        else:
            extends = np.zeros(m, dtype=bool)
        for j in np.nonzero((current >= min_tokens) & ~extends)[0]:
            length = int(current[j])
            runs.append(Span(i - length + 1, int(j) - length + 1, length))
        previous = current
    return runs


def _overlaps(start, length, taken):
    end = start + length
    return any(start < t_end and t_start < end for t_start, t_end in taken)


def duplicate_spans(a, b, min_tokens=DEFAULT_MIN_TOKENS):
    """
    Shared token spans of two method bodies, longest first.

    Maximal common runs of at least `min_tokens` normalized tokens are
    selected greedily so that no two reported spans overlap in either
    body.
    """
    runs = sorted(common_runs(a.body_tokens, b.body_tokens, min_tokens),
                  key=lambda s: (-s.length, s.start_a, s.start_b))
    taken_a = []
    taken_b = []
    spans = []
    for run in runs:
        if _overlaps(run.start_a, run.length, taken_a) or \
                _overlaps(run.start_b, run.length, taken_b):
            continue
        spans.append(run)
        taken_a.append((run.start_a, run.start_a + run.length))
        taken_b.append((run.start_b, run.start_b + run.length))
    return spans


def candidate_pairs(methods, min_tokens=DEFAULT_MIN_TOKENS):
    """
    Pairs of methods sharing at least one `min_tokens`-gram, ordered by
    qualified name. Any common run of that length implies a shared gram,
    so no duplicate is missed.
    """
    index = defaultdict(set)
    by_name = {}
    for method in methods:
        tokens = method.body_tokens
        if len(tokens) < min_tokens:
            continue
        by_name[method.qualified_name] = method
        for start in range(len(tokens) - min_tokens + 1):
            index[hash(tokens[start:start + min_tokens])].add(method.qualified_name)
    pairs = set()
    for names in index.values():
        if len(names) < 2:
            continue
        ordered = sorted(names)
        for i, first in enumerate(ordered):
            for second in ordered[i + 1:]:
                pairs.add((first, second))
    return [(by_name[first], by_name[second]) for first, second in sorted(pairs)]


def find_duplicates(methods, min_tokens=DEFAULT_MIN_TOKENS):
    """(method_a, method_b, spans) for every pair with at least one span."""
    found = []
    for a, b in candidate_pairs(methods, min_tokens):
        spans = duplicate_spans(a, b, min_tokens)
        if spans:
            found.append((a, b, spans))
    logger.debug("{} duplicate method pairs".format(len(found)))
    return found
