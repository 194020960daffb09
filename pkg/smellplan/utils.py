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

import logging


class AnalysisError(ValueError):
    """Base class for every error raised by the analysis pipeline."""
    pass


class EmptyModelError(AnalysisError):
    pass


def get_logger(name, level=logging.INFO):
    logger = logging.getLogger(name)
    if logger.handlers:
        logger.handlers = []
    logger.setLevel(level)
    return logger


def first_not_none_param(params, default):
    """
    Given a list of `params`, use the first param in the list that is
    not None. If all are None, fall back to `default`.
    """
    for param in params:
        if param is not None:
            return param
    return default


def class_id_of(qualified_name):
    """
    Class id ("pkg.Class") of a qualified method name
    ("pkg.Class.method(int,String)").
    """
    head = qualified_name.split("(", 1)[0]
    return head.rsplit(".", 1)[0]


def package_of(class_id):
    return class_id.rsplit(".", 1)[0]


def simple_name(class_id):
    return class_id.rsplit(".", 1)[1]


def is_permutation(order, ids):
    """Does `order` contain every id of `ids` exactly once?"""
    return len(order) == len(ids) and sorted(order) == sorted(ids)
