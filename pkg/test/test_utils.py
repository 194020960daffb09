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

from smellplan.utils import (
    class_id_of, package_of, simple_name, is_permutation, first_not_none_param, get_logger)

def test_class_id_of():
    assert class_id_of("shop.billing.Invoice.total()") == "shop.billing.Invoice"
    assert class_id_of("a.B.c(java.util.Map,int)") == "a.B"
    assert class_id_of("<default>.Lone.f()") == "<default>.Lone"

def test_package_and_simple_name():
    assert package_of("shop.billing.Invoice") == "shop.billing"
    assert simple_name("shop.billing.Invoice") == "Invoice"

def test_is_permutation():
    assert is_permutation([2, 0, 1], [0, 1, 2])
    assert not is_permutation([0, 0, 1], [0, 1, 2])
    assert not is_permutation([0, 1], [0, 1, 2])

def test_first_not_none_param():
    assert first_not_none_param([None, 0, 3], 7) == 0
    assert first_not_none_param([None, None], 7) == 7

def test_get_logger_level():
    logger = get_logger("smellplan.test_utils", level=logging.DEBUG)
    assert logger.level == logging.DEBUG
    assert logger.handlers == []
