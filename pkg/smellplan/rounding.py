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

from decimal import Decimal, ROUND_HALF_UP


def round_float(f, digits, rounding=ROUND_HALF_UP):
    """
    Accurate float rounding from http://stackoverflow.com/a/15398691.
    """
    return Decimal(str(f)).quantize(Decimal(10) ** (-1 * digits),
                                    rounding=rounding)


def safe_ratio(numerator, denominator):
    """
    numerator / denominator, or 0.0 when the denominator is zero (a code
    analyser reports a 0.00 code/comment ratio for a file without comments).
    """
    if denominator == 0:
        return 0.0
    return float(numerator) / denominator


def ratio_value(f, digits=2):
    """Half-up rounded float, as stored in reports."""
    return float(round_float(f, digits))


def ratio_str(f, digits=2):
    """Half-up rounded string with a fixed number of decimals, e.g. '3.00'."""
    return str(round_float(f, digits))


def round_half_up(f):
    """Nearest integer, halves rounded away from zero."""
    return int(round_float(f, 0))
