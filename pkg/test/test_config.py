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

from smellplan.config import (
    default_config, load_config, parse_config, ConfigError, Thresholds)
from smellplan.genetic import InvalidGAConfigError
from smellplan.ordering import KindPrecedence, InvalidPrecedenceError
from smellplan.smells import (
    InvalidRuleError, InvalidThresholdError, DEAD_CODE, LONG_METHOD)

from . import data_path

def test_defaults():
    config = load_config(None)
    assert config == default_config()
    assert config.thresholds.long_method_sloc == 30
    assert config.thresholds.feature_envy_ratio == 0.5
    assert config.ga.population_size == 50
    assert config.ga.seed == 0
    assert config.remod.max_moves == 10
    assert config.output.format == "json"
    assert config.precedence == KindPrecedence.default()
    assert len(config.detection_rules()) == 6

def test_empty_text_is_default():
    assert parse_config("") == default_config()

def test_strict_file():
    config = load_config(data_path("config/strict.ini"))
    assert config.thresholds.long_method_sloc == 10
    assert config.thresholds.long_parameter_list == 2
    assert config.thresholds.long_method_mccabe == 10
    assert config.ga.seed == 7
    assert config.ga.generations == 20
    assert config.ga.population_size == 50
    assert config.output.format == "text"
    rules = config.detection_rules()
    assert [r.rule_id for r in rules][-1] == "short_and_branchy"
    assert rules[0].describe() == "sloc > 10"

def test_unknown_key():
    with pytest.raises(ConfigError) as e:
        load_config(data_path("config/unknown_key.ini"))
    assert "long_method_lines" in str(e.value)

def test_unknown_section():
    with pytest.raises(ConfigError):
        parse_config("[colors]\nred = 1\n")

def test_missing_file():
    with pytest.raises(ConfigError):
        load_config(data_path("config/missing.ini"))

def test_cyclic_precedence_loads():
    config = load_config(data_path("config/cyclic.ini"))
    assert config.precedence.before(LONG_METHOD, DEAD_CODE)
    assert config.precedence.before(DEAD_CODE, LONG_METHOD)
    assert not config.precedence.is_acyclic()

@pytest.mark.parametrize("text,error", [
    ("[thresholds]\nlong_method_sloc = many\n", ConfigError),
    ("[thresholds]\nlong_method_sloc = -3\n", InvalidThresholdError),
    ("[thresholds]\nfeature_envy_ratio = 1.5\n", InvalidThresholdError),
    ("[thresholds]\ncohesion_high = 0.9\ncohesion_medium = 0.5\n", InvalidThresholdError),
    ("[rules]\nodd = Smelly: sloc > 1\n", InvalidRuleError),
    ("[precedence]\nLongMethod = Smelly\n", InvalidPrecedenceError),
    ("[ga]\nelite_count = 60\n", InvalidGAConfigError),
    ("[remod]\nmax_moves = -1\n", ConfigError),
    ("[output]\nformat = xml\n", ConfigError),
])
def test_invalid_values(text, error):
    with pytest.raises(error):
        parse_config(text)

def test_replace_default_rules():
    config = parse_config(
        "[rules]\nreplace_defaults = true\nbig = LongMethod: sloc > 100\n")
    assert [r.rule_id for r in config.detection_rules()] == ["big"]

def test_overrides():
    config = load_config(data_path("config/strict.ini")).with_overrides(
        seed=3, max_moves=0, output_format="json", emit_graph=True)
    assert config.ga.seed == 3
    assert config.remod.max_moves == 0
    assert config.output.format == "json"
    assert config.output.emit_graph
    assert not config.output.emit_feature_graph

    unchanged = default_config().with_overrides()
    assert unchanged == default_config()
    with pytest.raises(ConfigError):
        default_config().with_overrides(output_format="yaml")

def test_metric_limits():
    limits = Thresholds(method_lines_limit=12).metric_limits()
    assert limits["method_lines_limit"] == 12
    assert limits["class_methods_limit"] == 30

def test_unseeded_population_option():
    assert parse_config("[ga]\nseed_population = false\n").ga.seed_population is False
    assert default_config().ga.seed_population is True
