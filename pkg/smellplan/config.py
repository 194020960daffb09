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
INI configuration. Every key has a default; unknown sections and keys
are rejected. See docs/configuration.md for the full key list.
"""

import configparser
import math
from collections import namedtuple, OrderedDict

from .genetic import GAConfig
from .metrics import DEFAULT_COHESION_HIGH, DEFAULT_COHESION_MEDIUM, DEFAULT_RULE_OF_30_LIMIT
from .ordering import KindPrecedence
from .remod import DEFAULT_MAX_MOVES
from .smells import SmellThresholds, InvalidThresholdError, parse_rule, generate_rules
from .utils import AnalysisError, get_logger, first_not_none_param

logger = get_logger(__name__)

OUTPUT_FORMATS = ("json", "text")


class ConfigError(AnalysisError):
    pass


class Thresholds(namedtuple("Thresholds", SmellThresholds._fields + (
        "method_lines_limit",
        "class_methods_limit",
        "package_classes_limit",
        "cohesion_high",
        "cohesion_medium"))):
    def validate(self):
        for name in self._fields:
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise InvalidThresholdError(name, value)
        for name in ("feature_envy_ratio", "cohesion_high", "cohesion_medium"):
            if getattr(self, name) > 1:
                raise InvalidThresholdError(name, getattr(self, name), "must lie in [0, 1]")
        if self.cohesion_high > self.cohesion_medium:
            raise InvalidThresholdError(
                "cohesion_high", self.cohesion_high, "must not exceed cohesion_medium")
        return self

    def metric_limits(self):
        """Keyword arguments of `build_metrics_report`."""
        return dict(
            cohesion_high=self.cohesion_high,
            cohesion_medium=self.cohesion_medium,
            method_lines_limit=self.method_lines_limit,
            class_methods_limit=self.class_methods_limit,
            package_classes_limit=self.package_classes_limit)


Thresholds.__new__.__defaults__ = tuple(SmellThresholds()) + (
    DEFAULT_RULE_OF_30_LIMIT, DEFAULT_RULE_OF_30_LIMIT, DEFAULT_RULE_OF_30_LIMIT,
    DEFAULT_COHESION_HIGH, DEFAULT_COHESION_MEDIUM)

RemodConfig = namedtuple("RemodConfig", ["max_moves", "constrain_pcom"])
RemodConfig.__new__.__defaults__ = (DEFAULT_MAX_MOVES, False)

OutputConfig = namedtuple("OutputConfig", ["format", "emit_graph", "emit_feature_graph"])
OutputConfig.__new__.__defaults__ = ("json", False, False)


class Config(namedtuple("Config", [
        "thresholds", "rules", "replace_default_rules", "precedence", "ga", "remod", "output"])):
    """
    Parameters
    ----------
    thresholds : Thresholds
    rules : tuple of DetectionRule
        Rules added by the [rules] section.
    replace_default_rules : bool
    precedence : KindPrecedence
    ga : GAConfig
    remod : RemodConfig
    output : OutputConfig
    """
    def detection_rules(self):
        return generate_rules(
            self.thresholds, extra_rules=self.rules,
            replace_defaults=self.replace_default_rules)

    def with_overrides(self, seed=None, max_moves=None, output_format=None,
                       emit_graph=None, emit_feature_graph=None):
        """Command-line values win over file values; None leaves a value alone."""
        config = self._replace(
            ga=self.ga._replace(seed=first_not_none_param([seed], self.ga.seed)),
            remod=self.remod._replace(
                max_moves=first_not_none_param([max_moves], self.remod.max_moves)),
            output=OutputConfig(
                format=first_not_none_param([output_format], self.output.format),
                emit_graph=first_not_none_param([emit_graph], self.output.emit_graph),
                emit_feature_graph=first_not_none_param(
                    [emit_feature_graph], self.output.emit_feature_graph)))
        return validate_config(config)


def default_config():
    return Config(
        thresholds=Thresholds(),
        rules=(),
        replace_default_rules=False,
        precedence=KindPrecedence.default(),
        ga=GAConfig(),
        remod=RemodConfig(),
        output=OutputConfig())


def validate_config(config):
    config.thresholds.validate()
    config.ga.validate()
    if config.remod.max_moves < 0:
        raise ConfigError("[remod] max_moves must be non-negative")
    if config.output.format not in OUTPUT_FORMATS:
        raise ConfigError("[output] format must be one of %s, got %r" % (
            ", ".join(OUTPUT_FORMATS), config.output.format))
    config.detection_rules()
    return config


def _typed(parser, section, key, default):
    try:
        if isinstance(default, bool):
            return parser.getboolean(section, key)
        if isinstance(default, int):
            return parser.getint(section, key)
        if isinstance(default, float):
            return parser.getfloat(section, key)
    except ValueError as e:
        raise ConfigError("[%s] %s: %s" % (section, key, e))
    return parser.get(section, key).strip()


def _read_section(parser, section, defaults):
    """Values of a fixed-key section as a dict, defaults filled in."""
    values = OrderedDict(defaults._asdict())
    if not parser.has_section(section):
        return values
    for key in parser.options(section):
        if key not in values:
            raise ConfigError("Unknown key %r in [%s] (expected one of %s)" % (
                key, section, ", ".join(values)))
        values[key] = _typed(parser, section, key, values[key])
    return values


SECTIONS = ("thresholds", "rules", "precedence", "ga", "remod", "output")


def parse_config(text, source="<config>"):
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigError("%s: %s" % (source, e))
    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigError("%s: unknown section [%s] (expected one of %s)" % (
                source, section, ", ".join(SECTIONS)))

    thresholds = Thresholds(**_read_section(parser, "thresholds", Thresholds()))

    rules = []
    replace_defaults = False
    if parser.has_section("rules"):
        for key in parser.options("rules"):
            if key == "replace_defaults":
                replace_defaults = _typed(parser, "rules", key, False)
            else:
                rules.append(parse_rule(key, parser.get("rules", key)))

    precedence = KindPrecedence.default()
    if parser.has_section("precedence"):
        rows = OrderedDict()
        for key in parser.options("precedence"):
            value = parser.get("precedence", key)
            rows[key] = [kind.strip() for kind in value.split(",") if kind.strip()]
        precedence = precedence.with_rows(rows)

    ga = GAConfig(**_read_section(parser, "ga", GAConfig()))
    remod = RemodConfig(**_read_section(parser, "remod", RemodConfig()))
    output = OutputConfig(**_read_section(parser, "output", OutputConfig()))
    config = Config(
        thresholds=thresholds,
        rules=tuple(rules),
        replace_default_rules=replace_defaults,
        precedence=precedence,
        ga=ga,
        remod=remod,
        output=output)
    return validate_config(config)


def load_config(file_path=None):
    """The configuration in `file_path`, or the defaults when None."""
    if file_path is None:
        return default_config()
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            text = f.read()
    except IOError as e:
        raise ConfigError("Cannot read config %s: %s" % (file_path, e))
    config = parse_config(text, source=file_path)
    logger.info("Loaded configuration from {}".format(file_path))
    return config
