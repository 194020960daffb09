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
Command-line front end.

    smellplan analyze ROOT   line statistics and metrics
    smellplan plan ROOT      smells, their resolution order and a refactoring plan
    smellplan remod ROOT     feature metrics and suggested class moves (dry run)

Exit codes: 0 success, 1 any other failure, 2 parse error, 3 precedence
cycle, 4 no features.
"""

import argparse
import logging
import sys
from os import path

from .annotations import MalformedAnnotationError
from .code_model import DuplicateDefinitionError
from .config import load_config
from .features import NoFeaturesError
from .graphs import precedence_dot, feature_dot, write_dot
from .java_parser import SourceSyntaxError
from .ordering import CycleDetectedError
from .project import Project
from .report import analyze_report, plan_report, remod_report, render, compare_to_baseline
from .smells import rule_table
from .utils import AnalysisError, get_logger
from ._version import VERSION

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_CYCLE = 3
EXIT_NO_FEATURES = 4

PARSE_ERRORS = (SourceSyntaxError, DuplicateDefinitionError, MalformedAnnotationError)

COMMANDS = ("analyze", "plan", "remod")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="smellplan",
        description="Detect code smells, sequence refactorings and suggest "
                    "feature-driven class moves for a Java source tree.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__)
    parser.add_argument("--version", action="version", version="%(prog)s " + VERSION)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("root", help="Directory searched recursively for .java files")
    common.add_argument("--config", help="INI configuration file (see docs/configuration.md)")
    common.add_argument("--traces", action="append", default=[], metavar="FILE",
                        help="Trace file of 'feature<TAB>method' lines; may be repeated")
    common.add_argument("--seed", type=int, help="Seed of the genetic search")
    common.add_argument("--max-moves", type=int, help="Maximum number of suggested class moves")
    common.add_argument("--format", choices=["json", "text"], dest="output_format",
                        help="Report format (default: json)")
    common.add_argument("--emit-graph", action="store_true", default=None,
                        help="Write the smell precedence graph to precedence.dot")
    common.add_argument("--emit-feature-graph", action="store_true", default=None,
                        help="Write the feature-to-package graph to features.dot")
    common.add_argument("--graph-dir", default=".",
                        help="Directory for .dot files (default: working directory)")
    common.add_argument("--explain", action="store_true",
                        help="Print the active detection rules and exit")
    common.add_argument("--plot", metavar="FILE",
                        help="remod only: save the restructuring trajectory plot to FILE")
    common.add_argument("--time-plot", metavar="FILE",
                        help="remod only: save the elapsed time per move plot to FILE")
    common.add_argument("--baseline", metavar="FILE",
                        help="Earlier JSON report; differing package versions become warnings")
    common.add_argument("--progress", action="store_true", help="Show progress bars")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Only log warnings")

    subparsers.add_parser("analyze", parents=[common],
                          help="Line statistics and code metrics")
    subparsers.add_parser("plan", parents=[common],
                          help="Smells, their resolution order and a refactoring plan")
    subparsers.add_parser("remod", parents=[common],
                          help="Feature metrics and suggested class moves (never edits sources)")
    return parser


def configure_logging(verbose=False, quiet=False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("smellplan"):
            logging.getLogger(name).setLevel(level)


def _emit_graphs(args, project, config):
    if config.output.emit_graph and project.has_computed("precedence_graph"):
        write_dot(precedence_dot(project.precedence_graph),
                  path.join(args.graph_dir, "precedence.dot"))
    if config.output.emit_feature_graph and project.has_computed("feature_map"):
        write_dot(feature_dot(project.feature_map), path.join(args.graph_dir, "features.dot"))


def cmd_analyze(project):
    return analyze_report(project)


def cmd_plan(project):
    return plan_report(project)


def cmd_remod(project):
    return remod_report(project)


def run(args, stdout=None):
    """Run one parsed command line; returns the report text written to `stdout`."""
    stdout = stdout if stdout is not None else sys.stdout
    config = load_config(args.config).with_overrides(
        seed=args.seed,
        max_moves=args.max_moves,
        output_format=args.output_format,
        emit_graph=args.emit_graph,
        emit_feature_graph=args.emit_feature_graph)
    if args.explain:
        text = rule_table(config.detection_rules()).to_string(index=False) + "\n"
        stdout.write(text)
        return text

    project = Project.from_root(args.root, config=config, traces=args.traces,
                                show_progress=args.progress)
    try:
        if args.command == "analyze":
            report = cmd_analyze(project)
        elif args.command == "plan":
            report = cmd_plan(project)
        else:
            report = cmd_remod(project)
    finally:
        # The precedence graph is written even when ordering fails on a cycle.
        _emit_graphs(args, project, config)
    if args.plot is not None and args.command == "remod":
        from .plot import save_trajectory_plot
        save_trajectory_plot(project.remod.trajectory, args.plot)
    if args.time_plot is not None and args.command == "remod":
        from .plot import save_time_plot
        save_time_plot(project.remod.trajectory, project.remod.elapsed, args.time_plot)
    if args.baseline is not None:
        compare_to_baseline(report, args.baseline)
    text = render(report, config.output.format)
    stdout.write(text)
    return text


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(verbose=args.verbose, quiet=args.quiet)
    try:
        run(args)
    except PARSE_ERRORS as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_PARSE_ERROR
    except CycleDetectedError as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_CYCLE
    except NoFeaturesError as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_NO_FEATURES
    except (AnalysisError, IOError) as e:
        sys.stderr.write("%s\n" % e)
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
