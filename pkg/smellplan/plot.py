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
Restructuring trajectory plots: the four package metrics, or the time spent,
against the number of moves applied so far.
"""

import seaborn as sb
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure
from matplotlib.ticker import MaxNLocator

from .remod import trajectory_dataframe
from .styling import set_styling, metric_palette
from .utils import get_logger

logger = get_logger(__name__)

TRAJECTORY_METRICS = ["fsca", "ftang", "pcom", "pcoup"]


def as_numeric(text):
    try:
        return float(text)
    except (TypeError, ValueError):
        return None


def hide_ticks(plot, min_tick_value=None, max_tick_value=None):
    """Hide tick values that are outside of [min_tick_value, max_tick_value]"""
    for tick, tick_value in zip(plot.get_yticklabels(), plot.get_yticks()):
        tick_label = as_numeric(tick_value)
        if tick_label is not None:
            if (min_tick_value is not None and tick_label < min_tick_value or
                    max_tick_value is not None and tick_label > max_tick_value):
                tick.set_visible(False)


def only_ratio_ticks(plot):
    """
    Only show ticks from 0.0 to 1.0.
    """
    hide_ticks(plot, min_tick_value=0, max_tick_value=1.0)


def trajectory_plot(trajectory, ax=None):
    """
    Line plot of FSCA, FTANG, PCOM and PCOUP per restructuring step.

    Parameters
    ----------
    trajectory : list of FeatureMetricsReport
        Metrics before any move, then after each accepted move.
    ax : matplotlib Axes, optional
        Drawn on a new figure when None.
    """
    set_styling()
    df = trajectory_dataframe(trajectory).melt(
        id_vars=["step"], value_vars=TRAJECTORY_METRICS, var_name="metric", value_name="value")
    if ax is None:
        figure = Figure()
        FigureCanvasAgg(figure)
        ax = figure.add_subplot(1, 1, 1)
    plot = sb.lineplot(
        x="step", y="value", hue="metric", data=df, ax=ax, marker="o",
        palette=metric_palette(TRAJECTORY_METRICS))
    plot.set_xlabel("Moves applied")
    plot.set_ylabel("Metric value")
    plot.set_ylim(-0.05, 1.05)
    plot.xaxis.set_major_locator(MaxNLocator(integer=True))
    only_ratio_ticks(plot)
    return plot


def save_trajectory_plot(trajectory, file_path):
    plot = trajectory_plot(trajectory)
    plot.figure.savefig(file_path, bbox_inches="tight")
    logger.info("Wrote {}".format(file_path))
    return file_path


def restructuring_time_plot(trajectory, elapsed, ax=None):
    """Cumulative seconds spent against the number of moves applied."""
    set_styling()
    df = trajectory_dataframe(trajectory, elapsed)
    if ax is None:
        figure = Figure()
        FigureCanvasAgg(figure)
        ax = figure.add_subplot(1, 1, 1)
    plot = sb.lineplot(x="step", y="elapsed_s", data=df, ax=ax, marker="o")
    plot.set_xlabel("Moves applied")
    plot.set_ylabel("Elapsed time (s)")
    plot.xaxis.set_major_locator(MaxNLocator(integer=True))
    return plot


def save_time_plot(trajectory, elapsed, file_path):
    plot = restructuring_time_plot(trajectory, elapsed)
    plot.figure.savefig(file_path, bbox_inches="tight")
    logger.info("Wrote {}".format(file_path))
    return file_path
