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

import matplotlib as mpl
import matplotlib.colors as colors
import seaborn as sb
import numpy as np

METRIC_COLORS = {
    "fsca": "#bb3f3f",
    "ftang": "#5a86ad",
}


def metric_palette(metrics):
    """Fixed colors for FSCA and FTANG, seaborn's deep palette for the rest."""
    deep_colors = iter(sb.color_palette("deep")[2:])
    return dict(
        (metric, colors.hex2color(METRIC_COLORS[metric]) if metric in METRIC_COLORS
         else next(deep_colors))
        for metric in metrics)


def set_styling():
    sb.set_style("white")
    mpl.rcParams.update({"figure.figsize": np.array([8, 5]),
                         "legend.fontsize": 12,
                         "font.size": 14,
                         "axes.labelsize": 14,
                         "axes.labelweight": "bold",
                         "xtick.labelsize": 12,
                         "ytick.labelsize": 12})
