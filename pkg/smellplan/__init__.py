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

from .project import Project
from .config import Config, load_config, default_config
from .code_model import CodeModel, parse_source
from .io.corpus import SourceUnit, load_corpus
from .utils import AnalysisError

from ._version import get_versions
__version__ = get_versions()['version']
del get_versions
