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

import hashlib
import os
import re
from collections import namedtuple
from os import path

from ..utils import get_logger

logger = get_logger(__name__)

DEFAULT_PACKAGE = "<default>"
DEFAULT_EXTENSIONS = (".java",)

# Only \n ends a line; tree-sitter rows count nothing else.
LINE_RE = re.compile(r"[^\n]*\n|[^\n]+\Z")
PACKAGE_RE = re.compile(r"^\s*package\s+([A-Za-z_][\w.]*)\s*;", re.MULTILINE)


class CorpusError(IOError):
    pass


class SourceUnit(namedtuple("SourceUnit", ["path", "raw_lines", "package_name"])):
    """
    One source file.

    Parameters
    __________
    path : str
        Path of the file, relative to the corpus root when discovered.
    raw_lines : tuple of str
        The file's lines with their line terminators, exactly as read.
    package_name : str
        Declared package, or "<default>".
    """
    @classmethod
    def from_text(cls, file_path, text):
        lines = tuple(LINE_RE.findall(text))
        match = PACKAGE_RE.search(text)
        package_name = match.group(1) if match else DEFAULT_PACKAGE
        return cls(path=file_path, raw_lines=lines, package_name=package_name)

    @classmethod
    def from_path(cls, file_path, root=None):
        with open(file_path, "rb") as f:
            data = f.read()
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise CorpusError("%s is not valid UTF-8: %s" % (file_path, e))
        display_path = file_path if root is None else path.relpath(file_path, root)
        return cls.from_text(display_path.replace(os.sep, "/"), text)

    @property
    def text(self):
        return "".join(self.raw_lines)

    def __str__(self):
        return "SourceUnit(path=\"%s\", lines=%d, package=%s)" % (
            self.path, len(self.raw_lines), self.package_name)


def discover_sources(root, extensions=DEFAULT_EXTENSIONS):
    """
    Recursively find source files under `root`, sorted by relative path so
    that discovery order never depends on the file system.
    """
    if not path.isdir(root):
        raise CorpusError("Corpus root %s does not exist or is not a directory" % root)
    found = []
    for dir_path, dir_names, file_names in os.walk(root):
        dir_names.sort()
        for file_name in file_names:
            if file_name.endswith(tuple(extensions)):
                found.append(path.join(dir_path, file_name))
    found.sort(key=lambda p: path.relpath(p, root).replace(os.sep, "/"))
    logger.debug("discovered {} source files under {}".format(len(found), root))
    return found


def load_corpus(root, extensions=DEFAULT_EXTENSIONS):
    return [SourceUnit.from_path(file_path, root=root)
            for file_path in discover_sources(root, extensions)]


def corpus_digest(units):
    """
    sha256 over (path, content) of every unit, independent of input order.
    """
    digest = hashlib.sha256()
    for unit in sorted(units, key=lambda u: u.path):
        digest.update(unit.path.encode("utf-8"))
        digest.update(b"\0")
        digest.update(unit.text.encode("utf-8"))
        digest.update(b"\0")
    return "sha256:" + digest.hexdigest()
