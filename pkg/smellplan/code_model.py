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
The code model: packages -> classes -> methods with resolved references.

Files are parsed one at a time (`java_parser.parse_unit`) and then merged
by `assemble_model`, which resolves every type and call name against the
classes of the whole corpus. A name that does not resolve is recorded as
external, never as a dangling internal edge.
"""

from collections import namedtuple, defaultdict, Counter

from tqdm import tqdm

from .java_parser import parse_unit, strip_array, FIELD_ACCESS, Param
from .utils import AnalysisError, get_logger

logger = get_logger(__name__)

CONSTRUCTOR_NAME = "<init>"


class DuplicateDefinitionError(AnalysisError):
    def __init__(self, qualified_name, path=None, line=None):
        self.qualified_name = qualified_name
        self.path = path
        self.line = line
        location = "%s:%d: " % (path, line) if path is not None else ""
        AnalysisError.__init__(self, "%sduplicate definition of %s" % (location, qualified_name))


MethodDecl = namedtuple("MethodDecl", [
    "name",
    "qualified_name",
    "class_id",
    "params",
    "visibility",
    "is_static",
    "is_abstract",
    "start_line",
    "end_line",
    "sloc",
    "decision_points",
    "body_tokens",
    "own_field_accesses",
    "own_access_count",
    "foreign_accesses",
    "foreign_access_counts",
    "calls",
    "external_refs",
    "feature_tags",
])

ClassDecl = namedtuple("ClassDecl", [
    "name",
    "package",
    "class_id",
    "path",
    "start_line",
    "fields",
    "methods",
    "supertype",
    "dependencies",
    "external_dependencies",
    "initializer_calls",
])

Package = namedtuple("Package", ["name", "classes"])


def class_id_for(package, name):
    return "%s.%s" % (package, name)


def qualified_method_name(class_id, name, params):
    return "%s.%s(%s)" % (class_id, name, ",".join(p.type for p in params))


def is_main_method(method):
    return (method.name == "main" and method.is_static and len(method.params) == 1 and
            method.params[0].type in ("String[]", "String...", "java.lang.String[]"))


class CodeModel(object):
    """
    Immutable result of parsing a corpus.

    Parameters
    ----------
    packages : tuple of Package
        Sorted by package name; classes sorted by name within a package.
    entry_points : frozenset of str
        Qualified names of static main methods and of feature-tagged methods.
    parsed_classes : tuple of ParsedClass
        The unresolved parse records the model was assembled from.
    warnings : tuple of str
    """
    def __init__(self, packages=(), entry_points=frozenset(), parsed_classes=(), warnings=()):
        self._packages = tuple(packages)
        self._entry_points = frozenset(entry_points)
        self._parsed_classes = tuple(parsed_classes)
        self._warnings = tuple(warnings)
        self._class_by_id = dict(
            (cls.class_id, cls) for package in self._packages for cls in package.classes)
        self._method_by_name = dict(
            (method.qualified_name, method) for cls in self.classes for method in cls.methods)
        self._callers = None

    packages = property(lambda self: self._packages)
    entry_points = property(lambda self: self._entry_points)
    parsed_classes = property(lambda self: self._parsed_classes)
    warnings = property(lambda self: self._warnings)

    @property
    def classes(self):
        return [cls for package in self._packages for cls in package.classes]

    @property
    def methods(self):
        return [method for cls in self.classes for method in cls.methods]

    @property
    def package_names(self):
        return [package.name for package in self._packages]

    def class_by_id(self, class_id):
        return self._class_by_id.get(class_id)

    def method_by_name(self, qualified_name):
        return self._method_by_name.get(qualified_name)

    def has_class(self, class_id):
        return class_id in self._class_by_id

    def callers(self):
        """
        Map of qualified method name -> set of distinct callers.

        A call that resolves to a supertype method also counts as a call of
        every override of it.
        """
        if self._callers is None:
            callers = defaultdict(set)
            for cls in self.classes:
                for method in cls.methods:
                    for callee in method.calls:
                        callers[callee].add(method.qualified_name)
                for callee in cls.initializer_calls:
                    callers[callee].add("%s.%s" % (cls.class_id, CONSTRUCTOR_NAME))
            direct = dict((callee, set(names)) for callee, names in callers.items())
            for cls in self.classes:
                for method in cls.methods:
                    for overridden in self.overridden_methods(method):
                        callers[method.qualified_name].update(direct.get(overridden, ()))
            self._callers = dict((callee, names) for callee, names in callers.items() if names)
        return self._callers

    def overridden_methods(self, method):
        """Qualified names of supertype methods that `method` overrides."""
        if method.is_static:
            return []
        found = []
        seen = set([method.class_id])
        supertype = self.class_by_id(method.class_id).supertype
        while supertype is not None and supertype not in seen:
            seen.add(supertype)
            cls = self.class_by_id(supertype)
            if cls is None:
                break
            for candidate in cls.methods:
                if (candidate.name == method.name and not candidate.is_static and
                        len(candidate.params) == len(method.params)):
                    found.append(candidate.qualified_name)
            supertype = cls.supertype
        return found

    def incoming_refs(self, qualified_name):
        return len(self.callers().get(qualified_name, ()))

    def __eq__(self, other):
        return (isinstance(other, CodeModel) and
                self._packages == other._packages and
                self._entry_points == other._entry_points)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._packages, self._entry_points))

    def __str__(self):
        return "CodeModel(packages=%d, classes=%d, methods=%d)" % (
            len(self._packages), len(self._class_by_id), len(self._method_by_name))

    def __repr__(self):
        return str(self)


class _Resolver(object):
    def __init__(self, parsed_classes):
        self.parsed_by_id = {}
        self.by_simple_name = defaultdict(list)
        for parsed in parsed_classes:
            class_id = class_id_for(parsed.package, parsed.name)
            if class_id in self.parsed_by_id:
                raise DuplicateDefinitionError(class_id, parsed.path, parsed.start_line)
            self.parsed_by_id[class_id] = parsed
            self.by_simple_name[parsed.name].append(class_id)

        self.signatures = {}
        for class_id, parsed in self.parsed_by_id.items():
            table = defaultdict(list)
            seen = set()
            for method in parsed.methods:
                qualified = qualified_method_name(class_id, method.name, method.params)
                if qualified in seen:
                    raise DuplicateDefinitionError(qualified, parsed.path, method.start_line)
                seen.add(qualified)
                table[(method.name, len(method.params))].append(qualified)
            self.signatures[class_id] = table
        self.supertypes = dict(
            (class_id, self.resolve_type(parsed.superclass, parsed))
            for class_id, parsed in self.parsed_by_id.items())

    def resolve_type(self, type_name, parsed):
        """Class id of a type name as seen from `parsed`, or None if external."""
        name = strip_array(type_name)
        if not name:
            return None
        if "." in name:
            return name if name in self.parsed_by_id else None
        same_package = class_id_for(parsed.package, name)
        if same_package in self.parsed_by_id:
            return same_package
        for imported in parsed.imports:
            if imported.endswith("." + name) and imported in self.parsed_by_id:
                return imported
            if imported.endswith(".*"):
                candidate = imported[:-1] + name
                if candidate in self.parsed_by_id:
                    return candidate
        candidates = self.by_simple_name.get(name, [])
        if len(candidates) == 1:
            return candidates[0]
        return None

    def resolve_method(self, class_id, name, arity):
        """Qualified name of a method declared in `class_id` or its supertypes."""
        seen = set()
        while class_id is not None and class_id not in seen:
            seen.add(class_id)
            matches = self.signatures[class_id].get((name, arity))
            if matches:
                return min(matches)
            class_id = self.supertypes.get(class_id)
        return None



def _resolve_body(resolver, class_id, parsed_class, parsed_method):
    """
    Resolved references of one method or constructor body.

    Returns (own_fields, own_count, foreign, foreign_counts, calls,
    external, type_deps).
    """
    own_fields = set("%s.%s" % (class_id, name) for name in parsed_method.own_field_uses)
    own_count = len(parsed_method.own_field_uses)
    foreign = set()
    foreign_counts = Counter()
    calls = set()
    external = set()
    type_deps = set()

    for name, arity in parsed_method.own_calls:
        callee = resolver.resolve_method(class_id, name, arity)
        if callee is None:
            external.add("%s/%d" % (name, arity))
        else:
            calls.add(callee)
            own_count += 1

    for type_name, member, arity in parsed_method.receiver_uses:
        target = resolver.resolve_type(type_name, parsed_class) if type_name else None
        if target is None:
            external.add("%s.%s" % (type_name or "?", member))
            continue
        if target == class_id:
            own_count += 1
            if arity == FIELD_ACCESS:
                own_fields.add("%s.%s" % (class_id, member))
        else:
            type_deps.add(target)
            foreign.add((target, member))
            foreign_counts[target] += 1
        if arity != FIELD_ACCESS:
            callee = resolver.resolve_method(target, member, arity)
            if callee is None:
                external.add("%s.%s/%d" % (target, member, arity))
            else:
                calls.add(callee)
    return own_fields, own_count, foreign, foreign_counts, calls, external, type_deps


def _build_class(resolver, class_id, parsed):
    methods = []
    dependencies = set()
    external_dependencies = set()
    for type_name in parsed.type_refs:
        target = resolver.resolve_type(type_name, parsed)
        if target is None:
            external_dependencies.add(type_name)
        else:
            dependencies.add(target)

    for parsed_method in parsed.methods:
        (own_fields, own_count, foreign, foreign_counts,
         calls, external, type_deps) = _resolve_body(resolver, class_id, parsed, parsed_method)
        dependencies.update(type_deps)
        methods.append(MethodDecl(
            name=parsed_method.name,
            qualified_name=qualified_method_name(class_id, parsed_method.name, parsed_method.params),
            class_id=class_id,
            params=tuple(Param(*p) for p in parsed_method.params),
            visibility=parsed_method.visibility,
            is_static=parsed_method.is_static,
            is_abstract=parsed_method.is_abstract,
            start_line=parsed_method.start_line,
            end_line=parsed_method.end_line,
            sloc=parsed_method.sloc,
            decision_points=parsed_method.decision_points,
            body_tokens=parsed_method.body_tokens,
            own_field_accesses=frozenset(own_fields),
            own_access_count=own_count,
            foreign_accesses=frozenset(foreign),
            foreign_access_counts=tuple(sorted(foreign_counts.items())),
            calls=frozenset(calls),
            external_refs=frozenset(external),
            feature_tags=frozenset(parsed_method.feature_tags)))

    initializer_calls = set()
    for constructor in parsed.constructors:
        _, _, _, _, calls, _, type_deps = _resolve_body(resolver, class_id, parsed, constructor)
        initializer_calls.update(calls)
        dependencies.update(type_deps)

    supertype = resolver.supertypes.get(class_id)
    if supertype is None and parsed.superclass is not None:
        supertype = parsed.superclass
        external_dependencies.add(parsed.superclass)
    dependencies.discard(class_id)
    return ClassDecl(
        name=parsed.name,
        package=parsed.package,
        class_id=class_id,
        path=parsed.path,
        start_line=parsed.start_line,
        fields=tuple("%s.%s" % (class_id, name) for name, _ in parsed.fields),
        methods=tuple(methods),
        supertype=supertype,
        dependencies=frozenset(dependencies),
        external_dependencies=frozenset(external_dependencies),
        initializer_calls=frozenset(initializer_calls))


def assemble_model(parsed_classes, warnings=()):
    """
    Merge unresolved class records into a `CodeModel`.

    Raises `DuplicateDefinitionError` when two classes share a package and
    name, or two methods of one class share a signature.
    """
    resolver = _Resolver(parsed_classes)
    by_package = defaultdict(list)
    for class_id in sorted(resolver.parsed_by_id):
        parsed = resolver.parsed_by_id[class_id]
        by_package[parsed.package].append(_build_class(resolver, class_id, parsed))
    packages = tuple(
        Package(name=name, classes=tuple(sorted(classes, key=lambda c: c.name)))
        for name, classes in sorted(by_package.items()))

    entry_points = set()
    for package in packages:
        for cls in package.classes:
            for method in cls.methods:
                if is_main_method(method) or method.feature_tags:
                    entry_points.add(method.qualified_name)
    ordered_parsed = tuple(resolver.parsed_by_id[class_id]
                           for class_id in sorted(resolver.parsed_by_id))
    return CodeModel(packages=packages, entry_points=entry_points,
                     parsed_classes=ordered_parsed, warnings=warnings)


def parse_source(files, show_progress=False):
    """
    Parse a list of `SourceUnit`s into a `CodeModel`.

    The model depends only on file contents and paths, not on the order
    of `files`.
    """
    parsed_classes = []
    warnings = []
    units = sorted(files, key=lambda unit: unit.path)
    for unit in tqdm(units, desc="Parsing", unit="file", disable=not show_progress):
        parsed_file = parse_unit(unit)
        parsed_classes.extend(parsed_file.classes)
        for line in parsed_file.orphan_annotations:
            warnings.append("%s:%d: @feature annotation is not directly above a method" % (
                unit.path, line))
    model = assemble_model(parsed_classes, warnings=warnings)
    logger.info("Built {}".format(model))
    return model


def relocate(model, class_id, to_package):
    """
    The model that results from moving one class into another package.

    Name resolution is redone for the whole corpus, so the result equals
    parsing the corpus with the class's package declaration edited.
    """
    if not model.has_class(class_id):
        raise KeyError(class_id)
    moved = []
    for parsed in model.parsed_classes:
        if class_id_for(parsed.package, parsed.name) == class_id:
            parsed = parsed._replace(package=to_package)
        moved.append(parsed)
    return assemble_model(moved, warnings=model.warnings)
