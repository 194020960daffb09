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
Single-file parsing of the supported Java subset with tree-sitter.

The result of `parse_unit` is package-relative and unresolved: type
names are kept as written, so the same `ParsedClass` can be assembled
into a model under any package (see `code_model.relocate`).

Supported: package and import declarations, top-level classes with an
optional superclass, fields, constructors, methods and the usual
statements and expressions. Generics, lambdas, method references,
inner/local/anonymous classes, interfaces, enums, records and
initializer blocks are rejected with `SourceSyntaxError`.
"""

from collections import namedtuple

import tree_sitter_java
from tree_sitter import Language, Parser

from .annotations import feature_tags_above, annotated_rows, check_annotations
from .io.corpus import DEFAULT_PACKAGE
from .line_stats import classify_lines, CODE
from .utils import AnalysisError, get_logger

logger = get_logger(__name__)

JAVA_LANGUAGE = Language(tree_sitter_java.language())

COMMENT_TYPES = frozenset(["line_comment", "block_comment", "comment"])
LITERAL_TYPES = frozenset(["string_literal", "character_literal", "text_block"])
IDENTIFIER_TYPES = frozenset(["identifier", "type_identifier"])
BRANCH_TYPES = frozenset([
    "if_statement", "for_statement", "enhanced_for_statement",
    "while_statement", "do_statement", "catch_clause", "ternary_expression"])
SHORT_CIRCUIT_OPERATORS = frozenset(["&&", "||"])

UNSUPPORTED = {
    "type_arguments": "a type without type arguments (generics are not supported)",
    "type_parameters": "a declaration without type parameters (generics are not supported)",
    "wildcard": "a type without wildcards (generics are not supported)",
    "lambda_expression": "an expression without lambdas",
    "method_reference": "an expression without method references",
    "interface_declaration": "a class declaration",
    "enum_declaration": "a class declaration",
    "record_declaration": "a class declaration",
    "annotation_type_declaration": "a class declaration",
    "module_declaration": "a class declaration",
    "static_initializer": "a field, constructor or method declaration",
}

# Identifier positions that declare a name instead of using one.
DECLARING_PARENTS = frozenset([
    "variable_declarator", "formal_parameter", "catch_formal_parameter",
    "enhanced_for_statement", "method_declaration", "constructor_declaration",
    "class_declaration", "spread_parameter"])
LABEL_PARENTS = frozenset(["labeled_statement", "break_statement", "continue_statement"])

THIS = "this"
FIELD_ACCESS = -1


class SourceSyntaxError(AnalysisError):
    def __init__(self, path, line, expected):
        self.path = path
        self.line = line
        self.expected = expected
        AnalysisError.__init__(self, "%s:%d: expected %s" % (path, line, expected))


Param = namedtuple("Param", ["name", "type"])

ParsedMethod = namedtuple("ParsedMethod", [
    "name",
    "params",
    "visibility",
    "is_static",
    "is_abstract",
    "is_constructor",
    "start_line",
    "end_line",
    "sloc",
    "decision_points",
    "body_tokens",
    "own_field_uses",
    "own_calls",
    "receiver_uses",
    "feature_tags",
])

ParsedClass = namedtuple("ParsedClass", [
    "name",
    "package",
    "path",
    "imports",
    "superclass",
    "fields",
    "methods",
    "constructors",
    "type_refs",
    "start_line",
])

ParsedFile = namedtuple("ParsedFile", ["path", "package", "classes", "orphan_annotations"])

_parser = None


def _get_parser():
    global _parser
    if _parser is None:
        _parser = Parser(JAVA_LANGUAGE)
    return _parser


def _text(node):
    return node.text.decode("utf-8")


def _same(a, b):
    return (b is not None and a.start_byte == b.start_byte and
            a.end_byte == b.end_byte and a.type == b.type)


def _walk(node, opaque=frozenset()):
    """Pre-order traversal in document order, not entering `opaque` node types."""
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        if current.type not in opaque:
            stack.extend(reversed(current.children))


def _row(node):
    return node.start_point[0]


def normalize_type(type_text):
    return "".join(type_text.split())


def strip_array(type_name):
    if type_name is None:
        return None
    return type_name.replace("[]", "").replace("...", "")


def _first_error(root):
    for node in _walk(root):
        if node.is_missing:
            return _row(node) + 1, "'%s'" % node.type
        if node.type == "ERROR":
            snippet = _text(node).strip().splitlines()
            near = snippet[0][:40] if snippet else ""
            return _row(node) + 1, "a valid declaration or statement near %r" % near
    return 1, "valid source"


def _check_supported(root, path):
    for node in _walk(root):
        if node.type in UNSUPPORTED:
            raise SourceSyntaxError(path, _row(node) + 1, UNSUPPORTED[node.type])
        if node.type == "class_declaration" and node.parent.type != "program":
            raise SourceSyntaxError(
                path, _row(node) + 1, "a top-level class (inner classes are not supported)")
        if node.type == "object_creation_expression" and any(
                child.type == "class_body" for child in node.children):
            raise SourceSyntaxError(
                path, _row(node) + 1, "an object creation without a class body "
                                      "(anonymous classes are not supported)")
        if node.type == "block" and node.parent is not None and node.parent.type == "class_body":
            raise SourceSyntaxError(
                path, _row(node) + 1, "a field, constructor or method declaration")


def _modifiers(node):
    for child in node.children:
        if child.type == "modifiers":
            return set(grandchild.type for grandchild in child.children)
    return set()


def _visibility(modifiers):
    # protected members are reachable from subclasses outside the corpus
    if "public" in modifiers or "protected" in modifiers:
        return "public"
    if "private" in modifiers:
        return "private"
    return "package"


def _declarators(node):
    return [child for child in node.named_children if child.type == "variable_declarator"]


def _declared_names(node):
    return [_text(d.child_by_field_name("name")) for d in _declarators(node)]


def _params(method_node):
    params = []
    parameters = method_node.child_by_field_name("parameters")
    if parameters is None:
        return params
    for child in parameters.named_children:
        if child.type == "formal_parameter":
            params.append(Param(
                name=_text(child.child_by_field_name("name")),
                type=normalize_type(_text(child.child_by_field_name("type")))))
        elif child.type == "spread_parameter":
            type_node = [c for c in child.named_children
                         if c.type not in ("modifiers", "variable_declarator")][0]
            declarator = [c for c in child.named_children if c.type == "variable_declarator"][0]
            params.append(Param(
                name=_text(declarator.child_by_field_name("name")),
                type=normalize_type(_text(type_node)) + "..."))
    return params


def _arity(invocation):
    arguments = invocation.child_by_field_name("arguments")
    if arguments is None:
        return 0
    return len([c for c in arguments.named_children if c.type not in COMMENT_TYPES])


class _BodyScanner(object):
    """
    Collects decision points, normalized tokens and member references of
    one method or constructor body.
    """
    def __init__(self, body, params, fields, class_name):
        self.body = body
        self.fields = fields
        self.class_name = class_name
        self.locals = dict((p.name, p.type) for p in params)
        self.decision_points = 0
        self.tokens = []
        self.own_field_uses = []
        self.own_calls = []
        self.receiver_uses = []

    def scan(self):
        if self.body is None:
            return self
        self._collect_locals()
        self._scan_references()
        return self

    def _collect_locals(self):
        for node in _walk(self.body):
            if node.type == "local_variable_declaration":
                type_text = normalize_type(_text(node.child_by_field_name("type")))
                for name in _declared_names(node):
                    self.locals[name] = type_text
            elif node.type == "enhanced_for_statement":
                self.locals[_text(node.child_by_field_name("name"))] = normalize_type(
                    _text(node.child_by_field_name("type")))
            elif node.type == "catch_formal_parameter":
                catch_type = [c for c in node.named_children if c.type == "catch_type"]
                name = node.child_by_field_name("name")
                if name is not None:
                    self.locals[_text(name)] = normalize_type(
                        _text(catch_type[0])) if catch_type else None

    def _expr_type(self, node):
        """Declared type name of a receiver expression, THIS, or None."""
        if node.type == "this":
            return THIS
        if node.type == "identifier":
            name = _text(node)
            if name in self.locals:
                return strip_array(self.locals[name])
            if name in self.fields:
                self.own_field_uses.append(name)
                return strip_array(self.fields[name])
            # Not a variable: a class name used for static access.
            return name
        if node.type == "field_access":
            obj = node.child_by_field_name("object")
            field = _text(node.child_by_field_name("field"))
            if obj.type == "this":
                if field in self.fields:
                    self.own_field_uses.append(field)
                    return strip_array(self.fields[field])
                return None
            self._record_member(obj, field, FIELD_ACCESS)
            return None
        if node.type == "object_creation_expression":
            return strip_array(normalize_type(_text(node.child_by_field_name("type"))))
        if node.type == "cast_expression":
            return strip_array(normalize_type(_text(node.child_by_field_name("type"))))
        if node.type == "parenthesized_expression" and node.named_child_count == 1:
            return self._expr_type(node.named_children[0])
        return None

    def _record_member(self, receiver, member, arity):
        if receiver is None or receiver.type == "super":
            return
        receiver_type = self._expr_type(receiver)
        if receiver_type == THIS:
            if arity == FIELD_ACCESS:
                if member in self.fields:
                    self.own_field_uses.append(member)
            else:
                self.own_calls.append((member, arity))
        else:
            self.receiver_uses.append((receiver_type, member, arity))

    def _scan_references(self):
        for node in _walk(self.body, opaque=LITERAL_TYPES):
            node_type = node.type
            if node_type in BRANCH_TYPES:
                self.decision_points += 1
            elif node_type == "switch_label":
                if node.children and node.children[0].type == "case":
                    self.decision_points += 1
            elif node_type == "binary_expression":
                operator = node.child_by_field_name("operator")
                if operator is not None and operator.type in SHORT_CIRCUIT_OPERATORS:
                    self.decision_points += 1

            if node_type == "method_invocation":
                name = _text(node.child_by_field_name("name"))
                receiver = node.child_by_field_name("object")
                if receiver is None:
                    self.own_calls.append((name, _arity(node)))
                else:
                    self._record_member(receiver, name, _arity(node))
            elif node_type == "field_access" and not self._is_receiver(node):
                # receivers are typed by the enclosing access
                self._record_member(
                    node.child_by_field_name("object"),
                    _text(node.child_by_field_name("field")), FIELD_ACCESS)
            elif node_type == "identifier" and self._is_bare_use(node):
                name = _text(node)
                if name in self.fields and name not in self.locals:
                    self.own_field_uses.append(name)

            if (node.child_count == 0 or node_type in LITERAL_TYPES) and \
                    node_type not in COMMENT_TYPES:
                self.tokens.append("ID" if node_type in IDENTIFIER_TYPES else _text(node))

    @staticmethod
    def _is_receiver(node):
        parent = node.parent
        return parent.type in ("field_access", "method_invocation") and \
            _same(node, parent.child_by_field_name("object"))

    @staticmethod
    def _is_bare_use(node):
        parent = node.parent
        if parent is None:
            return False
        if parent.type in LABEL_PARENTS:
            return False
        if parent.type in DECLARING_PARENTS and _same(node, parent.child_by_field_name("name")):
            return False
        if parent.type == "method_invocation":
            return False
        if parent.type == "field_access":
            return False
        return True


def _parse_callable(node, unit, kinds, fields, class_name, is_constructor):
    modifiers = _modifiers(node)
    params = _params(node)
    body = node.child_by_field_name("body")
    start_row, end_row = _row(node), node.end_point[0]
    scanner = _BodyScanner(body, params, fields, class_name).scan()
    sloc = len([k for k in kinds[start_row:end_row + 1] if k == CODE])
    name = class_name if is_constructor else _text(node.child_by_field_name("name"))
    return ParsedMethod(
        name=name,
        params=tuple(params),
        visibility=_visibility(modifiers),
        is_static="static" in modifiers,
        is_abstract=body is None,
        is_constructor=is_constructor,
        start_line=start_row + 1,
        end_line=end_row + 1,
        sloc=sloc,
        decision_points=scanner.decision_points,
        body_tokens=tuple(scanner.tokens),
        own_field_uses=tuple(scanner.own_field_uses),
        own_calls=tuple(scanner.own_calls),
        receiver_uses=tuple(scanner.receiver_uses),
        feature_tags=tuple(sorted(set(
            feature_tags_above(unit.raw_lines, start_row, unit.path)))))


def _type_refs(class_node):
    refs = set()
    stack = [class_node]
    while stack:
        node = stack.pop()
        if node.type == "scoped_type_identifier":
            refs.add(normalize_type(_text(node)))
            continue
        if node.type == "type_identifier":
            refs.add(_text(node))
        stack.extend(node.children)
    return refs


def _parse_class(node, unit, kinds, package, imports):
    class_name = _text(node.child_by_field_name("name"))
    superclass = None
    superclass_node = node.child_by_field_name("superclass")
    if superclass_node is not None:
        superclass = normalize_type(_text(superclass_node.named_children[0]))

    body = node.child_by_field_name("body")
    fields = []
    for member in body.named_children:
        if member.type == "field_declaration":
            type_text = normalize_type(_text(member.child_by_field_name("type")))
            for name in _declared_names(member):
                fields.append((name, type_text))
    field_types = dict(fields)

    methods = []
    constructors = []
    for member in body.named_children:
        if member.type == "method_declaration":
            methods.append(_parse_callable(
                member, unit, kinds, field_types, class_name, is_constructor=False))
        elif member.type == "constructor_declaration":
            constructors.append(_parse_callable(
                member, unit, kinds, field_types, class_name, is_constructor=True))

    refs = _type_refs(node)
    refs.discard(class_name)
    return ParsedClass(
        name=class_name,
        package=package,
        path=unit.path,
        imports=tuple(imports),
        superclass=superclass,
        fields=tuple(fields),
        methods=tuple(methods),
        constructors=tuple(constructors),
        type_refs=tuple(sorted(refs)),
        start_line=_row(node) + 1)


def parse_unit(unit):
    """
    Parse one `SourceUnit` into a `ParsedFile`.

    Raises
    ------
    SourceSyntaxError
        For syntax errors and for constructs outside the supported subset.
    MalformedAnnotationError
        For an @feature comment without a quoted name.
    """
    tree = _get_parser().parse(unit.text.encode("utf-8"))
    root = tree.root_node
    if root.has_error:
        line, expected = _first_error(root)
        raise SourceSyntaxError(unit.path, line, expected)
    _check_supported(root, unit.path)
    check_annotations(unit.raw_lines, unit.path)

    package = DEFAULT_PACKAGE
    imports = []
    class_nodes = []
    for child in root.named_children:
        if child.type == "package_declaration":
            names = [c for c in child.named_children
                     if c.type in ("scoped_identifier", "identifier")]
            package = _text(names[0])
        elif child.type == "import_declaration":
            text = _text(child)
            name = text.replace("import", "", 1).replace("static ", "").rstrip(";")
            imports.append(normalize_type(name))
        elif child.type == "class_declaration":
            class_nodes.append(child)
        elif child.type not in COMMENT_TYPES:
            raise SourceSyntaxError(unit.path, _row(child) + 1, "a class declaration")

    kinds = classify_lines(unit.raw_lines)
    classes = [_parse_class(node, unit, kinds, package, imports) for node in class_nodes]

    annotated = set(annotated_rows(unit.raw_lines))
    claimed = set()
    for cls in classes:
        for method in cls.methods:
            row = method.start_line - 2
            while row in annotated:
                claimed.add(row)
                row -= 1
    orphans = sorted(row + 1 for row in annotated - claimed)
    for line in orphans:
        logger.warning("{}:{}: @feature annotation is not directly above a method".format(
            unit.path, line))
    logger.debug("parsed {}: {} classes".format(unit.path, len(classes)))
    return ParsedFile(path=unit.path, package=package, classes=tuple(classes),
                      orphan_annotations=tuple(orphans))
