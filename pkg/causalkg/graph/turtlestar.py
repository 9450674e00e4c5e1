#!/usr/bin/env python
# encoding: utf-8
"""
graph/turtlestar.py

A canonical serializer and a recursive-descent parser for the subset of
Turtle-star that causal knowledge graphs need:

    doc      := (prefix | stmt)*
    prefix   := "@prefix" PNAME_NS IRIREF "."
    stmt     := subj polist "."
    subj     := iri | embedded
    embedded := "<<" subj iri obj ">>"
    polist   := iri objlist (";" iri objlist)*
    objlist  := obj ("," obj)*
    obj      := iri | embedded | literal
    literal  := STRING ("^^" iri)? | NUMBER
    iri      := IRIREF | PNAME_LN | PNAME_NS

Comments run from “#” to the end of the line. Blank nodes, collections,
language tags, the “a” keyword and base directives are not part of it.

Numbers, and strings typed xsd:double, are read as xsd:double literals
with the canonical lexical form -- the shortest decimal that round-trips.
Serialized output is canonical: the same graph always yields the same text.
"""
from __future__ import print_function

import logging
import math
import re

from rdflib import Literal, URIRef, XSD

from causalkg.constants import MAX_NESTING, ENCODING
from causalkg.errors import TurtleSyntaxError, UnknownPrefix, FormatError
from causalkg.graph.knowledge import CausalKnowledgeGraph
from causalkg.graph.terms import EmbeddedTriple, Statement, double
from causalkg.utils.lexing import scan, TokenStream
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

PN_PREFIX = r'[A-Za-z][A-Za-z0-9_\-]*'
PN_LOCAL = r'[A-Za-z0-9_](?:[A-Za-z0-9_\-]|%[0-9A-Fa-f]{2})*'
UCHAR = r'\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8}'

TOKENS = re.compile(rf'''
    (?P<WS>         [ \t\r\n]+ | \#[^\r\n]* )
  | (?P<OPEN>       << )
  | (?P<CLOSE>      >> )
  | (?P<IRIREF>     < (?: [^\x00-\x20<>"{{}}|^`\\] | {UCHAR} )* > )
  | (?P<PREFIX>     @prefix (?![A-Za-z0-9_]) )
  | (?P<PNAME>      (?: {PN_PREFIX} )? : (?: {PN_LOCAL} )? )
  | (?P<STRING>     " (?: [^"\\\n\r] | \\[tbnrf"'\\] | {UCHAR} )* " )
  | (?P<NUMBER>     [+-]? (?: [0-9]*\.[0-9]+ | [0-9]+ ) (?: [eE][+-]?[0-9]+ )? )
  | (?P<DATATYPE>   \^\^ )
  | (?P<DOT>        \. )
  | (?P<SEMICOLON>  ; )
  | (?P<COMMA>      , )
''', re.VERBOSE)

NAMES = { 'OPEN'        : "'<<'",
          'CLOSE'       : "'>>'",
          'IRIREF'      : "IRI",
          'PREFIX'      : "'@prefix'",
          'PNAME'       : "prefixed name",
          'STRING'      : "string",
          'NUMBER'      : "number",
          'DATATYPE'    : "'^^'",
          'DOT'         : "'.'",
          'SEMICOLON'   : "';'",
          'COMMA'       : "','",
          'EOF'         : "end of input" }

IRI_KINDS = ('IRIREF', 'PNAME')
SUBJECT_KINDS = IRI_KINDS + ('OPEN',)
OBJECT_KINDS = SUBJECT_KINDS + ('STRING', 'NUMBER')

DOUBLE_LEXICAL = re.compile(r'[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?')
ABSOLUTE = re.compile(r'[A-Za-z][A-Za-z0-9+.\-]*:')
LOCAL = re.compile(PN_LOCAL)
IRI_FORBIDDEN = re.compile(r'[\x00-\x20<>"{}|^`\\]')
UCHAR_RUN = re.compile(UCHAR)
ESCAPES = { 't' : "\t", 'b' : "\b", 'n' : "\n", 'r' : "\r", 'f' : "\f",
            '"' : '"', "'" : "'", '\\' : '\\' }

# Serialization:

def escape_iri(iri):
    return IRI_FORBIDDEN.sub(lambda match: "\\u%04X" % ord(match.group()), iri)

def escape_string(string):
    out = []
    for character in string:
        if character == '"':
            out.append('\\"')
        elif character == '\\':
            out.append('\\\\')
        elif character == "\n":
            out.append('\\n')
        elif character == "\r":
            out.append('\\r')
        elif character == "\t":
            out.append('\\t')
        elif ord(character) < 0x20 or ord(character) == 0x7F:
            out.append("\\u%04X" % ord(character))
        else:
            out.append(character)
    return "".join(out)

@export
class Compactor(object):

    """ Writes terms, abbreviating IRIs with the longest matching prefix """
    __slots__ = ('prefixes',)

    def __init__(self, prefixes):
        self.prefixes = sorted(prefixes.items(), key=lambda item: (-len(item[1]), item[0]))

    def iri(self, iri):
        iri = str(iri)
        for prefix, namespace in self.prefixes:
            if iri.startswith(namespace):
                local = iri[len(namespace):]
                if LOCAL.fullmatch(local):
                    return f"{prefix}:{local}"
        return f"<{escape_iri(iri)}>"

    def literal(self, literal):
        lexical = f'"{escape_string(str(literal))}"'
        if literal.datatype is None:
            return lexical
        return f"{lexical}^^{self.iri(literal.datatype)}"

    def term(self, term):
        if isinstance(term, EmbeddedTriple):
            return "<< %s %s %s >>" % (self.term(term.subject),
                                       self.iri(term.predicate),
                                       self.term(term.object))
        if isinstance(term, Literal):
            return self.literal(term)
        return self.iri(term)

@export
def serialize(kg):
    """ The canonical Turtle-star text of `kg` """
    compactor = Compactor(kg.prefixes)
    lines = [f"@prefix {prefix}: <{escape_iri(namespace)}> ." \
             for prefix, namespace in sorted(kg.prefixes.items())]

    subjects = {}
    for statement in kg:
        subjects.setdefault(statement.subject, {}) \
                .setdefault(statement.predicate, []).append(statement.object)

    def subject_key(subject):
        if isinstance(subject, EmbeddedTriple):
            return (1, compactor.term(subject))
        return (0, str(subject))

    blocks = []
    for subject in sorted(subjects, key=subject_key):
        predicates = subjects[subject]
        clauses = []
        for predicate in sorted(predicates, key=str):
            objects = sorted(compactor.term(object) for object in predicates[predicate])
            clauses.append(f"{compactor.iri(predicate)} " + ", ".join(objects))
        blocks.append(f"{compactor.term(subject)} " + " ;\n    ".join(clauses) + " .")

    sections = []
    if lines:
        sections.append("\n".join(lines))
    sections.extend(blocks)
    return "\n\n".join(sections) + "\n" if sections else ""

@export
def dump(kg, path):
    try:
        with open(path, 'w', encoding=ENCODING, newline="\n") as handle:
            handle.write(serialize(kg))
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}")
    return path

# Parsing:

def decode_uchars(text, token):
    def replace(match):
        code = int(match.group()[2:], 16)
        if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
            raise TurtleSyntaxError(f"invalid escape {match.group()}",
                                    line=token.line, column=token.column)
        return chr(code)
    return UCHAR_RUN.sub(replace, text)

def decode_string(token):
    body = token.text[1:-1]
    out, position = [], 0
    while position < len(body):
        character = body[position]
        if character != '\\':
            out.append(character)
            position += 1
        elif body[position + 1] in 'uU':
            width = 6 if body[position + 1] == 'u' else 10
            out.append(decode_uchars(body[position:position + width], token))
            position += width
        else:
            out.append(ESCAPES[body[position + 1]])
            position += 2
    return "".join(out)

def normalized_double(lexical, token):
    lexical = lexical.strip()
    if not DOUBLE_LEXICAL.fullmatch(lexical):
        raise TurtleSyntaxError(f"not a finite xsd:double: {lexical!r}",
                                line=token.line, column=token.column)
    value = float(lexical)
    if not math.isfinite(value):
        raise TurtleSyntaxError(f"xsd:double out of range: {lexical!r}",
                                line=token.line, column=token.column)
    return double(value)

class TurtleStarParser(object):

    __slots__ = ('stream', 'prefixes', 'statements')

    def __init__(self, text):
        self.stream = TokenStream(scan(text, TOKENS, TurtleSyntaxError),
                                  TurtleSyntaxError, NAMES)
        self.prefixes = {}
        self.statements = set()

    def document(self):
        stream = self.stream
        while not stream.at('EOF'):
            if stream.at('PREFIX'):
                self.prefix()
            elif stream.at(*SUBJECT_KINDS):
                self.statement()
            else:
                stream.fail('PREFIX', *SUBJECT_KINDS, 'EOF')
        return CausalKnowledgeGraph(frozenset(self.statements), self.prefixes)

    def prefix(self):
        stream = self.stream
        stream.expect('PREFIX')
        name = stream.expect('PNAME')
        if not name.text.endswith(':'):
            stream.fail_at(name, f"a prefix declaration names a prefix, not {name.text!r}")
        namespace = self.iriref(stream.expect('IRIREF'))
        stream.expect('DOT')
        self.prefixes[name.text[:-1]] = str(namespace)

    def statement(self):
        stream = self.stream
        subject = self.subject(0)
        while True:
            predicate = self.iri()
            while True:
                object = self.object(0)
                self.statements.add(Statement(subject, predicate, object))
                if not stream.accept('COMMA'):
                    break
            if not stream.accept('SEMICOLON'):
                break
        stream.expect('DOT', 'COMMA', 'SEMICOLON')

    def subject(self, depth):
        if self.stream.at('OPEN'):
            return self.embedded(depth + 1)
        if self.stream.at(*IRI_KINDS):
            return self.iri()
        self.stream.fail(*SUBJECT_KINDS)

    def object(self, depth):
        stream = self.stream
        if stream.at('OPEN'):
            return self.embedded(depth + 1)
        if stream.at(*IRI_KINDS):
            return self.iri()
        if stream.at('NUMBER'):
            token = stream.advance()
            return normalized_double(token.text, token)
        if stream.at('STRING'):
            token = stream.advance()
            lexical = decode_string(token)
            if stream.accept('DATATYPE'):
                datatype = self.iri()
                if datatype == XSD.double:
                    return normalized_double(lexical, token)
                return Literal(lexical, datatype=datatype, normalize=False)
            return Literal(lexical)
        stream.fail(*OBJECT_KINDS)

    def embedded(self, depth):
        stream = self.stream
        opening = stream.expect('OPEN')
        if depth > MAX_NESTING:
            stream.fail_at(opening, f"embedded triples nested deeper than {MAX_NESTING}")
        subject = self.subject(depth)
        predicate = self.iri()
        object = self.object(depth)
        stream.expect('CLOSE')
        return EmbeddedTriple(subject, predicate, object)

    def iri(self):
        token = self.stream.expect(*IRI_KINDS)
        if token.kind == 'IRIREF':
            return self.iriref(token)
        prefix, _, local = token.text.partition(':')
        if prefix not in self.prefixes:
            raise UnknownPrefix(token.text, line=token.line, column=token.column)
        return URIRef(self.prefixes[prefix] + local)

    def iriref(self, token):
        iri = decode_uchars(token.text[1:-1], token)
        if not ABSOLUTE.match(iri):
            raise TurtleSyntaxError(f"relative IRI <{iri}> (no base is in effect)",
                                    line=token.line, column=token.column)
        return URIRef(iri)

@export
def parse(text):
    """ Read a Turtle-star document into a CausalKnowledgeGraph. Raises
        TurtleSyntaxError or UnknownPrefix, located by line and column.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode(ENCODING)
        except UnicodeDecodeError as exc:
            raise TurtleSyntaxError(f"invalid UTF-8 at byte {exc.start}")
    if text.startswith("\ufeff"):
        text = text[1:]
    return TurtleStarParser(text).document()

@export
def load(path):
    try:
        with open(path, 'r', encoding=ENCODING) as handle:
            text = handle.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}")
    return parse(text)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
