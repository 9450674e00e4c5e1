#!/usr/bin/env python
# encoding: utf-8
"""
utils/lexing.py

Shared plumbing for the two recursive-descent parsers (Turtle-star
documents and queries): a regex-driven scanner producing located
tokens, and a token stream whose failures report the 1-based line and
column of the offending token together with what would have been accepted.
"""
from __future__ import print_function

from typing import NamedTuple

from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

EOF = 'EOF'

@export
class Token(NamedTuple):

    kind: str
    text: str
    line: int
    column: int

    def describe(self):
        if self.kind == EOF:
            return "end of input"
        return repr(self.text)

@export
def scan(text, pattern, error, skip=('WS',)):
    """ Split `text` into tokens, named after the groups of `pattern`
        (a compiled regex of named alternatives). Raise `error` at the
        first character no alternative matches.
    """
    position, line, line_start = 0, 1, 0
    tokens = []
    end = len(text)
    while position < end:
        match = pattern.match(text, position)
        if match is None or match.end() == position:
            raise error(f"unexpected character {text[position]!r}",
                        line=line, column=position - line_start + 1)
        kind = match.lastgroup
        if kind not in skip:
            tokens.append(Token(kind, match.group(), line, position - line_start + 1))
        newlines = match.group().count("\n")
        if newlines:
            line += newlines
            line_start = match.start() + match.group().rfind("\n") + 1
        position = match.end()
    tokens.append(Token(EOF, '', line, position - line_start + 1))
    return tokens

@export
class TokenStream(object):

    """ A cursor over scanned tokens. `names` maps token kinds to the
        words used for them in “expected …” diagnostics.
    """
    __slots__ = ('tokens', 'position', 'error', 'names')

    def __init__(self, tokens, error, names=None):
        self.tokens = tokens
        self.position = 0
        self.error = error
        self.names = dict(names or {})

    def peek(self, offset=0):
        index = min(self.position + offset, len(self.tokens) - 1)
        return self.tokens[index]

    def advance(self):
        token = self.tokens[self.position]
        if token.kind != EOF:
            self.position += 1
        return token

    def at(self, *kinds):
        return self.peek().kind in kinds

    def accept(self, kind):
        if self.at(kind):
            return self.advance()
        return None

    def expect(self, *kinds):
        if self.at(*kinds):
            return self.advance()
        self.fail(*kinds)

    def fail(self, *kinds, token=None):
        token = token or self.peek()
        raise self.error(f"unexpected {token.describe()}",
                         line=token.line, column=token.column,
                         expected=[self.names.get(kind, kind) for kind in kinds])

    def fail_at(self, token, message):
        raise self.error(message, line=token.line, column=token.column)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
