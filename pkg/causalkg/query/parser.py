#!/usr/bin/env python
# encoding: utf-8
"""
query/parser.py

Recursive-descent parser for the query language:

    query   := prob | effect | pn
    prob    := "P" "(" events ("|" conds)? ")"
    conds   := cond ("," cond)*
    cond    := event | "do" "(" events ")"
    events  := event ("," event)*
    event   := IDENT "=" IDENT
    effect  := ("TCE" | "NDE" | "NIE") "(" IDENT "->" IDENT ("|" "via" IDENT)?
                                        ("," "t0" "=" IDENT "," "t1" "=" IDENT)? ")"
    pn      := ("PN" | "PS" | "PNS") "(" event "->" event ")"

Whitespace is insignificant. Keywords are not reserved: “do” only opens
an intervention when an opening parenthesis follows it.
"""
from __future__ import print_function

import re

from causalkg.errors import QuerySyntaxError
from causalkg.query.ast import (Event, Associational, Interventional,
                                Necessity, effect, EFFECT_KINDS, NECESSITY_KINDS)
from causalkg.utils.lexing import scan, TokenStream
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

TOKENS = re.compile(r'''
    (?P<WS>         \s+ )
  | (?P<IDENT>      [A-Za-z0-9_][A-Za-z0-9_.]* )
  | (?P<ARROW>      -> )
  | (?P<LPAREN>     \( )
  | (?P<RPAREN>     \) )
  | (?P<PIPE>       \| )
  | (?P<COMMA>      , )
  | (?P<EQUALS>     = )
''', re.VERBOSE)

NAMES = { 'IDENT'       : "name",
          'ARROW'       : "'->'",
          'LPAREN'      : "'('",
          'RPAREN'      : "')'",
          'PIPE'        : "'|'",
          'COMMA'       : "','",
          'EQUALS'      : "'='",
          'EOF'         : "end of input" }

QUERY_HEADS = ('P',) + EFFECT_KINDS + NECESSITY_KINDS

class QueryParser(object):

    __slots__ = ('stream',)

    def __init__(self, text):
        self.stream = TokenStream(scan(text, TOKENS, QuerySyntaxError),
                                  QuerySyntaxError, NAMES)

    def keyword(self, *words):
        token = self.stream.peek()
        if token.kind == 'IDENT' and token.text in words:
            return self.stream.advance()
        self.stream.fail(*(repr(word) for word in words))

    def name(self):
        return self.stream.expect('IDENT').text

    def query(self):
        head = self.keyword(*QUERY_HEADS).text
        self.stream.expect('LPAREN')
        if head == 'P':
            ast = self.prob()
        elif head in EFFECT_KINDS:
            ast = self.effect(head)
        else:
            ast = self.necessity(head)
        self.stream.expect('RPAREN')
        self.stream.expect('EOF')
        return ast

    def event(self):
        variable = self.name()
        self.stream.expect('EQUALS')
        return Event(variable, self.name())

    def events(self):
        out = [self.event()]
        while self.stream.accept('COMMA'):
            out.append(self.event())
        return out

    def at_intervention(self):
        token = self.stream.peek()
        return token.kind == 'IDENT' and token.text == 'do' \
                                     and self.stream.peek(1).kind == 'LPAREN'

    def prob(self):
        targets = self.events()
        interventions, evidence = [], []
        intervened = False
        if self.stream.accept('PIPE'):
            while True:
                if self.at_intervention():
                    self.stream.advance()
                    self.stream.advance()
                    interventions.extend(self.events())
                    self.stream.expect('RPAREN')
                    intervened = True
                elif self.stream.at('IDENT'):
                    evidence.append(self.event())
                else:
                    self.stream.fail('condition')
                if not self.stream.accept('COMMA'):
                    break
        if intervened:
            return Interventional(targets, interventions, evidence)
        return Associational(targets, evidence)

    def effect(self, kind):
        treatment = self.name()
        self.stream.expect('ARROW')
        outcome = self.name()
        mediator = t0 = t1 = None
        if self.stream.accept('PIPE'):
            self.keyword('via')
            mediator = self.name()
        if self.stream.accept('COMMA'):
            self.keyword('t0')
            self.stream.expect('EQUALS')
            t0 = self.name()
            self.stream.expect('COMMA')
            self.keyword('t1')
            self.stream.expect('EQUALS')
            t1 = self.name()
        return effect(kind, treatment, outcome, mediator, t0, t1)

    def necessity(self, kind):
        cause = self.event()
        self.stream.expect('ARROW')
        return Necessity(cause, self.event(), kind=kind)

@export
def parse_query(text):
    """ Parse query text into a query object, or raise QuerySyntaxError
        carrying the 1-based column of the offending token and the set
        of tokens that would have been accepted there.
    """
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode('utf-8', errors='replace')
    return QueryParser(text).query()

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
