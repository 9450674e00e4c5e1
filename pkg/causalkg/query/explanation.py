#!/usr/bin/env python
# encoding: utf-8
"""
query/explanation.py

Template explanations of query results. Text is a pure function of the
result, the knowledge graph and the query: every collection is sorted
before it is rendered, and numbers are printed to four decimal places.
"""
from __future__ import print_function

import networkx as nx

from causalkg.constants import DECIMALS
from causalkg.graph.terms import EmbeddedTriple, double_value, is_double
from causalkg.ontology.schema import OntologySchema
from causalkg.query.ast import Associational, Interventional, Effect, Necessity
from causalkg.query.evaluation import fixed
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

EFFECT_NAMES = { 'TCE'  : "total causal effect",
                 'NDE'  : "natural direct effect",
                 'NIE'  : "natural indirect effect" }

NECESSITY_NAMES = { 'PN'    : "probability of necessity",
                    'PS'    : "probability of sufficiency",
                    'PNS'   : "probability of necessity and sufficiency" }

ANNOTATION_NAMES = { OntologySchema.totalCausalEffect       : EFFECT_NAMES['TCE'],
                     OntologySchema.naturalDirectEffect     : EFFECT_NAMES['NDE'],
                     OntologySchema.naturalIndirectEffect   : EFFECT_NAMES['NIE'] }

@export
def local_name(iri):
    """ The part of an IRI after its last “#”, “/” or “:” """
    text = str(iri)
    for separator in "#/:":
        text = text.rsplit(separator, 1)[-1]
    return text

def events(items):
    return ", ".join(f"{variable} is {state}" for variable, state in items)

class Reader(object):

    """ Name-level view of a knowledge graph’s causal structure """
    __slots__ = ('kg', 'graph')

    def __init__(self, kg):
        self.kg = kg
        self.graph = nx.DiGraph()
        for cause, effect in sorted(kg.causes):
            self.graph.add_edge(self.name(cause), self.name(effect))

    def name(self, iri):
        return self.kg.labels.get(iri) or local_name(iri)

    def iri(self, name):
        return self.kg.iri_of(name)

    def paths(self, source, target):
        if source not in self.graph or target not in self.graph:
            return []
        return sorted(nx.all_simple_paths(self.graph, source, target))

    def confounders(self, first, second):
        if first not in self.graph or second not in self.graph:
            return []
        common = nx.ancestors(self.graph, first) & nx.ancestors(self.graph, second)
        # Only causes that reach each side without passing through the other
        return sorted(name for name in common \
                       if any(first not in path for path in self.paths(name, second)) \
                      and any(second not in path for path in self.paths(name, first)))

    def relation(self, treatment, outcome):
        cause, effect = self.iri(treatment), self.iri(outcome)
        if cause is None or effect is None:
            return None
        return EmbeddedTriple(cause, OntologySchema.causes, effect)

    def mediators(self, treatment, outcome):
        triple = self.relation(treatment, outcome)
        if triple is None:
            return []
        return sorted(self.name(statement.object) \
                      for statement in self.kg.matching(triple, OntologySchema.causesWith))

    def recorded(self, treatment, outcome):
        triple = self.relation(treatment, outcome)
        if triple is None:
            return []
        out = []
        for predicate, value in sorted(self.kg.annotations(triple).items()):
            if predicate in ANNOTATION_NAMES and is_double(value):
                out.append((ANNOTATION_NAMES[predicate], double_value(value)))
        return out

def render_paths(reader, source, target):
    paths = reader.paths(source, target)
    if not paths:
        return [f"The knowledge graph records no causal path from {source} to {target}."]
    lines = [f"Causal paths from {source} to {target} in the knowledge graph:"]
    lines.extend("  " + " → ".join(path) for path in paths)
    return lines

def restate(ast):
    if isinstance(ast, Interventional):
        out = f"How probable is it that {events(ast.targets)}, " \
              f"if {events(ast.interventions)} by intervention"
        if ast.evidence:
            out += f", given that {events(ast.evidence)}"
        return out + "?"
    if isinstance(ast, Associational):
        out = f"How probable is it that {events(ast.targets)}"
        if ast.evidence:
            out += f", given that {events(ast.evidence)}"
        return out + "?"
    if isinstance(ast, Effect):
        spec = ast.spec
        out = f"What is the {EFFECT_NAMES[ast.kind]} of {spec.treatment} on {spec.outcome}"
        if spec.mediator is not None:
            out += f" through {spec.mediator}"
        return out + "?"
    if isinstance(ast, Necessity):
        return f"What is the {NECESSITY_NAMES[ast.kind]} of {ast.cause} for {ast.outcome}?"
    return ast.to_string()

def structure(ast, reader, decimals):
    if isinstance(ast, Interventional):
        lines = []
        for (source, _) in sorted(set(ast.interventions)):
            for (target, _) in sorted(set(ast.targets)):
                lines.extend(render_paths(reader, source, target))
                confounders = reader.confounders(source, target)
                if confounders:
                    lines.append(f"Confounders of {source} and {target}, "
                                 f"cut off by the intervention: {', '.join(confounders)}.")
        return lines
    if isinstance(ast, Associational):
        return ["Answered from the observational distribution; "
                "no causal claim is made."]
    if isinstance(ast, Effect):
        spec = ast.spec
        lines = render_paths(reader, spec.treatment, spec.outcome)
        mediators = reader.mediators(spec.treatment, spec.outcome)
        if mediators:
            lines.append(f"Mediated (ckg:causesWith) by: {', '.join(mediators)}.")
        for name, value in reader.recorded(spec.treatment, spec.outcome):
            lines.append(f"Recorded {name}: {fixed(value, decimals)}.")
        return lines
    if isinstance(ast, Necessity):
        return render_paths(reader, ast.cause.variable, ast.outcome.variable)
    return []

def interpretation(result, decimals):
    ast = result.query
    if isinstance(ast, Effect):
        spec = result.report.spec
        value = fixed(result.value, decimals)
        if ast.kind == 'TCE':
            return [f"Setting {spec.treatment} from {spec.t0} to {spec.t1} changes the "
                    f"expected {spec.outcome} by {value}."]
        if ast.kind == 'NDE':
            return [f"With {spec.mediator} held at its distribution under "
                    f"{spec.treatment}={spec.t0}, setting {spec.treatment} from "
                    f"{spec.t0} to {spec.t1} changes the expected {spec.outcome} "
                    f"by {value}: the natural direct effect."]
        return [f"With {spec.treatment} held at {spec.t0}, shifting {spec.mediator} to "
                f"its distribution under {spec.treatment}={spec.t1} changes the expected "
                f"{spec.outcome} by {value}: the natural indirect effect."]
    if isinstance(ast, Necessity):
        interval = result.interval
        return [f"The {NECESSITY_NAMES[ast.kind]} lies between "
                f"{fixed(interval.lo, decimals)} and {fixed(interval.hi, decimals)}."]
    return [f"Probability: {fixed(result.value, decimals)}."]

@export
def explain(result, kg=None, ast=None, decimals=DECIMALS):
    """ Render `result` as explanatory text: its rung, the question in
        words, the causal paths and mediators the knowledge graph records,
        and the answer.
    """
    ast = ast or result.query
    lines = [f"[{result.rung.tag}] {result.to_text(decimals)}",
             restate(ast)]
    lines.extend(interpretation(result, decimals))
    if kg is None:
        lines.append("No knowledge graph supplied; causal paths are not cited.")
    else:
        lines.extend(structure(ast, Reader(kg), decimals))
    warnings = getattr(result, 'warnings', ())
    lines.extend(f"Warning: {warning}" for warning in warnings)
    return "\n".join(lines) + "\n"

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
