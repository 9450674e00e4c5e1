#!/usr/bin/env python
# encoding: utf-8
"""
ontology/roles.py

Binding model variables to domain IRIs and causal roles. A roles file
is a JSON document:

    { "base_iri": "http://example.org/ad#",
      "prefix": "ad",
      "roles": { "DriverDistraction": { "role": "Treatment",
                                        "pattern": { "outcome": "Collision" } },
                 "SuddenLaneChange":  { "role": "Mediator",
                                        "pattern": { "treatment": "DriverDistraction",
                                                     "outcome": "Collision" } },
                 "Collision":         { "role": "Outcome",
                                        "iri": "http://example.org/ad#Crash" } } }

Variables the file leaves out play the Context role, under an IRI
minted from the base. Each declared pattern is one effect to compute
and annotate: a treatment, an outcome, and optionally a mediator.
"""
from __future__ import print_function

import logging
import re

from dataclasses import dataclass, field
from enum import unique
from typing import Mapping, NamedTuple, Optional
from urllib.parse import quote, urlsplit

from clu.enums import alias, AliasingEnum
from rdflib import URIRef

from causalkg.constants import DEFAULT_BASE_IRI
from causalkg.errors import InvalidBaseIri, RoleError
from causalkg.network.validation import Finding, ValidationReport
from causalkg.ontology.schema import OntologySchema
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

# Prefix names usable in Turtle-star output:
PREFIX_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")

@export
@unique
class CausalRole(AliasingEnum):

    TREATMENT   = 'Treatment'
    MEDIATOR    = 'Mediator'
    OUTCOME     = 'Outcome'
    CONTEXT     = 'Context'
    CAUSE       = alias(TREATMENT)
    EFFECT      = alias(OUTCOME)

    @classmethod
    def for_string(cls, string):
        for member in cls:
            if member.to_string() == string:
                return member
        raise RoleError(f"unknown causal role “{string}” (expected one of: "
                        + ", ".join(member.to_string() for member in cls) + ")")

    def to_string(self):
        return str(self.value)

    def __str__(self):
        return self.to_string()

    @property
    def iri(self):
        """ The ontology class of this role -- Context has none """
        if self is CausalRole.CONTEXT:
            return None
        return getattr(OntologySchema, self.value)

@export
class Pattern(NamedTuple):

    """ One declared effect: treatment → outcome, optionally via a mediator """
    treatment: str
    outcome: str
    mediator: Optional[str] = None

    def __str__(self):
        if self.mediator is None:
            return f"{self.treatment} → {self.outcome}"
        return f"{self.treatment} → {self.mediator} → {self.outcome}"

@export
class RoleEntry(NamedTuple):

    variable: str
    role: CausalRole
    iri: Optional[str] = None
    pattern: Optional[Pattern] = None

def is_absolute(iri):
    try:
        parts = urlsplit(iri)
    except ValueError:
        return False
    return bool(parts.scheme) and parts.scheme[0].isalpha() \
                              and not any(c.isspace() for c in iri)

@export
def default_iri(name, base_iri):
    """ Mint an IRI for a variable: the base, plus the percent-encoded name """
    if not isinstance(base_iri, str) or not is_absolute(base_iri):
        raise InvalidBaseIri(f"base IRI must be absolute: {base_iri!r}")
    return URIRef(base_iri + quote(name, safe=''))

@export
@dataclass(frozen=True)
class RoleMapping(object):

    entries: Mapping[str, RoleEntry] = field(default_factory=dict)
    base_iri: str = DEFAULT_BASE_IRI
    prefix: Optional[str] = None

    def __hash__(self):
        return hash((tuple(self.entries.items()), self.base_iri, self.prefix))

    def entry(self, name):
        return self.entries.get(name)

    def role(self, name):
        entry = self.entries.get(name)
        return CausalRole.CONTEXT if entry is None else entry.role

    def iri(self, name):
        entry = self.entries.get(name)
        if entry is not None and entry.iri is not None:
            return URIRef(entry.iri)
        return default_iri(name, self.base_iri)

    def with_role(self, role):
        return tuple(entry.variable for entry in self.entries.values() if entry.role is role)

    def declared_patterns(self):
        """ The patterns named in the mapping, mediated ones first claiming
            their (treatment, outcome) pair, in entry order
        """
        mediated = [entry.pattern for entry in self.entries.values() \
                     if entry.role is CausalRole.MEDIATOR and entry.pattern is not None]
        covered = { (p.treatment, p.outcome) for p in mediated }
        direct = [entry.pattern for entry in self.entries.values() \
                   if entry.role is CausalRole.TREATMENT and entry.pattern is not None \
                  and (entry.pattern.treatment, entry.pattern.outcome) not in covered]
        out = []
        for pattern in mediated + direct:
            if pattern not in out:
                out.append(pattern)
        return tuple(out)

    def patterns(self):
        """ The declared patterns -- or, if none are declared but the
            mapping has exactly one Treatment and one Outcome, the
            pattern relating those two
        """
        declared = self.declared_patterns()
        if declared:
            return declared
        treatments = self.with_role(CausalRole.TREATMENT)
        outcomes = self.with_role(CausalRole.OUTCOME)
        if len(treatments) == 1 and len(outcomes) == 1:
            return (Pattern(treatments[0], outcomes[0]),)
        return ()

    def namespace_prefixes(self):
        if self.prefix is None:
            return {}
        return { self.prefix : self.base_iri }

def read_pattern(name, role, document):
    if document is None:
        return None
    if not isinstance(document, dict):
        raise RoleError(f"role {name}: “pattern” must be an object")
    treatment = document.get('treatment')
    outcome = document.get('outcome')
    if role is CausalRole.TREATMENT:
        if treatment not in (None, name):
            raise RoleError(f"role {name}: a Treatment’s pattern starts from itself")
        treatment = name
    elif role is not CausalRole.MEDIATOR:
        raise RoleError(f"role {name}: only Treatment and Mediator entries take a pattern")
    if not isinstance(treatment, str) or not isinstance(outcome, str):
        raise RoleError(f"role {name}: “pattern” must name a treatment and an outcome")
    return Pattern(treatment, outcome, name if role is CausalRole.MEDIATOR else None)

@export
def roles_from_document(document):
    if not isinstance(document, dict):
        raise RoleError("roles document must be a JSON object")
    base_iri = document.get('base_iri', DEFAULT_BASE_IRI)
    if not isinstance(base_iri, str) or not is_absolute(base_iri):
        raise InvalidBaseIri(f"base IRI must be absolute: {base_iri!r}")
    prefix = document.get('prefix')
    if prefix is not None and not (isinstance(prefix, str) and PREFIX_NAME.fullmatch(prefix)):
        raise RoleError(f"prefix must be a simple name: {prefix!r}")
    roles = document.get('roles', {})
    if not isinstance(roles, dict):
        raise RoleError("“roles” must map variable names to role entries")
    entries = {}
    for name, spec in roles.items():
        if isinstance(spec, str):
            spec = { 'role' : spec }
        if not isinstance(spec, dict) or not isinstance(spec.get('role'), str):
            raise RoleError(f"role {name}: entry must give a “role”")
        role = CausalRole.for_string(spec['role'])
        iri = spec.get('iri')
        if iri is not None and not isinstance(iri, str):
            raise RoleError(f"role {name}: “iri” must be a string")
        entries[name] = RoleEntry(name, role, iri, read_pattern(name, role, spec.get('pattern')))
    return RoleMapping(entries, base_iri, prefix)

@export
def roles_to_document(mapping):
    roles = {}
    for name, entry in mapping.entries.items():
        spec = { 'role' : entry.role.to_string() }
        if entry.iri is not None:
            spec['iri'] = entry.iri
        if entry.pattern is not None:
            spec['pattern'] = { 'outcome' : entry.pattern.outcome }
            if entry.role is CausalRole.MEDIATOR:
                spec['pattern'] = { 'treatment' : entry.pattern.treatment,
                                    'outcome'   : entry.pattern.outcome }
        roles[name] = spec
    out = { 'base_iri' : mapping.base_iri }
    if mapping.prefix is not None:
        out['prefix'] = mapping.prefix
    out['roles'] = roles
    return out

@export
def read_roles(path):
    from causalkg.network.modelfile import load_json
    return roles_from_document(load_json(path))

def entry_findings(model, mapping):
    for name, entry in mapping.entries.items():
        if name not in model:
            yield Finding('role', f"role {name}: unknown variable", name)
            continue
        if entry.iri is not None and not is_absolute(entry.iri):
            yield Finding('role', f"role {name}: IRI is not absolute: {entry.iri}", name)
        if entry.role is CausalRole.MEDIATOR and entry.pattern is None:
            yield Finding('role', f"role {name}: a Mediator must name its "
                                   "(treatment, outcome) pattern", name)

def iri_findings(model, mapping):
    owners = {}
    for name in model.names:
        try:
            iri = str(mapping.iri(name))
        except InvalidBaseIri:
            yield Finding('role', f"role {name}: no IRI, and the base IRI "
                                  f"is not absolute: {mapping.base_iri}", name)
            continue
        if iri in owners:
            yield Finding('role', f"duplicate IRI {iri} for {owners[iri]} and {name}", name)
        else:
            owners[iri] = name

def pattern_findings(model, mapping):
    for pattern in mapping.declared_patterns():
        names = [pattern.treatment, pattern.outcome] + \
                ([pattern.mediator] if pattern.mediator is not None else [])
        unknown = [name for name in names if name not in model]
        if unknown:
            for name in unknown:
                yield Finding('pattern', f"pattern {pattern}: unknown variable {name}", name)
            continue
        if mapping.role(pattern.treatment) is not CausalRole.TREATMENT:
            yield Finding('pattern', f"pattern {pattern}: {pattern.treatment} "
                                      "is not a Treatment", pattern.treatment)
        if mapping.role(pattern.outcome) is not CausalRole.OUTCOME:
            yield Finding('pattern', f"pattern {pattern}: {pattern.outcome} "
                                      "is not an Outcome", pattern.outcome)
        if not model.has_path(pattern.treatment, pattern.outcome):
            yield Finding('pattern', f"treatment {pattern.treatment} is not an "
                                     f"ancestor of outcome {pattern.outcome}",
                                      pattern.treatment)
        elif pattern.mediator is not None and not (
             model.has_path(pattern.treatment, pattern.mediator) and
             model.has_path(pattern.mediator, pattern.outcome)):
            yield Finding('pattern', f"mediator {pattern.mediator} not on a directed path "
                                     f"{pattern.treatment} → … → {pattern.mediator} "
                                     f"→ … → {pattern.outcome}", pattern.mediator)

@export
def validate_roles(model, mapping):
    """ Check a role mapping against the structure of `model`. Every
        problem is a finding; an empty report means every declared
        pattern is realizable in the model’s graph.
    """
    findings = list(entry_findings(model, mapping))
    findings.extend(iri_findings(model, mapping))
    findings.extend(pattern_findings(model, mapping))
    if findings:
        logger.debug("role mapping: %d findings", len(findings))
    return ValidationReport(findings)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
