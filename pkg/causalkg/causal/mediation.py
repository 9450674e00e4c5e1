#!/usr/bin/env python
# encoding: utf-8
"""
causal/mediation.py

Total, natural direct and natural indirect effects of a treatment T on
an outcome Y, through a mediator M, computed exactly from the network.

Effects are differences of expected outcomes, the outcome’s states being
coded by their numeric values (0/1 for a binary variable unless the
model says otherwise, which makes the effects risk differences).

The natural effects rest on the cross-world expectation

    E[Y(t, M(t′))] = Σ_w P(w) Σ_m P(m | do(t′), w) · E[Y | do(t, m), w]

… with W the non-descendants of T. It is evaluated as a query against a
“twin” network: the non-descendants of T are shared, the descendants of
T upstream of M (and M itself) are copied once with T fixed to t′, and
every other descendant is copied once with T fixed to t, reading M from
the first copy. Without confounding between M and Y this is exactly
Σ_m P(m | do(t′)) · E[Y | do(t, m)].
"""
from __future__ import print_function

import logging
import math
import networkx

from dataclasses import dataclass, replace
from typing import Optional, Tuple

from causalkg.constants import TOLERANCE
from causalkg.errors import (InvalidEffectSpec, MissingMediator,
                             DecompositionViolation,
                             NoCausalPath, MediatorNotOnPath, NotIdentified)
from causalkg.causal.intervention import interventional_query
from causalkg.network.inference import Engine
from causalkg.network.model import CausalBayesianNetwork, Cpt
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
@dataclass(frozen=True)
class EffectSpec(object):

    """ Which effect: of `treatment` on `outcome`, optionally through
        `mediator`, as the treatment moves from `t0` to `t1`. Binary
        treatments default to t0 = first state and t1 = second state.
    """
    treatment: str
    outcome: str
    mediator: Optional[str] = None
    t0: Optional[str] = None
    t1: Optional[str] = None

    def resolved(self, model):
        """ Check this spec against `model`, filling in default transition
            states; raises UnknownVariable, UnknownState or InvalidEffectSpec
        """
        treatment = model.variable(self.treatment)
        model.variable(self.outcome)
        if self.treatment == self.outcome:
            raise InvalidEffectSpec(f"treatment and outcome are both {self.treatment}")
        if self.mediator is not None:
            model.variable(self.mediator)
            if self.mediator in (self.treatment, self.outcome):
                raise InvalidEffectSpec(f"mediator {self.mediator} must differ "
                                         "from treatment and outcome")
        t0, t1 = self.t0, self.t1
        if t0 is None and t1 is None:
            if treatment.cardinality != 2:
                raise InvalidEffectSpec(f"treatment {treatment.name} has "
                                        f"{treatment.cardinality} states: give t0 and t1")
            t0, t1 = treatment.states
        elif t0 is None or t1 is None:
            raise InvalidEffectSpec("give both t0 and t1, or neither")
        treatment.index(t0)
        treatment.index(t1)
        if t0 == t1:
            raise InvalidEffectSpec(f"t0 and t1 are both {t0}")
        return replace(self, t0=t0, t1=t1)

    def describe(self):
        out = f"{self.treatment} → {self.outcome}"
        if self.mediator is not None:
            out += f" via {self.mediator}"
        if self.t0 is not None:
            out += f" ({self.t0} → {self.t1})"
        return out

@export
@dataclass(frozen=True)
class EffectReport(object):

    spec: EffectSpec
    tce: float
    nde: Optional[float] = None
    nie: Optional[float] = None
    nie_reversed: Optional[float] = None
    outcome_encoding: Tuple[Tuple[str, float], ...] = ()
    residual: Optional[float] = None
    warnings: Tuple[Warning, ...] = ()

    @property
    def mediated(self):
        return self.spec.mediator is not None

    @classmethod
    def annotation(cls, spec, tce, nde=None, nie=None):
        """ A report carrying given values -- e.g. effects from a study,
            rather than from a model -- for annotating a knowledge graph
        """
        values = [value for value in (tce, nde, nie) if value is not None]
        if not all(math.isfinite(value) for value in values):
            raise InvalidEffectSpec("effect values must be finite")
        return cls(spec, float(tce),
                   None if nde is None else float(nde),
                   None if nie is None else float(nie))

    def to_dict(self):
        out = { 'treatment'         : self.spec.treatment,
                'outcome'           : self.spec.outcome,
                'mediator'          : self.spec.mediator,
                't0'                : self.spec.t0,
                't1'                : self.spec.t1,
                'tce'               : self.tce }
        if self.mediated:
            out.update({ 'nde'            : self.nde,
                         'nie'            : self.nie,
                         'nie_reversed'   : self.nie_reversed })
        out['outcome_encoding'] = dict(self.outcome_encoding)
        out['warnings'] = [str(warning) for warning in self.warnings]
        return out

@export
def expected_outcome(model, outcome, do_set, engine=None):
    """ E[outcome | do(do_set)] under the outcome’s numeric coding """
    if outcome in (do_set or {}):
        raise InvalidEffectSpec(f"outcome {outcome} cannot also be intervened on")
    variable = model.variable(outcome)
    distribution = interventional_query(model, (outcome,), do_set, engine=engine)
    return distribution.expectation(outcome, variable.codings)

def copy_name(name, copy):
    return f"{name}⟨{copy}⟩"

@export
def twin_network(model, treatment, mediator, t_outcome, t_mediator):
    """ The twin network whose copy of the outcome is distributed as
        Y(t_outcome, M(t_mediator)); q.v. module docstring
    """
    descendants = model.descendants(treatment)
    upstream = (model.ancestors(mediator) & descendants) | { mediator }
    downstream = descendants - { mediator }

    def rename(parent, copy):
        if parent == treatment:
            return copy_name(treatment, copy)
        if parent not in descendants:
            return parent
        if parent == mediator:
            return copy_name(mediator, 'm')
        return copy_name(parent, copy)

    variables, cpts = [], []
    for variable in model.variables:
        name = variable.name
        if name == treatment:
            for copy, state in (('m', t_mediator), ('y', t_outcome)):
                root = variable._replace(name=copy_name(name, copy), parents=())
                variables.append(root)
                cpts.append(Cpt.degenerate(root, state))
            continue
        if name not in descendants:
            variables.append(variable)
            cpts.append(model.cpt(name))
            continue
        for copy, members in (('m', upstream), ('y', downstream)):
            if name in members:
                twin = variable._replace(name=copy_name(name, copy),
                                         parents=tuple(rename(parent, copy) \
                                                       for parent in variable.parents))
                variables.append(twin)
                cpts.append(Cpt(twin.name, model.cpt(name).rows))
    return CausalBayesianNetwork(tuple(variables), tuple(cpts))

@export
def cross_world_outcome(model, spec, t_outcome, t_mediator, engine=None):
    """ E[Y(t_outcome, M(t_mediator))] """
    twin = twin_network(model, spec.treatment, spec.mediator, t_outcome, t_mediator)
    target = copy_name(spec.outcome, 'y')
    distribution = Engine.of(engine).query(twin, (target,))
    return distribution.expectation(target, model.variable(spec.outcome).codings)

@export
def intermediate_confounders(model, treatment, mediator, outcome):
    """ Descendants of the treatment, other than the mediator, that reach
        both the mediator and -- avoiding the mediator -- the outcome
    """
    pruned = model.graph.copy()
    pruned.remove_node(mediator)
    reaching = networkx.ancestors(pruned, outcome)
    return model.ordered(name for name in model.descendants(treatment) \
                              if name != mediator \
                             and name in model.ancestors(mediator) \
                             and name in reaching)

def on_path(model, spec):
    return spec.mediator in model.descendants(spec.treatment) and \
           spec.outcome in model.descendants(spec.mediator)

def warn(warnings, category, message):
    logger.warning(message)
    warnings.append(category(message))

@export
def total_causal_effect(model, spec, engine=None):
    """ TCE = E[Y | do(T=t1)] − E[Y | do(T=t0)] """
    model.require_valid()
    spec = spec.resolved(model)
    if not model.has_path(spec.treatment, spec.outcome):
        return 0.0
    return expected_outcome(model, spec.outcome, { spec.treatment : spec.t1 }, engine) \
         - expected_outcome(model, spec.outcome, { spec.treatment : spec.t0 }, engine)

def natural_effects(model, spec, engine=None):
    """ (nde, nie, nie_reversed, tce, residual, warnings) for a resolved spec """
    if spec.mediator is None:
        raise MissingMediator(f"natural effects of {spec.describe()} need a mediator")
    warnings = []
    if not model.has_path(spec.treatment, spec.outcome):
        warn(warnings, NoCausalPath, f"{spec.treatment} is not an ancestor of "
                                     f"{spec.outcome}: every effect is zero")
        return 0.0, 0.0, 0.0, 0.0, 0.0, warnings
    tce = total_causal_effect(model, spec, engine)
    if not on_path(model, spec):
        warn(warnings, MediatorNotOnPath, f"mediator {spec.mediator} is not on a directed "
                                          f"path {spec.treatment} → … → {spec.outcome}")
        return tce, 0.0, 0.0, tce, 0.0, warnings
    confounders = intermediate_confounders(model, spec.treatment, spec.mediator, spec.outcome)
    if confounders:
        warn(warnings, NotIdentified, "natural effects not identified: "
                                      + ", ".join(confounders) + f" (affected by "
                                      f"{spec.treatment}) confounds {spec.mediator} "
                                      f"and {spec.outcome}")
    t0, t1 = spec.t0, spec.t1
    crossed = cross_world_outcome(model, spec, t1, t0, engine)
    if confounders:
        # twin copies of an intermediate confounder are independent; E[Y(t, M(t))] = E[Y | do(t)]:
        baseline = expected_outcome(model, spec.outcome, { spec.treatment : t0 }, engine)
        active = expected_outcome(model, spec.outcome, { spec.treatment : t1 }, engine)
    else:
        baseline = cross_world_outcome(model, spec, t0, t0, engine)
        active = cross_world_outcome(model, spec, t1, t1, engine)
    nde = crossed - baseline
    nie = cross_world_outcome(model, spec, t0, t1, engine) - baseline
    nie_reversed = crossed - active
    residual = tce - (nde - nie_reversed)
    logger.debug("%s: nde=%r nie=%r nie_reversed=%r", spec.describe(), nde, nie, nie_reversed)
    return nde, nie, nie_reversed, tce, residual, warnings

@export
def natural_direct_effect(model, spec, engine=None):
    """ NDE = E[Y(t1, M(t0))] − E[Y | do(T=t0)] """
    model.require_valid()
    return natural_effects(model, spec.resolved(model), engine)[0]

@export
def natural_indirect_effect(model, spec, engine=None):
    """ NIE = E[Y(t0, M(t1))] − E[Y | do(T=t0)] """
    model.require_valid()
    return natural_effects(model, spec.resolved(model), engine)[1]

@export
def decompose(model, spec, engine=None):
    """ Compute every effect `spec` calls for, as an EffectReport.
        With a mediator, TCE = NDE − NIE(reversed) is checked; a miss
        beyond tolerance raises DecompositionViolation.
    """
    model.require_valid()
    spec = spec.resolved(model)
    outcome = model.variable(spec.outcome)
    encoding = tuple(zip(outcome.states, outcome.codings))
    if spec.mediator is None:
        warnings = []
        if not model.has_path(spec.treatment, spec.outcome):
            warn(warnings, NoCausalPath, f"{spec.treatment} is not an ancestor of "
                                         f"{spec.outcome}: every effect is zero")
        return EffectReport(spec, total_causal_effect(model, spec, engine),
                            outcome_encoding=encoding,
                            warnings=tuple(warnings))
    nde, nie, nie_reversed, tce, residual, warnings = natural_effects(model, spec, engine)
    if not abs(residual) < TOLERANCE:
        raise DecompositionViolation(f"{spec.describe()}: TCE {tce!r} ≠ NDE {nde!r} "
                                     f"− NIE(reversed) {nie_reversed!r}")
    return EffectReport(spec, tce, nde, nie, nie_reversed,
                        outcome_encoding=encoding,
                        residual=residual,
                        warnings=tuple(warnings))

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
