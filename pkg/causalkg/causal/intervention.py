#!/usr/bin/env python
# encoding: utf-8
"""
causal/intervention.py

The do-operator, by graph surgery: each intervened variable loses its
parents and has its CPT replaced by a point mass on the forced state.
Interventional distributions are then ordinary queries against the
surgically modified model -- the truncated factorization.
"""
from __future__ import print_function

import logging

from dataclasses import dataclass
from typing import Mapping

from causalkg.errors import OverlappingQuery
from causalkg.network.inference import Engine
from causalkg.network.model import CausalBayesianNetwork, Cpt
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
@dataclass(frozen=True)
class InterventionalModel(object):

    """ A model `base` under the intervention do(`interventions`);
        `model` is the post-surgery network.
    """
    base: CausalBayesianNetwork
    interventions: Mapping[str, str]
    model: CausalBayesianNetwork

    @property
    def intervened(self):
        return self.base.ordered(self.interventions)

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.interventions.items())), self.model))

@export
def do_transform(model, do_set):
    """ Perform graph surgery for do(`do_set`), leaving `model` untouched """
    model.require_valid()
    do_set = dict(do_set or {})
    model.check_assignment(do_set)
    surgical = model
    for name in model.ordered(do_set):
        variable = surgical.variable(name).detached()
        surgical = surgical.replaced(variable, Cpt.degenerate(variable, do_set[name]))
    if do_set:
        logger.debug("surgery: do(%s)", ", ".join(f"{k}={v}" for k, v in do_set.items()))
    return InterventionalModel(model, do_set, surgical)

@export
def check_disjoint(targets, do_set, evidence):
    """ Raise OverlappingQuery unless targets, interventions and evidence
        are pairwise disjoint
    """
    groups = (('targeted', set(targets)),
              ('intervened on', set(do_set or ())),
              ('observed', set(evidence or ())))
    for (first, a), (second, b) in ((groups[0], groups[1]),
                                    (groups[0], groups[2]),
                                    (groups[1], groups[2])):
        overlap = a & b
        if overlap:
            raise OverlappingQuery(f"variables both {first} and {second}: "
                                   + ", ".join(sorted(overlap)))

@export
def interventional_query(model, targets, do_set=None, evidence=None, engine=None):
    """ P(targets | do(do_set), evidence), by querying the surgically
        modified model with the chosen engine
    """
    check_disjoint(targets, do_set, evidence)
    surgical = do_transform(model, do_set).model
    return Engine.of(engine).query(surgical, targets, evidence)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
