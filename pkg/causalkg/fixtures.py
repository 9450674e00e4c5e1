#!/usr/bin/env python
# encoding: utf-8
"""
fixtures.py

Bundled examples: the highway-collision network, its roles file, and a
README of runnable queries. `causalkg example collision` writes all three.

The collision network has nine edges:

    CellphoneUse, Alcohol            → DriverDistraction
    Snow, Rain                       → SlipperyRoad
    DriverDistraction, SlipperyRoad  → SuddenLaneChange
    SuddenLaneChange, DriverDistraction, SlipperyRoad → Collision

… the direct edges DriverDistraction → Collision and SlipperyRoad →
Collision give the distraction an effect that does not pass through the
lane change.
"""
from __future__ import print_function

import logging
import os
import numpy

from causalkg.constants import ENCODING
from causalkg.errors import ModelError
from causalkg.network.model import Variable, Cpt, CausalBayesianNetwork
from causalkg.network.modelfile import network_to_document, dump_json
from causalkg.ontology.roles import roles_from_document, roles_to_document
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

BINARY = ('false', 'true')

def binary(name, *parents):
    return Variable(name, BINARY, (0, 1), tuple(parents))

def bernoulli(variable, *active):
    """ CPT from P(variable=true) per parent configuration, the parents’
        states varying in the order the configurations are listed:
        the first parent fastest -- FF, TF, FT, TT.
    """
    shape = (2,) * len(variable.parents)
    table = numpy.zeros(shape + (2,), dtype=float)
    for position, p in enumerate(active):
        index = tuple((position >> bit) & 1 for bit in range(len(shape)))
        table[index] = (1.0 - p, p)
    return table

@export
def collision_network():
    """ The highway-collision causal Bayesian network """
    cellphone   = binary('CellphoneUse')
    alcohol     = binary('Alcohol')
    snow        = binary('Snow')
    rain        = binary('Rain')
    distraction = binary('DriverDistraction', 'CellphoneUse', 'Alcohol')
    slippery    = binary('SlipperyRoad', 'Snow', 'Rain')
    lanechange  = binary('SuddenLaneChange', 'DriverDistraction', 'SlipperyRoad')
    collision   = binary('Collision', 'SuddenLaneChange', 'DriverDistraction', 'SlipperyRoad')
    variables = (cellphone, alcohol, snow, rain,
                 distraction, slippery, lanechange, collision)
    index = { variable.name : variable for variable in variables }

    # Collision configurations are listed FFF, TFF, FTF, FFT, TTF, TFT, FTT, TTT --
    # reordered here into the first-parent-fastest sequence:
    collides = { (0, 0, 0) : 0.01, (1, 0, 0) : 0.2,  (0, 1, 0) : 0.1,  (0, 0, 1) : 0.08,
                 (1, 1, 0) : 0.45, (1, 0, 1) : 0.35, (0, 1, 1) : 0.2,  (1, 1, 1) : 0.6 }
    collision_table = numpy.zeros((2, 2, 2, 2), dtype=float)
    for given, p in collides.items():
        collision_table[given] = (1.0 - p, p)

    tables = { 'CellphoneUse'       : bernoulli(cellphone, 0.3),
               'Alcohol'            : bernoulli(alcohol, 0.1),
               'Snow'               : bernoulli(snow, 0.2),
               'Rain'               : bernoulli(rain, 0.25),
               'DriverDistraction'  : bernoulli(distraction, 0.05, 0.6, 0.5, 0.85),
               'SlipperyRoad'       : bernoulli(slippery, 0.02, 0.7, 0.5, 0.9),
               'SuddenLaneChange'   : bernoulli(lanechange, 0.05, 0.4, 0.3, 0.6),
               'Collision'          : collision_table }
    cpts = tuple(Cpt.from_table(variable,
                                tuple(index[parent] for parent in variable.parents),
                                tables[variable.name]) for variable in variables)
    return CausalBayesianNetwork(variables, cpts)

COLLISION_ROLES = {
    'base_iri'  : "http://example.org/ad#",
    'prefix'    : "ad",
    'roles'     : { 'DriverDistraction' : { 'role'      : "Treatment",
                                            'pattern'   : { 'outcome' : "Collision" } },
                    'SuddenLaneChange'  : { 'role'      : "Mediator",
                                            'pattern'   : { 'treatment' : "DriverDistraction",
                                                            'outcome'   : "Collision" } },
                    'Collision'         : { 'role'      : "Outcome" } } }

@export
def collision_roles():
    return roles_from_document(COLLISION_ROLES)

# (bullet, query) -- one runnable query per use-case question:
COLLISION_QUERIES = (
    ("Basic cause: does the driver’s distraction lead to a collision?",
     "TCE(DriverDistraction -> Collision)"),
    ("Direct cause: is the collision due to the distraction itself, "
     "with the lane change under control?",
     "NDE(DriverDistraction -> Collision | via SuddenLaneChange)"),
    ("Indirect cause: is the collision due to the lane change "
     "the distraction brought about?",
     "NIE(DriverDistraction -> Collision | via SuddenLaneChange)"),
)

# … and questions on the other rungs:
COLLISION_EXTRAS = (
    "P(Collision=true)",
    "P(Collision=true | CellphoneUse=true)",
    "P(Collision=true | do(SlipperyRoad=true))",
    "P(Snow=true | do(Collision=true))",
    "PN(DriverDistraction=true -> Collision=true)",
)

README = """\
# The highway-collision example

`collision.json` is a causal Bayesian network of eight binary variables:
cellphone use, alcohol, snow and rain feed a driver’s distraction and a
slippery road, both of which can cause a sudden lane change, and all
three can cause a collision. `roles.json` marks DriverDistraction as the
treatment, SuddenLaneChange as the mediator and Collision as the outcome.

Build the causal knowledge graph:

    causalkg build collision.json --roles=roles.json -o collision.ttls

Ask the three use-case questions:

{bullets}

Other questions, on every rung of the explainability ladder:

{extras}

Add `--kg=collision.ttls --explain` to any query for an explanation.
"""

def command(query):
    return f'    causalkg query collision.json "{query}"'

@export
def collision_readme():
    bullets = "\n\n".join(f"{label}\n\n{command(query)}" \
                          for label, query in COLLISION_QUERIES)
    extras = "\n".join(command(query) for query in COLLISION_EXTRAS)
    return README.format(bullets=bullets, extras=extras)

def write_collision(directory):
    os.makedirs(directory, exist_ok=True)
    model_path = os.path.join(directory, 'collision.json')
    roles_path = os.path.join(directory, 'roles.json')
    readme_path = os.path.join(directory, 'README.md')
    dump_json(network_to_document(collision_network()), model_path)
    dump_json(roles_to_document(collision_roles()), roles_path)
    with open(readme_path, 'w', encoding=ENCODING, newline="\n") as handle:
        handle.write(collision_readme())
    return (model_path, roles_path, readme_path)

# name → writer(directory) → written paths:
EXAMPLES = { 'collision' : write_collision }

export(EXAMPLES,            name='EXAMPLES')
export(COLLISION_ROLES,     name='COLLISION_ROLES')
export(COLLISION_QUERIES,   name='COLLISION_QUERIES')
export(COLLISION_EXTRAS,    name='COLLISION_EXTRAS')

@export
def write_example(name, directory):
    """ Write the named example’s files into `directory` """
    if name not in EXAMPLES:
        raise ModelError(f"unknown example {name!r}; "
                         f"available: {', '.join(sorted(EXAMPLES))}")
    paths = EXAMPLES[name](directory)
    logger.debug("wrote example %s: %s", name, ", ".join(paths))
    return paths

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()

def test():
    model = collision_network()
    assert model.report.ok
    assert len(model.edges) == 9
    assert collision_roles().role('SuddenLaneChange').to_string() == 'Mediator'
    assert "TCE(DriverDistraction -> Collision)" in collision_readme()

if __name__ == '__main__':
    test()
