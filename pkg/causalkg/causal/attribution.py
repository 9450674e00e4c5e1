#!/usr/bin/env python
# encoding: utf-8
"""
causal/attribution.py

Attribution questions -- “was it x which led to y?” -- answered with
the Tian–Pearl bounds on the probabilities of necessity (PN), of
sufficiency (PS), and of necessity and sufficiency (PNS).

None of the three is identified by a causal Bayesian network alone, so
each is answered as an interval [lo, hi] computed exactly from the
observational and interventional distributions the network entails.
For a cause or outcome variable with more than two states, x′ (resp. y′)
stands for every state other than x (resp. y); the intervention do(x′)
sets the cause to each of those states in proportion to P(X | X ≠ x).
"""
from __future__ import print_function

import logging

from typing import NamedTuple

from causalkg.errors import InvalidEffectSpec, ZeroJointProbability
from causalkg.causal.intervention import interventional_query
from causalkg.network.inference import query
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

def clip(value):
    return min(1.0, max(0.0, value))

@export
class Interval(NamedTuple):

    """ A closed interval [lo, hi], with 0 ≤ lo ≤ hi ≤ 1 """
    lo: float
    hi: float

    @classmethod
    def clipped(cls, lo, hi):
        lo, hi = clip(lo), clip(hi)
        return cls(lo, max(lo, hi))

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, value, tolerance=0.0):
        return self.lo - tolerance <= value <= self.hi + tolerance

    def __str__(self):
        return f"[{self.lo:.4f}, {self.hi:.4f}]"

@export
class Components(NamedTuple):

    """ The probabilities all three bounds are built from, for a cause
        event x and an outcome event y (primes are complements)
    """
    p_xy: float         # P(x, y)
    p_xy_: float        # P(x, y′)
    p_x_y: float        # P(x′, y)
    p_x_y_: float       # P(x′, y′)
    p_y: float          # P(y)
    p_y_do_x: float     # P(y | do(x))
    p_y_do_x_: float    # P(y | do(x′))

    @property
    def p_y__do_x_(self):
        """ P(y′ | do(x′)) """
        return 1.0 - self.p_y_do_x_

@export
def components(model, cause, outcome, engine=None):
    """ Compute the Components of the (variable, state) events
        `cause` and `outcome`
    """
    (x_name, x), (y_name, y) = cause, outcome
    if x_name == y_name:
        raise InvalidEffectSpec(f"cause and outcome are both {x_name}")
    cause_variable = model.variable(x_name)
    cause_variable.index(x)
    model.variable(y_name).index(y)

    joint = query(model, (x_name, y_name), engine=engine)
    cells = { (a[x_name], a[y_name]) : p for a, p in joint.items() }
    p_xy = sum(p for (a, b), p in cells.items() if a == x and b == y)
    p_xy_ = sum(p for (a, b), p in cells.items() if a == x and b != y)
    p_x_y = sum(p for (a, b), p in cells.items() if a != x and b == y)
    p_x_y_ = sum(p for (a, b), p in cells.items() if a != x and b != y)

    def p_y_do(state):
        distribution = interventional_query(model, (y_name,), { x_name : state },
                                            engine=engine)
        return distribution.probability({ y_name : y })

    others = [state for state in cause_variable.states if state != x]
    p_x_ = p_x_y + p_x_y_
    marginal = joint.marginal((x_name,))
    if p_x_ > 0.0:
        weights = [marginal.probability({ x_name : state }) / p_x_ for state in others]
    else:
        weights = [1.0 / len(others)] * len(others)
    p_y_do_x_ = sum(w * p_y_do(state) for w, state in zip(weights, others))

    return Components(p_xy, p_xy_, p_x_y, p_x_y_,
                      p_xy + p_x_y, p_y_do(x), p_y_do_x_)

@export
def pn_bounds(model, cause, outcome, engine=None):
    """ Bounds on PN = P(y′ had x′ been the case | x, y) """
    c = components(model, cause, outcome, engine)
    if c.p_xy <= 0.0:
        raise ZeroJointProbability(f"P({describe(cause)}, {describe(outcome)}) is zero")
    lo = (c.p_y - c.p_y_do_x_) / c.p_xy
    hi = (c.p_y__do_x_ - c.p_x_y_) / c.p_xy
    logger.debug("PN(%s → %s) ∈ [%r, %r]", describe(cause), describe(outcome), lo, hi)
    return Interval.clipped(lo, hi)

@export
def ps_bounds(model, cause, outcome, engine=None):
    """ Bounds on PS = P(y had x been the case | x′, y′) """
    c = components(model, cause, outcome, engine)
    if c.p_x_y_ <= 0.0:
        raise ZeroJointProbability(f"P(not {describe(cause)}, "
                                   f"not {describe(outcome)}) is zero")
    lo = (c.p_y_do_x - c.p_y) / c.p_x_y_
    hi = (c.p_y_do_x - c.p_xy) / c.p_x_y_
    return Interval.clipped(lo, hi)

@export
def pns_bounds(model, cause, outcome, engine=None):
    """ Bounds on PNS = P(y had x been the case, y′ had x′ been the case) """
    c = components(model, cause, outcome, engine)
    lo = max(0.0, c.p_y_do_x - c.p_y_do_x_,
                  c.p_y - c.p_y_do_x_,
                  c.p_y_do_x - c.p_y)
    hi = min(c.p_y_do_x, c.p_y__do_x_,
             c.p_xy + c.p_x_y_,
             c.p_y_do_x - c.p_y_do_x_ + c.p_xy_ + c.p_x_y)
    return Interval.clipped(lo, hi)

def describe(event):
    return "%s=%s" % tuple(event)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
