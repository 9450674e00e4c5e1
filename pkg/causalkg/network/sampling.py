#!/usr/bin/env python
# encoding: utf-8
"""
network/sampling.py

Observational datasets: drawing them from a model by ancestral sampling,
and estimating a skeleton’s CPTs back out of them by smoothed counting.
"""
from __future__ import print_function

import logging
import numpy
import pandas

from causalkg.constants import DEFAULT_ALPHA, DEFAULT_SEED
from causalkg.errors import (ModelError, InvalidModel, MissingColumn,
                             UnknownState, UnestimableRow)
from causalkg.network.model import Cpt
from causalkg.exporting import Exporter

exporter = Exporter(path=__file__)
export = exporter.decorator()

logger = logging.getLogger(__name__)

@export
class Dataset(object):

    """ A table of complete assignments: one column per variable,
        one state label per cell. Backed by a pandas DataFrame of strings.
    """
    __slots__ = ('frame',)

    def __init__(self, frame):
        self.frame = frame.astype(str)

    @classmethod
    def from_rows(cls, columns, rows=()):
        columns = list(columns)
        return cls(pandas.DataFrame([[row[name] for name in columns] for row in rows],
                                    columns=columns, dtype=str))

    @property
    def columns(self):
        return tuple(self.frame.columns)

    def rows(self):
        """ Iterate the rows as dicts, name → state """
        for record in self.frame.itertuples(index=False, name=None):
            yield dict(zip(self.columns, record))

    def column(self, name):
        if name not in self.frame.columns:
            raise MissingColumn(name)
        return self.frame[name]

    def codes(self, variable):
        """ The column of `variable` as state indices """
        categorical = pandas.Categorical(self.column(variable.name),
                                         categories=variable.states)
        codes = numpy.asarray(categorical.codes, dtype=numpy.intp)
        if numpy.any(codes < 0):
            bad = self.frame[variable.name][codes < 0].iloc[0]
            raise UnknownState(variable.name, bad, variable.states)
        return codes

    def check(self, model):
        """ Raise MissingColumn or UnknownState unless every cell is a
            declared state of its column’s variable
        """
        for name in model.names:
            self.codes(model.variable(name))
        return self

    def __len__(self):
        return len(self.frame)

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.frame.equals(other.frame)

    def __repr__(self):
        return "%s(%d rows × %d columns)" % (type(self).__name__,
                                             len(self), len(self.columns))

@export
def sample(model, n, seed=DEFAULT_SEED):
    """ Draw `n` complete assignments by ancestral sampling, visiting the
        variables in topological order. Deterministic given `seed`.
    """
    model.require_valid()
    n = int(n)
    if n < 0:
        raise ModelError(f"cannot draw {n} samples")
    generator = numpy.random.default_rng(seed)
    codes = {}
    for name in model.topological_order:
        variable = model.variable(name)
        table = model.table(name)
        cards = table.shape[:-1]
        # mixed-radix parent configuration, first parent most significant:
        if variable.parents:
            rows = numpy.ravel_multi_index(tuple(codes[parent] for parent in variable.parents),
                                           cards)
        else:
            rows = numpy.zeros(n, dtype=numpy.intp)
        cumulative = numpy.cumsum(table.reshape(-1, variable.cardinality), axis=1)[rows]
        draws = generator.random(n)
        picked = (draws[:, numpy.newaxis] >= cumulative).sum(axis=1)
        codes[name] = numpy.minimum(picked, variable.cardinality - 1)
    logger.debug("drew %d samples over %d variables (seed %s)", n, len(model), seed)
    frame = pandas.DataFrame({ name : numpy.asarray(model.variable(name).states,
                                                    dtype=object)[codes[name]] \
                               for name in model.names },
                             columns=list(model.names))
    return Dataset(frame)

@export
def fit_cpts(skeleton, data, alpha=DEFAULT_ALPHA):
    """ Estimate every CPT of `skeleton` from `data`, with additive
        smoothing: each row is (count + α) / (row total + α·|states|).
    """
    from causalkg.network.validation import validate
    report = validate(skeleton, cpts=False)
    if not report.ok:
        raise InvalidModel(report)
    alpha = float(alpha)
    if not alpha >= 0.0:
        raise ModelError(f"smoothing alpha must be non-negative, not {alpha!r}")
    for name in skeleton.names:
        data.column(name)
    codes = { name : data.codes(skeleton.variable(name)) for name in skeleton.names }
    cpts = []
    for variable in skeleton.index.values():
        parents = [skeleton.variable(parent) for parent in variable.parents]
        shape = tuple(parent.cardinality for parent in parents) + (variable.cardinality,)
        flat = numpy.ravel_multi_index(tuple(codes[parent.name] for parent in parents) \
                                     + (codes[variable.name],), shape) \
                                    if len(data) else numpy.zeros(0, dtype=numpy.intp)
        counts = numpy.bincount(flat, minlength=int(numpy.prod(shape))).reshape(shape)
        totals = counts.sum(axis=-1, keepdims=True)
        if alpha == 0.0 and numpy.any(totals == 0):
            index = numpy.argwhere(totals[..., 0] == 0)[0]
            given = { parent.name : parent.states[idx] for parent, idx in zip(parents, index) }
            raise UnestimableRow(variable.name, given)
        table = (counts + alpha) / (totals + alpha * variable.cardinality)
        cpts.append(Cpt.from_table(variable, parents, table))
        logger.debug("fitted %s from %d rows", variable.name, len(data))
    return skeleton.with_cpts(cpts)

# Assign the modules’ `__all__` and `__dir__` using the exporter:
__all__, __dir__ = exporter.all_and_dir()
