# =============================================================================
# 2024+ Copyright (c) coulomb developers
# All rights reserved.
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
# =============================================================================

"""
Commands of the batch tool. Every command takes a job context and returns
a JobResult: optional series, a JSON friendly document for the envelope and
the exit status.
"""

import json
import logging

from coulomb.engine import AFFINE
from coulomb.engine import affine_slice_evaluation
from coulomb.engine import eq1_evaluation
from coulomb.engine import FINITE
from coulomb.engine import leaf_interval
from coulomb.engine import slice_dimension
from coulomb.engine import slice_evaluation
from coulomb.engine import slice_grading
from coulomb.engine import slice_to_theory
from coulomb.engine import SliceLabel
from coulomb.engine import uhlenbeck_slice
from coulomb.engine import zastava_evaluation
from coulomb.enumeration import DOMINANT
from coulomb.enumeration import PARTITIONS
from coulomb.enumeration import properness_check
from coulomb.error import FormatError
from coulomb.error import InsufficientOrder
from coulomb.error import MissingAlpha
from coulomb.error import SchemaError
from coulomb.gauge import ALLOWED_GRADINGS
from coulomb.gauge import CHARACTER
from coulomb.gauge import FramedTheory
from coulomb.gauge import Grading
from coulomb.gauge import HOMOLOGICAL
from coulomb.quiver import cartan_matrix
from coulomb.quiver import fold
from coulomb.quiver import orbits
from coulomb.quiver import Quiver
from coulomb.series import first_difference
from coulomb.series import UNITS_HALF
from coulomb.series import growth_dimension_estimate
from coulomb.series import TruncatedSeries
from coulomb.weight import affine_dominant
from coulomb.weight import AffineRootDatum
from coulomb.weight import orbit_representative
from coulomb_batch.parse import parse_affine_weight
from coulomb_batch.parse import parse_sigma
from coulomb_batch.parse import parse_vector
from coulomb_batch.parse import parse_weight

log = logging.getLogger(__name__)

CMD_HILBERT = 'hilbert'
CMD_SLICE = 'slice'
CMD_AFFINE_SLICE = 'affine-slice'
CMD_ZASTAVA = 'zastava'
CMD_PROPERNESS = 'properness'
CMD_ORBIT_REP = 'orbit-rep'
CMD_FOLD = 'fold'
CMD_LEAF_INTERVAL = 'leaf-interval'
CMD_DIFF = 'diff'
ALLOWED_COMMANDS = (CMD_HILBERT, CMD_SLICE, CMD_AFFINE_SLICE, CMD_ZASTAVA, CMD_PROPERNESS,
                    CMD_ORBIT_REP, CMD_FOLD, CMD_LEAF_INTERVAL, CMD_DIFF)
# commands producing a series file
SERIES_COMMANDS = (CMD_HILBERT, CMD_SLICE, CMD_AFFINE_SLICE, CMD_ZASTAVA)

RC_OK = 0
RC_DIFFERS = 3


class JobResult(object):
    def __init__(self, document, series=None, rc=RC_OK):
        self.document = document
        self.series = series
        self.rc = rc

    def __repr__(self):
        return '<JobResult: rc: {0}, series: {1}>'.format(self.rc, self.series is not None)


def load_document(path):
    """Reads JSON document; malformed JSON is a FormatError"""
    with open(path, 'rb') as f:
        data = f.read()
    try:
        return json.loads(data.decode('utf-8'))
    except ValueError as e:
        raise FormatError("Can't parse JSON '{0}': {1}".format(path, repr(e)))


def _option(ctx, name):
    return ctx.options.get(name)


def _quiver(ctx):
    if 'quiver' not in ctx.inputs:
        raise ValueError("Command '{0}' needs -q/--quiver".format(ctx.command))
    return Quiver.from_dict(load_document(ctx.inputs['quiver']))


def _theory(ctx):
    if 'theory' not in ctx.inputs:
        raise ValueError("Command '{0}' needs -T/--theory".format(ctx.command))
    return FramedTheory.from_dict(load_document(ctx.inputs['theory']))


def _sigma(ctx):
    value = _option(ctx, 'sigma')
    if value is None:
        return None
    try:
        return parse_sigma(value)
    except Exception as e:
        raise ValueError("Can't parse --sigma: '{0}': {1}".format(value, repr(e)))


def _weight_option(ctx, name, parse, cartan):
    value = _option(ctx, name)
    if value is None:
        raise ValueError("Command '{0}' needs --{1}".format(ctx.command, name))
    try:
        return parse(value, cartan)
    except Exception as e:
        raise ValueError("Can't parse --{0}: '{1}': {2}".format(name, value, repr(e)))


def _int_option(ctx, name, default=None):
    value = _option(ctx, name)
    if value is None:
        return default
    try:
        result = int(value)
    except Exception as e:
        raise ValueError("Can't parse --{0}: '{1}': {2}".format(name, value, repr(e)))
    if result < 0:
        raise ValueError("--{0} should be nonnegative: {1}".format(name, result))
    return result


def _slice(ctx, kind=None):
    """
    Slice label from -I/--input, or from -q/--quiver with --lambda and --mu
    (affine when the weights are written as 'k;expr;n' or --instantons is given)
    """
    if 'slice' in ctx.inputs:
        s = SliceLabel.from_dict(load_document(ctx.inputs['slice']))
        if kind is not None and s.kind != kind:
            raise SchemaError("Command '{0}' needs a {1} slice, got {2}".format(ctx.command, kind, s.kind))
        return s

    q = _quiver(ctx)
    lam = _option(ctx, 'lambda') or ''
    if kind is None:
        kind = AFFINE if ';' in lam or _option(ctx, 'instantons') is not None else FINITE

    if kind == FINITE:
        sigma = _sigma(ctx)
        cartan = fold(q, sigma) if sigma is not None else cartan_matrix(q)
        return SliceLabel(FINITE, q,
                          _weight_option(ctx, 'lambda', parse_weight, cartan),
                          _weight_option(ctx, 'mu', parse_weight, cartan),
                          sigma=sigma)

    datum = AffineRootDatum(cartan_matrix(q))
    instantons = _int_option(ctx, 'instantons')
    if instantons is not None:
        if not lam:
            return uhlenbeck_slice(q, instantons)
        weight = _weight_option(ctx, 'lambda', parse_affine_weight, datum.finite)
        return SliceLabel(AFFINE, q, weight, datum.subtract(weight, [instantons * d for d in datum.delta]))
    return SliceLabel(AFFINE, q,
                      _weight_option(ctx, 'lambda', parse_affine_weight, datum.finite),
                      _weight_option(ctx, 'mu', parse_affine_weight, datum.finite))


def _evaluation_result(ctx, evaluation, extra=None):
    document = evaluation.dump_to_dict()
    document['terms'] = len(evaluation.series)
    document.update(extra or {})
    return JobResult(document, evaluation.series)


def _dimension_check(series, s):
    """Growth estimate of @series next to the expected slice dimension"""
    try:
        estimate = growth_dimension_estimate(series)
    except InsufficientOrder as e:
        log.info("Skipping dimension estimate: {0}".format(e))
        estimate = None
    return {'dimension': slice_dimension(s), 'dimension_estimate': estimate}


def _eval_kwargs(ctx):
    return {'config': ctx.config, 'processes': ctx.processes, 'stats': ctx.stats}


def hilbert(ctx):
    T = _theory(ctx)
    evaluation = eq1_evaluation(T, ctx.order, ctx.radius, **_eval_kwargs(ctx))
    return _evaluation_result(ctx, evaluation, {'theory': T.dump_to_dict()})


def finite_slice(ctx):
    s = _slice(ctx, FINITE)
    refined = bool(_option(ctx, 'refined'))
    evaluation = slice_evaluation(s, ctx.order, refined, radius=ctx.radius, **_eval_kwargs(ctx))
    extra = {'slice': s.dump_to_dict()}
    if not refined:
        extra.update(_dimension_check(evaluation.series, s))
    return _evaluation_result(ctx, evaluation, extra)


def affine_slice(ctx):
    s = _slice(ctx, AFFINE)
    refined = bool(_option(ctx, 'refined'))
    evaluation = affine_slice_evaluation(s, ctx.order, refined, radius=ctx.radius, **_eval_kwargs(ctx))
    extra = {'slice': s.dump_to_dict()}
    if not refined:
        extra.update(_dimension_check(evaluation.series, s))
    return _evaluation_result(ctx, evaluation, extra)


def zastava(ctx):
    q = _quiver(ctx)
    value = _option(ctx, 'alpha')
    if value is None:
        raise MissingAlpha("Command '{0}' needs --alpha".format(ctx.command))
    try:
        alpha = parse_vector(value)
    except Exception as e:
        raise ValueError("Can't parse --alpha: '{0}': {1}".format(value, repr(e)))
    if len(alpha) != q.rank:
        raise ValueError("--alpha should have {0} entries: '{1}'".format(q.rank, value))
    evaluation = zastava_evaluation(q, alpha, ctx.order, radius=ctx.radius, **_eval_kwargs(ctx))
    return _evaluation_result(ctx, evaluation, {'quiver': q.dump_to_dict(), 'alpha': alpha})


def properness(ctx):
    """
    Verdict for -T/--theory under --grading, or for the loop grading of a
    slice given by -I/--input or -q/--quiver with --lambda/--mu
    """
    kind = _option(ctx, 'grading')
    if kind is not None and kind not in ALLOWED_GRADINGS:
        raise ValueError("Unknown grading: '{0}', allowed: {1}".format(kind, ALLOWED_GRADINGS))

    if 'theory' in ctx.inputs:
        T = _theory(ctx)
        kind = kind or HOMOLOGICAL
        if kind == HOMOLOGICAL:
            grading = Grading.homological()
        else:
            value = _option(ctx, 'alpha')
            try:
                alpha = parse_vector(value) if value is not None else list(T.dimV)
            except Exception as e:
                raise ValueError("Can't parse --alpha: '{0}': {1}".format(value, repr(e)))
            grading = Grading(kind, alpha, det_sign=ctx.config.det_sign)
        subject = {'theory': T.dump_to_dict()}
    else:
        s = _slice(ctx)
        T = slice_to_theory(s)
        grading = Grading.homological() if kind == HOMOLOGICAL else slice_grading(s, T, ctx.config)
        subject = {'slice': s.dump_to_dict()}

    domain = PARTITIONS if grading.kind == CHARACTER else DOMINANT
    report = properness_check(T, grading, domain, ctx.config)
    if ctx.stats is not None:
        ctx.stats.counter.lp_solved += report.cones_checked
        ctx.stats.attributes.verdict.append(report.verdict)
    document = {'grading': grading.dump_to_dict(), 'properness': report.dump_to_dict()}
    document.update(subject)
    return JobResult(document)


def _finite_cartan(q):
    """Finite part of an affine quiver, or the quiver itself when it is of finite type"""
    cartan = cartan_matrix(q)
    if cartan.is_finite_type():
        return cartan
    return AffineRootDatum(cartan).finite


def orbit_rep(ctx):
    q = _quiver(ctx)
    cartan = _finite_cartan(q)
    weight = _weight_option(ctx, 'lambda', parse_affine_weight, cartan)
    representative = orbit_representative(weight, weight.level, cartan)
    return JobResult({'quiver': q.dump_to_dict(),
                      'weight': weight.dump_to_dict(),
                      'dominant': affine_dominant(weight, cartan),
                      'representative': representative.dump_to_dict()})


def fold_quiver(ctx):
    q = _quiver(ctx)
    sigma = _sigma(ctx)
    if sigma is None:
        raise ValueError("Command '{0}' needs --sigma".format(ctx.command))
    cartan = fold(q, sigma)
    _, orbit_list = orbits(q, sigma)
    return JobResult({'quiver': q.dump_to_dict(),
                      'sigma': sigma,
                      'orbits': [[q.vertices[i] for i in orbit] for orbit in orbit_list],
                      'cartan': cartan.dump_to_dict()})


def leaf_interval_job(ctx):
    s = _slice(ctx)
    result = leaf_interval(s, _int_option(ctx, 'energy_bound'))
    return JobResult({'slice': s.dump_to_dict(),
                      'weights': [w.dump_to_dict() for w in result.weights],
                      'truncated': result.truncated})


def read_series(path):
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('ascii')
    except UnicodeDecodeError as e:
        raise FormatError("Series file '{0}' is not ASCII: {1}".format(path, repr(e)))
    return TruncatedSeries.parse(text)


def diff(ctx):
    """Compares two series files up to the smaller truncation order"""
    a = read_series(ctx.inputs['a'])
    b = read_series(ctx.inputs['b'])
    difference = first_difference(a, b)
    order = min(a.order, b.order)
    document = {'equal': difference is None, 'order': order, 'units': UNITS_HALF}
    if difference is not None:
        (t, z), ca, cb = difference
        document['first_difference'] = {'t': t, 'z': list(z), 'a': ca, 'b': cb}
        log.warning("Series differ at t^{0} z^{1}: {2} != {3}".format(t, list(z), ca, cb))
        return JobResult(document, rc=RC_DIFFERS)
    return JobResult(document)


COMMANDS = {CMD_HILBERT: hilbert,
            CMD_SLICE: finite_slice,
            CMD_AFFINE_SLICE: affine_slice,
            CMD_ZASTAVA: zastava,
            CMD_PROPERNESS: properness,
            CMD_ORBIT_REP: orbit_rep,
            CMD_FOLD: fold_quiver,
            CMD_LEAF_INTERVAL: leaf_interval_job,
            CMD_DIFF: diff}


def main(ctx):
    if ctx.command not in COMMANDS:
        raise ValueError("Unknown command: '{0}', allowed: {1}".format(ctx.command, ALLOWED_COMMANDS))
    log.info("Running command: {0}".format(ctx.command))
    return COMMANDS[ctx.command](ctx)
