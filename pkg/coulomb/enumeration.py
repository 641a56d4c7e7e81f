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
Properness of exponent functions and enumeration of dominant coweights
(or tuples of partitions) with bounded exponent.

Properness is decided exactly. The exponent f is positively homogeneous, so
f > 0 off the origin iff its minimum c over the unit l-infinity sphere of the
summation cone is positive; then every point with f <= B lies in the ball of
radius B / c, which is enumerated shell by shell.
"""

import itertools
import logging
import math
from fractions import Fraction
from functools import reduce

from coulomb.config import default as default_config
from coulomb.error import NotProper
from coulomb.error import Overflow
from coulomb.error import UnverifiedSolution
from coulomb.gauge import Coweight
from coulomb.gauge import exponent_function
from coulomb.simplex import minimize
from coulomb.utils import ordered_map

log = logging.getLogger(__name__)

DOMINANT = 'dominant'
PARTITIONS = 'partitions'

PROPER = 'Proper'
DIVERGENT = 'Divergent'
INCONCLUSIVE = 'Inconclusive'

PROXY = 'strict-properness'


def primitive_ray(vector):
    """Integer vector in lowest terms on the ray of @vector"""
    vector = [Fraction(x) for x in vector]
    scale = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in vector), 1)
    ints = [int(x * scale) for x in vector]
    divisor = reduce(math.gcd, (abs(x) for x in ints), 0) or 1
    return tuple(x // divisor for x in ints)


class GoodnessReport(object):
    """
    Verdict of properness_check. @slope is the minimum of the exponent over the
    unit l-infinity sphere of the cone, @witness a primitive ray where the
    exponent is nonpositive.
    """

    def __init__(self, verdict, witness=None, cones_checked=0, slope=None, domain=DOMINANT):
        self.verdict = verdict
        self.witness = witness
        self.cones_checked = cones_checked
        self.slope = slope
        self.domain = domain
        self.proxy = PROXY

    @property
    def proper(self):
        return self.verdict == PROPER

    def dump_to_dict(self):
        return {'verdict': self.verdict,
                'witness': list(self.witness) if self.witness is not None else None,
                'cones_checked': self.cones_checked,
                'slope': str(self.slope) if self.slope is not None else None,
                'domain': self.domain,
                'proxy': self.proxy}

    def __repr__(self):
        return '<GoodnessReport: {0}>'.format(self.dump_to_dict())


class _ConeProblem(object):
    """
    Linear programs over theta = y - 1 with 0 <= y <= 2 intersected with the
    summation cone. Extra variables u (epigraph of max-terms) follow y.
    """

    def __init__(self, shape, domain, nextra=0):
        self.shape = shape
        self.n = sum(shape)
        self.nextra = nextra
        self.rows = []
        self.rhs = []
        position = 0
        for length in shape:
            for a in range(length - 1):
                # theta_a >= theta_{a+1}
                self.add_theta_row({position + a: -1, position + a + 1: 1}, 0)
            if domain == PARTITIONS and length:
                # theta_last >= 0
                self.add_theta_row({position + length - 1: -1}, 0)
            position += length
        for i in range(self.n):
            row = [0] * (self.n + nextra)
            row[i] = 1
            self.rows.append(row)
            self.rhs.append(2)
        self.solved = 0

    def add_theta_row(self, coeffs, bound, extra=None):
        """Adds sum coeffs_i theta_i + extra . u <= bound"""
        row = [0] * (self.n + self.nextra)
        shift = 0
        for i, c in coeffs.items():
            row[i] += c
            shift += c
        for i, c in (extra or {}).items():
            row[self.n + i] += c
        self.rows.append(row)
        self.rhs.append(bound + shift)

    def copy(self):
        other = _ConeProblem.__new__(_ConeProblem)
        other.shape, other.n, other.nextra = self.shape, self.n, self.nextra
        other.rows, other.rhs = list(self.rows), list(self.rhs)
        other.solved = 0
        return other

    def sphere_minimum(self, theta_objective, extra_objective=()):
        """
        Minimum of theta_objective . theta + extra_objective . u over the cone
        intersected with the unit sphere: one program per face theta_j = +-1,
        with y_j substituted. Returns (value, theta) or None when the
        intersection is empty.
        """
        objective = [Fraction(c) for c in list(theta_objective) + list(extra_objective)]
        constant = -sum(Fraction(c) for c in theta_objective)
        best = None
        for j in range(self.n):
            for sign in (1, -1):
                fixed = 1 + sign
                A = [row[:j] + row[j + 1:] for row in self.rows]
                b = [bound - row[j] * fixed for row, bound in zip(self.rows, self.rhs)]
                c = objective[:j] + objective[j + 1:]
                self.solved += 1
                solution = minimize(c, A, b)
                if solution is None:
                    continue
                value, x = solution
                value += objective[j] * fixed + constant
                if best is None or value < best[0]:
                    y = x[:j] + [Fraction(fixed)] + x[j:]
                    best = (value, tuple(y[i] - 1 for i in range(self.n)))
        return best


def _convex_check(fn, shape, domain):
    terms = fn.terms
    problem = _ConeProblem(shape, domain, nextra=len(terms))
    for k, (form, _) in enumerate(terms):
        # u_k >= L_k . theta; u_k >= 0 is implicit
        problem.add_theta_row({i: c for i, c in enumerate(form) if c}, 0, extra={k: -1})
    best = problem.sphere_minimum(fn.linear, [c for _, c in terms])
    return best, problem.solved


def _pattern_check(fn, shape, domain, cap):
    """
    Minimum over every linearity cone given by a sign pattern of the
    max-terms. Returns (best, cones, solved) or None when @cap is exceeded.
    """
    terms = fn.terms
    zero = [0] * fn.nvars
    state = {'visited': 0, 'cones': 0, 'solved': 0, 'best': None}

    def visit(problem, depth, linear):
        state['visited'] += 1
        if state['visited'] > cap:
            return False
        if depth == len(terms):
            state['cones'] += 1
            best = problem.sphere_minimum(linear)
            state['solved'] += problem.solved
            if best is not None and (state['best'] is None or best[0] < state['best'][0]):
                state['best'] = best
            return True
        form, coeff = terms[depth]
        for sign in (1, -1):
            child = problem.copy()
            # sign * L . theta >= 0
            child.add_theta_row({i: -sign * c for i, c in enumerate(form) if c}, 0)
            feasible = child.sphere_minimum(zero)
            state['solved'] += child.solved
            child.solved = 0
            if feasible is None:
                continue
            if sign > 0:
                child_linear = [l + coeff * c for l, c in zip(linear, form)]
            else:
                child_linear = list(linear)
            if not visit(child, depth + 1, child_linear):
                return False
        return True

    if not visit(_ConeProblem(shape, domain), 0, list(fn.linear)):
        return None
    return state['best'], state['cones'], state['solved']


def check_function(fn, shape, domain=DOMINANT, config=None):
    """Properness verdict of an ExponentFunction over the summation cone"""
    config = config or default_config
    if not fn.nvars:
        return GoodnessReport(PROPER, cones_checked=0, slope=None, domain=domain)

    try:
        if fn.is_convex():
            best, cones = _convex_check(fn, shape, domain)
        else:
            result = _pattern_check(fn, shape, domain, config.cone_cap)
            if result is None:
                log.info("Cone cap {0} exceeded, properness is inconclusive".format(config.cone_cap))
                return GoodnessReport(INCONCLUSIVE, cones_checked=config.cone_cap, domain=domain)
            best, cones, _ = result
    except UnverifiedSolution as e:
        log.warning("Properness is inconclusive: {0}".format(e.message))
        return GoodnessReport(INCONCLUSIVE, domain=domain)

    if best is None:
        # the cone meets the sphere nowhere: it is the origin only
        return GoodnessReport(PROPER, cones_checked=cones, slope=None, domain=domain)
    value, theta = best
    if value > 0:
        report = GoodnessReport(PROPER, cones_checked=cones, slope=value, domain=domain)
    else:
        report = GoodnessReport(DIVERGENT, witness=primitive_ray(theta), cones_checked=cones,
                                slope=value, domain=domain)
    log.info("Properness over {0}: {1}".format(domain, report))
    return report


def properness_check(T, grading, domain=DOMINANT, config=None):
    """
    Decides whether the exponent of @grading is positive off the origin on the
    dominant cone (or on partition tuples)
    """
    return check_function(exponent_function(T, grading), T.dimV, domain, config)


def _sequences(length, low, high):
    """Nonincreasing sequences of @length with entries in [low, high]"""
    return list(itertools.combinations_with_replacement(range(high, low - 1, -1), length))


def shell(shape, r, domain=DOMINANT):
    """Flattened cone points with l-infinity norm exactly @r"""
    low = 0 if domain == PARTITIONS else -r
    inner_low = 0 if domain == PARTITIONS else -(r - 1)
    everything = [_sequences(length, low, r) for length in shape]
    interior = [_sequences(length, inner_low, r - 1) for length in shape]
    touching = [[s for s in seqs if s and (s[0] == r or s[-1] == -r)] for seqs in everything]
    if not shape or not sum(shape):
        if r == 0:
            yield ()
        return
    for k in range(len(shape)):
        for blocks in itertools.product(*(interior[:k] + [touching[k]] + everything[k + 1:])):
            yield tuple(x for block in blocks for x in block)


def _shell_worker(args):
    fn, shape, domain, r, bound = args
    result = []
    for point in shell(shape, r, domain):
        if bound is None:
            result.append((point, fn.doubled(point) if fn is not None else None))
            continue
        value = fn.evaluate(point)
        if value <= bound:
            result.append((point, fn.doubled(point)))
    return result


def enumeration_radius(fn, shape, bound, domain=DOMINANT, radius=None, config=None):
    """
    l-infinity radius containing every cone point with exponent <= @bound.
    Returns (radius, report); report is None for an explicit radius.
    """
    config = config or default_config
    if radius is not None:
        return int(radius), None
    report = check_function(fn, shape, domain, config)
    if not report.proper:
        raise NotProper("Exponent is not proper over {0}: {1}, witness: {2}"
                        .format(domain, report.verdict, report.witness))
    if report.slope is None:
        return 0, report
    result = int(math.floor(Fraction(bound) / report.slope))
    if result > config.radius_cap:
        raise Overflow("Enumeration radius {0} exceeds cap {1}".format(result, config.radius_cap))
    return result, report


def enumerate_points(fn, shape, bound, domain=DOMINANT, radius=None, config=None, processes=1, stats=None):
    """
    Points (flattened) with exponent <= bound, paired with their doubled
    exponents, sorted lexicographically. @bound None keeps the whole ball.
    Returns (points, radius, report).
    """
    config = config or default_config
    if bound is None and radius is None:
        raise NotProper("Listing a ball needs an explicit radius")
    r, report = enumeration_radius(fn, shape, bound, domain, radius, config)
    bound = Fraction(bound) if bound is not None else None
    jobs = [(fn, tuple(shape), domain, k, bound) for k in range(r + 1)]
    shells = ordered_map(_shell_worker, jobs, processes, config.chunk_size)
    points = sorted(p for s in shells for p in s)
    log.debug("Enumerated {0} points within radius {1}".format(len(points), r))
    if stats is not None:
        stats.counter.points_enumerated += len(points)
        stats.counter.shells += r + 1
        if report is not None:
            stats.counter.lp_solved += report.cones_checked
    return points, r, report


def enumerate_dominant(T, grading, bound, radius=None, config=None, processes=1):
    """
    Dominant coweights with exponent <= @bound (t-units), sorted
    lexicographically. With @grading None every dominant point of the ball
    of @radius is listed.
    """
    fn = exponent_function(T, grading) if grading is not None else None
    if fn is None:
        bound = None
    points, _, _ = enumerate_points(fn, T.dimV, bound, DOMINANT, radius, config, processes)
    return [Coweight.from_flat(T.dimV, p) for p, _ in points]


def enumerate_partition_tuples(T, grading, bound, radius=None, config=None, processes=1):
    """As enumerate_dominant over tuples of partitions"""
    fn = exponent_function(T, grading) if grading is not None else None
    if fn is None:
        bound = None
    points, _, _ = enumerate_points(fn, T.dimV, bound, PARTITIONS, radius, config, processes)
    return [Coweight.from_flat(T.dimV, p) for p, _ in points]
