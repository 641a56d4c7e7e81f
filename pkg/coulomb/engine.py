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
Monopole formula evaluations: the homological series of a framed theory,
the loop-graded Hilbert series of (affine) Grassmannian slices, the zastava
character, and the slice <-> theory dictionary.
"""

import itertools
import logging
from collections import namedtuple
from fractions import Fraction

from coulomb.config import default as default_config
from coulomb.enumeration import DOMINANT
from coulomb.enumeration import enumerate_points
from coulomb.enumeration import PARTITIONS
from coulomb.error import LevelMismatch
from coulomb.error import MissingEnergyBound
from coulomb.error import NegativeAlpha
from coulomb.error import NonComparable
from coulomb.error import NotAffineDominant
from coulomb.error import NotDominant
from coulomb.error import SchemaError
from coulomb.gauge import casimir_coefficients
from coulomb.gauge import Coweight
from coulomb.gauge import exponent_function
from coulomb.gauge import FramedTheory
from coulomb.gauge import Grading
from coulomb.quiver import cartan_matrix
from coulomb.quiver import fold
from coulomb.quiver import orbits
from coulomb.quiver import Quiver
from coulomb.series import TruncatedSeries
from coulomb.series import UNITS_HALF
from coulomb.utils import ordered_map
from coulomb.weight import affine_dominant
from coulomb.weight import AffineRootDatum
from coulomb.weight import AffineWeight
from coulomb.weight import dominance_leq
from coulomb.weight import FUNDAMENTAL
from coulomb.weight import instanton_number
from coulomb.weight import is_integral
from coulomb.weight import WeightVector

log = logging.getLogger(__name__)

FINITE = 'finite'
AFFINE = 'affine'
ALLOWED_KINDS = (FINITE, AFFINE)

ENERGY_CONVENTION = 'delta_energy=+1'

LeafInterval = namedtuple('LeafInterval', ['weights', 'truncated'])


class SliceLabel(object):
    """
    Label of a slice W^lam_mu: finite (WeightVector pair) or affine
    (AffineWeight pair). @splitting lists dominant summands of lam, @sigma an
    automorphism of @quiver when lam and mu live on its folding.
    """

    def __init__(self, kind, quiver, lam, mu, splitting=None, sigma=None):
        if kind not in ALLOWED_KINDS:
            raise SchemaError("Unknown slice kind: '{0}', allowed: {1}".format(kind, ALLOWED_KINDS))
        expected = WeightVector if kind == FINITE else AffineWeight
        if not isinstance(lam, expected) or not isinstance(mu, expected):
            raise SchemaError("A {0} slice needs {1} weights".format(kind, expected.__name__))
        self.kind = kind
        self.quiver = quiver
        self.lam = lam
        self.mu = mu
        self.splitting = tuple(splitting) if splitting else None
        self.sigma = sigma

    def dump_to_dict(self):
        result = {'kind': self.kind,
                  'quiver': self.quiver.dump_to_dict(),
                  'lambda': self.lam.dump_to_dict(),
                  'mu': self.mu.dump_to_dict()}
        if self.splitting:
            result['splitting'] = [w.dump_to_dict() for w in self.splitting]
        if self.sigma is not None:
            result['sigma'] = self.sigma if isinstance(self.sigma, list) else \
                [self.sigma.get(v, v) for v in self.quiver.vertices]
        return result

    @classmethod
    def from_dict(cls, data):
        try:
            kind = data.get('kind', FINITE)
            weight = WeightVector if kind == FINITE else AffineWeight
            return cls(kind, Quiver.from_dict(data['quiver']),
                       weight.from_dict(data['lambda']), weight.from_dict(data['mu']),
                       splitting=[weight.from_dict(w) for w in data.get('splitting', [])] or None,
                       sigma=data.get('sigma'))
        except (KeyError, TypeError, AttributeError) as e:
            raise SchemaError("Can't parse slice: {0}".format(repr(e)))

    def __eq__(self, other):
        return isinstance(other, SliceLabel) and self.dump_to_dict() == other.dump_to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<SliceLabel: {0}, lambda: {1}, mu: {2}>'.format(self.kind, self.lam, self.mu)


class Evaluation(object):
    """Series together with everything the result envelope reports"""

    def __init__(self, series, grading, domain, radius, report, points, metadata):
        self.series = series
        self.grading = grading
        self.domain = domain
        self.radius = radius
        self.report = report
        self.points = points
        self.metadata = metadata

    def dump_to_dict(self):
        return {'grading': self.grading.dump_to_dict(),
                'domain': self.domain,
                'radius': self.radius,
                'points': self.points,
                'properness': self.report.dump_to_dict() if self.report is not None else None,
                'metadata': self.metadata}


def _lift(coords, quiver, sigma):
    """Fundamental coordinates on orbits of @sigma lifted to the vertices of @quiver"""
    _, orbit_list = orbits(quiver, sigma)
    if len(coords) != len(orbit_list):
        raise SchemaError("Weight has {0} coordinates, folding has {1} orbits".format(len(coords), len(orbit_list)))
    lifted = [0] * quiver.rank
    for value, orbit in zip(coords, orbit_list):
        for i in orbit:
            lifted[i] = value
    return lifted


def _finite_weights(s):
    cartan = cartan_matrix(s.quiver)
    if s.sigma is None:
        return cartan, s.lam, s.mu, s.splitting
    folded = fold(s.quiver, s.sigma)
    lift = lambda w: WeightVector(_lift(w.fundamental(folded), s.quiver, s.sigma), FUNDAMENTAL)
    return cartan, lift(s.lam), lift(s.mu), [lift(w) for w in s.splitting] if s.splitting else None


def normalize_energy(s):
    """Shifts an affine label so that lambda has energy 0; returns (label, shift)"""
    shift = s.lam.energy
    if not shift:
        return s, 0
    return SliceLabel(s.kind, s.quiver, s.lam.shift_energy(-shift), s.mu.shift_energy(-shift),
                      s.splitting and [w.shift_energy(-shift) for w in s.splitting], s.sigma), shift


def slice_to_theory(s):
    """
    dimW = lambda in fundamental coordinates, dimV = lambda - mu in simple
    coroots (affine: over all vertices of the affine quiver)
    """
    if s.kind == FINITE:
        cartan, lam, mu, splitting = _finite_weights(s)
        if not lam.is_dominant(cartan) or not is_integral(lam.fundamental(cartan)):
            raise NotDominant("lambda should be dominant: {0}".format(s.lam))
        comparable, alpha = dominance_leq(lam, mu, cartan)
        if not comparable:
            raise NonComparable("mu {0} is not below lambda {1}".format(s.mu, s.lam))
        dimW = lam.fundamental(cartan)
        if splitting:
            splitting = [w.fundamental(cartan) for w in splitting]
        return FramedTheory(s.quiver, alpha, dimW, splitting)

    s, _ = normalize_energy(s)
    datum = AffineRootDatum(cartan_matrix(s.quiver))
    if not affine_dominant(s.lam, datum.finite):
        raise NotAffineDominant("lambda is not dominant: {0}".format(s.lam))
    try:
        alpha = datum.difference_coefficients(s.lam, s.mu)
    except LevelMismatch as e:
        raise NonComparable(str(e))
    if not is_integral(alpha) or any(a < 0 for a in alpha):
        raise NonComparable("mu {0} is not below lambda {1}: {2}".format(s.mu, s.lam, list(alpha)))
    splitting = [datum.affine_coordinates(w) for w in s.splitting] if s.splitting else None
    return FramedTheory(s.quiver, alpha, datum.affine_coordinates(s.lam), splitting)


def theory_to_slice(T, kind=FINITE):
    """Inverse of slice_to_theory"""
    if kind == FINITE:
        cartan = T.cartan()
        lam = WeightVector(T.dimW, FUNDAMENTAL)
        mu = lam - WeightVector(cartan.apply(T.dimV), FUNDAMENTAL)
        splitting = [WeightVector(w, FUNDAMENTAL) for w in T.splitting] if T.splitting else None
        return SliceLabel(FINITE, T.quiver, lam, mu, splitting)
    datum = AffineRootDatum(T.cartan())
    lam = datum.from_affine_coordinates(T.dimW)
    splitting = [datum.from_affine_coordinates(w) for w in T.splitting] if T.splitting else None
    return SliceLabel(AFFINE, T.quiver, lam, datum.subtract(lam, T.dimV), splitting)


def uhlenbeck_slice(quiver, d, k=1):
    """lambda = (k, 0, 0), mu = lambda - d delta on an affine quiver"""
    datum = AffineRootDatum(cartan_matrix(quiver))
    lam = AffineWeight(k, WeightVector.zero(datum.finite.rank), 0)
    return SliceLabel(AFFINE, quiver, lam, datum.subtract(lam, [d * x for x in datum.delta]))


def slice_dimension(s):
    """Dimension of the slice: twice the rank of the gauge group"""
    return 2 * slice_to_theory(s).rank


def slice_grading(s, T, config=None):
    """
    Loop grading of the slice theory @T with alpha = dimV. Affine slices get
    the central term level/2 * theta_bar at the affine vertex unless
    config.level_term is off.
    """
    config = config or default_config
    shift = None
    if s.kind == AFFINE and config.level_term:
        datum = AffineRootDatum(T.cartan())
        shift = [0] * T.quiver.rank
        shift[datum.i0] = s.lam.level
    return Grading.loop(T.dimV, det_sign=config.det_sign, shift=shift)


def _metadata(config, **kwargs):
    result = {'units': UNITS_HALF,
              'det_sign': config.det_sign,
              'level_term': config.level_term,
              'energy_convention': ENERGY_CONVENTION}
    result.update(kwargs)
    return result


def _sum_chunk(args):
    """Partial sum over a chunk of (theta, doubled exponent); returns (terms, casimir cache hits)"""
    dimV, points, raw_order, refined = args
    casimir = {}
    hits = 0
    terms = {}
    for flat, e in points:
        theta = Coweight.from_flat(dimV, flat)
        blocks = theta.stabilizer_blocks()
        if blocks not in casimir:
            casimir[blocks] = casimir_coefficients(blocks, raw_order)
        else:
            hits += 1
        z = theta.bar() if refined else ()
        for k, c in enumerate(casimir[blocks]):
            if e + k > raw_order:
                break
            if c:
                key = (e + k, z)
                terms[key] = terms.get(key, 0) + c
    return terms, hits


def evaluate(T, grading, order, domain=DOMINANT, radius=None, refined=False,
             config=None, processes=1, stats=None, metadata=None):
    """
    sum over the cone of [z^theta_bar] t^exponent(theta) P(t; theta) up to
    t^order; exponents of the result are in half-units
    """
    config = config or default_config
    if order < 0:
        raise SchemaError("Order should be nonnegative: {0}".format(order))
    if stats is not None:
        stats.timer.evaluate('enumerate')
    fn = exponent_function(T, grading)
    points, r, report = enumerate_points(fn, T.dimV, order, domain, radius, config, processes, stats)
    if stats is not None:
        stats.timer.evaluate('sum')

    raw_order = 2 * order
    nvars = T.quiver.rank if refined else 0
    size = config.chunk_size
    jobs = [(T.dimV, points[i:i + size], raw_order, refined) for i in range(0, len(points), size)]
    terms = {}
    for partial, hits in ordered_map(_sum_chunk, jobs, processes):
        for key, c in partial.items():
            terms[key] = terms.get(key, 0) + c
        if stats is not None:
            stats.counter.casimir_cache_hits += hits
    series = TruncatedSeries(terms, order=raw_order, nvars=nvars)
    if stats is not None:
        stats.counter.points_summed += len(points)
        stats.timer.evaluate('done')
    log.info("Evaluated {0} over {1} points (radius {2}): {3} terms".format(grading, len(points), r, len(series)))
    return Evaluation(series, grading, domain, r, report, len(points), _metadata(config, **(metadata or {})))


def eq1_evaluation(T, order, radius=None, config=None, **kwargs):
    return evaluate(T, Grading.homological(), order, DOMINANT, radius, config=config, **kwargs)


def hilbert_eq1(T, order, radius=None, config=None, **kwargs):
    """Homologically graded monopole formula of a framed theory"""
    return eq1_evaluation(T, order, radius, config, **kwargs).series


def slice_evaluation(s, order, refined=False, config=None, **kwargs):
    config = config or default_config
    if s.kind != FINITE:
        raise SchemaError("Expected a finite slice, got {0}".format(s.kind))
    T = slice_to_theory(s)
    metadata = {}
    if s.sigma is not None:
        metadata['folding'] = [s.sigma.get(v, v) for v in s.quiver.vertices] \
            if isinstance(s.sigma, dict) else list(s.sigma)
    return evaluate(T, slice_grading(s, T, config), order, DOMINANT, refined=refined, config=config,
                    metadata=metadata, **kwargs)


def hilbert_slice_eq2(s, order, refined=False, config=None, **kwargs):
    """Loop-graded Hilbert series of the slice W^lam_mu"""
    return slice_evaluation(s, order, refined, config, **kwargs).series


def affine_slice_evaluation(s, order, refined=False, config=None, **kwargs):
    config = config or default_config
    if s.kind != AFFINE:
        raise SchemaError("Expected an affine slice, got {0}".format(s.kind))
    s, energy_shift = normalize_energy(s)
    T = slice_to_theory(s)
    datum = AffineRootDatum(T.cartan())
    metadata = {'energy_shift': energy_shift,
                'affine': datum.dump_to_dict(),
                'instanton_number': instanton_number(s.lam, s.mu, datum.form)}
    return evaluate(T, slice_grading(s, T, config), order, DOMINANT, refined=refined, config=config,
                    metadata=metadata, **kwargs)


def hilbert_affine_slice(s, order, refined=False, config=None, **kwargs):
    """Loop-graded Hilbert series of a slice in the double affine Grassmannian"""
    return affine_slice_evaluation(s, order, refined, config, **kwargs).series


def zastava_evaluation(q, alpha, order, config=None, **kwargs):
    config = config or default_config
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise NegativeAlpha("alpha should be nonnegative: {0}".format(list(alpha)))
    T = FramedTheory(q, alpha)
    grading = Grading.character(alpha, det_sign=config.det_sign)
    return evaluate(T, grading, order, PARTITIONS, refined=True, config=config, **kwargs)


def character_zastava_eq3(q, alpha, order, config=None, **kwargs):
    """t- and z-graded character of the zastava space of degree alpha"""
    return zastava_evaluation(q, alpha, order, config, **kwargs).series


def leaf_interval(s, energy_bound=None):
    """
    Dominant lam' with mu <= lam' <= lam, sorted. Affine labels need
    @energy_bound on the alpha_0 coefficient of lam - lam'.
    """
    if s.kind == AFFINE and energy_bound is None:
        raise MissingEnergyBound("Affine leaf interval needs an energy bound")
    T = slice_to_theory(s)
    alpha = T.dimV
    if s.kind == FINITE:
        cartan, lam, _, _ = _finite_weights(s)
        result = []
        for beta in itertools.product(*(range(a + 1) for a in alpha)):
            drop = cartan.apply(beta)
            candidate = WeightVector([x - d for x, d in zip(lam.fundamental(cartan), drop)], FUNDAMENTAL)
            if candidate.is_dominant():
                result.append(candidate)
        if s.sigma is not None:
            folded = fold(s.quiver, s.sigma)
            _, orbit_list = orbits(s.quiver, s.sigma)
            result = [WeightVector([w.coords[orbit[0]] for orbit in orbit_list], FUNDAMENTAL)
                      for w in result if all(len(set(w.coords[i] for i in orbit)) == 1 for orbit in orbit_list)]
            result = [w.in_basis(s.lam.basis, folded) for w in result]
        else:
            result = [w.in_basis(s.lam.basis, cartan) for w in result]
        return LeafInterval(sorted(set(result), key=lambda w: w.coords), False)

    s, _ = normalize_energy(s)
    datum = AffineRootDatum(T.cartan())
    result = []
    truncated = False
    for beta in itertools.product(*(range(a + 1) for a in alpha)):
        candidate = datum.subtract(s.lam, beta)
        if not datum.dominant(candidate):
            continue
        if beta[datum.i0] > energy_bound:
            truncated = True
            continue
        result.append(candidate)
    result.sort(key=lambda w: (-Fraction(w.energy), w.finite.fundamental(datum.finite)))
    return LeafInterval(result, truncated)
