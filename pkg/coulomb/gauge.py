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
Framed quiver gauge theories: the matter representation of prod GL(V_i),
the exponent functions of the monopole formula and the Casimir factors.

Exponents are evaluated exactly as Fractions in t-units and stored doubled.
"""

import logging
from fractions import Fraction

from coulomb.config import default as default_config
from coulomb.error import MissingAlpha
from coulomb.error import NonIntegerResult
from coulomb.error import NotDominant
from coulomb.error import SchemaError
from coulomb.error import ShapeMismatch
from coulomb.quiver import cartan_matrix
from coulomb.quiver import Quiver
from coulomb.series import inverse_product_coefficients
from coulomb.series import TruncatedSeries

log = logging.getLogger(__name__)

HOMOLOGICAL = 'homological'
LOOP = 'loop'
CHARACTER = 'character'
ALLOWED_GRADINGS = (HOMOLOGICAL, LOOP, CHARACTER)


def _vector(values, rank, name):
    values = tuple(int(v) for v in values)
    if len(values) != rank:
        raise ShapeMismatch("{0} has {1} entries, quiver has {2} vertices".format(name, len(values), rank))
    if any(v < 0 for v in values):
        raise ShapeMismatch("{0} should be nonnegative: {1}".format(name, list(values)))
    return values


class FramedTheory(object):
    """
    Quiver with gauge dimensions dimV, framing dimensions dimW and an
    optional splitting of the framing into summands.
    """
    __slots__ = ('quiver', 'dimV', 'dimW', 'splitting')

    def __init__(self, quiver, dimV, dimW=None, splitting=None):
        self.quiver = quiver
        self.dimV = _vector(dimV, quiver.rank, 'dimV')
        self.dimW = _vector(dimW if dimW is not None else (0,) * quiver.rank, quiver.rank, 'dimW')
        if splitting is not None:
            splitting = tuple(_vector(s, quiver.rank, 'splitting') for s in splitting)
            total = tuple(sum(s[i] for s in splitting) for i in range(quiver.rank))
            if total != self.dimW:
                raise ShapeMismatch("Splitting {0} does not sum to dimW {1}".format(
                    [list(s) for s in splitting], list(self.dimW)))
        self.splitting = splitting

    @property
    def rank(self):
        """Rank of the gauge group"""
        return sum(self.dimV)

    def cartan(self):
        return cartan_matrix(self.quiver)

    def is_unframed(self):
        return not any(self.dimW)

    def offsets(self):
        result = []
        total = 0
        for v in self.dimV:
            result.append(total)
            total += v
        return result

    def dump_to_dict(self):
        result = self.quiver.dump_to_dict()
        result['dimV'] = list(self.dimV)
        result['dimW'] = list(self.dimW)
        if self.splitting is not None:
            result['splitting'] = [list(s) for s in self.splitting]
        return result

    @classmethod
    def from_dict(cls, data):
        try:
            quiver = Quiver.from_dict(data)
            return cls(quiver, data['dimV'], data.get('dimW'), data.get('splitting'))
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError("Can't parse theory: {0}".format(repr(e)))

    def __eq__(self, other):
        return isinstance(other, FramedTheory) and \
            (self.quiver, self.dimV, self.dimW, self.splitting) == \
            (other.quiver, other.dimV, other.dimW, other.splitting)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.quiver, self.dimV, self.dimW, self.splitting))

    def __repr__(self):
        return '<FramedTheory: {0}, dimV: {1}, dimW: {2}>'.format(self.quiver, list(self.dimV), list(self.dimW))


class Coweight(object):
    """
    Coweight of prod GL(V_i): one integer sequence per vertex
    """
    __slots__ = ('parts',)

    def __init__(self, parts):
        self.parts = tuple(tuple(int(x) for x in part) for part in parts)

    @classmethod
    def from_flat(cls, dimV, flat):
        parts = []
        position = 0
        for v in dimV:
            parts.append(flat[position:position + v])
            position += v
        if position != len(flat):
            raise ShapeMismatch("{0} coordinates do not fit dimV {1}".format(len(flat), list(dimV)))
        return cls(parts)

    @classmethod
    def zero(cls, dimV):
        return cls([(0,) * v for v in dimV])

    def flat(self):
        return tuple(x for part in self.parts for x in part)

    def shape(self):
        return tuple(len(part) for part in self.parts)

    def bar(self):
        """Class in Z^I: sum of each sequence"""
        return tuple(sum(part) for part in self.parts)

    def is_dominant(self):
        return all(a >= b for part in self.parts for a, b in zip(part, part[1:]))

    def is_partition_tuple(self):
        return self.is_dominant() and all(x >= 0 for part in self.parts for x in part)

    def stabilizer_blocks(self):
        """Sorted sizes of the blocks of equal entries, the Levi type of the stabilizer"""
        blocks = []
        for part in self.parts:
            counts = {}
            for x in part:
                counts[x] = counts.get(x, 0) + 1
            blocks.extend(counts.values())
        return tuple(sorted(blocks))

    def __eq__(self, other):
        return isinstance(other, Coweight) and self.parts == other.parts

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.flat() < other.flat()

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return '<Coweight: {0}>'.format([list(p) for p in self.parts])

    def dump_to_dict(self):
        return [list(p) for p in self.parts]


def _check_shape(T, theta):
    if theta.shape() != T.dimV:
        raise ShapeMismatch("Coweight shape {0} does not match dimV {1}".format(list(theta.shape()), list(T.dimV)))


def d_theta(T, theta):
    """
    sum over matter weights chi of max(-<chi, theta>, 0)
    """
    _check_shape(T, theta)
    parts = theta.parts
    total = 0
    for t, h in T.quiver.indexed_arrows():
        for a in parts[h]:
            for b in parts[t]:
                total += max(b - a, 0)
    for j, w in enumerate(T.dimW):
        if w:
            total += w * sum(max(-a, 0) for a in parts[j])
    return total


def two_rho_pairing(theta):
    if not theta.is_dominant():
        raise NotDominant("Coweight is not dominant: {0}".format(theta))
    return sum(part[a] - part[b] for part in theta.parts
               for a in range(len(part)) for b in range(a + 1, len(part)))


def det_character(T):
    """
    D with <D, theta_bar> = sum of <chi, theta> over the weights of N_hor
    """
    result = [0] * T.quiver.rank
    for t, h in T.quiver.indexed_arrows():
        result[t] -= T.dimV[h]
        result[h] += T.dimV[t]
    return tuple(result)


class Grading(object):
    """
    Choice of grading of the monopole formula.

    homological: d - 2<rho, theta>
    loop/character: d - 2<rho, theta> + det_sign/2 <detN_hor, theta_bar>
                    + 1/2 theta_bar^T C alpha + 1/2 <shift, theta_bar>
    character additionally drops the framing (N = N_hor).
    """
    __slots__ = ('kind', 'alpha', 'det_sign', 'shift')

    def __init__(self, kind, alpha=None, det_sign=None, shift=None):
        if kind not in ALLOWED_GRADINGS:
            raise SchemaError("Unknown grading: '{0}', allowed: {1}".format(kind, ALLOWED_GRADINGS))
        self.kind = kind
        self.alpha = tuple(int(a) for a in alpha) if alpha is not None else None
        self.det_sign = default_config.det_sign if det_sign is None else det_sign
        self.shift = tuple(shift) if shift is not None else None

    @classmethod
    def homological(cls):
        return cls(HOMOLOGICAL)

    @classmethod
    def loop(cls, alpha, **kwargs):
        return cls(LOOP, alpha, **kwargs)

    @classmethod
    def character(cls, alpha, **kwargs):
        return cls(CHARACTER, alpha, **kwargs)

    def dump_to_dict(self):
        result = {'kind': self.kind}
        if self.kind != HOMOLOGICAL:
            result['alpha'] = list(self.alpha) if self.alpha is not None else None
            result['det_sign'] = self.det_sign
            if self.shift is not None:
                result['shift'] = list(self.shift)
        return result

    def __repr__(self):
        return '<Grading: {0}>'.format(self.dump_to_dict())


class ExponentFunction(object):
    """
    sum_k c_k max(L_k . x, 0) + l . x over flattened coordinates x, with
    exact rational coefficients. Positively homogeneous of degree one.
    """
    __slots__ = ('nvars', 'terms', 'linear')

    def __init__(self, nvars, terms, linear):
        self.nvars = nvars
        merged = {}
        for form, coeff in terms:
            form = tuple(Fraction(x) for x in form)
            if not any(form) or not coeff:
                continue
            merged[form] = merged.get(form, Fraction(0)) + Fraction(coeff)
        self.terms = tuple(sorted((form, c) for form, c in merged.items() if c))
        self.linear = tuple(Fraction(x) for x in linear)

    def evaluate(self, x):
        total = sum((l * v for l, v in zip(self.linear, x)), Fraction(0))
        for form, coeff in self.terms:
            value = sum(f * v for f, v in zip(form, x))
            if value > 0:
                total += coeff * value
        return total

    def doubled(self, x):
        value = 2 * self.evaluate(x)
        if value.denominator != 1:
            raise NonIntegerResult("Exponent {0} at {1} is not a half-integer".format(value / 2, x))
        return int(value)

    def is_convex(self):
        return all(c > 0 for _, c in self.terms)

    def __repr__(self):
        return '<ExponentFunction: {0} vars, {1} max-terms>'.format(self.nvars, len(self.terms))


def exponent_function(T, grading):
    """
    Builds the exponent of the monopole formula as an ExponentFunction of the
    flattened coordinates of theta
    """
    if grading.kind != HOMOLOGICAL:
        if grading.alpha is None:
            raise MissingAlpha("Grading '{0}' needs alpha".format(grading.kind))
        if len(grading.alpha) != T.quiver.rank:
            raise ShapeMismatch("alpha {0} does not match {1} vertices".format(list(grading.alpha), T.quiver.rank))

    n = T.rank
    offsets = T.offsets()

    def unit(i, a):
        form = [0] * n
        form[offsets[i] + a] = 1
        return form

    terms = []
    for t, h in T.quiver.indexed_arrows():
        for a in range(T.dimV[h]):
            for b in range(T.dimV[t]):
                form = [0] * n
                form[offsets[t] + b] += 1
                form[offsets[h] + a] -= 1
                terms.append((form, 1))
    if grading.kind != CHARACTER:
        for j, w in enumerate(T.dimW):
            for a in range(T.dimV[j]):
                terms.append(([-x for x in unit(j, a)], w))

    linear = [Fraction(0)] * n
    for j, v in enumerate(T.dimV):
        for a in range(v):
            linear[offsets[j] + a] -= v - 1 - 2 * a

    if grading.kind != HOMOLOGICAL:
        det = det_character(T)
        c_alpha = T.cartan().apply(grading.alpha)
        shift = grading.shift or (0,) * T.quiver.rank
        for j, v in enumerate(T.dimV):
            g = Fraction(grading.det_sign * det[j] + c_alpha[j] + shift[j], 2)
            for a in range(v):
                linear[offsets[j] + a] += g

    return ExponentFunction(n, terms, linear)


def exponent(T, grading, theta):
    """
    Doubled exponent of t at theta (half-units)
    """
    _check_shape(T, theta)
    if not theta.is_dominant():
        raise NotDominant("Coweight is not dominant: {0}".format(theta))
    return exponent_function(T, grading).doubled(theta.flat())


def casimir_degrees(theta):
    """Degrees r = 1..m for every stabilizer block of size m"""
    return [r for m in theta.stabilizer_blocks() for r in range(1, m + 1)]


def casimir_coefficients(blocks, order):
    """
    Dense coefficients in half-units (even positions only) of P(t; theta)
    for a stabilizer signature, up to raw @order
    """
    degrees = [2 * r for m in blocks for r in range(1, m + 1)]
    return inverse_product_coefficients(degrees, order)


def casimir_series(theta, order):
    """
    P(t; theta) = prod over stabilizer blocks prod_r (1 - t^r)^-1 up to t^order,
    exponents in half-units
    """
    if not theta.is_dominant():
        raise NotDominant("Coweight is not dominant: {0}".format(theta))
    raw = 2 * order
    return TruncatedSeries.from_coefficients(casimir_coefficients(theta.stabilizer_blocks(), raw), order=raw)
