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
Exact truncated series in t, optionally multigraded by z_1..z_r.

Exponents are raw integers: the series knows nothing about half-units. The
engine stores t-exponents doubled and the printing helpers translate them
according to the units flag.
"""

import logging
import math
from functools import reduce

from coulomb.error import FormatError
from coulomb.error import InsufficientOrder
from coulomb.error import NonpositiveDegree
from coulomb.error import VariableMismatch

log = logging.getLogger(__name__)

UNITS_HALF = 'half'
UNITS_INTEGER = 'integer'
UNITS_DOUBLED = 'doubled'
ALLOWED_UNITS = (UNITS_HALF, UNITS_INTEGER, UNITS_DOUBLED)

MIN_GROWTH_ORDER = 20


def format_exponent(raw, units):
    """Converts raw stored exponent into the printed one"""
    if units == UNITS_HALF:
        return raw
    elif units == UNITS_INTEGER:
        if raw % 2:
            raise FormatError("Exponent {0} is not integral in units '{1}'".format(raw, units))
        return raw // 2
    elif units == UNITS_DOUBLED:
        return raw * 2
    raise FormatError("Unknown units: '{0}', allowed: {1}".format(units, ALLOWED_UNITS))


def parse_exponent(printed, units):
    """Inverse of format_exponent"""
    if units == UNITS_HALF:
        return printed
    elif units == UNITS_INTEGER:
        return printed * 2
    elif units == UNITS_DOUBLED:
        if printed % 2:
            raise FormatError("Exponent {0} is odd in units '{1}'".format(printed, units))
        return printed // 2
    raise FormatError("Unknown units: '{0}', allowed: {1}".format(units, ALLOWED_UNITS))


class TruncatedSeries(object):
    """
    Immutable series: sum of coeff * t^e * z^m over stored terms, exact up to
    and including t^order.

    >>> s = TruncatedSeries({(0, ()): 1, (1, ()): 2}, order=3)
    >>> s.coefficient(1)
    2
    """
    __slots__ = ('order', 'nvars', '_terms')

    def __init__(self, terms=None, order=0, nvars=0):
        self.order = int(order)
        self.nvars = int(nvars)
        self._terms = {}
        for (t, z), coeff in (terms or {}).items():
            z = tuple(int(x) for x in z)
            if len(z) != self.nvars:
                raise VariableMismatch("Term z^{0} does not match {1} z-variables".format(z, self.nvars))
            if coeff and t <= self.order:
                key = (int(t), z)
                self._terms[key] = self._terms.get(key, 0) + int(coeff)
                if not self._terms[key]:
                    del self._terms[key]

    @classmethod
    def one(cls, order, nvars=0):
        return cls({(0, (0,) * nvars): 1}, order=order, nvars=nvars)

    @classmethod
    def monomial(cls, t, z=(), coeff=1, order=0, nvars=None):
        nvars = len(z) if nvars is None else nvars
        return cls({(t, tuple(z)): coeff}, order=order, nvars=nvars)

    @classmethod
    def from_coefficients(cls, coefficients, step=1, order=None):
        """Builds t-only series from dense coefficients of t^0, t^step, ..."""
        if order is None:
            order = (len(coefficients) - 1) * step
        return cls({(i * step, ()): c for i, c in enumerate(coefficients)}, order=order)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms sorted lexicographically by (t, z)"""
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def coefficient(self, t, z=None):
        if z is None:
            z = (0,) * self.nvars
        return self._terms.get((t, tuple(z)), 0)

    def t_coefficients(self, step=1):
        """Dense coefficients of t^0, t^step, ... up to order with z set to 1"""
        result = [0] * (self.order // step + 1)
        for (t, _), coeff in self._terms.items():
            if t < 0 or t % step:
                continue
            result[t // step] += coeff
        return result

    def min_exponent(self):
        if not self._terms:
            return None
        return min(t for t, _ in self._terms)

    def _check_vars(self, other):
        if self.nvars != other.nvars:
            raise VariableMismatch("Series have different z-variables: {0} and {1}"
                                   .format(self.nvars, other.nvars))

    def truncate(self, order):
        return TruncatedSeries(self._terms, order=min(order, self.order), nvars=self.nvars)

    def __add__(self, other):
        self._check_vars(other)
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            result[key] = result.get(key, 0) + coeff
        return TruncatedSeries(result, order=min(self.order, other.order), nvars=self.nvars)

    def __mul__(self, other):
        return series_mul(self, other)

    def shift(self, t, z=None):
        """Multiplies by monomial t^t z^z"""
        z = (0,) * self.nvars if z is None else tuple(z)
        if len(z) != self.nvars:
            raise VariableMismatch("Monomial z^{0} does not match {1} z-variables".format(z, self.nvars))
        return TruncatedSeries({(e + t, tuple(a + b for a, b in zip(m, z))): c
                                for (e, m), c in self._terms.items()},
                               order=self.order, nvars=self.nvars)

    def specialize_z(self):
        """Sets every z_i to 1"""
        result = {}
        for (t, _), coeff in self._terms.items():
            result[(t, ())] = result.get((t, ()), 0) + coeff
        return TruncatedSeries(result, order=self.order, nvars=0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order, self.nvars, self._terms) == (other.order, other.nvars, other._terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.nvars, tuple(self.items())))

    def __repr__(self):
        if not self._terms:
            body = '0'
        else:
            body = ' + '.join('{0}*t^{1}{2}'.format(c, t, ''.join('*z{0}^{1}'.format(i + 1, m)
                                                                  for i, m in enumerate(z) if m))
                              for (t, z), c in self.items())
        return '<TruncatedSeries: {0} + O(t^{1})>'.format(body, self.order + 1)

    def dump(self, units=UNITS_HALF):
        """
        Serializes to the series file format: header line then one term per line
        """
        names = ['t'] + ['z{0}'.format(i + 1) for i in range(self.nvars)]
        header_order = self.order // 2 if units == UNITS_INTEGER else format_exponent(self.order, units)
        lines = ['# units={0} order={1} vars={2}'.format(units, header_order, ','.join(names))]
        for (t, z), coeff in self.items():
            lines.append(' '.join(str(x) for x in (format_exponent(t, units),) + z + (coeff,)))
        return '\n'.join(lines) + '\n'

    @classmethod
    def parse(cls, text):
        lines = [l.strip() for l in text.splitlines() if l.strip()]
        if not lines or not lines[0].startswith('#'):
            raise FormatError("Missing series header")
        try:
            header = dict(field.split('=', 1) for field in lines[0][1:].split())
            units = header['units']
            order = parse_exponent(int(header['order']), units)
            names = header['vars'].split(',')
        except (KeyError, ValueError) as e:
            raise FormatError("Can't parse series header: '{0}': {1}".format(lines[0], repr(e)))
        if units not in ALLOWED_UNITS:
            raise FormatError("Unknown units: '{0}', allowed: {1}".format(units, ALLOWED_UNITS))
        if not names or names[0] != 't':
            raise FormatError("Series variables should start with t: {0}".format(names))
        nvars = len(names) - 1

        terms = {}
        previous = None
        for line in lines[1:]:
            if line.startswith('#'):
                continue
            try:
                values = [int(x) for x in line.split()]
            except ValueError as e:
                raise FormatError("Can't parse series term: '{0}': {1}".format(line, repr(e)))
            if len(values) != nvars + 2:
                raise FormatError("Series term '{0}' should have {1} fields".format(line, nvars + 2))
            key = (parse_exponent(values[0], units), tuple(values[1:-1]))
            if previous is not None and key <= previous:
                raise FormatError("Series terms are not sorted at '{0}'".format(line))
            previous = key
            terms[key] = values[-1]
        return cls(terms, order=order, nvars=nvars)


def series_mul(a, b):
    """
    Product truncated at the smaller order.

    >>> one = TruncatedSeries.from_coefficients([1, 1], order=2)
    >>> (one * one).t_coefficients()
    [1, 2, 1]
    """
    a._check_vars(b)
    order = min(a.order, b.order)
    result = {}
    b_terms = sorted(b._terms.items())
    for (ta, za), ca in a._terms.items():
        for (tb, zb), cb in b_terms:
            t = ta + tb
            if t > order:
                break
            key = (t, tuple(x + y for x, y in zip(za, zb)))
            result[key] = result.get(key, 0) + ca * cb
    return TruncatedSeries(result, order=order, nvars=a.nvars)


def inverse_product_coefficients(degrees, order):
    """Dense coefficients of prod (1 - t^d)^-1 up to t^order"""
    coefficients = [0] * (order + 1)
    if order < 0:
        return coefficients
    coefficients[0] = 1
    for d in degrees:
        if d <= 0:
            raise NonpositiveDegree("Degree should be positive: {0}".format(d))
        for i in range(d, order + 1):
            coefficients[i] += coefficients[i - d]
    return coefficients


def expand_inverse_product(degrees, order):
    return TruncatedSeries.from_coefficients(inverse_product_coefficients(degrees, order), order=order)


def series_add(a, b):
    """Sum truncated at the smaller order; associative and commutative"""
    return a + b


def first_difference(a, b):
    """
    Returns None when a and b agree up to the smaller order, otherwise the
    first differing term as ((t, z), coeff_a, coeff_b)
    """
    a._check_vars(b)
    order = min(a.order, b.order)
    keys = sorted(k for k in set(a._terms) | set(b._terms) if k[0] <= order)
    for key in keys:
        ca, cb = a._terms.get(key, 0), b._terms.get(key, 0)
        if ca != cb:
            return key, ca, cb
    return None


def equal_up_to(a, b):
    return first_difference(a, b) is None


def growth_dimension_estimate(s):
    """
    Estimates d such that the coefficients of s grow like n^(d-1), i.e. the
    Krull dimension of a graded ring with Hilbert series s.

    The twice-summed coefficients T(n) grow like n^(d+1); their local exponent
    log2(T(N)/T(N/2)) is extrapolated once to remove the 1/N correction.
    """
    if s.nvars:
        raise VariableMismatch("Growth estimate needs a t-only series, got {0} z-variables".format(s.nvars))
    exponents = [t for (t, _), c in s.items() if t]
    if any(t < 0 for t, _ in s.terms):
        raise FormatError("Growth estimate needs nonnegative exponents")
    step = reduce(math.gcd, exponents, 0) or 1
    coefficients = s.t_coefficients(step)
    n = len(coefficients) - 1
    if n < MIN_GROWTH_ORDER:
        raise InsufficientOrder("Growth estimate needs at least {0} steps, got {1}"
                                .format(MIN_GROWTH_ORDER, n))
    if any(c < 0 for c in coefficients):
        raise FormatError("Growth estimate needs nonnegative coefficients")

    partial, twice = 0, 0
    summed = []
    for c in coefficients:
        partial += c
        twice += partial
        summed.append(twice)
    if not summed[n // 4]:
        return 0

    def local_exponent(m):
        return math.log2(summed[m] / summed[m // 2])

    estimate = 2 * local_exponent(n) - local_exponent(n // 2)
    log.debug("Growth estimate over {0} steps of {1}: {2}".format(n, step, estimate))
    return max(0, int(round(estimate)) - 1)
