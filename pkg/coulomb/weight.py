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
Finite and affine weight-lattice combinatorics: weights in fundamental or
coroot coordinates, dominance, Weyl group actions, the minimal even form,
affine weights (level, finite part, energy) and their orbit representatives.

Energy convention: delta has energy +1, so alpha_0 = (0, -theta, 1).
"""

import logging
import math
from fractions import Fraction
from functools import reduce

import sympy

from coulomb.error import LevelMismatch
from coulomb.error import NoHighestRoot
from coulomb.error import NonIntegerResult
from coulomb.error import NonpositiveLevel
from coulomb.error import NotFiniteType
from coulomb.error import SchemaError
from coulomb.quiver import CartanMatrix
from coulomb.quiver import to_fraction

log = logging.getLogger(__name__)

FUNDAMENTAL = 'fundamental'
COROOT = 'coroot'
ALLOWED_BASES = (FUNDAMENTAL, COROOT)


def _normalize(value):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else value


def _dump_number(value):
    value = _normalize(value)
    return value if isinstance(value, int) else '{0}/{1}'.format(value.numerator, value.denominator)


def is_integral(vector):
    return all(Fraction(x).denominator == 1 for x in vector)


class WeightVector(object):
    """
    Weight tagged with the basis of its coordinates.

    >>> WeightVector([2], FUNDAMENTAL).to_coroot(CartanMatrix([[2]])).coords
    (1,)
    """
    __slots__ = ('coords', 'basis')

    def __init__(self, coords, basis=FUNDAMENTAL):
        if basis not in ALLOWED_BASES:
            raise SchemaError("Unknown basis: '{0}', allowed: {1}".format(basis, ALLOWED_BASES))
        self.coords = tuple(_normalize(x) for x in coords)
        self.basis = basis

    @classmethod
    def zero(cls, rank, basis=FUNDAMENTAL):
        return cls((0,) * rank, basis)

    @property
    def rank(self):
        return len(self.coords)

    def fundamental(self, cartan):
        """Fundamental coordinates (pairings with the simple roots)"""
        if self.basis == FUNDAMENTAL:
            return self.coords
        return tuple(_normalize(x) for x in cartan.apply(self.coords))

    def coroot(self, cartan):
        if self.basis == COROOT:
            return self.coords
        return cartan.solve(self.coords)

    def to_fundamental(self, cartan):
        return WeightVector(self.fundamental(cartan), FUNDAMENTAL)

    def to_coroot(self, cartan):
        return WeightVector(self.coroot(cartan), COROOT)

    def in_basis(self, basis, cartan):
        return self.to_fundamental(cartan) if basis == FUNDAMENTAL else self.to_coroot(cartan)

    def is_dominant(self, cartan=None):
        coords = self.coords if self.basis == FUNDAMENTAL else self.fundamental(cartan)
        return all(x >= 0 for x in coords)

    def _check(self, other):
        if self.basis != other.basis or self.rank != other.rank:
            raise SchemaError("Weights {0} and {1} are not over the same basis".format(self, other))

    def __add__(self, other):
        self._check(other)
        return WeightVector([a + b for a, b in zip(self.coords, other.coords)], self.basis)

    def __sub__(self, other):
        self._check(other)
        return WeightVector([a - b for a, b in zip(self.coords, other.coords)], self.basis)

    def __neg__(self):
        return WeightVector([-a for a in self.coords], self.basis)

    def __mul__(self, scalar):
        return WeightVector([a * scalar for a in self.coords], self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WeightVector) and (self.basis, self.coords) == (other.basis, other.coords)

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (self.basis, self.coords) < (other.basis, other.coords)

    def __hash__(self):
        return hash((self.basis, self.coords))

    def __repr__(self):
        return '<WeightVector: {0} {1}>'.format(self.basis, list(self.coords))

    def dump_to_dict(self):
        return {'basis': self.basis, 'coords': [_dump_number(x) for x in self.coords]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls([Fraction(x) for x in data['coords']], data.get('basis', FUNDAMENTAL))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise SchemaError("Can't parse weight: {0}: {1}".format(data, repr(e)))


class AffineWeight(object):
    """
    Affine weight (k, finite, n): level, finite part and energy
    """
    __slots__ = ('level', 'finite', 'energy')

    def __init__(self, level, finite, energy=0):
        self.level = int(level)
        self.finite = finite
        self.energy = _normalize(energy)

    def shift_energy(self, shift):
        return AffineWeight(self.level, self.finite, self.energy + shift)

    def with_finite(self, finite):
        return AffineWeight(self.level, finite, self.energy)

    def in_basis(self, basis, cartan):
        return AffineWeight(self.level, self.finite.in_basis(basis, cartan), self.energy)

    def key(self, cartan):
        return (self.level, self.finite.fundamental(cartan), self.energy)

    def __eq__(self, other):
        return isinstance(other, AffineWeight) and \
            (self.level, self.finite, self.energy) == (other.level, other.finite, other.energy)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.level, self.finite, self.energy))

    def __lt__(self, other):
        return (self.level, self.finite, self.energy) < (other.level, other.finite, other.energy)

    def __repr__(self):
        return '<AffineWeight: level: {0}, finite: {1} {2}, energy: {3}>'.format(
            self.level, self.finite.basis, list(self.finite.coords), self.energy)

    def dump_to_dict(self):
        return {'level': self.level,
                'finite': self.finite.dump_to_dict(),
                'energy': _dump_number(self.energy)}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(int(data['level']), WeightVector.from_dict(data['finite']),
                       Fraction(data.get('energy', 0)))
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError("Can't parse affine weight: {0}: {1}".format(data, repr(e)))


class BilinearForm(object):
    """
    Minimal integral even form on the coroot lattice, gram in coroot coordinates
    """
    __slots__ = ('gram', 'cartan')

    def __init__(self, gram, cartan=None):
        self.gram = tuple(tuple(int(x) for x in row) for row in gram)
        self.cartan = cartan

    @classmethod
    def from_cartan(cls, cartan):
        symmetrized = cartan.symmetrized()
        n = cartan.rank
        values = [symmetrized[i, i] // 2 for i in range(n)] + \
                 [symmetrized[i, j] for i in range(n) for j in range(n) if i != j]
        factor = reduce(math.gcd, (abs(int(v)) for v in values), 0) or 1
        return cls([[int(symmetrized[i, j]) // factor for j in range(n)] for i in range(n)], cartan)

    def __call__(self, x, y):
        """Pairing of coroot coordinate vectors or weights"""
        x = self._coords(x)
        y = self._coords(y)
        return _normalize(sum(Fraction(a) * g * Fraction(b)
                              for a, row in zip(x, self.gram) for g, b in zip(row, y)))

    def _coords(self, value):
        if isinstance(value, WeightVector):
            return value.coroot(self.cartan)
        return value

    def norm(self, x):
        return self(x, x)


def dominance_leq(lam, mu, cartan):
    """
    Checks mu <= lam, i.e. lam - mu is a nonnegative integer combination of
    simple coroots. Returns (True, coefficients) or (False, None).
    """
    if lam.rank != mu.rank:
        raise SchemaError("Weights over different vertex sets: {0} and {1}".format(lam, mu))
    if lam.basis == COROOT and mu.basis == COROOT:
        diff = [a - b for a, b in zip(lam.coords, mu.coords)]
    else:
        diff = cartan.solve([a - b for a, b in zip(lam.fundamental(cartan), mu.fundamental(cartan))])
    if all(Fraction(x).denominator == 1 and x >= 0 for x in diff):
        return True, tuple(int(x) for x in diff)
    return False, None


def simple_reflection(coords, i, cartan):
    """s_i on fundamental coordinates"""
    ci = coords[i]
    return tuple(_normalize(x - ci * a) for x, a in zip(coords, cartan.column(i)))


def dominant_conjugate(weight, cartan):
    """
    Dominant W-conjugate of @weight and the number of simple reflections used
    """
    if not cartan.is_finite_type():
        raise NotFiniteType("Cartan matrix is not of finite type: {0}".format(cartan.entries))
    coords = weight.fundamental(cartan)
    steps = 0
    while True:
        negative = [i for i, x in enumerate(coords) if x < 0]
        if not negative:
            break
        coords = simple_reflection(coords, negative[0], cartan)
        steps += 1
    return WeightVector(coords, FUNDAMENTAL).in_basis(weight.basis, cartan), steps


def positive_roots(cartan):
    """
    Positive roots as simple-root coordinate tuples ordered by height, built
    height by height from root strings: beta + alpha_i is a root iff
    p - (C beta)_i > 0 where p is the length of the string below beta.
    """
    if not cartan.is_finite_type():
        raise NotFiniteType("Cartan matrix is not of finite type: {0}".format(cartan.entries))
    n = cartan.rank
    simple = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        next_layer = set()
        for beta in layer:
            pairings = cartan.apply(beta)
            for i in range(n):
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in roots:
                        break
                    p += 1
                if p - pairings[i] > 0:
                    higher = tuple(b + (1 if j == i else 0) for j, b in enumerate(beta))
                    next_layer.add(higher)
        next_layer -= roots
        roots |= next_layer
        layer = sorted(next_layer)
    return sorted(roots, key=lambda r: (sum(r), r))


def highest_root(cartan):
    roots = positive_roots(cartan)
    top = [r for r in roots if sum(r) == sum(roots[-1])]
    if len(top) != 1:
        raise NoHighestRoot("No unique highest root for {0}".format(cartan.entries))
    return top[0]


def _highest_root_for_affine(cartan):
    if not cartan.is_symmetric():
        raise NoHighestRoot("Affine combinatorics needs a simply-laced finite part: {0}".format(cartan.entries))
    try:
        return highest_root(cartan)
    except NotFiniteType as e:
        raise NoHighestRoot(str(e))


def theta_pairing(finite, cartan, theta=None):
    """<finite, theta> for the highest root theta"""
    theta = theta or _highest_root_for_affine(cartan)
    return _normalize(sum(t * f for t, f in zip(theta, finite.fundamental(cartan))))


def affine_dominant(weight, cartan):
    """
    (k, lam, n) is dominant iff lam is dominant and <lam, theta> <= k
    """
    theta = _highest_root_for_affine(cartan)
    if not weight.finite.is_dominant(cartan):
        return False
    return theta_pairing(weight.finite, cartan, theta) <= weight.level


def weyl_reflection(weight, i, cartan):
    return weight.with_finite(WeightVector(simple_reflection(weight.finite.fundamental(cartan), i, cartan),
                                           FUNDAMENTAL).in_basis(weight.finite.basis, cartan))


def affine_reflection(weight, cartan):
    """s_0: lam -> lam - (p - k) theta with energy n + p - k, p = <lam, theta>"""
    theta = _highest_root_for_affine(cartan)
    p = theta_pairing(weight.finite, cartan, theta)
    shift = p - weight.level
    theta_fund = cartan.apply(theta)
    finite = WeightVector([x - shift * t for x, t in zip(weight.finite.fundamental(cartan), theta_fund)],
                          FUNDAMENTAL)
    return AffineWeight(weight.level, finite.in_basis(weight.finite.basis, cartan), weight.energy + shift)


def translation(weight, nu, form):
    """
    t_nu for nu in coroot coordinates:
    (lam, n) -> (lam + k nu, n - (lam, nu) - k (nu, nu) / 2)
    """
    cartan = form.cartan
    k = weight.level
    lam = weight.finite.coroot(cartan)
    finite = WeightVector([a + k * b for a, b in zip(lam, nu)], COROOT)
    energy = weight.energy - form(lam, nu) - Fraction(k * form(nu, nu), 2)
    return AffineWeight(k, finite.in_basis(weight.finite.basis, cartan), energy)


def orbit_representative(weight, k, cartan):
    """
    Unique level-k dominant point of the orbit of @weight under W_fin x| k Q^vee
    """
    if k <= 0:
        raise NonpositiveLevel("Level should be positive: {0}".format(k))
    if weight.level != k:
        raise LevelMismatch("Weight level {0} differs from {1}".format(weight.level, k))
    theta = _highest_root_for_affine(cartan)
    basis = weight.finite.basis
    current = weight.in_basis(FUNDAMENTAL, cartan)
    steps = 0
    while True:
        coords = current.finite.coords
        negative = [i for i, x in enumerate(coords) if x < 0]
        if negative:
            current = weyl_reflection(current, negative[0], cartan)
        elif theta_pairing(current.finite, cartan, theta) > k:
            current = affine_reflection(current, cartan)
        else:
            break
        steps += 1
    log.debug("Orbit representative of {0}: {1} after {2} reflections".format(weight, current, steps))
    return current.in_basis(basis, cartan)


def instanton_number(lam, mu, form):
    """
    k (l - m) + ((lam, lam) - (mu, mu)) / 2 for lam = (k, lam, l), mu = (k, mu, m)
    """
    if lam.level != mu.level:
        raise LevelMismatch("Levels differ: {0} and {1}".format(lam.level, mu.level))
    value = Fraction(lam.level) * (Fraction(lam.energy) - Fraction(mu.energy)) + \
        Fraction(Fraction(form.norm(lam.finite)) - Fraction(form.norm(mu.finite)), 2)
    if value.denominator != 1:
        raise NonIntegerResult("Instanton number {0} is not an integer".format(value))
    return int(value)


class AffineRootDatum(object):
    """
    Affine root data read off an affine Cartan matrix: the null root delta,
    the affine vertex i0 and the finite part on the remaining vertices.
    """

    def __init__(self, cartan):
        self.cartan = cartan
        n = cartan.rank
        if not cartan.is_symmetric():
            raise NoHighestRoot("Affine datum needs a symmetric Cartan matrix: {0}".format(cartan.entries))
        kernel = cartan.matrix().nullspace()
        if len(kernel) != 1:
            raise NoHighestRoot("Cartan matrix {0} is not of affine type".format(cartan.entries))
        vector = [to_fraction(x) for x in kernel[0]]
        scale = reduce(lambda a, b: a * b // math.gcd(a, b), (Fraction(x).denominator for x in vector), 1)
        vector = [int(x * scale) for x in vector]
        divisor = reduce(math.gcd, (abs(x) for x in vector), 0)
        vector = [x // divisor for x in vector]
        if vector[0] < 0:
            vector = [-x for x in vector]
        if any(x <= 0 for x in vector):
            raise NoHighestRoot("Null vector {0} is not positive".format(vector))
        self.delta = tuple(vector)

        for i0 in range(n):
            if self.delta[i0] != 1:
                continue
            finite_indices = tuple(i for i in range(n) if i != i0)
            finite = cartan.submatrix(finite_indices)
            if finite.is_finite_type():
                break
        else:
            raise NoHighestRoot("No affine vertex in {0}".format(cartan.entries))
        self.i0 = i0
        self.finite_indices = finite_indices
        self.finite = finite
        self.theta = tuple(self.delta[i] for i in finite_indices)
        if finite_indices and highest_root(finite) != self.theta:
            raise NoHighestRoot("Null root {0} does not restrict to the highest root".format(self.delta))
        self.form = BilinearForm.from_cartan(finite)

    def level_of(self, coords):
        """Level of sum coords_i Lambda_i"""
        return sum(c * d for c, d in zip(coords, self.delta))

    def affine_coordinates(self, weight):
        """Coordinates of @weight in the affine fundamental weights"""
        fund = weight.finite.fundamental(self.finite)
        coords = [0] * self.cartan.rank
        coords[self.i0] = weight.level - theta_pairing(weight.finite, self.finite, self.theta)
        for i, f in zip(self.finite_indices, fund):
            coords[i] = f
        return tuple(_normalize(x) for x in coords)

    def from_affine_coordinates(self, coords, energy=0, basis=FUNDAMENTAL):
        finite = WeightVector([coords[i] for i in self.finite_indices], FUNDAMENTAL)
        return AffineWeight(self.level_of(coords), finite.in_basis(basis, self.finite), energy)

    def root_combination(self, coeffs):
        """Level-zero affine weight sum coeffs_i alpha_i"""
        c0 = coeffs[self.i0]
        finite = WeightVector([coeffs[i] - c0 * t for i, t in zip(self.finite_indices, self.theta)], COROOT)
        return AffineWeight(0, finite.to_fundamental(self.finite), c0)

    def subtract(self, weight, coeffs):
        root = self.root_combination(coeffs)
        finite = weight.finite.to_fundamental(self.finite) - root.finite
        return AffineWeight(weight.level, finite.in_basis(weight.finite.basis, self.finite),
                            weight.energy - root.energy)

    def difference_coefficients(self, lam, mu):
        """Coefficients c over all vertices with lam - mu = sum c_i alpha_i"""
        if lam.level != mu.level:
            raise LevelMismatch("Levels differ: {0} and {1}".format(lam.level, mu.level))
        c0 = _normalize(Fraction(lam.energy) - Fraction(mu.energy))
        diff = self.finite.solve([a - b for a, b in zip(lam.finite.fundamental(self.finite),
                                                        mu.finite.fundamental(self.finite))])
        coeffs = [0] * self.cartan.rank
        coeffs[self.i0] = c0
        for i, d, t in zip(self.finite_indices, diff, self.theta):
            coeffs[i] = _normalize(d + c0 * t)
        return tuple(coeffs)

    def dominant(self, weight):
        return affine_dominant(weight, self.finite)

    def dump_to_dict(self):
        return {'delta': list(self.delta),
                'affine_vertex': self.cartan.labels[self.i0],
                'finite_vertices': [self.cartan.labels[i] for i in self.finite_indices]}

    def __repr__(self):
        return '<AffineRootDatum: {0}>'.format(self.dump_to_dict())
