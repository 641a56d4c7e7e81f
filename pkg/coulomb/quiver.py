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
Quivers and (possibly folded) generalized Cartan matrices
"""

import logging
from fractions import Fraction

import sympy

from coulomb.error import ArrowInsideOrbit
from coulomb.error import EdgeLoop
from coulomb.error import NonInvertibleCartan
from coulomb.error import NotAutomorphism
from coulomb.error import SchemaError

log = logging.getLogger(__name__)


def to_fraction(value):
    """Converts sympy rational (or int) into normalized Fraction/int"""
    if isinstance(value, sympy.Basic):
        value = Fraction(int(value.p), int(value.q))
    else:
        value = Fraction(value)
    return int(value) if value.denominator == 1 else value


class Quiver(object):
    """
    Oriented graph without edge loops. Vertex order is the order given at
    construction and fixes every coordinate convention downstream.
    """
    __slots__ = ('vertices', 'arrows', '_index')

    def __init__(self, vertices, arrows=()):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise SchemaError("Duplicate vertices: {0}".format(self.vertices))
        self.arrows = tuple((tail, head) for tail, head in arrows)
        for tail, head in self.arrows:
            if tail not in self._index or head not in self._index:
                raise SchemaError("Arrow {0}->{1} uses unknown vertex".format(tail, head))
            if tail == head:
                raise EdgeLoop("Edge loop at vertex {0}".format(tail))

    @property
    def rank(self):
        return len(self.vertices)

    def index(self, vertex):
        return self._index[vertex]

    def indexed_arrows(self):
        """Arrows as (tail index, head index)"""
        return [(self._index[t], self._index[h]) for t, h in self.arrows]

    def edges_between(self, i, j):
        """Number of arrows joining vertices with indices i and j in either direction"""
        return sum(1 for t, h in self.indexed_arrows() if {t, h} == {i, j})

    def dump_to_dict(self):
        return {'vertices': list(self.vertices),
                'arrows': [[t, h] for t, h in self.arrows]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data['vertices'], [tuple(a) for a in data.get('arrows', [])])
        except (KeyError, TypeError, ValueError) as e:
            raise SchemaError("Can't parse quiver: {0}".format(repr(e)))

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return '<Quiver: vertices: {0}, arrows: {1}>'.format(list(self.vertices),
                                                           ['{0}->{1}'.format(t, h) for t, h in self.arrows])


class CartanMatrix(object):
    """
    Generalized Cartan matrix with its symmetrizer.
    Convention: entries[i][j] = <alpha_j, alpha_i^vee>, so the fundamental
    coordinates of sum x_j alpha_j are C.x
    """
    __slots__ = ('entries', 'symmetrizer', 'labels', '_inverse', '_finite')

    def __init__(self, entries, symmetrizer=None, labels=None):
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise SchemaError("Cartan matrix should be square: {0}".format(self.entries))
        self.symmetrizer = tuple(int(d) for d in (symmetrizer or (1,) * n))
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        self._inverse = None
        self._finite = None
        if len(self.symmetrizer) != n or len(self.labels) != n:
            raise SchemaError("Cartan matrix symmetrizer/labels do not match its size")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise SchemaError("Cartan matrix diagonal should be 2: {0}".format(self.entries))
            for j in range(n):
                if i != j and self.entries[i][j] > 0:
                    raise SchemaError("Cartan matrix off-diagonal should be <= 0: {0}".format(self.entries))
                if self.symmetrizer[i] * self.entries[i][j] != self.symmetrizer[j] * self.entries[j][i]:
                    raise SchemaError("Symmetrizer {0} does not symmetrize {1}"
                                      .format(self.symmetrizer, self.entries))

    @property
    def rank(self):
        return len(self.entries)

    def is_symmetric(self):
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rank) for j in range(self.rank))

    def matrix(self):
        return sympy.Matrix(self.entries)

    def symmetrized(self):
        """diag(symmetrizer) . C as sympy matrix"""
        return sympy.diag(*self.symmetrizer) * self.matrix() if self.rank else sympy.zeros(0, 0)

    def determinant(self):
        return int(self.matrix().det()) if self.rank else 1

    def is_finite_type(self):
        if self._finite is None:
            self._finite = not self.rank or bool(self.symmetrized().is_positive_definite)
        return self._finite

    def inverse(self):
        if self._inverse is None:
            if not self.determinant():
                raise NonInvertibleCartan("Cartan matrix is singular: {0}".format(self.entries))
            inv = self.matrix().inv() if self.rank else sympy.zeros(0, 0)
            self._inverse = tuple(tuple(to_fraction(inv[i, j]) for j in range(self.rank))
                                  for i in range(self.rank))
        return self._inverse

    def apply(self, vector):
        return tuple(sum(c * v for c, v in zip(row, vector)) for row in self.entries)

    def solve(self, vector):
        inv = self.inverse()
        return tuple(to_fraction(sum(c * Fraction(v) for c, v in zip(row, vector))) for row in inv)

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def submatrix(self, indices):
        return CartanMatrix([[self.entries[i][j] for j in indices] for i in indices],
                            symmetrizer=[self.symmetrizer[i] for i in indices],
                            labels=[self.labels[i] for i in indices])

    def dump_to_dict(self):
        return {'entries': [list(row) for row in self.entries],
                'symmetrizer': list(self.symmetrizer),
                'labels': [list(l) if isinstance(l, tuple) else l for l in self.labels]}

    def __eq__(self, other):
        return isinstance(other, CartanMatrix) and \
            (self.entries, self.symmetrizer) == (other.entries, other.symmetrizer)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.entries, self.symmetrizer))

    def __repr__(self):
        return '<CartanMatrix: {0}, symmetrizer: {1}>'.format([list(r) for r in self.entries],
                                                              list(self.symmetrizer))


def cartan_matrix(q):
    """
    Symmetric generalized Cartan matrix of the underlying graph of @q

    >>> cartan_matrix(Quiver([1, 2], [(1, 2)])).entries
    ((2, -1), (-1, 2))
    """
    for tail, head in q.arrows:
        if tail == head:
            raise EdgeLoop("Edge loop at vertex {0}".format(tail))
    n = q.rank
    entries = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for t, h in q.indexed_arrows():
        entries[t][h] -= 1
        entries[h][t] -= 1
    return CartanMatrix(entries, labels=q.vertices)


def _permutation(q, sigma):
    if isinstance(sigma, dict):
        images = [sigma.get(v, v) for v in q.vertices]
    else:
        images = list(sigma)
    if len(images) != q.rank or set(images) != set(q.vertices):
        raise NotAutomorphism("Not a permutation of {0}: {1}".format(list(q.vertices), sigma))
    return [q.index(v) for v in images]


def orbits(q, sigma):
    """Orbits of @sigma ordered by first appearance in vertex order"""
    perm = _permutation(q, sigma)
    seen = set()
    result = []
    for i in range(q.rank):
        if i in seen:
            continue
        orbit = [i]
        j = perm[i]
        while j != i:
            orbit.append(j)
            j = perm[j]
        seen.update(orbit)
        result.append(tuple(orbit))
    return perm, result


def fold(q, sigma):
    """
    Cartan matrix of the folding of @q by the automorphism @sigma.

    @sigma is a dict vertex -> image (missing vertices are fixed) or a list
    of images in vertex order. Rows and columns are indexed by orbits, the
    entry C'[I][J] sums C[i0][j] over j in J for the representative i0 of I.
    """
    c = cartan_matrix(q).entries
    perm, orbit_list = orbits(q, sigma)
    n = q.rank
    for i in range(n):
        for j in range(n):
            if c[perm[i]][perm[j]] != c[i][j]:
                raise NotAutomorphism("Permutation does not preserve edges between {0} and {1}"
                                      .format(q.vertices[i], q.vertices[j]))
    for orbit in orbit_list:
        for i in orbit:
            for j in orbit:
                if i != j and c[i][j]:
                    raise ArrowInsideOrbit("Arrow joins {0} and {1} of one orbit"
                                           .format(q.vertices[i], q.vertices[j]))

    entries = [[sum(c[row[0]][j] for j in col) for col in orbit_list] for row in orbit_list]
    labels = [tuple(q.vertices[i] for i in orbit) for orbit in orbit_list]
    log.debug("Folded {0} by {1}: {2}".format(q, sigma, entries))
    return CartanMatrix(entries, symmetrizer=[len(orbit) for orbit in orbit_list], labels=labels)
