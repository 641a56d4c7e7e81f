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
Weight multiplicities of simple modules by Freudenthal's recursion
"""

from fractions import Fraction

from coulomb.error import NonIntegerResult
from coulomb.error import NotDominant
from coulomb.error import NotFiniteType
from coulomb.weight import dominant_conjugate
from coulomb.weight import positive_roots
from coulomb.weight import WeightVector
from coulomb.weight import FUNDAMENTAL
from coulomb.log import logged_class


@logged_class
class Freudenthal(object):
    """
    Multiplicities of the weights of the simple module V(highest) for a
    finite-type Cartan matrix. Weights are tuples of fundamental coordinates;
    values are memoized on dominant weights.
    """

    def __init__(self, highest, cartan):
        if not cartan.is_finite_type():
            raise NotFiniteType("Cartan matrix is not of finite type: {0}".format(cartan.entries))
        self.cartan = cartan
        self.highest = tuple(highest.fundamental(cartan))
        if any(x < 0 for x in self.highest) or any(Fraction(x).denominator != 1 for x in self.highest):
            raise NotDominant("Highest weight should be dominant and integral: {0}".format(highest))
        n = cartan.rank
        # (alpha_i, alpha_j) = d_i C_ij
        self.gram = [[cartan.symmetrizer[i] * cartan.entries[i][j] for j in range(n)] for i in range(n)]
        self.roots = [(root, cartan.apply(root)) for root in positive_roots(cartan)]
        self.rho = (1,) * n
        self.norm_highest = self.norm(self.shift(self.highest))
        self.cache = {self.highest: 1}

    def shift(self, weight):
        return tuple(a + b for a, b in zip(weight, self.rho))

    def root_coords(self, weight):
        return self.cartan.solve(weight)

    def form(self, x, y):
        """Form on fundamental coordinates via root coordinates"""
        a = self.root_coords(x)
        b = self.root_coords(y)
        return sum(Fraction(ai) * g * Fraction(bj) for ai, row in zip(a, self.gram) for g, bj in zip(row, b))

    def norm(self, x):
        return self.form(x, x)

    def below(self, weight):
        """Root coordinates of highest - weight when they are nonnegative integers"""
        diff = self.root_coords([h - w for h, w in zip(self.highest, weight)])
        if all(Fraction(x).denominator == 1 and x >= 0 for x in diff):
            return diff
        return None

    def multiplicity(self, weight):
        weight = tuple(weight)
        dominant, _ = dominant_conjugate(WeightVector(weight, FUNDAMENTAL), self.cartan)
        weight = dominant.coords
        if weight in self.cache:
            return self.cache[weight]
        if self.below(weight) is None:
            self.cache[weight] = 0
            return 0

        total = Fraction(0)
        for root, root_fund in self.roots:
            j = 1
            while True:
                higher = tuple(w + j * r for w, r in zip(weight, root_fund))
                if self.below(higher) is None:
                    break
                m = self.multiplicity(higher)
                if m:
                    total += self.form(higher, root_fund) * m
                j += 1
        denominator = self.norm_highest - self.norm(self.shift(weight))
        value = 2 * total / denominator
        if value.denominator != 1:
            raise NonIntegerResult("Non-integral multiplicity {0} at {1}".format(value, weight))
        self.cache[weight] = int(value)
        self.log.debug("Multiplicity of {0} in V{1}: {2}".format(weight, self.highest, value))
        return int(value)


def weight_multiplicity(lam, mu, cartan):
    """
    dim of the mu-weight space of the simple module with highest weight lam

    >>> from coulomb.quiver import CartanMatrix
    >>> weight_multiplicity(WeightVector([2]), WeightVector([0]), CartanMatrix([[2]]))
    1
    """
    return Freudenthal(lam, cartan).multiplicity(mu.fundamental(cartan))
