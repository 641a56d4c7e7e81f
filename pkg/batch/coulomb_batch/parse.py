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
Parsers of human readable command line values: weight expressions,
affine weights, integer vectors and permutations.
"""

import re
from fractions import Fraction

from coulomb.weight import AffineWeight
from coulomb.weight import FUNDAMENTAL
from coulomb.weight import WeightVector

TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+(/\d+)?)?\s*\*?\s*(?P<kind>[wa])?(?P<index>\d+)?\s*")


def parse_weight(string, cartan):
    """
    Parses a weight expression into fundamental coordinates over @cartan.

    Terms are combined by + and -: "w3" is the third fundamental weight,
    "a1" the first simple root, "w" alone is allowed in rank one and "0" is
    the zero weight. Comma separated numbers are fundamental coordinates.

    >>> parse_weight("w1+w2", CartanMatrix([[2, -1], [-1, 2]])).coords
    (1, 1)
    >>> parse_weight("a1", CartanMatrix([[2, -1], [-1, 2]])).coords
    (2, -1)
    """
    rank = cartan.rank
    coords = [Fraction(0)] * rank
    string = string.strip()
    if not string:
        raise ValueError("Empty weight expression")
    if re.match(r"^-?\d+(/\d+)?(\s*,\s*-?\d+(/\d+)?)+$", string) or (rank == 1 and re.match(r"^-?\d+$", string)):
        values = [Fraction(x) for x in string.split(',')]
        if len(values) != rank:
            raise ValueError("Expected {0} coordinates, got {1}".format(rank, len(values)))
        return WeightVector(values, FUNDAMENTAL)

    pos = 0
    while pos < len(string):
        match = TERM.match(string, pos)
        if not match or match.end() == pos:
            raise ValueError("Can't parse weight expression at {0}: '{1}'".format(pos, string))
        if pos and not match.group('sign'):
            raise ValueError("Missing sign before term at {0}: '{1}'".format(pos, string))
        pos = match.end()
        coeff = Fraction(match.group('coeff') or 1)
        if match.group('sign') == '-':
            coeff = -coeff
        kind = match.group('kind')
        if kind is None:
            if match.group('index') or Fraction(match.group('coeff') or 1) != 0:
                raise ValueError("Bare number in weight expression: '{0}'".format(string))
            continue
        if match.group('index') is None:
            if rank != 1:
                raise ValueError("'{0}' needs an index in rank {1}".format(kind, rank))
            index = 0
        else:
            index = int(match.group('index')) - 1
        if not 0 <= index < rank:
            raise ValueError("Index {0} out of range 1..{1}".format(index + 1, rank))
        if kind == 'w':
            coords[index] += coeff
        else:
            for i, c in enumerate(cartan.column(index)):
                coords[i] += coeff * c
    return WeightVector(coords, FUNDAMENTAL)


def parse_affine_weight(string, finite_cartan):
    """
    Parses "level;finite expression;energy", energy may be omitted

    >>> parse_affine_weight("1;0;0", CartanMatrix([[2]])).level
    1
    """
    parts = [p.strip() for p in string.split(';')]
    if len(parts) not in (2, 3):
        raise ValueError("Affine weight should look like 'k;expr;n': '{0}'".format(string))
    level = int(parts[0])
    energy = Fraction(parts[2]) if len(parts) == 3 and parts[2] else 0
    return AffineWeight(level, parse_weight(parts[1], finite_cartan), energy)


def parse_vector(string):
    """
    Comma separated nonempty list of integers

    >>> parse_vector("1, 0,2")
    [1, 0, 2]
    """
    values = [x.strip() for x in string.split(',')]
    if not all(values):
        raise ValueError("Empty entry in '{0}'".format(string))
    return [int(x) for x in values]


def _vertex(token):
    return int(token) if re.match(r"^-?\d+$", token) else token


def parse_sigma(string):
    """
    Vertex images in vertex order, comma separated. Numeric vertex ids are
    converted to ints to match quiver JSON.

    >>> parse_sigma("3,2,1")
    [3, 2, 1]
    """
    values = [x.strip() for x in string.split(',')]
    if not all(values):
        raise ValueError("Empty entry in '{0}'".format(string))
    return [_vertex(x) for x in values]
