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

import sys
from fractions import Fraction

import pytest

sys.path.insert(0, "")  # for running from the source tree

from conftest import chain
from coulomb.quiver import cartan_matrix
from coulomb.quiver import CartanMatrix
from coulomb_batch.parse import parse_affine_weight
from coulomb_batch.parse import parse_sigma
from coulomb_batch.parse import parse_vector
from coulomb_batch.parse import parse_weight

A1 = CartanMatrix([[2]])
A2 = cartan_matrix(chain(2))


class TestParseWeight:
    @pytest.mark.parametrize('cartan, string, expected', [
        (A2, 'w1+w2', (1, 1)),
        (A2, 'a1', (2, -1)),
        (A2, 'a1 + a2', (1, 1)),
        (A2, '2w1 - w2', (2, -1)),
        (A2, '0', (0, 0)),
        (A2, '1,-1', (1, -1)),
        (A1, '2w', (2,)),
        (A1, 'w', (1,)),
        (A1, '-2', (-2,)),
        (A1, 'a', (2,)),
        (A1, '1/2w', (Fraction(1, 2),)),
        (A1, '2*w1', (2,)),
    ])
    def test_examples(self, cartan, string, expected):
        assert parse_weight(string, cartan).coords == expected

    @pytest.mark.parametrize('cartan, string', [
        (A2, ''),
        (A2, 'w'),
        (A2, 'w3'),
        (A2, 'w1 w2'),
        (A2, '3'),
        (A2, '1,2,3'),
        (A2, 'x1'),
    ])
    def test_errors(self, cartan, string):
        with pytest.raises(ValueError):
            parse_weight(string, cartan)


class TestParseAffineWeight:
    def test_full(self):
        weight = parse_affine_weight('1;2w;-1', A1)
        assert weight.level == 1
        assert weight.finite.coords == (2,)
        assert weight.energy == -1

    def test_energy_omitted(self):
        assert parse_affine_weight('2;w1+w2', A2).energy == 0
        assert parse_affine_weight('2;w1+w2;', A2).energy == 0

    def test_fractional_energy(self):
        assert parse_affine_weight('1;0;1/2', A1).energy == Fraction(1, 2)

    @pytest.mark.parametrize('string', ['1', '1;0;0;0', 'k;0;0'])
    def test_errors(self, string):
        with pytest.raises(ValueError):
            parse_affine_weight(string, A1)


class TestParseVector:
    def test_examples(self):
        assert parse_vector('1, 0,2') == [1, 0, 2]
        assert parse_vector('3') == [3]

    @pytest.mark.parametrize('string', ['', '1,,2', '1,x'])
    def test_errors(self, string):
        with pytest.raises(ValueError):
            parse_vector(string)


class TestParseSigma:
    def test_numeric(self):
        assert parse_sigma('3,2,1') == [3, 2, 1]

    def test_names(self):
        assert parse_sigma('b, a') == ['b', 'a']

    def test_errors(self):
        with pytest.raises(ValueError):
            parse_sigma('1,,2')
