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

import itertools
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, "")  # for running from the source tree

import oracle
from conftest import a1_theory
from conftest import chain
from coulomb.error import MissingAlpha
from coulomb.error import NotDominant
from coulomb.error import SchemaError
from coulomb.error import ShapeMismatch
from coulomb.gauge import casimir_degrees
from coulomb.gauge import casimir_series
from coulomb.gauge import Coweight
from coulomb.gauge import d_theta
from coulomb.gauge import det_character
from coulomb.gauge import exponent
from coulomb.gauge import exponent_function
from coulomb.gauge import FramedTheory
from coulomb.gauge import Grading
from coulomb.gauge import two_rho_pairing
from coulomb.quiver import Quiver


def random_theory(rng, max_vertices=3, max_rank=3, framing=True):
    n = rng.randint(1, max_vertices)
    arrows = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j and rng.random() < 0.3]
    quiver = Quiver(range(1, n + 1), arrows)
    dimV = [0] * n
    for _ in range(rng.randint(1, max_rank)):
        dimV[rng.randrange(n)] += 1
    dimW = [rng.randint(0, 3) if framing else 0 for _ in range(n)]
    return FramedTheory(quiver, dimV, dimW)


def random_coweight(rng, dimV, low=-3, high=3):
    return Coweight([sorted((rng.randint(low, high) for _ in range(v)), reverse=True) for v in dimV])


class TestFramedTheory:
    def test_dump(self):
        T = FramedTheory(chain(2), [1, 1], [1, 0], splitting=[[1, 0]])
        assert FramedTheory.from_dict(T.dump_to_dict()) == T
        assert T.rank == 2
        assert T.offsets() == [0, 1]

    def test_shape_errors(self):
        with pytest.raises(ShapeMismatch):
            FramedTheory(chain(2), [1])
        with pytest.raises(ShapeMismatch):
            FramedTheory(chain(2), [1, -1])
        with pytest.raises(ShapeMismatch):
            FramedTheory(chain(2), [1, 1], [1, 1], splitting=[[1, 0]])

    def test_schema_error(self):
        with pytest.raises(SchemaError):
            FramedTheory.from_dict({'vertices': [1], 'arrows': []})


class TestCoweight:
    def test_flat(self):
        theta = Coweight.from_flat([2, 1], (3, 1, -2))
        assert theta.parts == ((3, 1), (-2,))
        assert theta.bar() == (4, -2)
        assert theta.is_dominant()
        assert not theta.is_partition_tuple()
        with pytest.raises(ShapeMismatch):
            Coweight.from_flat([2], (1, 2, 3))

    def test_stabilizer(self):
        assert Coweight([(2, 2, 1), (0, 0)]).stabilizer_blocks() == (1, 2, 2)
        assert casimir_degrees(Coweight([(0, 0)])) == [1, 2]


class TestDTheta:
    def test_zero(self):
        assert d_theta(a1_theory(), Coweight.zero([1])) == 0

    def test_framing(self):
        assert d_theta(a1_theory(), Coweight([(-3,)])) == 6

    def test_arrow(self):
        T = FramedTheory(chain(2), [1, 1])
        assert d_theta(T, Coweight([(1,), (0,)])) == 1
        assert d_theta(T, Coweight([(0,), (1,)])) == 0

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            d_theta(a1_theory(), Coweight([(1, 0)]))

    def test_homogeneous(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            T = random_theory(rng)
            theta = random_coweight(rng, T.dimV)
            m = rng.randint(0, 4)
            scaled = Coweight([[m * x for x in part] for part in theta.parts])
            assert d_theta(T, scaled) == m * d_theta(T, theta)

    def test_matches_matter_weights(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            T = random_theory(rng)
            theta = random_coweight(rng, T.dimV)
            expected = sum(max(-oracle.pairing(chi, theta.parts), 0) for chi in oracle.matter_weights(T))
            assert d_theta(T, theta) == expected


class TestTwoRho:
    def test_examples(self):
        assert two_rho_pairing(Coweight([(5,), (-2,)])) == 0
        assert two_rho_pairing(Coweight([(3, 1)])) == 2
        assert two_rho_pairing(Coweight([(4, 4, 4)])) == 0
        assert two_rho_pairing(Coweight([(2, 0, -1)])) == 6

    def test_not_dominant(self):
        with pytest.raises(NotDominant):
            two_rho_pairing(Coweight([(1, 3)]))


class TestDetCharacter:
    def test_examples(self):
        assert det_character(FramedTheory(Quiver([1, 2]), [1, 1])) == (0, 0)
        assert det_character(FramedTheory(chain(2), [1, 1])) == (-1, 1)
        assert det_character(FramedTheory(Quiver([1, 2], [(1, 2), (1, 2)]), [1, 1])) == (-2, 2)

    def test_pairing_identity(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            T = random_theory(rng)
            theta = random_coweight(rng, T.dimV)
            D = det_character(T)
            expected = sum(oracle.pairing(chi, theta.parts) for chi in oracle.matter_weights(T, framing=False))
            assert sum(d * b for d, b in zip(D, theta.bar())) == expected


class TestExponent:
    def test_zero(self):
        T = a1_theory()
        for grading in (Grading.homological(), Grading.loop([1]), Grading.character([1])):
            assert exponent(T, grading, Coweight.zero([1])) == 0

    @pytest.mark.parametrize('n, expected', [(-2, 2), (2, 2), (0, 0), (7, 7)])
    def test_a1_loop(self, n, expected):
        assert exponent(a1_theory(), Grading.loop([1]), Coweight([(n,)])) == 2 * expected

    def test_a1_homological(self):
        assert exponent(a1_theory(), Grading.homological(), Coweight([(5,)])) == 0
        assert exponent(a1_theory(), Grading.homological(), Coweight([(-5,)])) == 20

    def test_character_drops_framing(self):
        assert exponent(a1_theory(), Grading.character([1]), Coweight([(-2,)])) == -4

    def test_errors(self):
        T = a1_theory()
        with pytest.raises(MissingAlpha):
            exponent(T, Grading(Grading.loop([1]).kind), Coweight([(1,)]))
        with pytest.raises(ShapeMismatch):
            exponent(T, Grading.loop([1, 1]), Coweight([(1,)]))
        with pytest.raises(NotDominant):
            exponent(FramedTheory(chain(1), [2], [2]), Grading.homological(), Coweight([(0, 1)]))
        with pytest.raises(SchemaError):
            Grading('unknown')

    def test_det_sign(self):
        T = FramedTheory(chain(2), [1, 1], [1, 1])
        theta = Coweight([(1,), (0,)])
        plus = exponent(T, Grading.loop([1, 1], det_sign=1), theta)
        minus = exponent(T, Grading.loop([1, 1], det_sign=-1), theta)
        assert plus - minus == 2 * -1

    def test_matches_oracle(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            T = random_theory(rng)
            alpha = [rng.randint(0, 2) for _ in T.dimV]
            theta = random_coweight(rng, T.dimV)
            for kind in ('homological', 'loop', 'character'):
                grading = Grading(kind, alpha if kind != 'homological' else None)
                assert exponent(T, grading, theta) == oracle.doubled_exponent(T, theta.parts, kind, alpha)

    def test_loop_minus_homological_is_linear(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            T = random_theory(rng)
            alpha = [rng.randint(0, 2) for _ in T.dimV]
            difference = exponent_function(T, Grading.loop(alpha)).linear
            base = exponent_function(T, Grading.homological()).linear
            c_alpha = T.cartan().apply(alpha)
            D = det_character(T)
            offsets = T.offsets()
            for j, v in enumerate(T.dimV):
                for a in range(v):
                    i = offsets[j] + a
                    assert difference[i] - base[i] == Fraction(c_alpha[j] + D[j], 2)

    def test_half_integers(self):
        T = FramedTheory(Quiver([0, 1], [(0, 1), (1, 0)]), [1, 1], [1, 0])
        fn = exponent_function(T, Grading.loop([1, 1], shift=[1, 0]))
        assert fn.evaluate((1, 0)) == Fraction(3, 2)
        assert fn.doubled((1, 0)) == 3
        assert fn.is_convex()


class TestCasimir:
    def test_distinct(self):
        series = casimir_series(Coweight([(3, 1), (0,)]), 3)
        assert series.t_coefficients(2) == [1, 3, 6, 10]

    def test_repeated(self):
        assert casimir_series(Coweight([(0, 0)]), 4).t_coefficients(2) == [1, 1, 2, 2, 3]

    def test_order_zero(self):
        assert casimir_series(Coweight([(1, 1, 1)]), 0).t_coefficients(2) == [1]

    def test_not_dominant(self):
        with pytest.raises(NotDominant):
            casimir_series(Coweight([(0, 1)]), 2)

    @pytest.mark.parametrize('dimV', [[1], [2], [3], [2, 1]])
    def test_partition_counting(self, dimV):
        order = 5
        for parts in oracle.ball(dimV, 2):
            coefficients = casimir_series(Coweight(parts), order).t_coefficients(2)
            degrees = oracle.stabilizer_degrees(parts)
            assert coefficients == [oracle.count_solutions(degrees, n) for n in range(order + 1)]
