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

import json
import random
import sys

import pytest

sys.path.insert(0, "")  # for running from the source tree

import coulomb.engine
import oracle
from conftest import chain
from conftest import example
from coulomb.config import Config
from coulomb.engine import AFFINE
from coulomb.engine import affine_slice_evaluation
from coulomb.engine import character_zastava_eq3
from coulomb.engine import eq1_evaluation
from coulomb.engine import FINITE
from coulomb.engine import hilbert_affine_slice
from coulomb.engine import hilbert_eq1
from coulomb.engine import hilbert_slice_eq2
from coulomb.engine import leaf_interval
from coulomb.engine import slice_dimension
from coulomb.engine import slice_evaluation
from coulomb.engine import slice_to_theory
from coulomb.engine import SliceLabel
from coulomb.engine import theory_to_slice
from coulomb.engine import uhlenbeck_slice
from coulomb.engine import zastava_evaluation
from coulomb.error import MissingEnergyBound
from coulomb.error import NegativeAlpha
from coulomb.error import NonComparable
from coulomb.error import NotAffineDominant
from coulomb.error import NotDominant
from coulomb.error import NotProper
from coulomb.error import SchemaError
from coulomb.gauge import FramedTheory
from coulomb.quiver import Quiver
from coulomb.series import expand_inverse_product
from coulomb.series import growth_dimension_estimate
from coulomb.series import TruncatedSeries
from coulomb.weight import AffineWeight
from coulomb.weight import FUNDAMENTAL
from coulomb.weight import WeightVector
from coulomb_batch.stat import Stats

AFFINE_A1 = Quiver([0, 1], [(0, 1), (1, 0)])


def w(*coords):
    return WeightVector(coords, FUNDAMENTAL)


def load(name):
    with open(example(name)) as f:
        return json.load(f)


def finite_slice(quiver, lam, mu):
    return SliceLabel(FINITE, quiver, w(*lam), w(*mu))


def affine_slice(quiver, lam, mu):
    return SliceLabel(AFFINE, quiver, AffineWeight(*lam), AffineWeight(*mu))


def random_finite_slice(rng, max_rank=3, max_total=3):
    """Slice of chain(n) with mu = lambda - C alpha dominant and |alpha| <= max_total"""
    while True:
        n = rng.randint(1, max_rank)
        alpha = [rng.randint(0, 2) for _ in range(n)]
        if not any(alpha) or sum(alpha) > max_total:
            continue
        lam = [rng.randint(0, 3) for _ in range(n)]
        mu = [lam[i] - 2 * alpha[i] + (alpha[i - 1] if i > 0 else 0) + (alpha[i + 1] if i < n - 1 else 0)
              for i in range(n)]
        if all(m >= 0 for m in mu):
            return finite_slice(chain(n), lam, mu)


def dense(coefficients, order):
    return TruncatedSeries.from_coefficients(coefficients, order=order)


class TestSliceDictionary:
    def test_a1(self):
        s = SliceLabel.from_dict(load('a1_slice.json'))
        T = slice_to_theory(s)
        assert T.dimV == (1,)
        assert T.dimW == (2,)
        assert slice_dimension(s) == 2

    def test_a2(self):
        T = slice_to_theory(finite_slice(chain(2), (1, 1), (0, 0)))
        assert T.dimV == (1, 1)
        assert T.dimW == (1, 1)

    def test_folded(self):
        s = SliceLabel.from_dict(load('c2_slice.json'))
        T = slice_to_theory(s)
        assert T.dimV == (1, 1, 1)
        assert T.dimW == (1, 0, 1)
        assert slice_dimension(s) == 6

    def test_round_trip(self, seed, random_cases):
        rng = random.Random(seed)
        for _ in range(random_cases):
            n = rng.randint(1, 3)
            T = FramedTheory(chain(n), [rng.randint(0, 2) for _ in range(n)], [rng.randint(0, 3) for _ in range(n)])
            assert slice_to_theory(theory_to_slice(T)) == T

    def test_affine(self):
        s = SliceLabel.from_dict(load('affine_a1_slice.json'))
        T = slice_to_theory(s)
        assert T.dimV == (1, 1)
        assert T.dimW == (1, 0)
        assert theory_to_slice(T, AFFINE) == s

    def test_uhlenbeck(self):
        T = slice_to_theory(uhlenbeck_slice(AFFINE_A1, 2))
        assert T.dimV == (2, 2)
        assert T.dimW == (1, 0)
        assert slice_to_theory(uhlenbeck_slice(AFFINE_A1, 1, k=2)).dimW == (2, 0)

    def test_errors(self):
        with pytest.raises(NonComparable):
            slice_to_theory(finite_slice(chain(1), (0,), (2,)))
        with pytest.raises(NonComparable):
            slice_to_theory(finite_slice(chain(1), (1,), (0,)))
        with pytest.raises(NotDominant):
            slice_to_theory(finite_slice(chain(1), (-2,), (-2,)))
        with pytest.raises(NotAffineDominant):
            slice_to_theory(affine_slice(AFFINE_A1, (1, w(2), 0), (1, w(2), 0)))
        with pytest.raises(SchemaError):
            SliceLabel(FINITE, chain(1), AffineWeight(1, w(0)), AffineWeight(1, w(0)))
        with pytest.raises(SchemaError):
            SliceLabel.from_dict({'kind': FINITE, 'lambda': {'coords': [2]}})


class TestHilbertEq1:
    def test_empty_group(self):
        T = FramedTheory(chain(1), [0], [1])
        assert hilbert_eq1(T, 5) == TruncatedSeries.one(10)

    def test_unframed(self):
        with pytest.raises(NotProper):
            hilbert_eq1(FramedTheory(chain(2), [1, 1]), 3)

    def test_a1_radius_override(self):
        T = FramedTheory(chain(1), [1], [3])
        evaluation = eq1_evaluation(T, 4, radius=30)
        assert evaluation.radius == 30
        assert evaluation.report is None
        assert evaluation.series == oracle.series(T, 4, 30)


class TestHilbertSlice:
    def test_a1_regression(self):
        s = SliceLabel.from_dict(load('a1_slice.json'))
        series = hilbert_slice_eq2(s, 20)
        assert series.t_coefficients(2) == [2 * m + 1 for m in range(21)]

    def test_a1_order_six(self):
        s = finite_slice(chain(1), (2,), (0,))
        assert hilbert_slice_eq2(s, 6).t_coefficients(2) == [1, 3, 5, 7, 9, 11, 13]

    def test_equal_weights(self):
        assert hilbert_slice_eq2(finite_slice(chain(2), (1, 1), (1, 1)), 6) == TruncatedSeries.one(12)

    def test_a2_minimal_orbit(self):
        s = finite_slice(chain(2), (1, 1), (0, 0))
        assert hilbert_slice_eq2(s, 3).t_coefficients(2) == [1, 8, 27, 64]

    @pytest.mark.parametrize('quiver, lam, mu', [
        (chain(1), (4,), (0,)),
        (chain(1), (3,), (1,)),
        (chain(2), (2, 0), (0, 1)),
        (chain(2), (2, 2), (0, 0)),
    ])
    def test_matches_oracle(self, quiver, lam, mu):
        s = finite_slice(quiver, lam, mu)
        T = slice_to_theory(s)
        evaluation = slice_evaluation(s, 4)
        assert evaluation.series == oracle.series(T, 4, evaluation.radius + 2, 'loop', T.dimV)

    def test_random_slices_match_oracle(self, seed):
        rng = random.Random(seed)
        for _ in range(10):
            s = random_finite_slice(rng)
            T = slice_to_theory(s)
            evaluation = slice_evaluation(s, 8)
            assert evaluation.report.proper, s
            assert evaluation.series == oracle.series(T, 8, evaluation.radius + 2, 'loop', T.dimV), s

    def test_nondominant_mu(self):
        # lambda = w, mu = -w: one generator has t-degree 0
        s = finite_slice(chain(1), (1,), (-1,))
        T = slice_to_theory(s)
        assert T.dimV == (1,)
        assert T.dimW == (1,)
        with pytest.raises(NotProper):
            hilbert_slice_eq2(s, 8)
        evaluation = slice_evaluation(s, 8, radius=20)
        assert evaluation.series == oracle.series(T, 8, 20, 'loop', T.dimV)

    def test_refined_specializes(self):
        s = finite_slice(chain(2), (1, 1), (0, 0))
        refined = hilbert_slice_eq2(s, 6, refined=True)
        assert refined.nvars == 2
        assert refined.specialize_z() == hilbert_slice_eq2(s, 6)
        T = slice_to_theory(s)
        assert refined == oracle.series(T, 6, 8, 'loop', T.dimV, refined=True)

    def test_constant_term(self):
        for lam, mu in (((2,), (0,)), ((4,), (2,)), ((5,), (1,))):
            assert hilbert_slice_eq2(finite_slice(chain(1), lam, mu), 4).coefficient(0) == 1

    def test_folded(self):
        s = SliceLabel.from_dict(load('c2_slice.json'))
        evaluation = slice_evaluation(s, 4)
        assert evaluation.metadata['folding'] == [3, 2, 1]
        unfolded = finite_slice(chain(3), (1, 0, 1), (0, 0, 0))
        assert evaluation.series == hilbert_slice_eq2(unfolded, 4)

    def test_det_sign_metadata(self):
        s = finite_slice(chain(1), (2,), (0,))
        evaluation = slice_evaluation(s, 4, config=Config(det_sign=-1))
        assert evaluation.metadata['det_sign'] == -1
        # no arrows: the sign does not enter
        assert evaluation.series == hilbert_slice_eq2(s, 4)

    def test_stats(self):
        stats = Stats('slice')
        evaluation = slice_evaluation(finite_slice(chain(1), (2,), (0,)), 4, stats=stats)
        assert stats.counter.points_summed.success == evaluation.points
        assert stats.counter.points_enumerated.success == evaluation.points
        assert evaluation.dump_to_dict()['properness']['verdict'] == 'Proper'

    def test_summation_in_chunks(self, mocker):
        spy = mocker.spy(coulomb.engine, 'ordered_map')
        s = finite_slice(chain(2), (1, 1), (0, 0))
        evaluation = slice_evaluation(s, 4, config=Config(chunk_size=3))
        func, jobs = spy.call_args[0][:2]
        assert func is coulomb.engine._sum_chunk
        assert all(len(job[1]) == 3 for job in jobs[:-1])
        assert sum(len(job[1]) for job in jobs) == evaluation.points
        assert evaluation.series == hilbert_slice_eq2(s, 4)

    @pytest.mark.usefixtures('mock_pool')
    def test_processes(self):
        s = finite_slice(chain(2), (2, 2), (0, 0))
        serial = hilbert_slice_eq2(s, 6)
        parallel = hilbert_slice_eq2(s, 6, config=Config(chunk_size=1), processes=4)
        assert serial == parallel


class TestDimensionLaw:
    @pytest.mark.parametrize('quiver, lam, mu, expected', [
        (chain(1), (2,), (0,), 2),
        (chain(1), (4,), (0,), 4),
        (chain(1), (3,), (1,), 2),
        (chain(2), (1, 1), (0, 0), 4),
    ])
    def test_growth(self, quiver, lam, mu, expected):
        s = finite_slice(quiver, lam, mu)
        assert slice_dimension(s) == expected
        assert growth_dimension_estimate(hilbert_slice_eq2(s, 40)) == expected


class TestAffineSlice:
    def test_uhlenbeck_closed_form(self):
        s = SliceLabel.from_dict(load('affine_a1_slice.json'))
        # (1 + u^2) / ((1 - u)^2 (1 - u^2)^2) with u = t^(1/2)
        expected = dense([1, 0, 1], 12) * expand_inverse_product([1, 1, 2, 2], 12)
        assert hilbert_affine_slice(s, 6) == expected

    def test_matches_oracle(self):
        s = uhlenbeck_slice(AFFINE_A1, 1)
        T = slice_to_theory(s)
        assert hilbert_affine_slice(s, 6) == oracle.series(T, 6, 40, 'loop', T.dimV, shift=[1, 0])

    @pytest.mark.parametrize('d, k', [(1, 1), (2, 1), (1, 2), (2, 2)])
    def test_uhlenbeck_matches_oracle(self, d, k):
        s = uhlenbeck_slice(AFFINE_A1, d, k)
        T = slice_to_theory(s)
        assert T.dimV == (d, d)
        evaluation = affine_slice_evaluation(s, 8)
        assert evaluation.series == oracle.series(T, 8, evaluation.radius + 2, 'loop', T.dimV, shift=[k, 0])

    def test_metadata(self):
        evaluation = affine_slice_evaluation(uhlenbeck_slice(AFFINE_A1, 2), 2)
        assert evaluation.metadata['instanton_number'] == 2
        assert evaluation.metadata['energy_shift'] == 0
        assert evaluation.metadata['energy_convention'] == 'delta_energy=+1'

    def test_energy_normalization(self):
        s = uhlenbeck_slice(AFFINE_A1, 1)
        shifted = SliceLabel(AFFINE, AFFINE_A1, s.lam.shift_energy(3), s.mu.shift_energy(3))
        evaluation = affine_slice_evaluation(shifted, 4)
        assert evaluation.metadata['energy_shift'] == 3
        assert evaluation.series == hilbert_affine_slice(s, 4)

    def test_equal_weights(self):
        lam = (1, w(0), 0)
        assert hilbert_affine_slice(affine_slice(AFFINE_A1, lam, lam), 4) == TruncatedSeries.one(8)

    def test_without_level_term(self):
        with pytest.raises(NotProper):
            hilbert_affine_slice(uhlenbeck_slice(AFFINE_A1, 1), 4, config=Config(level_term=False))

    def test_not_dominant(self):
        with pytest.raises(NotAffineDominant):
            hilbert_affine_slice(affine_slice(AFFINE_A1, (1, w(2), 0), (1, w(2), 0)), 4)

    def test_kind(self):
        with pytest.raises(SchemaError):
            hilbert_affine_slice(finite_slice(chain(1), (2,), (0,)), 4)
        with pytest.raises(SchemaError):
            hilbert_slice_eq2(uhlenbeck_slice(AFFINE_A1, 1), 4)


class TestZastava:
    def test_a1_closed_form(self):
        series = character_zastava_eq3(chain(1), [1], 10)
        # 1 / ((1 - t)(1 - z t))
        expected = TruncatedSeries({(2 * m, (n,)): 1 for m in range(11) for n in range(m + 1)}, order=20, nvars=1)
        assert series == expected

    def test_a2_matches_oracle(self):
        T = FramedTheory(chain(2), [1, 1])
        series = character_zastava_eq3(chain(2), [1, 1], 4)
        assert series == oracle.series(T, 4, 8, 'character', [1, 1], partitions=True, refined=True)

    def test_a1_degree_two(self):
        T = FramedTheory(chain(1), [2])
        evaluation = zastava_evaluation(chain(1), [2], 5)
        assert evaluation.domain == 'partitions'
        assert evaluation.series == oracle.series(T, 5, 10, 'character', [2], partitions=True, refined=True)

    def test_zero(self):
        series = character_zastava_eq3(chain(2), [0, 0], 5)
        assert series.terms == {(0, (0, 0)): 1}

    def test_negative(self):
        with pytest.raises(NegativeAlpha):
            character_zastava_eq3(chain(1), [-1], 3)


class TestLeafInterval:
    def test_a1(self):
        interval = leaf_interval(finite_slice(chain(1), (4,), (0,)))
        assert interval.weights == [w(0), w(2), w(4)]
        assert not interval.truncated

    def test_a2(self):
        interval = leaf_interval(finite_slice(chain(2), (1, 1), (0, 0)))
        assert interval.weights == [w(0, 0), w(1, 1)]

    def test_folded(self):
        interval = leaf_interval(SliceLabel.from_dict(load('c2_slice.json')))
        assert interval.weights == [w(0, 0), w(1, 0)]

    def test_affine(self):
        s = uhlenbeck_slice(AFFINE_A1, 1)
        interval = leaf_interval(s, energy_bound=1)
        assert interval.weights == [s.lam, s.mu]
        assert not interval.truncated
        interval = leaf_interval(s, energy_bound=0)
        assert interval.weights == [s.lam]
        assert interval.truncated

    def test_missing_bound(self):
        with pytest.raises(MissingEnergyBound):
            leaf_interval(uhlenbeck_slice(AFFINE_A1, 1))
