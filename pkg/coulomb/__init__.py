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

from coulomb.config import Config
from coulomb.enumeration import enumerate_dominant, enumerate_partition_tuples, properness_check, GoodnessReport
from coulomb.engine import SliceLabel, slice_to_theory, theory_to_slice, slice_dimension, uhlenbeck_slice
from coulomb.engine import hilbert_eq1, hilbert_slice_eq2, hilbert_affine_slice, character_zastava_eq3
from coulomb.engine import leaf_interval
from coulomb.error import Error, DomainError, InputError
from coulomb.freudenthal import weight_multiplicity
from coulomb.gauge import FramedTheory, Coweight, Grading, ExponentFunction
from coulomb.gauge import d_theta, two_rho_pairing, det_character, exponent, exponent_function, casimir_series
from coulomb.quiver import Quiver, CartanMatrix, cartan_matrix, fold
from coulomb.series import TruncatedSeries, series_mul, expand_inverse_product, growth_dimension_estimate
from coulomb.weight import WeightVector, AffineWeight, BilinearForm, AffineRootDatum
from coulomb.weight import dominance_leq, dominant_conjugate, affine_dominant, orbit_representative
from coulomb.weight import instanton_number, positive_roots, highest_root

__version__ = '0.1.0'
__license__ = "GPLv2"
