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
import multiprocessing.dummy
import os
import sys

import mock

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))

sys.path.insert(0, "")  # for running from the source tree
sys.path.insert(0, os.path.join(ROOT, 'batch'))
sys.path.insert(0, ROOT)

import pytest

from coulomb.gauge import FramedTheory
from coulomb.quiver import Quiver

EXAMPLES = os.path.join(ROOT, 'example')


def pytest_addoption(parser):
    parser.addoption('--seed', action='store', default=20240501,
                     help='Seed of randomized property tests')
    parser.addoption('--random-cases', action='store', default=100,
                     help='Number of cases in randomized property tests')


def example(name):
    """Path to a shipped example document"""
    return os.path.join(EXAMPLES, name)


def chain(n):
    """A_n quiver 1 -> 2 -> ... -> n"""
    return Quiver(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def a1_theory(dimW=2):
    return FramedTheory(chain(1), [1], [dimW])


@pytest.fixture(scope="class", autouse=True)
def scope():
    '''
    Scope fixture for sharing info between test cases.
    '''
    class Scope():
        def __repr__(self):
            return '{0}'.format(vars(self))
    return Scope()


@pytest.fixture(scope='session')
def seed(request):
    return int(request.config.option.seed)


@pytest.fixture(scope='session')
def random_cases(request):
    return int(request.config.option.random_cases)


@pytest.fixture()
def mock_pool(mocker):
    """Mock multiprocessing.Pool and use multiprocessing.dummy.Pool instead

    By this mock we avoid creating sub-processes. Every call gets a fresh pool
    since ordered_map closes the pool it was given.
    """
    mocker.patch('multiprocessing.Pool',
                 mock.MagicMock(side_effect=lambda *args, **kwargs: multiprocessing.dummy.Pool(2)))
