#!/usr/bin/env python
# vim: set ts=4:sw=4:expandtab:

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

from setuptools import setup

vstr = '0.1.0'
try:
    with open('debian/changelog') as f:
        qstr = f.readline()
    vstr = '.'.join(qstr.split()[1].strip("()").split(".")[:3])
except Exception:
    pass

setup(name='coulomb',
      version=vstr,
      description='Monopole formula engine for Coulomb branches of quiver gauge theories and batch tools',
      package_dir={'coulomb': 'coulomb',
                   'coulomb_batch': 'batch/coulomb_batch',
                   'coulomb_batch.utils': 'batch/coulomb_batch/utils'},
      packages=['coulomb',
                'coulomb_batch',
                'coulomb_batch.utils'],
      data_files=[('bin', ['batch/coulomb_run']),
                  ('share/coulomb/schemas', ['schemas/quiver.v1.json',
                                             'schemas/theory.v1.json',
                                             'schemas/slice.v1.json',
                                             'schemas/envelope.v1.json'])],
      python_requires='>=3.8',
      install_requires=['sympy>=1.12', 'msgpack>=1.0'],
      extras_require={'tests': ['pytest', 'pytest-mock', 'mock']},
      license='GPLv2')
