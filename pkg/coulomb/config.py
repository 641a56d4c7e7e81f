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
Library defaults that can be overridden per evaluation
"""

import os


class Config(object):
    """
    Config allows override default behaviour of the engine.

    >>> cfg = Config(radius_cap=100)
    >>> cfg.cone_cap
    1000000
    """
    cone_cap = 10 ** 6
    radius_cap = 2000
    # sign of the determinant character term in loop/character gradings
    det_sign = 1
    # central term k/2 * theta_bar at the affine vertex for affine slices
    level_term = True
    nprocess = None
    chunk_size = 64

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            if not hasattr(type(self), key):
                raise AttributeError("Unknown config option: {0}".format(key))
            setattr(self, key, value)
        if self.det_sign not in (1, -1):
            raise ValueError("det_sign should be 1 or -1: {0}".format(self.det_sign))

    @classmethod
    def from_env(cls, environ=None, **kwargs):
        environ = os.environ if environ is None else environ
        for key, name in (('nprocess', 'COULOMB_NPROCESS'),
                          ('cone_cap', 'COULOMB_CONE_CAP'),
                          ('radius_cap', 'COULOMB_RADIUS_CAP')):
            if key not in kwargs and environ.get(name):
                try:
                    kwargs[key] = int(environ[name])
                except ValueError as e:
                    raise ValueError("Can't parse {0}: '{1}': {2}".format(name, environ[name], repr(e)))
        return cls(**kwargs)

    @property
    def processes(self):
        if self.nprocess:
            return max(1, int(self.nprocess))
        return os.cpu_count() or 1

    def dump_to_dict(self):
        return {'cone_cap': self.cone_cap,
                'radius_cap': self.radius_cap,
                'det_sign': self.det_sign,
                'level_term': self.level_term}

    def __repr__(self):
        return '<Config: {0}>'.format(self.dump_to_dict())


default = Config()
