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
Job context is just a configuration of one batch computation
"""

import json
from pprint import pformat

# fields that never change results; config enters the key through its dump
VOLATILE_FIELDS = ('nprocess', 'processes', 'output', 'cache_dir', 'stats', 'config', 'stat_format')


class Ctx(object):
    """
    Tiny wrapper for dict with better interface:
    Now you can use ctx.order = 6, instead of ctx['order'] = 6
    """
    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def __repr__(self):
        return pformat(self.__dict__, indent=4)


class JobSpec(Ctx):
    """
    Context of one command: command name, input paths, truncation order,
    units flag, optional radius override and the command specific options.
    """
    def __init__(self, command, inputs=None, order=0, units='half', radius=None,
                 nprocess=1, output=None, options=None, **kwargs):
        super(JobSpec, self).__init__(command=command,
                                      inputs=dict(inputs or {}),
                                      order=order,
                                      units=units,
                                      radius=radius,
                                      nprocess=nprocess,
                                      output=output,
                                      options=dict(options or {}),
                                      **kwargs)
        if self.order < 0:
            raise ValueError("Order should be nonnegative: {0}".format(self.order))

    def canonical(self):
        """Everything that determines the results, as plain data"""
        result = {k: v for k, v in sorted(self.__dict__.items()) if k not in VOLATILE_FIELDS}
        if getattr(self, 'config', None) is not None:
            result['config'] = self.config.dump_to_dict()
        return result

    def canonical_json(self):
        return json.dumps(self.canonical(), sort_keys=True, separators=(',', ':'), ensure_ascii=True)
