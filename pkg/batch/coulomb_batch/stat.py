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
Stats for humans (c)
Simple and Python-ish interface to stats of one evaluation.
Counters are deterministic for given inputs, timers are not.
"""

import itertools
import json
from collections import OrderedDict
from datetime import datetime


def format_kv(k, v):
    """Formats one line of stats output"""
    return '{0:<50}{1:>30}'.format(k + ':', str(v))


class ResultCounter(object):
    """
    Counter of events.

    Use += to count processed items, -= to count rejected ones.
    >>> rc = ResultCounter('points')
    >>> rc += 10
    >>> rc -= 2
    >>> rc.total
    12
    """

    def __init__(self, name, success=0, failures=0):
        self.name = name
        self.success = success
        self.failures = failures

    def __iadd__(self, other):
        self.success += other
        return self

    def __isub__(self, other):
        self.failures += other
        return self

    @property
    def total(self):
        return self.failures + self.success

    def __str__(self):
        if not self.failures:
            return format_kv(self.name, self.success)
        return "\n".join((format_kv(self.name + '_success', self.success),
                          format_kv(self.name + '_failures', self.failures),
                          format_kv(self.name + '_total', self.total)))

    def dump_to_dict(self):
        if not self.failures:
            return self.success
        return OrderedDict((('successes', self.success),
                            ('failures', self.failures),
                            ('total', self.total)))


class DurationTimer(object):
    """
    Milestones of an evaluation.

    >>> dt = DurationTimer('evaluate')
    >>> dt('enumerate')
    >>> dt('sum')
    >>> len(dt.dump_to_dict())
    3
    """

    def __init__(self, name):
        self.name = name
        self.times = []

    def __call__(self, name=None, ts=None):
        self.times.append((name, ts or datetime.now()))

    def elapsed(self):
        if len(self.times) < 2:
            return 0.0
        return (self.times[-1][1] - self.times[0][1]).total_seconds()

    def intervals(self):
        for (begin_name, begin_time), (end_name, end_time) in zip(self.times, self.times[1:]):
            yield '{0}...{1}'.format(begin_name, end_name), end_time - begin_time

    def __str__(self):
        if not self.times:
            return ""
        return "\n".join(format_kv('{0}_{1}'.format(self.name, name), delta)
                         for name, delta in self.intervals())

    def dump_to_dict(self):
        if not self.times:
            return
        result = OrderedDict()
        result[str(self.times[0][0])] = str(self.times[0][1])
        for (name, delta), (end_name, end_time) in zip(self.intervals(), self.times[1:]):
            result[name] = str(delta)
            result[str(end_name)] = str(end_time)
        return result


class AttributeContainer(object):
    """
    Values collected under one name.

    >>> ac = AttributeContainer('verdict')
    >>> ac.append('Proper')
    >>> ac.dump_to_dict()
    'Proper'
    """
    def __init__(self, name):
        self.name = name
        self.attributes = []

    def append(self, value):
        self.attributes.append(value)

    def dump_to_dict(self):
        if not self.attributes:
            return
        elif len(self.attributes) == 1:
            return self.attributes[0]
        return list(self.attributes)

    def __str__(self):
        dump = self.dump_to_dict()
        return format_kv(self.name, dump) if dump is not None else ''


class Container(object):
    """
    Container class which creates instance of provided `klass` on attribute access.
    """

    def __init__(self, klass, *args, **kwargs):
        self.__klass = klass
        self.__args = args
        self.__kwargs = kwargs
        self.__container = dict()

    def __getattr__(self, item):
        if item.startswith('_'):
            raise AttributeError("Attribute not found: {0}".format(item))
        if item not in self.__container:
            self.__container[item] = self.__klass(*self.__args, name=item, **self.__kwargs)
        return self.__container[item]

    def __setattr__(self, key, value):
        if not key.startswith('_'):
            self.__container[key] = value
        else:
            self.__dict__[key] = value

    def __iter__(self):
        return iter(sorted(self.__container.items()))

    def __len__(self):
        return len(self.__container)


class Stats(object):
    """
    Very simple statistics with nesting.

    >>> stats = Stats('slice')
    >>> stats.counter.points_enumerated += 5
    >>> stats['properness'].attributes.verdict.append('Proper')
    >>> stats.dump_to_dict(timers=False)['points_enumerated']
    5
    """

    def __init__(self, name=None):
        self.name = name
        self.counter = Container(ResultCounter)
        self.timer = Container(DurationTimer)
        self.attributes = Container(AttributeContainer)
        self.__sub_stats = Container(Stats)

    def __containers(self, timers=True):
        return itertools.chain(self.counter, self.timer if timers else (), self.attributes, self.__sub_stats)

    def __str__(self):
        result = ["{0:=^80}".format(" " + str(self.name) + " ")]
        for _, v in self.__containers():
            text = str(v)
            if text:
                result.append(text)
        return "\n".join(result)

    def dump_to_dict(self, timers=True):
        result = OrderedDict()
        for name, v in self.__containers(timers):
            if isinstance(v, Stats):
                result[name] = v.dump_to_dict(timers)
            else:
                result[name] = v.dump_to_dict()
        return result

    def json(self, timers=True):
        return json.dumps(self.dump_to_dict(timers), sort_keys=False,
                          indent=4, separators=(',', ': '))

    def __getitem__(self, item):
        return getattr(self.__sub_stats, str(item))

    def __setitem__(self, key, value):
        setattr(self.__sub_stats, key, value)
