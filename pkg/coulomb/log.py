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

import logging
import sys

log = logging.getLogger("coulomb")

formatter = logging.Formatter(
    fmt="%(asctime)s.%(msecs)-6d %(thread)d/%(process)d %(levelname)s: %(message)s,"
        " attrs: ['thread': '%(threadName)s', process': '%(processName)s']",
    datefmt='%F %R:%S')

# verbosity names accepted by -L/--log-level, index is the numeric level
LOG_LEVELS = ('debug', 'info', 'notice', 'warning', 'error')


def logged_class(klass):
    """
    This decorator adds 'log' attribute to passed class
    """
    klass.log = logging.getLogger("coulomb." + klass.__name__)
    return klass


def convert_log_level(level):
    '''
    Converts numeric (0..4) or named verbosity into logging log level
    '''
    if isinstance(level, str):
        level = level.strip().lower()
        if level.isdigit():
            level = int(level)
        elif level in LOG_LEVELS:
            level = LOG_LEVELS.index(level)
        else:
            raise ValueError("Unknown log level: '{0}', allowed: {1}".format(level, LOG_LEVELS))

    if level <= 0:
        return logging.DEBUG
    elif level <= 2:
        return logging.INFO
    elif level <= 3:
        return logging.WARNING
    else:
        return logging.ERROR


def init_logger(level=logging.ERROR):
    log.setLevel(level)
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(formatter)
    ch.setLevel(level)
    log.addHandler(ch)
    return ch
