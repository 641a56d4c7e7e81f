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
Misc. routines shared by the engine and the batch tool
"""

import logging
import multiprocessing

log = logging.getLogger(__name__)


def worker_init():
    """Do not catch Ctrl+C in worker"""
    from signal import signal, SIGINT, SIG_IGN
    signal(SIGINT, SIG_IGN)


def ordered_map(func, items, processes=1, chunk_size=1):
    """
    Maps @func over @items preserving order, in a process pool when
    @processes > 1. @func should be a picklable top-level function.
    """
    items = list(items)
    if processes <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    log.debug("Creating pool of processes: %d", processes)
    pool = multiprocessing.Pool(processes=processes, initializer=worker_init)
    try:
        result = pool.map(func, items, chunk_size)
        pool.close()
    except Exception:
        log.exception("Parallel map failed")
        pool.terminate()
        raise
    finally:
        pool.join()
    return result
