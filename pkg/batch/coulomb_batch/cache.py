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
On-disk cache of finished jobs keyed by content hash
"""

import logging
import os
import tempfile

from coulomb_batch.utils.misc import dump_entry
from coulomb_batch.utils.misc import load_entry
from coulomb_batch.utils.misc import mk_cache_name

log = logging.getLogger(__name__)


class ResultCache(object):
    def __init__(self, cache_dir):
        self.cache_dir = os.path.abspath(cache_dir)
        if not os.path.isdir(self.cache_dir):
            log.info("Creating cache dir: {0}".format(self.cache_dir))
            os.makedirs(self.cache_dir)

    def path(self, digest):
        return os.path.join(self.cache_dir, mk_cache_name(digest))

    def get(self, digest):
        path = self.path(digest)
        if not os.path.exists(path):
            log.debug("Cache miss: {0}".format(digest))
            return None
        try:
            entry = load_entry(path)
        except Exception as e:
            log.warning("Dropping broken cache entry {0}: {1}".format(path, repr(e)))
            return None
        log.debug("Cache hit: {0}".format(digest))
        return entry

    def put(self, digest, entry):
        # written aside and renamed so readers never see a partial entry
        fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix='.tmp_')
        try:
            with os.fdopen(fd, 'wb') as f:
                dump_entry(entry, f)
            os.replace(tmp, self.path(digest))
        except Exception:
            log.exception("Failed to store cache entry {0}".format(digest))
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
