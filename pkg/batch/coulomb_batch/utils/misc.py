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
Misc. routines
"""

import hashlib
import logging

import msgpack

log = logging.getLogger(__name__)

# bump when the layout of cache entries changes
CACHE_FORMAT = 1


def content_hash(job, paths=()):
    """
    SHA-256 of the canonical job description followed by the bytes of
    every input file, in the order of @paths
    """
    digest = hashlib.sha256(job.canonical_json().encode('ascii'))
    for path in paths:
        digest.update(b'\0')
        with open(path, 'rb') as f:
            for chunk in iter(lambda: f.read(1 << 16), b''):
                digest.update(chunk)
    return digest.hexdigest()


def mk_cache_name(digest, prefix="result_"):
    """
    Makes filename for cached results
    """
    return "{0}{1}.msgpack".format(prefix, digest)


def dump_entry(entry, file):
    """Packs cache @entry: dict with 'series' text and 'envelope' JSON text"""
    msgpack.pack((CACHE_FORMAT, entry['series'], entry['envelope']), file, use_bin_type=True)


def load_entry_from_file(entry_file):
    unpacker = msgpack.Unpacker(entry_file, raw=False)
    for data in unpacker:
        if data[0] != CACHE_FORMAT:
            log.warning("Skipping cache entry of format {0}".format(data[0]))
            continue
        return {'series': data[1], 'envelope': data[2]}
    return None


def load_entry(filepath):
    with open(filepath, 'rb') as input_file:
        return load_entry_from_file(input_file)
