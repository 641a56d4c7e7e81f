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
Batch front end of the monopole formula engine.

Commands: hilbert, slice, affine-slice, zastava (write a series file and a
JSON envelope), properness, orbit-rep, fold, leaf-interval (write a JSON
document) and diff A B (compares two series files).

Exit status: 0 on success, 1 on input/format errors, 2 on domain errors,
3 when diff finds a difference.
"""

import json
import logging
import logging.handlers
import sys
from datetime import datetime
from optparse import OptionParser

import coulomb
from coulomb.config import Config
from coulomb.error import DomainError
from coulomb.error import InputError
from coulomb.log import convert_log_level
from coulomb.log import formatter
from coulomb.series import ALLOWED_UNITS
from coulomb.series import UNITS_HALF
from coulomb_batch import jobs
from coulomb_batch.cache import ResultCache
from coulomb_batch.ctx import JobSpec
from coulomb_batch.stat import Stats
from coulomb_batch.utils.misc import content_hash

log = logging.getLogger()
log.setLevel(logging.DEBUG)

ch = logging.StreamHandler(sys.stderr)
ch.setFormatter(formatter)
ch.setLevel(logging.WARNING)
log.addHandler(ch)

STAT_NONE = 'none'
STAT_TEXT = 'text'
STAT_JSON = 'json'
ALLOWED_STAT_FORMATS = (STAT_NONE, STAT_TEXT, STAT_JSON)

ENVELOPE_FORMAT = 'coulomb-envelope/1'

RC_INPUT_ERROR = 1
RC_DOMAIN_ERROR = 2

# option dest -> key of JobSpec.options
JOB_OPTIONS = ('lambda', 'mu', 'alpha', 'grading', 'sigma', 'energy_bound', 'instantons', 'refined')


def dump_json(document):
    return json.dumps(document, sort_keys=True, indent=4, separators=(',', ': '), ensure_ascii=True) + '\n'


def mk_envelope(job, result):
    stats = job.stats.dump_to_dict(timers=False) if job.stats is not None else None
    return {'format': ENVELOPE_FORMAT,
            'version': coulomb.__version__,
            'command': job.command,
            'input': job.canonical(),
            'units': job.units,
            'order': job.order,
            'result': result.document,
            'stats': stats}


def write_text(path, text):
    with open(path, 'w', encoding='ascii', newline='\n') as f:
        f.write(text)


def write_outputs(job, series_text, envelope):
    envelope_text = dump_json(envelope)
    if job.output is None:
        sys.stdout.write(series_text if series_text is not None else envelope_text)
        return
    if series_text is not None:
        write_text(job.output, series_text)
        write_text(job.output + '.json', envelope_text)
        log.info("Wrote series to {0} and envelope to {0}.json".format(job.output))
    else:
        write_text(job.output, envelope_text)
        log.info("Wrote document to {0}".format(job.output))


def execute(job):
    """Runs @job through the cache; returns (series text or None, envelope, rc)"""
    cache = None
    if job.cache_dir and job.command in jobs.SERIES_COMMANDS:
        cache = ResultCache(job.cache_dir)
        digest = content_hash(job, [job.inputs[k] for k in sorted(job.inputs)])
        entry = cache.get(digest)
        if entry is not None:
            job.stats.counter.cache_hits += 1
            return entry['series'], json.loads(entry['envelope']), jobs.RC_OK

    result = jobs.main(job)
    series_text = result.series.dump(job.units) if result.series is not None else None
    envelope = mk_envelope(job, result)
    if cache is not None:
        cache.put(digest, {'series': series_text, 'envelope': dump_json(envelope)})
    return series_text, envelope, result.rc


def main(options, args):
    if not args:
        raise ValueError("Please specify one of following commands: {0}".format(jobs.ALLOWED_COMMANDS))
    command = args[0].lower()
    if command not in jobs.ALLOWED_COMMANDS:
        raise ValueError("Unknown command: '{0}', allowed: {1}".format(args[0], jobs.ALLOWED_COMMANDS))
    expected = 3 if command == jobs.CMD_DIFF else 1
    if len(args) != expected:
        raise ValueError("Command '{0}' expects {1} arguments, got: {2}".format(command, expected - 1, len(args) - 1))

    if options.log:
        try:
            level = convert_log_level(options.log_level)
        except Exception as e:
            raise ValueError("Can't parse log_level: '{0}': {1}".format(options.log_level, repr(e)))
        fh = logging.handlers.WatchedFileHandler(options.log)
        fh.setFormatter(formatter)
        fh.setLevel(level)
        log.addHandler(fh)
    if options.debug:
        ch.setLevel(logging.DEBUG)

    if command == jobs.CMD_DIFF:
        inputs = {'a': args[1], 'b': args[2]}
    else:
        inputs = {name: path for name, path in (('quiver', options.quiver),
                                                ('theory', options.theory),
                                                ('slice', options.input)) if path}

    try:
        order = int(options.order)
        if order < 0:
            raise ValueError("Order should be nonnegative: {0}".format(order))
    except Exception as e:
        raise ValueError("Can't parse order: '{0}': {1}".format(options.order, repr(e)))

    if options.units not in ALLOWED_UNITS:
        raise ValueError("Unknown units: '{0}', allowed: {1}".format(options.units, ALLOWED_UNITS))

    try:
        radius = int(options.radius) if options.radius is not None else None
        if radius is not None and radius < 0:
            raise ValueError("Radius should be nonnegative: {0}".format(radius))
    except Exception as e:
        raise ValueError("Can't parse radius: '{0}': {1}".format(options.radius, repr(e)))

    try:
        nprocess = int(options.nprocess) if options.nprocess is not None else None
        if nprocess is not None and nprocess <= 0:
            raise ValueError("Number of processes should be positive: {0}".format(nprocess))
    except Exception as e:
        raise ValueError("Can't parse nprocess: '{0}': {1}".format(options.nprocess, repr(e)))

    if options.stat not in ALLOWED_STAT_FORMATS:
        raise ValueError("Unknown statistics output format: '{0}'. Available formats are: {1}"
                         .format(options.stat, ALLOWED_STAT_FORMATS))

    config = Config.from_env(**({'nprocess': nprocess} if nprocess else {}))
    job_options = {name: getattr(options, name) for name in JOB_OPTIONS if getattr(options, name) is not None}
    job = JobSpec(command, inputs, order, options.units, radius,
                  nprocess=nprocess, output=options.output, options=job_options,
                  cache_dir=options.cache_dir, stat_format=options.stat)
    job.config = config
    job.processes = config.processes
    job.stats = Stats(command)
    log.debug("Using following job:\n%s", job)
    log.info("Using {0} processes".format(job.processes))

    start = datetime.now()
    series_text, envelope, rc = execute(job)
    envelope['wall_time'] = '{0:.3f}'.format((datetime.now() - start).total_seconds())
    write_outputs(job, series_text, envelope)

    if options.stat == STAT_TEXT:
        sys.stderr.write(str(job.stats) + '\n')
    elif options.stat == STAT_JSON:
        sys.stderr.write(job.stats.json() + '\n')
    log.info("Finished with rc: %s", rc)
    return rc


def run(args=None):
    parser = OptionParser()
    parser.usage = "%prog [options] COMMAND [A B]"
    parser.description = __doc__
    parser.add_option("-q", "--quiver", action="store", dest="quiver", default=None, metavar="FILE",
                      help="Quiver JSON document")
    parser.add_option("-T", "--theory", action="store", dest="theory", default=None, metavar="FILE",
                      help="Framed theory JSON document")
    parser.add_option("-I", "--input", action="store", dest="input", default=None, metavar="FILE",
                      help="Slice JSON document")
    parser.add_option("--lambda", action="store", dest="lambda", default=None,
                      help="Highest weight, e.g. `2w`, `w1+w2`, `a1` or affine `1;0;0`")
    parser.add_option("--mu", action="store", dest="mu", default=None,
                      help="Lower weight, same syntax as --lambda")
    parser.add_option("--alpha", action="store", dest="alpha", default=None,
                      help="Comma separated dimension vector of the zastava or grading")
    parser.add_option("--grading", action="store", dest="grading", default=None,
                      help="Grading for properness: homological/loop/character [default: by command]")
    parser.add_option("--sigma", action="store", dest="sigma", default=None,
                      help="Comma separated images of the vertices under a quiver automorphism")
    parser.add_option("--energy-bound", action="store", dest="energy_bound", default=None,
                      help="Bound on the affine vertex coefficient for affine leaf intervals")
    parser.add_option("--instantons", action="store", dest="instantons", default=None,
                      help="Instanton number d: mu = lambda - d delta for affine slices")
    parser.add_option("--refined", action="store_true", dest="refined", default=None,
                      help="Grade slice series by z^theta_bar as well [default: off]")
    parser.add_option("-O", "--order", action="store", dest="order", default="10",
                      help="Truncation order in t [default: %default]")
    parser.add_option("-u", "--units", action="store", dest="units", default=UNITS_HALF,
                      help="Printed exponent units: {0} [default: %default]".format("/".join(ALLOWED_UNITS)))
    parser.add_option("-R", "--radius", action="store", dest="radius", default=None,
                      help="Explicit l-infinity enumeration radius, skips the properness check")
    parser.add_option("-n", "--nprocess", action="store", dest="nprocess", default=None,
                      help="Number of subprocesses [default: $COULOMB_NPROCESS or number of CPUs]")
    parser.add_option("-o", "--output", action="store", dest="output", default=None, metavar="FILE",
                      help="Output file, the envelope goes to FILE.json [default: stdout]")
    parser.add_option("--cache-dir", action="store", dest="cache_dir", default=None, metavar="DIR",
                      help="Directory of cached results [default: no cache]")
    parser.add_option("-s", "--stat", action="store", dest="stat", default=STAT_NONE,
                      help="Statistics output format: {0} [default: %default]".format("/".join(ALLOWED_STAT_FORMATS)))
    parser.add_option("-l", "--log", dest="log", default=None, metavar="FILE",
                      help="Output log messages to file [default: %default]")
    parser.add_option("-L", "--log-level", action="store", dest="log_level", default="info",
                      help="File log verbosity: 0..4 or debug/info/notice/warning/error [default: %default]")
    parser.add_option("-d", "--debug", action="store_true", dest="debug", default=False,
                      help="Enable debug output [default: %default]")

    options, args = parser.parse_args(args)
    try:
        return main(options, args)
    except DomainError as e:
        log.error("{0}: {1}".format(type(e).__name__, e.message))
        sys.stdout.write(json.dumps(e.dump_to_dict(), sort_keys=True, ensure_ascii=True) + '\n')
        return RC_DOMAIN_ERROR
    except (InputError, ValueError, OSError) as e:
        log.error("{0}: {1}".format(type(e).__name__, e))
        return RC_INPUT_ERROR
