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
Errors raised by coulomb.

DomainError subclasses signal mathematical-domain failures (the batch tool exits
with status 2 on them), InputError subclasses signal malformed documents and
I/O problems (status 1).
"""


class Error(Exception):
    kind = 'error'

    def __init__(self, message=''):
        super(Error, self).__init__(message)
        self.message = message

    def dump_to_dict(self):
        return {'error': type(self).__name__,
                'kind': self.kind,
                'message': self.message}


class DomainError(Error):
    kind = 'domain'


class InputError(Error):
    kind = 'input'


class FormatError(InputError):
    pass


class SchemaError(InputError):
    pass


# quiver-core
class EdgeLoop(DomainError):
    pass


class NotAutomorphism(DomainError):
    pass


class ArrowInsideOrbit(DomainError):
    pass


class NonInvertibleCartan(DomainError):
    pass


class NoHighestRoot(DomainError):
    pass


class NonpositiveLevel(DomainError):
    pass


class NotFiniteType(DomainError):
    pass


class LevelMismatch(DomainError):
    pass


class NonIntegerResult(DomainError):
    pass


# gauge-rep
class ShapeMismatch(DomainError):
    pass


class NotDominant(DomainError):
    pass


class MissingAlpha(DomainError):
    pass


# enumeration
class NotProper(DomainError):
    pass


class Overflow(DomainError):
    pass


class UnverifiedSolution(DomainError):
    pass


# series
class VariableMismatch(DomainError):
    pass


class NonpositiveDegree(DomainError):
    pass


class InsufficientOrder(DomainError):
    pass


# engine
class NonComparable(DomainError):
    pass


class NotAffineDominant(DomainError):
    pass


class NegativeAlpha(DomainError):
    pass


class MissingEnergyBound(DomainError):
    pass
