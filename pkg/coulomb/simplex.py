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
Exact linear programs min c.x subject to A x <= b, x >= 0.

Solutions come from sympy's simplex and are accepted only with a duality
certificate: a primal point and a point of the dual min b.w subject to
-A^T w <= c, w >= 0, both checked exactly, with c.x = -b.w. When the matrix
interface of sympy yields no certificate the relational one is tried.
"""

import logging
from fractions import Fraction

import sympy
from sympy.solvers.simplex import InfeasibleLPError
from sympy.solvers.simplex import linprog
from sympy.solvers.simplex import lpmin
from sympy.solvers.simplex import UnboundedLPError

from coulomb.error import UnverifiedSolution
from coulomb.quiver import to_fraction

log = logging.getLogger(__name__)

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'
FAILED = 'failed'


def _rational(x):
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def _dot(a, b):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def _transpose(A, ncols):
    return [[A[r][k] for r in range(len(A))] for k in range(ncols)]


def is_feasible(A, b, x):
    """x >= 0 and A x <= b, exactly"""
    return all(v >= 0 for v in x) and all(_dot(row, x) <= bound for row, bound in zip(A, b))


def _by_matrix(c, A, b):
    value, x = linprog(sympy.Matrix([[_rational(v) for v in c]]),
                       sympy.Matrix([[_rational(v) for v in row] for row in A]),
                       sympy.Matrix([_rational(v) for v in b]))
    return to_fraction(value), [Fraction(to_fraction(v)) for v in x]


def _by_relations(c, A, b):
    x = sympy.symbols('x0:{0}'.format(len(c)))
    constraints = [sum(_rational(a) * xi for a, xi in zip(row, x)) <= _rational(bound) for row, bound in zip(A, b)]
    constraints += [xi >= 0 for xi in x]
    value, argmin = lpmin(sum(_rational(v) * xi for v, xi in zip(c, x)), constraints)
    return to_fraction(value), [Fraction(to_fraction(argmin.get(xi, 0))) for xi in x]


def _attempt(solve, c, A, b):
    """(status, value, x) of one solver interface, unchecked points are FAILED"""
    try:
        value, x = solve(c, A, b)
    except InfeasibleLPError:
        return INFEASIBLE, None, None
    except UnboundedLPError:
        return UNBOUNDED, None, None
    except Exception as e:
        log.debug("{0} failed: {1}".format(solve.__name__, repr(e)))
        return FAILED, None, None
    if len(x) != len(c) or not is_feasible(A, b, x) or _dot(c, x) != value:
        log.warning("{0} returned a point violating its constraints: {1}".format(solve.__name__, x))
        return FAILED, None, None
    return OPTIMAL, value, x


def minimize(c, A, b):
    """
    Certified min c.x over A x <= b, x >= 0 (all entries rational).
    Returns (value, x), or None when the program is infeasible.
    The program should be bounded below.
    """
    c = [Fraction(v) for v in c]
    b = [Fraction(v) for v in b]
    A = [[Fraction(v) for v in row] for row in A]
    # zero rows constrain nothing but their sign
    if any(not any(row) and bound < 0 for row, bound in zip(A, b)):
        return None
    kept = [(row, bound) for row, bound in zip(A, b) if any(row)]
    A = [row for row, _ in kept]
    b = [bound for _, bound in kept]
    if not c:
        return Fraction(0), []
    if not A:
        if any(v < 0 for v in c):
            raise UnverifiedSolution("Program is unbounded below: {0}".format(c))
        return Fraction(0), [Fraction(0)] * len(c)

    minus_At = [[-v for v in row] for row in _transpose(A, len(c))]
    primal = []
    dual = []
    for solve in (_by_matrix, _by_relations):
        primal.append(_attempt(solve, c, A, b))
        dual.append(_attempt(solve, b, minus_At, c))
        for p_status, p_value, x in primal:
            if p_status == OPTIMAL:
                for d_status, d_value, _ in dual:
                    if d_status == OPTIMAL and p_value == -d_value:
                        return p_value, x
            elif p_status == INFEASIBLE:
                # weak duality: an unbounded dual rules out primal points
                if any(d_status == UNBOUNDED for d_status, _, _ in dual):
                    return None
    raise UnverifiedSolution("No duality certificate for min {0}.x, A: {1}, b: {2}".format(c, A, b))
