"""Hyperbolic trigonometry primitives.

Point evaluation works on binary64 floats; each relation also has an
interval form built on :mod:`schottky_gauge.interval` for the rigorous
certification engine.  Domain failures raise :class:`DomainError` instead
of clamping: an arccosh argument below 1 means the polygon in question
does not exist.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .interval import Interval

# Above this threshold cosh/sinh are computed as exp(x)/2 in a single libm
# call; the dropped exp(-x)/2 term is below 2^-86 relative for x > 30, far
# under one ulp of binary64.  Tested against an mpmath oracle.
LOG_SPACE_THRESHOLD = 30.0


def cosh(x: float) -> float:
    if abs(x) > LOG_SPACE_THRESHOLD:
        return 0.5 * math.exp(abs(x))
    return math.cosh(x)


def sinh(x: float) -> float:
    if abs(x) > LOG_SPACE_THRESHOLD:
        return math.copysign(0.5 * math.exp(abs(x)), x)
    return math.sinh(x)


def acosh_safe(x: float) -> float:
    """arccosh with an explicit domain guard."""
    if x < 1.0:
        raise DomainError(f"acosh argument {x} < 1")
    return math.acosh(x)


def right_triangle_hyp(a: float, b: float) -> float:
    """Hypotenuse of a right-angled hyperbolic triangle with legs a, b.

    cosh(c) = cosh(a) cosh(b).
    """
    if a < 0 or b < 0:
        raise DomainError("triangle legs must be nonnegative")
    if a + b <= LOG_SPACE_THRESHOLD:
        return math.acosh(math.cosh(a) * math.cosh(b))
    # acosh(C) = log(2C) - O(1/C^2); the correction is below one ulp here
    return _logcosh(a) + _logcosh(b) + math.log(2.0)


def _logcosh(x: float) -> float:
    x = abs(x)
    if x > LOG_SPACE_THRESHOLD:
        return x - math.log(2.0)
    return math.log(math.cosh(x))


def right_triangle_angle(opposite_w: float, hyp: float) -> float:
    """Angle opposite the side of length ``opposite_w``.

    sin(theta) = sinh(opposite_w) / sinh(hyp); requires opposite_w <= hyp.
    """
    if opposite_w <= 0 or hyp <= 0:
        raise DomainError("triangle sides must be positive")
    if opposite_w > hyp:
        raise DomainError("opposite side exceeds hypotenuse")
    r = sinh(opposite_w) / sinh(hyp)
    if r > 1.0:
        r = 1.0
    return math.asin(r)


def pentagon_opposite(a: float, b: float) -> float:
    """Side opposite in a right-angled pentagon: cosh(c) = sinh(a) sinh(b)."""
    if a <= 0 or b <= 0:
        raise DomainError("pentagon sides must be positive")
    s = sinh(a) * sinh(b)
    if s < 1.0:
        raise DomainError(f"sinh({a})*sinh({b}) = {s} < 1: no such pentagon")
    return math.acosh(s)


def hexagon_opposite(a: float, connector: float, b: float) -> float:
    """Side opposite the connector in a right-angled hexagon.

    cosh(c) = sinh(a) sinh(b) cosh(connector) - cosh(a) cosh(b).
    """
    if a <= 0 or b <= 0:
        raise DomainError("hexagon sides must be positive")
    if connector < 0:
        raise DomainError("connector must be nonnegative")
    rhs = sinh(a) * sinh(b) * cosh(connector) - cosh(a) * cosh(b)
    if rhs < 1.0:
        raise DomainError(f"hexagon degenerates: rhs = {rhs} < 1")
    return math.acosh(rhs)


# ----------------------------------------------------------------------
# Interval forms.  Same relations, enclosure semantics.
# ----------------------------------------------------------------------

def right_triangle_hyp_iv(a: Interval, b: Interval) -> Interval:
    return (a.cosh() * b.cosh()).acosh()

def right_triangle_angle_iv(opposite_w: Interval, hyp: Interval) -> Interval:
    return (opposite_w.sinh() / hyp.sinh()).min_with(1.0).asin()

def pentagon_opposite_iv(a: Interval, b: Interval) -> Interval:
    return (a.sinh() * b.sinh()).acosh()

def hexagon_opposite_iv(a: Interval, connector: Interval, b: Interval) -> Interval:
    rhs = a.sinh() * b.sinh() * connector.cosh() - a.cosh() * b.cosh()
    return rhs.acosh()
