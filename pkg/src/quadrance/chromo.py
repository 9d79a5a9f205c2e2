"""The blue, red, and green metrical structures and their interactions.

The three distinguished forms are blue (1:0:1), red (1:0:-1), and green
(0:1:0).  Each color has its own perpendicular map and its own p-quadrance,
computed here from the per-color closed formulas; agreement with the
general-form projective quadrance is checked by the verification suites.
"""

from __future__ import annotations

import enum

from .errors import CoincidentPoints, NullPoint
from .field import exact_div
from .projective import Form, ProjPoint


class Color(enum.Enum):
    BLUE = "blue"
    RED = "red"
    GREEN = "green"

    def __str__(self):
        return self.value


_FORMS = {
    Color.BLUE: Form(1, 0, 1),
    Color.RED: Form(1, 0, -1),
    Color.GREEN: Form(0, 1, 0),
}


def colored_form(color: Color) -> Form:
    """The fixed form attached to a color."""
    return _FORMS[color]


def perpendicular_point(color: Color, a: ProjPoint) -> ProjPoint:
    """The color's perpendicular of [x:y]: blue [-y:x], red [y:x], green [x:-y]."""
    if color is Color.BLUE:
        return ProjPoint(-a.y, a.x)
    if color is Color.RED:
        return ProjPoint(a.y, a.x)
    return ProjPoint(a.x, -a.y)


def _null_value(color: Color, a: ProjPoint):
    if color is Color.BLUE:
        return a.x * a.x + a.y * a.y
    if color is Color.RED:
        return a.x * a.x - a.y * a.y
    return a.x * a.y


def is_null_for(color: Color, a: ProjPoint) -> bool:
    """Whether the point is null for the color's form."""
    return _null_value(color, a) == 0


def colored_quadrance(color: Color, a1: ProjPoint, a2: ProjPoint):
    """The color's p-quadrance, via its closed formula.

    Blue is cross^2 / ((x1^2+y1^2)(x2^2+y2^2)); red is the same with minus
    signs throughout; green is -cross^2 / (4 x1 y1 x2 y2).
    """
    v1 = _null_value(color, a1)
    if v1 == 0:
        raise NullPoint(f"first point {a1} is {color}-null", argument="a1")
    v2 = _null_value(color, a2)
    if v2 == 0:
        raise NullPoint(f"second point {a2} is {color}-null", argument="a2")
    cross = a1.x * a2.y - a2.x * a1.y
    if color is Color.BLUE:
        return exact_div(cross * cross, v1 * v2)
    if color is Color.RED:
        return exact_div(-(cross * cross), v1 * v2)
    return exact_div(-(cross * cross), 4 * v1 * v2)


def reciprocal_sum(a1: ProjPoint, a2: ProjPoint):
    """1/q_blue + 1/q_red + 1/q_green; always 2 for valid pairs.

    Needs distinct points that are non-null in all three colors.
    """
    if a1 == a2:
        raise CoincidentPoints("coincident points have quadrance zero in every color")
    total = None
    for color in Color:
        q = colored_quadrance(color, a1, a2)
        term = exact_div(1, q)
        total = term if total is None else total + term
    return total
