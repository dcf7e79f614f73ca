"""Published constants that the computations are checked against.

Polynomials in d are stored low degree first.  Chern forms are the
coefficients (x, y, z) of x c1^3 + y c1c2 + z c3.
"""

from __future__ import annotations

from fractions import Fraction as F
from math import factorial


def _scale(coeffs, factor):
    return tuple(F(c) * factor for c in coeffs)


# leading coefficient in m, as a polynomial in d
LEADING_POLY = {
    ("ds", 1, "hypersurface-p4"): (_scale((0, -35, 15), F(1, 120)), "5d(3d-7)/120"),
    ("ds", 2, "hypersurface-p4"): (_scale((0, -919 * 5, 452 * 5, -37 * 5), F(1, 1837080)), "-5d(37d^2-452d+919)/1837080"),
    ("ds", 3, "hypersurface-p4"): (
        _scale((0, -358873, 185559, -20739, 389), F(1, 81648 * 10**6)),
        "d(389d^3-20739d^2+185559d-358873)/(81648*10^6)",
    ),
    ("gg", 2, "hypersurface-p4"): (
        _scale((0, 51, -25, 2), F(-15, 8**3 * factorial(7))),
        "-15d(51-25d+2d^2)/(8^3*7!)",
    ),
    ("gg", 3, "hypersurface-p4"): (
        _scale((0, -34885, 17985, -1980, 36), F(1, 6**3 * factorial(11) * 216)),
        "d(36d^3-1980d^2+17985d-34885)/(6^3*11!*216)",
    ),
    ("ds", 1, "log-p3"): (_scale((-20, 10), F(1, 120)), "(10d-20)/120"),
    ("ds", 2, "log-p3"): ((F(-1, 129), F(247, 306180), F(-37, 459270)), "-37/459270 d^2+247/306180 d-1/129"),
    ("ds", 3, "log-p3"): (
        (F(-1513, 63787500), F(6299, 4252500000), F(-6913, 34020000000), F(389, 81648000000)),
        "389/81648000000 d^3-6913/34020000000 d^2+6299/4252500000 d-1513/63787500",
    ),
}

CHERN_FORM = {
    ("ds", 1): ((F(-1, 120), F(2, 120), F(-1, 120)), "(-c1^3+2c1c2-c3)/120"),
    ("ds", 2): ((F(-89, 1837080), F(141, 1837080), F(-52, 1837080)), "-(89c1^3-141c1c2+52c3)/1837080"),
    ("ds", 3): (
        (F(-29233, 408240000000), F(551, 5670000000), F(-43, 1417500000)),
        "-(43/1417500000 c3+29233/408240000000 c1^3-551/5670000000 c1c2)",
    ),
    ("gg", 2): (
        _scale((F(-15, 8), 3, F(-9, 8)), F(1, 2**3 * factorial(8))),
        "(-15/8 c1^3+3c1c2-9/8 c3)/(2^3*8!)",
    ),
    ("gg", 3): (
        _scale((F(575, 216), F(-395, 108), F(251, 216)), F(-1, 6**3 * factorial(11))),
        "-(575/216 c1^3-395/108 c1c2+251/216 c3)/(6^3*11!)",
    ),
}

THRESHOLDS = {
    ("ds", 3, "hypersurface-p4"): (43, "d>=43"),
    ("gg", 3, "hypersurface-p4"): (45, "d>=45"),
    ("ds", 3, "log-p3"): (34, "d>=34"),
}
