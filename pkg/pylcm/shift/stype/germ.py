"""!
\file germ.py Germs [s, x] of the action of S_{X*} on the full shift
"""
from typing import NamedTuple

from pylcm.isg.isgtype.triple import Triple
from pylcm.shift.stype.bipoint import BiPoint


class Germ(NamedTuple):
    """!
    \brief a triple s = [α, β, γ] together with a point in the domain of
    θ_s, the cylinder of points with x starting with the reverse of γ and y
    starting with γ₁, where β = γγ₁
    """

    s: Triple
    point: BiPoint

    def __str__(self) -> str:
        return "[" + str(self.s) + ", " + str(self.point) + "]"
